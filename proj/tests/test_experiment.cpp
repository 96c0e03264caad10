#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "symsep/experiment.hpp"
#include "symsep/json_io.hpp"

using namespace symsep;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("vector JSON round trip and rejection") {
    const CoordVector x{{1, 0.5}, {7, -2.0}};
    CHECK(coordVectorFromJson(toJson(x)) == x);

    CHECK_THROWS_AS(coordVectorFromJson(json{{"0", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(coordVectorFromJson(json{{"-3", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(coordVectorFromJson(json{{"abc", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(coordVectorFromJson(json{{"1x", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(coordVectorFromJson(json{{"1", "one"}}), std::invalid_argument);
    CHECK_THROWS_AS(coordVectorFromJson(json::array()), std::invalid_argument);
}

TEST_CASE("norm descriptor JSON round trip") {
    const BiorthogonalSystem system = BiorthogonalSystem::canonical(3);
    const std::vector<NormDescriptor> kinds{
        NormDescriptor::lp(1.5), NormDescriptor::sup(), NormDescriptor::tsirelson(),
        NormDescriptor::auerbachRenorm(NormDescriptor::lp(2.0), system),
        NormDescriptor::phiRenorm(NormDescriptor::sup(), system, 0.25),
        NormDescriptor::maxOf({NormDescriptor::lp(1.0), NormDescriptor::sup()})};
    for (const auto& d : kinds) {
        const NormDescriptor back = normDescriptorFromJson(toJson(d));
        CHECK(toJson(back) == toJson(d));
        // same values on a probe vector
        const CoordVector probe{{1, 0.3}, {2, -1.1}, {3, 0.7}};
        CHECK(norm(probe, back) == norm(probe, d));
    }
    CHECK_THROWS_AS(normDescriptorFromJson(json{{"kind", "nope"}}), std::invalid_argument);
}

TEST_CASE("norm spec strings") {
    CHECK(parseNormSpec("sup").kind() == NormDescriptor::Kind::Sup);
    CHECK(parseNormSpec("tsirelson").kind() == NormDescriptor::Kind::Tsirelson);
    CHECK(parseNormSpec("lp:1.5").p() == 1.5);
    CHECK_THROWS_AS(parseNormSpec("frobenius"), std::invalid_argument);
    CHECK_THROWS_AS(parseNormSpec("auerbach:/nonexistent.json"), std::invalid_argument);
}

TEST_CASE("experiment config round trips losslessly and fails closed") {
    ExperimentConfig config;
    config.name = "demo";
    config.task = "separation-check";
    config.norm = NormDescriptor::lp(1.0);
    config.params = {{"points", json::array({json{{"1", 1.0}}, json{{"2", 1.0}}})}};
    config.seed = 99;
    config.jobs = 2;

    const ExperimentConfig back = ExperimentConfig::fromJson(config.toJson());
    CHECK(back.toJson() == config.toJson());

    json bad = config.toJson();
    bad["extra"] = true;
    CHECK_THROWS_AS(ExperimentConfig::fromJson(bad), std::invalid_argument);

    json wrongSchema = config.toJson();
    wrongSchema["schema"] = 2;
    CHECK_THROWS_AS(ExperimentConfig::fromJson(wrongSchema), std::invalid_argument);
}

TEST_CASE("config hash is stable and sensitive") {
    ExperimentConfig config;
    config.task = "kottman";
    config.norm = NormDescriptor::lp(2.0);
    config.params = {{"dim", 4}, {"points", 2}};
    const std::string h1 = configHash(config);
    CHECK(h1 == configHash(config));
    config.seed = 1;
    CHECK(configHash(config) != h1);
}

TEST_CASE("separation-check task produces a passing record with files") {
    TempDir dir("symsep-test-sepcheck");
    ExperimentConfig config;
    config.task = "separation-check";
    config.norm = NormDescriptor::lp(1.0);
    json points = json::array();
    for (int i = 1; i <= 3; ++i) points.push_back(toJson(CoordVector::basis(i)));
    config.params = {{"points", points}, {"expect_at_least", 2.0}};
    config.output = dir.path.string();

    const RunRecord record = run(config);
    CHECK(record.allPass());
    CHECK(record.payload.at("report").at("value").get<double>() == 2.0);
    for (const auto& a : record.assertions) CHECK(a.tolerance >= 0.0);

    CHECK(std::filesystem::exists(dir.path / "payload.json"));
    CHECK(std::filesystem::exists(dir.path / "record.json"));
    const std::string csv = slurp(dir.path / "pairs.csv");
    CHECK(csv.find("diff_norm") != std::string::npos);  // header row present
    CHECK(csv.find("tolerance") != std::string::npos);  // header names the tolerance
}

TEST_CASE("renorm demo tasks assert the advertised identities") {
    ExperimentConfig auerbach;
    auerbach.task = "renorm-demo";
    auerbach.params = {{"which", "auerbach"}, {"pairs", 4}};
    CHECK(run(auerbach).allPass());

    ExperimentConfig phiDemo;
    phiDemo.task = "renorm-demo";
    phiDemo.params = {{"which", "phi"}, {"pairs", 4}, {"eps", 0.25}};
    const RunRecord phiRecord = run(phiDemo);
    CHECK(phiRecord.allPass());
    CHECK(phiRecord.payload.at("pair_separation").get<double>() >= 1.25 - 1e-12);

    ExperimentConfig bad;
    bad.task = "renorm-demo";
    bad.params = {{"which", "banach-mazur"}};
    CHECK_THROWS_AS(run(bad), std::invalid_argument);
}

TEST_CASE("chain task emits a curve table and plot") {
    TempDir dir("symsep-test-chain");
    ExperimentConfig config;
    config.task = "chain";
    config.norm = NormDescriptor::lp(1.0);
    config.params = {{"threshold", 1.9}, {"length", 4}};
    config.output = dir.path.string();
    const RunRecord record = run(config);
    CHECK(record.allPass());
    CHECK(std::filesystem::exists(dir.path / "chain.csv"));
    const std::string svg = slurp(dir.path / "plot.svg");
    CHECK(svg.rfind("<svg", 0) == 0);                     // standalone document
    CHECK(svg.find("href") == std::string::npos);         // no external assets
    CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("same seed gives byte-identical payloads") {
    for (const std::string task : {"kottman", "chain"}) {
        TempDir d1("symsep-test-det1-" + task), d2("symsep-test-det2-" + task);
        ExperimentConfig config;
        config.task = task;
        config.norm = NormDescriptor::lp(2.0);
        if (task == "kottman")
            config.params = {{"dim", 5}, {"points", 3}, {"restarts", 3}, {"anneal_steps", 200}};
        else
            config.params = {{"threshold", 1.40}, {"length", 3}};
        config.seed = 7;

        config.output = d1.path.string();
        run(config);
        config.output = d2.path.string();
        run(config);
        CHECK(slurp(d1.path / "payload.json") == slurp(d2.path / "payload.json"));
    }
}

TEST_CASE("unknown task and missing norm are rejected") {
    ExperimentConfig config;
    config.task = "teleport";
    CHECK_THROWS_AS(run(config), std::invalid_argument);

    ExperimentConfig noNorm;
    noNorm.task = "chain";
    noNorm.params = {{"threshold", 1.9}, {"length", 2}};
    CHECK_THROWS_AS(run(noNorm), std::invalid_argument);
}

TEST_CASE("lemma suite records") {
    const RunRecord single = lemmaSuite(1, 42);
    CHECK(single.payload.at("trials").get<int>() == 1);
    CHECK(single.payload.contains("counterexamples"));
    REQUIRE(single.assertions.size() == 1);
    CHECK(single.assertions.front().pass);

    CHECK_THROWS_AS(lemmaSuite(0, 42), std::invalid_argument);

    const RunRecord batch = lemmaSuite(60, 42);
    CHECK(batch.allPass());
    CHECK(batch.payload.at("counterexamples").get<int>() == 0);
}

TEST_CASE("tsirelson-eval task") {
    ExperimentConfig config;
    config.task = "tsirelson-eval";
    config.params = {{"vector", {{"3", 1.0}, {"4", 1.0}, {"5", 1.0}}}, {"certificate", true}};
    const RunRecord record = run(config);
    CHECK(record.payload.at("result").at("value").get<double>() == 1.5);
    CHECK(record.payload.at("result").at("partition").size() == 3);
}
