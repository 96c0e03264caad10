// Command-line front end: builds an ExperimentConfig from flags (or a config
// file) and hands it to the experiment runner. Exit code 0 iff every
// assertion in the resulting record passes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symsep/experiment.hpp"
#include "symsep/json_io.hpp"
#include "symsep/tsirelson.hpp"

using nlohmann::json;

namespace {

json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return json::parse(in);
}

struct GlobalOptions {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out;
    bool jsonOutput = false;
};

int finish(const symsep::RunRecord& record, const GlobalOptions& global) {
    if (global.jsonOutput) {
        std::cout << record.toJson().dump(2) << "\n";
    } else {
        for (const auto& a : record.assertions) {
            std::cout << (a.pass ? "PASS" : "FAIL") << "  " << a.name << "  value=" << a.value
                      << "  tolerance=" << a.tolerance << "\n";
        }
    }
    return record.allPass() ? 0 : 1;
}

int runTask(symsep::ExperimentConfig config, const GlobalOptions& global) {
    config.seed = global.seed;
    config.jobs = global.jobs;
    config.output = global.out;
    return finish(symsep::run(config), global);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric separation toolkit"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "random seed");
    app.add_option("--jobs", global.jobs, "restart-level parallelism");
    app.add_option("--out", global.out, "output directory for records/tables/plots");
    app.add_flag("--json", global.jsonOutput, "print the full run record as JSON");

    std::string normSpec, vectorFile, pointsFile, configFile, recordPath, which;
    double threshold = 0.0, eps = 0.25;
    int length = 0, dim = 0, nPoints = 0, steps = 0, pairs = 5, trials = 10000;
    bool certificate = false;

    // norm eval
    auto* normCmd = app.add_subcommand("norm", "norm operations");
    auto* normEval = normCmd->add_subcommand("eval", "evaluate a norm on a vector");
    normEval->add_option("--norm", normSpec, "norm spec, e.g. lp:2, sup, tsirelson")->required();
    normEval->add_option("--vector", vectorFile, "JSON vector file")->required();

    // separation check
    auto* sepCmd = app.add_subcommand("separation", "separation certificates");
    auto* sepCheck = sepCmd->add_subcommand("check", "pairwise symmetric separation of a family");
    sepCheck->add_option("--points", pointsFile, "JSON array of vectors")->required();
    sepCheck->add_option("--norm", normSpec, "norm spec")->required();

    // search chain | kottman | xbox
    auto* searchCmd = app.add_subcommand("search", "optimisation-based constructions");
    auto* chainCmd = searchCmd->add_subcommand("chain", "greedy separated block chain");
    chainCmd->add_option("--norm", normSpec)->required();
    chainCmd->add_option("--threshold", threshold)->required();
    chainCmd->add_option("--length", length)->required();
    auto* kottmanCmd = searchCmd->add_subcommand("kottman", "empirical separation constant");
    kottmanCmd->add_option("--norm", normSpec)->required();
    kottmanCmd->add_option("--dim", dim)->required();
    kottmanCmd->add_option("--points", nPoints)->required();
    auto* xboxCmd = searchCmd->add_subcommand("xbox", "kernel-constrained chain construction");
    xboxCmd->add_option("--norm", normSpec)->required();
    xboxCmd->add_option("--dim", dim)->required();
    xboxCmd->add_option("--steps", steps)->required();

    // tsirelson eval
    auto* tsirelsonCmd = app.add_subcommand("tsirelson", "Tsirelson norm");
    auto* tsirelsonEval = tsirelsonCmd->add_subcommand("eval", "evaluate the norm on a vector");
    tsirelsonEval->add_option("--vector", vectorFile)->required();
    tsirelsonEval->add_flag("--certificate", certificate, "also print the attaining partition");

    // renorm demo
    auto* renormCmd = app.add_subcommand("renorm", "renorming demonstrations");
    auto* renormDemo = renormCmd->add_subcommand("demo", "run a renorming demonstration");
    renormDemo->add_option("--which", which, "auerbach or phi")->required();
    renormDemo->add_option("--pairs", pairs, "number of canonical pairs");
    renormDemo->add_option("--eps", eps, "phi parameter");
    renormDemo->add_option("--norm", normSpec, "base norm spec (default lp:2)");

    // lemmas run
    auto* lemmasCmd = app.add_subcommand("lemmas", "randomised inequality validators");
    auto* lemmasRun = lemmasCmd->add_subcommand("run", "run the validator suite");
    lemmasRun->add_option("--trials", trials, "number of trials");

    // report render
    auto* reportCmd = app.add_subcommand("report", "rendering of stored records");
    auto* reportRender = reportCmd->add_subcommand("render", "re-render tables/plots from a record");
    reportRender->add_option("--record", recordPath, "record.json from a previous run")->required();

    // run from a config file
    auto* runCmd = app.add_subcommand("run", "run an experiment config file");
    runCmd->add_option("--config", configFile, "ExperimentConfig JSON file")->required();

    // let --seed/--jobs/--out/--json appear after the subcommand too
    for (auto* cmd : app.get_subcommands({})) {
        cmd->fallthrough();
        for (auto* sub : cmd->get_subcommands({})) sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (normEval->parsed()) {
            const auto d = symsep::parseNormSpec(normSpec);
            const auto x = symsep::coordVectorFromJson(loadJsonFile(vectorFile));
            const double value = symsep::norm(x, d);
            if (global.jsonOutput)
                std::cout << json{{"norm", symsep::toJson(d)}, {"value", value}}.dump(2) << "\n";
            else
                std::cout << value << "\n";
            return 0;
        }
        if (sepCheck->parsed()) {
            symsep::ExperimentConfig config;
            config.task = "separation-check";
            config.norm = symsep::parseNormSpec(normSpec);
            config.params["points"] = loadJsonFile(pointsFile);
            return runTask(config, global);
        }
        if (chainCmd->parsed()) {
            symsep::ExperimentConfig config;
            config.task = "chain";
            config.norm = symsep::parseNormSpec(normSpec);
            config.params["threshold"] = threshold;
            config.params["length"] = length;
            return runTask(config, global);
        }
        if (kottmanCmd->parsed()) {
            symsep::ExperimentConfig config;
            config.task = "kottman";
            config.norm = symsep::parseNormSpec(normSpec);
            config.params["dim"] = dim;
            config.params["points"] = nPoints;
            return runTask(config, global);
        }
        if (xboxCmd->parsed()) {
            symsep::ExperimentConfig config;
            config.task = "xbox";
            config.norm = symsep::parseNormSpec(normSpec);
            config.params["dim"] = dim;
            config.params["steps"] = steps;
            return runTask(config, global);
        }
        if (tsirelsonEval->parsed()) {
            symsep::ExperimentConfig config;
            config.task = "tsirelson-eval";
            config.params["vector"] = loadJsonFile(vectorFile);
            config.params["certificate"] = certificate;
            const symsep::RunRecord record = symsep::run(config);
            if (!global.jsonOutput) {
                std::cout << record.payload.at("result").at("value").get<double>() << "\n";
                if (certificate)
                    std::cout << record.payload.at("result").at("partition").dump() << "\n";
                return record.allPass() ? 0 : 1;
            }
            return finish(record, global);
        }
        if (renormDemo->parsed()) {
            symsep::ExperimentConfig config;
            config.task = "renorm-demo";
            if (!normSpec.empty()) config.norm = symsep::parseNormSpec(normSpec);
            config.params["which"] = which;
            config.params["pairs"] = pairs;
            if (which == "phi") config.params["eps"] = eps;
            return runTask(config, global);
        }
        if (lemmasRun->parsed()) {
            symsep::ExperimentConfig config;
            config.task = "lemma-suite";
            config.params["trials"] = trials;
            return runTask(config, global);
        }
        if (reportRender->parsed()) {
            const json record = loadJsonFile(recordPath);
            const json& payload = record.at("payload");
            std::cout << "record " << record.at("config_hash").get<std::string>() << " (version "
                      << record.at("version").get<std::string>() << ")\n";
            for (const auto& a : record.at("assertions")) {
                std::cout << (a.at("pass").get<bool>() ? "PASS" : "FAIL") << "  "
                          << a.at("name").get<std::string>() << "  value=" << a.at("value")
                          << "  tolerance=" << a.at("tolerance") << "\n";
            }
            if (!global.out.empty() && payload.contains("blocks")) {
                // regenerate the separation curve for chain payloads
                std::vector<symsep::CoordVector> blocks;
                for (const auto& b : payload.at("blocks"))
                    blocks.push_back(symsep::coordVectorFromJson(b));
                const auto d = symsep::normDescriptorFromJson(payload.at("certificate").at("norm"));
                std::vector<std::pair<double, double>> curve;
                for (std::size_t k = 2; k <= blocks.size(); ++k) {
                    std::vector<symsep::CoordVector> head(blocks.begin(),
                                                          blocks.begin() + static_cast<long>(k));
                    curve.push_back({static_cast<double>(k),
                                     symsep::symmetricSeparation(head, d).value});
                }
                if (curve.size() >= 2) {
                    std::filesystem::create_directories(global.out);
                    symsep::writeSvgPlot(std::filesystem::path(global.out) / "plot.svg",
                                         "separation vs family size", "family size", "separation",
                                         curve);
                }
            }
            return 0;
        }
        if (runCmd->parsed()) {
            auto config = symsep::ExperimentConfig::fromJson(loadJsonFile(configFile));
            if (global.seed != 0) config.seed = global.seed;
            if (global.jobs != 1) config.jobs = global.jobs;
            if (!global.out.empty()) config.output = global.out;
            return finish(symsep::run(config), global);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand action\n";
    return 2;
}
