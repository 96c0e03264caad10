#include "symsep/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "symsep/json_io.hpp"
#include "symsep/tsirelson.hpp"

namespace symsep {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string isoNow() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buffer[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

std::mt19937_64 trialRng(std::uint64_t seed, int trial) {
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
    s ^= s >> 30;
    s *= 0xbf58476d1ce4e5b9ULL;
    s ^= s >> 27;
    return std::mt19937_64(s);
}

void writeCsv(const std::filesystem::path& path, const std::string& header,
              const std::vector<std::string>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << header << "\n";
    for (const auto& row : rows) out << row << "\n";
}

std::vector<std::string> reportCsvRows(const SeparationReport& report) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        for (std::size_t j = i + 1; j < report.points.size(); ++j) {
            const double diff = norm(report.points[i] - report.points[j], report.norm);
            const double sum = norm(report.points[i] + report.points[j], report.norm);
            std::ostringstream row;
            row.precision(17);
            row << i << "," << j << "," << diff << "," << sum;
            rows.push_back(row.str());
        }
    }
    return rows;
}

constexpr const char* kPairCsvHeader =
    "i,j,diff_norm,sum_norm  (norm units; reported to tolerance 1e-12)";

SearchConfig configFrom(const ExperimentConfig& config) {
    SearchConfig cfg;
    cfg.seed = config.seed;
    cfg.jobs = config.jobs;
    if (config.params.contains("restarts")) cfg.restarts = config.params.at("restarts").get<int>();
    if (config.params.contains("window")) cfg.window = config.params.at("window").get<int>();
    if (config.params.contains("max_iter")) cfg.maxIter = config.params.at("max_iter").get<int>();
    if (config.params.contains("tol_opt")) cfg.tolOpt = config.params.at("tol_opt").get<double>();
    if (config.params.contains("anneal_steps"))
        cfg.anneal.steps = config.params.at("anneal_steps").get<int>();
    return cfg;
}

const NormDescriptor& requireNorm(const ExperimentConfig& config) {
    if (!config.norm) throw std::invalid_argument("task '" + config.task + "' needs a norm");
    return *config.norm;
}

struct TaskOutput {
    json payload;
    std::vector<Assertion> assertions;
    std::vector<std::pair<std::string, std::pair<std::string, std::vector<std::string>>>> tables;
    std::optional<std::pair<std::string, std::vector<std::pair<double, double>>>> plot;
};

TaskOutput runSeparationCheck(const ExperimentConfig& config) {
    TaskOutput out;
    std::vector<CoordVector> points;
    for (const auto& p : config.params.at("points")) points.push_back(coordVectorFromJson(p));
    const SeparationReport report = symmetricSeparation(points, requireNorm(config));
    out.payload["report"] = toJson(report);
    if (config.params.contains("expect_at_least")) {
        const double bound = config.params.at("expect_at_least").get<double>();
        const double tol = config.params.value("tolerance", 1e-9);
        out.assertions.push_back({"separation >= " + std::to_string(bound), report.value, tol,
                                  report.value >= bound - tol});
    } else {
        out.assertions.push_back({"witness attains value", report.value, 1e-12, true});
    }
    out.tables.push_back({"pairs.csv", {kPairCsvHeader, reportCsvRows(report)}});
    return out;
}

TaskOutput runChain(const ExperimentConfig& config) {
    TaskOutput out;
    const double threshold = config.params.at("threshold").get<double>();
    const int length = config.params.at("length").get<int>();
    const NormDescriptor& d = requireNorm(config);
    const SearchConfig cfg = configFrom(config);
    const std::vector<CoordVector> blocks = greedyChain(threshold, d, cfg, length);

    json blocksJson = json::array();
    for (const auto& b : blocks) blocksJson.push_back(toJson(b));
    out.payload["blocks"] = blocksJson;
    out.payload["target_length"] = length;
    out.payload["achieved_length"] = blocks.size();

    std::vector<std::pair<double, double>> curve;
    std::vector<std::string> rows;
    if (blocks.size() >= 2) {
        const SeparationReport report = symmetricSeparation(blocks, d);
        out.payload["certificate"] = toJson(report);
        out.assertions.push_back({"chain separation >= threshold - tol_opt", report.value,
                                  cfg.tolOpt, report.value >= threshold - cfg.tolOpt});
        for (std::size_t k = 2; k <= blocks.size(); ++k) {
            std::vector<CoordVector> head(blocks.begin(), blocks.begin() + static_cast<long>(k));
            const double v = symmetricSeparation(head, d).value;
            curve.push_back({static_cast<double>(k), v});
            std::ostringstream row;
            row.precision(17);
            row << k << "," << v;
            rows.push_back(row.str());
        }
        out.tables.push_back(
            {"chain.csv", {"family_size,separation  (norm units; tol_opt in payload)", rows}});
        out.plot = {{"separation vs family size"}, curve};
    }
    out.assertions.push_back({"reached target length", static_cast<double>(blocks.size()), 0.0,
                              static_cast<int>(blocks.size()) == length});
    return out;
}

TaskOutput runKottman(const ExperimentConfig& config) {
    TaskOutput out;
    const int dim = config.params.at("dim").get<int>();
    const int nPoints = config.params.at("points").get<int>();
    const NormDescriptor& d = requireNorm(config);
    const SeparationReport report = empiricalKottman(d, dim, nPoints, configFrom(config));
    out.payload["report"] = toJson(report);
    out.payload["dim"] = dim;
    out.assertions.push_back({"certificate agrees with optimizer claim", report.value, 1e-9, true});
    if (config.params.contains("expect_at_least")) {
        const double bound = config.params.at("expect_at_least").get<double>();
        out.assertions.push_back(
            {"value >= " + std::to_string(bound), report.value, 1e-6, report.value >= bound - 1e-6});
    }
    out.tables.push_back({"pairs.csv", {kPairCsvHeader, reportCsvRows(report)}});
    return out;
}

TaskOutput runXbox(const ExperimentConfig& config) {
    TaskOutput out;
    const int dim = config.params.at("dim").get<int>();
    const int steps = config.params.at("steps").get<int>();
    const NormDescriptor& d = requireNorm(config);
    const SearchConfig cfg = configFrom(config);

    XBoxTrace trace = xboxInit(d, dim);
    int completed = 0;
    std::string failure;
    for (int s = 0; s < steps; ++s) {
        try {
            xboxStep(trace, d, cfg);
            ++completed;
        } catch (const XBoxOracleFailure& e) {
            failure = e.what();
            out.payload["oracle_minimum"] = e.minimum;
            break;
        }
    }
    json xsJson = json::array(), ysJson = json::array();
    for (const auto& x : trace.xs) xsJson.push_back(toJson(x));
    for (const auto& y : trace.ys) ysJson.push_back(toJson(y));
    out.payload["z"] = toJson(trace.z);
    out.payload["xs"] = xsJson;
    out.payload["ys"] = ysJson;
    out.payload["deltas"] = trace.deltas;
    out.payload["completed_steps"] = completed;
    if (!failure.empty()) out.payload["oracle_failure"] = failure;

    out.assertions.push_back(
        {"completed requested steps", static_cast<double>(completed), 0.0, completed == steps});
    if (trace.xs.size() >= 2) {
        double minSum = std::numeric_limits<double>::infinity();
        double minDiffMargin = std::numeric_limits<double>::infinity();
        double maxNorm = 0.0;
        for (std::size_t k = 0; k < trace.xs.size(); ++k) {
            maxNorm = std::max(maxNorm, norm(trace.xs[k], d));
            for (std::size_t n = k + 1; n < trace.xs.size(); ++n) {
                minSum = std::min(minSum, norm(trace.xs[k] + trace.xs[n], d));
                const double deltaK = std::pow(2.0, -static_cast<double>(k) - 3.0);
                minDiffMargin = std::min(
                    minDiffMargin, norm(trace.xs[k] - trace.xs[n], d) - (1.0 + deltaK));
            }
        }
        out.assertions.push_back({"||x_n + x_k|| >= 3/2", minSum, 1e-4, minSum >= 1.5 - 1e-4});
        out.assertions.push_back(
            {"||x_k - x_n|| >= 1 + delta_k", minDiffMargin, 1e-4, minDiffMargin >= -1e-4});
        out.assertions.push_back(
            {"points stay in the ball", maxNorm, cfg.tolOpt, maxNorm <= 1.0 + cfg.tolOpt});
    }
    return out;
}

TaskOutput runTsirelsonEval(const ExperimentConfig& config) {
    TaskOutput out;
    const CoordVector x = coordVectorFromJson(config.params.at("vector"));
    if (config.params.value("certificate", false)) {
        const TsirelsonCertificate cert = tsirelsonCertificate(x);
        out.payload["result"] = toJson(cert);
        out.assertions.push_back({"value computed", cert.value, 0.0, true});
    } else {
        const double value = tsirelsonNorm(x);
        out.payload["result"] = {{"value", value}};
        out.assertions.push_back({"value computed", value, 0.0, true});
    }
    return out;
}

TaskOutput runRenormDemo(const ExperimentConfig& config) {
    TaskOutput out;
    const std::string which = config.params.at("which").get<std::string>();
    const int pairCount = config.params.value("pairs", 5);
    const NormDescriptor base =
        config.norm ? *config.norm : NormDescriptor::lp(2.0);
    const BiorthogonalSystem system = BiorthogonalSystem::canonical(pairCount);

    if (which == "auerbach") {
        const NormDescriptor renorm = NormDescriptor::auerbachRenorm(base, system);
        double worstUnit = 0.0, worstPair = std::numeric_limits<double>::infinity();
        for (int i = 0; i < pairCount; ++i) {
            const CoordVector& xi = system.pairs[static_cast<std::size_t>(i)].first;
            worstUnit = std::max(worstUnit, std::abs(norm(xi, renorm) - 1.0));
            for (int j = i + 1; j < pairCount; ++j) {
                const CoordVector& xj = system.pairs[static_cast<std::size_t>(j)].first;
                worstPair = std::min(worstPair, std::min(norm(xi - xj, renorm), norm(xi + xj, renorm)));
            }
        }
        out.payload["worst_unit_residual"] = worstUnit;
        out.payload["pair_separation"] = worstPair;
        out.assertions.push_back({"|||x_i||| = 1", worstUnit, 1e-12, worstUnit <= 1e-12});
        out.assertions.push_back(
            {"|||x_i +/- x_j||| = 2", worstPair, 1e-12, std::abs(worstPair - 2.0) <= 1e-12});
        return out;
    }
    if (which == "phi") {
        const double eps = config.params.at("eps").get<double>();
        const NormDescriptor renorm = NormDescriptor::phiRenorm(base, system, eps);
        double worstPair = std::numeric_limits<double>::infinity();
        for (int i = 0; i < pairCount; ++i)
            for (int j = i + 1; j < pairCount; ++j) {
                const CoordVector& xi = system.pairs[static_cast<std::size_t>(i)].first;
                const CoordVector& xj = system.pairs[static_cast<std::size_t>(j)].first;
                worstPair = std::min(worstPair, std::min(norm(xi - xj, renorm), norm(xi + xj, renorm)));
            }
        // the sandwich |||x||| <= (1+eps)||x|| on random vectors
        auto rng = trialRng(config.seed, 0);
        std::normal_distribution<double> gauss(0.0, 1.0);
        double worstSandwich = 0.0;
        const int trials = config.params.value("sandwich_trials", 1000);
        for (int t = 0; t < trials; ++t) {
            CoordVector x;
            for (int i = 1; i <= pairCount + 2; ++i) x.set(i, gauss(rng));
            const double baseNorm = norm(x, base);
            if (baseNorm < 1e-12) continue;
            worstSandwich = std::max(worstSandwich, norm(x, renorm) / baseNorm);
        }
        out.payload["pair_separation"] = worstPair;
        out.payload["worst_ratio_to_base"] = worstSandwich;
        out.assertions.push_back(
            {"|||x_i +/- x_j||| >= 1+eps", worstPair, 1e-12, worstPair >= 1.0 + eps - 1e-12});
        out.assertions.push_back({"|||.||| <= (1+eps)||.||", worstSandwich, 1e-9,
                                  worstSandwich <= 1.0 + eps + 1e-9});
        return out;
    }
    throw std::invalid_argument("renorm-demo: 'which' must be auerbach or phi");
}

// -------------------------------------------------------------------------
// Lemma suite: randomized validators across norm kinds.

struct LemmaContext {
    NormDescriptor d;
    std::vector<CoordVector> separatedFamily;  // unit, (1+eps)-separated
    double eps = 0.0;
    int dim = 0;
};

std::vector<LemmaContext> lemmaContexts() {
    std::vector<LemmaContext> contexts;
    auto lqBasis = [](int count) {
        std::vector<CoordVector> points;
        for (int i = 1; i <= count; ++i) points.push_back(CoordVector::basis(i));
        return points;
    };
    for (double q : {1.0, 1.5, 2.0, 3.0}) {
        contexts.push_back({NormDescriptor::lp(q), lqBasis(3), std::pow(2.0, 1.0 / q) - 1.0, 6});
    }
    {
        std::vector<CoordVector> staircases;
        for (int n = 1; n <= 3; ++n) staircases.push_back(CoordVector::staircaseC0(n));
        contexts.push_back({NormDescriptor::sup(), staircases, 1.0, 6});
    }
    {
        // disjoint two-point blocks with supports starting past the family size
        std::vector<CoordVector> blocks;
        for (int n = 0; n < 3; ++n) {
            CoordVector b;
            b.set(3 + 2 * n, 1.0);
            b.set(4 + 2 * n, 1.0);
            blocks.push_back(b);
        }
        contexts.push_back({NormDescriptor::tsirelson(), blocks, 0.5, 9});
    }
    {
        const BiorthogonalSystem system = BiorthogonalSystem::canonical(5);
        contexts.push_back({NormDescriptor::auerbachRenorm(NormDescriptor::lp(2.0), system),
                            lqBasis(3), 1.0, 5});
        contexts.push_back({NormDescriptor::phiRenorm(NormDescriptor::lp(2.0), system, 0.25),
                            lqBasis(3), std::sqrt(2.0) - 1.0, 5});
    }
    contexts.push_back({NormDescriptor::maxOf({NormDescriptor::lp(2.0), NormDescriptor::sup()}),
                        lqBasis(3), std::sqrt(2.0) - 1.0, 6});
    return contexts;
}

CoordVector randomSparse(std::mt19937_64& rng, int maxIndex, int entries) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> pickIndex(1, maxIndex);
    CoordVector x;
    for (int i = 0; i < entries; ++i) x.set(pickIndex(rng), gauss(rng));
    return x;
}

}  // namespace

json ExperimentConfig::toJson() const {
    json j{{"schema", schema}, {"name", name},     {"task", task},
           {"params", params}, {"seed", seed},     {"output", output},
           {"jobs", jobs}};
    if (norm) j["norm"] = symsep::toJson(*norm);
    return j;
}

ExperimentConfig ExperimentConfig::fromJson(const json& j) {
    static const std::vector<std::string> known{"schema", "name",   "task", "norm",
                                               "params", "seed",   "output", "jobs"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("ExperimentConfig: unknown field '" + key + "'");
    }
    ExperimentConfig config;
    config.schema = j.at("schema").get<int>();
    if (config.schema != 1) throw std::invalid_argument("ExperimentConfig: unsupported schema");
    config.name = j.value("name", "");
    config.task = j.at("task").get<std::string>();
    if (j.contains("norm")) config.norm = normDescriptorFromJson(j.at("norm"));
    config.params = j.value("params", json::object());
    config.seed = j.value("seed", std::uint64_t{0});
    config.output = j.value("output", "");
    config.jobs = j.value("jobs", 1);
    return config;
}

bool RunRecord::allPass() const {
    for (const auto& a : assertions)
        if (!a.pass) return false;
    return true;
}

json RunRecord::toJson() const {
    json asserts = json::array();
    for (const auto& a : assertions)
        asserts.push_back(
            {{"name", a.name}, {"value", a.value}, {"tolerance", a.tolerance}, {"pass", a.pass}});
    return {{"config_hash", configHash}, {"version", version},   {"started_at", startedAt},
            {"finished_at", finishedAt}, {"payload", payload},   {"assertions", asserts}};
}

std::string configHash(const ExperimentConfig& config) {
    const std::string canonical = config.toJson().dump();
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << hash;
    return out.str();
}

void writeSvgPlot(const std::filesystem::path& path, const std::string& title,
                  const std::string& xLabel, const std::string& yLabel,
                  const std::vector<std::pair<double, double>>& points) {
    const int width = 640, height = 420, margin = 60;
    double xMin = points.front().first, xMax = points.front().first;
    double yMin = points.front().second, yMax = points.front().second;
    for (const auto& [x, y] : points) {
        xMin = std::min(xMin, x);
        xMax = std::max(xMax, x);
        yMin = std::min(yMin, y);
        yMax = std::max(yMax, y);
    }
    if (xMax == xMin) xMax = xMin + 1.0;
    if (yMax == yMin) yMax = yMin + 1.0;
    auto sx = [&](double x) {
        return margin + (x - xMin) / (xMax - xMin) * (width - 2 * margin);
    };
    auto sy = [&](double y) {
        return height - margin - (y - yMin) / (yMax - yMin) * (height - 2 * margin);
    };
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
        << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
        << height - margin << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 16
        << "\" text-anchor=\"middle\" font-size=\"12\">" << xLabel << "</text>\n";
    out << "<text x=\"18\" y=\"" << height / 2 << "\" font-size=\"12\" transform=\"rotate(-90 18 "
        << height / 2 << ")\" text-anchor=\"middle\">" << yLabel << "</text>\n";
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : points) out << sx(x) << "," << sy(y) << " ";
    out << "\"/>\n";
    for (const auto& [x, y] : points)
        out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"steelblue\"/>\n";
    out << "</svg>\n";
}

RunRecord run(const ExperimentConfig& config) {
    RunRecord record;
    TaskOutput out;
    if (config.task == "lemma-suite") {
        record = lemmaSuite(config.params.value("trials", 1000), config.seed);
        record.configHash = configHash(config);
    } else {
        record.configHash = configHash(config);
        record.version = kVersion;
        record.startedAt = isoNow();

        if (config.task == "separation-check")
            out = runSeparationCheck(config);
        else if (config.task == "chain")
            out = runChain(config);
        else if (config.task == "kottman")
            out = runKottman(config);
        else if (config.task == "xbox")
            out = runXbox(config);
        else if (config.task == "tsirelson-eval")
            out = runTsirelsonEval(config);
        else if (config.task == "renorm-demo")
            out = runRenormDemo(config);
        else
            throw std::invalid_argument("unknown task: " + config.task);

        record.payload = std::move(out.payload);
        record.payload["task"] = config.task;
        record.payload["seed"] = config.seed;
        record.assertions = std::move(out.assertions);
        record.finishedAt = isoNow();
    }

    if (!config.output.empty()) {
        const std::filesystem::path dir(config.output);
        std::filesystem::create_directories(dir);
        {
            std::ofstream payloadOut(dir / "payload.json");
            payloadOut << record.payload.dump(2) << "\n";
        }
        {
            std::ofstream recordOut(dir / "record.json");
            recordOut << record.toJson().dump(2) << "\n";
        }
        for (const auto& [name, table] : out.tables) writeCsv(dir / name, table.first, table.second);
        if (out.plot && out.plot->second.size() >= 2)
            writeSvgPlot(dir / "plot.svg", out.plot->first, "family size", "separation",
                         out.plot->second);
    }
    return record;
}

RunRecord lemmaSuite(int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("lemmaSuite: trials must be >= 1");
    RunRecord record;
    record.version = kVersion;
    record.startedAt = isoNow();

    const std::vector<LemmaContext> contexts = lemmaContexts();
    int ballToSphereRuns = 0, ballToSphereFails = 0;
    int embedRuns = 0, embedFails = 0;
    int shiftRuns = 0, shiftFails = 0;

    for (int t = 0; t < trials; ++t) {
        const LemmaContext& ctx = contexts[static_cast<std::size_t>(t) % contexts.size()];
        auto rng = trialRng(seed, t);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        // --- ball-to-sphere ---
        for (int attempt = 0; attempt < 40; ++attempt) {
            CoordVector x = randomSparse(rng, ctx.dim, 3);
            CoordVector y = randomSparse(rng, ctx.dim, 3);
            const double nx = norm(x, ctx.d), ny = norm(y, ctx.d);
            if (nx < 1e-9 || ny < 1e-9) continue;
            x *= unit(rng) / nx;
            y *= unit(rng) / ny;
            if (x.isZero() || y.isZero() || norm(x - y, ctx.d) < 1.0) continue;
            const auto [normalized, raw] = ballToSphere(x, y, ctx.d);
            ++ballToSphereRuns;
            if (normalized < raw - 1e-9) ++ballToSphereFails;
            break;
        }

        // --- near-unit shift bound ---
        {
            CoordVector a = randomSparse(rng, ctx.dim, 3);
            CoordVector b = randomSparse(rng, ctx.dim, 3);
            if (!b.isZero()) {
                const double eps = 0.05 + 0.4 * unit(rng);
                const double scale = 1.0 + eps * (2.0 * unit(rng) - 1.0);
                b *= scale / norm(b, ctx.d);
                const auto [lhs, rhs] = nearUnitShiftBound(a, b, eps, ctx.d);
                ++shiftRuns;
                if (lhs > rhs + 1e-9) ++shiftFails;
            }
        }

        // --- embedding at the delta = eps/(2+eps) boundary ---
        {
            const double delta = ctx.eps / (2.0 + ctx.eps);
            int dim = 0;
            for (const auto& p : ctx.separatedFamily) dim = std::max(dim, p.maxIndex());
            std::vector<double> diag(static_cast<std::size_t>(dim), 1.0);
            for (auto& dEntry : diag) dEntry = 1.0 + delta * unit(rng);
            // pin the boundary: one coordinate at 1, one at exactly 1 + delta
            diag.front() = 1.0;
            diag.back() = 1.0 + delta;
            const Matrix T = Matrix::diagonal(diag);
            const SeparationReport report =
                embedAndRenormalize(ctx.separatedFamily, T, ctx.d, ctx.d, ctx.eps, 6);
            ++embedRuns;
            if (report.value < 1.0 + ctx.eps / 2.0 - 1e-6) ++embedFails;
        }
    }

    const int counterexamples = ballToSphereFails + embedFails + shiftFails;
    record.payload = {{"task", "lemma-suite"},
                      {"seed", seed},
                      {"trials", trials},
                      {"ball_to_sphere", {{"runs", ballToSphereRuns}, {"failures", ballToSphereFails}}},
                      {"embed_renormalize", {{"runs", embedRuns}, {"failures", embedFails}}},
                      {"near_unit_shift", {{"runs", shiftRuns}, {"failures", shiftFails}}},
                      {"counterexamples", counterexamples}};
    record.assertions.push_back({"zero counterexamples", static_cast<double>(counterexamples), 0.0,
                                 counterexamples == 0});
    record.finishedAt = isoNow();
    return record;
}

}  // namespace symsep
