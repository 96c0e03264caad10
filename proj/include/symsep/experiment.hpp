#ifndef SYMSEP_EXPERIMENT_HPP
#define SYMSEP_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "symsep/norms.hpp"
#include "symsep/search.hpp"

namespace symsep {

/// One experiment: a task name, a norm, task parameters, and a seed.
/// Round-trips losslessly through JSON; unknown fields are rejected.
struct ExperimentConfig {
    int schema = 1;
    std::string name;
    std::string task;  // separation-check | chain | kottman | xbox | tsirelson-eval
                       // | renorm-demo | lemma-suite
    std::optional<NormDescriptor> norm;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::string output;  // directory; empty = no files written
    int jobs = 1;

    nlohmann::json toJson() const;
    static ExperimentConfig fromJson(const nlohmann::json& j);
};

struct Assertion {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct RunRecord {
    std::string configHash;
    std::string version;
    std::string startedAt;
    std::string finishedAt;
    nlohmann::json payload;  // deterministic per (config, seed)
    std::vector<Assertion> assertions;

    bool allPass() const;
    nlohmann::json toJson() const;  // includes timestamps (non-deterministic)
};

/// Dispatches to the named task; when config.output is set, writes
/// payload.json (deterministic), record.json (with timing metadata), CSV
/// tables, and an SVG plot where the task produces a curve.
RunRecord run(const ExperimentConfig& config);

/// Randomised validators for the stability inequalities across all norm
/// kinds; the payload reports the counterexample count (0 for a correct
/// implementation).
RunRecord lemmaSuite(int trials, std::uint64_t seed);

/// FNV-1a over the canonical config serialisation.
std::string configHash(const ExperimentConfig& config);

/// Writes a standalone SVG polyline plot.
void writeSvgPlot(const std::filesystem::path& path, const std::string& title,
                  const std::string& xLabel, const std::string& yLabel,
                  const std::vector<std::pair<double, double>>& points);

}  // namespace symsep

#endif
