// End-to-end acceptance checks: one line per criterion, exit 0 iff all pass.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "symsep/experiment.hpp"
#include "symsep/json_io.hpp"
#include "symsep/tsirelson.hpp"

using namespace symsep;

namespace {

int failures = 0;

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double seconds) {
    std::printf("%s  criterion %2d: %s  (%.2fs)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), seconds);
    if (!pass) ++failures;
}

std::vector<CoordVector> basisFamily(int count) {
    std::vector<CoordVector> points;
    for (int i = 1; i <= count; ++i) points.push_back(CoordVector::basis(i));
    return points;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void criterion1() {
    Stopwatch sw;
    const SeparationReport r = symmetricSeparation(basisFamily(10), NormDescriptor::lp(1.0));
    const double t = sw.seconds();
    report(1, std::abs(r.value - 2.0) <= 1e-12 && t < 0.1,
           "l1 basis family is exactly 2-separated", t);
}

void criterion2() {
    Stopwatch sw;
    std::vector<CoordVector> staircases;
    for (int n = 1; n <= 10; ++n) staircases.push_back(CoordVector::staircaseC0(n));
    const SeparationReport r = symmetricSeparation(staircases, NormDescriptor::sup());
    const double t = sw.seconds();
    report(2, std::abs(r.value - 2.0) <= 1e-12 && t < 0.1,
           "c0 staircase family is exactly 2-separated", t);
}

void criterion3() {
    Stopwatch sw;
    bool pass = true;
    for (double q : {1.0, 1.5, 2.0, 3.0, 4.0}) {
        const SeparationReport r = disjointBlockCertificate(q, basisFamily(3));
        pass = pass && std::abs(r.value - std::pow(2.0, 1.0 / q)) <= 1e-12 &&
               cotypeBoundCheck(r, q);
    }
    report(3, pass, "disjoint lq blocks certify 2^{1/q} for q in {1,1.5,2,3,4}", sw.seconds());
}

void criterion4() {
    Stopwatch sw;
    SearchConfig cfg;
    cfg.seed = 2024;
    const SeparationReport r = empiricalKottman(NormDescriptor::lp(2.0), 16, 8, cfg);
    const double t = sw.seconds();
    const double root2 = std::sqrt(2.0);
    report(4, r.value >= root2 - 0.05 && r.value <= root2 + 1e-9 && t < 60.0,
           "empirical l2 packing lands in [sqrt(2)-0.05, sqrt(2)]", t);
}

void criterion5() {
    Stopwatch sw;
    bool pass = true;
    for (double q : {1.0, 3.0}) {
        Stopwatch each;
        SearchConfig cfg;
        cfg.seed = 2024;
        const double threshold = std::pow(2.0, 1.0 / q) - 0.01;
        const auto chain = greedyChain(threshold, NormDescriptor::lp(q), cfg, 6);
        const bool ok = chain.size() == 6 &&
                        symmetricSeparation(chain, NormDescriptor::lp(q)).value >= threshold &&
                        each.seconds() < 60.0;
        pass = pass && ok;
    }
    report(5, pass, "greedy chains reach length 6 at 2^{1/q}-0.01 for q in {1,3}", sw.seconds());
}

void criterion6() {
    Stopwatch sw;
    SearchConfig cfg;
    cfg.seed = 2024;
    cfg.tolOpt = 1e-3;  // the dim-64 lp(20) truncation minimum sits near 1 + 1.6e-4
    const NormDescriptor d = NormDescriptor::lp(20.0);
    bool pass = true;
    try {
        XBoxTrace trace = xboxInit(d, 64);
        for (int s = 0; s < 6; ++s) xboxStep(trace, d, cfg);
        pass = trace.xs.size() == 6;
        for (std::size_t k = 0; pass && k < trace.xs.size(); ++k) {
            const double deltaK = std::pow(2.0, -static_cast<double>(k) - 3.0);
            for (std::size_t n = k + 1; n < trace.xs.size(); ++n) {
                pass = pass && norm(trace.xs[k] + trace.xs[n], d) >= 1.5 - 1e-4;
                pass = pass && norm(trace.xs[k] - trace.xs[n], d) >= 1.0 + deltaK - 1e-4;
            }
        }
    } catch (const std::exception&) {
        pass = false;
    }
    const double t = sw.seconds();
    report(6, pass && t < 120.0, "kernel-constrained chain x_1..x_6 in lp(20), dim 64", t);
}

void criterion7() {
    Stopwatch sw;
    const BiorthogonalSystem system = BiorthogonalSystem::canonical(5);
    const NormDescriptor base = NormDescriptor::lp(2.0);
    bool pass = true;

    const NormDescriptor auerbach = NormDescriptor::auerbachRenorm(base, system);
    for (int i = 0; i < 5 && pass; ++i) {
        pass = pass && norm(system.pairs[i].first, auerbach) == 1.0;
        for (int j = i + 1; j < 5 && pass; ++j) {
            pass = pass && norm(system.pairs[i].first - system.pairs[j].first, auerbach) == 2.0;
            pass = pass && norm(system.pairs[i].first + system.pairs[j].first, auerbach) == 2.0;
        }
    }

    const double eps = 0.25;
    const NormDescriptor phiNorm = NormDescriptor::phiRenorm(base, system, eps);
    for (int i = 0; i < 5 && pass; ++i)
        for (int j = i + 1; j < 5 && pass; ++j) {
            pass = pass &&
                   norm(system.pairs[i].first - system.pairs[j].first, phiNorm) >= 1.25 - 1e-12;
            pass = pass &&
                   norm(system.pairs[i].first + system.pairs[j].first, phiNorm) >= 1.25 - 1e-12;
        }
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 1000 && pass; ++trial) {
        CoordVector x;
        for (int i = 1; i <= 7; ++i) x.set(i, gauss(rng));
        pass = pass && norm(x, phiNorm) <= 1.25 * norm(x, base) + 1e-12;
    }
    report(7, pass, "renorm demos: unit/pair identities and the (1+eps) sandwich", sw.seconds());
}

void criterion8() {
    Stopwatch sw;
    bool pass = true;

    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> size(1, 10), index(1, 24), value(0, 3);
    const double values[4] = {1.0, -1.0, 2.0, -2.0};
    std::vector<CoordVector> samples;
    for (int trial = 0; trial < 500; ++trial) {
        CoordVector x;
        const int n = size(rng);
        while (static_cast<int>(x.supportSize()) < n) x.set(index(rng), values[value(rng)]);
        samples.push_back(x);
    }
    // the oracle is the expensive side; check the samples across workers
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> allEqual{true};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = cursor++; i < samples.size(); i = cursor++) {
                if (tsirelsonNorm(samples[i]) != tsirelsonOracle(samples[i]))
                    allEqual = false;
            }
        });
    for (auto& worker : pool) worker.join();
    pass = pass && allEqual;

    for (int k = 1; k <= 8 && pass; ++k) {
        CoordVector segment;
        for (int i = k; i <= 2 * k - 1; ++i) segment.set(i, 1.0);
        pass = pass && tsirelsonNorm(segment) >= k / 2.0 - 1e-12;
    }

    // every admissible increasing index tuple (k <= first index) up to 14,
    // with every sign pattern
    for (int k = 1; k <= 6 && pass; ++k) {
        std::vector<int> indices(static_cast<std::size_t>(k));
        const std::function<void(int, int)> enumerate = [&](int pos, int from) {
            if (!pass) return;
            if (pos == k) {
                for (int mask = 0; mask < (1 << k) && pass; ++mask) {
                    std::vector<int> signs(static_cast<std::size_t>(k));
                    for (int b = 0; b < k; ++b) signs[static_cast<std::size_t>(b)] =
                        (mask >> b) & 1 ? -1 : 1;
                    pass = pass && l1SpreadingCertificate(indices, signs, 0.5).pass;
                }
                return;
            }
            for (int i = from; i <= 14; ++i) {
                indices[static_cast<std::size_t>(pos)] = i;
                enumerate(pos + 1, i + 1);
            }
        };
        enumerate(0, k);
    }

    const double t = sw.seconds();
    report(8, pass && t < 120.0,
           "Tsirelson engine == oracle on 500 vectors; segment and spreading bounds", t);
}

void criterion9() {
    Stopwatch sw;
    const RunRecord record = lemmaSuite(10000, 42);
    report(9, record.allPass() && record.payload.at("counterexamples").get<int>() == 0,
           "10^4 randomized inequality trials, zero counterexamples", sw.seconds());
}

void criterion10() {
    Stopwatch sw;
    namespace fs = std::filesystem;
    const fs::path d1 = fs::temp_directory_path() / "symsep-acc-det1";
    const fs::path d2 = fs::temp_directory_path() / "symsep-acc-det2";
    fs::remove_all(d1);
    fs::remove_all(d2);

    ExperimentConfig config;
    config.task = "kottman";
    config.norm = NormDescriptor::lp(1.5);
    config.params = {{"dim", 6}, {"points", 4}, {"restarts", 4}, {"anneal_steps", 400}};
    config.seed = 31337;

    config.output = d1.string();
    run(config);
    config.output = d2.string();
    run(config);
    const bool pass = !slurp(d1 / "payload.json").empty() &&
                      slurp(d1 / "payload.json") == slurp(d2 / "payload.json");
    fs::remove_all(d1);
    fs::remove_all(d2);
    report(10, pass, "repeated seeded search gives byte-identical JSON payloads", sw.seconds());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
