#include "symsep/tsirelson.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace symsep {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Square tables indexed by (lo, hi) positions into the sorted support.
struct LevelTable {
    int n = 0;
    std::vector<double> data;
    explicit LevelTable(int n_) : n(n_), data(static_cast<std::size_t>(n_) * n_, 0.0) {}
    double& at(int lo, int hi) { return data[static_cast<std::size_t>(lo) * n + hi]; }
    double at(int lo, int hi) const { return data[static_cast<std::size_t>(lo) * n + hi]; }
};

struct Engine {
    std::vector<int> idx;     // support indices, ascending
    std::vector<double> val;  // |coefficients|
    int n = 0;

    // hBest(j, pos): best sum of at most j disjoint interval runs placed in
    // positions [pos, hi], for the current `hi` and level table f.
    // Rebuilt per hi; dimensions (n+1) x (n+2).
    std::vector<double> hBest;

    double& hb(int j, int pos) { return hBest[static_cast<std::size_t>(j) * (n + 2) + pos]; }

    void buildH(const LevelTable& f, int hi) {
        for (int pos = hi + 1; pos >= 0; --pos) hb(0, pos) = 0.0;
        for (int j = 1; j <= n; ++j) {
            hb(j, hi + 1) = 0.0;  // no positions left: use fewer runs
            for (int pos = hi; pos >= 0; --pos) {
                double best = hb(j, pos + 1);  // skip this position
                for (int e = pos; e <= hi; ++e)
                    best = std::max(best, f.at(pos, e) + hb(j - 1, e + 1));
                hb(j, pos) = best;
            }
        }
    }

    // Best admissible-family sum within positions [lo, hi]; the first interval
    // starts at some position a with the family size k <= idx[a].
    double bestFamily(const LevelTable& f, int lo, int hi) {
        double best = 0.0;
        for (int a = lo; a <= hi; ++a) {
            const int kMax = std::min(idx[a], hi - a + 1);
            if (kMax < 1) continue;
            for (int e = a; e <= hi; ++e) {
                const int rest = std::min(kMax - 1, hi - e);
                best = std::max(best, f.at(a, e) + hb(rest, e + 1));
            }
        }
        return best;
    }
};

}  // namespace

double tsirelsonNorm(const CoordVector& x) {
    if (x.isZero()) return 0.0;
    Engine eng;
    for (const auto& [i, v] : x.entries()) {
        eng.idx.push_back(i);
        eng.val.push_back(std::abs(v));
    }
    eng.n = static_cast<int>(eng.idx.size());
    const int n = eng.n;
    eng.hBest.assign(static_cast<std::size_t>(n + 1) * (n + 2), 0.0);

    LevelTable f(n);
    for (int lo = 0; lo < n; ++lo) {
        double running = 0.0;
        for (int hi = lo; hi < n; ++hi) {
            running = std::max(running, eng.val[hi]);
            f.at(lo, hi) = running;
        }
    }

    // Iterate levels until the whole table reaches its fixed point; cached
    // values are monotone nondecreasing in the level.
    for (;;) {
        LevelTable next(n);
        bool changed = false;
        for (int hi = 0; hi < n; ++hi) {
            eng.buildH(f, hi);
            for (int lo = 0; lo <= hi; ++lo) {
                const double value = std::max(f.at(lo, hi), 0.5 * eng.bestFamily(f, lo, hi));
                next.at(lo, hi) = value;
                if (value != f.at(lo, hi)) changed = true;
            }
        }
        if (!changed) return f.at(0, n - 1);
        f = std::move(next);
    }
}

TsirelsonCertificate tsirelsonCertificate(const CoordVector& x) {
    TsirelsonCertificate cert;
    cert.value = tsirelsonNorm(x);
    if (x.isZero()) return cert;

    Engine eng;
    for (const auto& [i, v] : x.entries()) {
        eng.idx.push_back(i);
        eng.val.push_back(std::abs(v));
    }
    eng.n = static_cast<int>(eng.idx.size());
    const int n = eng.n;

    double supNorm = 0.0;
    for (double v : eng.val) supNorm = std::max(supNorm, v);
    if (cert.value <= supNorm) return cert;  // sup part attains; no partition

    // The fixed-point table: the norm of every sub-interval restriction.
    LevelTable f(n);
    for (int lo = 0; lo < n; ++lo)
        for (int hi = lo; hi < n; ++hi)
            f.at(lo, hi) = tsirelsonNorm(x.restrict(eng.idx[lo], eng.idx[hi]));

    eng.hBest.assign(static_cast<std::size_t>(n + 1) * (n + 2), 0.0);
    eng.buildH(f, n - 1);

    // Locate an attaining first interval, then walk the DP table.
    for (int a = 0; a < n; ++a) {
        const int kMax = std::min(eng.idx[a], n - a);
        for (int e = a; e < n; ++e) {
            const int rest = std::min(kMax - 1, n - 1 - e);
            if (0.5 * (f.at(a, e) + eng.hb(rest, e + 1)) >= cert.value - 1e-12) {
                cert.partition.push_back({eng.idx[a], eng.idx[e]});
                int j = rest, pos = e + 1;
                while (j > 0 && pos < n) {
                    if (eng.hb(j, pos) == eng.hb(j, pos + 1)) {
                        ++pos;
                        continue;
                    }
                    bool found = false;
                    for (int e2 = pos; e2 < n && !found; ++e2) {
                        if (eng.hb(j, pos) == f.at(pos, e2) + eng.hb(j - 1, e2 + 1)) {
                            if (f.at(pos, e2) > 0.0)
                                cert.partition.push_back({eng.idx[pos], eng.idx[e2]});
                            j -= 1;
                            pos = e2 + 1;
                            found = true;
                        }
                    }
                    if (!found) break;
                }
                return cert;
            }
        }
    }
    return cert;
}

namespace {

struct Item {
    int index;
    double value;
};

double oracleRec(const std::vector<Item>& items) {
    const int n = static_cast<int>(items.size());
    if (n == 0) return 0.0;
    double best = 0.0;
    for (const auto& it : items) best = std::max(best, std::abs(it.value));
    if (n == 1) return best;

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> positions;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) positions.push_back(b);
        const int m = static_cast<int>(positions.size());
        if (m < 2) continue;  // k = 1 families never exceed the other candidates
        const int minIndex = items[positions[0]].index;
        for (std::uint32_t comp = 1; comp < (1u << (m - 1)); ++comp) {
            const int k = std::popcount(comp) + 1;
            if (k > minIndex) continue;  // admissibility: k <= min E_1
            double sum = 0.0;
            std::vector<Item> chunk;
            for (int b = 0; b < m; ++b) {
                chunk.push_back(items[positions[b]]);
                const bool boundary = (b == m - 1) || (comp & (1u << b));
                if (boundary) {
                    sum += oracleRec(chunk);
                    chunk.clear();
                }
            }
            best = std::max(best, 0.5 * sum);
        }
    }
    return best;
}

}  // namespace

double tsirelsonOracle(const CoordVector& x) {
    if (x.supportSize() > 12)
        throw std::invalid_argument("tsirelsonOracle: support larger than 12");
    std::vector<Item> items;
    for (const auto& [i, v] : x.entries()) items.push_back({i, v});
    return oracleRec(items);
}

SpreadingCertificate l1SpreadingCertificate(const std::vector<int>& indices,
                                            const std::vector<int>& signs, double delta) {
    if (indices.empty() || indices.size() != signs.size())
        throw std::invalid_argument("l1SpreadingCertificate: indices and signs must match, k >= 1");
    CoordVector x;
    int previous = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] <= previous)
            throw std::invalid_argument("l1SpreadingCertificate: indices must be strictly increasing");
        if (signs[i] != 1 && signs[i] != -1)
            throw std::invalid_argument("l1SpreadingCertificate: signs must be +/-1");
        previous = indices[i];
        x.set(indices[i], static_cast<double>(signs[i]));
    }
    SpreadingCertificate cert;
    cert.value = tsirelsonNorm(x) / static_cast<double>(indices.size());
    cert.pass = cert.value >= delta - 1e-12;
    return cert;
}

}  // namespace symsep
