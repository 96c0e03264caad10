#include "symsep/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

namespace symsep {

namespace {

std::mt19937_64 restartRng(std::uint64_t seed, int restart) {
    // splitmix-style sub-seed so restarts are independent and reproducible
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1);
    s ^= s >> 30;
    s *= 0xbf58476d1ce4e5b9ULL;
    s ^= s >> 27;
    return std::mt19937_64(s);
}

/// Runs fn(restart) for restart = 0..n-1, sequentially or on `jobs` workers.
/// The caller reduces the returned vector in index order, so the outcome does
/// not depend on the scheduling.
template <typename R, typename F>
std::vector<R> runRestarts(int n, int jobs, F&& fn) {
    std::vector<R> results(static_cast<std::size_t>(n));
    if (jobs <= 1) {
        for (int r = 0; r < n; ++r) results[static_cast<std::size_t>(r)] = fn(r);
        return results;
    }
    std::vector<std::future<void>> workers;
    std::atomic<int> next{0};
    for (int w = 0; w < jobs; ++w) {
        workers.push_back(std::async(std::launch::async, [&] {
            for (;;) {
                const int r = next.fetch_add(1);
                if (r >= n) return;
                results[static_cast<std::size_t>(r)] = fn(r);
            }
        }));
    }
    for (auto& worker : workers) worker.get();
    return results;
}

double minSymmetricDistance(const std::vector<CoordVector>& family, const CoordVector& b,
                            const NormDescriptor& d) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& bi : family)
        best = std::min(best, std::min(norm(bi - b, d), norm(bi + b, d)));
    return best;
}

}  // namespace

std::optional<CoordVector> greedyExtension(const std::vector<CoordVector>& family,
                                           double threshold, const NormDescriptor& d,
                                           const SearchConfig& cfg) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (std::abs(norm(family[i], d) - 1.0) > 1e-6)
            throw std::invalid_argument("greedyExtension: family blocks must be unit vectors");
        if (i + 1 < family.size() && !strictlyBefore(family[i], family[i + 1]))
            throw std::invalid_argument("greedyExtension: family must be strictly block-ordered");
    }

    const int windowStart = family.empty() ? 1 : family.back().maxIndex() + 1;
    const int windowEnd = windowStart + cfg.window - 1;

    auto normalize = [&](CoordVector b) -> std::optional<CoordVector> {
        const double n = norm(b, d);
        if (n < 1e-12) return std::nullopt;
        return (1.0 / n) * b;
    };

    const double target = threshold - cfg.tolOpt;

    // Basis candidates first: they attain the disjoint-support bounds exactly.
    for (int j = windowStart; j <= windowEnd; ++j) {
        auto b = normalize(CoordVector::basis(j));
        if (b && (family.empty() || minSymmetricDistance(family, *b, d) >= target)) return *b;
    }
    if (family.empty()) return normalize(CoordVector::basis(windowStart));

    struct Attempt {
        bool found = false;
        CoordVector block;
    };
    auto results = runRestarts<Attempt>(cfg.restarts, cfg.jobs, [&](int r) -> Attempt {
        auto rng = restartRng(cfg.seed, r);
        std::normal_distribution<double> gauss(0.0, 1.0);
        CoordVector b;
        for (int j = windowStart; j <= windowEnd; ++j) b.set(j, gauss(rng));
        auto unit = normalize(b);
        if (!unit) return {};
        b = *unit;
        double value = minSymmetricDistance(family, b, d);
        double sigma = 0.5;
        for (int it = 0; it < cfg.maxIter && sigma > 1e-10; ++it) {
            if (value >= target) break;
            CoordVector cand = b;
            for (int j = windowStart; j <= windowEnd; ++j)
                cand.set(j, cand.coeff(j) + sigma * gauss(rng));
            auto candUnit = normalize(cand);
            if (!candUnit) continue;
            const double candValue = minSymmetricDistance(family, *candUnit, d);
            if (candValue > value) {
                b = *candUnit;
                value = candValue;
            } else {
                sigma *= 0.97;
            }
        }
        if (value >= target) return {true, b};
        return {};
    });
    for (const auto& attempt : results)
        if (attempt.found) return attempt.block;
    return std::nullopt;
}

std::vector<CoordVector> greedyChain(double threshold, const NormDescriptor& d,
                                     const SearchConfig& cfg, int targetLength) {
    std::vector<CoordVector> family;
    while (static_cast<int>(family.size()) < targetLength) {
        auto next = greedyExtension(family, threshold, d, cfg);
        if (!next) break;
        family.push_back(*next);
    }
    return family;
}

// ---------------------------------------------------------------------------
// Dense helpers for the truncated-space optimisers.

namespace {

using Dense = std::vector<double>;

CoordVector toCoord(const Dense& v) {
    CoordVector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.set(static_cast<int>(i) + 1, v[i]);
    return out;
}

Dense toDense(const CoordVector& x, int dim) {
    Dense out(static_cast<std::size_t>(dim), 0.0);
    for (const auto& [index, value] : x.entries()) {
        if (index > dim) throw std::invalid_argument("toDense: vector exceeds the truncation");
        out[static_cast<std::size_t>(index - 1)] = value;
    }
    return out;
}

double denseDot(const Dense& a, const Dense& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

/// Orthonormal basis (Euclidean) of the span of the given vectors.
std::vector<Dense> orthonormalize(const std::vector<Dense>& vectors) {
    std::vector<Dense> basis;
    for (Dense v : vectors) {
        for (const auto& q : basis) {
            const double c = denseDot(v, q);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * q[i];
        }
        const double n = std::sqrt(denseDot(v, v));
        if (n > 1e-12) {
            for (auto& vi : v) vi /= n;
            basis.push_back(std::move(v));
        }
    }
    return basis;
}

void projectOut(Dense& v, const std::vector<Dense>& basis) {
    for (const auto& q : basis) {
        const double c = denseDot(v, q);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * q[i];
    }
}

/// Gradient of y -> norm(y, d) at w; closed form for smooth Lp, central
/// finite differences otherwise.
Dense normGradient(const Dense& w, const NormDescriptor& d) {
    const std::size_t dim = w.size();
    Dense g(dim, 0.0);
    if (d.kind() == NormDescriptor::Kind::Lp && d.p() > 1.0) {
        const double p = d.p();
        const double n = norm(toCoord(w), d);
        if (n == 0.0) return g;
        for (std::size_t i = 0; i < dim; ++i) {
            if (w[i] == 0.0) continue;
            g[i] = (w[i] > 0.0 ? 1.0 : -1.0) * std::pow(std::abs(w[i]) / n, p - 1.0);
        }
        return g;
    }
    const double h = 1e-6;
    Dense probe = w;
    for (std::size_t i = 0; i < dim; ++i) {
        probe[i] = w[i] + h;
        const double plus = norm(toCoord(probe), d);
        probe[i] = w[i] - h;
        const double minus = norm(toCoord(probe), d);
        probe[i] = w[i];
        g[i] = (plus - minus) / (2.0 * h);
    }
    return g;
}

}  // namespace

XBoxTrace xboxInit(const NormDescriptor& d, int dim) {
    const CoordVector e1 = CoordVector::basis(1);
    return xboxInit(d, dim, (0.75 / norm(e1, d)) * e1);
}

XBoxTrace xboxInit(const NormDescriptor& d, int dim, const CoordVector& z) {
    if (dim < 2) throw std::invalid_argument("xboxInit: dim must be >= 2");
    if (std::abs(norm(z, d) - 0.75) > 1e-9)
        throw std::invalid_argument("xboxInit: requires ||z|| = 3/4");
    if (z.maxIndex() > dim) throw std::invalid_argument("xboxInit: z exceeds the truncation");
    XBoxTrace trace;
    trace.z = z;
    trace.psi = normingFunctional(z, d);
    trace.dim = dim;
    return trace;
}

void xboxStep(XBoxTrace& trace, const NormDescriptor& d, const SearchConfig& cfg) {
    const int dim = trace.dim;
    const int n = static_cast<int>(trace.ys.size());

    CoordVector center = trace.z;
    for (int i = 0; i < n; ++i) center -= trace.deltas[static_cast<std::size_t>(i)] * trace.ys[static_cast<std::size_t>(i)];
    const Dense c = toDense(center, dim);

    std::vector<Dense> constraints;
    constraints.push_back(toDense(trace.psi.coefficients, dim));
    for (const auto& phi : trace.phis) constraints.push_back(toDense(phi.coefficients, dim));
    const std::vector<Dense> kernelComplement = orthonormalize(constraints);
    if (static_cast<int>(kernelComplement.size()) >= dim)
        throw std::invalid_argument("xboxStep: kernel intersection is trivial at this truncation");

    auto evaluate = [&](const Dense& y) {
        Dense w = c;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += y[i];
        return norm(toCoord(w), d);
    };

    struct Candidate {
        double value = std::numeric_limits<double>::infinity();
        Dense y;
    };
    auto results = runRestarts<Candidate>(std::max(cfg.restarts, 1), cfg.jobs, [&](int r) {
        auto rng = restartRng(cfg.seed, r);
        std::normal_distribution<double> gauss(0.0, 1.0);
        Dense y(static_cast<std::size_t>(dim));
        for (auto& yi : y) yi = gauss(rng);
        projectOut(y, kernelComplement);
        auto renorm = [&](Dense& v) {
            const double nv = norm(toCoord(v), d);
            if (nv < 1e-12) return false;
            for (auto& vi : v) vi /= nv;
            return true;
        };
        if (!renorm(y)) return Candidate{};
        double value = evaluate(y);
        double step = 0.5;
        for (int it = 0; it < cfg.maxIter && step > 1e-11; ++it) {
            Dense w = c;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += y[i];
            Dense g = normGradient(w, d);
            projectOut(g, kernelComplement);
            Dense cand = y;
            for (std::size_t i = 0; i < cand.size(); ++i) cand[i] -= step * g[i];
            projectOut(cand, kernelComplement);
            if (!renorm(cand)) {
                step *= 0.5;
                continue;
            }
            const double candValue = evaluate(cand);
            if (candValue < value - 1e-14) {
                y = std::move(cand);
                value = candValue;
            } else {
                step *= 0.5;
            }
        }
        return Candidate{value, std::move(y)};
    });

    Candidate best;
    for (const auto& candidate : results)
        if (candidate.value < best.value - 1e-12) best = candidate;
    if (best.value > 1.0 + cfg.tolOpt) throw XBoxOracleFailure(best.value);

    CoordVector y = toCoord(best.y);
    Functional phi = normingFunctional(y, d);
    trace.xs.push_back(center + y);
    trace.ys.push_back(std::move(y));
    trace.phis.push_back(std::move(phi));
    trace.deltas.push_back(std::pow(2.0, -(n + 3)));  // delta_{n+1} = 2^{-(n+3)}
}

MazurCutoff mazurSubspace(const std::vector<CoordVector>& E, double eps, const NormDescriptor& d,
                          const SearchConfig& cfg) {
    if (E.empty()) throw std::invalid_argument("mazurSubspace: E must be non-empty");
    int maxSupport = 0;
    for (const auto& e : E) {
        if (e.isZero()) throw std::invalid_argument("mazurSubspace: E contains the zero vector");
        maxSupport = std::max(maxSupport, e.maxIndex());
    }
    const int m = static_cast<int>(E.size());

    // Sampled elements of span(E): all sign patterns (up to 2^8), then random.
    std::vector<CoordVector> samples;
    if (m <= 8) {
        for (int pattern = 0; pattern < (1 << m); ++pattern) {
            CoordVector x;
            for (int i = 0; i < m; ++i)
                x += ((pattern >> i) & 1 ? -1.0 : 1.0) * E[static_cast<std::size_t>(i)];
            if (!x.isZero()) samples.push_back((1.0 / norm(x, d)) * x);
        }
    }
    {
        auto rng = restartRng(cfg.seed, 0);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int r = 0; r < cfg.restarts; ++r) {
            CoordVector x;
            for (int i = 0; i < m; ++i) x += gauss(rng) * E[static_cast<std::size_t>(i)];
            const double nx = norm(x, d);
            if (nx > 1e-12) samples.push_back((1.0 / nx) * x);
        }
    }

    auto rng = restartRng(cfg.seed, 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> logScale(-1.0, 1.0);
    for (int cutoff = maxSupport; cutoff <= maxSupport + 4 * cfg.window; ++cutoff) {
        double worst = 0.0;
        bool ok = true;
        for (const auto& x : samples) {
            for (int trial = 0; trial < 16 && ok; ++trial) {
                CoordVector v;
                for (int j = cutoff + 1; j <= cutoff + cfg.window; ++j) v.set(j, gauss(rng));
                const double nv = norm(v, d);
                if (nv < 1e-12) continue;
                v *= std::pow(10.0, logScale(rng)) / nv;
                const double denom = norm(x + v, d);
                if (denom < 1e-14) {
                    ok = false;
                    break;
                }
                worst = std::max(worst, norm(x, d) / denom);
                if (worst > 1.0 + eps + 1e-9) ok = false;
            }
            if (!ok) break;
        }
        if (ok) return {cutoff, worst};
    }
    throw std::runtime_error("mazurSubspace: no cutoff found within the truncation budget");
}

std::pair<double, double> projectionNorm(const std::vector<CoordVector>& blocks, int j,
                                         const NormDescriptor& d, const SearchConfig& cfg) {
    const int m = static_cast<int>(blocks.size());
    if (m == 0 || j < 1 || j > m) throw std::invalid_argument("projectionNorm: bad arguments");

    // Linear independence via Euclidean Gram-Schmidt over the union support.
    int dim = 0;
    for (const auto& b : blocks) {
        if (b.isZero()) throw std::invalid_argument("projectionNorm: degenerate family");
        dim = std::max(dim, b.maxIndex());
    }
    std::vector<Dense> denseBlocks;
    for (const auto& b : blocks) denseBlocks.push_back(toDense(b, dim));
    if (static_cast<int>(orthonormalize(denseBlocks).size()) < m)
        throw std::invalid_argument("projectionNorm: degenerate family");

    auto ratioAt = [&](const std::vector<double>& coeffs) {
        CoordVector full, head;
        for (int i = 0; i < m; ++i) {
            full += coeffs[static_cast<std::size_t>(i)] * blocks[static_cast<std::size_t>(i)];
            if (i < j) head += coeffs[static_cast<std::size_t>(i)] * blocks[static_cast<std::size_t>(i)];
        }
        const double nf = norm(full, d);
        if (nf < 1e-12) return -1.0;
        return norm(head, d) / nf;
    };

    double lower = 0.0;
    double improvementAtBest = 0.0;
    for (int r = 0; r < cfg.restarts + m; ++r) {
        auto rng = restartRng(cfg.seed, r);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> coeffs(static_cast<std::size_t>(m), 0.0);
        if (r < m)
            coeffs[static_cast<std::size_t>(r)] = 1.0;
        else
            for (auto& ci : coeffs) ci = gauss(rng);
        double value = ratioAt(coeffs);
        if (value < 0.0) continue;
        double sigma = 0.4;
        double lastImprovement = 0.0;
        for (int it = 0; it < cfg.maxIter && sigma > 1e-10; ++it) {
            std::vector<double> cand = coeffs;
            for (auto& ci : cand) ci += sigma * gauss(rng);
            const double candValue = ratioAt(cand);
            if (candValue > value) {
                lastImprovement = candValue - value;
                coeffs = std::move(cand);
                value = candValue;
            } else {
                sigma *= 0.95;
            }
        }
        if (value > lower) {
            lower = value;
            improvementAtBest = lastImprovement;
        }
    }
    return {lower, lower + 10.0 * improvementAtBest};
}

SeparationReport empiricalKottman(const NormDescriptor& d, int dim, int nPoints,
                                  const SearchConfig& cfg) {
    if (nPoints < 2) throw std::invalid_argument("empiricalKottman: needs at least 2 points");
    if (dim < 1) throw std::invalid_argument("empiricalKottman: dim must be >= 1");

    auto familyValue = [&](const std::vector<CoordVector>& points) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t k = i + 1; k < points.size(); ++k)
                best = std::min(best, std::min(norm(points[i] - points[k], d),
                                               norm(points[i] + points[k], d)));
        return best;
    };
    auto worstPoint = [&](const std::vector<CoordVector>& points) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t who = 0;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t k = i + 1; k < points.size(); ++k) {
                const double v = std::min(norm(points[i] - points[k], d),
                                          norm(points[i] + points[k], d));
                if (v < best) {
                    best = v;
                    who = i;
                }
            }
        return who;
    };

    struct Candidate {
        double value = -1.0;
        std::vector<CoordVector> points;
    };
    auto results = runRestarts<Candidate>(cfg.restarts, cfg.jobs, [&](int r) {
        auto rng = restartRng(cfg.seed, r);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<int> pick(0, nPoints - 1);

        auto randomUnit = [&]() {
            CoordVector x;
            for (int i = 1; i <= dim; ++i) x.set(i, gauss(rng));
            return (1.0 / norm(x, d)) * x;
        };

        std::vector<CoordVector> points;
        if (r == 0 && dim >= nPoints) {
            // Disjoint basis start: already optimal for the lq scales.
            for (int i = 1; i <= nPoints; ++i) {
                CoordVector e = CoordVector::basis(i);
                points.push_back((1.0 / norm(e, d)) * e);
            }
        } else if (r == 1) {
            // Rademacher sign-pattern start: point i flips sign with period
            // 2^i, so any two rows both agree and disagree somewhere (when the
            // dimension allows), which is optimal at the sup scale.
            for (int i = 0; i < nPoints; ++i) {
                CoordVector x;
                for (int c = 1; c <= dim; ++c)
                    x.set(c, (((c - 1) >> i) & 1) == 0 ? 1.0 : -1.0);
                points.push_back((1.0 / norm(x, d)) * x);
            }
        } else {
            for (int i = 0; i < nPoints; ++i) points.push_back(randomUnit());
        }

        double value = familyValue(points);
        std::vector<CoordVector> bestPoints = points;
        double bestValue = value;

        double temperature = cfg.anneal.initialTemperature;
        for (int step = 0; step < cfg.anneal.steps; ++step, temperature *= cfg.anneal.cooling) {
            // mostly move a point of the worst pair, sometimes a random one
            const std::size_t i =
                unit(rng) < 0.8 ? worstPoint(points) : static_cast<std::size_t>(pick(rng));
            CoordVector proposal = points[i];
            const double sigma = std::max(0.02, temperature);
            for (int c = 1; c <= dim; ++c) proposal.set(c, proposal.coeff(c) + sigma * gauss(rng));
            const double np = norm(proposal, d);
            if (np < 1e-12) continue;
            proposal = (1.0 / np) * proposal;
            CoordVector saved = points[i];
            points[i] = proposal;
            const double candValue = familyValue(points);
            const bool accept =
                candValue > value || unit(rng) < std::exp((candValue - value) / std::max(temperature, 1e-9));
            if (accept) {
                value = candValue;
                if (value > bestValue) {
                    bestValue = value;
                    bestPoints = points;
                }
            } else {
                points[i] = std::move(saved);
            }
        }
        return Candidate{bestValue, std::move(bestPoints)};
    });

    Candidate best;
    for (const auto& candidate : results)
        if (candidate.value > best.value) best = candidate;
    return symmetricSeparation(best.points, d);
}

}  // namespace symsep
