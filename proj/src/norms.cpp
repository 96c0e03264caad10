#include "symsep/norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "symsep/tsirelson.hpp"

namespace symsep {

void BiorthogonalSystem::validateBiorthogonality() const {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            const double value = pairs[i].second.dot(pairs[j].first);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(value - expected) > 1e-12)
                throw std::invalid_argument("BiorthogonalSystem: <f_i, x_j> != delta_ij");
        }
    }
}

BiorthogonalSystem BiorthogonalSystem::canonical(int count) {
    if (count < 1) throw std::invalid_argument("canonical: count must be >= 1");
    BiorthogonalSystem s;
    for (int i = 1; i <= count; ++i) s.pairs.emplace_back(CoordVector::basis(i), CoordVector::basis(i));
    s.auerbach = true;
    return s;
}

NormDescriptor NormDescriptor::lp(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp: requires 1 <= p < inf");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Lp;
    impl->p = p;
    return NormDescriptor(std::move(impl));
}

NormDescriptor NormDescriptor::sup() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Sup;
    return NormDescriptor(std::move(impl));
}

NormDescriptor NormDescriptor::tsirelson() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Tsirelson;
    return NormDescriptor(std::move(impl));
}

NormDescriptor NormDescriptor::auerbachRenorm(NormDescriptor base, BiorthogonalSystem system) {
    if (system.pairs.size() < 2)
        throw std::invalid_argument("auerbachRenorm: system needs at least 2 pairs");
    system.validateBiorthogonality();
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::AuerbachRenorm;
    impl->base.push_back(std::move(base));
    impl->system = std::make_shared<const BiorthogonalSystem>(std::move(system));
    return NormDescriptor(std::move(impl));
}

NormDescriptor NormDescriptor::phiRenorm(NormDescriptor base, BiorthogonalSystem system, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("phiRenorm: requires 0 < eps < 1");
    if (system.pairs.size() < 2)
        throw std::invalid_argument("phiRenorm: system needs at least 2 pairs");
    system.validateBiorthogonality();
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::PhiRenorm;
    impl->eps = eps;
    impl->base.push_back(std::move(base));
    impl->system = std::make_shared<const BiorthogonalSystem>(std::move(system));
    return NormDescriptor(std::move(impl));
}

NormDescriptor NormDescriptor::maxOf(std::vector<NormDescriptor> parts) {
    if (parts.empty()) throw std::invalid_argument("maxOf: needs at least one norm");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::MaxOf;
    impl->base = std::move(parts);
    return NormDescriptor(std::move(impl));
}

std::string NormDescriptor::describe() const {
    switch (kind()) {
        case Kind::Lp: return "lp:" + std::to_string(p());
        case Kind::Sup: return "sup";
        case Kind::Tsirelson: return "tsirelson";
        case Kind::AuerbachRenorm: return "auerbach(" + base().describe() + ")";
        case Kind::PhiRenorm: return "phi(" + base().describe() + "," + std::to_string(eps()) + ")";
        case Kind::MaxOf: {
            std::string out = "max(";
            for (std::size_t i = 0; i < parts().size(); ++i)
                out += (i ? "," : "") + parts()[i].describe();
            return out + ")";
        }
    }
    return "?";
}

double phi(double alpha, double beta, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("phi: requires 0 < eps < 1");
    const double supPart = std::max(std::abs(alpha), std::abs(beta));
    const double sumPart = (1.0 + eps) * std::abs(alpha + beta) / 2.0;
    return std::max(supPart, sumPart);
}

double auerbachRenormNu(const CoordVector& x, const BiorthogonalSystem& s) {
    if (s.pairs.size() < 2) throw std::invalid_argument("auerbachRenormNu: needs at least 2 pairs");
    std::vector<double> values;
    values.reserve(s.pairs.size());
    for (const auto& [xi, fi] : s.pairs) values.push_back(std::abs(fi.dot(x)));
    std::sort(values.begin(), values.end(), std::greater<>());
    return values[0] + values[1];
}

namespace {

double phiRenormNu(const CoordVector& x, const BiorthogonalSystem& s, double eps) {
    // max over pairs of Phi(|<f_i,x>|, |<f_k,x>|); Phi is monotone in each
    // argument, so the two largest functional values attain the max.
    std::vector<double> values;
    values.reserve(s.pairs.size());
    for (const auto& [xi, fi] : s.pairs) values.push_back(std::abs(fi.dot(x)));
    std::sort(values.begin(), values.end(), std::greater<>());
    return phi(values[0], values[1], eps);
}

}  // namespace

double norm(const CoordVector& x, const NormDescriptor& d) {
    switch (d.kind()) {
        case NormDescriptor::Kind::Lp: {
            const double p = d.p();
            if (p == 1.0) {
                double sum = 0.0;
                for (const auto& [i, v] : x.entries()) sum += std::abs(v);
                return sum;
            }
            if (p == 2.0) {
                double sum = 0.0;
                for (const auto& [i, v] : x.entries()) sum += v * v;
                return std::sqrt(sum);
            }
            double sum = 0.0;
            for (const auto& [i, v] : x.entries()) sum += std::pow(std::abs(v), p);
            return std::pow(sum, 1.0 / p);
        }
        case NormDescriptor::Kind::Sup: {
            double best = 0.0;
            for (const auto& [i, v] : x.entries()) best = std::max(best, std::abs(v));
            return best;
        }
        case NormDescriptor::Kind::Tsirelson:
            return tsirelsonNorm(x);
        case NormDescriptor::Kind::AuerbachRenorm:
            return std::max(norm(x, d.base()), x.isZero() ? 0.0 : auerbachRenormNu(x, d.system()));
        case NormDescriptor::Kind::PhiRenorm:
            return std::max(norm(x, d.base()),
                            x.isZero() ? 0.0 : phiRenormNu(x, d.system(), d.eps()));
        case NormDescriptor::Kind::MaxOf: {
            double best = 0.0;
            for (const auto& part : d.parts()) best = std::max(best, norm(x, part));
            return best;
        }
    }
    throw std::logic_error("norm: unknown descriptor kind");
}

namespace {

// Maximises <f, y> / norm(y) over y supported on `support` by multi-start
// perturbation ascent. Deterministic: fixed internal seed.
double maximizeRatio(const CoordVector& f, const NormDescriptor& d, const std::vector<int>& support,
                     int restarts, int iterations,
                     const std::vector<CoordVector>& extraStarts = {}) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double best = 0.0;
    const int total = restarts + static_cast<int>(extraStarts.size());
    for (int r = 0; r < total; ++r) {
        CoordVector y;
        if (r < static_cast<int>(extraStarts.size())) {
            y = extraStarts[static_cast<std::size_t>(r)];
        } else if (r == static_cast<int>(extraStarts.size())) {
            y = f;  // the l2-duality guess is often close
        } else {
            for (int idx : support) y.set(idx, gauss(rng));
        }
        double ny = norm(y, d);
        if (ny == 0.0) continue;
        double value = f.dot(y) / ny;
        double sigma = 0.5;
        for (int it = 0; it < iterations && sigma > 1e-10; ++it) {
            CoordVector cand = y;
            for (int idx : support) cand.set(idx, cand.coeff(idx) + sigma * gauss(rng));
            const double ncand = norm(cand, d);
            if (ncand == 0.0) continue;
            const double candValue = f.dot(cand) / ncand;
            if (candValue > value) {
                y = cand;
                value = candValue;
            } else {
                sigma *= 0.9;
            }
        }
        best = std::max(best, value);
    }
    return best;
}

}  // namespace

double dualNorm(const CoordVector& f, const NormDescriptor& d) {
    if (f.isZero()) return 0.0;
    switch (d.kind()) {
        case NormDescriptor::Kind::Lp: {
            const double p = d.p();
            if (p == 1.0) return norm(f, NormDescriptor::sup());
            const double q = p / (p - 1.0);
            return norm(f, NormDescriptor::lp(q));
        }
        case NormDescriptor::Kind::Sup:
            return norm(f, NormDescriptor::lp(1.0));
        default:
            return maximizeRatio(f, d, f.support(), 48, 400);
    }
}

Functional normingFunctional(const CoordVector& x, const NormDescriptor& d) {
    if (x.isZero()) throw std::invalid_argument("normingFunctional: x must be non-zero");
    const double nx = norm(x, d);
    switch (d.kind()) {
        case NormDescriptor::Kind::Lp: {
            const double p = d.p();
            CoordVector f;
            if (p == 1.0) {
                for (const auto& [i, v] : x.entries()) f.set(i, v > 0.0 ? 1.0 : -1.0);
            } else {
                for (const auto& [i, v] : x.entries())
                    f.set(i, (v > 0.0 ? 1.0 : -1.0) * std::pow(std::abs(v) / nx, p - 1.0));
            }
            return Functional{std::move(f), 1.0};
        }
        case NormDescriptor::Kind::Sup: {
            // Lexicographically smallest coordinate attaining the max.
            int bestIndex = 0;
            for (const auto& [i, v] : x.entries()) {
                if (std::abs(v) == nx) {
                    bestIndex = i;
                    break;
                }
            }
            CoordVector f;
            f.set(bestIndex, x.coeff(bestIndex) > 0.0 ? 1.0 : -1.0);
            return Functional{std::move(f), 1.0};
        }
        default: {
            // Central finite differences on the support, step 1e-6, then one
            // normalisation by the (numerically estimated) dual norm.
            const double h = 1e-6;
            CoordVector g;
            for (int idx : x.support()) {
                CoordVector plus = x, minus = x;
                plus.set(idx, plus.coeff(idx) + h);
                minus.set(idx, minus.coeff(idx) - h);
                g.set(idx, (norm(plus, d) - norm(minus, d)) / (2.0 * h));
            }
            const double action = g.dot(x);
            if (action <= 0.0) throw std::runtime_error("normingFunctional: degenerate subgradient");
            CoordVector f = (nx / action) * g;  // <f, x> = ||x|| exactly
            // Certify: the dual norm of f must be 1. The supremum of
            // <f,y>/||y|| is attained at y = x for a true subgradient, so we
            // seed the maximiser there.
            const double dual = maximizeRatio(f, d, f.support(), 32, 300, {x});
            if (std::abs(dual - 1.0) > 1e-6)
                throw std::runtime_error("normingFunctional: subgradient certificate failed");
            return Functional{std::move(f), 1.0};
        }
    }
}

void verifyAuerbach(const BiorthogonalSystem& s, const NormDescriptor& base, double tol) {
    s.validateBiorthogonality();
    for (const auto& [xi, fi] : s.pairs) {
        if (std::abs(norm(xi, base) - 1.0) > tol)
            throw std::invalid_argument("verifyAuerbach: ||x_i|| != 1");
        if (std::abs(dualNorm(fi, base) - 1.0) > tol)
            throw std::invalid_argument("verifyAuerbach: dual norm of f_i != 1");
    }
}

}  // namespace symsep
