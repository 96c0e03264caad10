#include "symsep/separation.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace symsep {

SeparationReport symmetricSeparation(const std::vector<CoordVector>& points,
                                     const NormDescriptor& d) {
    if (points.size() < 2)
        throw std::invalid_argument("symmetricSeparation: needs at least 2 points");
    SeparationReport report{points, d};
    report.value = std::numeric_limits<double>::infinity();
    bool strictExact = true, strictSearch = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        report.sphereResidual = std::max(report.sphereResidual, std::abs(norm(points[i], d) - 1.0));
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double diff = norm(points[i] - points[j], d);
            const double sum = norm(points[i] + points[j], d);
            const double pairValue = std::min(diff, sum);
            const int pairSign = diff <= sum ? -1 : +1;
            if (pairValue < report.value) {
                report.value = pairValue;
                report.witness = {static_cast<int>(i), static_cast<int>(j), pairSign};
            }
        }
    }
    // Strictness flags at the two reporting tolerances: does every pair
    // exceed the value strictly at that tolerance? With an exact pairwise
    // minimum the attaining pair never does, so both flags record whether the
    // minimum is isolated above `value` minus the tolerance; practically they
    // mean "no second pair sits within tol of the minimum from below".
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double pairValue = std::min(norm(points[i] - points[j], d),
                                              norm(points[i] + points[j], d));
            if (pairValue <= report.value - 1e-12) strictExact = false;
            if (pairValue <= report.value - 1e-6) strictSearch = false;
        }
    }
    report.strictAtExactTol = strictExact;
    report.strictAtSearchTol = strictSearch;
    return report;
}

std::pair<double, double> ballToSphere(const CoordVector& x, const CoordVector& y,
                                       const NormDescriptor& d) {
    if (x.isZero() || y.isZero())
        throw std::invalid_argument("ballToSphere: vectors must be non-zero");
    const double nx = norm(x, d);
    const double ny = norm(y, d);
    if (nx > 1.0 + 1e-12 || ny > 1.0 + 1e-12)
        throw std::invalid_argument("ballToSphere: vectors must lie in the unit ball");
    const double raw = norm(x - y, d);
    if (raw < 1.0 - 1e-12)
        throw std::invalid_argument("ballToSphere: requires ||x - y|| >= 1");
    const double normalized = norm((1.0 / nx) * x - (1.0 / ny) * y, d);
    return {normalized, raw};
}

Matrix Matrix::identity(int n) {
    Matrix m{n, n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const std::vector<double>& diag) {
    const int n = static_cast<int>(diag.size());
    Matrix m = identity(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = diag[static_cast<std::size_t>(i)];
    return m;
}

CoordVector Matrix::apply(const CoordVector& x) const {
    if (!x.isZero() && x.maxIndex() > cols)
        throw std::invalid_argument("Matrix::apply: vector exceeds the matrix domain");
    CoordVector out;
    for (int r = 0; r < rows; ++r) {
        double sum = 0.0;
        for (const auto& [index, value] : x.entries()) sum += at(r, index - 1) * value;
        out.set(r + 1, sum);
    }
    return out;
}

std::pair<double, double> estimateDistortion(const std::vector<CoordVector>& points,
                                             const Matrix& T, const NormDescriptor& dX,
                                             const NormDescriptor& dY, int restarts) {
    if (points.empty()) throw std::invalid_argument("estimateDistortion: empty span");
    std::mt19937_64 rng(0xd15704710aULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int m = static_cast<int>(points.size());

    auto ratioAt = [&](const std::vector<double>& coeffs) {
        CoordVector x;
        for (int i = 0; i < m; ++i) x += coeffs[static_cast<std::size_t>(i)] * points[static_cast<std::size_t>(i)];
        const double nx = norm(x, dX);
        if (nx < 1e-14) return -1.0;
        return norm(T.apply(x), dY) / nx;
    };

    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> coeffs(static_cast<std::size_t>(m));
        if (r < m) {
            coeffs[static_cast<std::size_t>(r)] = 1.0;
        } else {
            for (auto& c : coeffs) c = gauss(rng);
        }
        double value = ratioAt(coeffs);
        if (value < 0.0) continue;
        // ascend toward the max and a twin descent toward the min
        for (int direction : {+1, -1}) {
            std::vector<double> c = coeffs;
            double current = value;
            double sigma = 0.4;
            for (int it = 0; it < 200 && sigma > 1e-9; ++it) {
                std::vector<double> cand = c;
                for (auto& ci : cand) ci += sigma * gauss(rng);
                const double v = ratioAt(cand);
                if (v >= 0.0 && direction * (v - current) > 0.0) {
                    c = cand;
                    current = v;
                } else {
                    sigma *= 0.9;
                }
            }
            if (direction > 0)
                hi = std::max(hi, current);
            else
                lo = std::min(lo, current);
        }
    }
    if (!(lo > 0.0) || !std::isfinite(lo))
        throw std::invalid_argument("estimateDistortion: T not injective on the span");
    // The sampled max/min only evaluate true ratios, so hi/lo is a lower
    // estimate of the distortion; widen slightly for the reported interval.
    return {hi / lo, hi / lo * (1.0 + 1e-9)};
}

SeparationReport embedAndRenormalize(const std::vector<CoordVector>& points, const Matrix& T,
                                     const NormDescriptor& dX, const NormDescriptor& dY,
                                     double eps, int distortionRestarts) {
    if (eps <= 0.0) throw std::invalid_argument("embedAndRenormalize: eps must be positive");
    SeparationReport input = symmetricSeparation(points, dX);
    if (input.sphereResidual > 1e-9)
        throw std::invalid_argument("embedAndRenormalize: points must be unit vectors");
    if (input.value < 1.0 + eps - 1e-9)
        throw std::invalid_argument("embedAndRenormalize: family is not (1+eps)-separated");
    const auto [distLo, distHi] = estimateDistortion(points, T, dX, dY, distortionRestarts);
    if (distHi > 1.0 + eps / (2.0 + eps) + 1e-6)
        throw std::invalid_argument("embedAndRenormalize: distortion exceeds eps/(2+eps) threshold");

    std::vector<CoordVector> images;
    images.reserve(points.size());
    for (const auto& x : points) {
        CoordVector tx = T.apply(x);
        const double n = norm(tx, dY);
        if (n < 1e-14) throw std::invalid_argument("embedAndRenormalize: T annihilates a point");
        images.push_back((1.0 / n) * tx);
    }
    return symmetricSeparation(images, dY);
}

SeparationReport disjointBlockCertificate(double q, const std::vector<CoordVector>& blocks) {
    if (q < 1.0) throw std::invalid_argument("disjointBlockCertificate: q must be >= 1");
    const NormDescriptor lq = NormDescriptor::lp(q);
    std::set<int> seen;
    for (const auto& b : blocks) {
        if (std::abs(norm(b, lq) - 1.0) > 1e-9)
            throw std::invalid_argument("disjointBlockCertificate: block is not lq-unit");
        for (int idx : b.support()) {
            if (!seen.insert(idx).second)
                throw std::invalid_argument("disjointBlockCertificate: overlapping supports");
        }
    }
    return symmetricSeparation(blocks, lq);
}

bool cotypeBoundCheck(const SeparationReport& report, double q) {
    if (q < 1.0) throw std::invalid_argument("cotypeBoundCheck: q must be >= 1");
    return report.value >= std::pow(2.0, 1.0 / q) - 1e-9;
}

ConvexityWitness strictConvexityWitness(const CoordVector& x, const CoordVector& y,
                                        const NormDescriptor& d) {
    if (std::abs(norm(x, d) - 1.0) > 1e-9 || std::abs(norm(y, d) - 1.0) > 1e-9)
        throw std::invalid_argument("strictConvexityWitness: x, y must be unit vectors");
    // Linear independence of two sparse vectors: y is not a scalar multiple
    // of x (unit norms reduce this to y != +/-x).
    if (x == y || x == -y)
        throw std::invalid_argument("strictConvexityWitness: x, y must be linearly independent");
    if (std::abs(norm(x - y, d) - 2.0) > 1e-9)
        throw std::invalid_argument("strictConvexityWitness: requires ||x - y|| = 2");
    ConvexityWitness w;
    w.midpoint = 0.5 * (x - y);
    w.residual = std::abs(norm(w.midpoint, d) - 1.0);
    return w;
}

std::pair<double, double> nearUnitShiftBound(const CoordVector& a, const CoordVector& b, double eps,
                                             const NormDescriptor& d) {
    if (b.isZero()) throw std::invalid_argument("nearUnitShiftBound: b must be non-zero");
    const double nb = norm(b, d);
    if (nb < 1.0 - eps - 1e-12 || nb > 1.0 + eps + 1e-12)
        throw std::invalid_argument("nearUnitShiftBound: requires 1-eps <= ||b|| <= 1+eps");
    const double lhs = norm(a + b, d);
    const double rhs = norm(a + (1.0 / nb) * b, d) + eps;
    return {lhs, rhs};
}

}  // namespace symsep
