#ifndef SYMSEP_SEPARATION_HPP
#define SYMSEP_SEPARATION_HPP

#include <optional>
#include <vector>

#include "symsep/coord_vector.hpp"
#include "symsep/norms.hpp"

namespace symsep {

/// Witness of the attaining pair: min(||x_i - x_j||, ||x_i + x_j||) at the
/// reported sign, smallest (i, j, sign) lexicographically (sign -1 first).
struct WitnessPair {
    int i = 0;
    int j = 0;
    int sign = 0;  // -1 for ||x_i - x_j||, +1 for ||x_i + x_j||
};

struct SeparationReport {
    std::vector<CoordVector> points;
    NormDescriptor norm;
    double value = 0.0;
    WitnessPair witness;
    double sphereResidual = 0.0;  // max_i | ||x_i|| - 1 |
    bool strictAtExactTol = false;   // value attained strictly at 1e-12
    bool strictAtSearchTol = false;  // value attained strictly at 1e-6
};

/// Exact pairwise scan: value = min over unordered pairs of
/// min(||x_i - x_j||, ||x_i + x_j||).
SeparationReport symmetricSeparation(const std::vector<CoordVector>& points,
                                     const NormDescriptor& d);

/// Both sides of the ball-to-sphere inequality
/// ||x/||x|| - y/||y|||| >= ||x - y||, as (normalized, raw).
/// Preconditions ||x||, ||y|| <= 1 and ||x - y|| >= 1 are enforced.
std::pair<double, double> ballToSphere(const CoordVector& x, const CoordVector& y,
                                       const NormDescriptor& d);

/// Dense matrix acting on coordinates 1..cols, producing coordinates 1..rows.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;  // row-major

    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<double>& diag);
    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    CoordVector apply(const CoordVector& x) const;
};

/// Distortion ||T|| * ||T^-1|| of T on span(points), estimated by multi-start
/// max/min of ||Tx||_Y / ||x||_X over the span; returned as [lower, upper].
std::pair<double, double> estimateDistortion(const std::vector<CoordVector>& points,
                                             const Matrix& T, const NormDescriptor& dX,
                                             const NormDescriptor& dY, int restarts = 64);

/// Pushes a (1+eps)-symmetrically-separated unit family through T and
/// renormalises; the result is (1+eps/2)-separated when the measured
/// distortion stays below 1 + eps/(2+eps). Throws on precondition violations.
SeparationReport embedAndRenormalize(const std::vector<CoordVector>& points, const Matrix& T,
                                     const NormDescriptor& dX, const NormDescriptor& dY,
                                     double eps, int distortionRestarts = 64);

/// Disjointly supported lq-unit blocks are symmetrically 2^{1/q}-separated in
/// lq; throws on overlapping supports or non-unit blocks.
SeparationReport disjointBlockCertificate(double q, const std::vector<CoordVector>& blocks);

/// true iff report.value >= 2^{1/q} - 1e-9 (q supplied by the caller).
bool cotypeBoundCheck(const SeparationReport& report, double q);

/// Midpoint (x-y)/2 of the segment joining x and -y, with | ||m|| - 1 |;
/// requires unit, linearly independent x, y at distance 2.
struct ConvexityWitness {
    CoordVector midpoint;
    double residual = 0.0;
};

ConvexityWitness strictConvexityWitness(const CoordVector& x, const CoordVector& y,
                                        const NormDescriptor& d);

/// Both sides of ||a+b|| <= ||a + b/||b|| || + eps, valid whenever
/// 1-eps <= ||b|| <= 1+eps; returns (lhs, rhs).
std::pair<double, double> nearUnitShiftBound(const CoordVector& a, const CoordVector& b, double eps,
                                             const NormDescriptor& d);

}  // namespace symsep

#endif
