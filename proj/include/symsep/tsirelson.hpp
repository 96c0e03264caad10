#ifndef SYMSEP_TSIRELSON_HPP
#define SYMSEP_TSIRELSON_HPP

#include <vector>

#include "symsep/coord_vector.hpp"

namespace symsep {

/// Figiel-Johnson Tsirelson norm of a finitely supported vector:
/// the fixed point of
///   ||x||_0 = ||x||_inf,
///   ||x||_{m+1} = max(||x||_m, (1/2) max over admissible E_1 < ... < E_k,
///                     k <= min E_1, of sum_j ||E_j x||_m).
/// The engine enumerates interval families only (sufficient by
/// 1-unconditionality and coordinate monotonicity) with per-level memoisation.
double tsirelsonNorm(const CoordVector& x);

/// Interval of positive integers [first, last].
struct IndexInterval {
    int first = 0;
    int last = 0;
};

/// tsirelsonNorm together with an admissible interval partition attaining the
/// value at the root (empty when the sup part wins, i.e. value = ||x||_inf).
struct TsirelsonCertificate {
    double value = 0.0;
    std::vector<IndexInterval> partition;
};

TsirelsonCertificate tsirelsonCertificate(const CoordVector& x);

/// Independent brute-force verifier: enumerates admissible *subset* families
/// (not just intervals) by naive recursion, no memoisation.
/// Requires |support(x)| <= 12.
double tsirelsonOracle(const CoordVector& x);

/// Beauzamy l1-spreading-model condition at finite scale:
/// value = (1/k) ||sum_i signs_i e_{indices_i}||_T, pass iff value >= delta.
struct SpreadingCertificate {
    double value = 0.0;
    bool pass = false;
};

SpreadingCertificate l1SpreadingCertificate(const std::vector<int>& indices,
                                            const std::vector<int>& signs, double delta);

}  // namespace symsep

#endif
