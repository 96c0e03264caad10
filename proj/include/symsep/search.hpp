#ifndef SYMSEP_SEARCH_HPP
#define SYMSEP_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symsep/norms.hpp"
#include "symsep/separation.hpp"

namespace symsep {

struct AnnealSchedule {
    double initialTemperature = 0.5;
    double cooling = 0.97;
    int steps = 2000;
};

/// Identical config + seed gives bit-identical results in sequential mode.
struct SearchConfig {
    std::uint64_t seed = 0;
    int restarts = 32;
    int window = 8;      // fresh coordinates available to a new block
    int maxIter = 2000;
    double tolOpt = 1e-6;
    AnnealSchedule anneal;
    int jobs = 1;  // restart-level parallelism; >1 keeps the deterministic reduction
};

/// Extends a strictly block-ordered, unit, symmetrically threshold-separated
/// family by one unit block supported in the next `window` coordinates, or
/// returns nullopt once the restart budget is exhausted.
std::optional<CoordVector> greedyExtension(const std::vector<CoordVector>& family,
                                           double threshold, const NormDescriptor& d,
                                           const SearchConfig& cfg);

/// Repeats greedyExtension until `targetLength` blocks or no extension.
std::vector<CoordVector> greedyChain(double threshold, const NormDescriptor& d,
                                     const SearchConfig& cfg, int targetLength);

/// State of the separated-sequence construction driven by the condition that
/// every center admits a unit companion y with ||center + y|| <= 1 inside any
/// prescribed kernel intersection.
struct XBoxTrace {
    CoordVector z;                  // ||z|| = 3/4
    Functional psi;                 // norming functional for z
    std::vector<CoordVector> ys;    // unit vectors, y_i in ker psi and ker phi_j (j < i)
    std::vector<Functional> phis;   // norming functionals for the y_i
    std::vector<double> deltas;     // delta_n = 2^{-(n+2)}
    std::vector<CoordVector> xs;    // x_1 = z + y_1, x_{n+1} = z - sum delta_i y_i + y_{n+1}
    int dim = 0;                    // ambient truncation dimension
};

/// Thrown when the kernel-constrained minimum of ||c + y|| exceeds 1 + tolOpt:
/// at this truncation the space behaves like the branch where some unit vector
/// pushes every companion outside the ball.
struct XBoxOracleFailure : std::runtime_error {
    double minimum;
    XBoxOracleFailure(double m)
        : std::runtime_error("xboxStep: oracle minimum exceeds 1 + tolOpt"), minimum(m) {}
};

XBoxTrace xboxInit(const NormDescriptor& d, int dim);
XBoxTrace xboxInit(const NormDescriptor& d, int dim, const CoordVector& z);
void xboxStep(XBoxTrace& trace, const NormDescriptor& d, const SearchConfig& cfg);

/// Cutoff N such that sampled x in span(E) and v supported beyond N satisfy
/// ||x|| <= (1+eps) ||x+v||; certificate carries the worst sampled ratio.
struct MazurCutoff {
    int cutoff = 0;
    double worstRatio = 0.0;
};

MazurCutoff mazurSubspace(const std::vector<CoordVector>& E, double eps, const NormDescriptor& d,
                          const SearchConfig& cfg);

/// Interval estimate [lower, upper] of the norm of the j-th canonical
/// projection on span(blocks), j counted 1-based over the leading blocks.
std::pair<double, double> projectionNorm(const std::vector<CoordVector>& blocks, int j,
                                         const NormDescriptor& d, const SearchConfig& cfg);

/// Annealing plus max-min ascent over families of n unit vectors in the
/// dim-truncation, maximising the smallest pairwise symmetric distance.
SeparationReport empiricalKottman(const NormDescriptor& d, int dim, int nPoints,
                                  const SearchConfig& cfg);

}  // namespace symsep

#endif
