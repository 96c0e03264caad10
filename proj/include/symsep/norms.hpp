#ifndef SYMSEP_NORMS_HPP
#define SYMSEP_NORMS_HPP

#include <memory>
#include <string>
#include <vector>

#include "symsep/coord_vector.hpp"

namespace symsep {

/// Biorthogonal family {(x_i, f_i)} with <f_i, x_j> = delta_ij; the functionals
/// act through the coordinate dot product. When `auerbach` is set the x_i are
/// unit vectors and the f_i are dual-unit under the base norm (verified
/// separately, since it needs a norm).
struct BiorthogonalSystem {
    std::vector<std::pair<CoordVector, CoordVector>> pairs;
    bool auerbach = false;

    /// Throws std::invalid_argument if <f_i, x_j> deviates from delta_ij by
    /// more than 1e-12.
    void validateBiorthogonality() const;

    /// Canonical pairs {(e_i, e_i)}_{i=1..count}; an Auerbach system for every
    /// 1-unconditional norm normalising the basis.
    static BiorthogonalSystem canonical(int count);
};

class NormDescriptor {
public:
    enum class Kind { Lp, Sup, Tsirelson, AuerbachRenorm, PhiRenorm, MaxOf };

    static NormDescriptor lp(double p);
    static NormDescriptor sup();
    static NormDescriptor tsirelson();
    static NormDescriptor auerbachRenorm(NormDescriptor base, BiorthogonalSystem system);
    static NormDescriptor phiRenorm(NormDescriptor base, BiorthogonalSystem system, double eps);
    static NormDescriptor maxOf(std::vector<NormDescriptor> parts);

    Kind kind() const { return impl_->kind; }
    double p() const { return impl_->p; }
    double eps() const { return impl_->eps; }
    const NormDescriptor& base() const { return impl_->base.front(); }
    const BiorthogonalSystem& system() const { return *impl_->system; }
    const std::vector<NormDescriptor>& parts() const { return impl_->base; }

    std::string describe() const;

private:
    struct Impl {
        Kind kind;
        double p = 0.0;
        double eps = 0.0;
        std::vector<NormDescriptor> base;  // base norm, or the MaxOf parts
        std::shared_ptr<const BiorthogonalSystem> system;
    };
    explicit NormDescriptor(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// A coordinate functional together with its dual norm value. For a norming
/// functional of x: dualNormValue == 1 and <coefficients, x> == norm(x).
struct Functional {
    CoordVector coefficients;
    double dualNormValue = 0.0;

    double apply(const CoordVector& x) const { return coefficients.dot(x); }
};

double norm(const CoordVector& x, const NormDescriptor& d);

/// nu(x) = max over stored pairs i != k of |<f_i,x>| + |<f_k,x>|.
double auerbachRenormNu(const CoordVector& x, const BiorthogonalSystem& s);

/// Phi((a,b)) = max{ ||(a,b)||_inf, (1+eps)|a+b|/2 }, 0 < eps < 1.
double phi(double alpha, double beta, double eps);

/// Dual norm of the coordinate functional f. Closed forms for Lp (the conjugate
/// exponent) and Sup (the l1 norm); otherwise multi-start maximisation of
/// <f,x>/norm(x) over vectors supported on support(f).
double dualNorm(const CoordVector& f, const NormDescriptor& d);

/// Functional f with <f,x> = norm(x) and dual norm 1. Closed forms for Lp and
/// Sup; a central finite-difference subgradient, normalised once, otherwise.
/// Throws std::runtime_error when the numerical route fails its certificates
/// (<f,x>/norm(x) and dualNorm(f) both within 1e-6 of 1).
Functional normingFunctional(const CoordVector& x, const NormDescriptor& d);

/// Checks the Auerbach property of a system under `base`: every ||x_i|| and
/// every dual norm of f_i equals 1 within tol. Throws on violation.
void verifyAuerbach(const BiorthogonalSystem& s, const NormDescriptor& base, double tol = 1e-9);

}  // namespace symsep

#endif
