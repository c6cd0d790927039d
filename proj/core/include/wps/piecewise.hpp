#pragma once

#include "wps/fan.hpp"
#include "wps/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace wps {

// An element of the ring PP[Sigma] of integral piecewise polynomials on a
// weighted-projective fan: one polynomial component per maximal cone, where
// component i is the polynomial coinciding with the function on sigma_i
// (the cone spanned by all rays except v_i).  Components of a valid element
// agree on the common facets of any two maximal cones.
class PiecewisePolynomial {
  public:
    PiecewisePolynomial(Fan fan, std::vector<Polynomial> components, bool validate = true);

    static PiecewisePolynomial zero(const Fan& fan);

    const Fan& fan() const { return fan_; }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(std::size_t i) const { return components_.at(i); }

    bool is_zero() const;
    // Global means all components are equal as polynomials.
    bool is_global() const;

    // Facet compatibility of all component pairs; throws contract_error on
    // violation.
    void validate() const;

    // Value at the ray v_k (well-defined by compatibility; uses any maximal
    // cone containing the ray).
    Int value_at_ray(std::size_t k) const;

    bool operator==(const PiecewisePolynomial& o) const = default;

  private:
    Fan fan_;
    std::vector<Polynomial> components_;
};

enum class PPOp { add, sub, mul };

// Componentwise ring arithmetic; the fans must agree.
PiecewisePolynomial pp_arith(const PiecewisePolynomial& f, const PiecewisePolynomial& g, PPOp op);

inline PiecewisePolynomial operator+(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
    return pp_arith(f, g, PPOp::add);
}
inline PiecewisePolynomial operator-(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
    return pp_arith(f, g, PPOp::sub);
}
inline PiecewisePolynomial operator*(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
    return pp_arith(f, g, PPOp::mul);
}

// gcd of all coefficients across all components; an element is reduced
// (divisible by no rational prime) iff this is 1.
Int pp_content(const PiecewisePolynomial& f);

// The reduced linear form positive on v_i and vanishing on all v_k with
// i != k != j, computed as the primitive generator of a rank-1 kernel.
LinearForm b_form(const Fan& fan, std::size_t i, std::size_t j);

// Same, from the rays alone (no weight data needed); used when recovering
// weights from an anonymized ring.
LinearForm b_form_from_rays(const std::vector<LatticeVector>& rays, std::size_t i, std::size_t j);

// The Courant function a_i: the reduced piecewise-linear function positive
// on v_i and vanishing on all other rays (so its component on sigma_i is 0).
// Computed by the closed formula from the b-forms and the normalized
// weights, then verified against the definitional characterization.
PiecewisePolynomial courant(const Fan& fan, std::size_t i);

// The Courant function reconstructed from the ray geometry alone: the
// component scalars are forced by facet compatibility, and the minimal
// common rescaling makes the result reduced.
std::vector<Polynomial> courant_components_from_rays(const std::vector<LatticeVector>& rays,
                                                     std::size_t i);

// The global piecewise polynomial all of whose components equal the form.
PiecewisePolynomial global_linear(const Fan& fan, const LinearForm& form);
PiecewisePolynomial global_polynomial(const Fan& fan, const Polynomial& p);

// d_I = prod_{i in I} lcm(chi) / lcm{chi_i, chi_j : j not in I}; the
// guaranteed divisor of prod_{i in I} a_i.  For the full index set the
// inner lcm degenerates to chi_i.
Int divisor_coefficient(const WeightVector& chi, const std::vector<std::size_t>& subset);

// a_I: the exact quotient of prod_{i in I} a_i by d_I (normalized weights).
PiecewisePolynomial a_subset(const Fan& fan, const std::vector<std::size_t>& subset);

// All subsets of {0..n} of the given size, lexicographically.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n_plus_1, std::size_t size);

// Nonempty subsets ordered by (size, lex); max_size caps the subset size.
std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n_plus_1,
                                                       std::size_t max_size);

}  // namespace wps
