#pragma once

#include "wps/fan.hpp"
#include "wps/piecewise.hpp"

#include <cstddef>
#include <vector>

namespace wps {

// The pullback of a weighted-projective fan under the quotient projection
// Z^(n+1) -> Z^n with e_i -> v_i.  Every cone of the pullback contains the
// line through u = sum chi_i e_i (normalized weights), so the cones are
// again indexed by the omitted ray, and compatibility spans pick up u.
struct PullbackFan {
    Fan base;
    LatticeVector u;      // sum chi_i e_i in Z^(n+1)
    IntMatrix projection; // n x (n+1), columns are the base rays; Q u = 0
};

PullbackFan make_pullback_fan(const Fan& base);

// Piecewise polynomial on the pullback fan: components in the n+1 dual
// variables x_0..x_n, identified with the Chern classes of the line-bundle
// summands.
class PullbackPP {
  public:
    PullbackPP(PullbackFan fan, std::vector<Polynomial> components, bool validate = true);

    static PullbackPP zero(const PullbackFan& fan);

    const PullbackFan& fan() const { return fan_; }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(std::size_t i) const { return components_.at(i); }

    bool is_zero() const;
    bool is_global() const;
    void validate() const;

    PullbackPP operator+(const PullbackPP& o) const;
    PullbackPP operator-(const PullbackPP& o) const;
    PullbackPP operator*(const PullbackPP& o) const;
    bool operator==(const PullbackPP& o) const = default;

  private:
    PullbackFan fan_;
    std::vector<Polynomial> components_;
};

// Composition with the projection; an injective ring homomorphism.
PullbackPP pullback(const PullbackFan& pfan, const PiecewisePolynomial& f);

// The class with xi(u) = -lcm(chi) and xi(e_i) = 0: component i is
// -(lcm(chi)/chi_i) x_i.  The weighted analogue of the hyperplane class.
PullbackPP xi_class(const PullbackFan& pfan);

// prod_i (xi + (lcm(chi)/chi_i) x_i); the product must vanish identically.
// Throws contract_error("chern relation violated") otherwise.
PullbackPP chern_product(const PullbackFan& pfan);

// Checks pullback(a_i) = (lcm(chi)/chi_i) x_i + xi componentwise.
bool verify_pullback_identity(const PullbackFan& pfan, std::size_t i);

}  // namespace wps
