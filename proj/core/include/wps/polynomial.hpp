#pragma once

#include "wps/integers.hpp"
#include "wps/lattice.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace wps {

// Exponent vector of a monomial; fixed arity within one polynomial.
using Exponents = std::vector<unsigned>;

// Graded-lexicographic order: total degree first, then lexicographic on the
// exponent tuple.  This is the canonical term order for serialization.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over the integers.  No zero coefficients
// are ever stored; the zero polynomial has an empty term map.
class Polynomial {
  public:
    using TermMap = std::map<Exponents, Int, GradedLexLess>;

    explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

    static Polynomial zero(std::size_t arity) { return Polynomial(arity); }
    static Polynomial constant(std::size_t arity, const Int& c);
    static Polynomial variable(std::size_t arity, std::size_t index);
    static Polynomial monomial(std::size_t arity, Exponents exp, const Int& coef);
    // The degree-1 polynomial with the given dual coordinates.
    static Polynomial linear_form(const LinearForm& coeffs);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Max total degree; -1 for the zero polynomial.
    int total_degree() const;

    // Coefficient of a monomial (0 if absent).
    Int coefficient(const Exponents& exp) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Int& c) const;
    bool operator==(const Polynomial& o) const = default;

    // gcd of all coefficients; 0 for the zero polynomial.
    Int content() const;

    // Exact division of every coefficient by d; throws
    // std::invalid_argument("not divisible") if any coefficient resists.
    Polynomial exact_div(const Int& d) const;

    Int evaluate(const LatticeVector& point) const;

    // Substitute x_m -> sum_k images(m,k) * t_k; the result lives in
    // images.cols() many variables t_k.
    Polynomial compose_linear(const IntMatrix& images) const;

    void add_term(const Exponents& exp, const Int& coef);

  private:
    std::size_t arity_;
    TermMap terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& p) { return p * c; }

// Substitute the generic point sum_k t_k * basis_k of the span; the result is
// a polynomial in t_1..t_|basis|, zero iff f vanishes on the span.
Polynomial restrict_to_span(const Polynomial& f, const std::vector<LatticeVector>& basis);

// Rendering with the given variable names ("6x - 4y + z^2" style).
std::string to_string(const Polynomial& f, const std::vector<std::string>& names);

// Default variable names x,y,z,w for arity <= 4, else x0,x1,...
std::vector<std::string> default_variable_names(std::size_t arity);

}  // namespace wps
