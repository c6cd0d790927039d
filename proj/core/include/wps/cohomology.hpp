#pragma once

#include "wps/fan.hpp"
#include "wps/piecewise.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace wps {

// The integer k_m with c_1^m = k_m * c_m in ordinary cohomology, computed
// three independent ways that must agree:
//
//   coeff_power:    lcm(chi)^m / lcm{ prod_{i in I} chi_i : |I| = m }
//   coeff_kawasaki: per prime p, (largest p-content)^m over the product of
//                   the m largest p-contents of the weights
//   coeff_alamrani: denominators over subsets of size m+1, each divided by
//                   the gcd of its weights
//
// All take the weights as given (normalization invariance is a theorem, and
// asserted by tests rather than enforced here).
Int coeff_power(const WeightVector& chi, std::size_t m);
Int coeff_kawasaki(const WeightVector& chi, std::size_t m);
Int coeff_alamrani(const WeightVector& chi, std::size_t m);

// The positive integer multiple of c_m represented by a_I (|I| = m) when
// restricted to the fibre:
//   [ prod_{i in I} lcm{chi_i, chi_j : j not in I} ] / lcm{ prod_{j in J} chi_j : |J| = m }.
Int iota_star_coeff(const WeightVector& chi, const std::vector<std::size_t>& subset);

struct StructureConstants {
    WeightVector chi;
    std::map<std::size_t, Int> k;  // m -> k_m for 1 <= m <= n
};

// k_m by all three formulas plus an agreement flag for diagnostics.
struct StructureConstantsReport {
    StructureConstants agreed;  // power-formula values
    std::map<std::size_t, std::array<Int, 3>> per_formula;
    bool agreement = true;
};

StructureConstants structure_constants(const WeightVector& chi);
StructureConstantsReport structure_constants_checked(const WeightVector& chi);

// Generators-and-relations presentation of the equivariant cohomology ring:
// generators a_I (degree 2|I|, 1 <= |I| <= n) and b_ij (degree 2, i != j),
// subject to the product relation, the linear relations expressing each
// b_ij through a_i - a_j, and the divisibility relations defining a_I.
struct BLinearRelation {
    std::size_t i, j;
    Int coefficient;  // coefficient * b_ij = a_i - a_j
};

struct DivisibilityRelation {
    std::vector<std::size_t> subset;
    Int divisor;  // divisor * a_I = prod_{i in I} a_i
};

struct RingPresentation {
    WeightVector chi;  // normalized weights backing the coefficients
    std::vector<std::vector<std::size_t>> a_generators;  // subsets, (size, lex) order
    std::vector<std::pair<std::size_t, std::size_t>> b_generators;
    // prod_{i=0..n} a_i = 0 is always present and carries no data.
    std::vector<BLinearRelation> b_relations;
    std::vector<DivisibilityRelation> divisibility_relations;
};

RingPresentation presentation(const Fan& fan);

std::string a_generator_name(const std::vector<std::size_t>& subset);
std::string b_generator_name(std::size_t i, std::size_t j);

}  // namespace wps
