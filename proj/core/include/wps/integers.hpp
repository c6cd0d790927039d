#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wps {

// Exact unbounded integers throughout; fixed-width types overflow already for
// moderate weight vectors (lcm of the weights gets raised to the m-th power).
using Int = boost::multiprecision::cpp_int;

// Violation of a mathematical contract the theory guarantees.  Seeing one of
// these means an implementation bug, not bad user input.
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// gcd of a set, 0 for the empty set.
Int gcd_all(const std::vector<Int>& values);

// lcm of a set, 1 for the empty set.
Int lcm_all(const std::vector<Int>& values);

// g = gcd(a,b) >= 0 together with x,y such that a*x + b*y = g.
Int extended_gcd(const Int& a, const Int& b, Int& x, Int& y);

// Floor division (quotient rounded toward minus infinity).
Int floor_div(const Int& a, const Int& b);

bool is_prime(const Int& p);

// Largest power of p dividing |value|, as a positive integer p^k.
// Throws std::invalid_argument for value = 0 or p not prime.
Int p_content(const Int& value, const Int& p);

// p-adic valuation of |value| (the exponent k with p_content = p^k).
int p_valuation(const Int& value, const Int& p);

// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// Ascending list of primes dividing at least one of the given nonzero values.
std::vector<Int> primes_dividing(const std::vector<Int>& values);

std::string to_string(const Int& v);

}  // namespace wps
