#pragma once

#include "wps/bundle.hpp"
#include "wps/cohomology.hpp"
#include "wps/fan.hpp"
#include "wps/piecewise.hpp"
#include "wps/polynomial.hpp"
#include "wps/weights.hpp"

#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace wps::test {

inline long rand_range(std::mt19937_64& gen, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
}

inline Int rand_nonzero(std::mt19937_64& gen, long bound) {
    long v = 0;
    while (v == 0) v = rand_range(gen, -bound, bound);
    return Int(v);
}

inline WeightVector random_chi(std::mt19937_64& gen, std::size_t length, long max_weight) {
    WeightVector chi(length);
    for (auto& w : chi) w = rand_range(gen, 1, max_weight);
    return chi;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& gen, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen);
    return perm;
}

// A unimodular matrix together with its inverse, as a product of at most
// `ops` elementary row operations with small shear factors.
inline std::pair<IntMatrix, IntMatrix> random_unimodular_pair(std::mt19937_64& gen,
                                                              std::size_t n, int ops = 10,
                                                              long shear_bound = 3) {
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix inv = IntMatrix::identity(n);
    if (n < 2) return {u, inv};
    for (int s = 0; s < ops; ++s) {
        switch (rand_range(gen, 0, 2)) {
            case 0: {  // row_j += k * row_i on u; col_i -= k * col_j on inv
                std::size_t i = rand_range(gen, 0, n - 1), j = i;
                while (j == i) j = static_cast<std::size_t>(rand_range(gen, 0, n - 1));
                Int k = rand_nonzero(gen, shear_bound);
                for (std::size_t c = 0; c < n; ++c) u(j, c) += k * u(i, c);
                for (std::size_t r = 0; r < n; ++r) inv(r, i) -= k * inv(r, j);
                break;
            }
            case 1: {  // swap rows on u; swap columns on inv
                std::size_t i = rand_range(gen, 0, n - 1), j = i;
                while (j == i) j = static_cast<std::size_t>(rand_range(gen, 0, n - 1));
                for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
                for (std::size_t r = 0; r < n; ++r) std::swap(inv(r, i), inv(r, j));
                break;
            }
            default: {  // negate row on u; negate column on inv
                std::size_t i = rand_range(gen, 0, n - 1);
                for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
                for (std::size_t r = 0; r < n; ++r) inv(r, i) = -inv(r, i);
                break;
            }
        }
    }
    return {u, inv};
}

inline Fan transformed_fan(const Fan& fan, const IntMatrix& u) {
    std::vector<LatticeVector> rays;
    rays.reserve(fan.ray_count());
    for (const auto& r : fan.rays) rays.push_back(u.apply(r));
    return fan_from_rays(std::move(rays), fan.chi);
}

// Transport of a component polynomial along the change of basis v -> U v:
// substitute the old coordinates by their expressions in the new ones.
inline Polynomial transport_component(const Polynomial& f, const IntMatrix& u_inverse) {
    return f.compose_linear(u_inverse);
}

inline PiecewisePolynomial transport_pp(const PiecewisePolynomial& f, const Fan& target,
                                        const IntMatrix& u_inverse) {
    std::vector<Polynomial> comps;
    comps.reserve(f.components().size());
    for (const auto& c : f.components()) comps.push_back(transport_component(c, u_inverse));
    return PiecewisePolynomial(target, std::move(comps));
}

inline Polynomial random_polynomial(std::mt19937_64& gen, std::size_t arity, int max_terms,
                                    unsigned max_exp = 3, long coef_bound = 20) {
    Polynomial p(arity);
    int terms = static_cast<int>(rand_range(gen, 1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Exponents e(arity);
        for (auto& q : e) q = static_cast<unsigned>(rand_range(gen, 0, max_exp));
        p.add_term(e, Int(rand_range(gen, -coef_bound, coef_bound)));
    }
    return p;
}

}  // namespace wps::test
