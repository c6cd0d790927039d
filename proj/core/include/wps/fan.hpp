#pragma once

#include "wps/integers.hpp"
#include "wps/lattice.hpp"

#include <cstddef>
#include <vector>

namespace wps {

// chi = (chi_0, ..., chi_n), all entries positive, length n+1 >= 2.
using WeightVector = std::vector<Int>;

// Throws std::invalid_argument("weights must be positive") on bad input.
void validate_weight_vector(const WeightVector& chi);

// The complete simplicial fan of a weighted projective space: n+1 rays
// v_0, ..., v_n in Z^n with sum chi_i * v_i = 0, where the maximal cone
// sigma_i is spanned by all rays except v_i.  Ray geometry is that of the
// normalized weights; the original weights are kept for the coefficient
// formulas of ordinary cohomology.
struct Fan {
    WeightVector chi;             // as given
    WeightVector chi_normalized;  // after normalization moves
    std::vector<LatticeVector> rays;

    std::size_t ray_count() const { return rays.size(); }
    std::size_t dimension() const { return rays.empty() ? 0 : rays.front().size(); }

    bool operator==(const Fan& other) const = default;
};

// Deterministic construction from the weights alone (normalizes internally,
// then completes the primitive weight vector to a lattice basis).
Fan fan_from_weights(const WeightVector& chi);

// Validates the given rays against chi and all fan invariants.
// Errors: "weight relation violated", "cone not simplicial",
//         "rays do not span lattice", "ray not primitive".
Fan fan_from_rays(std::vector<LatticeVector> rays, WeightVector chi);

// The rays whose indices are not excluded, in index order; these span the
// intersection of the maximal cones sigma_i for i in excluded.
std::vector<LatticeVector> cone_span_basis(const Fan& fan,
                                           const std::vector<std::size_t>& excluded);

}  // namespace wps
