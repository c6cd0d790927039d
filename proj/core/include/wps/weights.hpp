#pragma once

#include "wps/fan.hpp"
#include "wps/lattice.hpp"

#include <cstddef>
#include <vector>

namespace wps {

// Divides chi by its gcd, then repeatedly removes any prime dividing every
// weight except one.  Order-preserving and idempotent; afterwards every
// prime fails to divide at least two of the weights.
WeightVector normalize(const WeightVector& chi);

bool is_normalized(const WeightVector& chi);

// A weighted-projective fan with the weights stripped: rays after an
// undisclosed unimodular change of basis and permutation of cone indices.
struct AnonymizedRing {
    std::vector<LatticeVector> rays;
};

// Transform the fan's rays by the unimodular matrix u, permute the cone
// indices by perm, and drop the weights.
AnonymizedRing anonymize(const Fan& fan, const IntMatrix& u, const std::vector<std::size_t>& perm);

// Reconstructs the normalized weights, sorted ascending, from the ring data
// alone: builds the Courant functions of the anonymized fan, reads off the
// per-prime contents of their pairwise differences, and assembles the weight
// of each cone index multiplicatively over the primes.
//
// tie_choice selects among the maximizing index pairs when several achieve
// the maximal content for some prime (they all yield the same weights; the
// parameter exists so tests can sweep the choice).
WeightVector recover_weights(const AnonymizedRing& ring, std::size_t tie_choice = 0);

}  // namespace wps
