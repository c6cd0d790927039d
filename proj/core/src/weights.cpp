#include "wps/weights.hpp"

#include "wps/piecewise.hpp"

#include <algorithm>
#include <set>

namespace wps {

WeightVector normalize(const WeightVector& chi) {
    validate_weight_vector(chi);
    WeightVector w = chi;
    const Int g = gcd_all(w);
    for (Int& x : w) x /= g;
    for (const Int& p : primes_dividing(w)) {
        // Remove p while it divides every weight but one.
        while (true) {
            std::size_t coprime_count = 0, coprime_index = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] % p != 0) {
                    ++coprime_count;
                    coprime_index = i;
                }
            if (coprime_count != 1) break;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (i != coprime_index) w[i] /= p;
        }
    }
    return w;
}

bool is_normalized(const WeightVector& chi) { return normalize(chi) == chi; }

AnonymizedRing anonymize(const Fan& fan, const IntMatrix& u,
                         const std::vector<std::size_t>& perm) {
    if (u.rows() != fan.dimension() || u.cols() != fan.dimension())
        throw std::invalid_argument("change-of-basis matrix has wrong shape");
    if (!is_unimodular(u)) throw std::invalid_argument("matrix not unimodular");
    std::vector<bool> seen(fan.ray_count(), false);
    if (perm.size() != fan.ray_count()) throw std::invalid_argument("invalid permutation");
    for (std::size_t p : perm) {
        if (p >= perm.size() || seen[p]) throw std::invalid_argument("invalid permutation");
        seen[p] = true;
    }
    AnonymizedRing ring;
    ring.rays.reserve(fan.ray_count());
    for (std::size_t i = 0; i < fan.ray_count(); ++i)
        ring.rays.push_back(u.apply(fan.rays[perm[i]]));
    return ring;
}

namespace {

constexpr const char* kNoWeights = "no weight vector consistent with ray relations";

void validate_ring_shape(const AnonymizedRing& ring) {
    const std::size_t n1 = ring.rays.size();
    if (n1 < 2) throw std::invalid_argument(kNoWeights);
    const std::size_t n = n1 - 1;
    for (const auto& r : ring.rays)
        if (r.size() != n) throw std::invalid_argument(kNoWeights);
    for (const auto& r : ring.rays)
        if (!is_primitive(r)) throw std::invalid_argument(kNoWeights);
    for (std::size_t omit = 0; omit < n1; ++omit) {
        std::vector<LatticeVector> subset;
        for (std::size_t i = 0; i < n1; ++i)
            if (i != omit) subset.push_back(ring.rays[i]);
        if (matrix_rank(IntMatrix::from_rows(subset, n)) != n)
            throw std::invalid_argument(kNoWeights);
    }
    std::vector<Int> factors = smith_invariant_factors(IntMatrix::from_rows(ring.rays, n));
    if (factors.size() != n ||
        std::any_of(factors.begin(), factors.end(), [](const Int& d) { return d != 1; }))
        throw std::invalid_argument(kNoWeights);
}

Int content_of_components(const std::vector<Polynomial>& comps) {
    Int g = 0;
    for (const auto& c : comps) g = gcd(g, c.content());
    return g;
}

}  // namespace

WeightVector recover_weights(const AnonymizedRing& ring, std::size_t tie_choice) {
    validate_ring_shape(ring);
    const std::size_t n1 = ring.rays.size();

    // The Courant functions are determined by the ray geometry; each f_i is
    // the reduced piecewise-linear function vanishing exactly on sigma_i.
    std::vector<std::vector<Polynomial>> f(n1);
    for (std::size_t i = 0; i < n1; ++i) f[i] = courant_components_from_rays(ring.rays, i);

    // Pairwise contents.  The difference f_i - f_j is globally linear, so its
    // content survives restriction; the larger of the two contents belongs to
    // the difference of the underlying Courant functions whatever the signs.
    std::vector<std::vector<Int>> content_sub(n1, std::vector<Int>(n1, 0));
    std::vector<std::vector<Int>> content_add(n1, std::vector<Int>(n1, 0));
    std::set<Int> primes;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j) {
            std::vector<Polynomial> diff, sum;
            for (std::size_t k = 0; k < n1; ++k) {
                diff.push_back(f[i][k] - f[j][k]);
                sum.push_back(f[i][k] + f[j][k]);
            }
            content_sub[i][j] = content_sub[j][i] = content_of_components(diff);
            content_add[i][j] = content_add[j][i] = content_of_components(sum);
            if (content_sub[i][j] == 0 || content_add[i][j] == 0)
                throw std::invalid_argument(kNoWeights);
            for (const auto& [p, e] : factorize(content_sub[i][j]))
                if (e > 0) primes.insert(p);
            for (const auto& [p, e] : factorize(content_add[i][j]))
                if (e > 0) primes.insert(p);
        }

    WeightVector weights(n1, 1);
    for (const Int& p : primes) {
        std::vector<std::vector<Int>> q(n1, std::vector<Int>(n1, 1));
        Int q_max = 1;
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = i + 1; j < n1; ++j) {
                q[i][j] = q[j][i] =
                    std::max(p_content(content_sub[i][j], p), p_content(content_add[i][j], p));
                q_max = std::max(q_max, q[i][j]);
            }
        if (q_max == 1) continue;
        std::vector<std::pair<std::size_t, std::size_t>> maximizers;
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = i + 1; j < n1; ++j)
                if (q[i][j] == q_max) maximizers.emplace_back(i, j);
        const auto [a, b] = maximizers[tie_choice % maximizers.size()];
        for (std::size_t i = 0; i < n1; ++i) {
            std::pair<std::size_t, std::size_t> pair{a, b};
            if (i == a || i == b) {
                // Use another maximizing pair avoiding i if one exists; the
                // weights at a maximizing pair are coprime to p either way.
                auto other = std::find_if(maximizers.begin(), maximizers.end(),
                                          [&](const auto& m) { return m.first != i && m.second != i; });
                if (other == maximizers.end()) continue;
                pair = *other;
            }
            const Int num = q[pair.first][pair.second];
            const Int den = q[i][pair.second];
            if (den == 0 || num % den != 0) throw std::invalid_argument(kNoWeights);
            weights[i] *= num / den;
        }
    }

    // The recovered vector must reproduce the defining ray relation.
    LatticeVector sum(ring.rays.front().size(), 0);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += weights[i] * ring.rays[i][k];
    if (std::any_of(sum.begin(), sum.end(), [](const Int& x) { return x != 0; }))
        throw std::invalid_argument(kNoWeights);

    std::sort(weights.begin(), weights.end());
    return weights;
}

}  // namespace wps
