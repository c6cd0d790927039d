#include "wps/fan.hpp"

#include "wps/weights.hpp"

#include <algorithm>

namespace wps {

void validate_weight_vector(const WeightVector& chi) {
    if (chi.size() < 2) throw std::invalid_argument("need at least two weights");
    for (const Int& w : chi)
        if (w < 1) throw std::invalid_argument("weights must be positive");
}

namespace {

LatticeVector weighted_ray_sum(const std::vector<LatticeVector>& rays, const WeightVector& chi) {
    LatticeVector sum(rays.front().size(), 0);
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += chi[i] * rays[i][k];
    return sum;
}

bool all_zero(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

Fan fan_from_weights(const WeightVector& chi) {
    validate_weight_vector(chi);
    WeightVector norm = normalize(chi);
    IntMatrix q = quotient_basis(norm);
    std::vector<LatticeVector> rays;
    rays.reserve(norm.size());
    for (std::size_t i = 0; i < norm.size(); ++i) rays.push_back(q.column(i));
    // Route through the validating constructor; construction is cold and the
    // invariants are cheap at these sizes.
    return fan_from_rays(std::move(rays), chi);
}

Fan fan_from_rays(std::vector<LatticeVector> rays, WeightVector chi) {
    validate_weight_vector(chi);
    const std::size_t n1 = chi.size();
    const std::size_t n = n1 - 1;
    if (rays.size() != n1) throw std::invalid_argument("ray count must match weight count");
    for (const auto& r : rays)
        if (r.size() != n) throw std::invalid_argument("ray rank must be one less than weight count");

    // Normalization moves can replace the ray relation of chi by that of the
    // normalized weights; the ray geometry is always the normalized one.
    WeightVector norm = normalize(chi);
    if (!all_zero(weighted_ray_sum(rays, norm)))
        throw std::invalid_argument("weight relation violated");

    for (const auto& r : rays)
        if (!is_primitive(r)) throw std::invalid_argument("ray not primitive");

    // Every n-subset of the rays must be linearly independent.
    for (std::size_t omit = 0; omit < n1; ++omit) {
        std::vector<LatticeVector> subset;
        for (std::size_t i = 0; i < n1; ++i)
            if (i != omit) subset.push_back(rays[i]);
        if (matrix_rank(IntMatrix::from_rows(subset, n)) != n)
            throw std::invalid_argument("cone not simplicial");
    }

    // ... and together they must generate the full lattice.
    std::vector<Int> factors = smith_invariant_factors(IntMatrix::from_rows(rays, n));
    if (factors.size() != n || std::any_of(factors.begin(), factors.end(),
                                           [](const Int& d) { return d != 1; }))
        throw std::invalid_argument("rays do not span lattice");

    return Fan{std::move(chi), std::move(norm), std::move(rays)};
}

std::vector<LatticeVector> cone_span_basis(const Fan& fan,
                                           const std::vector<std::size_t>& excluded) {
    for (std::size_t e : excluded)
        if (e >= fan.ray_count()) throw std::invalid_argument("cone index out of range");
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < fan.ray_count(); ++i)
        if (std::find(excluded.begin(), excluded.end(), i) == excluded.end())
            basis.push_back(fan.rays[i]);
    return basis;
}

}  // namespace wps
