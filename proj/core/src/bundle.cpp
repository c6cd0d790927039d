#include "wps/bundle.hpp"

#include <algorithm>

namespace wps {

PullbackFan make_pullback_fan(const Fan& base) {
    PullbackFan pfan;
    pfan.u = base.chi_normalized;
    pfan.projection = IntMatrix::from_columns(base.rays, base.dimension());
    LatticeVector qu = pfan.projection.apply(pfan.u);
    if (std::any_of(qu.begin(), qu.end(), [](const Int& x) { return x != 0; }))
        throw contract_error("projection does not kill the weight vector");
    pfan.base = base;
    return pfan;
}

PullbackPP::PullbackPP(PullbackFan fan, std::vector<Polynomial> components, bool do_validate)
    : fan_(std::move(fan)), components_(std::move(components)) {
    const std::size_t n1 = fan_.base.ray_count();
    if (components_.size() != n1)
        throw std::invalid_argument("one component per maximal cone required");
    for (const auto& c : components_)
        if (c.arity() != n1)
            throw std::invalid_argument("component arity must match ambient rank");
    if (do_validate) validate();
}

PullbackPP PullbackPP::zero(const PullbackFan& fan) {
    const std::size_t n1 = fan.base.ray_count();
    return PullbackPP(fan, std::vector<Polynomial>(n1, Polynomial::zero(n1)), false);
}

bool PullbackPP::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

bool PullbackPP::is_global() const {
    return std::all_of(components_.begin(), components_.end(),
                       [&](const Polynomial& p) { return p == components_.front(); });
}

void PullbackPP::validate() const {
    const std::size_t n1 = fan_.base.ray_count();
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j) {
            Polynomial diff = components_[i] - components_[j];
            if (diff.is_zero()) continue;
            // The common face is spanned by the e_k with k != i,j plus u.
            std::vector<LatticeVector> span;
            for (std::size_t k = 0; k < n1; ++k) {
                if (k == i || k == j) continue;
                LatticeVector e(n1, 0);
                e[k] = 1;
                span.push_back(std::move(e));
            }
            span.push_back(fan_.u);
            if (!restrict_to_span(diff, span).is_zero())
                throw contract_error("pullback components do not glue along facets");
        }
}

PullbackPP PullbackPP::operator+(const PullbackPP& o) const {
    if (fan_.base != o.fan_.base) throw std::invalid_argument("fan mismatch");
    std::vector<Polynomial> out;
    out.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i)
        out.push_back(components_[i] + o.components_[i]);
    return PullbackPP(fan_, std::move(out), false);
}

PullbackPP PullbackPP::operator-(const PullbackPP& o) const {
    if (fan_.base != o.fan_.base) throw std::invalid_argument("fan mismatch");
    std::vector<Polynomial> out;
    out.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i)
        out.push_back(components_[i] - o.components_[i]);
    return PullbackPP(fan_, std::move(out), false);
}

PullbackPP PullbackPP::operator*(const PullbackPP& o) const {
    if (fan_.base != o.fan_.base) throw std::invalid_argument("fan mismatch");
    std::vector<Polynomial> out;
    out.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i)
        out.push_back(components_[i] * o.components_[i]);
    return PullbackPP(fan_, std::move(out), false);
}

PullbackPP pullback(const PullbackFan& pfan, const PiecewisePolynomial& f) {
    if (f.fan() != pfan.base) throw std::invalid_argument("fan mismatch");
    std::vector<Polynomial> out;
    out.reserve(f.components().size());
    for (const auto& c : f.components()) out.push_back(c.compose_linear(pfan.projection));
    return PullbackPP(pfan, std::move(out));
}

PullbackPP xi_class(const PullbackFan& pfan) {
    const WeightVector& chi = pfan.base.chi_normalized;
    const std::size_t n1 = chi.size();
    const Int l = lcm_all(chi);
    std::vector<Polynomial> comps;
    comps.reserve(n1);
    for (std::size_t i = 0; i < n1; ++i)
        comps.push_back(Polynomial::variable(n1, i) * Int(-l / chi[i]));
    return PullbackPP(pfan, std::move(comps));
}

PullbackPP chern_product(const PullbackFan& pfan) {
    const WeightVector& chi = pfan.base.chi_normalized;
    const std::size_t n1 = chi.size();
    const Int l = lcm_all(chi);
    const PullbackPP xi = xi_class(pfan);
    PullbackPP product(pfan, std::vector<Polynomial>(n1, Polynomial::constant(n1, 1)), false);
    for (std::size_t i = 0; i < n1; ++i) {
        Polynomial term = Polynomial::variable(n1, i) * Int(l / chi[i]);
        std::vector<Polynomial> factor_comps;
        factor_comps.reserve(n1);
        for (std::size_t j = 0; j < n1; ++j) factor_comps.push_back(term + xi.component(j));
        product = product * PullbackPP(pfan, std::move(factor_comps), false);
    }
    if (!product.is_zero()) throw contract_error("chern relation violated");
    return product;
}

bool verify_pullback_identity(const PullbackFan& pfan, std::size_t i) {
    const WeightVector& chi = pfan.base.chi_normalized;
    const std::size_t n1 = chi.size();
    if (i >= n1) throw std::invalid_argument("cone index out of range");
    const Int l = lcm_all(chi);
    PullbackPP lifted = pullback(pfan, courant(pfan.base, i));
    Polynomial term = Polynomial::variable(n1, i) * Int(l / chi[i]);
    const PullbackPP xi = xi_class(pfan);
    for (std::size_t j = 0; j < n1; ++j)
        if (lifted.component(j) != term + xi.component(j)) return false;
    return true;
}

}  // namespace wps
