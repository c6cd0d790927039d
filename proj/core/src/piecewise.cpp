#include "wps/piecewise.hpp"

#include <algorithm>

namespace wps {

PiecewisePolynomial::PiecewisePolynomial(Fan fan, std::vector<Polynomial> components,
                                         bool do_validate)
    : fan_(std::move(fan)), components_(std::move(components)) {
    if (components_.size() != fan_.ray_count())
        throw std::invalid_argument("one component per maximal cone required");
    for (const auto& c : components_)
        if (c.arity() != fan_.dimension())
            throw std::invalid_argument("component arity must match fan dimension");
    if (do_validate) validate();
}

PiecewisePolynomial PiecewisePolynomial::zero(const Fan& fan) {
    return PiecewisePolynomial(fan, std::vector<Polynomial>(fan.ray_count(),
                                                            Polynomial::zero(fan.dimension())),
                               false);
}

bool PiecewisePolynomial::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

bool PiecewisePolynomial::is_global() const {
    return std::all_of(components_.begin(), components_.end(),
                       [&](const Polynomial& p) { return p == components_.front(); });
}

void PiecewisePolynomial::validate() const {
    const std::size_t n1 = fan_.ray_count();
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j) {
            Polynomial diff = components_[i] - components_[j];
            if (diff.is_zero()) continue;
            if (!restrict_to_span(diff, cone_span_basis(fan_, {i, j})).is_zero())
                throw contract_error("piecewise components do not glue along facets");
        }
}

Int PiecewisePolynomial::value_at_ray(std::size_t k) const {
    if (k >= fan_.ray_count()) throw std::invalid_argument("ray index out of range");
    // v_k lies in sigma_j for every j != k.
    std::size_t j = (k == 0) ? 1 : 0;
    return components_[j].evaluate(fan_.rays[k]);
}

PiecewisePolynomial pp_arith(const PiecewisePolynomial& f, const PiecewisePolynomial& g,
                             PPOp op) {
    if (f.fan() != g.fan()) throw std::invalid_argument("fan mismatch");
    std::vector<Polynomial> out;
    out.reserve(f.components().size());
    for (std::size_t i = 0; i < f.components().size(); ++i) {
        switch (op) {
            case PPOp::add: out.push_back(f.component(i) + g.component(i)); break;
            case PPOp::sub: out.push_back(f.component(i) - g.component(i)); break;
            case PPOp::mul: out.push_back(f.component(i) * g.component(i)); break;
        }
    }
#ifdef NDEBUG
    constexpr bool validate = false;
#else
    constexpr bool validate = true;
#endif
    return PiecewisePolynomial(f.fan(), std::move(out), validate);
}

Int pp_content(const PiecewisePolynomial& f) {
    Int g = 0;
    for (const auto& c : f.components()) g = gcd(g, c.content());
    return g;
}

LinearForm b_form_from_rays(const std::vector<LatticeVector>& rays, std::size_t i,
                            std::size_t j) {
    const std::size_t n1 = rays.size();
    if (i >= n1 || j >= n1) throw std::invalid_argument("ray index out of range");
    if (i == j) throw std::invalid_argument("b-form requires distinct indices");
    const std::size_t n = rays.front().size();
    std::vector<LatticeVector> conditions;
    for (std::size_t k = 0; k < n1; ++k)
        if (k != i && k != j) conditions.push_back(rays[k]);
    std::vector<LatticeVector> kernel = kernel_basis(IntMatrix::from_rows(conditions, n));
    if (kernel.size() != 1)
        throw contract_error("vanishing conditions do not cut out a rank-1 kernel");
    LinearForm form = kernel.front();
    Int value = dot(form, rays[i]);
    if (value == 0) throw contract_error("b-form degenerate on its positive ray");
    if (value < 0)
        for (Int& c : form) c = -c;
    return form;
}

LinearForm b_form(const Fan& fan, std::size_t i, std::size_t j) {
    LinearForm form = b_form_from_rays(fan.rays, i, j);
    // The value on v_i is forced by the weight relation.
    const WeightVector& chi = fan.chi_normalized;
    if (dot(form, fan.rays[i]) != chi[j] / gcd(chi[i], chi[j]))
        throw contract_error("b-form value does not match weight ratio");
    return form;
}

PiecewisePolynomial courant(const Fan& fan, std::size_t i) {
    const std::size_t n1 = fan.ray_count();
    if (i >= n1) throw std::invalid_argument("cone index out of range");
    const WeightVector& chi = fan.chi_normalized;
    const Int l = lcm_all(chi);
    std::vector<Polynomial> comps;
    comps.reserve(n1);
    for (std::size_t j = 0; j < n1; ++j) {
        if (j == i) {
            comps.push_back(Polynomial::zero(fan.dimension()));
            continue;
        }
        LinearForm b = b_form(fan, i, j);
        LinearForm scaled(b.size());
        const Int scale = l / lcm(chi[i], chi[j]);
        for (std::size_t k = 0; k < b.size(); ++k) scaled[k] = scale * b[k];
        comps.push_back(Polynomial::linear_form(scaled));
    }
    PiecewisePolynomial a(fan, std::move(comps));
    // Definitional characterization: reduced, vanishing on sigma_i, positive
    // on v_i with the forced value.
    if (pp_content(a) != 1) throw contract_error("Courant function not reduced");
    if (a.value_at_ray(i) != l / chi[i])
        throw contract_error("Courant function has wrong value on its ray");
    return a;
}

std::vector<Polynomial> courant_components_from_rays(const std::vector<LatticeVector>& rays,
                                                     std::size_t i) {
    const std::size_t n1 = rays.size();
    const std::size_t n = rays.front().size();
    // Facet compatibility forces c_j * b_ij(v_i) to be a constant C over all
    // j != i; the least choice of C makes the function reduced.
    std::vector<LinearForm> forms(n1);
    std::vector<Int> values(n1);
    Int c = 1;
    for (std::size_t j = 0; j < n1; ++j) {
        if (j == i) continue;
        forms[j] = b_form_from_rays(rays, i, j);
        values[j] = dot(forms[j], rays[i]);
        c = lcm(c, values[j]);
    }
    std::vector<Polynomial> comps;
    comps.reserve(n1);
    for (std::size_t j = 0; j < n1; ++j) {
        if (j == i) {
            comps.push_back(Polynomial::zero(n));
            continue;
        }
        const Int scale = c / values[j];
        LinearForm scaled(forms[j].size());
        for (std::size_t k = 0; k < forms[j].size(); ++k) scaled[k] = scale * forms[j][k];
        comps.push_back(Polynomial::linear_form(scaled));
    }
    return comps;
}

PiecewisePolynomial global_polynomial(const Fan& fan, const Polynomial& p) {
    return PiecewisePolynomial(fan, std::vector<Polynomial>(fan.ray_count(), p), false);
}

PiecewisePolynomial global_linear(const Fan& fan, const LinearForm& form) {
    if (form.size() != fan.dimension())
        throw std::invalid_argument("linear form rank must match fan dimension");
    return global_polynomial(fan, Polynomial::linear_form(form));
}

namespace {

void validate_subset(const std::vector<std::size_t>& subset, std::size_t n1) {
    if (subset.empty()) throw std::invalid_argument("index subset must be nonempty");
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] >= n1) throw std::invalid_argument("index subset out of range");
        if (k > 0 && subset[k] <= subset[k - 1])
            throw std::invalid_argument("index subset must be strictly increasing");
    }
}

}  // namespace

Int divisor_coefficient(const WeightVector& chi, const std::vector<std::size_t>& subset) {
    validate_weight_vector(chi);
    validate_subset(subset, chi.size());
    const Int l = lcm_all(chi);
    Int d = 1;
    for (std::size_t i : subset) {
        Int inner = chi[i];
        for (std::size_t j = 0; j < chi.size(); ++j)
            if (std::find(subset.begin(), subset.end(), j) == subset.end())
                inner = lcm(inner, chi[j]);
        d *= l / inner;
    }
    return d;
}

PiecewisePolynomial a_subset(const Fan& fan, const std::vector<std::size_t>& subset) {
    validate_subset(subset, fan.ray_count());
    PiecewisePolynomial product = global_polynomial(fan, Polynomial::constant(fan.dimension(), 1));
    for (std::size_t i : subset) product = product * courant(fan, i);
    const Int d = divisor_coefficient(fan.chi_normalized, subset);
    std::vector<Polynomial> quotient;
    quotient.reserve(product.components().size());
    for (const auto& c : product.components()) {
        try {
            quotient.push_back(c.exact_div(d));
        } catch (const std::invalid_argument&) {
            throw contract_error("product of Courant functions not divisible by its divisor");
        }
    }
    return PiecewisePolynomial(fan, std::move(quotient), false);
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n_plus_1, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    if (size > n_plus_1) return out;
    std::vector<std::size_t> cur(size);
    for (std::size_t k = 0; k < size; ++k) cur[k] = k;
    while (true) {
        out.push_back(cur);
        bool advanced = false;
        for (std::size_t k = size; k-- > 0;) {
            if (cur[k] + (size - k) < n_plus_1) {
                ++cur[k];
                for (std::size_t m = k + 1; m < size; ++m) cur[m] = cur[m - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n_plus_1,
                                                       std::size_t max_size) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t size = 1; size <= max_size && size <= n_plus_1; ++size)
        for (auto& s : subsets_of_size(n_plus_1, size)) out.push_back(std::move(s));
    return out;
}

}  // namespace wps
