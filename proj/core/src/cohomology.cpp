#include "wps/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace wps {

namespace {

void validate_m(const WeightVector& chi, std::size_t m) {
    validate_weight_vector(chi);
    if (m < 1 || m > chi.size() - 1)
        throw std::invalid_argument("power index must lie between 1 and n");
}

Int exact_quotient(const Int& num, const Int& den, const char* what) {
    if (num % den != 0) throw contract_error(what);
    return num / den;
}

}  // namespace

Int coeff_power(const WeightVector& chi, std::size_t m) {
    validate_m(chi, m);
    const Int l = lcm_all(chi);
    Int numerator = 1;
    for (std::size_t k = 0; k < m; ++k) numerator *= l;
    Int denominator = 1;
    for (const auto& subset : subsets_of_size(chi.size(), m)) {
        Int prod = 1;
        for (std::size_t i : subset) prod *= chi[i];
        denominator = lcm(denominator, prod);
    }
    return exact_quotient(numerator, denominator, "structure constant not integral");
}

Int coeff_kawasaki(const WeightVector& chi, std::size_t m) {
    validate_m(chi, m);
    Int result = 1;
    for (const Int& p : primes_dividing(chi)) {
        std::vector<Int> contents;
        contents.reserve(chi.size());
        for (const Int& w : chi) contents.push_back(p_content(w, p));
        std::sort(contents.begin(), contents.end());
        Int numerator = 1;
        for (std::size_t k = 0; k < m; ++k) numerator *= contents.back();
        Int denominator = 1;
        for (std::size_t k = 0; k < m; ++k) denominator *= contents[contents.size() - 1 - k];
        result *= exact_quotient(numerator, denominator, "structure constant not integral");
    }
    return result;
}

Int coeff_alamrani(const WeightVector& chi, std::size_t m) {
    validate_m(chi, m);
    const Int l = lcm_all(chi);
    Int numerator = 1;
    for (std::size_t k = 0; k < m; ++k) numerator *= l;
    Int denominator = 1;
    for (const auto& subset : subsets_of_size(chi.size(), m + 1)) {
        Int prod = 1;
        Int g = 0;
        for (std::size_t i : subset) {
            prod *= chi[i];
            g = gcd(g, chi[i]);
        }
        denominator = lcm(denominator, prod / g);
    }
    return exact_quotient(numerator, denominator, "structure constant not integral");
}

Int iota_star_coeff(const WeightVector& chi, const std::vector<std::size_t>& subset) {
    validate_weight_vector(chi);
    const std::size_t m = subset.size();
    validate_m(chi, m);
    for (std::size_t k = 0; k < m; ++k) {
        if (subset[k] >= chi.size()) throw std::invalid_argument("index subset out of range");
        if (k > 0 && subset[k] <= subset[k - 1])
            throw std::invalid_argument("index subset must be strictly increasing");
    }
    Int numerator = 1;
    for (std::size_t i : subset) {
        Int inner = chi[i];
        for (std::size_t j = 0; j < chi.size(); ++j)
            if (std::find(subset.begin(), subset.end(), j) == subset.end())
                inner = lcm(inner, chi[j]);
        numerator *= inner;
    }
    Int denominator = 1;
    for (const auto& other : subsets_of_size(chi.size(), m)) {
        Int prod = 1;
        for (std::size_t i : other) prod *= chi[i];
        denominator = lcm(denominator, prod);
    }
    return exact_quotient(numerator, denominator, "fibre restriction multiple not integral");
}

StructureConstants structure_constants(const WeightVector& chi) {
    validate_weight_vector(chi);
    StructureConstants sc{chi, {}};
    for (std::size_t m = 1; m + 1 <= chi.size(); ++m) sc.k[m] = coeff_power(chi, m);
    if (sc.k.at(1) != 1) throw contract_error("k_1 must be 1");
    return sc;
}

StructureConstantsReport structure_constants_checked(const WeightVector& chi) {
    validate_weight_vector(chi);
    StructureConstantsReport report;
    report.agreed.chi = chi;
    for (std::size_t m = 1; m + 1 <= chi.size(); ++m) {
        std::array<Int, 3> values = {coeff_power(chi, m), coeff_kawasaki(chi, m),
                                     coeff_alamrani(chi, m)};
        if (values[0] != values[1] || values[0] != values[2]) report.agreement = false;
        report.agreed.k[m] = values[0];
        report.per_formula[m] = std::move(values);
    }
    return report;
}

RingPresentation presentation(const Fan& fan) {
    const WeightVector& chi = fan.chi_normalized;
    const std::size_t n1 = fan.ray_count();
    const std::size_t n = n1 - 1;
    RingPresentation pres;
    pres.chi = chi;
    pres.a_generators = nonempty_subsets(n1, n);
    const Int l = lcm_all(chi);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) {
            if (i == j) continue;
            pres.b_generators.emplace_back(i, j);
            pres.b_relations.push_back({i, j, l / lcm(chi[i], chi[j])});
        }
    for (const auto& subset : pres.a_generators) {
        if (subset.size() < 2) continue;
        pres.divisibility_relations.push_back({subset, divisor_coefficient(chi, subset)});
    }
    return pres;
}

std::string a_generator_name(const std::vector<std::size_t>& subset) {
    std::ostringstream out;
    out << "a_{";
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (k) out << ",";
        out << subset[k];
    }
    out << "}";
    return out.str();
}

std::string b_generator_name(std::size_t i, std::size_t j) {
    std::ostringstream out;
    out << "b_{" << i << "," << j << "}";
    return out.str();
}

}  // namespace wps
