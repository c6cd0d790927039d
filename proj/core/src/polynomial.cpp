#include "wps/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wps {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(std::size_t arity, const Int& c) {
    Polynomial p(arity);
    if (c != 0) p.terms_.emplace(Exponents(arity, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
    if (index >= arity) throw std::invalid_argument("variable index out of range");
    Exponents e(arity, 0);
    e[index] = 1;
    Polynomial p(arity);
    p.terms_.emplace(std::move(e), 1);
    return p;
}

Polynomial Polynomial::monomial(std::size_t arity, Exponents exp, const Int& coef) {
    if (exp.size() != arity) throw std::invalid_argument("exponent arity mismatch");
    Polynomial p(arity);
    if (coef != 0) p.terms_.emplace(std::move(exp), coef);
    return p;
}

Polynomial Polynomial::linear_form(const LinearForm& coeffs) {
    Polynomial p(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Exponents e(coeffs.size(), 0);
        e[k] = 1;
        p.terms_.emplace(std::move(e), coeffs[k]);
    }
    return p;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // Terms are graded, so the last one has the maximal degree.
    const Exponents& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

Int Polynomial::coefficient(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Exponents& exp, const Int& coef) {
    if (exp.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    Polynomial r(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(arity_);
            for (std::size_t k = 0; k < arity_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator*(const Int& c) const {
    Polynomial r(arity_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Int Polynomial::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) g = gcd(g, c);
    return g;
}

Polynomial Polynomial::exact_div(const Int& d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    Polynomial r(arity_);
    for (const auto& [e, c] : terms_) {
        if (c % d != 0) throw std::invalid_argument("not divisible");
        r.terms_.emplace(e, c / d);
    }
    return r;
}

Int Polynomial::evaluate(const LatticeVector& point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluation point rank mismatch");
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (std::size_t k = 0; k < arity_; ++k)
            for (unsigned q = 0; q < e[k]; ++q) t *= point[k];
        total += t;
    }
    return total;
}

Polynomial Polynomial::compose_linear(const IntMatrix& images) const {
    if (images.rows() != arity_) throw std::invalid_argument("substitution matrix rank mismatch");
    const std::size_t new_arity = images.cols();
    // Power tables for the images of the variables, built on demand.
    std::vector<std::vector<Polynomial>> pows(arity_);
    auto image_power = [&](std::size_t m, unsigned e) -> const Polynomial& {
        auto& table = pows[m];
        if (table.empty()) {
            table.push_back(Polynomial::constant(new_arity, 1));
            table.push_back(Polynomial::linear_form(images.row(m)));
        }
        while (table.size() <= e) table.push_back(table.back() * table[1]);
        return table[e];
    };
    Polynomial result(new_arity);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(new_arity, c);
        for (std::size_t m = 0; m < arity_; ++m)
            if (e[m] > 0) term = term * image_power(m, e[m]);
        result = result + term;
    }
    return result;
}

Polynomial restrict_to_span(const Polynomial& f, const std::vector<LatticeVector>& basis) {
    IntMatrix images(f.arity(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].size() != f.arity())
            throw std::invalid_argument("span basis rank mismatch");
        for (std::size_t m = 0; m < f.arity(); ++m) images(m, k) = basis[k][m];
    }
    return f.compose_linear(images);
}

std::vector<std::string> default_variable_names(std::size_t arity) {
    static const char* xyzw[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (std::size_t k = 0; k < arity; ++k)
        names.push_back(arity <= 4 ? xyzw[k] : "x" + std::to_string(k));
    return names;
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
    if (names.size() != f.arity()) throw std::invalid_argument("variable name count mismatch");
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned q) { return q > 0; });
        if (a != 1 || !has_vars) out << a.str();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            out << names[k];
            if (e[k] > 1) out << "^" << e[k];
        }
    }
    return out.str();
}

}  // namespace wps
