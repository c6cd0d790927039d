#include "wps/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>

namespace wps {

namespace {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string");
}

Json int_vector_to_json(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

std::vector<Int> int_vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    std::vector<Int> v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

Json polynomial_to_json_impl(const Polynomial& p) {
    Json j;
    j["arity"] = p.arity();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["exp"] = e;
        term["coef"] = c.str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json_impl(const Json& j) {
    Polynomial p(j.at("arity").get<std::size_t>());
    for (const auto& term : j.at("terms")) {
        Exponents e = term.at("exp").get<Exponents>();
        p.add_term(e, Int(term.at("coef").get<std::string>()));
    }
    return p;
}

Json fan_to_json_impl(const Fan& fan) {
    Json j;
    j["chi"] = int_vector_to_json(fan.chi);
    j["chi_normalized"] = int_vector_to_json(fan.chi_normalized);
    Json rays = Json::array();
    for (const auto& r : fan.rays) rays.push_back(int_vector_to_json(r));
    j["rays"] = std::move(rays);
    return j;
}

Fan fan_from_json_impl(const Json& j) {
    WeightVector chi = int_vector_from_json(j.at("chi"));
    std::vector<LatticeVector> rays;
    for (const auto& r : j.at("rays")) rays.push_back(int_vector_from_json(r));
    return fan_from_rays(std::move(rays), std::move(chi));
}

Json piecewise_to_json_impl(const PiecewisePolynomial& pp) {
    Json j;
    j["fan"] = fan_to_json_impl(pp.fan());
    Json comps = Json::array();
    for (const auto& c : pp.components()) comps.push_back(polynomial_to_json_impl(c));
    j["components"] = std::move(comps);
    return j;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

std::string to_json(const Polynomial& p) { return dump(polynomial_to_json_impl(p)); }

Polynomial polynomial_from_json(const std::string& text) {
    return polynomial_from_json_impl(Json::parse(text));
}

std::string to_json(const Fan& fan) { return dump(fan_to_json_impl(fan)); }

Fan fan_from_json(const std::string& text) { return fan_from_json_impl(Json::parse(text)); }

std::string to_json(const PiecewisePolynomial& pp) { return dump(piecewise_to_json_impl(pp)); }

PiecewisePolynomial piecewise_from_json(const std::string& text) {
    Json j = Json::parse(text);
    Fan fan = fan_from_json_impl(j.at("fan"));
    std::vector<Polynomial> comps;
    for (const auto& c : j.at("components")) comps.push_back(polynomial_from_json_impl(c));
    return PiecewisePolynomial(std::move(fan), std::move(comps));
}

std::string to_json(const AnonymizedRing& ring) {
    Json j;
    Json rays = Json::array();
    for (const auto& r : ring.rays) rays.push_back(int_vector_to_json(r));
    j["rays"] = std::move(rays);
    return dump(j);
}

AnonymizedRing anonymized_ring_from_json(const std::string& text) {
    Json j = Json::parse(text);
    AnonymizedRing ring;
    for (const auto& r : j.at("rays")) ring.rays.push_back(int_vector_from_json(r));
    return ring;
}

std::string weights_to_json(const WeightVector& weights) {
    Json j;
    j["weights"] = int_vector_to_json(weights);
    return dump(j);
}

WeightVector weights_from_json(const std::string& text) {
    return int_vector_from_json(Json::parse(text).at("weights"));
}

std::string to_json(const StructureConstantsReport& report) {
    Json j;
    j["chi"] = int_vector_to_json(report.agreed.chi);
    Json constants;
    for (const auto& [m, k] : report.agreed.k) constants[std::to_string(m)] = k.str();
    j["structure_constants"] = std::move(constants);
    Json formulas;
    for (const auto& [m, values] : report.per_formula) {
        Json triple;
        triple["power"] = values[0].str();
        triple["kawasaki"] = values[1].str();
        triple["alamrani"] = values[2].str();
        formulas[std::to_string(m)] = std::move(triple);
    }
    j["per_formula"] = std::move(formulas);
    j["agreement"] = report.agreement;
    return dump(j);
}

StructureConstantsReport structure_constants_from_json(const std::string& text) {
    Json j = Json::parse(text);
    StructureConstantsReport report;
    report.agreed.chi = int_vector_from_json(j.at("chi"));
    for (const auto& [key, value] : j.at("structure_constants").items())
        report.agreed.k[std::stoul(key)] = Int(value.get<std::string>());
    for (const auto& [key, triple] : j.at("per_formula").items())
        report.per_formula[std::stoul(key)] = {Int(triple.at("power").get<std::string>()),
                                               Int(triple.at("kawasaki").get<std::string>()),
                                               Int(triple.at("alamrani").get<std::string>())};
    report.agreement = j.at("agreement").get<bool>();
    return report;
}

std::string to_json(const RingPresentation& pres) {
    Json j;
    j["chi"] = int_vector_to_json(pres.chi);
    Json generators = Json::array();
    for (const auto& subset : pres.a_generators) {
        Json g;
        g["name"] = a_generator_name(subset);
        g["degree"] = 2 * subset.size();
        g["subset"] = subset;
        generators.push_back(std::move(g));
    }
    for (const auto& [i, ji] : pres.b_generators) {
        Json g;
        g["name"] = b_generator_name(i, ji);
        g["degree"] = 2;
        g["indices"] = Json::array({i, ji});
        generators.push_back(std::move(g));
    }
    j["generators"] = std::move(generators);
    Json relations = Json::array();
    {
        Json rel;
        rel["type"] = "product_all";
        Json factors = Json::array();
        for (std::size_t i = 0; i < pres.chi.size(); ++i)
            factors.push_back(a_generator_name({i}));
        rel["factors"] = std::move(factors);
        relations.push_back(std::move(rel));
    }
    for (const auto& br : pres.b_relations) {
        Json rel;
        rel["type"] = "b_linear";
        rel["b"] = b_generator_name(br.i, br.j);
        rel["coefficient"] = br.coefficient.str();
        rel["difference"] = Json::array({a_generator_name({br.i}), a_generator_name({br.j})});
        relations.push_back(std::move(rel));
    }
    for (const auto& dr : pres.divisibility_relations) {
        Json rel;
        rel["type"] = "divisibility";
        rel["a"] = a_generator_name(dr.subset);
        rel["subset"] = dr.subset;
        rel["divisor"] = dr.divisor.str();
        relations.push_back(std::move(rel));
    }
    j["relations"] = std::move(relations);
    return dump(j);
}

RingPresentation presentation_from_json(const std::string& text) {
    Json j = Json::parse(text);
    RingPresentation pres;
    pres.chi = int_vector_from_json(j.at("chi"));
    for (const auto& g : j.at("generators")) {
        if (g.contains("subset"))
            pres.a_generators.push_back(g.at("subset").get<std::vector<std::size_t>>());
        else {
            auto idx = g.at("indices").get<std::vector<std::size_t>>();
            pres.b_generators.emplace_back(idx.at(0), idx.at(1));
        }
    }
    for (const auto& rel : j.at("relations")) {
        const std::string type = rel.at("type").get<std::string>();
        if (type == "b_linear") {
            BLinearRelation br;
            auto name = rel.at("b").get<std::string>();
            // Indices are recoverable from the difference entries, but the
            // name encodes them directly: b_{i,j}.
            auto comma = name.find(',');
            br.i = std::stoul(name.substr(3, comma - 3));
            br.j = std::stoul(name.substr(comma + 1, name.size() - comma - 2));
            br.coefficient = Int(rel.at("coefficient").get<std::string>());
            pres.b_relations.push_back(std::move(br));
        } else if (type == "divisibility") {
            DivisibilityRelation dr;
            dr.subset = rel.at("subset").get<std::vector<std::size_t>>();
            dr.divisor = Int(rel.at("divisor").get<std::string>());
            pres.divisibility_relations.push_back(std::move(dr));
        }
    }
    return pres;
}

ChernReport make_chern_report(const Fan& fan) {
    PullbackFan pfan = make_pullback_fan(fan);
    ChernReport report;
    report.chi = fan.chi_normalized;
    report.weight_lcm = lcm_all(fan.chi_normalized);
    for (const Int& w : fan.chi_normalized)
        report.factor_coefficients.push_back(report.weight_lcm / w);
    report.product_zero = chern_product(pfan).is_zero();
    for (std::size_t i = 0; i < fan.ray_count(); ++i)
        report.pullback_identities.push_back(verify_pullback_identity(pfan, i));
    return report;
}

std::string to_json(const ChernReport& report) {
    Json j;
    j["chi"] = int_vector_to_json(report.chi);
    j["lcm"] = report.weight_lcm.str();
    Json factors = Json::array();
    for (std::size_t i = 0; i < report.factor_coefficients.size(); ++i) {
        Json f;
        f["coefficient"] = report.factor_coefficients[i].str();
        f["variable"] = "x_" + std::to_string(i);
        factors.push_back(std::move(f));
    }
    j["factors"] = std::move(factors);
    j["product_zero"] = report.product_zero;
    Json identities = Json::array();
    for (bool ok : report.pullback_identities) identities.push_back(ok);
    j["pullback_identities"] = std::move(identities);
    j["verdict"] = (report.product_zero &&
                    std::all_of(report.pullback_identities.begin(),
                                report.pullback_identities.end(), [](bool b) { return b; }))
                       ? "verified"
                       : "violated";
    return dump(j);
}

ChernReport chern_report_from_json(const std::string& text) {
    Json j = Json::parse(text);
    ChernReport report;
    report.chi = int_vector_from_json(j.at("chi"));
    report.weight_lcm = Int(j.at("lcm").get<std::string>());
    for (const auto& f : j.at("factors"))
        report.factor_coefficients.push_back(Int(f.at("coefficient").get<std::string>()));
    report.product_zero = j.at("product_zero").get<bool>();
    for (const auto& b : j.at("pullback_identities"))
        report.pullback_identities.push_back(b.get<bool>());
    return report;
}

}  // namespace wps
