// Command-line interface: exact invariants of weighted projective spaces.
//
// Subcommands: fan, generators, presentation, constants, recover, chern,
// example.  All output is canonical and byte-stable; exit code 0 on success,
// 1 when a mathematical contract is violated (an implementation bug), 2 on
// bad input.

#include "wps/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "p1234_fixture.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace wps;

WeightVector parse_chi(const std::string& csv) {
    WeightVector chi;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            chi.push_back(Int(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid weight list: '" + csv + "'");
        }
    }
    validate_weight_vector(chi);
    return chi;
}

std::vector<std::size_t> parse_subset(const std::string& csv, std::size_t n1) {
    std::vector<std::size_t> subset;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            subset.push_back(std::stoul(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid index list: '" + csv + "'");
        }
    }
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] >= n1) throw std::invalid_argument("index subset out of range");
        if (k > 0 && subset[k] <= subset[k - 1])
            throw std::invalid_argument("index subset must be strictly increasing");
    }
    if (subset.empty()) throw std::invalid_argument("index subset must be nonempty");
    return subset;
}

std::string format_tuple(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += v[k].str();
    }
    return out + ")";
}

std::string format_components(const std::vector<Polynomial>& comps,
                              const std::vector<std::string>& names) {
    std::string out = "(";
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (k) out += ", ";
        out += to_string(comps[k], names);
    }
    return out + ")";
}

void emit_fan(const Fan& fan, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << to_json(fan) << "\n";
        return;
    }
    out << "chi: " << format_tuple(fan.chi) << "\n";
    out << "chi normalized: " << format_tuple(fan.chi_normalized) << "\n";
    for (std::size_t i = 0; i < fan.ray_count(); ++i)
        out << "v_" << i << " = " << format_tuple(fan.rays[i]) << "\n";
}

void emit_generators(const Fan& fan, const std::string& subset_csv, const std::string& format,
                     std::ostream& out) {
    const std::size_t n1 = fan.ray_count();
    const auto names = default_variable_names(fan.dimension());
    if (!subset_csv.empty()) {
        auto subset = parse_subset(subset_csv, n1);
        PiecewisePolynomial a = a_subset(fan, subset);
        if (format == "json") {
            Json j;
            j["fan"] = Json::parse(to_json(fan));
            Json entry;
            entry["subset"] = subset;
            entry["divisor"] = divisor_coefficient(fan.chi_normalized, subset).str();
            Json comps = Json::array();
            for (const auto& c : a.components()) comps.push_back(Json::parse(to_json(c)));
            entry["components"] = std::move(comps);
            j["a_subsets"] = Json::array({std::move(entry)});
            out << j.dump() << "\n";
        } else {
            out << a_generator_name(subset) << " = " << format_components(a.components(), names)
                << "  [divisor " << divisor_coefficient(fan.chi_normalized, subset).str()
                << "]\n";
        }
        return;
    }

    std::vector<PiecewisePolynomial> courants;
    for (std::size_t i = 0; i < n1; ++i) courants.push_back(courant(fan, i));
    if (format == "json") {
        Json j;
        j["fan"] = Json::parse(to_json(fan));
        Json cs = Json::array();
        for (const auto& a : courants) {
            Json comps = Json::array();
            for (const auto& c : a.components()) comps.push_back(Json::parse(to_json(c)));
            cs.push_back(std::move(comps));
        }
        j["courant"] = std::move(cs);
        Json bs = Json::array();
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t jj = 0; jj < n1; ++jj) {
                if (i == jj) continue;
                Json entry;
                entry["i"] = i;
                entry["j"] = jj;
                Json coeffs = Json::array();
                for (const Int& c : b_form(fan, i, jj)) coeffs.push_back(c.str());
                entry["coefficients"] = std::move(coeffs);
                bs.push_back(std::move(entry));
            }
        j["b_forms"] = std::move(bs);
        Json as = Json::array();
        for (std::size_t size = 2; size + 1 <= n1; ++size)
            for (const auto& subset : subsets_of_size(n1, size)) {
                Json entry;
                entry["subset"] = subset;
                entry["divisor"] = divisor_coefficient(fan.chi_normalized, subset).str();
                Json comps = Json::array();
                for (const auto& c : a_subset(fan, subset).components())
                    comps.push_back(Json::parse(to_json(c)));
                entry["components"] = std::move(comps);
                as.push_back(std::move(entry));
            }
        j["a_subsets"] = std::move(as);
        out << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < n1; ++i)
            out << "a_" << i << " = " << format_components(courants[i].components(), names)
                << "\n";
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t jj = 0; jj < n1; ++jj) {
                if (i == jj) continue;
                out << b_generator_name(i, jj) << " = "
                    << to_string(Polynomial::linear_form(b_form(fan, i, jj)), names) << "\n";
            }
        for (std::size_t size = 2; size + 1 <= n1; ++size)
            for (const auto& subset : subsets_of_size(n1, size))
                out << a_generator_name(subset) << " = "
                    << format_components(a_subset(fan, subset).components(), names)
                    << "  [divisor " << divisor_coefficient(fan.chi_normalized, subset).str()
                    << "]\n";
    }
}

void emit_presentation(const Fan& fan, const std::string& format, std::ostream& out) {
    RingPresentation pres = presentation(fan);
    if (format == "json") {
        out << to_json(pres) << "\n";
        return;
    }
    out << "generators:\n";
    for (const auto& subset : pres.a_generators)
        out << "  " << a_generator_name(subset) << "  (degree " << 2 * subset.size() << ")\n";
    for (const auto& [i, j] : pres.b_generators)
        out << "  " << b_generator_name(i, j) << "  (degree 2)\n";
    out << "relations:\n  ";
    for (std::size_t i = 0; i < pres.chi.size(); ++i) out << "a_{" << i << "} ";
    out << "= 0\n";
    for (const auto& br : pres.b_relations)
        out << "  " << br.coefficient.str() << " " << b_generator_name(br.i, br.j) << " = a_{"
            << br.i << "} - a_{" << br.j << "}\n";
    for (const auto& dr : pres.divisibility_relations) {
        out << "  " << dr.divisor.str() << " " << a_generator_name(dr.subset) << " =";
        for (std::size_t i : dr.subset) out << " a_{" << i << "}";
        out << "\n";
    }
}

int emit_constants(const WeightVector& chi, int m, const std::string& format,
                   std::ostream& out) {
    StructureConstantsReport report = structure_constants_checked(chi);
    if (m >= 0) {
        if (m < 1 || static_cast<std::size_t>(m) + 1 > chi.size())
            throw std::invalid_argument("power index must lie between 1 and n");
        StructureConstantsReport restricted;
        restricted.agreed.chi = report.agreed.chi;
        restricted.agreed.k[m] = report.agreed.k.at(m);
        restricted.per_formula[m] = report.per_formula.at(m);
        restricted.agreement = report.agreement;
        report = std::move(restricted);
    }
    if (format == "json") {
        out << to_json(report) << "\n";
    } else {
        for (const auto& [mm, values] : report.per_formula)
            out << "k_" << mm << " = " << values[0].str() << "  (power " << values[0].str()
                << ", kawasaki " << values[1].str() << ", alamrani " << values[2].str() << ")\n";
        out << "agreement: " << (report.agreement ? "yes" : "NO") << "\n";
    }
    if (!report.agreement) {
        std::cerr << "error: structure constant formulas disagree\n";
        return 1;
    }
    return 0;
}

int emit_chern(const Fan& fan, const std::string& format, std::ostream& out) {
    ChernReport report = make_chern_report(fan);
    bool ok = report.product_zero;
    for (bool b : report.pullback_identities) ok = ok && b;
    if (format == "json") {
        out << to_json(report) << "\n";
    } else {
        for (std::size_t i = 0; i < report.factor_coefficients.size(); ++i)
            out << "(xi + " << report.factor_coefficients[i].str() << " x_" << i << ")";
        out << " = 0 : " << (ok ? "verified" : "VIOLATED") << "\n";
    }
    if (!ok) {
        std::cerr << "error: weighted projective bundle relation violated\n";
        return 1;
    }
    return 0;
}

// Replays the built-in worked example P(1,2,3,4) against golden data.
int run_example(const std::string& format, std::ostream& out) {
    Json golden = Json::parse(kGoldenFixtureJson);
    WeightVector chi;
    for (const auto& w : golden.at("chi")) chi.push_back(Int(w.get<long long>()));
    std::vector<LatticeVector> rays;
    for (const auto& r : golden.at("rays")) {
        LatticeVector ray;
        for (const auto& x : r) ray.push_back(Int(x.get<long long>()));
        rays.push_back(std::move(ray));
    }
    Fan fan = fan_from_rays(rays, chi);

    struct Check {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Check> checks;
    auto record = [&](std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    };

    const auto& courant_golden = golden.at("courant");
    for (std::size_t i = 0; i < fan.ray_count(); ++i) {
        PiecewisePolynomial a = courant(fan, i);
        bool ok = true;
        std::string detail;
        for (std::size_t j = 0; j < fan.ray_count(); ++j) {
            Polynomial expected = polynomial_from_json(courant_golden.at(i).at(j).dump());
            if (a.component(j) != expected) {
                ok = false;
                detail = "component " + std::to_string(j) + " differs";
            }
        }
        record("a_" + std::to_string(i), ok, detail);
    }

    for (const auto& entry : golden.at("b_forms")) {
        std::size_t i = entry.at("i").get<std::size_t>();
        std::size_t j = entry.at("j").get<std::size_t>();
        LinearForm expected;
        for (const auto& c : entry.at("coefficients")) expected.push_back(Int(c.get<std::string>()));
        record(b_generator_name(i, j), b_form(fan, i, j) == expected);
    }

    for (const auto& entry : golden.at("divisors")) {
        auto subset = entry.at("subset").get<std::vector<std::size_t>>();
        Int expected(entry.at("divisor").get<std::string>());
        Int actual = divisor_coefficient(fan.chi_normalized, subset);
        // The divisor must also be realized by an exact division of the
        // Courant product.
        bool divides = true;
        try {
            a_subset(fan, subset);
        } catch (const contract_error&) {
            divides = false;
        }
        record("divisor " + a_generator_name(subset), actual == expected && divides,
               actual == expected ? "" : "computed " + actual.str() + ", golden " + expected.str());
    }

    for (const auto& entry : golden.at("linear_differences")) {
        std::size_t i = entry.at("i").get<std::size_t>();
        std::size_t j = entry.at("j").get<std::size_t>();
        LinearForm expected;
        for (const auto& c : entry.at("coefficients")) expected.push_back(Int(c.get<std::string>()));
        PiecewisePolynomial diff = courant(fan, i) - courant(fan, j);
        record("a_" + std::to_string(i) + " - a_" + std::to_string(j),
               diff.is_global() && diff.component(0) == Polynomial::linear_form(expected));
    }

    StructureConstantsReport sc = structure_constants_checked(chi);
    for (const auto& [key, value] : golden.at("structure_constants").items()) {
        std::size_t m = std::stoul(key);
        record("k_" + key, sc.agreement && sc.agreed.k.at(m) == Int(value.get<std::string>()));
    }

    std::size_t failures = 0;
    for (const auto& c : checks)
        if (!c.ok) ++failures;

    if (format == "json") {
        Json j;
        Json arr = Json::array();
        for (const auto& c : checks) {
            Json entry;
            entry["check"] = c.name;
            entry["ok"] = c.ok;
            if (!c.detail.empty()) entry["detail"] = c.detail;
            arr.push_back(std::move(entry));
        }
        j["checks"] = std::move(arr);
        j["failures"] = failures;
        out << j.dump() << "\n";
    } else {
        for (const auto& c : checks)
            out << (c.ok ? "ok      " : "MISMATCH") << "  " << c.name
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        out << checks.size() - failures << "/" << checks.size() << " checks passed\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant cohomology of weighted projective spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    long long seed = 0;
    app.add_option("--seed", seed, "seed for randomized subcommands (reserved)");

    std::string chi_csv, subset_csv;
    int m = -1;

    CLI::App* cmd_fan = app.add_subcommand("fan", "construct the fan of P(chi)");
    cmd_fan->add_option("--chi", chi_csv, "comma-separated positive weights")->required();

    CLI::App* cmd_gen = app.add_subcommand("generators", "Courant functions, b-forms, a_I");
    cmd_gen->add_option("--chi", chi_csv, "comma-separated positive weights")->required();
    cmd_gen->add_option("--subset", subset_csv, "emit a single a_I for this index subset");

    CLI::App* cmd_pres = app.add_subcommand("presentation", "generators-and-relations presentation");
    cmd_pres->add_option("--chi", chi_csv, "comma-separated positive weights")->required();

    CLI::App* cmd_const = app.add_subcommand("constants", "ordinary-cohomology structure constants");
    cmd_const->add_option("--chi", chi_csv, "comma-separated positive weights")->required();
    cmd_const->add_option("--m", m, "restrict to a single power index");

    CLI::App* cmd_recover = app.add_subcommand("recover", "recover weights from a fan JSON on stdin");

    CLI::App* cmd_chern = app.add_subcommand("chern", "verify the weighted projective bundle relation");
    cmd_chern->add_option("--chi", chi_csv, "comma-separated positive weights")->required();

    CLI::App* cmd_example = app.add_subcommand("example", "replay the built-in P(1,2,3,4) worked example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_fan->parsed()) {
            emit_fan(fan_from_weights(parse_chi(chi_csv)), format, std::cout);
            return 0;
        }
        if (cmd_gen->parsed()) {
            emit_generators(fan_from_weights(parse_chi(chi_csv)), subset_csv, format, std::cout);
            return 0;
        }
        if (cmd_pres->parsed()) {
            emit_presentation(fan_from_weights(parse_chi(chi_csv)), format, std::cout);
            return 0;
        }
        if (cmd_const->parsed()) return emit_constants(parse_chi(chi_csv), m, format, std::cout);
        if (cmd_recover->parsed()) {
            std::string input((std::istreambuf_iterator<char>(std::cin)),
                              std::istreambuf_iterator<char>());
            AnonymizedRing ring;
            try {
                ring = anonymized_ring_from_json(input);
            } catch (const Json::exception& e) {
                throw std::invalid_argument(std::string("invalid fan JSON: ") + e.what());
            }
            WeightVector weights = recover_weights(ring);
            if (format == "json")
                std::cout << weights_to_json(weights) << "\n";
            else
                std::cout << "weights: " << format_tuple(weights) << "\n";
            return 0;
        }
        if (cmd_chern->parsed())
            return emit_chern(fan_from_weights(parse_chi(chi_csv)), format, std::cout);
        if (cmd_example->parsed()) return run_example(format, std::cout);
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
