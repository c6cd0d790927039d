#pragma once

#include "wps/bundle.hpp"
#include "wps/cohomology.hpp"
#include "wps/fan.hpp"
#include "wps/piecewise.hpp"
#include "wps/polynomial.hpp"
#include "wps/weights.hpp"

#include <string>

namespace wps {

// Canonical JSON (stable key order, terms in graded-lex order, coefficients
// as decimal strings); every writer here is matched by a parser, and
// writer(parser(writer(x))) is byte-identical to writer(x).

std::string to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

std::string to_json(const Fan& fan);
Fan fan_from_json(const std::string& text);

std::string to_json(const PiecewisePolynomial& pp);
PiecewisePolynomial piecewise_from_json(const std::string& text);

// {"rays": [[...], ...]}; parsing also accepts a full fan document and
// ignores any weight data in it.
std::string to_json(const AnonymizedRing& ring);
AnonymizedRing anonymized_ring_from_json(const std::string& text);

// {"weights": [...]}
std::string weights_to_json(const WeightVector& weights);
WeightVector weights_from_json(const std::string& text);

std::string to_json(const StructureConstantsReport& report);
StructureConstantsReport structure_constants_from_json(const std::string& text);

std::string to_json(const RingPresentation& pres);
RingPresentation presentation_from_json(const std::string& text);

// CLI-facing summary of the weighted Chern verification.
struct ChernReport {
    WeightVector chi;  // normalized
    Int weight_lcm;
    std::vector<Int> factor_coefficients;  // factor i is xi + coeff_i * x_i
    bool product_zero = false;
    std::vector<bool> pullback_identities;
};

ChernReport make_chern_report(const Fan& fan);
std::string to_json(const ChernReport& report);
ChernReport chern_report_from_json(const std::string& text);

}  // namespace wps
