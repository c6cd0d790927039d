#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wps/bundle.hpp"
#include "wps/serialize.hpp"

using namespace wps;

namespace {

Polynomial var(std::size_t arity, std::size_t i, long c) {
    return Polynomial::variable(arity, i) * Int(c);
}

}  // namespace

TEST_CASE("xi class components") {
    PullbackFan pfan = make_pullback_fan(fan_from_weights({1, 2, 3, 4}));
    PullbackPP xi = xi_class(pfan);
    CHECK(xi.component(0) == var(4, 0, -12));
    CHECK(xi.component(1) == var(4, 1, -6));
    CHECK(xi.component(2) == var(4, 2, -4));
    CHECK(xi.component(3) == var(4, 3, -3));
    // xi(u) = -lcm on every cone.
    for (const auto& c : xi.components()) CHECK(c.evaluate(pfan.u) == -12);

    PullbackFan ones = make_pullback_fan(fan_from_weights({1, 1, 1}));
    for (std::size_t i = 0; i < 3; ++i) CHECK(xi_class(ones).component(i) == var(3, i, -1));
}

TEST_CASE("pullback of a Courant function") {
    PullbackFan pfan = make_pullback_fan(fan_from_weights({1, 2, 3, 4}));
    PullbackPP lifted = pullback(pfan, courant(pfan.base, 0));
    CHECK(lifted.component(0).is_zero());
    CHECK(lifted.component(1) == var(4, 0, 12) + var(4, 1, -6));
    CHECK(lifted.component(2) == var(4, 0, 12) + var(4, 2, -4));
    CHECK(lifted.component(3) == var(4, 0, 12) + var(4, 3, -3));
}

TEST_CASE("pullback is a ring homomorphism and injective") {
    std::mt19937_64 gen(71);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n1 = test::rand_range(gen, 2, 5);
        Fan fan = fan_from_weights(test::random_chi(gen, n1, 30));
        PullbackFan pfan = make_pullback_fan(fan);
        PiecewisePolynomial f = courant(fan, test::rand_range(gen, 0, n1 - 1));
        PiecewisePolynomial g = courant(fan, test::rand_range(gen, 0, n1 - 1));
        CHECK(pullback(pfan, f * g) == pullback(pfan, f) * pullback(pfan, g));
        CHECK(pullback(pfan, f + g) == pullback(pfan, f) + pullback(pfan, g));
        CHECK(pullback(pfan, PiecewisePolynomial::zero(fan)).is_zero());
        CHECK_FALSE(pullback(pfan, f).is_zero());
    }
}

TEST_CASE("weighted chern product vanishes") {
    CHECK(chern_product(make_pullback_fan(fan_from_weights({1, 2, 3, 4}))).is_zero());
    CHECK(chern_product(make_pullback_fan(fan_from_weights({1, 1, 1, 1}))).is_zero());
    CHECK(chern_product(make_pullback_fan(fan_from_weights({2, 3}))).is_zero());

    std::mt19937_64 gen(72);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n1 = test::rand_range(gen, 2, 6);
        Fan fan = fan_from_weights(test::random_chi(gen, n1, 40));
        CHECK(chern_product(make_pullback_fan(fan)).is_zero());
    }
}

TEST_CASE("pullback identity for Courant functions") {
    PullbackFan pfan = make_pullback_fan(fan_from_weights({1, 2, 3, 4}));
    for (std::size_t i = 0; i < 4; ++i) CHECK(verify_pullback_identity(pfan, i));

    PullbackFan line = make_pullback_fan(fan_from_weights({1, 1}));
    CHECK(verify_pullback_identity(line, 0));

    // Negative control: perturbing xi by x_0 breaks the identity.
    PullbackPP lifted = pullback(pfan, courant(pfan.base, 1));
    PullbackPP xi = xi_class(pfan);
    Polynomial term = var(4, 1, 6);
    bool all_match = true;
    for (std::size_t j = 0; j < 4; ++j)
        all_match = all_match &&
                    lifted.component(j) == term + xi.component(j) + Polynomial::variable(4, 0);
    CHECK_FALSE(all_match);
}

TEST_CASE("xi differs from each lifted Courant function by a global form") {
    std::mt19937_64 gen(73);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n1 = test::rand_range(gen, 2, 5);
        Fan fan = fan_from_weights(test::random_chi(gen, n1, 40));
        PullbackFan pfan = make_pullback_fan(fan);
        PullbackPP xi = xi_class(pfan);
        for (std::size_t i = 0; i < n1; ++i) {
            PullbackPP diff = xi - pullback(pfan, courant(fan, i));
            CHECK(diff.is_global());
        }
    }
}

TEST_CASE("incompatible pullback components are rejected") {
    PullbackFan pfan = make_pullback_fan(fan_from_weights({1, 2, 3}));
    std::vector<Polynomial> comps = xi_class(pfan).components();
    comps[1] = comps[1] + Polynomial::variable(3, 2);
    CHECK_THROWS_AS(PullbackPP(pfan, comps), contract_error);
}

TEST_CASE("chern report serialization round-trips") {
    ChernReport report = make_chern_report(fan_from_weights({1, 2, 3, 4}));
    CHECK(report.product_zero);
    CHECK(report.factor_coefficients == std::vector<Int>{12, 6, 4, 3});
    std::string j = to_json(report);
    CHECK(j.find("\"verdict\":\"verified\"") != std::string::npos);
    CHECK(to_json(chern_report_from_json(j)) == j);
}
