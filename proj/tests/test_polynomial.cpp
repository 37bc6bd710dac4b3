#include <doctest.h>

#include <random>

#include "cosmo/json_io.hpp"
#include "cosmo/polynomial.hpp"

using namespace cosmo;

namespace {

Poly p(std::vector<long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return Poly(std::move(c));
}

Poly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (Int& x : c) x = coeff(rng);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic") {
    CHECK(p({1, 1}).pow(2) == p({1, 2, 1}));
    CHECK(p({1, 3}).pow(3) == p({1, 9, 27, 27}));
    CHECK(p({1, 6, 5}) * p({1, 6, 13}) == p({1, 12, 54, 108, 65}));
    CHECK(p({1, 2}) - p({1, 2}) == Poly(0));
    CHECK((p({0, 0, 0}) == Poly(0)));
    CHECK(p({1, 1}).pow(0) == Poly(1));
    CHECK(p({2, 4}).scaled(3) == p({6, 12}));
}

TEST_CASE("degree and coefficient access") {
    CHECK(Poly(0).degree() == -1);
    CHECK(p({1, 0, 7}).degree() == 2);
    CHECK(p({1, 0, 7}).coeff(1) == 0);
    CHECK(p({1, 0, 7}).coeff(5) == 0);
}

TEST_CASE("evaluation") {
    CHECK(p({1, 6, 5}).eval_one() == 12);
    CHECK(Poly(0).eval_one() == 0);
    CHECK(Poly(0).eval(100) == 0);
    CHECK(p({1, 3}).pow(2).eval_one() == 16);
    CHECK(p({1, 2, 3}).eval(-2) == Int(1 - 4 + 12));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Poly(0) == a);
        CHECK(a * Poly(1) == a);
        CHECK(a.eval(3) * b.eval(3) == (a * b).eval(3));
    }
}

TEST_CASE("ultra log-concavity check") {
    CHECK(check_ultra_log_concave(p({1, 6, 5}), 2).ok);  // 36 >= 20 at i=1
    CHECK(check_ultra_log_concave(p({1, 9, 27, 19}), 3).ok);

    const UlcResult bad = check_ultra_log_concave(p({1, 0, 1}), 2);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violating_index == 1);
}

TEST_CASE("coefficient bound check") {
    CHECK(check_coefficient_bound(p({1, 6, 5}), 2));  // equality at i=1: 3*C(2,1)=6
    for (int m = 1; m <= 6; ++m)
        CHECK(check_coefficient_bound(p({1, 3}).pow(static_cast<unsigned long>(m)), m));
    CHECK_FALSE(check_coefficient_bound(p({1, 10}), 2));
    CHECK_FALSE(check_coefficient_bound(p({1, -1}), 2));
    CHECK_FALSE(check_coefficient_bound(p({1, 1, 1, 1}), 2));  // degree above m
}

TEST_CASE("latex rendering") {
    CHECK(p({1, 6, 5}).to_latex() == "1 + 6z + 5z^2");
    CHECK(p({1, 3}).to_latex() == "1 + 3z");
    CHECK(p({0, 1}).to_latex() == "z");
    CHECK(p({1, -2}).to_latex() == "1 - 2z");
    CHECK(p({-1, 0, 2}).to_latex() == "-1 + 2z^2");
    CHECK(Poly(0).to_latex() == "0");
    CHECK(Poly(7).to_latex() == "7");
}

TEST_CASE("json coefficients round-trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly a = random_poly(rng);
        CHECK(cosmo::poly_from_json(cosmo::poly_to_json(a)) == a);
    }
    CHECK(cosmo::poly_to_json(p({1, 6, 5})).dump() == R"(["1","6","5"])");
    // coefficients beyond 64 bits survive the string rendering
    const Poly big = p({1, 3}).pow(64);
    CHECK(cosmo::poly_from_json(cosmo::poly_to_json(big)) == big);
}

TEST_CASE("bivariate arithmetic and rendering") {
    BivarPoly x = BivarPoly::monomial(1, 1, 0);
    BivarPoly y = BivarPoly::monomial(1, 0, 1);
    const BivarPoly t = x * x + x + y;
    CHECK(t.to_latex() == "x^2 + x + y");
    CHECK(t.eval(2, 1) == 7);
    CHECK(t.coeff(1, 0) == 1);
    CHECK(t.coeff(1, 1) == 0);

    // cancellation removes stored terms
    BivarPoly zero = x + BivarPoly::monomial(-1, 1, 0);
    CHECK(zero.is_zero());

    // y = 1 substitution merges x-columns
    const BivarPoly mixed = x * y + x + BivarPoly::constant(3);
    const Poly collapsed = mixed.at_y_one();
    CHECK(collapsed.coeff(0) == 3);
    CHECK(collapsed.coeff(1) == 2);
}
