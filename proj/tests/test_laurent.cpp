#include <doctest.h>

#include <random>

#include "heckedn/laurent.hpp"

using namespace heckedn;

namespace {

LaurentPoly vpow(int k) { return LaurentPoly::v(k); }

LaurentPoly from_pairs(std::initializer_list<std::tuple<int, int, long>> ts) {
    LaurentPoly p;
    for (const auto& [i, j, c] : ts) p.add_term(i, j, Int(c));
    return p;
}

// v^4 (v+1)^4 (v^3+1)^2, the f-value of ((2,1),(2,1)) at u = 1.
LaurentPoly example_f_beta() {
    LaurentPoly p = vpow(4);
    const LaurentPoly a = vpow(1) + LaurentPoly(1);
    const LaurentPoly b = vpow(3) + LaurentPoly(1);
    for (int i = 0; i < 4; ++i) p *= a;
    p *= b;
    p *= b;
    return p;
}

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(1) == LaurentPoly(1));
    CHECK(quantum_integer(3) == from_pairs({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}}));
    CHECK(quantum_integer(0).is_zero());
    // [k](v-1) = v^k - 1, both signs of k
    for (long k = -8; k <= 8; ++k) {
        const LaurentPoly lhs = quantum_integer(k) * (vpow(1) - LaurentPoly(1));
        CHECK(lhs == vpow(static_cast<int>(k)) - LaurentPoly(1));
    }
}

TEST_CASE("rendering") {
    // ascending by (v-power, u-power), u prints the second parameter
    CHECK((vpow(-1) + LaurentPoly(1) + vpow(1)).str() == "v^-1 + 1 + v");
    CHECK(LaurentPoly().str() == "0");
    CHECK((-vpow(2)).str() == "-v^2");
    CHECK(from_pairs({{0, 0, 1}, {1, 1, -2}}).str() == "1 - 2 v u");
    CHECK(LaurentPoly::u(2).str() == "u^2");
}

TEST_CASE("exact division") {
    CHECK(laurent_exact_div(vpow(2) - LaurentPoly(1), vpow(1) - LaurentPoly(1)) ==
          vpow(1) + LaurentPoly(1));

    // quotient of the two Example-style products, checked by multiplying back
    const LaurentPoly num = example_f_beta();
    LaurentPoly den = vpow(2);
    const LaurentPoly a = vpow(1) + LaurentPoly(1);
    den *= a;
    den *= a;
    den *= vpow(3) + LaurentPoly(1);
    const LaurentPoly q = laurent_exact_div(num, den);
    CHECK(q * den == num);
    CHECK(q == den);  // num = den^2

    // unit divisor
    CHECK(laurent_exact_div(vpow(1) + LaurentPoly(1), vpow(1)) == vpow(-1) + LaurentPoly(1));

    CHECK_THROWS_AS(laurent_exact_div(vpow(1) + LaurentPoly(1), vpow(1) - LaurentPoly(1)),
                    NotDivisibleError);
    CHECK_THROWS_AS(laurent_exact_div(LaurentPoly(3), LaurentPoly(2)), NotDivisibleError);

    // two-variable case
    const LaurentPoly f = from_pairs({{1, 0, 1}, {0, 1, 1}});   // v + u
    const LaurentPoly g = from_pairs({{0, 1, 1}, {-1, 2, 3}});  // u + 3 v^-1 u^2
    CHECK(laurent_exact_div(f * g, g) == f);
}

TEST_CASE("square roots") {
    const LaurentPoly f = example_f_beta();
    const LaurentPoly g = laurent_sqrt(f);
    CHECK(g * g == f);
    CHECK(g.leading_coeff_v() > 0);

    CHECK(laurent_sqrt(LaurentPoly(1)) == LaurentPoly(1));

    // (v+1)^2 (v^2+1)^2 (v^3+1)^2 -> (v+1)(v^2+1)(v^3+1)
    LaurentPoly h(1);
    for (int k : {1, 2, 3}) {
        const LaurentPoly factor = vpow(k) + LaurentPoly(1);
        h *= factor;
        h *= factor;
    }
    LaurentPoly expected(1);
    for (int k : {1, 2, 3}) expected *= vpow(k) + LaurentPoly(1);
    CHECK(laurent_sqrt(h) == expected);

    CHECK_THROWS_AS(laurent_sqrt(vpow(1)), NotASquareError);
    CHECK_THROWS_AS(laurent_sqrt(vpow(2) + LaurentPoly(1)), NotASquareError);
}

TEST_CASE("square root of random squares keeps the sign convention") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coeff(-4, 4), expo(-3, 3), len(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly g;
        const int terms = len(rng);
        for (int t = 0; t < terms; ++t) g.add_term(expo(rng), 0, coeff(rng));
        if (g.is_zero()) continue;
        const LaurentPoly root = laurent_sqrt(g * g);
        CHECK(root * root == g * g);
        CHECK(root.leading_coeff_v() > 0);
    }
}
