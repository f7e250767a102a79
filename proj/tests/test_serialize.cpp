#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dzeta/reduction.hpp"
#include "dzeta/serialize.hpp"
#include "oracles.hpp"

using namespace dzeta;

TEST_CASE("ZetaExpr json schema is pinned") {
    const auto e = reduce_signed(2, 1, Sign::minus, Sign::plus);
    const auto j = expr_to_json(e);
    CHECK(j.dump() ==
          R"({"terms":[{"coeff":"1/2","atoms":[{"arg":3,"sign":-1}]},)"
          R"({"coeff":"1/2","atoms":[{"arg":3,"sign":1}]}],)"
          R"("flags":["uses_zeta_one_convention"]})");

    const auto plain = reduce_euler(2, 3);
    CHECK(expr_to_json(plain).dump() ==
          R"({"terms":[{"coeff":"9/2","atoms":[{"arg":5,"sign":1}]},)"
          R"({"coeff":"-2/1","atoms":[{"arg":2,"sign":1},{"arg":3,"sign":1}]}],"flags":[]})");

    const auto conv = reduce_signed(2, 1, Sign::plus, Sign::plus);
    const auto jc = expr_to_json(conv);
    CHECK(jc.dump() ==
          R"({"terms":[{"coeff":"1/1","atoms":[{"arg":3,"sign":1}]}],)"
          R"("flags":["uses_zeta_one_convention"]})");
}

TEST_CASE("ZetaExpr json round-trips") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const auto e = normalize(oracles::random_expr(rng, i % 4 == 0));
        const auto back = expr_from_json(expr_to_json(e));
        CHECK(back == e);
    }
    for (int s = 2; s <= 5; ++s)
        for (int t = 2; t <= 5; ++t) {
            if ((s + t) % 2 == 0) continue;
            const auto e = reduce_signed(s, t, Sign::minus, Sign::plus);
            CHECK(expr_from_json(expr_to_json(e)) == e);
        }
}

TEST_CASE("Enclosure json round-trips exactly") {
    const Enclosure samples[] = {
        {1.2020569031595942854L, 1e-10L},
        {-0.69314718055994530942L, 3.7e-13L},
        {0.0L, 0.0L},
        {-0.5L, 0.0L},
    };
    for (const auto& e : samples) {
        const Enclosure back = enclosure_from_json(enclosure_to_json(e));
        CHECK(back.value == e.value);
        CHECK(back.error_bound == e.error_bound);
    }
    const auto j = enclosure_to_json({0.5L, 0.25L});
    CHECK(j.contains("value"));
    CHECK(j.contains("error_bound"));
    CHECK(j.at("value").is_string());
}

TEST_CASE("text rendering") {
    CHECK(expr_to_text(ZetaExpr::zero()) == "0");
    CHECK(expr_to_text(reduce_signed(2, 1, Sign::plus, Sign::plus)) == "zeta(3)");
    CHECK(expr_to_text(reduce_s1(3)) == "3/2*zeta(4) - 1/2*zeta(2)^2");
    CHECK(expr_to_text(reduce_s1(4)) == "2*zeta(5) - zeta(2)*zeta(3)");
    CHECK(expr_to_text(reduce_signed(2, 1, Sign::minus, Sign::plus)) ==
          "1/2*zeta(3;-1) + 1/2*zeta(3)");
    CHECK(expr_to_text(ZetaExpr::constant(rat(-3, 4))) == "-3/4");
}

TEST_CASE("latex rendering") {
    CHECK(expr_to_latex(reduce_signed(2, 1, Sign::plus, Sign::plus)) == "\\zeta(3)");
    CHECK(expr_to_latex(reduce_s1(3)) == "\\tfrac{3}{2}\\zeta(4) - \\tfrac{1}{2}\\zeta(2)^{2}");
    CHECK(expr_to_latex(reduce_signed(2, 1, Sign::minus, Sign::plus)) ==
          "\\tfrac{1}{2}\\zeta(3;-1) + \\tfrac{1}{2}\\zeta(3)");
}

TEST_CASE("latex pi powers") {
    // zeta(2) -> pi^2/6, zeta(4) -> pi^4/90, zeta(2)^2 -> pi^4/36
    const auto z2 = ZetaExpr::single(rat(1), {2, Sign::plus});
    CHECK(expr_to_latex(z2, true) == "\\tfrac{1}{6}\\pi^{2}");
    const auto z4 = ZetaExpr::single(rat(1), {4, Sign::plus});
    CHECK(expr_to_latex(z4, true) == "\\tfrac{1}{90}\\pi^{4}");
    const auto z22 = ZetaExpr::product(rat(1), {2, Sign::plus}, {2, Sign::plus});
    CHECK(expr_to_latex(z22, true) == "\\tfrac{1}{36}\\pi^{4}");
    // coefficients fold into the pi-power scales: 3/2 * 1/90 and 1/2 * 1/36
    const auto e = reduce_s1(3);
    CHECK(expr_to_latex(e, true) == "\\tfrac{1}{60}\\pi^{4} - \\tfrac{1}{72}\\pi^{4}");
    // signed atoms stay symbolic
    const auto m = ZetaExpr::single(rat(1), {2, Sign::minus});
    CHECK(expr_to_latex(m, true) == "\\zeta(2;-1)");
}

TEST_CASE("guaranteed-digit text for enclosures") {
    // bound 1e-10: ten decimals are stable
    const std::string s = enclosure_to_text({1.2020569031595942854L, 1.0e-10L});
    CHECK(s.substr(0, 11) == "1.202056903");
    CHECK(s.find("+-") != std::string::npos);
    const std::string exact = enclosure_to_text({-0.5L, 0.0L});
    CHECK(exact.find("exact") != std::string::npos);
    // a wide bound leaves almost nothing to print
    const std::string wide = enclosure_to_text({1.234L, 0.2L});
    CHECK(wide.substr(0, 1) == "1");
}

TEST_CASE("round-trip format for long double") {
    const long double xs[] = {1.2020569031595942854L, -0.69314718055994530942L, 3.0L,
                              1.0842021724855044e-19L};
    for (const long double x : xs)
        CHECK(parse_long_double(format_long_double_roundtrip(x)) == x);
}

TEST_CASE("malformed json is a domain error") {
    CHECK_THROWS_AS(expr_from_json(nlohmann::json::parse(
                        R"({"terms":[{"coeff":"x","atoms":[]}],"flags":[]})")),
                    domain_error);
    CHECK_THROWS_AS(expr_from_json(nlohmann::json::parse(
                        R"({"terms":[{"coeff":"1/2","atoms":[{"arg":3,"sign":2}]}]})")),
                    domain_error);
}
