#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dzeta/reduction.hpp"

using namespace dzeta;

namespace {

ZetaExpr reflection_rhs(int s, int t, Sign sg, Sign tu) {
    // zeta(s;sigma) zeta(t;tau) - zeta(s+t;sigma tau)
    return ZetaExpr::product(rat(1), {s, sg}, {t, tu}) -
           ZetaExpr::single(rat(1), {s + t, sg * tu});
}

} // namespace

TEST_CASE("zeta(2,1) reduces to zeta(3)") {
    const auto e = reduce_signed(2, 1, Sign::plus, Sign::plus);
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms()[0].coeff == rat(1));
    CHECK(e.terms()[0].atoms == std::vector<ZetaAtom>{ZetaAtom{3, Sign::plus}});
    CHECK(e.uses_zeta_one_convention());
    // same value through the classical route, which never touches zeta(1;1)
    const auto s1 = reduce_s1(2);
    CHECK(s1.terms() == e.terms());
    CHECK(!s1.uses_zeta_one_convention());
}

TEST_CASE("zeta(2,1;-1,+1) = 1/2 zeta(3;-1) + 1/2 zeta(3)") {
    const auto e = reduce_signed(2, 1, Sign::minus, Sign::plus);
    REQUIRE(e.terms().size() == 2);
    CHECK(e.terms()[0].coeff == rat(1, 2));
    CHECK(e.terms()[0].atoms == std::vector<ZetaAtom>{ZetaAtom{3, Sign::minus}});
    CHECK(e.terms()[1].coeff == rat(1, 2));
    CHECK(e.terms()[1].atoms == std::vector<ZetaAtom>{ZetaAtom{3, Sign::plus}});
}

TEST_CASE("zeta(1,2;-1,+1) is in range and contains the log atom") {
    const auto e = reduce_signed(1, 2, Sign::minus, Sign::plus);
    bool has_log = false;
    for (const auto& t : e.terms())
        for (const auto& a : t.atoms)
            if (a.argument == 1 && a.sign == Sign::minus) has_log = true;
    CHECK(has_log);
}

TEST_CASE("classical zs1 forms") {
    const auto s3 = reduce_s1(3);
    REQUIRE(s3.terms().size() == 2);
    CHECK(s3.terms()[0].coeff == rat(3, 2));
    CHECK(s3.terms()[0].atoms == std::vector<ZetaAtom>{ZetaAtom{4, Sign::plus}});
    CHECK(s3.terms()[1].coeff == rat(-1, 2));
    CHECK(s3.terms()[1].atoms ==
          std::vector<ZetaAtom>({ZetaAtom{2, Sign::plus}, ZetaAtom{2, Sign::plus}}));

    const auto s4 = reduce_s1(4);
    REQUIRE(s4.terms().size() == 2);
    CHECK(s4.terms()[0].coeff == rat(2));
    CHECK(s4.terms()[0].atoms == std::vector<ZetaAtom>{ZetaAtom{5, Sign::plus}});
    CHECK(s4.terms()[1].coeff == rat(-1));
    CHECK(s4.terms()[1].atoms ==
          std::vector<ZetaAtom>({ZetaAtom{2, Sign::plus}, ZetaAtom{3, Sign::plus}}));
}

TEST_CASE("signed t=1 family") {
    const auto e2 = reduce_even_s_t1(2, Sign::minus);
    REQUIRE(e2.terms().size() == 2);
    CHECK(e2.terms()[0].coeff == rat(1, 2));
    CHECK(e2.terms()[0].atoms == std::vector<ZetaAtom>{ZetaAtom{3, Sign::minus}});
    CHECK(e2.terms()[1].coeff == rat(1, 2));
    CHECK(e2.terms()[1].atoms == std::vector<ZetaAtom>{ZetaAtom{3, Sign::plus}});

    const auto e4 = reduce_even_s_t1(4, Sign::minus);
    REQUIRE(e4.terms().size() == 3);
    CHECK(e4.terms()[0].coeff == rat(3, 2));
    CHECK(e4.terms()[0].atoms == std::vector<ZetaAtom>{ZetaAtom{5, Sign::minus}});
    CHECK(e4.terms()[1].coeff == rat(1, 2));
    CHECK(e4.terms()[1].atoms == std::vector<ZetaAtom>{ZetaAtom{5, Sign::plus}});
    CHECK(e4.terms()[2].coeff == rat(-1));
    CHECK(e4.terms()[2].atoms ==
          std::vector<ZetaAtom>({ZetaAtom{2, Sign::minus}, ZetaAtom{3, Sign::plus}}));

    // sigma=+1 collapses to the classical form
    CHECK(reduce_even_s_t1(2, Sign::plus).terms() == reduce_s1(2).terms());
    CHECK(reduce_even_s_t1(4, Sign::plus).terms() == reduce_s1(4).terms());
    CHECK(reduce_even_s_t1(6, Sign::plus).terms() == reduce_s1(6).terms());

    // and matches the signed reduction through the convention path
    for (int s : {2, 4, 6, 8}) {
        CHECK(reduce_signed(s, 1, Sign::minus, Sign::plus).terms() ==
              reduce_even_s_t1(s, Sign::minus).terms());
        CHECK(reduce_signed(s, 1, Sign::plus, Sign::plus).terms() ==
              reduce_even_s_t1(s, Sign::plus).terms());
    }
}

TEST_CASE("euler reduction: known weight-5 forms") {
    const auto e23 = reduce_euler(2, 3);
    REQUIRE(e23.terms().size() == 2);
    CHECK(e23.terms()[0].coeff == rat(9, 2));
    CHECK(e23.terms()[0].atoms == std::vector<ZetaAtom>{ZetaAtom{5, Sign::plus}});
    CHECK(e23.terms()[1].coeff == rat(-2));

    const auto e32 = reduce_euler(3, 2);
    REQUIRE(e32.terms().size() == 2);
    CHECK(e32.terms()[0].coeff == rat(-11, 2));
    CHECK(e32.terms()[1].coeff == rat(3));
}

TEST_CASE("euler and signed reductions agree at sigma=tau=+1") {
    for (int s = 2; s <= 7; ++s)
        for (int t = 2; t <= 7; ++t) {
            if ((s + t) % 2 == 0 || s + t > 9) continue;
            CHECK(reduce_euler(s, t).terms() ==
                  reduce_signed(s, t, Sign::plus, Sign::plus).terms());
        }
}

TEST_CASE("symbolic reflection identity") {
    constexpr Sign signs[2] = {Sign::plus, Sign::minus};
    for (int s = 2; s <= 6; ++s)
        for (int t = 2; t <= 6; ++t) {
            if ((s + t) % 2 == 0 || s + t > 9) continue;
            for (Sign sg : signs)
                for (Sign tu : signs) {
                    const auto lhs = reduce_signed(s, t, sg, tu) + reduce_signed(t, s, tu, sg);
                    CHECK(lhs.terms() == reflection_rhs(s, t, sg, tu).terms());
                }
        }
}

TEST_CASE("atom arguments stay within the weight and products within length 2") {
    constexpr Sign signs[2] = {Sign::plus, Sign::minus};
    for (int s = 1; s <= 6; ++s)
        for (int t = 1; t <= 6; ++t) {
            if ((s + t) % 2 == 0) continue;
            for (Sign sg : signs)
                for (Sign tu : signs) {
                    if (sg == Sign::plus && s < 2) continue;
                    if (tu == Sign::plus && t == 1 && s % 2 != 0) continue;
                    const auto e = reduce_signed(s, t, sg, tu);
                    for (const auto& term : e.terms()) {
                        CHECK(term.atoms.size() <= 2);
                        for (const auto& a : term.atoms) {
                            CHECK(a.argument >= 1);
                            CHECK(a.argument <= s + t);
                        }
                    }
                }
        }
}

TEST_CASE("precondition violations") {
    CHECK_THROWS_AS(reduce_signed(2, 2, Sign::plus, Sign::plus), domain_error);
    CHECK_THROWS_AS(reduce_signed(1, 2, Sign::plus, Sign::plus), divergence_error);
    CHECK_THROWS_AS(reduce_signed(3, 1, Sign::plus, Sign::plus), domain_error);
    CHECK_THROWS_AS(reduce_signed(3, 1, Sign::minus, Sign::plus), domain_error);
    CHECK_THROWS_AS(reduce_signed(0, 3, Sign::minus, Sign::plus), domain_error);
    CHECK_THROWS_AS(reduce_euler(1, 2), domain_error);
    CHECK_THROWS_AS(reduce_euler(2, 1), domain_error);
    CHECK_THROWS_AS(reduce_euler(3, 3), domain_error);
    CHECK_THROWS_AS(reduce_s1(1), domain_error);
    CHECK_THROWS_AS(reduce_even_s_t1(3, Sign::minus), domain_error);
    CHECK_THROWS_AS(reduce_even_s_t1(0, Sign::plus), domain_error);
}

TEST_CASE("t=1 with tau=-1 is an ordinary signed case") {
    // zeta(2,1;+1,-1) = zeta(3) - zeta(1;-1) zeta(2;-1) + zeta(1;-1) zeta(2)
    const auto e = reduce_signed(2, 1, Sign::plus, Sign::minus);
    CHECK(!e.uses_zeta_one_convention());
    REQUIRE(e.terms().size() == 3);
    CHECK(e.terms()[0].coeff == rat(1));
    CHECK(e.terms()[0].atoms == std::vector<ZetaAtom>{ZetaAtom{3, Sign::plus}});
    CHECK(e.terms()[1].coeff == rat(-1));
    CHECK(e.terms()[1].atoms ==
          std::vector<ZetaAtom>({ZetaAtom{1, Sign::minus}, ZetaAtom{2, Sign::minus}}));
    CHECK(e.terms()[2].coeff == rat(1));
    CHECK(e.terms()[2].atoms ==
          std::vector<ZetaAtom>({ZetaAtom{1, Sign::minus}, ZetaAtom{2, Sign::plus}}));
}
