#include <catch2/catch_amalgamated.hpp>

#include "ennea/quadext.hpp"
#include "ennea/rational.hpp"

using namespace ennea;

TEST_CASE("Rat is always canonical") {
    Rat a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rat b(3, -6);
    CHECK(b.num() == -1);
    CHECK(b.den() == 2);
    CHECK(Rat(0, 5) == Rat(0));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(1, 3) * Rat(3)) == Rat(1));
    CHECK((Rat(7, 2) / Rat(7)) == Rat(1, 2));
    CHECK(Rat(-5, 3) < Rat(-1, 3));
    CHECK(Rat::from_string("-13/18").num() == -13);
    CHECK(Rat(5, 7).str() == "5/7");
    CHECK(pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(BigInt(-12)) == -3);
    CHECK(squarefree_part(BigInt(-4)) == -1);
    CHECK(squarefree_part(BigInt(8)) == 2);
    CHECK(squarefree_part(BigInt(1)) == 1);
    CHECK(squarefree_part(BigInt(45)) == 5);
    CHECK(squarefree_part(BigInt(49)) == 1);
    CHECK(squarefree_part(BigInt(360)) == 10); // 360 = 36 * 10
    // beyond the trial-division bound: p = 1000003 (prime)
    BigInt p(1000003);
    CHECK(squarefree_part(p * p * 2) == 2);
    CHECK(squarefree_part(p * 3) == p * 3);
    CHECK(squarefree_part(Rat(-3, 4)) == -3);  // -3/4 ~ -12
    CHECK(squarefree_part(Rat(2, 3)) == 6);
}

TEST_CASE("rational square roots") {
    Rat s;
    REQUIRE(rat_sqrt(Rat(49, 4), s));
    CHECK(s == Rat(7, 2));
    CHECK_FALSE(rat_sqrt(Rat(2), s));
    CHECK_FALSE(rat_sqrt(Rat(-4), s));
    REQUIRE(rat_sqrt(Rat(0), s));
    CHECK(s == Rat(0));
}

TEST_CASE("QuadExt arithmetic in Q[sqrt(-3)]") {
    QuadExt w(Rat(1), Rat(1), -3); // 1 + sqrt(-3)
    QuadExt wc = w.conj();
    CHECK((w * wc) == QuadExt(Rat(4)));
    CHECK(w.norm() == Rat(4));
    CHECK((w + wc) == QuadExt(Rat(2)));
    CHECK((w - w).is_zero());
    CHECK((w * w) == QuadExt(Rat(-2), Rat(2), -3));
    CHECK(w.inverse() == QuadExt(Rat(1, 4), Rat(-1, 4), -3));
    CHECK((w / w).is_one());
    CHECK(w.str() == "1+sqrt(-3)");
    CHECK(QuadExt(Rat(0), Rat(-2), -3).str() == "-2*sqrt(-3)");
    CHECK(QuadExt(Rat(1, 2), Rat(-3, 4), -1).str() == "1/2-3/4*sqrt(-1)");
    // mixing distinct extensions is an error
    QuadExt v(Rat(0), Rat(1), 2);
    CHECK_THROWS(w + v);
    // rational-valued elements mix with anything
    CHECK((QuadExt(Rat(2)) * v) == QuadExt(Rat(0), Rat(2), 2));
}

TEST_CASE("square roots inside a quadratic extension") {
    QuadExt out;
    REQUIRE(quadext_sqrt(QuadExt(Rat(4)), -3, out));
    CHECK(out == QuadExt(Rat(2)));
    // sqrt(-3) itself
    REQUIRE(quadext_sqrt(QuadExt(Rat(-3)), -3, out));
    CHECK((out * out) == QuadExt(Rat(-3)));
    // (1 + sqrt(-3))^2 = -2 + 2 sqrt(-3)
    REQUIRE(quadext_sqrt(QuadExt(Rat(-2), Rat(2), -3), -3, out));
    CHECK((out * out) == QuadExt(Rat(-2), Rat(2), -3));
    // 2 is not a square in Q[sqrt(-3)]
    CHECK_FALSE(quadext_sqrt(QuadExt(Rat(2)), -3, out));
}
