#include <catch2/catch_amalgamated.hpp>

#include "ennea/mpoly.hpp"

using namespace ennea;

namespace {

QPoly qvar(const RingPtr& r, int i) { return QPoly::var(r, i); }

} // namespace

TEST_CASE("monomial basics") {
    Monomial one = Monomial::one();
    Monomial x = Monomial::var(0);
    Monomial y2 = Monomial::var(1, 2);

    CHECK(one.is_one());
    CHECK(x.deg == 1);
    CHECK(y2.deg == 2);

    Monomial xy2 = x * y2;
    CHECK(xy2.deg == 3);
    CHECK(xy2.e[0] == 1);
    CHECK(xy2.e[1] == 2);

    CHECK(x.divides(xy2));
    CHECK(!y2.divides(x));
    CHECK((xy2 / x) == y2);

    Monomial l = lcm(x, y2);
    CHECK(l.e[0] == 1);
    CHECK(l.e[1] == 2);
    CHECK(coprime(x, y2));
    CHECK(!coprime(xy2, y2));
}

TEST_CASE("degrevlex order on cubics in x,y,z") {
    // Descending degrevlex: x^3, x^2y, xy^2, y^3, x^2z, xyz, y^2z, xz^2, yz^2, z^3
    MonomialOrder ord = MonomialOrder::degrevlex(3);
    auto m = [](int a, int b, int c) {
        Monomial r;
        r.e[0] = uint8_t(a);
        r.e[1] = uint8_t(b);
        r.e[2] = uint8_t(c);
        r.deg = uint16_t(a + b + c);
        return r;
    };
    std::vector<Monomial> expect = {m(3, 0, 0), m(2, 1, 0), m(1, 2, 0), m(0, 3, 0),
                                    m(2, 0, 1), m(1, 1, 1), m(0, 2, 1), m(1, 0, 2),
                                    m(0, 1, 2), m(0, 0, 3)};
    for (std::size_t i = 0; i < expect.size(); ++i)
        for (std::size_t j = i + 1; j < expect.size(); ++j) {
            CHECK(ord.greater(expect[i], expect[j]));
            CHECK(!ord.greater(expect[j], expect[i]));
        }
    // degree dominates
    CHECK(ord.greater(m(0, 0, 3), m(1, 1, 0)));
}

TEST_CASE("lex order") {
    MonomialOrder ord = MonomialOrder::lex(3);
    Monomial x = Monomial::var(0), y = Monomial::var(1), z3 = Monomial::var(2, 3);
    CHECK(ord.greater(x, y));
    CHECK(ord.greater(x, z3)); // lex ignores total degree
    CHECK(ord.greater(y, z3));
    CHECK(ord.greater(x * y, x));
}

TEST_CASE("elimination order puts the block first") {
    // eliminate t1 from a 3-variable ring: any monomial containing t1 beats
    // any monomial that avoids it
    MonomialOrder ord = MonomialOrder::elimination(3, {1});
    Monomial t1 = Monomial::var(1);
    Monomial big = Monomial::var(0, 5) * Monomial::var(2, 5);
    CHECK(ord.greater(t1, big));
    CHECK(!ord.greater(big, t1));
    // within the non-block segment the order is graded
    Monomial t0 = Monomial::var(0), t2sq = Monomial::var(2, 2);
    CHECK(ord.greater(t2sq, t0));
}

TEST_CASE("storage order agrees with degrevlex leading term") {
    RingPtr r = xyz_ring();
    MonomialOrder ord = MonomialOrder::degrevlex(3);
    QPoly x = qvar(r, 0), y = qvar(r, 1), z = qvar(r, 2);
    QPoly p = x * x * z + y * y * y - x * y * z + z * z * z;
    REQUIRE(!p.is_zero());
    CHECK(p.leading(ord).m == p.terms()[0].m);
    // terms strictly decreasing in storage
    for (std::size_t i = 0; i + 1 < p.terms().size(); ++i)
        CHECK(QPoly::storage_greater(p.terms()[i].m, p.terms()[i + 1].m));
}

TEST_CASE("arithmetic identities") {
    RingPtr r = xyz_ring();
    QPoly x = qvar(r, 0), y = qvar(r, 1), z = qvar(r, 2);
    QPoly s = x + y + z;
    QPoly sq = s * s;
    QPoly expect = x * x + y * y + z * z + (x * y + x * z + y * z).scaled(Rat(2));
    CHECK(sq == expect);

    CHECK((s - s).is_zero());
    CHECK((s + (-s)).is_zero());
    CHECK((s * QPoly::zero(r)).is_zero());
    CHECK(s * QPoly::constant(r, Rat(1)) == s);

    QPoly a = x * y - z, b = x + z;
    CHECK(a * b == b * a);
    CHECK((a + b) * s == a * s + b * s);
}

TEST_CASE("derivative, substitution, evaluation") {
    RingPtr r = xyz_ring();
    QPoly x = qvar(r, 0), y = qvar(r, 1);
    QPoly p = x * x * x + x * y; // x^3 + xy
    QPoly dx = p.derivative(0);
    CHECK(dx == (x * x).scaled(Rat(3)) + y); // 3x^2 + y

    QPoly at2 = p.substituted(0, Rat(2)); // 8 + 2y
    CHECK(at2 == QPoly::constant(r, Rat(8)) + y.scaled(Rat(2)));

    // substitute a polynomial: x := y + 1 in x^2 gives y^2 + 2y + 1
    QPoly sq = x * x;
    QPoly sub = sq.substituted_poly(0, y + QPoly::constant(r, Rat(1)));
    CHECK(sub == y * y + y.scaled(Rat(2)) + QPoly::constant(r, Rat(1)));

    CHECK(p.evaluated({Rat(2), Rat(3), Rat(0)}) == Rat(14));
    CHECK(p.evaluated({Rat(-1), Rat(1, 2), Rat(7)}) == Rat(-3, 2));
}

TEST_CASE("mapped moves polynomials between rings") {
    RingPtr small = make_ring({"t0", "t1"});
    RingPtr big = make_ring({"a", "t0", "t1", "b"});
    QPoly p = QPoly::var(small, 0) * QPoly::var(small, 0) - QPoly::var(small, 1);
    QPoly q = p.mapped(big, {1, 2});
    CHECK(q.uses_var(1));
    CHECK(q.uses_var(2));
    CHECK(!q.uses_var(0));
    CHECK(!q.uses_var(3));
    CHECK(q.evaluated({Rat(99), Rat(3), Rat(9), Rat(99)}) == Rat(0));
}

TEST_CASE("integer-content normalization") {
    RingPtr r = param_ring(2);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    QPoly t0 = qvar(r, 0), t1 = qvar(r, 1);

    QPoly p = t0.scaled(Rat(2, 3)) - t1.scaled(Rat(4, 3));
    CHECK(poly_to_string(normalized(p, ord)) == "t0 - 2*t1");

    QPoly q = -t0 + t1.scaled(Rat(2));
    CHECK(poly_to_string(normalized(q, ord)) == "t0 - 2*t1");

    // fractional constant terms clear to integers
    QPoly s = t0 - t1.scaled(Rat(1, 2)) + QPoly::constant(r, Rat(1));
    CHECK(poly_to_string(normalized(s, ord)) == "2*t0 - t1 + 2");
}

TEST_CASE("monic normalization over an extension") {
    RingPtr r = param_ring(1);
    MonomialOrder ord = MonomialOrder::degrevlex(1);
    QuadExt w(Rat(1), Rat(1), -3); // 1 + sqrt(-3)
    KPoly p = KPoly::var(r, 0).scaled(w) + KPoly::constant(r, QuadExt(Rat(2)));
    KPoly n = normalized(p, ord);
    CHECK(n.leading(ord).c == QuadExt(Rat(1)));
    // 2/(1+sqrt(-3)) = (1-sqrt(-3))/2
    CHECK(n.terms().back().c == QuadExt(Rat(1, 2), Rat(-1, 2), -3));
}

TEST_CASE("printing format") {
    RingPtr r = param_ring(4);
    QPoly t0 = qvar(r, 0), t1 = qvar(r, 1), t3 = qvar(r, 3);

    CHECK(poly_to_string(t0.scaled(Rat(2)) - t1) == "2*t0 - t1");
    CHECK(poly_to_string(QPoly::zero(r)) == "0");
    CHECK(poly_to_string(QPoly::constant(r, Rat(-7, 2))) == "-7/2");
    CHECK(poly_to_string(t3 * t3 - t3.scaled(Rat(2)) + QPoly::constant(r, Rat(4))) ==
          "t3^2 - 2*t3 + 4");
    CHECK(poly_to_string(-t0 * t1 + QPoly::constant(r, Rat(1, 3))) == "-t0*t1 + 1/3");
    CHECK(poly_to_string(t0.scaled(Rat(1, 2))) == "1/2*t0");

    // extension coefficients that are sums get parenthesized
    KPoly k = KPoly::var(r, 0).scaled(QuadExt(Rat(1), Rat(1), -3)) -
              KPoly::constant(r, QuadExt(Rat(0), Rat(2), -3));
    CHECK(poly_to_string(k) == "(1+sqrt(-3))*t0 - 2*sqrt(-3)");
}

TEST_CASE("printing uses graded order with ties broken reverse-lex") {
    RingPtr r = xyz_ring();
    QPoly x = qvar(r, 0), y = qvar(r, 1), z = qvar(r, 2);
    QPoly p = z * z * z + x * y * z + x * x * x;
    CHECK(poly_to_string(p) == "x^3 + x*y*z + z^3");
    QPoly q = y * z - x * x + QPoly::constant(r, Rat(5));
    CHECK(poly_to_string(q) == "-x^2 + y*z + 5");
}

TEST_CASE("parser round trip") {
    RingPtr r = param_ring(9);
    std::vector<QPoly> polys;
    QPoly t0 = qvar(r, 0), t1 = qvar(r, 1), t8 = qvar(r, 8);
    polys.push_back(t0.scaled(Rat(2)) - t1);
    polys.push_back(t0 * t0 * t1 - t8.scaled(Rat(1, 2)) + QPoly::constant(r, Rat(7)));
    polys.push_back(QPoly::zero(r));
    polys.push_back(-t0 * t0 + t1 * t8.scaled(Rat(-3, 4)));
    polys.push_back(QPoly::constant(r, Rat(-11, 6)));
    for (auto& p : polys) {
        CAPTURE(poly_to_string(p));
        CHECK(parse_poly(r, poly_to_string(p)) == p);
    }
}

TEST_CASE("parser accepts parentheses and powers") {
    RingPtr r = param_ring(2);
    QPoly t0 = qvar(r, 0), t1 = qvar(r, 1);
    CHECK(parse_poly(r, "(t0 + 1)*(t0 - 1)") == t0 * t0 - QPoly::constant(r, Rat(1)));
    CHECK(parse_poly(r, "t1^3") == t1 * t1 * t1);
    CHECK(parse_poly(r, "2*t0^2*t1 - 1/2") ==
          (t0 * t0 * t1).scaled(Rat(2)) - QPoly::constant(r, Rat(1, 2)));
    CHECK_THROWS_AS(parse_poly(r, "t9 + 1"), IoError);
    CHECK_THROWS_AS(parse_poly(r, "t0 + "), IoError);
}
