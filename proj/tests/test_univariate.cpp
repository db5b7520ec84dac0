#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ennea/univariate.hpp"

using namespace ennea;

namespace {

using UP = std::vector<Rat>;

UP lin(const Rat& root) { return {-root, Rat(1)}; } // x - root

UP scaled_lin(const Rat& a, const Rat& b) { return {b, a}; } // a*x + b

UP prod(const std::vector<UP>& fs) {
    UP acc{Rat(1)};
    for (auto& f : fs) acc = upoly_mul(acc, f);
    return acc;
}

} // namespace

TEST_CASE("dense polynomial helpers") {
    UP p = {Rat(-1), Rat(0), Rat(1)}; // x^2 - 1
    CHECK(upoly_deg(p) == 2);
    CHECK(upoly_eval(p, Rat(3)) == Rat(8));
    CHECK(upoly_eval(p, Rat(1)) == Rat(0));

    UP d = upoly_derivative(p);
    REQUIRE(d.size() == 2);
    CHECK(d[1] == Rat(2));

    auto [q, r] = upoly_divmod(p, lin(Rat(1)));
    CHECK(r.empty());
    CHECK(q == UP{Rat(1), Rat(1)}); // x + 1

    auto [q2, r2] = upoly_divmod(p, lin(Rat(2)));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == Rat(3)); // remainder = p(2)

    UP g = upoly_gcd(prod({lin(Rat(1)), lin(Rat(2))}), prod({lin(Rat(2)), lin(Rat(3))}));
    CHECK(g == lin(Rat(2))); // monic gcd

    UP sq = prod({lin(Rat(5)), lin(Rat(5)), lin(Rat(7))});
    UP sf = upoly_squarefree(sq);
    CHECK(upoly_deg(sf) == 2);
    CHECK(upoly_eval(sf, Rat(5)).is_zero());
    CHECK(upoly_eval(sf, Rat(7)).is_zero());
}

TEST_CASE("sturm counting") {
    UP p = {Rat(-2), Rat(0), Rat(1)}; // x^2 - 2
    auto chain = sturm_chain(p);
    CHECK(sturm_count(chain, Rat(0), Rat(2)) == 1);
    CHECK(sturm_count(chain, Rat(-2), Rat(0)) == 1);
    CHECK(sturm_count(chain, Rat(1), Rat(2)) == 1);
    CHECK(sturm_count(chain, Rat(-1), Rat(1)) == 0);
    CHECK(sturm_count(chain, Rat(-2), Rat(2)) == 2);

    // repeated roots count once; (x-1)^2 (x+2)
    UP q = prod({lin(Rat(1)), lin(Rat(1)), lin(Rat(-2))});
    auto qc = sturm_chain(upoly_squarefree(q));
    CHECK(sturm_count(qc, Rat(-3), Rat(3)) == 2);
}

TEST_CASE("rational root finding is complete") {
    SECTION("simple roots with fractions") {
        UP p = prod({scaled_lin(Rat(2), Rat(-1)), lin(Rat(-3)), lin(Rat(7))}); // (2x-1)(x+3)(x-7)
        auto roots = rational_roots(p);
        REQUIRE(roots.size() == 3);
        CHECK(roots[0] == std::make_pair(Rat(-3), 1));
        CHECK(roots[1] == std::make_pair(Rat(1, 2), 1));
        CHECK(roots[2] == std::make_pair(Rat(7), 1));
    }
    SECTION("multiplicities") {
        UP p = prod({lin(Rat(2)), lin(Rat(2)), lin(Rat(-1, 3)), lin(Rat(-1, 3)), lin(Rat(-1, 3))});
        auto roots = rational_roots(p);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == std::make_pair(Rat(-1, 3), 3));
        CHECK(roots[1] == std::make_pair(Rat(2), 2));
    }
    SECTION("zero roots") {
        UP p = prod({lin(Rat(0)), lin(Rat(0)), lin(Rat(4))});
        auto roots = rational_roots(p);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == std::make_pair(Rat(0), 2));
        CHECK(roots[1] == std::make_pair(Rat(4), 1));
    }
    SECTION("huge prime numerators and denominators") {
        Rat p(1000003);
        UP f = prod({lin(p * p), lin(p.inverse()), lin(-p)});
        auto roots = rational_roots(f);
        REQUIRE(roots.size() == 3);
        CHECK(roots[0].first == -p);
        CHECK(roots[1].first == p.inverse());
        CHECK(roots[2].first == p * p);
    }
    SECTION("no rational roots") {
        CHECK(rational_roots({Rat(1), Rat(0), Rat(1)}).empty());  // x^2 + 1
        CHECK(rational_roots({Rat(-2), Rat(0), Rat(1)}).empty()); // x^2 - 2
        CHECK(rational_roots({Rat(-2), Rat(0), Rat(0), Rat(1)}).empty()); // x^3 - 2
        CHECK(rational_roots({Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)}).empty());
    }
    SECTION("mixed rational and irrational") {
        // (x - 1)(x^2 - 2)
        UP p = upoly_mul(lin(Rat(1)), UP{Rat(-2), Rat(0), Rat(1)});
        auto roots = rational_roots(p);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == std::make_pair(Rat(1), 1));
    }
}

TEST_CASE("quadratic factor roots") {
    // x^2 - 2x + 4 has roots 1 +- sqrt(-3)
    QuadFactor f{Rat(1), Rat(-2), Rat(4), 0};
    f.d = long(squarefree_part(f.B * f.B - Rat(4) * f.A * f.C).get_si());
    CHECK(f.d == -3);
    auto [r1, r2] = f.roots();
    CHECK(r1 == QuadExt(Rat(1), Rat(1), -3));
    CHECK(r2 == QuadExt(Rat(1), Rat(-1), -3));

    // 2x^2 - 2x - 1: roots (1 +- sqrt(3))/2
    QuadFactor g{Rat(2), Rat(-2), Rat(-1), 3};
    auto [s1, s2] = g.roots();
    CHECK(s1 == QuadExt(Rat(1, 2), Rat(1, 2), 3));
    CHECK(s2 == QuadExt(Rat(1, 2), Rat(-1, 2), 3));
    // verify by substitution
    QuadExt two(Rat(2)), val = two * s1 * s1 - two * s1 - QuadExt(Rat(1));
    CHECK(val.is_zero());
}

TEST_CASE("root field analysis") {
    SECTION("pure quadratic") {
        RootField rf = analyze_roots({Rat(3), Rat(0), Rat(1)}); // x^2 + 3
        CHECK(rf.rational.empty());
        REQUIRE(rf.quadratics.size() == 1);
        CHECK(rf.quadratics[0].d == -3);
        CHECK(rf.unsolvable_degrees.empty());
    }
    SECTION("biquadratic splits into two quadratics") {
        // (x^2 + 1)(x^2 + 3) = x^4 + 4x^2 + 3
        RootField rf = analyze_roots({Rat(3), Rat(0), Rat(4), Rat(0), Rat(1)});
        CHECK(rf.rational.empty());
        REQUIRE(rf.quadratics.size() == 2);
        CHECK(rf.quadratics[0].d == -1);
        CHECK(rf.quadratics[1].d == -3);
        CHECK(rf.unsolvable_degrees.empty());
    }
    SECTION("general quartic via the resolvent") {
        // (x^2 + x + 1)(x^2 - x + 3) = x^4 + 3x^2 + 2x + 3
        RootField rf = analyze_roots({Rat(3), Rat(2), Rat(3), Rat(0), Rat(1)});
        CHECK(rf.rational.empty());
        REQUIRE(rf.quadratics.size() == 2);
        long d0 = rf.quadratics[0].d, d1 = rf.quadratics[1].d;
        CHECK(((d0 == -3 && d1 == -11) || (d0 == -11 && d1 == -3)));
        // the reported factors really divide the quartic
        for (auto& qf : rf.quadratics) {
            auto [root, conj_root] = qf.roots();
            QuadExt v = QuadExt(Rat(3)) + QuadExt(Rat(2)) * root +
                        QuadExt(Rat(3)) * root * root + root * root * root * root;
            CHECK(v.is_zero());
        }
    }
    SECTION("square of an irreducible quadratic") {
        // (x^2 + 1)^2 = x^4 + 2x^2 + 1
        RootField rf = analyze_roots({Rat(1), Rat(0), Rat(2), Rat(0), Rat(1)});
        CHECK(rf.rational.empty());
        REQUIRE(rf.quadratics.size() == 1);
        CHECK(rf.quadratics[0].d == -1);
    }
    SECTION("rational roots are stripped before factor analysis") {
        // (x - 1)(x + 2)(x^2 - 5)
        UP p = upoly_mul(prod({lin(Rat(1)), lin(Rat(-2))}), UP{Rat(-5), Rat(0), Rat(1)});
        RootField rf = analyze_roots(p);
        REQUIRE(rf.rational.size() == 2);
        REQUIRE(rf.quadratics.size() == 1);
        CHECK(rf.quadratics[0].d == 5);
    }
    SECTION("irreducible cubic is out of reach") {
        RootField rf = analyze_roots({Rat(-2), Rat(0), Rat(0), Rat(1)}); // x^3 - 2
        CHECK(rf.rational.empty());
        CHECK(rf.quadratics.empty());
        CHECK(rf.unsolvable_degrees == std::vector<int>{3});
        CHECK_THROWS_AS(root_field({Rat(-2), Rat(0), Rat(0), Rat(1)}), NoSolvableRootError);
    }
    SECTION("irreducible quintic is out of reach") {
        // x^5 - x - 1 (no rational roots, not a solvable-by-sqrt shape)
        UP p = {Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)};
        RootField rf = analyze_roots(p);
        CHECK(rf.rational.empty());
        CHECK(rf.quadratics.empty());
        CHECK(rf.unsolvable_degrees == std::vector<int>{5});
        CHECK_THROWS_AS(root_field(p), NoSolvableRootError);
    }
    SECTION("cubic with one rational root leaves a quadratic") {
        // (x + 1)(x^2 - 2x + 4): root -1 plus a conjugate pair in Q[sqrt(-3)]
        UP p = upoly_mul(lin(Rat(-1)), UP{Rat(4), Rat(-2), Rat(1)});
        RootField rf = root_field(p);
        REQUIRE(rf.rational.size() == 1);
        CHECK(rf.rational[0].first == Rat(-1));
        REQUIRE(rf.quadratics.size() == 1);
        CHECK(rf.quadratics[0].d == -3);
    }
    SECTION("constants have no roots") {
        RootField rf = analyze_roots({Rat(5)});
        CHECK(rf.rational.empty());
        CHECK(rf.quadratics.empty());
        CHECK(rf.unsolvable_degrees.empty());
        CHECK_THROWS_AS(analyze_roots(UP{}), std::invalid_argument);
    }
}
