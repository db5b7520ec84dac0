#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ennea/canonical.hpp"
#include "ennea/enumerate.hpp"
#include "ennea/incidence.hpp"

using namespace ennea;

namespace {

IncidenceStructure S(std::initializer_list<const char*> blocks) {
    std::vector<std::string> v(blocks.begin(), blocks.end());
    return parse_structure(v);
}

std::array<int, 9> random_perm(std::mt19937_64& rng) {
    std::array<int, 9> p{};
    for (int i = 0; i < 9; ++i) p[std::size_t(i)] = i;
    for (int i = 8; i > 0; --i) {
        int j = int(rng() % std::size_t(i + 1));
        std::swap(p[std::size_t(i)], p[std::size_t(j)]);
    }
    return p;
}

} // namespace

TEST_CASE("triples validate and order") {
    CHECK(make_triple(2, 0, 1) == make_triple(0, 1, 2));
    CHECK(make_triple(0, 1, 2).str() == "012");
    CHECK_THROWS(make_triple(1, 1, 2));
    CHECK_THROWS(make_triple(0, 1, 9));
    CHECK(shared_points(make_triple(0, 1, 2), make_triple(0, 1, 3)) == 2);
    CHECK(shared_points(make_triple(0, 1, 2), make_triple(3, 4, 5)) == 0);
    CHECK(all_triples().size() == 84);
    CHECK(colex_less(make_triple(2, 3, 4), make_triple(0, 1, 5)));
}

TEST_CASE("make_structure validation") {
    CHECK_NOTHROW(S({"012", "034"}));
    CHECK_THROWS_AS(S({"012", "013"}), SharedPairError);
    CHECK_THROWS(S({"012", "012"}));
    CHECK(S({"034", "012"}).blocks[0] == make_triple(0, 1, 2)); // sorted
}

TEST_CASE("compatible") {
    auto s = S({"012", "034"});
    CHECK(compatible(s, make_triple(1, 3, 5)));
    CHECK_FALSE(compatible(s, make_triple(0, 1, 5)));
    CHECK_FALSE(compatible(s, make_triple(0, 1, 2)));
}

TEST_CASE("canonical key identifies relabelings") {
    CHECK(canonical_key(S({"347"})).key == canonical_key(S({"012"})).key);
    CHECK(canonical_key(S({"012"})).key == "012");
    CHECK(canonical_key(S({"678", "345", "012"})).key == "012.345.678");
    CHECK(isomorphic(S({"012", "034"}), S({"678", "458"})));
    CHECK_FALSE(isomorphic(S({"012", "034"}), S({"012", "345"})));
}

TEST_CASE("canonical key invariant under 1000 random relabelings of 50 structures") {
    // sample 50 structures across the catalog
    LevelCatalog cat = enumerate_all(6); // levels 1..6 are plenty and fast
    std::vector<IncidenceStructure> pool;
    for (auto& lv : cat.per_level)
        for (auto& s : lv) pool.push_back(s);
    REQUIRE(pool.size() >= 50);
    std::mt19937_64 rng(20240811);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(50);
    int perms_per_structure = 20; // 50 * 20 = 1000 relabelings
    for (auto& s : pool) {
        std::string key = canonical_key(s).key;
        for (int i = 0; i < perms_per_structure; ++i) {
            auto p = random_perm(rng);
            CHECK(canonical_key(apply_perm(s, p)).key == key);
        }
    }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(IncidenceStructure{}) == 362880);
    CHECK(automorphism_count(S({"012"})) == 4320); // 3! * 6!
    auto hesse = S({"012", "034", "056", "078", "135", "147", "168", "238", "246", "257",
                    "367", "458"});
    CHECK(automorphism_count(hesse) == 432);
}

TEST_CASE("extend_level from one block") {
    auto level1 = extend_level({IncidenceStructure{}});
    REQUIRE(level1.size() == 1);
    CHECK(level1[0].blocks.size() == 1);
    auto level2 = extend_level(level1);
    REQUIRE(level2.size() == 2);
    // one class with disjoint blocks, one with a shared point
    CHECK(level2[0].str() == "{012,034}");
    CHECK(level2[1].str() == "{012,345}");
}

TEST_CASE("level-3 classes match the known five") {
    auto level3 = extend_level(extend_level(extend_level({IncidenceStructure{}})));
    REQUIRE(level3.size() == 5);
    std::vector<std::string> keys;
    for (auto& s : level3) keys.push_back(canonical_key(s).key);
    std::vector<std::string> expected;
    for (auto s : {S({"012", "034", "056"}), S({"012", "034", "135"}), S({"012", "034", "156"}),
                   S({"012", "034", "567"}), S({"012", "345", "678"})})
        expected.push_back(canonical_key(s).key);
    std::sort(expected.begin(), expected.end());
    CHECK(keys == expected);
}

TEST_CASE("full enumeration: 162 classes, known profile, level 12 maximal") {
    LevelCatalog cat = enumerate_all(12);
    CHECK(cat.counts() == std::vector<int>{1, 2, 5, 11, 19, 34, 41, 31, 12, 4, 1, 1});
    CHECK(cat.total() == 162);
    // the single level-12 class does not extend
    CHECK(extend_level(cat.per_level[11]).empty());
    // every emitted structure is valid and canonical
    for (auto& lv : cat.per_level)
        for (auto& s : lv) {
            CHECK_NOTHROW(make_structure(s.blocks));
            CHECK(canonical_key(s).key == key_string(s));
        }
}
