#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <map>

#include "blockscope/chartable.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/groups.hpp"
#include "support.hpp"

using namespace blockscope;
namespace ts = testsupport;

namespace {

std::vector<u64> degree_multiset(const CharacterTable& t) {
    std::vector<u64> d;
    for (u32 r = 0; r < t.row_count(); ++r) d.push_back(t.degree(r));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("symmetric group on three points, exact values") {
    PermGroup g = groups::symmetric(3);
    CharacterTable t = compute_table(g, "S3");
    REQUIRE(t.class_count() == 3);
    REQUIRE(t.row_count() == 3);
    CHECK(t.order() == 6);
    CHECK(t.exponent() == 6);
    CHECK(t.group_name() == "S3");

    // classes: identity, transpositions, 3-cycles
    CHECK(t.cls(0).size == 1);
    CHECK(t.cls(1).size == 3);
    CHECK(t.cls(1).element_order == 2);
    CHECK(t.cls(2).size == 2);
    CHECK(t.cls(2).element_order == 3);

    const Cyclotomic one(1L), neg(-1L), zero, two(2L);
    CHECK(t.value(0, 0) == one);
    CHECK(t.value(0, 1) == one);
    CHECK(t.value(0, 2) == one);
    CHECK(t.value(1, 0) == one);
    CHECK(t.value(1, 1) == neg);
    CHECK(t.value(1, 2) == one);
    CHECK(t.value(2, 0) == two);
    CHECK(t.value(2, 1) == zero);
    CHECK(t.value(2, 2) == neg);
}

TEST_CASE("degree multisets of standard groups") {
    struct Case {
        PermGroup g;
        const char* name;
        std::vector<u64> degrees;
    };
    const Case cases[] = {
        {groups::dicyclic(8), "Q8", {1, 1, 1, 1, 2}},
        {groups::symmetric(4), "S4", {1, 1, 2, 3, 3}},
        {groups::alternating(5), "A5", {1, 3, 3, 4, 5}},
        {groups::dihedral(10), "D10", {1, 1, 2, 2}},
        {groups::sl2_3(), "SL2_3", {1, 1, 1, 2, 2, 2, 3}},
        {groups::alternating(4), "A4", {1, 1, 1, 3}},
        {groups::psl2_prime(7), "PSL2_7", {1, 3, 3, 6, 7, 8}},
        {groups::semidirect_cyclic(5, 2), "F20", {1, 1, 1, 1, 4}},
        {groups::heisenberg3(), "ES27", {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3}},
    };
    for (const Case& c : cases) {
        CharacterTable t = compute_table(c.g, c.name);
        CAPTURE(c.name);
        CHECK(degree_multiset(t) == c.degrees);
        CHECK(t.row_count() == c.g.class_count());
        u64 sq = 0;
        for (u32 r = 0; r < t.row_count(); ++r) sq += t.degree(r) * t.degree(r);
        CHECK(sq == c.g.order());
    }
}

TEST_CASE("row ordering is canonical") {
    CharacterTable t = compute_table(groups::symmetric(4), "S4");
    CHECK(t.degree(0) == 1);
    for (u32 c = 0; c < t.class_count(); ++c) CHECK(t.value(0, c) == Cyclotomic(1L));
    for (u32 r = 1; r + 1 < t.row_count(); ++r) CHECK(t.degree(r) <= t.degree(r + 1));
}

TEST_CASE("orthonormality of rows") {
    for (const char* which : {"S4", "A5", "D12"}) {
        PermGroup g = std::string(which) == "S4"   ? groups::symmetric(4)
                      : std::string(which) == "A5" ? groups::alternating(5)
                                                   : groups::dihedral(12);
        CharacterTable t = compute_table(g, which);
        CAPTURE(which);
        for (u32 r = 0; r < t.row_count(); ++r)
            for (u32 s = 0; s < t.row_count(); ++s)
                CHECK(t.inner_product(r, s) == Rational(r == s ? 1 : 0));
    }
}

TEST_CASE("power maps stored on classes") {
    PermGroup g = groups::symmetric(4);
    CharacterTable t = compute_table(g, "S4");
    for (u32 c = 0; c < t.class_count(); ++c) {
        const ClassData& cd = t.cls(c);
        CHECK(cd.size == g.conjugacy_classes()[c].size);
        CHECK(cd.element_order == g.conjugacy_classes()[c].element_order);
        std::map<u64, u32> pm(cd.power_maps.begin(), cd.power_maps.end());
        REQUIRE(pm.size() == 2);  // exponent 12 has prime divisors 2 and 3
        CHECK(pm.at(2) == g.power_class(c, 2));
        CHECK(pm.at(3) == g.power_class(c, 3));
    }
}

TEST_CASE("irrational entries live in the right field") {
    CharacterTable t = compute_table(groups::cyclic(5), "C5");
    CHECK(t.exponent() == 5);
    bool irrational = false;
    for (u32 r = 0; r < t.row_count(); ++r)
        for (u32 c = 0; c < t.class_count(); ++c) {
            CHECK(t.value(r, c).conductor() == 5);  // embedded to the exponent
            if (!t.value(r, c).is_rational()) irrational = true;
            CHECK(t.value(r, c).is_integral());
        }
    CHECK(irrational);

    // D14 needs zeta_7 + zeta_7^-1 entries
    CharacterTable d14 = compute_table(groups::dihedral(14), "D14");
    Cyclotomic want = Cyclotomic::zeta(7) + Cyclotomic::zeta(7, 6);
    bool found = false;
    for (u32 r = 0; r < d14.row_count(); ++r)
        for (u32 c = 0; c < d14.class_count(); ++c)
            if (d14.value(r, c) == want) found = true;
    CHECK(found);
}

TEST_CASE("abelian tables equal the dual construction bit for bit") {
    std::vector<std::pair<std::string, PermGroup>> cases;
    for (u64 n : {1ull, 2ull, 3ull, 4ull, 5ull, 6ull, 8ull, 9ull, 12ull, 16ull})
        cases.emplace_back("C" + std::to_string(n), groups::cyclic(n));
    cases.emplace_back("C2xC2", groups::direct_product(groups::cyclic(2), groups::cyclic(2)));
    cases.emplace_back("C2xC4", groups::direct_product(groups::cyclic(2), groups::cyclic(4)));
    cases.emplace_back("C3xC3", groups::direct_product(groups::cyclic(3), groups::cyclic(3)));
    cases.emplace_back("C2xC6", groups::direct_product(groups::cyclic(2), groups::cyclic(6)));
    cases.emplace_back("C4xC4", groups::direct_product(groups::cyclic(4), groups::cyclic(4)));
    cases.emplace_back("C2xC2xC2",
                       groups::direct_product(
                           groups::direct_product(groups::cyclic(2), groups::cyclic(2)),
                           groups::cyclic(2)));
    for (const auto& [name, g] : cases) {
        CAPTURE(name);
        CharacterTable computed = compute_table(g, name);
        CharacterTable dual = ts::dual_table(g, name);
        CHECK(computed.to_json().dump() == dual.to_json().dump());
    }
}

TEST_CASE("json round trip is the identity") {
    for (const char* name : {"S4", "C5", "D14", "Q8", "A5"}) {
        PermGroup g = std::string(name) == "S4"    ? groups::symmetric(4)
                      : std::string(name) == "C5"  ? groups::cyclic(5)
                      : std::string(name) == "D14" ? groups::dihedral(14)
                      : std::string(name) == "Q8"  ? groups::dicyclic(8)
                                                   : groups::alternating(5);
        CAPTURE(name);
        CharacterTable t = compute_table(g, name);
        std::string once = t.to_json().dump();
        CharacterTable back = CharacterTable::from_json(t.to_json());
        CHECK(back.to_json().dump() == once);
        CHECK(back.group_name() == t.group_name());
        CHECK(back.class_count() == t.class_count());
    }
}

TEST_CASE("table file io") {
    CharacterTable t = compute_table(groups::dihedral(14), "D14");
    std::string path = "/tmp/blockscope_test_table.json";
    write_table(t, path);
    CharacterTable back = read_table(path);
    CHECK(back.to_json().dump() == t.to_json().dump());
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_table("/tmp/blockscope_no_such_table.json"), input_error);
}

TEST_CASE("validation rejects corrupted tables") {
    CharacterTable t = compute_table(groups::symmetric(3), "S3");
    auto j = t.to_json();

    auto tampered = j;
    tampered["irr"][1][1] = cyclotomic_to_json(Cyclotomic(1L));  // breaks orthogonality
    CHECK_THROWS_AS(CharacterTable::from_json(tampered), invariant_violation);

    tampered = j;
    tampered["order"] = 7;  // degree squares no longer sum to the order
    CHECK_THROWS_AS(CharacterTable::from_json(tampered), invariant_violation);

    tampered = j;
    tampered["classes"][1]["size"] = 4;
    CHECK_THROWS_AS(CharacterTable::from_json(tampered), invariant_violation);

    tampered = j;
    tampered.erase("irr");
    CHECK_THROWS_AS(CharacterTable::from_json(tampered), input_error);

    tampered = j;
    tampered["classes"][1]["powermaps"]["2"] = 2;  // wrong target order
    CHECK_THROWS_AS(CharacterTable::from_json(tampered), invariant_violation);
}

TEST_CASE("find_row locates characters by value list") {
    CharacterTable t = compute_table(groups::symmetric(3), "S3");
    std::vector<Cyclotomic> sign = {Cyclotomic(1L), Cyclotomic(-1L), Cyclotomic(1L)};
    auto r = t.find_row(sign);
    REQUIRE(r.has_value());
    CHECK(*r == 1);
    std::vector<Cyclotomic> absent = {Cyclotomic(1L), Cyclotomic(1L), Cyclotomic(-1L)};
    CHECK_FALSE(t.find_row(absent).has_value());
}
