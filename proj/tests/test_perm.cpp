#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "blockscope/errors.hpp"
#include "blockscope/groups.hpp"
#include "blockscope/permgroup.hpp"
#include "support.hpp"

using namespace blockscope;
namespace ts = testsupport;

TEST_CASE("permutation arithmetic") {
    Permutation id(5);
    CHECK(id.is_identity());
    CHECK(id.order() == 1);
    CHECK(id.smallest_moved_point() == 5);

    Permutation a = perm_from_cycles(5, {{0, 1, 2}});
    Permutation b = perm_from_cycles(5, {{2, 3}});
    // left factor acts first
    CHECK((a * b)(1) == 3);
    CHECK((b * a)(1) == 2);
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.order() == 3);
    CHECK((a * b).order() == 4);
    CHECK(a.power(-1) == a.inverse());
    CHECK(a.power(3).is_identity());
    CHECK(a.power(2) == a * a);

    Permutation c = a.conjugated_by(b);
    CHECK(c == b.inverse() * a * b);
    CHECK(c.order() == a.order());

    CHECK(a.to_cycle_string() == "(0 1 2)");
    CHECK(perm_from_cycles(5, {}).to_cycle_string() == "()");
    CHECK((a * b).cycles() == std::vector<std::vector<u32>>{{0, 1, 3, 2}});
}

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(Permutation(std::vector<u32>{0, 0, 1}), input_error);
    CHECK_THROWS_AS(Permutation(std::vector<u32>{0, 3}), input_error);
    CHECK_THROWS_AS(perm_from_cycles(3, {{0, 5}}), input_error);
    Permutation a(3), b(4);
    CHECK_THROWS_AS(a * b, input_error);
}

TEST_CASE("group order matches multiplicative closure") {
    struct Case {
        PermGroup g;
        u64 order;
    };
    const Case cases[] = {
        {groups::trivial(), 1},        {groups::cyclic(12), 12},
        {groups::symmetric(5), 120},   {groups::alternating(5), 60},
        {groups::dihedral(16), 16},    {groups::dicyclic(8), 8},
        {groups::sl2_3(), 24},         {groups::semidirect_cyclic(5, 2), 20},
        {groups::heisenberg3(), 27},   {groups::cyclic_by_cyclic(3, 8, 2), 24},
        {groups::psl2_prime(7), 168},
    };
    for (const Case& c : cases) {
        CAPTURE(c.order);
        CHECK(c.g.order() == c.order);
        auto all = ts::closure(c.g.degree(), c.g.generators());
        CHECK(all.size() == c.order);
        for (const Permutation& e : all) CHECK(c.g.contains(e));
    }
}

TEST_CASE("element list is the group") {
    PermGroup g = groups::symmetric(4);
    auto brute = ts::closure(g.degree(), g.generators());
    std::vector<Permutation> listed = g.elements();
    std::sort(listed.begin(), listed.end());
    CHECK(listed == brute);
    for (u32 i = 0; i < g.order(); ++i) CHECK(g.element_index(g.elements()[i]) == i);
    CHECK(g.contains(perm_from_cycles(4, {{0, 1}})));
}

TEST_CASE("membership rejects outsiders") {
    PermGroup a4 = groups::alternating(4);
    CHECK_FALSE(a4.contains(perm_from_cycles(4, {{0, 1}})));
    CHECK_THROWS_AS(a4.element_index(perm_from_cycles(4, {{0, 1}})), domain_error);
}

TEST_CASE("element enumeration capacity") {
    // C2^17 on 34 points has order 131072 > the enumeration bound
    std::vector<Permutation> gens;
    for (u32 i = 0; i < 17; ++i) gens.push_back(perm_from_cycles(34, {{2 * i, 2 * i + 1}}));
    PermGroup g = PermGroup::from_generators(34, gens);
    CHECK(g.order() == (1ull << 17));
    CHECK_THROWS_AS(g.elements(), capacity_error);
}

TEST_CASE("conjugacy classes match brute force") {
    for (PermGroup g : {groups::symmetric(4), groups::dihedral(8), groups::dicyclic(8),
                        groups::alternating(4), groups::sl2_3(), groups::cyclic(6),
                        groups::semidirect_cyclic(7, 2)}) {
        auto brute = ts::brute_classes(ts::closure(g.degree(), g.generators()));
        const auto& classes = g.conjugacy_classes();
        REQUIRE(classes.size() == brute.size());
        for (size_t c = 0; c < brute.size(); ++c) {
            CHECK(classes[c].size == brute[c].size());
            CHECK(classes[c].element_order == brute[c].front().order());
            CHECK(classes[c].representative == brute[c].front());
            std::set<Permutation> want(brute[c].begin(), brute[c].end());
            for (u32 idx : g.class_members(static_cast<u32>(c)))
                CHECK(want.count(g.elements()[idx]) == 1);
            CHECK(g.class_members(static_cast<u32>(c)).size() == brute[c].size());
        }
    }
}

TEST_CASE("class maps") {
    PermGroup g = groups::symmetric(4);
    const auto& classes = g.conjugacy_classes();
    for (u32 c = 0; c < g.class_count(); ++c) {
        CHECK(g.class_of(classes[c].representative) == c);
        CHECK(g.class_of(classes[c].representative.inverse()) == g.inverse_class(c));
        for (u64 e : {2ull, 3ull, 5ull})
            CHECK(g.power_class(c, e) == g.class_of(classes[c].representative.power(static_cast<i64>(e))));
    }
    // 4-cycles square into the double-transposition class
    u32 four = g.class_of(perm_from_cycles(4, {{0, 1, 2, 3}}));
    CHECK(g.power_class(four, 2) == g.class_of(perm_from_cycles(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("exponent and commutativity flags") {
    CHECK(groups::symmetric(4).exponent() == 12);
    CHECK(groups::cyclic(12).exponent() == 12);
    CHECK(groups::dihedral(8).exponent() == 4);
    CHECK(groups::cyclic(12).is_abelian());
    CHECK(groups::cyclic(12).is_cyclic());
    PermGroup klein = groups::direct_product(groups::cyclic(2), groups::cyclic(2));
    CHECK(klein.is_abelian());
    CHECK_FALSE(klein.is_cyclic());
    CHECK_FALSE(groups::symmetric(3).is_abelian());
}

TEST_CASE("centralizers and centers by filter") {
    PermGroup g = groups::dihedral(8);
    Permutation r2 = perm_from_cycles(4, {{0, 2}, {1, 3}});  // rotation squared
    PermGroup z = center(g);
    CHECK(z.order() == 2);
    CHECK(z.contains(r2));
    for (const Permutation& e : g.elements()) {
        PermGroup c = centralizer(g, e);
        u64 count = 0;
        for (const Permutation& h : g.elements())
            if (h * e == e * h) ++count;
        CHECK(c.order() == count);
    }
    CHECK(center(groups::symmetric(4)).is_trivial());
    CHECK(center(groups::dicyclic(8)).order() == 2);
}

TEST_CASE("normalizer and subgroup predicates") {
    PermGroup s4 = groups::symmetric(4);
    PermGroup v4 = PermGroup::from_generators(
        4, {perm_from_cycles(4, {{0, 1}, {2, 3}}), perm_from_cycles(4, {{0, 2}, {1, 3}})});
    CHECK(is_subgroup(s4, v4));
    CHECK(is_normal(s4, v4));
    CHECK(normalizer(s4, v4).order() == 24);
    PermGroup c2 = PermGroup::from_generators(4, {perm_from_cycles(4, {{0, 1}})});
    CHECK(is_subgroup(s4, c2));
    CHECK_FALSE(is_normal(s4, c2));
    CHECK(normalizer(s4, c2).order() == 4);
    PermGroup a4 = groups::alternating(4);
    CHECK(is_normal(s4, a4));
    CHECK_FALSE(is_subgroup(a4, c2));
}

TEST_CASE("derived subgroup and normal closure") {
    CHECK(derived_subgroup(groups::symmetric(4)).order() == 12);
    CHECK(derived_subgroup(groups::alternating(4)).order() == 4);
    CHECK(derived_subgroup(groups::cyclic(6)).is_trivial());
    CHECK(derived_subgroup(groups::dihedral(16)).order() == 4);
    PermGroup s4 = groups::symmetric(4);
    PermGroup cl = normal_closure(s4, {perm_from_cycles(4, {{0, 1}, {2, 3}})});
    CHECK(cl.order() == 4);
    PermGroup cl2 = normal_closure(s4, {perm_from_cycles(4, {{0, 1}})});
    CHECK(cl2.order() == 24);
}

TEST_CASE("join of subgroups") {
    PermGroup a = PermGroup::from_generators(5, {perm_from_cycles(5, {{0, 1}})});
    PermGroup b = PermGroup::from_generators(5, {perm_from_cycles(5, {{0, 1, 2, 3, 4}})});
    CHECK(join_subgroups(a, b).order() == 120);
}

TEST_CASE("sylow subgroups") {
    struct Case {
        PermGroup g;
        u64 p, order;
    };
    const Case cases[] = {
        {groups::symmetric(4), 2, 8},  {groups::symmetric(4), 3, 3},
        {groups::symmetric(5), 2, 8},  {groups::symmetric(6), 3, 9},
        {groups::alternating(5), 2, 4}, {groups::psl2_prime(7), 2, 8},
        {groups::sl2_3(), 2, 8},       {groups::semidirect_cyclic(5, 2), 5, 5},
        {groups::symmetric(4), 5, 1},
    };
    for (const Case& c : cases) {
        PermGroup p = sylow_subgroup(c.g, c.p);
        CAPTURE(c.p);
        CAPTURE(c.order);
        CHECK(p.order() == c.order);
        CHECK(is_subgroup(c.g, p));
        u64 rest = p.order();
        while (rest % c.p == 0) rest /= c.p;
        CHECK(rest == 1);
    }
    CHECK_THROWS_AS(sylow_subgroup(groups::symmetric(4), 6), input_error);
}

TEST_CASE("involution counts") {
    CHECK(involution_count(groups::dihedral(8)) == 5);
    CHECK(involution_count(groups::dicyclic(8)) == 1);
    CHECK(involution_count(groups::symmetric(4)) == 9);
    CHECK(involution_count(groups::cyclic(7)) == 0);
}

TEST_CASE("abelian invariants") {
    CHECK(abelian_invariants(groups::cyclic(12)) == std::vector<u64>{3, 4});
    CHECK(abelian_invariants(groups::cyclic(8)) == std::vector<u64>{8});
    PermGroup g = groups::direct_product(groups::cyclic(2), groups::cyclic(4));
    CHECK(abelian_invariants(g) == std::vector<u64>{2, 4});
    PermGroup k = groups::direct_product(groups::cyclic(2), groups::cyclic(2));
    CHECK(abelian_invariants(k) == std::vector<u64>{2, 2});
    CHECK(abelian_invariants(groups::trivial()).empty());
    CHECK_THROWS_AS(abelian_invariants(groups::symmetric(3)), domain_error);
}

TEST_CASE("sylow classification separates D8 from Q8") {
    SylowDescriptor d8 = classify_sylow(groups::dihedral(8), 2);
    CHECK(d8.tag == SylowTag::D8);
    CHECK_FALSE(d8.abelian);
    SylowDescriptor q8 = classify_sylow(groups::dicyclic(8), 2);
    CHECK(q8.tag == SylowTag::Q8);
    CHECK_FALSE(q8.abelian);
    CHECK(to_string(d8.tag) != to_string(q8.tag));

    CHECK(classify_sylow(groups::cyclic(4), 2).tag == SylowTag::C4);
    CHECK(classify_sylow(groups::direct_product(groups::cyclic(2), groups::cyclic(2)), 2).tag ==
          SylowTag::Klein);
    CHECK(classify_sylow(groups::cyclic(5), 5).tag == SylowTag::C5);
    CHECK(classify_sylow(groups::cyclic(7), 7).tag == SylowTag::C7);
    CHECK(classify_sylow(groups::trivial(), 3).tag == SylowTag::Trivial);
    CHECK(classify_sylow(groups::cyclic(16), 2).tag == SylowTag::CyclicOther);
    CHECK(classify_sylow(groups::direct_product(groups::cyclic(2), groups::cyclic(4)), 2).tag ==
          SylowTag::AbelianOther);
    CHECK(classify_sylow(groups::dihedral(16), 2).tag == SylowTag::NonabelianOther);
    CHECK(classify_sylow(groups::heisenberg3(), 3).tag == SylowTag::NonabelianOther);
    CHECK_THROWS_AS(classify_sylow(groups::symmetric(3), 2), domain_error);

    SylowDescriptor s = sylow_descriptor(groups::symmetric(4), 2);
    CHECK(s.order == 8);
    CHECK(s.tag == SylowTag::D8);
}

TEST_CASE("p-element classes split by centrality") {
    PermGroup q8 = groups::dicyclic(8);
    PElementClasses pc = p_element_classes(q8, 2);
    CHECK(pc.central.size() == 1);    // the central involution
    CHECK(pc.noncentral.size() == 3); // i, j, k classes
    PermGroup s4 = groups::symmetric(4);
    PElementClasses pc3 = p_element_classes(s4, 3);
    CHECK(pc3.central.empty());
    CHECK(pc3.noncentral.size() == 1);
    PElementClasses pc5 = p_element_classes(s4, 5);
    CHECK(pc5.central.empty());
    CHECK(pc5.noncentral.empty());
}

TEST_CASE("coset action builds the quotient") {
    PermGroup s4 = groups::symmetric(4);
    PermGroup v4 = PermGroup::from_generators(
        4, {perm_from_cycles(4, {{0, 1}, {2, 3}}), perm_from_cycles(4, {{0, 2}, {1, 3}})});
    CosetAction ca = coset_action(s4, v4);
    CHECK(ca.coset_count() == 6);
    CHECK(ca.quotient().order() == 6);
    CHECK_FALSE(ca.quotient().is_abelian());  // S4/V4 = S3
    // projection is a homomorphism
    const auto& els = s4.elements();
    for (size_t i = 0; i < els.size(); i += 7)
        for (size_t j = 0; j < els.size(); j += 11)
            CHECK(ca.project(els[i] * els[j]) == ca.project(els[i]) * ca.project(els[j]));
    // kernel is exactly v4
    for (const Permutation& e : els)
        CHECK((ca.project(e).is_identity()) == v4.contains(e));

    PermGroup a4 = groups::alternating(4);
    CHECK(coset_action(s4, a4).quotient().order() == 2);
    CHECK_THROWS_AS(coset_action(s4, PermGroup::from_generators(4, {perm_from_cycles(4, {{0, 1}})})),
                    domain_error);
}

TEST_CASE("normal subgroup lattice") {
    PermGroup s4 = groups::symmetric(4);
    auto normals = normal_subgroups(s4);
    std::vector<u64> orders;
    for (const PermGroup& n : normals) orders.push_back(n.order());
    CHECK(orders == std::vector<u64>{1, 4, 12, 24});
    for (const PermGroup& n : normals) CHECK(is_normal(s4, n));

    auto a5n = normal_subgroups(groups::alternating(5));
    CHECK(a5n.size() == 2);  // simple

    auto q8n = normal_subgroups(groups::dicyclic(8));
    std::vector<u64> q8o;
    for (const PermGroup& n : q8n) q8o.push_back(n.order());
    CHECK(q8o == std::vector<u64>{1, 2, 4, 4, 4, 8});

    PermGroup big = groups::direct_product(groups::psl2_prime(7), groups::psl2_prime(7));
    CHECK_THROWS_AS(normal_subgroups(big), capacity_error);
}

TEST_CASE("group construction validation") {
    CHECK_THROWS_AS(PermGroup::from_generators(3, {perm_from_cycles(4, {{0, 1}})}), input_error);
    // duplicate and identity generators are dropped
    PermGroup g = PermGroup::from_generators(
        3, {Permutation(3), perm_from_cycles(3, {{0, 1}}), perm_from_cycles(3, {{0, 1}})});
    CHECK(g.generators().size() == 1);
    CHECK(g.order() == 2);
}
