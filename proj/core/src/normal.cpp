#include "blockscope/normal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

bool contains_all_generators(const PermGroup& outer, const PermGroup& inner) {
    for (const auto& g : inner.generators())
        if (!outer.contains(g)) return false;
    return true;
}

// |A intersect B| for subgroups of a common group, by scanning the smaller one.
u64 intersection_order(const PermGroup& a, const PermGroup& b) {
    const PermGroup& small = a.order() <= b.order() ? a : b;
    const PermGroup& large = a.order() <= b.order() ? b : a;
    u64 n = 0;
    for (const auto& x : small.elements())
        if (large.contains(x)) ++n;
    return n;
}

// Inflation of a quotient-table row to the classes of g: value at a g-class
// is the row value at the class of the projected representative.
std::vector<Cyclotomic> inflate_row(const PermGroup& g, const CosetAction& ca, const CharacterTable& tq,
                                    u32 q_row) {
    const auto& gcls = g.conjugacy_classes();
    std::vector<Cyclotomic> out;
    out.reserve(gcls.size());
    for (const auto& c : gcls) {
        u32 qc = ca.quotient().class_of(ca.project(c.representative));
        out.push_back(tq.value(q_row, qc));
    }
    return out;
}

nlohmann::ordered_json not_applicable() { return nlohmann::ordered_json::object(); }

}  // namespace

FusionMap class_fusion(const PermGroup& g, const PermGroup& n) {
    if (g.degree() != n.degree()) throw domain_error("class fusion: degree mismatch");
    const auto& ncls = n.conjugacy_classes();
    FusionMap f;
    f.to_g_class.reserve(ncls.size());
    for (const auto& c : ncls) {
        if (!g.contains(c.representative)) throw domain_error("class fusion: not a subgroup");
        f.to_g_class.push_back(g.class_of(c.representative));
    }
    // recount |K intersect N| per g-class directly from the elements of n
    std::vector<u64> direct(g.class_count(), 0);
    for (const auto& x : n.elements()) direct[g.class_of(x)] += 1;
    std::vector<u64> fused(g.class_count(), 0);
    for (u32 c = 0; c < ncls.size(); ++c) fused[f.to_g_class[c]] += ncls[c].size;
    if (direct != fused) throw invariant_violation("class fusion count mismatch");
    return f;
}

std::vector<Constituent> restriction_constituents(const CharacterTable& tg, const CharacterTable& tn,
                                                  const FusionMap& fusion, u32 g_row) {
    if (fusion.to_g_class.size() != tn.class_count())
        throw domain_error("restriction: fusion map size mismatch");
    std::vector<Cyclotomic> restricted;
    restricted.reserve(tn.class_count());
    for (u32 c = 0; c < tn.class_count(); ++c)
        restricted.push_back(tg.value(g_row, fusion.to_g_class[c]));

    std::vector<Constituent> out;
    Rational degree_sum = 0;
    for (u32 r = 0; r < tn.row_count(); ++r) {
        Rational m = tn.inner_product(restricted, tn.row(r));
        if (sgn(m) == 0) continue;
        if (m.get_den() != 1 || sgn(m) < 0)
            throw invariant_violation("restriction multiplicity is not a nonnegative integer");
        u64 mult = m.get_num().get_ui();
        out.push_back({r, mult});
        degree_sum += m * Rational(static_cast<unsigned long>(tn.degree(r)));
    }
    if (degree_sum != Rational(static_cast<unsigned long>(tg.degree(g_row))))
        throw invariant_violation("restriction degrees do not add up");
    return out;
}

std::vector<std::pair<u32, u32>> covering_blocks(const CharacterTable& tg, const BlockDecomposition& dg,
                                                 const CharacterTable& tn, const BlockDecomposition& dn,
                                                 const FusionMap& fusion) {
    std::vector<u32> g_block_of(tg.row_count()), n_block_of(tn.row_count());
    for (u32 b = 0; b < dg.blocks.size(); ++b)
        for (u32 r : dg.blocks[b].chars) g_block_of[r] = b;
    for (u32 b = 0; b < dn.blocks.size(); ++b)
        for (u32 r : dn.blocks[b].chars) n_block_of[r] = b;

    std::set<std::pair<u32, u32>> pairs;
    for (u32 r = 0; r < tg.row_count(); ++r)
        for (const auto& c : restriction_constituents(tg, tn, fusion, r))
            pairs.insert({g_block_of[r], n_block_of[c.row]});
    return {pairs.begin(), pairs.end()};
}

bool check_blockabove(const CharacterTable& tg, const BlockDecomposition& dg,
                      const CharacterTable& tn, const BlockDecomposition& dn,
                      const FusionMap& fusion) {
    std::set<u32> wanted(dn.principal().chars.begin(), dn.principal().chars.end());
    for (u32 r : dg.principal().chars) {
        for (const auto& c : restriction_constituents(tg, tn, fusion, r)) wanted.erase(c.row);
        if (wanted.empty()) return true;
    }
    return wanted.empty();
}

CheckOutcome check_onlycovering(const PermGroup& g, const CharacterTable& tg, const BlockDecomposition& dg,
                                const PermGroup& m, const CharacterTable& tm, const BlockDecomposition& dm,
                                const FusionMap& fusion, u64 p) {
    CheckOutcome out;
    if (!is_normal(g, m)) return out;
    PermGroup syl = sylow_subgroup(g, p);
    PermGroup cent = centralizer_of_subgroup(g, syl);
    if (!contains_all_generators(m, syl) || !contains_all_generators(m, cent)) return out;
    out.applicable = true;

    std::set<u32> covering;
    for (const auto& [gb, nb] : covering_blocks(tg, dg, tm, dm, fusion))
        if (nb == dm.principal_index) covering.insert(gb);
    bool unique = covering.size() == 1 && *covering.begin() == dg.principal_index;

    bool quotient_bound = true;
    u64 quotient_classes = 1;
    if (syl.order() > 1) {
        quotient_classes = coset_action(g, m).quotient().class_count();
        quotient_bound = quotient_classes < dg.principal().k;
    }

    out.holds = unique && quotient_bound;
    out.details["covering_blocks"] = std::vector<u32>(covering.begin(), covering.end());
    out.details["quotient_classes"] = quotient_classes;
    out.details["principal_k"] = dg.principal().k;
    return out;
}

CheckOutcome check_onlycovering(const PermGroup& g, const PermGroup& m, u64 p) {
    if (!is_normal(g, m)) return {};
    PermGroup syl = sylow_subgroup(g, p);
    PermGroup cent = centralizer_of_subgroup(g, syl);
    if (!contains_all_generators(m, syl) || !contains_all_generators(m, cent)) return {};
    CharacterTable tg = compute_table(g, "G");
    CharacterTable tm = compute_table(m, "M");
    return check_onlycovering(g, tg, block_partition(tg, p), m, tm, block_partition(tm, p),
                              class_fusion(g, m), p);
}

CheckOutcome check_quotient_inflation(const PermGroup& g, const CharacterTable& tg,
                                      const BlockDecomposition& dg, u64 p) {
    CheckOutcome out;
    PermGroup z = center(g);
    if (z.order() <= 1) return out;
    out.applicable = true;

    CosetAction ca = coset_action(g, z);
    CharacterTable tq = compute_table(ca.quotient(), tg.group_name() + "/Z");
    BlockDecomposition dq = block_partition(tq, p);

    std::vector<u32> g_block_of(tg.row_count());
    for (u32 b = 0; b < dg.blocks.size(); ++b)
        for (u32 r : dg.blocks[b].chars) g_block_of[r] = b;

    // image block of each quotient block under inflation; one target each
    std::vector<std::optional<u32>> target(dq.blocks.size());
    bool ok = true;
    for (u32 b = 0; b < dq.blocks.size() && ok; ++b) {
        for (u32 qr : dq.blocks[b].chars) {
            auto row = tg.find_row(inflate_row(g, ca, tq, qr));
            if (!row) throw invariant_violation("inflated character is not in the table");
            if (!target[b])
                target[b] = g_block_of[*row];
            else if (*target[b] != g_block_of[*row]) {
                ok = false;
                break;
            }
        }
    }
    bool principal_to_principal =
        ok && target[dq.principal_index] && *target[dq.principal_index] == dg.principal_index;

    out.holds = ok && principal_to_principal;
    out.details["center_order"] = z.order();
    out.details["quotient_blocks"] = dq.blocks.size();
    return out;
}

CheckOutcome check_quotient_inflation(const PermGroup& g, u64 p) {
    if (center(g).order() <= 1) return {};
    CharacterTable tg = compute_table(g, "G");
    return check_quotient_inflation(g, tg, block_partition(tg, p), p);
}

CheckOutcome check_isomblocks(const PermGroup& g, const CharacterTable& tg, const BlockDecomposition& dg,
                              const PermGroup& n, const CharacterTable& tn, const BlockDecomposition& dn,
                              const FusionMap& fusion, u64 p) {
    CheckOutcome out;
    if (!is_normal(g, n)) return out;
    u64 index = g.order() / n.order();
    if (index % p == 0) return out;
    PermGroup syl = sylow_subgroup(g, p);
    PermGroup cent = centralizer_of_subgroup(g, syl);
    u64 meet = intersection_order(n, cent);
    if (n.order() / meet * cent.order() != g.order()) return out;  // G = N C_G(P) fails
    out.applicable = true;

    std::set<u32> principal_n(dn.principal().chars.begin(), dn.principal().chars.end());
    std::set<u32> image;
    bool ok = true;
    for (u32 r : dg.principal().chars) {
        auto cons = restriction_constituents(tg, tn, fusion, r);
        if (cons.size() != 1 || cons[0].multiplicity != 1 || !principal_n.count(cons[0].row) ||
            !image.insert(cons[0].row).second) {
            ok = false;
            break;
        }
    }
    out.holds = ok && image.size() == principal_n.size();
    out.details["index"] = index;
    out.details["principal_k_g"] = dg.principal().k;
    out.details["principal_k_n"] = dn.principal().k;
    return out;
}

CheckOutcome check_isomblocks(const PermGroup& g, const PermGroup& n, u64 p) {
    if (!is_normal(g, n)) return {};
    u64 index = g.order() / n.order();
    if (index % p == 0) return {};
    PermGroup syl = sylow_subgroup(g, p);
    PermGroup cent = centralizer_of_subgroup(g, syl);
    u64 meet = intersection_order(n, cent);
    if (n.order() / meet * cent.order() != g.order()) return {};
    CharacterTable tg = compute_table(g, "G");
    CharacterTable tn = compute_table(n, "N");
    return check_isomblocks(g, tg, block_partition(tg, p), n, tn, block_partition(tn, p),
                            class_fusion(g, n), p);
}

CheckOutcome check_tech(const PermGroup& g, const CharacterTable& tg, const BlockDecomposition& dg,
                        const PermGroup& m, const CharacterTable& tm, const BlockDecomposition& dm,
                        const FusionMap& fusion, u64 p) {
    (void)tg;
    (void)tm;
    (void)fusion;
    CheckOutcome out;
    if (!is_normal(g, m)) return out;
    PermGroup syl = sylow_subgroup(g, p);
    PermGroup cent = centralizer_of_subgroup(g, syl);
    if (!contains_all_generators(m, syl) || !contains_all_generators(m, cent)) return out;
    if (dg.principal().k != 5) return out;
    out.applicable = true;

    u64 km = dm.principal().k;
    bool in_range = km == 4 || km == 5 || km == 7 || km == 11 || km == 13;
    bool two_case = true;
    if (p == 2 && m.order() < g.order()) two_case = km == 7;

    out.holds = in_range && two_case;
    out.details["k_b0_m"] = km;
    out.details["proper"] = m.order() < g.order();
    return out;
}

CheckOutcome check_tech(const PermGroup& g, const PermGroup& m, u64 p) {
    if (!is_normal(g, m)) return {};
    PermGroup syl = sylow_subgroup(g, p);
    PermGroup cent = centralizer_of_subgroup(g, syl);
    if (!contains_all_generators(m, syl) || !contains_all_generators(m, cent)) return {};
    CharacterTable tg = compute_table(g, "G");
    BlockDecomposition dg = block_partition(tg, p);
    if (dg.principal().k != 5) return {};
    CharacterTable tm = compute_table(m, "M");
    return check_tech(g, tg, dg, m, tm, block_partition(tm, p), class_fusion(g, m), p);
}

CheckOutcome check_restriction_count(const PermGroup& g, const CharacterTable& tg, const PermGroup& n,
                                     const CharacterTable& tn, const FusionMap& fusion) {
    CheckOutcome out;
    if (!is_normal(g, n)) return out;
    CosetAction ca = coset_action(g, n);
    if (!ca.quotient().is_cyclic()) return out;
    out.applicable = true;

    CharacterTable tq = compute_table(ca.quotient(), tg.group_name() + "/N");
    std::vector<std::vector<Cyclotomic>> inflated;
    inflated.reserve(tq.row_count());
    for (u32 b = 0; b < tq.row_count(); ++b) inflated.push_back(inflate_row(g, ca, tq, b));

    bool ok = true;
    u64 pairs = 0;
    for (u32 r = 0; r < tg.row_count() && ok; ++r) {
        u64 fixing = 0;
        for (u32 b = 0; b < tq.row_count(); ++b) {
            bool fixes = true;
            for (u32 c = 0; c < tg.class_count(); ++c) {
                if (tg.value(r, c) * inflated[b][c] != tg.value(r, c)) {
                    fixes = false;
                    break;
                }
            }
            if (fixes) ++fixing;
        }
        u64 parts = restriction_constituents(tg, tn, fusion, r).size();
        pairs += parts;
        ok = fixing == parts;
    }
    out.holds = ok;
    out.details["quotient_order"] = ca.quotient().order();
    out.details["constituent_pairs"] = pairs;
    return out;
}

CheckOutcome check_restriction_count(const PermGroup& g, const PermGroup& n) {
    if (!is_normal(g, n)) return {};
    if (!coset_action(g, n).quotient().is_cyclic()) return {};
    CharacterTable tg = compute_table(g, "G");
    CharacterTable tn = compute_table(n, "N");
    return check_restriction_count(g, tg, n, tn, class_fusion(g, n));
}

}  // namespace blockscope
