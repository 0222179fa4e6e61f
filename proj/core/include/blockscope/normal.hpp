#pragma once

#include <nlohmann/json.hpp>

#include "blockscope/blocks.hpp"

namespace blockscope {

// Map from conjugacy classes of a normal subgroup N to the G-classes they
// fuse into.  Validated by recounting |K intersect N| elementwise.
struct FusionMap {
    std::vector<u32> to_g_class;
};

FusionMap class_fusion(const PermGroup& g, const PermGroup& n);

struct Constituent {
    u32 row = 0;  // row index in the subgroup table
    u64 multiplicity = 0;
};

// Irreducible constituents of the restriction of row g_row to the subgroup,
// ascending by row index; multiplicities weighted by degree add up to the
// degree of the restricted character.
std::vector<Constituent> restriction_constituents(const CharacterTable& tg, const CharacterTable& tn,
                                                  const FusionMap& fusion, u32 g_row);

// Pairs (G-block index, N-block index) where the G-block covers the N-block,
// i.e. some character of the G-block has a restriction constituent there.
std::vector<std::pair<u32, u32>> covering_blocks(const CharacterTable& tg, const BlockDecomposition& dg,
                                                 const CharacterTable& tn, const BlockDecomposition& dn,
                                                 const FusionMap& fusion);

// Every irreducible character of the principal block of N appears under the
// restriction of some character of the principal block of G.
bool check_blockabove(const CharacterTable& tg, const BlockDecomposition& dg,
                      const CharacterTable& tn, const BlockDecomposition& dn,
                      const FusionMap& fusion);

struct CheckOutcome {
    bool applicable = false;
    bool holds = true;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

// For normal M containing P C_G(P): the principal block of G is the unique
// block covering the principal block of M, and if P > 1 the quotient G/M has
// fewer classes than the principal block has characters.
CheckOutcome check_onlycovering(const PermGroup& g, const PermGroup& m, u64 p);
CheckOutcome check_onlycovering(const PermGroup& g, const CharacterTable& tg, const BlockDecomposition& dg,
                                const PermGroup& m, const CharacterTable& tm, const BlockDecomposition& dm,
                                const FusionMap& fusion, u64 p);

// Characters of G/Z(G) inflate to G respecting block membership.
CheckOutcome check_quotient_inflation(const PermGroup& g, u64 p);
CheckOutcome check_quotient_inflation(const PermGroup& g, const CharacterTable& tg,
                                      const BlockDecomposition& dg, u64 p);

// For N normal of p' index with G = N C_G(P): restriction is a bijection
// between the principal blocks of G and N, character by character.
CheckOutcome check_isomblocks(const PermGroup& g, const PermGroup& n, u64 p);
CheckOutcome check_isomblocks(const PermGroup& g, const CharacterTable& tg, const BlockDecomposition& dg,
                              const PermGroup& n, const CharacterTable& tn, const BlockDecomposition& dn,
                              const FusionMap& fusion, u64 p);

// For normal M containing P C_G(P) in a group with k(B0(G)) = 5: the count
// k(B0(M)) lands in {4,5,7,11,13}, and equals 7 when p = 2 and M < G.
CheckOutcome check_tech(const PermGroup& g, const PermGroup& m, u64 p);
CheckOutcome check_tech(const PermGroup& g, const CharacterTable& tg, const BlockDecomposition& dg,
                        const PermGroup& m, const CharacterTable& tm, const BlockDecomposition& dm,
                        const FusionMap& fusion, u64 p);

// For N with cyclic quotient: the number of distinct constituents of the
// restriction of chi to N equals the number of linear characters beta of G/N
// with chi * infl(beta) = chi.
CheckOutcome check_restriction_count(const PermGroup& g, const PermGroup& n);
CheckOutcome check_restriction_count(const PermGroup& g, const CharacterTable& tg, const PermGroup& n,
                                     const CharacterTable& tn, const FusionMap& fusion);

}  // namespace blockscope
