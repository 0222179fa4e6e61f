#pragma once

#include <nlohmann/json.hpp>
#include <optional>

#include "blockscope/chartable.hpp"
#include "blockscope/permgroup.hpp"

namespace blockscope {

struct Block {
    u64 p = 2;
    std::vector<u32> chars;    // row indices into the table, ascending
    u32 defect = 0;
    std::vector<u32> heights;  // parallel to chars
    u64 k = 0;                 // chars.size()
    u64 k0 = 0;                // height-zero count
    u64 l = 0;                 // rank of the block rows on p-regular classes
    bool principal = false;
};

struct BlockDecomposition {
    u64 p = 2;
    std::vector<Block> blocks;  // ordered by smallest character index
    u32 principal_index = 0;

    const Block& principal() const { return blocks.at(principal_index); }
};

// omega_chi(K) = |K| chi(x_K) / chi(1); always a cyclotomic integer.
Cyclotomic central_character(const CharacterTable& t, u32 row, u32 cls);

// Partition of Irr(G) into p-blocks: rows fall in the same block exactly
// when all their central character values agree after reduction modulo one
// fixed prime ideal above p.  Checks sum(l) over blocks = number of
// p-regular classes, recomputing ranks exactly on disagreement.
BlockDecomposition block_partition(const CharacterTable& t, u64 p);

// Number of irreducible Brauer characters of the block, computed as the rank
// of its character rows restricted to p-regular classes.  Ranks come from
// two independent modular specializations; disagreement escalates to exact
// fraction-free elimination over the cyclotomic field.
u64 l_of_block(const CharacterTable& t, u64 p, const std::vector<u32>& chars);
u64 l_of_block_exact(const CharacterTable& t, u64 p, const std::vector<u32>& chars);

const Block& principal_block(const BlockDecomposition& d);

// Defect group data of the principal block: its defect groups are exactly
// the Sylow p-subgroups.
SylowDescriptor defect_group_descriptor(const PermGroup& g, u64 p);

// k(B0(G)) counted against |Z(G)|_p * l(B0(G)) + sum over noncentral classes
// of nontrivial p-elements x of l(B0(C_G(x))).
struct BrauerIdentityResult {
    u64 lhs = 0;
    u64 rhs = 0;
    u64 center_p_part = 1;
    u64 l_b0 = 0;
    std::vector<std::pair<u32, u64>> centralizer_parts;  // (class index, l(B0(C_G(x))))
    bool holds = false;
};
BrauerIdentityResult brauer_count_identity(const PermGroup& g, u64 p);
BrauerIdentityResult brauer_count_identity(const PermGroup& g, const CharacterTable& t,
                                           const BlockDecomposition& d, u64 p);

// For G with nontrivial cyclic Sylow p-subgroup P: the inertia quotient size
// e = |N_G(P) : C_G(P)| and the count e + (|P|-1)/e that must equal k(B0).
struct CyclicDefectPrediction {
    u64 e = 1;
    u64 sylow_order = 1;
    u64 predicted_k = 1;
};
CyclicDefectPrediction cyclic_defect_count(const PermGroup& g, u64 p);

nlohmann::ordered_json sylow_to_json(const SylowDescriptor& d);
nlohmann::ordered_json block_report_json(const std::string& group_name, const BlockDecomposition& d,
                                         const std::optional<SylowDescriptor>& sylow);

}  // namespace blockscope
