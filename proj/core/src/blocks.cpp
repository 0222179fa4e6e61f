#include "blockscope/blocks.hpp"

#include <algorithm>
#include <map>

#include "blockscope/errors.hpp"

namespace blockscope {

using nlohmann::ordered_json;

namespace {

Rational make_ratio(u64 num, u64 den) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

std::vector<u32> p_regular_columns(const CharacterTable& t, u64 p) {
    std::vector<u32> cols;
    for (u32 c = 0; c < t.class_count(); ++c)
        if (t.cls(c).element_order % p != 0) cols.push_back(c);
    return cols;
}

// rank of the chars x p-regular-classes value matrix under z -> theta in F_l
u64 modular_rank(const CharacterTable& t, const std::vector<u32>& chars,
                 const std::vector<u32>& cols, u64 l) {
    u64 n = t.exponent();
    u64 theta = powmod(primitive_root(l), (l - 1) / n, l);
    std::vector<u64> theta_pow(n);
    theta_pow[0] = 1;
    for (u64 i = 1; i < n; ++i) theta_pow[i] = mulmod(theta_pow[i - 1], theta, l);

    std::vector<std::vector<u64>> m;
    m.reserve(chars.size());
    for (u32 r : chars) {
        std::vector<u64> row;
        row.reserve(cols.size());
        for (u32 c : cols) {
            const Cyclotomic& v = t.value(r, c);
            // character values are cyclotomic integers at the table conductor
            u64 acc = 0;
            const auto& coeffs = v.coeffs();
            for (size_t i = 0; i < coeffs.size(); ++i) {
                if (coeffs[i] == 0) continue;
                mpz_class num = coeffs[i].get_num();
                if (coeffs[i].get_den() != 1)
                    throw invariant_violation("character value is not integral");
                u64 c_mod = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(l));
                acc = (acc + mulmod(c_mod, theta_pow[i % n], l)) % l;
            }
            row.push_back(acc);
        }
        m.push_back(std::move(row));
    }
    // plain Gaussian elimination
    u64 rank = 0;
    u32 rows = static_cast<u32>(m.size());
    u32 ncols = static_cast<u32>(cols.size());
    u32 rr = 0;
    for (u32 c = 0; c < ncols && rr < rows; ++c) {
        u32 sel = UINT32_MAX;
        for (u32 i = rr; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == UINT32_MAX) continue;
        std::swap(m[rr], m[sel]);
        u64 inv = invmod(m[rr][c], l);
        for (u32 j = c; j < ncols; ++j) m[rr][j] = mulmod(m[rr][j], inv, l);
        for (u32 i = 0; i < rows; ++i) {
            if (i == rr || m[i][c] == 0) continue;
            u64 f = m[i][c];
            for (u32 j = c; j < ncols; ++j)
                m[i][j] = (m[i][j] + l - mulmod(f, m[rr][j], l)) % l;
        }
        ++rank;
        ++rr;
    }
    return rank;
}

}  // namespace

Cyclotomic central_character(const CharacterTable& t, u32 row, u32 cls) {
    Cyclotomic omega = t.value(row, cls).scaled(make_ratio(t.cls(cls).size, t.degree(row)));
    if (!omega.is_integral())
        throw invariant_violation("central character value is not an algebraic integer");
    return omega;
}

u64 l_of_block_exact(const CharacterTable& t, u64 p, const std::vector<u32>& chars) {
    std::vector<u32> cols = p_regular_columns(t, p);
    std::vector<std::vector<Cyclotomic>> m;
    m.reserve(chars.size());
    for (u32 r : chars) {
        std::vector<Cyclotomic> row;
        row.reserve(cols.size());
        for (u32 c : cols) row.push_back(t.value(r, c));
        m.push_back(std::move(row));
    }
    // Bareiss fraction-free elimination; divisions are exact in the ring
    u32 rows = static_cast<u32>(m.size());
    u32 ncols = static_cast<u32>(cols.size());
    Cyclotomic prev{Rational(1)};
    u64 rank = 0;
    u32 rr = 0;
    for (u32 c = 0; c < ncols && rr < rows; ++c) {
        u32 sel = UINT32_MAX;
        for (u32 i = rr; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel == UINT32_MAX) continue;
        std::swap(m[rr], m[sel]);
        for (u32 i = rr + 1; i < rows; ++i) {
            for (u32 j = c + 1; j < ncols; ++j)
                m[i][j] = (m[rr][c] * m[i][j] - m[i][c] * m[rr][j]) / prev;
            m[i][c] = Cyclotomic();
        }
        prev = m[rr][c];
        ++rank;
        ++rr;
    }
    return rank;
}

u64 l_of_block(const CharacterTable& t, u64 p, const std::vector<u32>& chars) {
    if (chars.empty()) throw input_error("l_of_block: empty character list");
    u64 n = t.exponent();
    u64 floor = 1;
    while (static_cast<unsigned __int128>(floor) * floor <= 4 * static_cast<unsigned __int128>(t.order())) ++floor;
    u64 l1 = smallest_prime_1_mod(n, std::max(n, floor));
    u64 l2 = smallest_prime_1_mod(n, l1);
    std::vector<u32> cols = p_regular_columns(t, p);
    u64 r1 = modular_rank(t, chars, cols, l1);
    u64 r2 = modular_rank(t, chars, cols, l2);
    if (r1 == r2) return r1;
    return l_of_block_exact(t, p, chars);
}

BlockDecomposition block_partition(const CharacterTable& t, u64 p) {
    if (!is_prime(p)) throw input_error("block_partition: p must be prime");
    const u32 k = t.class_count();
    PrimeIdealRed ideal = PrimeIdealRed::choose(p, t.exponent());

    std::map<std::vector<FpPoly>, u32> block_of_sig;
    BlockDecomposition d;
    d.p = p;
    for (u32 r = 0; r < k; ++r) {
        std::vector<FpPoly> sig;
        sig.reserve(k);
        for (u32 c = 0; c < k; ++c) sig.push_back(ideal.reduce(central_character(t, r, c)).value());
        auto [it, fresh] = block_of_sig.emplace(std::move(sig), static_cast<u32>(d.blocks.size()));
        if (fresh) {
            Block b;
            b.p = p;
            d.blocks.push_back(std::move(b));
        }
        d.blocks[it->second].chars.push_back(r);
    }

    const u32 a = valuation(t.order(), p);
    u64 p_regular = p_regular_columns(t, p).size();

    if (a == 0 && d.blocks.size() != k)
        throw invariant_violation("p does not divide the order but some block is not a singleton");

    u64 l_sum = 0;
    for (u32 bi = 0; bi < d.blocks.size(); ++bi) {
        Block& b = d.blocks[bi];
        b.k = b.chars.size();
        u32 min_val = UINT32_MAX;
        for (u32 r : b.chars) min_val = std::min(min_val, valuation(t.degree(r), p));
        b.defect = a - min_val;
        for (u32 r : b.chars) b.heights.push_back(valuation(t.degree(r), p) - min_val);
        for (u32 h : b.heights)
            if (h == 0) ++b.k0;
        b.principal = std::find(b.chars.begin(), b.chars.end(), 0u) != b.chars.end();
        if (b.principal) d.principal_index = bi;
        b.l = l_of_block(t, p, b.chars);
        l_sum += b.l;
    }
    if (d.blocks.empty() || !d.blocks[0].principal)
        throw invariant_violation("trivial character did not land in the first block");

    if (l_sum != p_regular) {
        // retry every block with the exact rank before declaring failure
        l_sum = 0;
        for (Block& b : d.blocks) {
            b.l = l_of_block_exact(t, p, b.chars);
            l_sum += b.l;
        }
        if (l_sum != p_regular)
            throw invariant_violation("block ranks do not sum to the p-regular class count");
    }

    // principal block defect must be full
    if (d.principal().defect != a)
        throw invariant_violation("principal block defect is not the p-part of the order");
    return d;
}

const Block& principal_block(const BlockDecomposition& d) { return d.principal(); }

SylowDescriptor defect_group_descriptor(const PermGroup& g, u64 p) { return sylow_descriptor(g, p); }

BrauerIdentityResult brauer_count_identity(const PermGroup& g, u64 p) {
    CharacterTable t = compute_table(g, "G");
    BlockDecomposition d = block_partition(t, p);
    return brauer_count_identity(g, t, d, p);
}

BrauerIdentityResult brauer_count_identity(const PermGroup& g, const CharacterTable& t,
                                           const BlockDecomposition& d, u64 p) {
    if (!is_prime(p)) throw input_error("brauer_count_identity: p must be prime");
    (void)t;
    BrauerIdentityResult res;
    res.lhs = d.principal().k;
    res.l_b0 = d.principal().l;
    res.center_p_part = p_part(center(g).order(), p);

    PElementClasses pec = p_element_classes(g, p);
    res.rhs = res.center_p_part * res.l_b0;
    for (u32 ci : pec.noncentral) {
        const Permutation& x = g.conjugacy_classes()[ci].representative;
        PermGroup cg = centralizer(g, x);
        CharacterTable tc = compute_table(cg, "C");
        BlockDecomposition dc = block_partition(tc, p);
        res.centralizer_parts.emplace_back(ci, dc.principal().l);
        res.rhs += dc.principal().l;
    }
    res.holds = res.lhs == res.rhs;
    return res;
}

CyclicDefectPrediction cyclic_defect_count(const PermGroup& g, u64 p) {
    PermGroup syl = sylow_subgroup(g, p);
    if (syl.order() == 1) throw domain_error("cyclic_defect_count: trivial Sylow subgroup");
    if (!syl.is_cyclic()) throw domain_error("cyclic_defect_count: Sylow subgroup is not cyclic");
    PermGroup n = normalizer(g, syl);
    PermGroup c = centralizer_of_subgroup(g, syl);
    CyclicDefectPrediction out;
    out.sylow_order = syl.order();
    out.e = n.order() / c.order();
    if ((out.sylow_order - 1) % out.e)
        throw invariant_violation("inertia index does not divide |P| - 1");
    out.predicted_k = out.e + (out.sylow_order - 1) / out.e;
    return out;
}

ordered_json sylow_to_json(const SylowDescriptor& d) {
    ordered_json j;
    j["p"] = d.p;
    j["order"] = d.order;
    j["tag"] = to_string(d.tag);
    j["abelian"] = d.abelian;
    j["cyclic"] = d.cyclic;
    j["exponent"] = d.exponent;
    ordered_json inv = ordered_json::array();
    for (u64 v : d.invariants) inv.push_back(v);
    j["invariants"] = std::move(inv);
    return j;
}

ordered_json block_report_json(const std::string& group_name, const BlockDecomposition& d,
                               const std::optional<SylowDescriptor>& sylow) {
    ordered_json j;
    j["group"] = group_name;
    j["p"] = d.p;
    j["sylow"] = sylow ? sylow_to_json(*sylow) : ordered_json(nullptr);
    ordered_json blocks = ordered_json::array();
    for (const Block& b : d.blocks) {
        ordered_json jb;
        ordered_json chars = ordered_json::array();
        for (u32 r : b.chars) chars.push_back(r);
        jb["chars"] = std::move(chars);
        jb["defect"] = b.defect;
        jb["k"] = b.k;
        jb["k0"] = b.k0;
        jb["l"] = b.l;
        jb["principal"] = b.principal;
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

}  // namespace blockscope
