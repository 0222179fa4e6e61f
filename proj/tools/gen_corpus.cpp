#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "blockscope/errors.hpp"
#include "blockscope/groups.hpp"
#include "blockscope/verify.hpp"

using namespace blockscope;

namespace {

// PSL(2,8) = PGL(2,8) on the projective line over GF(8), degree 9.
// GF(8) = F2[x]/(x^3+x+1), elements as bit masks, point 8 is infinity.
PermGroup psl2_8() {
    auto mul = [](u32 a, u32 b) {
        u32 r = 0;
        for (u32 i = 0; i < 3; ++i)
            if (b & (1u << i)) r ^= a << i;
        for (int i = 5; i >= 3; --i)
            if (r & (1u << i)) r ^= 0b1011u << (i - 3);
        return r;
    };
    auto inv = [&](u32 a) {
        for (u32 b = 1; b < 8; ++b)
            if (mul(a, b) == 1) return b;
        throw invariant_violation("gf8 inverse");
    };
    std::vector<u32> t(9), m(9), s(9);
    for (u32 v = 0; v < 8; ++v) {
        t[v] = v ^ 1u;
        m[v] = mul(2, v);
        s[v] = v ? inv(v) : 8;
    }
    t[8] = 8;
    m[8] = 8;
    s[8] = 0;
    return PermGroup::from_generators(
        9, {Permutation(std::move(t)), Permutation(std::move(m)), Permutation(std::move(s))});
}

// Affine map v -> Av + o on F_3^2, point index 3a+b.
Permutation f9_affine(int a00, int a01, int a10, int a11, int o0, int o1) {
    std::vector<u32> im(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            int x = ((a00 * a + a01 * b + o0) % 3 + 3) % 3;
            int y = ((a10 * a + a11 * b + o1) % 3 + 3) % 3;
            im[3 * a + b] = static_cast<u32>(3 * x + y);
        }
    return Permutation(std::move(im));
}

// (C3 x C3) : C2, inversion on the translation lattice.
PermGroup e9_extended(bool quarter_turn) {
    Permutation t1 = f9_affine(1, 0, 0, 1, 1, 0);
    Permutation t2 = f9_affine(1, 0, 0, 1, 0, 1);
    Permutation top =
        quarter_turn ? f9_affine(0, 2, 1, 0, 0, 0) : f9_affine(2, 0, 0, 2, 0, 0);
    return PermGroup::from_generators(9, {t1, t2, top});
}

// Central product: identify the unique central involutions of both factors.
PermGroup central_product(const PermGroup& a, const PermGroup& b) {
    auto central_involution = [](const PermGroup& f) {
        PermGroup z = center(f);
        for (const auto& e : z.elements())
            if (e.order() == 2) return e;
        throw invariant_violation("no central involution");
    };
    Permutation za = central_involution(a), zb = central_involution(b);
    PermGroup g = groups::direct_product(a, b);
    std::vector<u32> im(g.degree());
    for (u32 i = 0; i < a.degree(); ++i) im[i] = za(i);
    for (u32 j = 0; j < b.degree(); ++j) im[a.degree() + j] = a.degree() + zb(j);
    PermGroup diag = PermGroup::from_generators(g.degree(), {Permutation(std::move(im))});
    return coset_action(g, diag).quotient();
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "corpus";
    std::filesystem::create_directories(dir);

    struct Item {
        std::string name;
        PermGroup g;
    };
    std::vector<Item> items;
    std::set<std::string> seen;
    auto add = [&](const std::string& name, PermGroup g, u64 order) {
        if (g.order() != order) {
            std::fprintf(stderr, "%s: order %llu, expected %llu\n", name.c_str(),
                         static_cast<unsigned long long>(g.order()),
                         static_cast<unsigned long long>(order));
            std::exit(1);
        }
        if (!seen.insert(name).second) {
            std::fprintf(stderr, "duplicate name %s\n", name.c_str());
            std::exit(1);
        }
        items.push_back({name, std::move(g)});
    };
    using namespace groups;

    for (u64 n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 23, 24, 25, 27, 32, 49})
        add("C" + std::to_string(n), cyclic(n), n);

    auto prod = [](std::initializer_list<PermGroup> fs) {
        PermGroup g = trivial();
        bool first = true;
        for (const auto& f : fs) {
            g = first ? f : direct_product(g, f);
            first = false;
        }
        return g;
    };
    add("C2xC2", prod({cyclic(2), cyclic(2)}), 4);
    add("C2xC4", prod({cyclic(2), cyclic(4)}), 8);
    add("C2xC2xC2", prod({cyclic(2), cyclic(2), cyclic(2)}), 8);
    add("C3xC3", prod({cyclic(3), cyclic(3)}), 9);
    add("C2xC6", prod({cyclic(2), cyclic(6)}), 12);
    add("C4xC4", prod({cyclic(4), cyclic(4)}), 16);
    add("C2xC2xC4", prod({cyclic(2), cyclic(2), cyclic(4)}), 16);
    add("C2xC8", prod({cyclic(2), cyclic(8)}), 16);
    add("C2xC2xC2xC2", prod({cyclic(2), cyclic(2), cyclic(2), cyclic(2)}), 16);
    add("C3xC6", prod({cyclic(3), cyclic(6)}), 18);
    add("C2xC10", prod({cyclic(2), cyclic(10)}), 20);
    add("C5xC5", prod({cyclic(5), cyclic(5)}), 25);
    add("C3xC9", prod({cyclic(3), cyclic(9)}), 27);
    add("C3xC3xC3", prod({cyclic(3), cyclic(3), cyclic(3)}), 27);
    add("C2xC14", prod({cyclic(2), cyclic(14)}), 28);
    add("C4xC8", prod({cyclic(4), cyclic(8)}), 32);
    add("C6xC6", prod({cyclic(6), cyclic(6)}), 36);
    add("C7xC7", prod({cyclic(7), cyclic(7)}), 49);

    for (u64 o : {8, 10, 12, 14, 16, 18, 20, 24, 26, 28, 32, 36, 40, 48, 50, 54, 64})
        add("D" + std::to_string(o), dihedral(o), o);

    add("Q8", dicyclic(8), 8);
    for (u64 o : {12, 16, 20, 24, 28, 32, 36, 40, 48, 64})
        add("Dic" + std::to_string(o), dicyclic(o), o);

    add("S3", symmetric(3), 6);
    add("S4", symmetric(4), 24);
    add("S5", symmetric(5), 120);
    add("S6", symmetric(6), 720);
    add("S7", symmetric(7), 5040);
    add("A4", alternating(4), 12);
    add("A5", alternating(5), 60);
    add("A6", alternating(6), 360);
    add("A7", alternating(7), 2520);

    add("SL2_3", sl2_3(), 24);
    add("PSL2_7", psl2_prime(7), 168);
    add("PSL2_8", psl2_8(), 504);
    add("PSL2_11", psl2_prime(11), 660);

    add("ES27e3", heisenberg3(), 27);
    add("ES27e9", semidirect_cyclic(9, 4), 27);
    PermGroup es32p = central_product(dihedral(8), dihedral(8));
    PermGroup es32m = central_product(dihedral(8), dicyclic(8));
    if (involution_count(es32p) != 19 || involution_count(es32m) != 11) {
        std::fprintf(stderr, "central product classification failed\n");
        return 1;
    }
    add("ES32p", std::move(es32p), 32);
    add("ES32m", std::move(es32m), 32);
    add("M16", semidirect_cyclic(8, 5), 16);
    add("SD16", semidirect_cyclic(8, 3), 16);

    add("F20", semidirect_cyclic(5, 2), 20);
    add("F21", semidirect_cyclic(7, 2), 21);
    add("F39", semidirect_cyclic(13, 3), 39);
    add("F42", semidirect_cyclic(7, 3), 42);
    add("F52", semidirect_cyclic(13, 5), 52);
    add("F55", semidirect_cyclic(11, 3), 55);
    add("F110", semidirect_cyclic(11, 2), 110);
    add("F156", semidirect_cyclic(13, 2), 156);
    add("C3rC8", cyclic_by_cyclic(3, 8, 2), 24);
    add("C15rC4", semidirect_cyclic(15, 2), 60);

    add("E9rC2", e9_extended(false), 18);
    add("F36", e9_extended(true), 36);

    add("C2xD8", prod({cyclic(2), dihedral(8)}), 16);
    add("C2xQ8", prod({cyclic(2), dicyclic(8)}), 16);
    add("C3xS3", prod({cyclic(3), symmetric(3)}), 18);
    add("C3xD8", prod({cyclic(3), dihedral(8)}), 24);
    add("C3xQ8", prod({cyclic(3), dicyclic(8)}), 24);
    add("C2xA4", prod({cyclic(2), alternating(4)}), 24);
    add("C2xC2xS3", prod({cyclic(2), cyclic(2), symmetric(3)}), 24);
    add("C4xS3", prod({cyclic(4), symmetric(3)}), 24);
    add("C5xS3", prod({cyclic(5), symmetric(3)}), 30);
    add("A4xC3", prod({alternating(4), cyclic(3)}), 36);
    add("S3xS3", prod({symmetric(3), symmetric(3)}), 36);
    add("C5xD8", prod({cyclic(5), dihedral(8)}), 40);
    add("C7xS3", prod({cyclic(7), symmetric(3)}), 42);
    add("C2xF21", prod({cyclic(2), semidirect_cyclic(7, 2)}), 42);
    add("C2xS4", prod({cyclic(2), symmetric(4)}), 48);
    add("C2xSL2_3", prod({cyclic(2), sl2_3()}), 48);
    add("C2xA5", prod({cyclic(2), alternating(5)}), 120);
    add("D8xD8", prod({dihedral(8), dihedral(8)}), 64);
    add("S4xC3", prod({symmetric(4), cyclic(3)}), 72);

    for (const auto& it : items)
        write_group_file(it.g, it.name, dir + "/" + it.name + ".json");
    std::printf("%zu groups -> %s\n", items.size(), dir.c_str());
    return 0;
}
