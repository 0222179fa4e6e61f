#include "blockscope/groups.hpp"

#include <numeric>

#include "blockscope/errors.hpp"

namespace blockscope {
namespace groups {

PermGroup trivial() { return PermGroup::from_generators(1, {}); }

PermGroup cyclic(u64 n) {
    if (n == 0) throw input_error("cyclic: n must be positive");
    if (n == 1) return trivial();
    std::vector<u32> img(n);
    for (u64 i = 0; i < n; ++i) img[i] = static_cast<u32>((i + 1) % n);
    return PermGroup::from_generators(static_cast<u32>(n), {Permutation(std::move(img))});
}

PermGroup symmetric(u32 n) {
    if (n < 1) throw input_error("symmetric: n must be positive");
    if (n == 1) return trivial();
    std::vector<Permutation> gens;
    gens.push_back(perm_from_cycles(n, {{0, 1}}));
    if (n > 2) {
        std::vector<u32> cyc(n);
        std::iota(cyc.begin(), cyc.end(), 0u);
        gens.push_back(perm_from_cycles(n, {cyc}));
    }
    return PermGroup::from_generators(n, std::move(gens));
}

PermGroup alternating(u32 n) {
    if (n < 3) return trivial();
    std::vector<Permutation> gens;
    gens.push_back(perm_from_cycles(n, {{0, 1, 2}}));
    if (n > 3) {
        if (n % 2) {
            std::vector<u32> cyc(n);
            std::iota(cyc.begin(), cyc.end(), 0u);
            gens.push_back(perm_from_cycles(n, {cyc}));
        } else {
            std::vector<u32> cyc(n - 1);
            std::iota(cyc.begin(), cyc.end(), 1u);
            gens.push_back(perm_from_cycles(n, {cyc}));
        }
    }
    return PermGroup::from_generators(n, std::move(gens));
}

PermGroup dihedral(u64 order) {
    if (order < 2 || order % 2) throw input_error("dihedral: order must be even and >= 2");
    u64 m = order / 2;
    if (m == 1) return cyclic(2);
    if (m == 2) {
        // Klein group as <(0 1), (2 3)> would not be transitive; use degree 4 pairs
        return PermGroup::from_generators(4, {perm_from_cycles(4, {{0, 1}}), perm_from_cycles(4, {{2, 3}})});
    }
    std::vector<u32> rot(m), refl(m);
    for (u64 i = 0; i < m; ++i) {
        rot[i] = static_cast<u32>((i + 1) % m);
        refl[i] = static_cast<u32>((m - i) % m);
    }
    return PermGroup::from_generators(static_cast<u32>(m),
                                      {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermGroup dicyclic(u64 order) {
    if (order < 8 || order % 4) throw input_error("dicyclic: order must be a multiple of 4, >= 8");
    u64 m = order / 4;
    u64 n = 2 * m;  // the cyclic part <a> has order 2m
    // right regular action on normal forms a^i b^eps, points eps*n + i
    std::vector<u32> ra(2 * n), rb(2 * n);
    for (u64 i = 0; i < n; ++i) {
        ra[i] = static_cast<u32>((i + 1) % n);          // a^i * a
        ra[n + i] = static_cast<u32>(n + (i + n - 1) % n);  // a^i b * a = a^(i-1) b
        rb[i] = static_cast<u32>(n + i);                // a^i * b
        rb[n + i] = static_cast<u32>((i + m) % n);      // a^i b * b = a^(i+m)
    }
    return PermGroup::from_generators(static_cast<u32>(2 * n),
                                      {Permutation(std::move(ra)), Permutation(std::move(rb))});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    u32 da = a.degree(), db = b.degree();
    u32 d = da + db;
    std::vector<Permutation> gens;
    for (const Permutation& g : a.generators()) {
        std::vector<u32> img(d);
        for (u32 i = 0; i < da; ++i) img[i] = g(i);
        for (u32 i = 0; i < db; ++i) img[da + i] = da + i;
        gens.emplace_back(std::move(img));
    }
    for (const Permutation& g : b.generators()) {
        std::vector<u32> img(d);
        for (u32 i = 0; i < da; ++i) img[i] = i;
        for (u32 i = 0; i < db; ++i) img[da + i] = da + g(i);
        gens.emplace_back(std::move(img));
    }
    return PermGroup::from_generators(d, std::move(gens));
}

PermGroup semidirect_cyclic(u64 n, u64 k) {
    if (n < 2) throw input_error("semidirect_cyclic: n must be >= 2");
    k %= n;
    if (std::gcd(k, n) != 1) throw input_error("semidirect_cyclic: k must be a unit mod n");
    std::vector<u32> add(n), mul(n);
    for (u64 i = 0; i < n; ++i) {
        add[i] = static_cast<u32>((i + 1) % n);
        mul[i] = static_cast<u32>((i * k) % n);
    }
    return PermGroup::from_generators(static_cast<u32>(n),
                                      {Permutation(std::move(add)), Permutation(std::move(mul))});
}

PermGroup cyclic_by_cyclic(u64 n, u64 m, u64 k) {
    if (n < 2 || m < 2) throw input_error("cyclic_by_cyclic: n, m must be >= 2");
    k %= n;
    if (std::gcd(k, n) != 1) throw input_error("cyclic_by_cyclic: k must be a unit mod n");
    u64 km = 1;
    for (u64 i = 0; i < m; ++i) km = (km * k) % n;
    if (km != 1) throw input_error("cyclic_by_cyclic: k^m != 1 mod n");
    u32 d = static_cast<u32>(n + m);
    std::vector<u32> a(d), b(d);
    for (u32 i = 0; i < d; ++i) a[i] = b[i] = i;
    for (u64 i = 0; i < n; ++i) a[i] = static_cast<u32>((i + 1) % n);
    for (u64 i = 0; i < n; ++i) b[i] = static_cast<u32>((i * k) % n);
    for (u64 i = 0; i < m; ++i) b[n + i] = static_cast<u32>(n + (i + 1) % m);
    return PermGroup::from_generators(d, {Permutation(std::move(a)), Permutation(std::move(b))});
}

PermGroup sl2_3() {
    // nonzero vectors of F_3^2, index 3*x + y - 1
    auto vec_index = [](u32 x, u32 y) { return 3 * x + y - 1; };
    auto act = [&](int a, int b, int c, int d) {
        std::vector<u32> img(8);
        for (u32 x = 0; x < 3; ++x) {
            for (u32 y = 0; y < 3; ++y) {
                if (x == 0 && y == 0) continue;
                u32 nx = static_cast<u32>((a * x + b * y) % 3);
                u32 ny = static_cast<u32>((c * x + d * y) % 3);
                img[vec_index(x, y)] = vec_index(nx, ny);
            }
        }
        return Permutation(std::move(img));
    };
    // S = [[0,-1],[1,0]], T = [[1,1],[0,1]], both determinant 1
    return PermGroup::from_generators(8, {act(0, 2, 1, 0), act(1, 1, 0, 1)});
}

PermGroup psl2_prime(u64 q) {
    if (!is_prime(q) || q < 5) throw input_error("psl2_prime: q must be a prime >= 5");
    u32 d = static_cast<u32>(q + 1);  // points 0..q-1 are field elements, q is infinity
    const u32 inf = static_cast<u32>(q);
    std::vector<u32> t(d), s(d);
    for (u64 x = 0; x < q; ++x) t[x] = static_cast<u32>((x + 1) % q);
    t[inf] = inf;
    // x -> -1/x from [[0,-1],[1,0]]
    s[inf] = 0;
    s[0] = inf;
    for (u64 x = 1; x < q; ++x) s[x] = static_cast<u32>((q - invmod(x, q)) % q);
    return PermGroup::from_generators(d, {Permutation(std::move(t)), Permutation(std::move(s))});
}

PermGroup heisenberg3() {
    // upper unitriangular 3x3 matrices over F_3 acting on column vectors,
    // point index 9*x + 3*y + z
    auto act = [](u32 a, u32 b, u32 c) {
        // matrix [[1,a,b],[0,1,c],[0,0,1]]
        std::vector<u32> img(27);
        for (u32 x = 0; x < 3; ++x)
            for (u32 y = 0; y < 3; ++y)
                for (u32 z = 0; z < 3; ++z) {
                    u32 nx = (x + a * y + b * z) % 3;
                    u32 ny = (y + c * z) % 3;
                    img[9 * x + 3 * y + z] = 9 * nx + 3 * ny + z;
                }
        return Permutation(std::move(img));
    };
    return PermGroup::from_generators(27, {act(1, 0, 0), act(0, 0, 1)});
}

}  // namespace groups
}  // namespace blockscope
