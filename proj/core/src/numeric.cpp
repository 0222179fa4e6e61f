#include "blockscope/numeric.hpp"

#include <numeric>

#include "blockscope/errors.hpp"

namespace blockscope {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 checked_mul(u64 a, u64 b) {
    if (a != 0 && b > UINT64_MAX / a)
        throw capacity_error("64-bit overflow in product");
    return a * b;
}

u64 lcm_u64(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

u64 invmod(u64 a, u64 m) {
    // extended Euclid on signed 128-bit intermediates
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        i64 q = r / new_r;
        i64 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw domain_error("invmod: arguments not coprime");
    if (t < 0) t += static_cast<i64>(m);
    return static_cast<u64>(t);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for the full 64-bit range
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, u32>> factorize(u64 n) {
    std::vector<std::pair<u64, u32>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        u32 e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

u64 euler_phi(u64 n) {
    u64 r = n;
    for (auto& [p, e] : factorize(n)) r -= r / p;
    return r;
}

int mobius(u64 n) {
    int sign = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

u32 valuation(u64 n, u64 p) {
    u32 v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

u64 p_part(u64 n, u64 p) {
    u64 r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

u64 p_prime_part(u64 n, u64 p) {
    while (n % p == 0) n /= p;
    return n;
}

u64 mult_order(u64 a, u64 n) {
    if (n == 1) return 1;
    if (std::gcd(a, n) != 1) throw domain_error("mult_order: gcd(a,n) != 1");
    u64 e = euler_phi(n);
    u64 order = e;
    for (auto& [p, m] : factorize(e)) {
        while (order % p == 0 && powmod(a, order / p, n) == 1) order /= p;
    }
    return order;
}

u64 smallest_prime_1_mod(u64 n, u64 floor) {
    u64 l = n + 1;
    if (n == 1) l = 2;
    while (l <= floor || !is_prime(l)) {
        l += (n == 1 ? 1 : n);
    }
    return l;
}

u64 primitive_root(u64 l) {
    if (l == 2) return 1;
    auto fac = factorize(l - 1);
    for (u64 g = 2; g < l; ++g) {
        bool ok = true;
        for (auto& [q, e] : fac) {
            if (powmod(g, (l - 1) / q, l) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw invariant_violation("no primitive root found; modulus not prime?");
}

u64 sqrt_mod(u64 a, u64 l) {
    a %= l;
    if (a == 0) return 0;
    if (l == 2) return a;
    if (powmod(a, (l - 1) / 2, l) != 1) return l;  // non-residue
    if (l % 4 == 3) return powmod(a, (l + 1) / 4, l);
    // Tonelli-Shanks
    u64 q = l - 1;
    u64 s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (l - 1) / 2, l) != l - 1) ++z;
    u64 m = s;
    u64 c = powmod(z, q, l);
    u64 t = powmod(a, q, l);
    u64 r = powmod(a, (q + 1) / 2, l);
    while (t != 1) {
        u64 i = 0;
        u64 tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, l);
            ++i;
            if (i == m) return l;
        }
        u64 b = powmod(c, u64(1) << (m - i - 1), l);
        m = i;
        c = mulmod(b, b, l);
        t = mulmod(t, c, l);
        r = mulmod(r, b, l);
    }
    return r;
}

}  // namespace blockscope
