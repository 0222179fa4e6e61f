#include "blockscope/fppoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

// splitmix64, fixed increment; all randomness in this file is derived from
// explicit seeds so factorizations are pure functions of their inputs
struct Rng {
    u64 state;
    explicit Rng(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    u64 below(u64 n) { return next() % n; }
};

}  // namespace

int fp_degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_trim(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, u64 p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    return fp_trim(std::move(r));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i] % p) % p;
    return fp_trim(std::move(r));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    return fp_trim(std::move(r));
}

FpPoly fp_monic(const FpPoly& a, u64 p) {
    if (a.empty()) return a;
    u64 inv = invmod(a.back(), p);
    FpPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], inv, p);
    return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, u64 p) {
    if (b.empty()) throw domain_error("fp_divmod: division by zero polynomial");
    if (a.size() < b.size()) return {{}, a};
    FpPoly rem = a;
    FpPoly quot(a.size() - b.size() + 1, 0);
    u64 lead_inv = invmod(b.back(), p);
    for (size_t i = a.size(); i-- >= b.size();) {
        if (i >= rem.size() || rem[i] == 0) {
            if (i == 0) break;
            continue;
        }
        u64 c = mulmod(rem[i], lead_inv, p);
        quot[i - b.size() + 1] = c;
        for (size_t j = 0; j < b.size(); ++j) {
            size_t k = i - b.size() + 1 + j;
            rem[k] = (rem[k] + p - mulmod(c, b[j], p)) % p;
        }
        if (i == 0) break;
    }
    return {fp_trim(std::move(quot)), fp_trim(std::move(rem))};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, u64 p) { return fp_divmod(a, b, p).second; }

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

u64 fp_eval(const FpPoly& a, u64 x, u64 p) {
    u64 r = 0;
    for (size_t i = a.size(); i-- > 0;) {
        r = (mulmod(r, x, p) + a[i]) % p;
        if (i == 0) break;
    }
    return r;
}

FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod, u64 p) {
    FpPoly result{1};
    FpPoly b = fp_mod(base, mod, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = bits; i-- > 0;) {
        result = fp_mod(fp_mul(result, result, p), mod, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_mod(fp_mul(result, b, p), mod, p);
        if (i == 0) break;
    }
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial_z(u64 n) {
    static std::map<u64, std::vector<mpz_class>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided exactly by the product of Phi_d for proper divisors d
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (u64 d = 1; d < n; ++d) {
        if (n % d) continue;
        std::vector<mpz_class> phi_d = cyclotomic_polynomial_z(d);
        // exact long division, constant-first layout
        std::vector<mpz_class> quot(num.size() - phi_d.size() + 1, 0);
        std::vector<mpz_class> rem = num;
        for (size_t i = rem.size(); i-- >= phi_d.size();) {
            if (rem[i] != 0) {
                mpz_class c = rem[i];  // phi_d is monic
                quot[i - phi_d.size() + 1] = c;
                for (size_t j = 0; j < phi_d.size(); ++j) rem[i - phi_d.size() + 1 + j] -= c * phi_d[j];
            }
            if (i == 0) break;
        }
        num = std::move(quot);
    }
    std::lock_guard<std::mutex> lk(mtx);
    cache[n] = num;
    return num;
}

namespace {

// one gcd-splitting attempt; returns a proper monic factor of g or empty
FpPoly split_attempt(const FpPoly& g, u64 f_deg, u64 p, Rng& rng) {
    int dg = fp_degree(g);
    FpPoly r(dg);
    for (int i = 0; i < dg; ++i) r[i] = rng.below(p);
    r = fp_trim(std::move(r));
    if (fp_degree(r) < 1) return {};
    FpPoly s;
    if (p == 2) {
        // trace map: r + r^2 + r^4 + ... (f_deg summands)
        FpPoly acc = fp_mod(r, g, p);
        FpPoly cur = acc;
        for (u64 i = 1; i < f_deg; ++i) {
            cur = fp_mod(fp_mul(cur, cur, p), g, p);
            acc = fp_add(acc, cur, p);
        }
        s = acc;
    } else {
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f_deg));
        e = (e - 1) / 2;
        s = fp_sub(fp_powmod(r, e, g, p), FpPoly{1}, p);
    }
    FpPoly d = fp_gcd(s, g, p);
    if (fp_degree(d) > 0 && fp_degree(d) < dg) return d;
    return {};
}

}  // namespace

std::vector<FpPoly> factor_cyclotomic_mod_p(u64 n, u64 p) {
    struct Key {
        u64 n, p;
        bool operator<(const Key& o) const { return n != o.n ? n < o.n : p < o.p; }
    };
    static std::map<Key, std::vector<FpPoly>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find({n, p});
        if (it != cache.end()) return it->second;
    }
    if (n % p == 0) throw domain_error("factor_cyclotomic_mod_p: p divides n");
    auto phi_z = cyclotomic_polynomial_z(n);
    FpPoly phi(phi_z.size());
    for (size_t i = 0; i < phi_z.size(); ++i) {
        mpz_class c = phi_z[i] % static_cast<long>(p);
        if (c < 0) c += static_cast<long>(p);
        phi[i] = c.get_ui();
    }
    phi = fp_trim(std::move(phi));
    u64 f_deg = mult_order(p % n == 0 ? p : p % n, n);
    if (n == 1 || n == 2) f_deg = 1;

    Rng rng(0x5eedf00du ^ (n * 0x100000001b3ull) ^ (p << 17));
    std::vector<FpPoly> done;
    std::vector<FpPoly> work{fp_monic(phi, p)};
    while (!work.empty()) {
        FpPoly g = std::move(work.back());
        work.pop_back();
        if (static_cast<u64>(fp_degree(g)) == f_deg) {
            done.push_back(fp_monic(g, p));
            continue;
        }
        FpPoly d;
        while (d.empty()) d = split_attempt(g, f_deg, p, rng);
        work.push_back(fp_divmod(g, d, p).first);
        work.push_back(std::move(d));
    }
    std::sort(done.begin(), done.end());
    if (done.size() != euler_phi(n) / f_deg)
        throw invariant_violation("cyclotomic factor count mismatch");
    std::lock_guard<std::mutex> lk(mtx);
    cache[{n, p}] = done;
    return done;
}

std::vector<u64> fp_roots(const FpPoly& a, u64 p) {
    if (a.empty()) throw domain_error("fp_roots: zero polynomial");
    if (p < 64) {
        std::vector<u64> roots;
        for (u64 x = 0; x < p; ++x)
            if (fp_eval(a, x, p) == 0) roots.push_back(x);
        return roots;
    }
    // distinct-root part: gcd(a, x^p - x)
    FpPoly am = fp_monic(a, p);
    FpPoly xp = fp_powmod(FpPoly{0, 1}, mpz_class(static_cast<unsigned long>(p)), am, p);
    FpPoly g = fp_gcd(fp_sub(xp, FpPoly{0, 1}, p), am, p);
    std::vector<u64> roots;
    if (fp_degree(g) == 0) return roots;
    // peel off roots by randomized gcds with (x+c)^((p-1)/2) - 1
    Rng rng(0xd00d5eedull ^ p);
    std::vector<FpPoly> work{g};
    while (!work.empty()) {
        FpPoly h = std::move(work.back());
        work.pop_back();
        int dh = fp_degree(h);
        if (dh == 0) continue;
        if (dh == 1) {
            // monic x + c, root is -c
            roots.push_back((p - h[0] % p) % p);
            continue;
        }
        FpPoly d;
        while (true) {
            u64 c = rng.below(p);
            FpPoly shifted{c, 1};
            FpPoly s = fp_sub(fp_powmod(shifted, mpz_class((static_cast<unsigned long>(p) - 1) / 2), h, p), FpPoly{1}, p);
            d = fp_gcd(s, h, p);
            if (fp_degree(d) > 0 && fp_degree(d) < dh) break;
        }
        work.push_back(fp_divmod(h, d, p).first);
        work.push_back(std::move(d));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace blockscope
