#include "blockscope/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

struct ConductorCtx {
    u64 n = 1;
    u64 phi = 1;
    std::vector<mpz_class> phi_poly;               // Phi_n, monic, constant first
    std::vector<std::vector<mpz_class>> pow_rows;  // x^(phi+i) mod Phi_n
};

const ConductorCtx& conductor_ctx(u64 n) {
    static std::map<u64, std::unique_ptr<ConductorCtx>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto ctx = std::make_unique<ConductorCtx>();
    ctx->n = n;
    ctx->phi = euler_phi(n);
    ctx->phi_poly = cyclotomic_polynomial_z(n);
    // rows for exponents phi .. max(n-1, 2*phi-2)
    u64 top = std::max(n >= 1 ? n - 1 : 0, 2 * ctx->phi - 2);
    if (top >= ctx->phi) {
        ctx->pow_rows.resize(top - ctx->phi + 1);
        // x^phi = -(lower part of Phi)
        std::vector<mpz_class> cur(ctx->phi);
        for (u64 i = 0; i < ctx->phi; ++i) cur[i] = -ctx->phi_poly[i];
        ctx->pow_rows[0] = cur;
        for (u64 e = ctx->phi + 1; e <= top; ++e) {
            std::vector<mpz_class> next(ctx->phi);
            // multiply by x: shift, then fold the overflow coefficient
            mpz_class overflow = cur[ctx->phi - 1];
            for (u64 i = ctx->phi - 1; i >= 1; --i) next[i] = cur[i - 1];
            next[0] = 0;
            if (overflow != 0)
                for (u64 i = 0; i < ctx->phi; ++i) next[i] += overflow * ctx->pow_rows[0][i];
            ctx->pow_rows[e - ctx->phi] = next;
            cur = std::move(next);
        }
    }
    const ConductorCtx& ref = *ctx;
    cache.emplace(n, std::move(ctx));
    return ref;
}

// reduce an arbitrary-degree polynomial in z to the power basis
std::vector<Rational> reduce_poly(u64 n, std::vector<Rational> poly) {
    const ConductorCtx& ctx = conductor_ctx(n);
    std::vector<Rational> out(ctx.phi, Rational(0));
    for (size_t e = 0; e < poly.size(); ++e) {
        if (poly[e] == 0) continue;
        if (e < ctx.phi) {
            out[e] += poly[e];
        } else {
            u64 row = e - ctx.phi;
            if (row >= ctx.pow_rows.size()) throw invariant_violation("cyclotomic exponent out of range");
            for (u64 i = 0; i < ctx.phi; ++i)
                if (ctx.pow_rows[row][i] != 0) out[i] += poly[e] * Rational(ctx.pow_rows[row][i]);
        }
    }
    return out;
}

}  // namespace

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}

Cyclotomic::Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}

Cyclotomic Cyclotomic::zeta(u64 n, u64 power) {
    if (n == 0) throw input_error("zeta: conductor must be positive");
    power %= n;
    Cyclotomic z;
    z.conductor_ = n;
    std::vector<Rational> poly(power + 1, Rational(0));
    poly[power] = 1;
    z.coeffs_ = reduce_poly(n, std::move(poly));
    return z;
}

Cyclotomic Cyclotomic::from_power_coeffs(u64 n, std::vector<Rational> coeffs) {
    if (n == 0) throw input_error("from_power_coeffs: conductor must be positive");
    Cyclotomic z;
    z.conductor_ = n;
    z.coeffs_ = reduce_poly(n, std::move(coeffs));
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const Rational& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw domain_error("value is not rational");
    return coeffs_[0];
}

bool Cyclotomic::is_integral() const {
    for (const Rational& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

Cyclotomic Cyclotomic::embedded(u64 m) const {
    if (m % conductor_) throw domain_error("embedded: target conductor not a multiple");
    if (m == conductor_) return *this;
    u64 stride = m / conductor_;
    std::vector<Rational> poly((coeffs_.size() - 1) * stride + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * stride] = coeffs_[i];
    Cyclotomic z;
    z.conductor_ = m;
    z.coeffs_ = reduce_poly(m, std::move(poly));
    return z;
}

Cyclotomic Cyclotomic::galois(u64 k) const {
    k %= conductor_;
    if (gcd_u64(k, conductor_) != 1) throw domain_error("galois: exponent not coprime to conductor");
    std::vector<Rational> poly(conductor_, Rational(0));
    bool any = false;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        poly[(i * k) % conductor_] += coeffs_[i];
        any = true;
    }
    if (!any) return *this;
    Cyclotomic z;
    z.conductor_ = conductor_;
    z.coeffs_ = reduce_poly(conductor_, std::move(poly));
    return z;
}

Cyclotomic Cyclotomic::conjugate() const {
    if (conductor_ <= 2) return *this;
    return galois(conductor_ - 1);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (Rational& c : z.coeffs_) c = -c;
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (conductor_ == rhs.conductor_) {
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    u64 m = lcm_u64(conductor_, rhs.conductor_);
    *this = embedded(m);
    Cyclotomic other = rhs.embedded(m);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (conductor_ != rhs.conductor_) {
        u64 m = lcm_u64(conductor_, rhs.conductor_);
        *this = embedded(m);
        return *this *= rhs.embedded(m);
    }
    std::vector<Rational> prod(2 * coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = reduce_poly(conductor_, std::move(prod));
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    if (is_rational()) {
        Cyclotomic z = *this;
        Rational inv = 1 / coeffs_[0];
        for (Rational& c : z.coeffs_) c = 0;
        z.coeffs_[0] = inv;
        return z;
    }
    // extended Euclid against Phi_N in Q[x]
    const ConductorCtx& ctx = conductor_ctx(conductor_);
    using QPoly = std::vector<Rational>;
    auto trim = [](QPoly v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    auto divmod = [&](const QPoly& a, const QPoly& b) {
        QPoly rem = a, quot(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
        while (rem.size() >= b.size() && !rem.empty()) {
            Rational c = rem.back() / b.back();
            size_t shift = rem.size() - b.size();
            quot[shift] = c;
            for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
            rem = trim(std::move(rem));
            if (rem.size() < b.size()) break;
        }
        return std::make_pair(trim(std::move(quot)), trim(std::move(rem)));
    };
    QPoly r0(ctx.phi_poly.size());
    for (size_t i = 0; i < ctx.phi_poly.size(); ++i) r0[i] = Rational(ctx.phi_poly[i]);
    QPoly r1 = trim(coeffs_);
    QPoly s0{Rational(0)}, s1{Rational(1)};  // coefficients of the argument
    while (!r1.empty() && r1.size() > 1) {
        auto [q, r2] = divmod(r0, r1);
        // s2 = s0 - q*s1
        QPoly qs(q.size() + s1.size(), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        QPoly s2(std::max(s0.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        r0 = std::move(r1);
        r1 = trim(std::move(r2));
        s0 = std::move(s1);
        s1 = trim(std::move(s2));
    }
    if (r1.empty()) throw invariant_violation("cyclotomic inverse: element shares a factor with Phi_N");
    Rational unit = r1[0];
    for (Rational& c : s1) c /= unit;
    return from_power_coeffs(conductor_, std::move(s1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
    if (rhs.is_rational()) {
        Rational r = rhs.rational_value();
        if (r == 0) throw domain_error("division by zero");
        for (Rational& c : coeffs_) c /= r;
        return *this;
    }
    if (conductor_ != rhs.conductor_) {
        u64 m = lcm_u64(conductor_, rhs.conductor_);
        *this = embedded(m);
        return *this /= rhs.embedded(m);
    }
    return *this *= rhs.inverse();
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    Cyclotomic z = *this;
    for (Rational& c : z.coeffs_) c *= r;
    return z;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) {
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            int c = cmp(a.coeffs_[i], b.coeffs_[i]);
            if (c) return c;
        }
        return 0;
    }
    u64 m = lcm_u64(a.conductor_, b.conductor_);
    return compare(a.embedded(m), b.embedded(m));
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z" << conductor_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

size_t PrimeIdealRed::ideal_count(u64 p, u64 n) {
    if (!is_prime(p)) throw input_error("ideal_count: p must be prime");
    u64 m = p_prime_part(n, p);
    return factor_cyclotomic_mod_p(m, p).size();
}

PrimeIdealRed PrimeIdealRed::choose(u64 p, u64 n, size_t factor_index) {
    if (!is_prime(p)) throw input_error("prime ideal: p must be prime");
    if (n == 0) throw input_error("prime ideal: conductor must be positive");
    PrimeIdealRed red;
    red.p_ = p;
    red.conductor_ = n;
    red.m_ = p_prime_part(n, p);
    auto factors = factor_cyclotomic_mod_p(red.m_, p);
    if (factor_index >= factors.size())
        throw input_error("prime ideal: factor index out of range");
    red.modulus_ = factors[factor_index];
    return red;
}

ResidueElem PrimeIdealRed::reduce(const Rational& r) const {
    mpz_class den = r.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_)))
        throw reduction_error("denominator divisible by p");
    mpz_class num = r.get_num();
    u64 dmod = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p_));
    u64 nmod = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p_));
    u64 v = mulmod(nmod, invmod(dmod, p_), p_);
    return ResidueElem(p_, v ? FpPoly{v} : FpPoly{});
}

ResidueElem PrimeIdealRed::reduce(const Cyclotomic& a) const {
    if (conductor_ % a.conductor() != 0)
        throw domain_error("reduce: value conductor does not divide the ideal conductor");
    Cyclotomic v = a.conductor() == conductor_ ? a : a.embedded(conductor_);
    FpPoly poly(v.coeffs().size(), 0);
    for (size_t i = 0; i < v.coeffs().size(); ++i) {
        const Rational& c = v.coeffs()[i];
        mpz_class den = c.get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_)))
            throw reduction_error("denominator divisible by p");
        u64 dmod = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p_));
        mpz_class num = c.get_num();
        u64 nmod = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p_));
        poly[i] = mulmod(nmod, invmod(dmod, p_), p_);
    }
    return ResidueElem(p_, fp_mod(fp_trim(std::move(poly)), modulus_, p_));
}

ResidueElem PrimeIdealRed::add(const ResidueElem& a, const ResidueElem& b) const {
    return ResidueElem(p_, fp_add(a.value(), b.value(), p_));
}

ResidueElem PrimeIdealRed::mul(const ResidueElem& a, const ResidueElem& b) const {
    return ResidueElem(p_, fp_mod(fp_mul(a.value(), b.value(), p_), modulus_, p_));
}

}  // namespace blockscope
