#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "blockscope/fppoly.hpp"
#include "blockscope/numeric.hpp"

namespace blockscope {

using Rational = mpq_class;

// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1) where z is
// a fixed primitive N-th root of unity.  The conductor is part of the value;
// mixed-conductor arithmetic embeds into the lcm.  The coefficient vector
// always has length exactly phi(N).
class Cyclotomic {
public:
    Cyclotomic();  // zero at conductor 1
    explicit Cyclotomic(const Rational& r);
    explicit Cyclotomic(long v);

    static Cyclotomic zeta(u64 n, u64 power = 1);
    // coefficients of an arbitrary-degree polynomial in z, reduced mod Phi_N
    static Cyclotomic from_power_coeffs(u64 n, std::vector<Rational> coeffs);

    u64 conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;       // requires is_rational
    bool is_integral() const;              // all coefficients have denominator 1

    Cyclotomic embedded(u64 m) const;      // conductor must divide m
    Cyclotomic galois(u64 k) const;        // z -> z^k, gcd(k, N) = 1
    Cyclotomic conjugate() const;          // z -> z^-1

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    Cyclotomic inverse() const;
    Cyclotomic scaled(const Rational& r) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) != 0; }

    // Deterministic order used for canonical sorting: aligns the two
    // conductors, then compares coefficient vectors lexicographically.
    // Antisymmetric, and zero exactly on equal values; a total order on any
    // set of equal-conductor values (tables embed all entries to the group
    // exponent for this reason), but mixed-conductor chains need not be
    // transitive because embedding reshuffles coefficient positions.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    std::string to_string() const;

private:
    u64 conductor_;
    std::vector<Rational> coeffs_;
};

// Reduction of cyclotomic integers modulo a prime ideal over p.  The target
// is F_p[x]/(g) where g is one fixed irreducible factor of the cyclotomic
// polynomial of conductor N' = N with its p-part removed; the image of
// zeta_N is the class of x.  The factor choice is deterministic: factors are
// sorted by coefficient list and factor_index selects one.
class ResidueElem {
public:
    ResidueElem() = default;
    ResidueElem(u64 p, FpPoly value) : p_(p), value_(std::move(value)) {}
    u64 p() const { return p_; }
    const FpPoly& value() const { return value_; }
    friend bool operator==(const ResidueElem& a, const ResidueElem& b) = default;
    friend auto operator<=>(const ResidueElem& a, const ResidueElem& b) = default;

private:
    u64 p_ = 0;
    FpPoly value_;
};

class PrimeIdealRed {
public:
    // Number of prime ideals available above p for conductor n, i.e. the
    // number of irreducible factors of Phi_{n'} mod p.
    static size_t ideal_count(u64 p, u64 n);
    static PrimeIdealRed choose(u64 p, u64 n, size_t factor_index = 0);

    u64 p() const { return p_; }
    u64 conductor() const { return conductor_; }
    u64 reduced_conductor() const { return m_; }
    const FpPoly& modulus() const { return modulus_; }
    u32 residue_degree() const { return static_cast<u32>(modulus_.size() - 1); }

    // Throws reduction_error when a denominator is divisible by p.  The
    // argument's conductor must divide this ideal's conductor.
    ResidueElem reduce(const Cyclotomic& a) const;
    ResidueElem reduce(const Rational& r) const;

    ResidueElem add(const ResidueElem& a, const ResidueElem& b) const;
    ResidueElem mul(const ResidueElem& a, const ResidueElem& b) const;
    bool is_zero(const ResidueElem& a) const { return a.value().empty(); }

private:
    u64 p_ = 0, conductor_ = 1, m_ = 1;
    FpPoly modulus_;
};

}  // namespace blockscope
