#include "blockscope/chartable.hpp"

#include <algorithm>
#include <fstream>

#include "blockscope/errors.hpp"

namespace blockscope {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// ---- dense linear algebra over F_l ----

struct FlMatrix {
    u32 n = 0;
    std::vector<u64> a;  // row major
    u64& at(u32 r, u32 c) { return a[static_cast<size_t>(r) * n + c]; }
    u64 at(u32 r, u32 c) const { return a[static_cast<size_t>(r) * n + c]; }
};

// vectors as rows, reduced row echelon form; returns pivot columns
std::vector<u32> rref(std::vector<std::vector<u64>>& rows, u64 l) {
    std::vector<u32> pivots;
    if (rows.empty()) return pivots;
    u32 cols = static_cast<u32>(rows[0].size());
    u32 r = 0;
    for (u32 c = 0; c < cols && r < rows.size(); ++c) {
        u32 sel = UINT32_MAX;
        for (u32 i = r; i < rows.size(); ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == UINT32_MAX) continue;
        std::swap(rows[r], rows[sel]);
        u64 inv = invmod(rows[r][c], l);
        for (u32 j = c; j < cols; ++j) rows[r][j] = mulmod(rows[r][j], inv, l);
        for (u32 i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            u64 f = rows[i][c];
            for (u32 j = c; j < cols; ++j)
                rows[i][j] = (rows[i][j] + l - mulmod(f, rows[r][j], l)) % l;
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// characteristic polynomial via Hessenberg reduction, monic, constant first
FpPoly charpoly(FlMatrix m, u64 l) {
    u32 n = m.n;
    // similarity reduction to upper Hessenberg
    for (u32 c = 0; n >= 3 && c + 2 < n; ++c) {
        u32 piv = UINT32_MAX;
        for (u32 r = c + 1; r < n; ++r)
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv == UINT32_MAX) continue;
        if (piv != c + 1) {
            for (u32 j = 0; j < n; ++j) std::swap(m.a[static_cast<size_t>(piv) * n + j], m.a[static_cast<size_t>(c + 1) * n + j]);
            for (u32 i = 0; i < n; ++i) std::swap(m.at(i, piv), m.at(i, c + 1));
        }
        u64 inv = invmod(m.at(c + 1, c), l);
        for (u32 r = c + 2; r < n; ++r) {
            u64 f = mulmod(m.at(r, c), inv, l);
            if (f == 0) continue;
            for (u32 j = 0; j < n; ++j)
                m.at(r, j) = (m.at(r, j) + l - mulmod(f, m.at(c + 1, j), l)) % l;
            for (u32 i = 0; i < n; ++i)
                m.at(i, c + 1) = (m.at(i, c + 1) + mulmod(f, m.at(i, r), l)) % l;
        }
    }
    // p_0 = 1; p_m = (x - h_mm) p_{m-1} - sum_i h_im * prod(subdiag) * p_{i-1}
    std::vector<FpPoly> p(n + 1);
    p[0] = FpPoly{1};
    for (u32 mm = 1; mm <= n; ++mm) {
        u64 h = m.at(mm - 1, mm - 1);
        FpPoly cur = fp_sub(fp_mul(p[mm - 1], FpPoly{0, 1}, l), fp_mul(p[mm - 1], FpPoly{h}, l), l);
        u64 prod = 1;
        for (u32 i = mm - 1; i >= 1; --i) {
            prod = mulmod(prod, m.at(i, i - 1), l);
            if (prod == 0) break;
            u64 coeff = mulmod(m.at(i - 1, mm - 1), prod, l);
            if (coeff != 0) cur = fp_sub(cur, fp_mul(p[i - 1], FpPoly{coeff}, l), l);
        }
        p[mm] = std::move(cur);
    }
    return p[n];
}

struct Subspace {
    // reduced echelon basis rows, each of length k
    std::vector<std::vector<u64>> basis;
    std::vector<u32> pivots;
};

std::vector<u64> coords_in(const Subspace& s, std::vector<u64> w, u64 l) {
    std::vector<u64> c(s.basis.size(), 0);
    for (size_t t = 0; t < s.basis.size(); ++t) {
        u64 x = w[s.pivots[t]];
        if (x == 0) continue;
        c[t] = x;
        for (size_t j = 0; j < w.size(); ++j)
            w[j] = (w[j] + l - mulmod(x, s.basis[t][j], l)) % l;
    }
    for (u64 x : w)
        if (x != 0) throw invariant_violation("vector escaped an invariant subspace");
    return c;
}

}  // namespace

// ---- table construction and validation ----

CharacterTable CharacterTable::build(std::string name, u64 order, u64 exponent,
                                     std::vector<ClassData> classes,
                                     std::vector<std::vector<Cyclotomic>> rows) {
    CharacterTable t;
    t.name_ = std::move(name);
    t.order_ = order;
    t.exponent_ = exponent;
    t.classes_ = std::move(classes);

    // uniform conductor = exponent
    for (auto& row : rows)
        for (auto& v : row) {
            if (exponent % v.conductor())
                throw input_error("value conductor does not divide the table exponent");
            if (v.conductor() != exponent) v = v.embedded(exponent);
        }

    // degrees, then canonical order with the trivial row pinned first
    u32 k = static_cast<u32>(rows.size());
    std::vector<u32> idx(k);
    std::vector<char> triv(k, 1);
    std::vector<Rational> degs(k);
    for (u32 i = 0; i < k; ++i) {
        idx[i] = i;
        if (rows[i].empty()) throw invariant_violation("empty character row");
        if (!rows[i][0].is_rational()) throw invariant_violation("character degree is not rational");
        degs[i] = rows[i][0].rational_value();
        for (const Cyclotomic& v : rows[i])
            if (!(v.is_rational() && v.rational_value() == 1)) {
                triv[i] = 0;
                break;
            }
    }
    std::sort(idx.begin(), idx.end(), [&](u32 a, u32 b) {
        if (triv[a] != triv[b]) return triv[a] > triv[b];
        int c = cmp(degs[a], degs[b]);
        if (c) return c < 0;
        for (size_t col = 0; col < rows[a].size(); ++col) {
            int vc = Cyclotomic::compare(rows[a][col], rows[b][col]);
            if (vc) return vc < 0;
        }
        return false;
    });
    t.irr_.reserve(k);
    for (u32 i = 0; i < k; ++i) t.irr_.push_back(std::move(rows[idx[i]]));

    t.degrees_.resize(k);
    for (u32 r = 0; r < k; ++r) {
        const Cyclotomic& d = t.irr_[r][0];
        if (!d.is_rational() || !d.is_integral())
            throw invariant_violation("character degree is not a rational integer");
        Rational dv = d.rational_value();
        if (dv <= 0) throw invariant_violation("character degree is not positive");
        t.degrees_[r] = mpz_class(dv.get_num()).get_ui();
    }

    t.validate();
    return t;
}

void CharacterTable::validate() const {
    u32 k = class_count();
    if (irr_.size() != k) throw invariant_violation("table is not square");
    if (k == 0) throw invariant_violation("table has no classes");
    for (const auto& row : irr_)
        if (row.size() != k) throw invariant_violation("row length mismatch");

    if (classes_[0].size != 1 || classes_[0].element_order != 1)
        throw invariant_violation("first class is not the identity class");
    u64 size_sum = 0;
    u64 order_lcm = 1;
    for (const ClassData& c : classes_) {
        size_sum += c.size;
        if (c.size == 0 || order_ % c.size) throw invariant_violation("class size does not divide the order");
        if (c.element_order == 0 || exponent_ % c.element_order)
            throw invariant_violation("element order does not divide the exponent");
        order_lcm = lcm_u64(order_lcm, c.element_order);
        for (auto& [q, target] : c.power_maps) {
            if (target >= k) throw invariant_violation("power map target out of range");
            u64 expect = c.element_order / gcd_u64(c.element_order, q);
            if (classes_[target].element_order != expect)
                throw invariant_violation("power map target has the wrong element order");
        }
    }
    if (size_sum != order_) throw invariant_violation("class sizes do not sum to the order");
    if (order_lcm != exponent_) throw invariant_violation("element orders do not reach the exponent");

    for (u32 r = 0; r < k; ++r) {
        if (degrees_[r] == 0 || order_ % degrees_[r])
            throw invariant_violation("degree does not divide the group order");
    }
    u64 sq = 0;
    for (u32 r = 0; r < k; ++r) sq += degrees_[r] * degrees_[r];
    if (sq != order_) throw invariant_violation("degree squares do not sum to the order");

    for (u32 c = 0; c < k; ++c)
        if (!(irr_[0][c].is_rational() && irr_[0][c].rational_value() == 1))
            throw invariant_violation("first row is not the trivial character");

    // canonical row order
    for (u32 r = 2; r < k; ++r) {
        if (degrees_[r - 1] > degrees_[r]) throw invariant_violation("rows not sorted by degree");
        if (degrees_[r - 1] == degrees_[r]) {
            int c = 0;
            for (u32 col = 0; col < k && c == 0; ++col)
                c = Cyclotomic::compare(irr_[r - 1][col], irr_[r][col]);
            if (c > 0) throw invariant_violation("rows with equal degree not in value order");
        }
    }

    // row orthogonality
    for (u32 r = 0; r < k; ++r) {
        for (u32 s = r; s < k; ++s) {
            Cyclotomic acc;
            for (u32 c = 0; c < k; ++c)
                acc += (irr_[r][c] * irr_[s][c].conjugate()).scaled(Rational(static_cast<long>(classes_[c].size)));
            Cyclotomic expect{Rational(r == s ? static_cast<long>(order_) : 0L)};
            if (!(acc == expect)) throw invariant_violation("row orthogonality fails");
        }
    }
    // column orthogonality
    for (u32 c = 0; c < k; ++c) {
        for (u32 d = c; d < k; ++d) {
            Cyclotomic acc;
            for (u32 r = 0; r < k; ++r) acc += irr_[r][c] * irr_[r][d].conjugate();
            Cyclotomic expect{Rational(c == d ? static_cast<long>(order_ / classes_[c].size) : 0L)};
            if (!(acc == expect)) throw invariant_violation("column orthogonality fails");
        }
    }
}

Rational CharacterTable::inner_product(const std::vector<Cyclotomic>& a,
                                       const std::vector<Cyclotomic>& b) const {
    if (a.size() != class_count() || b.size() != class_count())
        throw input_error("inner_product: wrong length class functions");
    Cyclotomic acc;
    for (u32 c = 0; c < class_count(); ++c)
        acc += (a[c] * b[c].conjugate()).scaled(Rational(static_cast<long>(classes_[c].size)));
    Cyclotomic result = acc.scaled(Rational(1, static_cast<long>(order_)));
    if (!result.is_rational()) throw invariant_violation("inner product is not rational");
    return result.rational_value();
}

Rational CharacterTable::inner_product(u32 r, u32 s) const { return inner_product(irr_.at(r), irr_.at(s)); }

std::optional<u32> CharacterTable::find_row(const std::vector<Cyclotomic>& values) const {
    for (u32 r = 0; r < irr_.size(); ++r) {
        bool same = true;
        for (u32 c = 0; c < class_count() && same; ++c) same = irr_[r][c] == values[c];
        if (same) return r;
    }
    return std::nullopt;
}

// ---- Dixon-Schneider ----

CharacterTable compute_table(const PermGroup& G, const std::string& name) {
    const auto& classes = G.conjugacy_classes();
    const u32 k = static_cast<u32>(classes.size());
    const u64 n_g = G.order();
    const u64 N = G.exponent();

    // smallest prime l = 1 mod N with l*l > 4|G|
    u64 l = N;
    do {
        l = smallest_prime_1_mod(N, l);
    } while (static_cast<unsigned __int128>(l) * l <= 4 * static_cast<unsigned __int128>(n_g));
    const u64 theta = powmod(primitive_root(l), (l - 1) / N, l);
    std::vector<u64> theta_pow(N);
    theta_pow[0] = 1;
    for (u64 i = 1; i < N; ++i) theta_pow[i] = mulmod(theta_pow[i - 1], theta, l);

    const auto& elements = G.elements();
    std::vector<u32> class_of_elem(elements.size());
    for (u32 ci = 0; ci < k; ++ci)
        for (u32 e : G.class_members(ci)) class_of_elem[e] = ci;

    std::vector<u64> class_size(k), size_inv(k);
    for (u32 i = 0; i < k; ++i) {
        class_size[i] = classes[i].size;
        size_inv[i] = invmod(class_size[i] % l, l);
    }
    std::vector<u32> inv_class(k);
    for (u32 i = 0; i < k; ++i) inv_class[i] = G.inverse_class(i);

    std::vector<Permutation> reps;
    reps.reserve(k);
    for (u32 i = 0; i < k; ++i) reps.push_back(classes[i].representative);

    auto class_matrix = [&](u32 i) {
        FlMatrix m;
        m.n = k;
        m.a.assign(static_cast<size_t>(k) * k, 0);
        for (u32 e : G.class_members(i)) {
            Permutation xinv = elements[e].inverse();
            for (u32 col = 0; col < k; ++col) {
                u32 j = class_of_elem[G.element_index(xinv * reps[col])];
                m.at(j, col) += 1;
            }
        }
        for (u64& v : m.a) v %= l;
        return m;
    };

    // split the coordinate space into common eigenspaces
    std::vector<Subspace> spaces;
    {
        Subspace all;
        all.basis.assign(k, std::vector<u64>(k, 0));
        for (u32 i = 0; i < k; ++i) {
            all.basis[i][i] = 1;
            all.pivots.push_back(i);
        }
        spaces.push_back(std::move(all));
    }
    for (u32 mi = 1; mi < k; ++mi) {
        bool alldone = true;
        for (const Subspace& s : spaces)
            if (s.basis.size() > 1) alldone = false;
        if (alldone) break;
        FlMatrix M = class_matrix(mi);
        std::vector<Subspace> next;
        for (Subspace& s : spaces) {
            u32 dim = static_cast<u32>(s.basis.size());
            if (dim == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // restriction of M to the subspace
            FlMatrix B;
            B.n = dim;
            B.a.assign(static_cast<size_t>(dim) * dim, 0);
            for (u32 t = 0; t < dim; ++t) {
                std::vector<u64> img(k, 0);
                for (u32 r = 0; r < k; ++r) {
                    u64 acc = 0;
                    for (u32 c = 0; c < k; ++c) acc = (acc + mulmod(M.at(r, c), s.basis[t][c], l)) % l;
                    img[r] = acc;
                }
                std::vector<u64> co = coords_in(s, std::move(img), l);
                for (u32 r = 0; r < dim; ++r) B.at(r, t) = co[r];
            }
            FpPoly cp = charpoly(B, l);
            std::vector<u64> eigs = fp_roots(cp, l);
            if (eigs.empty()) throw invariant_violation("class matrix has no eigenvalue in F_l");
            if (eigs.size() == 1) {
                next.push_back(std::move(s));
                continue;
            }
            for (u64 lam : eigs) {
                // kernel of B - lam I
                std::vector<std::vector<u64>> mat(dim, std::vector<u64>(dim, 0));
                for (u32 r = 0; r < dim; ++r)
                    for (u32 c = 0; c < dim; ++c)
                        mat[r][c] = r == c ? (B.at(r, c) + l - lam % l) % l : B.at(r, c);
                std::vector<u32> piv = rref(mat, l);
                std::vector<bool> is_piv(dim, false);
                for (u32 p : piv) is_piv[p] = true;
                Subspace child;
                for (u32 c = 0; c < dim; ++c) {
                    if (is_piv[c]) continue;
                    // kernel vector in subspace coordinates
                    std::vector<u64> v(dim, 0);
                    v[c] = 1;
                    for (size_t r = 0; r < piv.size(); ++r)
                        v[piv[r]] = (l - mat[r][c]) % l;
                    // lift to length-k coordinates
                    std::vector<u64> w(k, 0);
                    for (u32 t = 0; t < dim; ++t) {
                        if (v[t] == 0) continue;
                        for (u32 j = 0; j < k; ++j)
                            w[j] = (w[j] + mulmod(v[t], s.basis[t][j], l)) % l;
                    }
                    child.basis.push_back(std::move(w));
                }
                if (child.basis.empty())
                    throw invariant_violation("eigenvalue with empty eigenspace");
                child.pivots = rref(child.basis, l);
                next.push_back(std::move(child));
            }
        }
        spaces = std::move(next);
    }
    for (const Subspace& s : spaces)
        if (s.basis.size() != 1)
            throw invariant_violation("class matrices did not split the space completely");
    if (spaces.size() != k) throw invariant_violation("wrong number of one-dimensional eigenspaces");

    // central character vectors, normalized at the identity class
    std::vector<std::vector<u64>> omega(k);
    for (u32 i = 0; i < k; ++i) {
        std::vector<u64> v = spaces[i].basis[0];
        if (v[0] == 0) throw invariant_violation("eigenvector vanishes at the identity class");
        u64 scale = invmod(v[0], l);
        for (u64& x : v) x = mulmod(x, scale, l);
        omega[i] = std::move(v);
    }

    // degrees
    std::vector<u64> degree(k);
    u64 degree_square_sum = 0;
    for (u32 i = 0; i < k; ++i) {
        u64 s = 0;
        for (u32 c = 0; c < k; ++c)
            s = (s + mulmod(mulmod(omega[i][c], omega[i][inv_class[c]], l), size_inv[c], l)) % l;
        if (s == 0) throw invariant_violation("degree denominator vanished");
        u64 d2 = mulmod(n_g % l, invmod(s, l), l);
        u64 r = sqrt_mod(d2, l);
        if (r == l) throw invariant_violation("degree square has no square root mod l");
        u64 d = std::min(r, l - r);
        if (d == 0 || d * d > n_g) throw invariant_violation("implausible character degree");
        degree[i] = d;
        degree_square_sum += d * d;
    }
    if (degree_square_sum != n_g)
        throw invariant_violation("degree squares do not sum to the group order");

    // power class tables per class
    std::vector<std::vector<u32>> power_of_class(k);
    for (u32 c = 0; c < k; ++c) {
        u64 n = classes[c].element_order;
        power_of_class[c].resize(n);
        Permutation x = G.identity();
        for (u64 v = 0; v < n; ++v) {
            power_of_class[c][v] = class_of_elem[G.element_index(x)];
            if (v + 1 < n) x = x * reps[c];
        }
    }

    std::vector<std::vector<Cyclotomic>> rows(k);
    for (u32 i = 0; i < k; ++i) {
        rows[i].reserve(k);
        // chi mod l on each class
        std::vector<u64> chi_mod(k);
        for (u32 c = 0; c < k; ++c)
            chi_mod[c] = mulmod(mulmod(degree[i] % l, omega[i][c], l), size_inv[c], l);
        for (u32 c = 0; c < k; ++c) {
            u64 n = classes[c].element_order;
            u64 n_inv = invmod(n % l, l);
            std::vector<Rational> poly(N, Rational(0));
            u64 msum = 0;
            for (u64 u = 0; u < n; ++u) {
                u64 acc = 0;
                for (u64 v = 0; v < n; ++v) {
                    u64 e = (N - (N / n) * ((u * v) % n) % N) % N;
                    acc = (acc + mulmod(chi_mod[power_of_class[c][v]], theta_pow[e], l)) % l;
                }
                u64 mu = mulmod(acc, n_inv, l);
                if (mu > degree[i])
                    throw invariant_violation("root-of-unity multiplicity exceeds the degree");
                msum += mu;
                if (mu) poly[(N / n) * u] += Rational(static_cast<long>(mu));
            }
            if (msum != degree[i])
                throw invariant_violation("root-of-unity multiplicities do not sum to the degree");
            rows[i].push_back(Cyclotomic::from_power_coeffs(N, std::move(poly)));
        }
    }

    // class data with power maps for primes dividing the exponent
    std::vector<ClassData> cdata(k);
    for (u32 c = 0; c < k; ++c) {
        cdata[c].size = classes[c].size;
        cdata[c].element_order = classes[c].element_order;
        for (u64 q : prime_divisors(N)) {
            u64 n = classes[c].element_order;
            cdata[c].power_maps.emplace_back(q, power_of_class[c][q % n]);
        }
    }

    return CharacterTable::build(name, n_g, N, std::move(cdata), std::move(rows));
}

// ---- serialization ----

ordered_json cyclotomic_to_json(const Cyclotomic& v) {
    ordered_json j;
    j["conductor"] = v.conductor();
    ordered_json coeffs = ordered_json::array();
    size_t last = 0;
    for (size_t i = 0; i < v.coeffs().size(); ++i)
        if (v.coeffs()[i] != 0) last = i + 1;
    for (size_t i = 0; i < last; ++i) coeffs.push_back(v.coeffs()[i].get_str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

Cyclotomic cyclotomic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw input_error("cyclotomic value needs conductor and coeffs");
    u64 n = j.at("conductor").get<u64>();
    if (n == 0) throw input_error("cyclotomic conductor must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        Rational r;
        if (c.is_string()) {
            std::string s = c.get<std::string>();
            if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
                throw input_error("bad rational literal: " + s);
            if (r.get_den() == 0) throw input_error("zero denominator in rational literal");
            r.canonicalize();
        } else if (c.is_number_integer()) {
            r = Rational(static_cast<long>(c.get<i64>()));
        } else {
            throw input_error("cyclotomic coefficients must be strings or integers");
        }
        coeffs.push_back(r);
    }
    if (coeffs.size() > euler_phi(n))
        throw input_error("cyclotomic coefficient list longer than phi(conductor)");
    return Cyclotomic::from_power_coeffs(n, std::move(coeffs));
}

ordered_json CharacterTable::to_json() const {
    ordered_json j;
    j["name"] = name_;
    j["order"] = order_;
    j["exponent"] = exponent_;
    ordered_json cls = ordered_json::array();
    for (const ClassData& c : classes_) {
        ordered_json jc;
        jc["size"] = c.size;
        jc["order"] = c.element_order;
        ordered_json pm = ordered_json::object();
        for (auto& [q, target] : c.power_maps) pm[std::to_string(q)] = target;
        jc["powermaps"] = std::move(pm);
        cls.push_back(std::move(jc));
    }
    j["classes"] = std::move(cls);
    ordered_json irr = ordered_json::array();
    for (const auto& row : irr_) {
        ordered_json jr = ordered_json::array();
        for (const Cyclotomic& v : row) jr.push_back(cyclotomic_to_json(v));
        irr.push_back(std::move(jr));
    }
    j["irr"] = std::move(irr);
    return j;
}

CharacterTable CharacterTable::from_json(const json& j) {
    if (!j.is_object()) throw input_error("table file must hold a JSON object");
    for (const char* key : {"name", "order", "exponent", "classes", "irr"})
        if (!j.contains(key)) throw input_error(std::string("table is missing the '") + key + "' field");
    std::string name = j.at("name").get<std::string>();
    u64 order = j.at("order").get<u64>();
    u64 exponent = j.at("exponent").get<u64>();
    std::vector<ClassData> classes;
    for (const auto& jc : j.at("classes")) {
        ClassData c;
        c.size = jc.at("size").get<u64>();
        c.element_order = jc.at("order").get<u64>();
        if (jc.contains("powermaps"))
            for (auto& [key, val] : jc.at("powermaps").items()) {
                u64 q = 0;
                try {
                    q = std::stoull(key);
                } catch (const std::exception&) {
                    throw input_error("bad power map key: " + key);
                }
                c.power_maps.emplace_back(q, val.get<u32>());
            }
        std::sort(c.power_maps.begin(), c.power_maps.end());
        classes.push_back(std::move(c));
    }
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& jr : j.at("irr")) {
        std::vector<Cyclotomic> row;
        for (const auto& jv : jr) row.push_back(cyclotomic_from_json(jv));
        rows.push_back(std::move(row));
    }
    return build(std::move(name), order, exponent, std::move(classes), std::move(rows));
}

CharacterTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open table file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("bad JSON in " + path + ": " + e.what());
    }
    return CharacterTable::from_json(j);
}

void write_table(const CharacterTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open " + path + " for writing");
    out << table.to_json().dump(1) << "\n";
}

}  // namespace blockscope
