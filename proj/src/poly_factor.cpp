#include "monocubic/poly_factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace monocubic {
namespace nt {

namespace {

using u64 = std::uint64_t;

// dense polynomial over F_p, constant-first, trimmed
struct fpoly {
    std::vector<u64> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    u64 lead() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

u64 inv_mod(u64 a, u64 p) { return powmod_u64(a, p - 2, p); }

fpoly f_mul(const fpoly& a, const fpoly& b, u64 p) {
    if (a.is_zero() || b.is_zero()) return {};
    fpoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + mulmod_u64(a.c[i], b.c[j], p)) % p;
    }
    r.trim();
    return r;
}

fpoly f_sub(const fpoly& a, const fpoly& b, u64 p) {
    fpoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = (x + p - y) % p;
    }
    r.trim();
    return r;
}

fpoly f_rem(fpoly a, const fpoly& b, u64 p) {
    if (b.is_zero()) throw std::invalid_argument("f_rem: zero divisor");
    u64 binv = inv_mod(b.lead(), p);
    while (!a.is_zero() && a.degree() >= b.degree()) {
        u64 f = mulmod_u64(a.lead(), binv, p);
        int k = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i) {
            u64 t = mulmod_u64(f, b.c[static_cast<std::size_t>(i)], p);
            auto& dst = a.c[static_cast<std::size_t>(i + k)];
            dst = (dst + p - t) % p;
        }
        a.trim();
    }
    return a;
}

fpoly f_quot(fpoly a, const fpoly& b, u64 p) {
    u64 binv = inv_mod(b.lead(), p);
    fpoly q;
    if (a.degree() < b.degree()) return q;
    q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    while (!a.is_zero() && a.degree() >= b.degree()) {
        u64 f = mulmod_u64(a.lead(), binv, p);
        int k = a.degree() - b.degree();
        q.c[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= b.degree(); ++i) {
            u64 t = mulmod_u64(f, b.c[static_cast<std::size_t>(i)], p);
            auto& dst = a.c[static_cast<std::size_t>(i + k)];
            dst = (dst + p - t) % p;
        }
        a.trim();
    }
    q.trim();
    return q;
}

fpoly f_gcd(fpoly a, fpoly b, u64 p) {
    while (!b.is_zero()) {
        fpoly r = f_rem(a, b, p);
        a = b;
        b = r;
    }
    if (!a.is_zero() && a.lead() != 1) {
        u64 inv = inv_mod(a.lead(), p);
        for (auto& x : a.c) x = mulmod_u64(x, inv, p);
    }
    return a;
}

fpoly f_monic(fpoly a, u64 p) {
    if (a.is_zero() || a.lead() == 1) return a;
    u64 inv = inv_mod(a.lead(), p);
    for (auto& x : a.c) x = mulmod_u64(x, inv, p);
    return a;
}

fpoly f_deriv(const fpoly& a, u64 p) {
    fpoly r;
    if (a.c.size() <= 1) return r;
    r.c.assign(a.c.size() - 1, 0);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mulmod_u64(i % p, a.c[i], p);
    r.trim();
    return r;
}

fpoly f_x() { return fpoly{{0, 1}}; }

fpoly f_powmod(fpoly base, const integer& e, const fpoly& mod, u64 p) {
    fpoly r{{1}};
    base = f_rem(base, mod, p);
    integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = f_rem(f_mul(r, base, p), mod, p);
        base = f_rem(f_mul(base, base, p), mod, p);
        k >>= 1;
    }
    return r;
}

fpoly to_fpoly(const int_poly& g, u64 p) {
    fpoly r;
    r.c.resize(g.coeffs().size());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] = mpz_fdiv_ui(g.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(p));
    }
    r.trim();
    return r;
}

int_poly from_fpoly(const fpoly& f) {
    std::vector<integer> c(f.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = integer(static_cast<unsigned long>(f.c[i]));
    return int_poly(std::move(c));
}

// squarefree decomposition over F_p; handles the x^p collapse
void f_squarefree(const fpoly& f, u64 p, int mult, std::vector<std::pair<fpoly, int>>& out) {
    fpoly d = f_deriv(f, p);
    if (d.is_zero()) {
        // f = g(x^p) = g(x)^p
        fpoly g;
        g.c.assign(f.c.size() / p + 1, 0);
        for (std::size_t i = 0; i * p < f.c.size(); ++i) g.c[i] = f.c[i * p];
        g.trim();
        f_squarefree(g, p, mult * static_cast<int>(p), out);
        return;
    }
    fpoly u = f_gcd(f, d, p);
    fpoly w = f_quot(f, u, p);  // squarefree part product
    int k = 1;
    while (w.degree() > 0) {
        fpoly y = f_gcd(w, u, p);
        fpoly piece = f_quot(w, y, p);
        if (piece.degree() > 0) out.emplace_back(f_monic(piece, p), mult * k);
        w = y;
        u = f_quot(u, y, p);
        ++k;
    }
    // u is now a p-th power; the recursion's zero-derivative path extracts
    // the root and supplies the factor of p in the multiplicity
    if (u.degree() > 0) f_squarefree(u, p, mult, out);
}

// equal-degree splitting of a monic squarefree product of degree-d irreducibles
void f_equal_degree(const fpoly& f, int d, u64 p, std::mt19937_64& rng, std::vector<fpoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    double count = std::pow(static_cast<double>(p), d);
    if (count <= 4096.0) {
        // enumerate monic candidates of degree d
        fpoly rest = f;
        std::vector<u64> tuple(static_cast<std::size_t>(d), 0);
        while (rest.degree() >= d) {
            fpoly cand;
            cand.c.assign(static_cast<std::size_t>(d) + 1, 0);
            for (int i = 0; i < d; ++i) cand.c[static_cast<std::size_t>(i)] = tuple[static_cast<std::size_t>(i)];
            cand.c[static_cast<std::size_t>(d)] = 1;
            if (f_rem(rest, cand, p).is_zero()) {
                // every prime factor of rest has degree exactly d, so a
                // degree-d divisor is irreducible
                out.push_back(cand);
                rest = f_quot(rest, cand, p);
                continue;
            }
            int i = 0;
            while (i < d && ++tuple[static_cast<std::size_t>(i)] == p) tuple[static_cast<std::size_t>(i++)] = 0;
            if (i == d) throw std::logic_error("equal_degree: enumeration exhausted");
        }
        if (rest.degree() == d) out.push_back(rest);
        else if (rest.degree() != 0) throw std::logic_error("equal_degree: leftover degree");
        return;
    }
    if (p == 2) throw std::logic_error("equal_degree: p=2 must take the enumeration path");
    // Cantor-Zassenhaus
    integer e = 1;
    for (int i = 0; i < d; ++i) e *= integer(static_cast<unsigned long>(p));
    e = (e - 1) / 2;
    fpoly a = f;
    while (true) {
        fpoly r;
        r.c.resize(static_cast<std::size_t>(f.degree()));
        for (auto& x : r.c) x = rng() % p;
        r.trim();
        if (r.degree() < 1) continue;
        fpoly s = f_powmod(r, e, f, p);
        if (s.is_zero()) continue;
        s.c[0] = (s.c[0] + p - 1) % p;
        s.trim();
        fpoly g = f_gcd(s, f, p);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            f_equal_degree(g, d, p, rng, out);
            f_equal_degree(f_quot(f, g, p), d, p, rng, out);
            return;
        }
    }
}

// distinct-degree then equal-degree factorization of a monic squarefree poly
void f_factor_squarefree(fpoly f, u64 p, std::vector<fpoly>& out) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (f.c.size() * 1315423911ull) ^ p);
    fpoly h = f_x();
    int d = 0;
    while (f.degree() > 2 * (d + 1) - 1) {
        ++d;
        h = f_powmod(h, integer(static_cast<unsigned long>(p)), f, p);
        fpoly diff = f_sub(h, f_x(), p);
        fpoly g = f_gcd(diff, f, p);
        if (g.degree() > 0) {
            f_equal_degree(g, d, p, rng, out);
            f = f_quot(f, g, p);
            h = f_rem(h, f, p);
        }
    }
    if (f.degree() > 0) out.push_back(f);
}

}  // namespace

modp_factorization factor_mod_p(const int_poly& g, const integer& p_in) {
    if (!p_in.fits_ulong_p()) throw std::invalid_argument("factor_mod_p: p too large");
    u64 p = p_in.get_ui();
    fpoly f = to_fpoly(g, p);
    if (f.is_zero()) throw std::invalid_argument("factor_mod_p: g = 0 mod p");
    modp_factorization out;
    out.p = p_in;
    out.unit = integer(static_cast<unsigned long>(f.lead()));
    if (f.degree() == 0) return out;
    f = f_monic(f, p);
    std::vector<std::pair<fpoly, int>> sqf;
    f_squarefree(f, p, 1, sqf);
    for (auto& [piece, mult] : sqf) {
        std::vector<fpoly> irr;
        f_factor_squarefree(piece, p, irr);
        for (auto& q : irr) out.factors.emplace_back(from_fpoly(q), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

std::vector<integer> roots_mod_p(const int_poly& g, const integer& p) {
    auto fac = factor_mod_p(g, p);
    std::vector<integer> roots;
    for (auto& [f, mult] : fac.factors) {
        (void)mult;
        if (f.degree() == 1) roots.push_back((p - f[0]) % p);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// symmetric representative in (-m/2, m/2]
integer sym_mod(const integer& a, const integer& m) {
    integer r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

int_poly poly_mod_sym(const int_poly& f, const integer& m) {
    std::vector<integer> c(f.coeffs());
    for (auto& x : c) x = sym_mod(x, m);
    return int_poly(std::move(c));
}

int_poly poly_mod(const int_poly& f, const integer& m) {
    std::vector<integer> c(f.coeffs());
    for (auto& x : c) {
        x %= m;
        if (x < 0) x += m;
    }
    return int_poly(std::move(c));
}

// division with remainder by a monic polynomial, coefficients mod m
void divmod_monic_mod(const int_poly& a, const int_poly& b, const integer& m, int_poly& q, int_poly& r) {
    std::vector<integer> rc(a.coeffs());
    int db = b.degree();
    std::vector<integer> qc(rc.size() > static_cast<std::size_t>(db)
                                ? rc.size() - static_cast<std::size_t>(db)
                                : 0,
                            0);
    for (int i = static_cast<int>(rc.size()) - 1; i >= db; --i) {
        integer f = rc[static_cast<std::size_t>(i)] % m;
        if (f < 0) f += m;
        if (f == 0) {
            rc[static_cast<std::size_t>(i)] = 0;
            continue;
        }
        qc[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            auto& dst = rc[static_cast<std::size_t>(i - db + j)];
            dst = (dst - f * b[j]) % m;
            if (dst < 0) dst += m;
        }
    }
    rc.resize(static_cast<std::size_t>(db) > rc.size() ? rc.size() : static_cast<std::size_t>(db));
    q = int_poly(std::move(qc));
    r = int_poly(std::move(rc));
}

int_poly mul_mod(const int_poly& a, const int_poly& b, const integer& m) { return poly_mod(a * b, m); }

struct hensel_pair {
    int_poly g, h, s, t;  // f = g h, s g + t h = 1 (mod modulus)
};

// One quadratic Hensel step: modulus m -> m^2 (von zur Gathen & Gerhard, Alg. 15.10)
hensel_pair hensel_step(const int_poly& f, const hensel_pair& in, const integer& m) {
    integer m2 = m * m;
    int_poly e = poly_mod(f - in.g * in.h, m2);
    int_poly q, r;
    divmod_monic_mod(mul_mod(in.s, e, m2), in.h, m2, q, r);
    hensel_pair out;
    out.g = poly_mod(in.g + in.t * e + q * in.g, m2);
    out.h = poly_mod(in.h + r, m2);
    int_poly b = poly_mod(in.s * out.g + in.t * out.h - int_poly{1}, m2);
    int_poly c, d;
    divmod_monic_mod(mul_mod(in.s, b, m2), out.h, m2, c, d);
    out.s = poly_mod(in.s - d, m2);
    out.t = poly_mod(in.t - in.t * b - c * out.g, m2);
    return out;
}

// Bezout s g + t h = 1 mod p via the extended Euclid over F_p
void bezout_mod_p(const int_poly& g, const int_poly& h, u64 p, int_poly& s, int_poly& t) {
    fpoly a = to_fpoly(g, p), b = to_fpoly(h, p);
    fpoly r0 = a, r1 = b;
    fpoly s0{{1}}, s1{}, t0{}, t1{{1}};
    while (!r1.is_zero()) {
        fpoly q = f_quot(r0, r1, p);
        fpoly r2 = f_sub(r0, f_mul(q, r1, p), p);
        fpoly s2 = f_sub(s0, f_mul(q, s1, p), p);
        fpoly t2 = f_sub(t0, f_mul(q, t1, p), p);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw std::logic_error("bezout_mod_p: inputs not coprime");
    u64 inv = inv_mod(r0.lead(), p);
    for (auto& x : s0.c) x = mulmod_u64(x, inv, p);
    for (auto& x : t0.c) x = mulmod_u64(x, inv, p);
    s = from_fpoly(s0);
    t = from_fpoly(t0);
}

// lift the factorization f = lc * prod(monic factors) from mod p to mod >= bound
std::vector<int_poly> hensel_lift_all(const int_poly& f, std::vector<int_poly> factors, u64 p,
                                      const integer& bound, integer& modulus_out) {
    integer m = integer(static_cast<unsigned long>(p));
    integer target = bound;
    if (factors.size() < 2) throw std::logic_error("hensel_lift_all: needs >= 2 factors");
    // split factors in two halves, lift the pair, recurse
    std::size_t half = factors.size() / 2;
    int_poly g0{f.lead()};
    for (std::size_t i = 0; i < half; ++i) g0 = g0 * factors[i];
    int_poly h0{1};
    for (std::size_t i = half; i < factors.size(); ++i) h0 = h0 * factors[i];
    g0 = poly_mod(g0, m);
    h0 = poly_mod(h0, m);
    hensel_pair pr;
    pr.g = g0;
    pr.h = h0;
    bezout_mod_p(g0, h0, p, pr.s, pr.t);
    integer mod = m;
    while (mod < target) {
        pr = hensel_step(poly_mod(f, mod * mod), pr, mod);
        mod *= mod;
    }
    modulus_out = mod;
    // recurse into both halves with the lifted g (carrying lc) and h (monic)
    std::vector<int_poly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<int_poly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
    integer dummy;
    std::vector<int_poly> out;
    if (left.size() == 1) {
        // normalize to monic mod `mod`
        integer lcinv;
        if (mpz_invert(lcinv.get_mpz_t(), integer(pr.g.lead()).get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::logic_error("hensel_lift_all: leading coefficient not invertible");
        out.push_back(poly_mod(lcinv * pr.g, mod));
    } else {
        integer lcinv;
        if (mpz_invert(lcinv.get_mpz_t(), f.lead().get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::logic_error("hensel_lift_all: lc not invertible");
        int_poly gm = poly_mod(lcinv * pr.g, mod);
        // gm is monic mod `mod`; recursively lift its mod-p factors.
        auto sub = hensel_lift_all(gm, left, p, mod, dummy);
        for (auto& q : sub) out.push_back(q);
    }
    if (right.size() == 1) {
        out.push_back(pr.h);
    } else {
        auto sub = hensel_lift_all(pr.h, right, p, mod, dummy);
        for (auto& q : sub) out.push_back(q);
    }
    return out;
}

integer landau_mignotte(const int_poly& f) {
    // sqrt(n+1) * 2^n * max|coeff|; generous and cheap at degree <= 9
    integer mx = 0;
    for (const auto& c : f.coeffs()) {
        integer a = abs(c);
        if (a > mx) mx = a;
    }
    integer b = mx * abs(f.lead());
    b <<= f.degree() + 2;
    return b + 1;
}

// factor a primitive squarefree polynomial with positive leading coefficient
std::vector<int_poly> factor_squarefree_z(const int_poly& f) {
    if (f.degree() == 1) return {f};
    // choose a prime keeping f squarefree mod p, preferring few modular factors
    std::vector<u64> good;
    modp_factorization best;
    bool have = false;
    for (auto pr : primes_up_to(10000)) {
        u64 p = pr;
        if (p == 2) continue;
        if (mpz_divisible_ui_p(f.lead().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        fpoly fp = to_fpoly(f, p);
        if (fp.degree() != f.degree()) continue;
        if (f_gcd(fp, f_deriv(fp, p), p).degree() != 0) continue;
        auto fac = factor_mod_p(f, integer(static_cast<unsigned long>(p)));
        if (!have || fac.factors.size() < best.factors.size()) {
            best = fac;
            have = true;
        }
        good.push_back(p);
        if (good.size() >= 3 || best.factors.size() == 1) break;
    }
    if (!have) throw std::logic_error("factor_squarefree_z: no good prime found");
    if (best.factors.size() == 1) return {f};
    u64 p = best.p.get_ui();
    std::vector<int_poly> modular;
    modular.reserve(best.factors.size());
    for (auto& [q, mult] : best.factors) {
        if (mult != 1) throw std::logic_error("factor_squarefree_z: unexpected multiplicity");
        modular.push_back(q);
    }
    integer bound = 2 * landau_mignotte(f) + 1;
    integer modulus;
    std::vector<int_poly> lifted = hensel_lift_all(f, modular, p, bound, modulus);

    // subset recombination; the pool never exceeds 9 factors here
    std::vector<int_poly> out;
    int_poly rem = f;
    std::vector<int_poly> pool = lifted;
    while (!pool.empty()) {
        std::size_t k = pool.size();
        bool found = false;
        for (std::size_t size = 1; size <= k / 2 && !found; ++size) {
            for (std::uint32_t mask = 1; mask < (1u << k) && !found; ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
                int_poly cand{rem.lead()};
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1u << i)) cand = poly_mod_sym(cand * pool[i], modulus);
                cand = cand.primitive_part();
                if (cand.lead() < 0) cand = -cand;
                if (cand.degree() >= 1 && divides(cand, rem)) {
                    out.push_back(cand);
                    rem = divexact(rem, cand);
                    std::vector<int_poly> next;
                    for (std::size_t i = 0; i < k; ++i)
                        if (!(mask & (1u << i))) next.push_back(pool[i]);
                    pool = std::move(next);
                    found = true;
                }
            }
        }
        if (!found) break;  // the remaining product is irreducible
    }
    if (rem.degree() >= 1) out.push_back(rem);
    else if (rem.lead() != 1 && rem.lead() != -1)
        throw std::logic_error("factor_squarefree_z: leftover constant");
    return out;
}

}  // namespace

z_factorization factor_over_integers(const int_poly& g) {
    if (g.is_zero()) throw std::invalid_argument("factor_over_integers: zero polynomial");
    z_factorization out;
    out.content = g.lead() < 0 ? -g.content() : g.content();
    if (g.degree() == 0) return out;
    int_poly f = divexact(g, int_poly{out.content});
    // Yun squarefree decomposition
    std::vector<std::pair<int_poly, int>> sqf;
    {
        int_poly u = gcd(f, f.derivative());
        if (u.degree() == 0) {
            sqf.emplace_back(f, 1);
        } else {
            int_poly v = divexact(f, u);
            int_poly w = divexact(f.derivative(), u);
            int k = 1;
            while (v.degree() > 0) {
                int_poly z = w - v.derivative();
                int_poly h = gcd(v, z);
                if (h.degree() > 0) sqf.emplace_back(h, k);
                v = divexact(v, h);
                w = divexact(z, h);
                ++k;
            }
        }
    }
    for (auto& [piece, mult] : sqf) {
        for (auto& irr : factor_squarefree_z(piece)) out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

bool is_irreducible_over_z(const int_poly& g) {
    if (g.degree() < 1) return false;
    auto fac = factor_over_integers(g);
    return fac.factors.size() == 1 && fac.factors[0].second == 1 &&
           (fac.content == 1 || fac.content == -1);
}

}  // namespace nt
}  // namespace monocubic
