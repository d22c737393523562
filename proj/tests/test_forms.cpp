#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monocubic/cubic_ring.hpp"
#include "monocubic/forms.hpp"
#include "monocubic/poly_factor.hpp"

#include <random>

using namespace monocubic;
using namespace monocubic::forms;

namespace {

const cubic_form xy_xpy{0, 1, 1, 0};          // xy(x+y)
const cubic_form f23{1, 0, -1, -1};           // x^3 - xy^2 - y^3, disc -23
const cubic_form f21{1, 0, 0, -21};           // x^3 - 21y^3
const cubic_form f57{5, 0, 0, -7};            // 5x^3 - 7y^3

std::mt19937_64 rng(20240817);

cubic_form random_form(long range) {
    auto pick = [&] { return integer(static_cast<long>(rng() % (2 * range + 1)) - range); };
    return {pick(), pick(), pick(), pick()};
}

unimodular_action random_unimodular(int steps = 12) {
    // random word in the elementary generators
    mat2_t<integer> m = mat2_t<integer>::id();
    for (int i = 0; i < steps; ++i) {
        mat2_t<integer> g;
        switch (rng() % 4) {
            case 0: g = {0, 1, 1, 0}; break;
            case 1: g = {-1, 0, 0, 1}; break;
            case 2: g = {1, 0, integer(static_cast<long>(rng() % 5) - 2), 1}; break;
            default: g = {1, integer(static_cast<long>(rng() % 5) - 2), 0, 1}; break;
        }
        m = mat_mul(m, g);
    }
    return unimodular_action{m, false};
}

// exact check of the degree-6 identity g^2 + 4h^3 + 27 disc f^2 = 0 through
// evaluation at 8 projective points (more than degree + 1)
bool syzygy_holds(const cubic_form& f) {
    cubic_form g = jacobian_covariant(f);
    binary_quadratic h = hessian(f);
    integer D = disc(f);
    for (long x = -3; x <= 3; ++x) {
        integer gx = form_eval(g, integer(x), integer(1));
        integer hx = h.eval(x, 1);
        integer fx = form_eval(f, integer(x), integer(1));
        if (gx * gx + 4 * hx * hx * hx + 27 * D * fx * fx != 0) return false;
    }
    integer g1 = form_eval(g, integer(1), integer(0));
    integer h1 = h.eval(1, 0);
    integer f1 = form_eval(f, integer(1), integer(0));
    return g1 * g1 + 4 * h1 * h1 * h1 + 27 * D * f1 * f1 == 0;
}

}  // namespace

TEST_CASE("discriminants") {
    CHECK(disc(xy_xpy) == 1);
    CHECK(disc(f23) == -23);
    CHECK(disc(cubic_form{0, 1, 0, 0}) == 0);  // x^2 y
    CHECK(disc(f23) == nt::discriminant_of_polynomial(dehomogenize(f23)));
}

TEST_CASE("standard and twisted actions") {
    unimodular_action id{mat2_t<integer>::id(), false};
    CHECK(act(id, f23) == f23);
    unimodular_action swap_xy{{0, 1, 1, 0}, false};
    CHECK(act(swap_xy, cubic_form{1, 0, 0, 0}) == cubic_form{0, 0, 0, 1});  // x^3 -> y^3
    unimodular_action bad{{2, 0, 0, 1}, false};
    CHECK_THROWS_AS(act(bad, f23), std::invalid_argument);

    // disc is invariant under the unimodular action
    for (int i = 0; i < 10000; ++i) {
        cubic_form f = random_form(8);
        unimodular_action g = random_unimodular();
        CHECK(disc(act(g, f)) == disc(f));
    }

    // twisted action differs from standard exactly by the sign of det
    for (int i = 0; i < 200; ++i) {
        cubic_form f = random_form(8);
        unimodular_action g = random_unimodular();
        unimodular_action t = g;
        t.twisted = true;
        cubic_form fs = act(g, f), ft = act(t, f);
        if (g.m.det() == 1) CHECK(fs == ft);
        else CHECK(ft == cubic_form{-fs.a, -fs.b, -fs.c, -fs.d});
    }
}

TEST_CASE("hessian worked examples") {
    for (long n = 1; n <= 50; ++n) {
        binary_quadratic h = hessian(cubic_form{1, 0, 0, integer(n)});
        CHECK(h == binary_quadratic{0, 9 * integer(n), 0});
    }
    CHECK(hessian(xy_xpy) == binary_quadratic{-1, -1, -1});
    CHECK(hessian(cubic_form{0, 1, 0, 0}) == binary_quadratic{-1, 0, 0});  // x^2y -> -x^2
}

TEST_CASE("jacobian covariant worked examples and syzygy") {
    for (long n = 1; n <= 10; ++n) {
        cubic_form g = jacobian_covariant(cubic_form{1, 0, 0, integer(n)});
        CHECK(g == cubic_form{27 * integer(n), 0, 0, -27 * integer(n) * integer(n)});
    }
    CHECK(jacobian_covariant(xy_xpy) == cubic_form{2, 3, -3, -2});
    for (int i = 0; i < 10000; ++i) CHECK(syzygy_holds(random_form(10)));
}

TEST_CASE("hessian covariance under the action") {
    for (int i = 0; i < 2000; ++i) {
        cubic_form f = random_form(8);
        unimodular_action g = random_unimodular();
        binary_quadratic h = hessian(f);
        binary_quadratic ha = hessian(act(g, f));
        // quadratic transforms by the same substitution
        const integer &p = g.m.m11, &q = g.m.m12, &r = g.m.m21, &s = g.m.m22;
        binary_quadratic ht{h.a * p * p + h.b * p * q + h.c * q * q,
                            2 * h.a * p * r + h.b * (p * s + q * r) + 2 * h.c * q * s,
                            h.a * r * r + h.b * r * s + h.c * s * s};
        CHECK(ha == ht);
    }
}

TEST_CASE("delone-faddeev ring tables") {
    cubic_ring zzz = ring_from_form(xy_xpy);
    CHECK(is_associative(zzz));
    CHECK(trace_pairing_disc(zzz) == 1);
    // three orthogonal idempotents in small integer span certify Z x Z x Z
    std::vector<std::array<integer, 3>> idem;
    for (long u = -2; u <= 2; ++u)
        for (long v = -2; v <= 2; ++v)
            for (long w = -2; w <= 2; ++w) {
                std::array<integer, 3> x{integer(u), integer(v), integer(w)};
                if (zzz.mul(x, x) == x && !(u == 0 && v == 0 && w == 0)) idem.push_back(x);
            }
    bool found = false;
    for (std::size_t i = 0; i < idem.size() && !found; ++i)
        for (std::size_t j = i + 1; j < idem.size() && !found; ++j)
            for (std::size_t k = j + 1; k < idem.size() && !found; ++k) {
                auto zero = [&](const std::array<integer, 3>& x) {
                    return x[0] == 0 && x[1] == 0 && x[2] == 0;
                };
                auto sum_is_one = idem[i][0] + idem[j][0] + idem[k][0] == 1 &&
                                  idem[i][1] + idem[j][1] + idem[k][1] == 0 &&
                                  idem[i][2] + idem[j][2] + idem[k][2] == 0;
                if (sum_is_one && zero(zzz.mul(idem[i], idem[j])) && zero(zzz.mul(idem[j], idem[k])) &&
                    zero(zzz.mul(idem[i], idem[k])))
                    found = true;
            }
    CHECK(found);

    cubic_ring r23 = ring_from_form(f23);
    CHECK(is_associative(r23));
    CHECK(trace_pairing_disc(r23) == -23);

    cubic_ring degen = ring_from_form(cubic_form{0, 1, 0, 0});
    CHECK(is_associative(degen));
    CHECK(trace_pairing_disc(degen) == 0);

    for (int i = 0; i < 500; ++i) {
        cubic_form f = random_form(10);
        cubic_ring r = ring_from_form(f);
        CHECK(is_associative(r));
        CHECK(trace_pairing_disc(r) == disc(f));
    }
}

TEST_CASE("canonicalize is an orbit invariant") {
    int done = 0;
    while (done < 1000) {
        cubic_form f = random_form(6);
        if (disc(f) == 0 || !is_irreducible_form(f)) continue;
        unimodular_action g = random_unimodular();
        CHECK(canonicalize(act(g, f)) == canonicalize(f));
        ++done;
    }
}

TEST_CASE("equivalence worked examples") {
    // swap has det -1, allowed in GL2(Z)
    auto w = equivalent(cubic_form{1, 0, 0, -21}, cubic_form{-21, 0, 0, 1});
    REQUIRE(w.has_value());
    CHECK(act(*w, cubic_form{1, 0, 0, -21}) == cubic_form{-21, 0, 0, 1});

    // the worked pair of pure-cubic index forms lie in different classes
    CHECK_FALSE(equivalent(f57, f21).has_value());

    // witness round-trip on random pairs
    int done = 0;
    while (done < 300) {
        cubic_form f = random_form(6);
        if (disc(f) == 0 || !is_irreducible_form(f)) continue;
        unimodular_action g = random_unimodular();
        cubic_form h = act(g, f);
        auto wit = equivalent(f, h);
        REQUIRE(wit.has_value());
        CHECK(act(*wit, f) == h);
        ++done;
    }
}

TEST_CASE("maximality") {
    for (long p : {2L, 3L, 5L, 7L, 11L}) CHECK(is_maximal_at_p(f23, p));
    CHECK(is_maximal(f23));
    // 5x^3 - 7y^3 is the index form of a maximal order despite 5^2, 7^2 | disc
    CHECK(is_maximal(f57));
    CHECK(is_maximal_at_p(f57, 5));
    CHECK(is_maximal_at_p(f57, 7));
    // p * f is never maximal at p
    CHECK_FALSE(is_maximal_at_p(cubic_form{5 * 1, 0, -5, -5}, 5));
    // Z[cbrt(175)] is not maximal at 5
    CHECK_FALSE(is_maximal_at_p(cubic_form{1, 0, 0, -175}, 5));
    CHECK_THROWS_AS(is_maximal_at_p(cubic_form{0, 1, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("maximality agrees with the dedekind criterion oracle") {
    // Dedekind: for monic g and prime p, Z[x]/(g) is p-maximal iff
    // gcd(g1bar, g2bar, Fbar) = 1 where g = g1 g2 mod p (g1 = prod of distinct
    // irreducible lifts, g2 = g/g1 mod p) and F = (g1 g2 - g)/p.
    auto dedekind_maximal = [](const nt::int_poly& g, const integer& p) {
        auto fac = nt::factor_mod_p(g, p);
        nt::int_poly g1{1}, g2{1};
        for (auto& [q, m] : fac.factors) {
            g1 = g1 * q;
            for (int i = 1; i < m; ++i) g2 = g2 * q;
        }
        nt::int_poly prod = g1 * g2 - g;
        std::vector<integer> coeffs(prod.coeffs());
        for (auto& x : coeffs) {
            REQUIRE(mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()));
            x /= p;
        }
        nt::int_poly F(std::move(coeffs));
        // gcd(g1bar, g2bar) = product of the repeated factors, so: p-maximal
        // iff no repeated factor q of g mod p divides F mod p
        bool maximal = true;
        for (auto& [q, m] : fac.factors) {
            if (m < 2) continue;
            // divide F by q mod p and check the remainder
            // (implemented via int_poly arithmetic + reduction mod p)
            nt::int_poly r = F;
            while (!r.is_zero() && r.degree() >= q.degree()) {
                // make leading coefficient reduction mod p
                integer lead = r.lead() % p;
                if (lead < 0) lead += p;
                if (lead == 0) {
                    std::vector<integer> cs(r.coeffs());
                    cs.pop_back();
                    r = nt::int_poly(std::move(cs));
                    continue;
                }
                int k = r.degree() - q.degree();
                r = r - lead * (nt::int_poly::x_power(k) * q);
                std::vector<integer> cs(r.coeffs());
                for (auto& x : cs) {
                    x %= p;
                    if (x < 0) x += p;
                }
                r = nt::int_poly(std::move(cs));
            }
            std::vector<integer> cs(r.coeffs());
            bool zero = true;
            for (auto& x : cs)
                if (x % p != 0) zero = false;
            if (zero) maximal = false;  // q divides both g2-part and F
        }
        return maximal;
    };

    std::mt19937_64 rng2(99);
    auto primes = std::vector<long>{2, 3, 5, 7, 11, 13};
    int done = 0;
    while (done < 1000) {
        integer b = integer(static_cast<long>(rng2() % 21) - 10);
        integer c = integer(static_cast<long>(rng2() % 21) - 10);
        integer d = integer(static_cast<long>(rng2() % 21) - 10);
        nt::int_poly g{d, c, b, 1};
        if (nt::discriminant_of_polynomial(g) == 0) continue;
        cubic_form f{1, b, c, d};
        long p = primes[rng2() % primes.size()];
        CHECK(is_maximal_at_p(f, p) == dedekind_maximal(g, p));
        ++done;
    }
}

TEST_CASE("splitting types") {
    CHECK(splitting_type(xy_xpy, 2).kind == split_kind::s111);
    CHECK(splitting_type(f23, 23).kind == split_kind::s121);
    CHECK(splitting_type(f23, 2).kind == split_kind::s3);
    // x^3 - 21 y^3 is totally ramified at 3: disc = -27*441, v3 = 5
    auto s3 = splitting_type(f21, 3);
    CHECK(s3.kind == split_kind::s13);
    CHECK(s3.v3 == 5);
    // cyclic cubic of discriminant 81 = 3^4: x^3 - 3x - 1
    cubic_form c81 = index_form_of_field(nt::int_poly{-1, -3, 0, 1});
    auto s81 = splitting_type(c81, 3);
    CHECK(s81.kind == split_kind::s13);
    CHECK(s81.v3 == 4);
    CHECK(s81.gal == splitting_symbol::galois_flag::c3);
    CHECK_THROWS_AS(splitting_type(cubic_form{1, 0, 0, -175}, 5), std::invalid_argument);
}

TEST_CASE("index forms of the worked fields") {
    cubic_form k21 = index_form_of_field(nt::int_poly{-21, 0, 0, 1});
    CHECK(equivalent(k21, f21).has_value());
    CHECK(disc(k21) == -27 * 441);

    cubic_form k175 = index_form_of_field(nt::int_poly{-175, 0, 0, 1});
    CHECK(equivalent(k175, f57).has_value());
    CHECK(disc(k175) == -27 * 25 * 49);
    CHECK_FALSE(equivalent(k175, f21).has_value());

    cubic_form k23 = index_form_of_field(nt::int_poly{-1, -1, 0, 1});
    CHECK(equivalent(k23, f23).has_value());
    CHECK(disc(k23) == -23);

    // Dedekind's field: disc(poly) = -2012 = 4 * -503, field disc -503
    cubic_form kd = index_form_of_field(nt::int_poly{-8, -2, -1, 1});
    CHECK(disc(kd) == -503);
    CHECK(splitting_type(kd, 2).kind == split_kind::s111);

    CHECK_THROWS_AS(index_form_of_field(nt::int_poly{0, -1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(index_form_of_field(nt::int_poly{-1, 0, 0, 2}), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
    CHECK(to_string(f57) == "5,0,0,-7");
    CHECK(parse_form("5, 0, 0, -7") == f57);
    CHECK_THROWS_AS(parse_form("1,2,3"), std::invalid_argument);
}
