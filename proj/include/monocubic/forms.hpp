#ifndef MONOCUBIC_FORMS_HPP
#define MONOCUBIC_FORMS_HPP

#include "monocubic/integers.hpp"
#include "monocubic/poly.hpp"
#include "monocubic/quadratic.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace monocubic {
namespace forms {

using nt::int_poly;

// --------------------------------------------------------------------------
// Scalar-generic core.  The enumeration pipeline instantiates these with
// __int128 (after bound checks), everything else uses `integer`.
// --------------------------------------------------------------------------

// a x^3 + b x^2 y + c xy^2 + d y^3
template <class I>
struct form_t {
    I a{}, b{}, c{}, d{};
    auto tuple() const { return std::tie(a, b, c, d); }
    bool operator==(const form_t& o) const { return tuple() == o.tuple(); }
    bool operator<(const form_t& o) const { return tuple() < o.tuple(); }
};

using cubic_form = form_t<integer>;
using form128 = form_t<__int128>;

template <class I>
I form_disc(const form_t<I>& f) {
    return 18 * f.a * f.b * f.c * f.d - 4 * f.b * f.b * f.b * f.d + f.b * f.b * f.c * f.c -
           4 * f.a * f.c * f.c * f.c - 27 * f.a * f.a * f.d * f.d;
}

template <class I>
I form_eval(const form_t<I>& f, const I& x, const I& y) {
    return f.a * x * x * x + f.b * x * x * y + f.c * x * y * y + f.d * y * y * y;
}

// row-vector convention: (x, y) |-> (x, y) M, i.e. the form picks up
// f(m11 x + m21 y, m12 x + m22 y)
template <class I>
struct mat2_t {
    I m11{}, m12{}, m21{}, m22{};
    I det() const { return m11 * m22 - m12 * m21; }
    static mat2_t id() { return {1, 0, 0, 1}; }
};

template <class I>
mat2_t<I> mat_mul(const mat2_t<I>& A, const mat2_t<I>& B) {
    return {A.m11 * B.m11 + A.m12 * B.m21, A.m11 * B.m12 + A.m12 * B.m22,
            A.m21 * B.m11 + A.m22 * B.m21, A.m21 * B.m12 + A.m22 * B.m22};
}

template <class I>
form_t<I> substitute(const form_t<I>& f, const mat2_t<I>& M) {
    const I &p = M.m11, &q = M.m12, &r = M.m21, &s = M.m22;
    form_t<I> g;
    g.a = form_eval(f, p, q);
    g.b = 3 * f.a * p * p * r + f.b * (p * p * s + 2 * p * q * r) + f.c * (2 * p * q * s + q * q * r) +
          3 * f.d * q * q * s;
    g.c = 3 * f.a * p * r * r + f.b * (2 * p * r * s + q * r * r) + f.c * (p * s * s + 2 * q * r * s) +
          3 * f.d * q * s * s;
    g.d = form_eval(f, r, s);
    return g;
}

namespace detail {

template <class I>
I iabs(const I& x) {
    return x < 0 ? I(-x) : x;
}

}  // namespace detail

// Belabas reduction ("A fast algorithm to compute cubic fields", Math. Comp.
// 66).  Expects an irreducible form; returns the reduced representative and,
// if track != nullptr, accumulates the witness with reduced = f o track.
template <class I>
form_t<I> reduce_form(form_t<I> f, mat2_t<I>* track = nullptr) {
    using std::swap;
    mat2_t<I> acc = mat2_t<I>::id();
    auto step = [&](const mat2_t<I>& M) {
        f = substitute(f, M);
        if (track) acc = mat_mul(M, acc);
    };
    const mat2_t<I> swap_m{0, 1, 1, 0}, flipx{-1, 0, 0, 1}, flipy{1, 0, 0, -1};
    auto shift = [](const I& k) { return mat2_t<I>{1, 0, k, 1}; };
    I D = form_disc(f);
    int guard = 0;
    if (D > 0) {
        while (true) {
            if (++guard > 20000) throw std::logic_error("reduce_form: no convergence (disc > 0)");
            I P = f.b * f.b - 3 * f.a * f.c;
            I Q = f.b * f.c - 9 * f.a * f.d;
            I R = f.c * f.c - 3 * f.b * f.d;
            if (f.a < 0) {
                step(flipx);
            } else if (f.b < 0 || (f.b == 0 && f.d < 0)) {
                step(flipy);
            } else if (P > R || (P == R && (f.a > detail::iabs(f.d) ||
                                            (f.a == detail::iabs(f.d) && f.b >= detail::iabs(f.c))))) {
                step(swap_m);
            } else if (Q > P) {
                step(shift(I(-1)));
            } else if (-Q > P) {
                step(shift(I(1)));
            } else if (P == Q && 2 * f.b >= 3 * f.a) {
                // boundary tie: prefer the translated representative
                step(shift(I(-1)));
            } else {
                break;
            }
        }
    } else {
        while (true) {
            if (++guard > 20000) throw std::logic_error("reduce_form: no convergence (disc < 0)");
            if (f.d * f.d - f.a * f.a + f.a * f.c - f.b * f.d <= 0) {
                step(swap_m);
            } else if (f.a < 0) {
                step(flipx);
            } else if (f.b < 0 || (f.b == 0 && f.d < 0)) {
                step(flipy);
            } else if (f.a * f.d - f.b * f.c >= (f.a + f.b) * (f.a + f.b) + f.a * f.c) {
                step(shift(I(1)));
            } else if (f.a * f.d - f.b * f.c <= -(f.a - f.b) * (f.a - f.b) - f.a * f.c) {
                step(shift(I(-1)));
            } else {
                break;
            }
        }
    }
    if (track) *track = acc;
    return f;
}

// Unimodular matrices with entries bounded by 2, as plain ints.
const std::vector<std::array<int, 4>>& ball_matrices();

// Lexicographically least form among the reduced representative and its
// images under the entry-bounded ball (one bounded pass; iterating would
// descend forever since lex order on Z^4 is not well founded).  The
// orbit-invariance fuzz test is the correctness certificate for this
// canonical label.  Caller guarantees disc != 0 and irreducibility.
template <class I>
form_t<I> canonical_form_unchecked(const form_t<I>& f, mat2_t<I>* track = nullptr) {
    mat2_t<I> acc;
    form_t<I> g = reduce_form(f, track ? &acc : nullptr);
    form_t<I> best = g;
    mat2_t<I> bestM = mat2_t<I>::id();
    for (const auto& e : ball_matrices()) {
        mat2_t<I> M{I(e[0]), I(e[1]), I(e[2]), I(e[3])};
        form_t<I> h = substitute(g, M);
        if (h < best) {
            best = h;
            bestM = M;
        }
    }
    if (track) *track = mat_mul(bestM, acc);
    return best;
}

// --------------------------------------------------------------------------
// Arbitrary-precision interface
// --------------------------------------------------------------------------

// [TYPE] UnimodularAction: gamma with det +-1, standard or twisted.
// The standard action is gamma.f = f((x,y) gamma); the twisted one divides
// by det(gamma), which over Z is a sign.
struct unimodular_action {
    mat2_t<integer> m;
    bool twisted = false;
};

integer disc(const cubic_form& f);
integer content(const cubic_form& f);
bool is_primitive_at(const cubic_form& f, const integer& p);

// throws std::invalid_argument unless det = +-1
cubic_form act(const unimodular_action& g, const cubic_form& f);

// quarter-Hessian h = (f_xx f_yy - f_xy^2)/4; always integral
binary_quadratic hessian(const cubic_form& f);

// g = f_x h_y - f_y h_x; satisfies g^2 + 4 h^3 + 27 disc(f) f^2 = 0
cubic_form jacobian_covariant(const cubic_form& f);

int_poly dehomogenize(const cubic_form& f);  // f(x, 1)
bool is_irreducible_form(const cubic_form& f);

// canonical representative of the GL2(Z)-orbit (disc != 0, irreducible)
cubic_form canonicalize(const cubic_form& f);
// witness gamma with act(gamma, f1) = f2, if the forms are equivalent
std::optional<unimodular_action> equivalent(const cubic_form& f1, const cubic_form& f2);

// index-p sublattice test over the p+1 determinant-p cosets
bool is_maximal_at_p(const cubic_form& f, const integer& p);
bool is_maximal(const cubic_form& f);  // all p with p^2 | disc

enum class split_kind { s111, s12, s3, s121, s13 };
struct splitting_symbol {
    split_kind kind;
    // refinement for p = 3, type (1^3)
    int v3 = 0;  // 3-adic valuation of the discriminant: 3, 4 or 5
    enum class galois_flag { none, c3, s3 } gal = galois_flag::none;  // set when v3 = 4
};
std::string to_string(const splitting_symbol& s);

// projective factorization type of f mod p, including the root at infinity;
// requires maximality at p
splitting_symbol splitting_type(const cubic_form& f, const integer& p);

// index form of the maximal order of Q[x]/(g), g monic irreducible cubic;
// p-maximalization happens in form language (disc drops by p^2 per step)
cubic_form index_form_of_field(const int_poly& g);

// canonical textual serialization "a,b,c,d"
std::string to_string(const cubic_form& f);
cubic_form parse_form(const std::string& s);

}  // namespace forms
}  // namespace monocubic

#endif
