#include "monocubic/forms.hpp"
#include "monocubic/poly_factor.hpp"

#include <sstream>

namespace monocubic {
namespace forms {

const std::vector<std::array<int, 4>>& ball_matrices() {
    static const std::vector<std::array<int, 4>> ball = [] {
        std::vector<std::array<int, 4>> v;
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                for (int c = -2; c <= 2; ++c)
                    for (int d = -2; d <= 2; ++d) {
                        int det = a * d - b * c;
                        if (det == 1 || det == -1) v.push_back({a, b, c, d});
                    }
        return v;
    }();
    return ball;
}

integer disc(const cubic_form& f) { return form_disc(f); }

integer content(const cubic_form& f) {
    integer g = 0;
    for (const integer* x : {&f.a, &f.b, &f.c, &f.d}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x->get_mpz_t());
    return g;
}

bool is_primitive_at(const cubic_form& f, const integer& p) {
    for (const integer* x : {&f.a, &f.b, &f.c, &f.d})
        if (!mpz_divisible_p(x->get_mpz_t(), p.get_mpz_t())) return true;
    return false;
}

cubic_form act(const unimodular_action& g, const cubic_form& f) {
    integer det = g.m.det();
    if (det != 1 && det != -1) throw std::invalid_argument("act: matrix is not unimodular");
    cubic_form r = substitute(f, g.m);
    if (g.twisted && det == -1) {
        // det^{-1} = det for a sign
        r.a = -r.a;
        r.b = -r.b;
        r.c = -r.c;
        r.d = -r.d;
    }
    return r;
}

binary_quadratic hessian(const cubic_form& f) {
    // (3ac - b^2) x^2 + (9ad - bc) xy + (3bd - c^2) y^2
    return {3 * f.a * f.c - f.b * f.b, 9 * f.a * f.d - f.b * f.c, 3 * f.b * f.d - f.c * f.c};
}

cubic_form jacobian_covariant(const cubic_form& f) {
    integer P = f.b * f.b - 3 * f.a * f.c;
    integer Q = f.b * f.c - 9 * f.a * f.d;
    integer R = f.c * f.c - 3 * f.b * f.d;
    return {2 * f.b * P - 3 * f.a * Q, 4 * f.c * P - f.b * Q - 6 * f.a * R,
            6 * f.d * P + f.c * Q - 4 * f.b * R, 3 * f.d * Q - 2 * f.c * R};
}

int_poly dehomogenize(const cubic_form& f) { return int_poly{f.d, f.c, f.b, f.a}; }

bool is_irreducible_form(const cubic_form& f) {
    if (f.a == 0) return false;  // y divides
    auto fac = nt::factor_over_integers(dehomogenize(f));
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

cubic_form canonicalize(const cubic_form& f) {
    if (disc(f) == 0) throw std::invalid_argument("canonicalize: degenerate form");
    if (!is_irreducible_form(f)) throw std::invalid_argument("canonicalize: reducible form");
    return canonical_form_unchecked(f);
}

std::optional<unimodular_action> equivalent(const cubic_form& f1, const cubic_form& f2) {
    if (disc(f1) == 0 || disc(f2) == 0) throw std::invalid_argument("equivalent: degenerate form");
    if (!is_irreducible_form(f1) || !is_irreducible_form(f2))
        throw std::invalid_argument("equivalent: reducible form");
    if (disc(f1) != disc(f2)) return std::nullopt;
    mat2_t<integer> m1, m2;
    cubic_form c1 = canonical_form_unchecked(f1, &m1);
    cubic_form c2 = canonical_form_unchecked(f2, &m2);
    if (!(c1 == c2)) return std::nullopt;
    // c1 = f1 o m1, c2 = f2 o m2  =>  f2 = f1 o (m2^{-1} m1)... order checked below
    integer det = m2.det();
    mat2_t<integer> inv{det * m2.m22, -det * m2.m12, -det * m2.m21, det * m2.m11};
    unimodular_action g;
    g.m = mat_mul(inv, m1);
    if (!(act(g, f1) == f2)) throw std::logic_error("equivalent: witness verification failed");
    return g;
}

bool is_maximal_at_p(const cubic_form& f, const integer& p) {
    if (disc(f) == 0) throw std::invalid_argument("is_maximal_at_p: degenerate form");
    if (!is_primitive_at(f, p)) return false;
    integer p2 = p * p;
    auto all0 = [&](const integer& x, const integer& y, const integer& z, const integer& w) {
        return mpz_divisible_p(x.get_mpz_t(), p2.get_mpz_t()) &&
               mpz_divisible_p(y.get_mpz_t(), p2.get_mpz_t()) &&
               mpz_divisible_p(z.get_mpz_t(), p2.get_mpz_t()) &&
               mpz_divisible_p(w.get_mpz_t(), p2.get_mpz_t());
    };
    // N = [[p,0],[0,1]]: coefficients (a p^3, b p^2, c p, d)
    if (all0(f.a * p * p * p, f.b * p2, f.c * p, f.d)) return false;
    // N = [[1,0],[i,p]]: f(x + iy, py)
    for (integer i = 0; i < p; ++i) {
        integer ca = f.a;
        integer cb = 3 * f.a * i + f.b * p;
        integer cc = 3 * f.a * i * i + 2 * f.b * i * p + f.c * p2;
        integer cd = f.a * i * i * i + f.b * i * i * p + f.c * i * p2 + f.d * p2 * p;
        if (all0(ca, cb, cc, cd)) return false;
    }
    return true;
}

bool is_maximal(const cubic_form& f) {
    integer D = disc(f);
    if (D == 0) throw std::invalid_argument("is_maximal: degenerate form");
    for (auto& [p, e] : nt::factor(D)) {
        if (e >= 2 && !is_maximal_at_p(f, p)) return false;
    }
    return true;
}

std::string to_string(const splitting_symbol& s) {
    switch (s.kind) {
        case split_kind::s111: return "(111)";
        case split_kind::s12: return "(12)";
        case split_kind::s3: return "(3)";
        case split_kind::s121: return "(1^2 1)";
        case split_kind::s13: {
            std::string out = "(1^3)";
            if (s.v3) {
                out += " v3=" + std::to_string(s.v3);
                if (s.gal == splitting_symbol::galois_flag::c3) out += " C3";
                if (s.gal == splitting_symbol::galois_flag::s3) out += " S3";
            }
            return out;
        }
    }
    return "?";
}

splitting_symbol splitting_type(const cubic_form& f, const integer& p) {
    if (!is_maximal_at_p(f, p)) throw std::invalid_argument("splitting_type: form not maximal at p");
    int_poly u = dehomogenize(f);
    auto fac = nt::factor_mod_p(u, p);  // nonzero mod p since f is primitive at p
    // multiplicity pattern over P^1, with y = 0 contributing 3 - deg(u mod p)
    int degsum = 0;
    std::vector<std::pair<int, int>> parts;  // (degree, multiplicity)
    for (auto& [q, m] : fac.factors) {
        parts.emplace_back(q.degree(), m);
        degsum += q.degree() * m;
    }
    if (degsum < 3) parts.emplace_back(1, 3 - degsum);  // root at infinity
    splitting_symbol out{};
    int nlin = 0, maxmult = 0;
    bool quad = false, cubic = false;
    for (auto& [dg, m] : parts) {
        if (dg == 1) nlin += m;
        maxmult = std::max(maxmult, m);
        if (dg == 2) quad = true;
        if (dg == 3) cubic = true;
    }
    (void)nlin;
    if (cubic) out.kind = split_kind::s3;
    else if (quad) out.kind = split_kind::s12;
    else if (maxmult == 1) out.kind = split_kind::s111;
    else if (maxmult == 2) out.kind = split_kind::s121;
    else out.kind = split_kind::s13;
    if (p == 3 && out.kind == split_kind::s13) {
        integer D = disc(f);
        out.v3 = nt::valuation(D, 3);
        if (out.v3 < 3 || out.v3 > 5)
            throw std::logic_error("splitting_type: unexpected 3-adic valuation for type (1^3)");
        if (out.v3 == 4) {
            bool square = D > 0 && mpz_perfect_square_p(D.get_mpz_t());
            out.gal = square ? splitting_symbol::galois_flag::c3 : splitting_symbol::galois_flag::s3;
        }
    }
    return out;
}

cubic_form index_form_of_field(const int_poly& g) {
    if (g.degree() != 3 || g.lead() != 1)
        throw std::invalid_argument("index_form_of_field: need a monic cubic");
    if (!nt::is_irreducible_over_z(g))
        throw std::invalid_argument("index_form_of_field: reducible polynomial");
    cubic_form f{1, g[2], g[1], g[0]};
    integer D = disc(f);
    for (auto& [p, e] : nt::factor(D)) {
        if (e < 2) continue;
        integer p2 = p * p;
        int budget = e / 2 + 1;
        while (budget-- >= 0) {
            if (mpz_divisible_p(content(f).get_mpz_t(), p.get_mpz_t())) {
                f = {f.a / p, f.b / p, f.c / p, f.d / p};
                continue;
            }
            // look for an index-p enlargement among the determinant-p cosets
            auto try_div = [&](const cubic_form& cand) {
                for (const integer* x : {&cand.a, &cand.b, &cand.c, &cand.d})
                    if (!mpz_divisible_p(x->get_mpz_t(), p2.get_mpz_t())) return false;
                f = {cand.a / p2, cand.b / p2, cand.c / p2, cand.d / p2};
                return true;
            };
            bool enlarged = try_div({f.a * p * p * p, f.b * p2, f.c * p, f.d});
            for (integer i = 0; i < p && !enlarged; ++i) {
                enlarged = try_div({f.a, 3 * f.a * i + f.b * p, 3 * f.a * i * i + 2 * f.b * i * p + f.c * p2,
                                    f.a * i * i * i + f.b * i * i * p + f.c * i * p2 + f.d * p2 * p});
            }
            if (!enlarged) break;  // p-maximal
        }
    }
    return canonicalize(f);
}

std::string to_string(const cubic_form& f) {
    std::ostringstream os;
    os << f.a.get_str() << "," << f.b.get_str() << "," << f.c.get_str() << "," << f.d.get_str();
    return os.str();
}

cubic_form parse_form(const std::string& s) {
    std::istringstream is(s);
    std::string part;
    std::vector<integer> v;
    while (std::getline(is, part, ',')) {
        std::size_t b = part.find_first_not_of(" \t");
        std::size_t e = part.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("parse_form: empty coefficient");
        v.emplace_back(part.substr(b, e - b + 1));
    }
    if (v.size() != 4) throw std::invalid_argument("parse_form: expected 4 coefficients a,b,c,d");
    return {v[0], v[1], v[2], v[3]};
}

}  // namespace forms
}  // namespace monocubic
