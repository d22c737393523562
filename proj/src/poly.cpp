#include "monocubic/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace monocubic {
namespace nt {

int_poly::int_poly(std::vector<integer> coeffs) : c_(std::move(coeffs)) { trim(); }

int_poly::int_poly(std::initializer_list<integer> coeffs) : c_(coeffs) { trim(); }

int_poly int_poly::x_power(int n) {
    std::vector<integer> c(static_cast<std::size_t>(n) + 1, 0);
    c.back() = 1;
    return int_poly(std::move(c));
}

void int_poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const integer& int_poly::lead() const {
    static const integer zero = 0;
    return c_.empty() ? zero : c_.back();
}

const integer& int_poly::operator[](int i) const {
    static const integer zero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
}

integer int_poly::eval(const integer& x) const {
    integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

int_poly int_poly::derivative() const {
    if (c_.size() <= 1) return int_poly();
    std::vector<integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = integer(static_cast<long>(i)) * c_[i];
    return int_poly(std::move(d));
}

int_poly int_poly::reversed() const {
    std::vector<integer> r(c_.rbegin(), c_.rend());
    return int_poly(std::move(r));
}

int_poly int_poly::compose_linear(const integer& s, const integer& t) const {
    // Horner in (s*x + t)
    int_poly lin{t, s};
    int_poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + int_poly{*it};
    return r;
}

integer int_poly::content() const {
    integer g = 0;
    for (const auto& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

int_poly int_poly::primitive_part() const {
    integer g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<integer> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(c[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return int_poly(std::move(c));
}

std::string int_poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const integer& a = (*this)[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        integer m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i >= 1) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

int_poly operator+(const int_poly& a, const int_poly& b) {
    std::vector<integer> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return int_poly(std::move(c));
}

int_poly operator-(const int_poly& a, const int_poly& b) { return a + (-b); }

int_poly operator-(const int_poly& a) {
    std::vector<integer> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return int_poly(std::move(c));
}

int_poly operator*(const int_poly& a, const int_poly& b) {
    if (a.is_zero() || b.is_zero()) return int_poly();
    std::vector<integer> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return int_poly(std::move(c));
}

int_poly operator*(const integer& k, const int_poly& a) {
    std::vector<integer> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.c_[i];
    return int_poly(std::move(c));
}

namespace {

// r = lead(b)^(deg a - deg b + 1) * a mod b, the pseudo-remainder.
int_poly pseudo_rem(int_poly a, const int_poly& b) {
    int db = b.degree();
    if (db < 0) throw std::invalid_argument("pseudo_rem: division by zero polynomial");
    if (a.degree() < db) return a;
    int e = a.degree() - db + 1;
    while (!a.is_zero() && a.degree() >= db) {
        int k = a.degree() - db;
        a = b.lead() * a - a[a.degree()] * (int_poly::x_power(k) * b);
        --e;
    }
    for (; e > 0; --e) a = b.lead() * a;
    return a;
}

}  // namespace

bool divides(const int_poly& b, const int_poly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    // exact long division over Q, checking integrality
    int_poly r = a;
    std::vector<integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        integer t = r.lead();
        if (!mpz_divisible_p(t.get_mpz_t(), b.lead().get_mpz_t())) return false;
        integer f;
        mpz_divexact(f.get_mpz_t(), t.get_mpz_t(), b.lead().get_mpz_t());
        int k = r.degree() - b.degree();
        q[static_cast<std::size_t>(k)] = f;
        r = r - f * (int_poly::x_power(k) * b);
    }
    return r.is_zero();
}

int_poly divexact(const int_poly& a, const int_poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divexact: zero divisor");
    if (a.is_zero()) return int_poly();
    int_poly r = a;
    std::vector<integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        integer t = r.lead();
        if (!mpz_divisible_p(t.get_mpz_t(), b.lead().get_mpz_t()))
            throw std::domain_error("divexact: not divisible");
        integer f;
        mpz_divexact(f.get_mpz_t(), t.get_mpz_t(), b.lead().get_mpz_t());
        int k = r.degree() - b.degree();
        q[static_cast<std::size_t>(k)] = f;
        r = r - f * (int_poly::x_power(k) * b);
    }
    if (!r.is_zero()) throw std::domain_error("divexact: not divisible");
    return int_poly(std::move(q));
}

int_poly gcd(const int_poly& a, const int_poly& b) {
    if (a.is_zero()) return b.lead() < 0 ? -b : b;
    if (b.is_zero()) return a.lead() < 0 ? -a : a;
    integer cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    int_poly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    // primitive PRS; degrees here stay tiny, so content stripping per step is fine
    while (!v.is_zero()) {
        int_poly r = pseudo_rem(u, v).primitive_part();
        u = v;
        v = r;
    }
    if (u.lead() < 0) u = -u;
    return cont * u;
}

integer resultant(const int_poly& a, const int_poly& b) {
    // Sylvester determinant with fraction-free (Bareiss) elimination.  The
    // degrees this library meets never exceed 9, so the dense determinant is
    // cheap and leaves no room for PRS bookkeeping mistakes.
    if (a.is_zero() || b.is_zero()) return 0;
    int m = a.degree(), n = b.degree();
    if (m == 0) {
        integer r = 1;
        for (int i = 0; i < n; ++i) r *= a.lead();
        return r;
    }
    if (n == 0) {
        integer r = 1;
        for (int i = 0; i < m; ++i) r *= b.lead();
        return r;
    }
    int N = m + n;
    std::vector<std::vector<integer>> M(static_cast<std::size_t>(N),
                                        std::vector<integer>(static_cast<std::size_t>(N), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];
    integer sign = 1, prev = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < N; ++i)
                if (M[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                integer t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[N - 1][N - 1];
}

integer discriminant_of_polynomial(const int_poly& g) {
    int n = g.degree();
    if (n < 1) throw std::invalid_argument("discriminant_of_polynomial: degree < 1");
    integer r = resultant(g, g.derivative());
    if (!mpz_divisible_p(r.get_mpz_t(), g.lead().get_mpz_t()))
        throw std::logic_error("discriminant_of_polynomial: resultant not divisible by lead");
    integer d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), g.lead().get_mpz_t());
    int sign = ((static_cast<long>(n) * (n - 1) / 2) % 2) ? -1 : 1;
    return sign * d;
}

}  // namespace nt
}  // namespace monocubic
