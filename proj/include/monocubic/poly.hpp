#ifndef MONOCUBIC_POLY_HPP
#define MONOCUBIC_POLY_HPP

#include "monocubic/integers.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace monocubic {
namespace nt {

// Univariate polynomial over the integers, coefficients constant-first.
// Canonical form has no trailing zero coefficients; the zero polynomial has
// an empty coefficient list and degree -1.
class int_poly {
public:
    int_poly() = default;
    explicit int_poly(std::vector<integer> coeffs);
    int_poly(std::initializer_list<integer> coeffs);

    static int_poly x_power(int n);  // x^n

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const integer& lead() const;
    const integer& operator[](int i) const;  // 0 beyond the degree
    const std::vector<integer>& coeffs() const { return c_; }

    integer eval(const integer& x) const;
    // Homogeneous evaluation x^deg * p(y/x) is not needed; these two cover
    // the substitutions the library uses.
    int_poly derivative() const;
    int_poly reversed() const;                         // x^deg * p(1/x)
    int_poly compose_linear(const integer& s, const integer& t) const;  // p(s*x + t)

    integer content() const;  // gcd of coefficients, >= 0; 0 for the zero poly
    int_poly primitive_part() const;

    bool operator==(const int_poly& o) const { return c_ == o.c_; }
    std::string str(const std::string& var = "x") const;

    friend int_poly operator+(const int_poly& a, const int_poly& b);
    friend int_poly operator-(const int_poly& a, const int_poly& b);
    friend int_poly operator*(const int_poly& a, const int_poly& b);
    friend int_poly operator*(const integer& k, const int_poly& a);
    friend int_poly operator-(const int_poly& a);

private:
    void trim();
    std::vector<integer> c_;
};

// Exact division; throws if b does not divide a over the integers.
int_poly divexact(const int_poly& a, const int_poly& b);
bool divides(const int_poly& b, const int_poly& a);

// Primitive gcd over Z, positive leading coefficient (subresultant PRS).
int_poly gcd(const int_poly& a, const int_poly& b);

// Resultant of a and b, exact.
integer resultant(const int_poly& a, const int_poly& b);

// disc(g) = (-1)^(n(n-1)/2) Res(g, g') / lead(g); deg g >= 1 required.
integer discriminant_of_polynomial(const int_poly& g);

}  // namespace nt
}  // namespace monocubic

#endif
