#ifndef MONOCUBIC_POLY_FACTOR_HPP
#define MONOCUBIC_POLY_FACTOR_HPP

#include "monocubic/poly.hpp"

namespace monocubic {
namespace nt {

// Factorization of g mod p into monic irreducibles with multiplicity.
// Factors are lifted to int_poly with coefficients in [0, p).
struct modp_factorization {
    integer p;
    integer unit;  // leading unit c so that g = c * prod(factors^mult) mod p
    std::vector<std::pair<int_poly, int>> factors;
};

// Requires g != 0 mod p and p prime (fitting in 64 bits).
modp_factorization factor_mod_p(const int_poly& g, const integer& p);

// Distinct roots of g mod p (g != 0 mod p).
std::vector<integer> roots_mod_p(const int_poly& g, const integer& p);

// content * prod(factors[i]^mult[i]) with primitive irreducible factors of
// positive leading coefficient.  Zassenhaus: factor mod a good prime, Hensel
// lift past the Landau-Mignotte bound, recombine subsets.
struct z_factorization {
    integer content;  // signed
    std::vector<std::pair<int_poly, int>> factors;
};

z_factorization factor_over_integers(const int_poly& g);

bool is_irreducible_over_z(const int_poly& g);

}  // namespace nt
}  // namespace monocubic

#endif
