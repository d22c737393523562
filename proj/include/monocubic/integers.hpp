#ifndef MONOCUBIC_INTEGERS_HPP
#define MONOCUBIC_INTEGERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace monocubic {

// All arithmetic in the library is exact.  "integer" is arbitrary precision;
// 64-bit fast paths exist only where a bound check guarantees no overflow.
using integer = mpz_class;
using rational = mpq_class;

namespace nt {

// Kronecker symbol (d/m), fully multiplicative in m with the usual 2-adic
// and sign conventions.  m = 0 is rejected.
int kronecker(const integer& d, const integer& m);

// Deterministic for inputs below 2^64 (fixed Miller-Rabin witness set),
// BPSW-style beyond.  Negative inputs and 0, 1 are not prime.
bool is_prime(const integer& n);
bool is_prime_u64(std::uint64_t n);

// Primes <= n, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Complete factorization of |n|, n != 0, as (prime, exponent) pairs with
// ascending primes.  Trial division, then perfect-power / Pollard-Brent rho
// on the remaining cofactor.
std::vector<std::pair<integer, int>> factor(const integer& n);

bool is_squarefree(const integer& n);

// d is the discriminant of a quadratic field, or d = 1.
bool is_fundamental_discriminant(const integer& d);

// Largest r with r^2 <= n (n >= 0).
integer isqrt(const integer& n);
std::int64_t isqrt64(std::int64_t n);

// Exact cube root test: returns true and sets r iff n = r^3.
bool is_cube(const integer& n, integer* root = nullptr);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// v_p(n) for n != 0.
int valuation(integer n, const integer& p);

// Smallest-prime-factor sieve, used by the enumeration pipeline to factor
// discriminants in bulk.
class spf_sieve {
public:
    explicit spf_sieve(std::uint32_t limit);
    std::uint32_t limit() const { return limit_; }
    // n in [2, limit]
    std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }
    // factor n in [1, limit]; ascending (prime, exponent) pairs
    std::vector<std::pair<std::uint32_t, int>> factor(std::uint32_t n) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

}  // namespace nt
}  // namespace monocubic

#endif
