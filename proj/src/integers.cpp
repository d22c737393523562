#include "monocubic/integers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace monocubic {
namespace nt {

int kronecker(const integer& d, const integer& m) {
    if (m == 0) throw std::invalid_argument("kronecker: m = 0");
    return mpz_kronecker(d.get_mpz_t(), m.get_mpz_t());
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = m == 1 ? 0 : 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // This witness set is deterministic for all n < 3.3 * 10^24, in
    // particular for 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const integer& n) {
    if (n <= 1) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t seed) {
    // Brent's cycle variant of Pollard rho; n odd composite, no tiny factors.
    std::uint64_t y = seed % n, c = 1 + seed % (n - 1), m = 128;
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_u64_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    // perfect squares show up from rho inputs like p^2
    std::uint64_t r = static_cast<std::uint64_t>(isqrt64(static_cast<std::int64_t>(n)));
    if (r * r == n) {
        factor_u64_into(r, out);
        factor_u64_into(r, out);
        return;
    }
    std::uint64_t d = n;
    for (std::uint64_t seed = 2; d == n; ++seed) d = pollard_brent(n, seed);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

}  // namespace

std::vector<std::pair<integer, int>> factor(const integer& n) {
    if (n == 0) throw std::invalid_argument("factor: n = 0");
    integer m = abs(n);
    std::vector<std::pair<integer, int>> out;
    if (m == 1) return out;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) out.emplace_back(integer(static_cast<unsigned long>(p)), e);
    }
    std::uint64_t p = 17;
    while (m > 1 && integer(p) * p <= m && p <= 1000000) {
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) out.emplace_back(integer(static_cast<unsigned long>(p)), e);
        p += 2;
    }
    if (m > 1) {
        if (is_prime(m)) {
            out.emplace_back(m, 1);
        } else if (mpz_perfect_power_p(m.get_mpz_t())) {
            for (int k = 2; k <= 64; ++k) {
                integer r;
                if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                    auto sub = factor(r);
                    for (auto& [q, e] : sub) out.emplace_back(q, e * k);
                    m = 1;
                    break;
                }
            }
        } else if (mpz_fits_ulong_p(m.get_mpz_t())) {
            std::vector<std::uint64_t> fs;
            factor_u64_into(m.get_ui(), fs);
            std::sort(fs.begin(), fs.end());
            for (std::size_t i = 0; i < fs.size();) {
                std::size_t j = i;
                while (j < fs.size() && fs[j] == fs[i]) ++j;
                out.emplace_back(integer(static_cast<unsigned long>(fs[i])), static_cast<int>(j - i));
                i = j;
            }
        } else {
            throw std::domain_error("factor: cofactor too large for the rho fallback");
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool is_squarefree(const integer& n) {
    if (n == 0) return false;
    integer m = abs(n);
    if (m == 1) return true;
    if (mpz_perfect_square_p(m.get_mpz_t())) return false;
    for (auto& [p, e] : factor(m)) {
        (void)p;
        if (e >= 2) return false;
    }
    return true;
}

bool is_fundamental_discriminant(const integer& d) {
    if (d == 0) return false;
    integer r = d % 4;
    if (r < 0) r += 4;
    if (r == 1) return is_squarefree(d);
    if (r != 0) return false;
    integer m = d / 4;
    integer s = m % 4;
    if (s < 0) s += 4;
    if (s != 2 && s != 3) return false;
    return is_squarefree(m);
}

integer isqrt(const integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt64: negative input");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_cube(const integer& n, integer* root) {
    integer r;
    integer m = abs(n);
    int exact = mpz_root(r.get_mpz_t(), m.get_mpz_t(), 3);
    if (!exact) return false;
    if (n < 0) r = -r;
    if (root) *root = r;
    return true;
}

int valuation(integer n, const integer& p) {
    if (n == 0) throw std::invalid_argument("valuation: n = 0");
    int v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

spf_sieve::spf_sieve(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i) {
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

std::vector<std::pair<std::uint32_t, int>> spf_sieve::factor(std::uint32_t n) const {
    std::vector<std::pair<std::uint32_t, int>> out;
    while (n > 1) {
        std::uint32_t p = spf_[n];
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    return out;
}

}  // namespace nt
}  // namespace monocubic
