#include "monocubic/cubic_ring.hpp"

namespace monocubic {
namespace forms {

std::array<integer, 3> cubic_ring::mul(const std::array<integer, 3>& x,
                                       const std::array<integer, 3>& y) const {
    std::array<integer, 3> r{0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (x[static_cast<std::size_t>(i)] == 0 || y[static_cast<std::size_t>(j)] == 0) continue;
            integer coef = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (int k = 0; k < 3; ++k)
                r[static_cast<std::size_t>(k)] +=
                    coef * table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        }
    return r;
}

cubic_ring ring_from_form(const cubic_form& f) {
    cubic_ring r;
    auto set = [&](int i, int j, const integer& c0, const integer& c1, const integer& c2) {
        r.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {c0, c1, c2};
        if (i != j) r.table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = {c0, c1, c2};
    };
    set(0, 0, 1, 0, 0);
    set(0, 1, 0, 1, 0);
    set(0, 2, 0, 0, 1);
    set(1, 2, -f.a * f.d, 0, 0);
    set(1, 1, -f.a * f.c, f.b, -f.a);
    set(2, 2, -f.b * f.d, f.d, -f.c);
    r.discriminant = disc(f);
    return r;
}

bool is_associative(const cubic_ring& r) {
    const std::array<integer, 3> basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                auto left = r.mul(r.mul(basis[i], basis[j]), basis[k]);
                auto right = r.mul(basis[i], r.mul(basis[j], basis[k]));
                if (left != right) return false;
            }
    return true;
}

integer trace_pairing_disc(const cubic_ring& r) {
    // Tr(x) = trace of the multiplication-by-x matrix
    auto trace_of_product = [&](int i, int j) {
        // multiplication matrix of e_i * e_j applied to basis, summed on the diagonal
        const std::array<integer, 3> basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        auto x = r.mul(basis[i], basis[j]);
        integer tr = 0;
        for (int k = 0; k < 3; ++k) {
            auto col = r.mul(x, basis[k]);
            tr += col[static_cast<std::size_t>(k)];
        }
        return tr;
    };
    integer m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = trace_of_product(i, j);
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace forms
}  // namespace monocubic
