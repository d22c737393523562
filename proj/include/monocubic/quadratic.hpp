#ifndef MONOCUBIC_QUADRATIC_HPP
#define MONOCUBIC_QUADRATIC_HPP

#include "monocubic/integers.hpp"

namespace monocubic {

// a x^2 + b xy + c y^2
struct binary_quadratic {
    integer a, b, c;
    integer disc() const { return b * b - 4 * a * c; }
    bool operator==(const binary_quadratic& o) const { return a == o.a && b == o.b && c == o.c; }
    integer eval(const integer& x, const integer& y) const {
        return a * x * x + b * x * y + c * y * y;
    }
};

}  // namespace monocubic

#endif
