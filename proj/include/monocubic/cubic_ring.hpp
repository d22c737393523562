#ifndef MONOCUBIC_CUBIC_RING_HPP
#define MONOCUBIC_CUBIC_RING_HPP

#include "monocubic/forms.hpp"

#include <array>

namespace monocubic {
namespace forms {

// Rank-3 ring with basis (1, w, t) and an explicit multiplication table.
// table[i][j] holds the coordinates of e_i * e_j in the basis, e = (1, w, t).
struct cubic_ring {
    std::array<std::array<std::array<integer, 3>, 3>, 3> table;
    integer discriminant;

    std::array<integer, 3> mul(const std::array<integer, 3>& x, const std::array<integer, 3>& y) const;
};

// Translation-normalized Delone-Faddeev table of f = (a,b,c,d):
//   w t = -ad,  w^2 = -ac + b w - a t,  t^2 = -bd + d w - c t.
// disc(ring) = disc(f); the disc-equality test pins the sign convention.
cubic_ring ring_from_form(const cubic_form& f);

bool is_associative(const cubic_ring& r);

// determinant of the trace pairing on the basis (1, w, t)
integer trace_pairing_disc(const cubic_ring& r);

}  // namespace forms
}  // namespace monocubic

#endif
