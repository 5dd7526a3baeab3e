#pragma once

// Internal rank-2 lattice arithmetic for the quadratic-order backend.
// A Lat is (1/den) * (Z*a + Z*(b + c*w)) where w is the order generator with
// w^2 = trace*w - norm. Canonical form: den, a, c > 0, 0 <= b < a,
// gcd(a, b, c, den) = 1; for w-stable lattices additionally c | a, c | b.

#include <utility>
#include <vector>

#include "starideal/domain.hpp"

namespace starideal::quad {

struct Lat {
    Int den = 1, a = 1, b = 0, c = 1;
    bool operator==(const Lat&) const = default;
};

struct Vec {
    Int x, y;  // x + y*w
};

/// Canonical form of the integer lattice spanned by the rows (rank 2 required).
Lat hnf_rows(const std::vector<Vec>& rows, const Int& den);

Lat canonicalize(Int den, Int a, Int b, Int c);

/// Lattice spanned over D by field elements in w-coordinates.
Lat from_elements(const Domain& dom, const std::vector<std::pair<Rat, Rat>>& elems);

Lat mul(const Domain& dom, const Lat& lhs, const Lat& rhs);
Lat add(const Lat& lhs, const Lat& rhs);
Lat intersect(const Lat& lhs, const Lat& rhs);
/// {x in K : x*rhs <= lhs}.
Lat colon(const Domain& dom, const Lat& lhs, const Lat& rhs);
/// Multiply every lattice point by gx + gy*w (nonzero).
Lat scale(const Domain& dom, const Lat& lat, const Rat& gx, const Rat& gy);

bool member(const Lat& lat, const Rat& x, const Rat& y);
bool subset(const Lat& inner, const Lat& outer);
/// w-stability of an integral triple (is the module an ideal of the order).
bool is_stable(const Domain& dom, const Int& a, const Int& b, const Int& c);

Rat lat_norm(const Lat& lat);

/// Elements g of lat with |N(g)| equal to the target, complete up to unit
/// multiples, in a deterministic scan order (w-coordinates returned).
std::vector<std::pair<Rat, Rat>> norm_elements(const Domain& dom, const Lat& lat,
                                               const Rat& target_abs_norm);

/// Field arithmetic in w-coordinates.
inline std::pair<Rat, Rat> field_mul(const Domain& dom, const Rat& x1, const Rat& y1,
                                     const Rat& x2, const Rat& y2) {
    Rat trace(dom.quad_trace()), norm(dom.quad_norm());
    return {x1 * x2 - norm * y1 * y2, x1 * y2 + x2 * y1 + trace * y1 * y2};
}

inline Rat field_norm_w(const Domain& dom, const Rat& x, const Rat& y) {
    Rat trace(dom.quad_trace()), norm(dom.quad_norm());
    return x * x + trace * x * y + norm * y * y;
}

inline std::pair<Rat, Rat> field_conj(const Domain& dom, const Rat& x, const Rat& y) {
    return {x + Rat(dom.quad_trace()) * y, -y};
}

inline std::pair<Rat, Rat> field_inv(const Domain& dom, const Rat& x, const Rat& y) {
    auto [cx, cy] = field_conj(dom, x, y);
    Rat n = field_norm_w(dom, x, y);
    return {cx / n, cy / n};
}

}  // namespace starideal::quad
