#include "quad_lattice.hpp"

#include <algorithm>
#include <array>

namespace starideal::quad {

Lat canonicalize(Int den, Int a, Int b, Int c) {
    if (den < 0) den = -den;
    if (a < 0) a = -a;
    if (c < 0) c = -c;
    if (den == 0 || a == 0 || c == 0)
        throw DomainError(Errc::Internal, "degenerate lattice");
    b = floor_mod(b, a);
    Int g = gcd(gcd(a, b), gcd(c, den));
    return Lat{den / g, a / g, b / g, c / g};
}

Lat hnf_rows(const std::vector<Vec>& rows, const Int& den) {
    // Second basis vector: accumulate gcd of the w-components.
    Int pb = 0, pc = 0;
    for (const Vec& r : rows) {
        if (r.y == 0) continue;
        if (pc == 0) {
            pb = r.x;
            pc = r.y;
        } else {
            Int s, t;
            Int g = ext_gcd(pc, r.y, s, t);
            pb = s * pb + t * r.x;
            pc = g;
        }
    }
    if (pc < 0) { pc = -pc; pb = -pb; }
    if (pc == 0) throw DomainError(Errc::Internal, "lattice rank < 2");
    // First basis vector: gcd of x-components after clearing w-components.
    Int a = 0;
    for (const Vec& r : rows) {
        Int x = r.x - (r.y / pc) * pb;
        a = gcd(a, x);
    }
    if (a == 0) throw DomainError(Errc::Internal, "lattice rank < 2");
    return canonicalize(den, a, pb, pc);
}

Lat from_elements(const Domain& dom, const std::vector<std::pair<Rat, Rat>>& elems) {
    Rat trace(dom.quad_trace()), norm(dom.quad_norm());
    std::vector<std::pair<Rat, Rat>> span;
    span.reserve(elems.size() * 2);
    for (const auto& [x, y] : elems) {
        if (x == 0 && y == 0) continue;
        span.emplace_back(x, y);
        // w * (x + y*w) = -norm*y + (x + trace*y)*w
        span.emplace_back(-norm * y, x + trace * y);
    }
    if (span.empty()) throw DomainError(Errc::ZeroIdeal, "all generators zero");
    Int den = 1;
    for (const auto& [x, y] : span) den = lcm(lcm(den, rat_den(x)), rat_den(y));
    std::vector<Vec> rows;
    rows.reserve(span.size());
    for (const auto& [x, y] : span)
        rows.push_back(Vec{rat_num(x) * (den / rat_den(x)), rat_num(y) * (den / rat_den(y))});
    return hnf_rows(rows, den);
}

Lat mul(const Domain& dom, const Lat& lhs, const Lat& rhs) {
    const Int& trace = dom.quad_trace();
    const Int& norm = dom.quad_norm();
    // Pairwise products of the basis elements (a, 0), (b, c).
    auto prod = [&](const Int& x1, const Int& y1, const Int& x2, const Int& y2) {
        return Vec{x1 * x2 - norm * y1 * y2, x1 * y2 + x2 * y1 + trace * y1 * y2};
    };
    std::vector<Vec> rows = {
        prod(lhs.a, 0, rhs.a, 0),
        prod(lhs.a, 0, rhs.b, rhs.c),
        prod(lhs.b, lhs.c, rhs.a, 0),
        prod(lhs.b, lhs.c, rhs.b, rhs.c),
    };
    return hnf_rows(rows, lhs.den * rhs.den);
}

Lat add(const Lat& lhs, const Lat& rhs) {
    Int den = lcm(lhs.den, rhs.den);
    Int ml = den / lhs.den, mr = den / rhs.den;
    std::vector<Vec> rows = {
        Vec{lhs.a * ml, 0}, Vec{lhs.b * ml, lhs.c * ml},
        Vec{rhs.a * mr, 0}, Vec{rhs.b * mr, rhs.c * mr},
    };
    return hnf_rows(rows, den);
}

namespace {

// Kernel of the 4x2 integer matrix given by rows, as combinations of the rows.
std::vector<std::array<Int, 4>> kernel4x2(std::array<Vec, 4> m) {
    std::array<std::array<Int, 4>, 4> u{};
    for (int i = 0; i < 4; ++i) u[i][i] = 1;
    auto entry = [&](int i, int col) -> Int& { return col == 0 ? m[i].x : m[i].y; };
    int row = 0;
    for (int col = 0; col < 2 && row < 4; ++col) {
        for (;;) {
            int pivot = -1;
            for (int i = row; i < 4; ++i) {
                if (entry(i, col) == 0) continue;
                if (pivot < 0 ||
                    abs(entry(i, col)) < abs(entry(pivot, col)))
                    pivot = i;
            }
            if (pivot < 0) break;
            bool reduced_any = false;
            for (int j = row; j < 4; ++j) {
                if (j == pivot || entry(j, col) == 0) continue;
                Int q = entry(j, col) / entry(pivot, col);
                if (q != 0) {
                    m[j].x -= q * m[pivot].x;
                    m[j].y -= q * m[pivot].y;
                    for (int k = 0; k < 4; ++k) u[j][k] -= q * u[pivot][k];
                }
                if (entry(j, col) != 0) reduced_any = true;
            }
            if (!reduced_any) {
                std::swap(m[pivot], m[row]);
                std::swap(u[pivot], u[row]);
                ++row;
                break;
            }
        }
    }
    std::vector<std::array<Int, 4>> kernel;
    for (int i = row; i < 4; ++i) kernel.push_back(u[i]);
    return kernel;
}

}  // namespace

Lat intersect(const Lat& lhs, const Lat& rhs) {
    Int den = lcm(lhs.den, rhs.den);
    Int ml = den / lhs.den, mr = den / rhs.den;
    std::array<Vec, 4> rows = {
        Vec{lhs.a * ml, 0}, Vec{lhs.b * ml, lhs.c * ml},
        Vec{rhs.a * mr, 0}, Vec{rhs.b * mr, rhs.c * mr},
    };
    auto kernel = kernel4x2(rows);
    if (kernel.size() != 2)
        throw DomainError(Errc::Internal, "unexpected kernel rank in lattice intersection");
    std::vector<Vec> basis;
    for (const auto& k : kernel) {
        basis.push_back(Vec{k[0] * rows[0].x + k[1] * rows[1].x,
                            k[0] * rows[0].y + k[1] * rows[1].y});
    }
    return hnf_rows(basis, den);
}

Lat scale(const Domain& dom, const Lat& lat, const Rat& gx, const Rat& gy) {
    if (gx == 0 && gy == 0) throw DomainError(Errc::ZeroInput, "scaling by zero");
    Rat den(lat.den);
    std::vector<std::pair<Rat, Rat>> elems;
    auto push = [&](const Rat& x, const Rat& y) {
        auto [px, py] = field_mul(dom, x / den, y / den, gx, gy);
        elems.emplace_back(px, py);
    };
    push(Rat(lat.a), Rat(0));
    push(Rat(lat.b), Rat(lat.c));
    // The scaled basis spans the scaled lattice over Z already; from_elements
    // also adds w-multiples, which are in the lattice, so canonical form is
    // unchanged.
    return from_elements(dom, elems);
}

Lat colon(const Domain& dom, const Lat& lhs, const Lat& rhs) {
    Rat den(rhs.den);
    auto inv1 = field_inv(dom, Rat(rhs.a) / den, Rat(0));
    auto inv2 = field_inv(dom, Rat(rhs.b) / den, Rat(rhs.c) / den);
    Lat first = scale(dom, lhs, inv1.first, inv1.second);
    Lat second = scale(dom, lhs, inv2.first, inv2.second);
    return intersect(first, second);
}

bool member(const Lat& lat, const Rat& x, const Rat& y) {
    Rat zx = x * lat.den, zy = y * lat.den;
    if (!is_integer(zx) || !is_integer(zy)) return false;
    Int ix = rat_num(zx), iy = rat_num(zy);
    if (iy % lat.c != 0) return false;
    Int rem = ix - (iy / lat.c) * lat.b;
    return rem % lat.a == 0;
}

bool subset(const Lat& inner, const Lat& outer) {
    Rat den(inner.den);
    return member(outer, Rat(inner.a) / den, Rat(0)) &&
           member(outer, Rat(inner.b) / den, Rat(inner.c) / den);
}

bool is_stable(const Domain& dom, const Int& a, const Int& b, const Int& c) {
    if (a <= 0 || c <= 0) return false;
    if (a % c != 0 || b % c != 0) return false;
    Int alpha = a / c, beta = b / c;
    Int val = beta * beta + dom.quad_trace() * beta + dom.quad_norm();
    return val % alpha == 0;
}

Rat lat_norm(const Lat& lat) { return Rat(lat.a * lat.c) / Rat(lat.den * lat.den); }

namespace {

// Solve (2u + trace*w_coord)^2 = rhs with u = s*a + r*b, w_coord = r*c; push
// the s-solutions for this r.
void push_candidates(const Domain& dom, const Lat& lat, const Int& r, const Int& rhs,
                     std::vector<std::pair<Rat, Rat>>& out) {
    auto root = exact_sqrt(rhs);
    if (!root) return;
    Int w_coord = r * lat.c;
    for (int sign = 0; sign < (*root == 0 ? 1 : 2); ++sign) {
        Int x_val = sign == 0 ? *root : -*root;
        Int two_u = x_val - dom.quad_trace() * w_coord;
        if (two_u % 2 != 0) continue;
        Int u = two_u / 2;
        Int num = u - r * lat.b;
        if (num % lat.a != 0) continue;
        Int s = num / lat.a;
        if (r == 0 && s <= 0) continue;  // g and -g are unit multiples
        Rat den(lat.den);
        out.emplace_back(Rat(s * lat.a + r * lat.b) / den, Rat(w_coord) / den);
    }
}

}  // namespace

std::vector<std::pair<Rat, Rat>> norm_elements(const Domain& dom, const Lat& lat,
                                               const Rat& target_abs_norm) {
    std::vector<std::pair<Rat, Rat>> out;
    if (target_abs_norm <= 0) return out;
    Rat scaled = target_abs_norm * lat.den * lat.den;
    if (!is_integer(scaled)) return out;
    Int m = rat_num(scaled);
    const Int& disc = dom.quad_disc();
    if (dom.quad_imaginary()) {
        // 4m = (2u + trace*w)^2 + |disc| w^2, so w^2 <= 4m/|disc|.
        Int adisc = -disc;
        Int wmax = isqrt(Int(4 * m / adisc));
        Int rmax = wmax / lat.c + 1;
        for (Int r = 0; r <= rmax; ++r) {
            Int w_coord = r * lat.c;
            Int rhs = 4 * m - adisc * w_coord * w_coord;
            if (rhs < 0) break;
            push_candidates(dom, lat, r, rhs, out);
        }
    } else {
        // Normalize by the fundamental unit: some generator has
        // |w-coordinate| <= sqrt(m) (eps + 1) / sqrt(disc).
        auto [ex, ey] = dom.fundamental_unit();
        Int eps_bound = ex + (ey * (dom.quad_trace() + isqrt(disc) + 1)) / 2 + 2;
        if (eps_bound < 2) eps_bound = 2;
        Int sm = isqrt(m) + 1;
        Int sd = isqrt(disc);
        if (sd < 1) sd = 1;
        Int rmax = (sm * (eps_bound + 1)) / (lat.c * sd) + 2;
        for (Int r = 0; r <= rmax; ++r) {
            Int w_coord = r * lat.c;
            Int base = disc * w_coord * w_coord;
            push_candidates(dom, lat, r, Int(base + 4 * m), out);  // N(g) = +m
            push_candidates(dom, lat, r, Int(base - 4 * m), out);  // N(g) = -m
        }
    }
    return out;
}

}  // namespace starideal::quad
