#include "starideal/star.hpp"

#include "quad_lattice.hpp"

namespace starideal {

char star_char(StarOp star) {
    switch (star) {
        case StarOp::d: return 'd';
        case StarOp::v: return 'v';
        case StarOp::t: return 't';
        case StarOp::w: return 'w';
    }
    return '?';
}

StarOp parse_star(char c) {
    switch (c) {
        case 'd': return StarOp::d;
        case 'v': return StarOp::v;
        case 't': return StarOp::t;
        case 'w': return StarOp::w;
    }
    throw DomainError(Errc::ParseError, std::string("unknown star operation '") + c + "'");
}

namespace {

Ideal v_closure(const DomainHandle& dom, const Ideal& ideal) {
    return ideal_colon(unit_ideal(dom), ideal_colon(unit_ideal(dom), ideal));
}

Ideal w_closure(const DomainHandle& dom, const Ideal& ideal) {
    if (dom->backend() == Backend::KrullMonoid) return ideal;
    // Scale fractional inputs to integral ones; legal by the principal-scaling
    // axiom.
    if (!ideal.is_integral()) {
        Element den = Element::from_omega_coords(dom, Rat(ideal.den()), Rat(0));
        Ideal integral = ideal_scale(ideal, den);
        Ideal closed = w_closure(dom, integral);
        auto [ix, iy] = den.omega_coords();
        auto inv = quad::field_inv(*dom, ix, iy);
        return ideal_scale(closed, Element::from_omega_coords(dom, inv.first, inv.second));
    }
    if (ideal.is_unit_ideal()) return ideal;
    auto maximals = maximal_ideals_containing(dom, ideal, StarOp::t);
    if (maximals.empty()) return unit_ideal(dom);
    Ideal acc = local_contract(dom, ideal, maximals.front());
    for (std::size_t i = 1; i < maximals.size(); ++i)
        acc = ideal_intersect(acc, local_contract(dom, ideal, maximals[i]));
    return acc;
}

}  // namespace

Ideal closure(const DomainHandle& dom, const Ideal& ideal, StarOp star) {
    if (!ideal.domain()->same_domain(*dom))
        throw DomainError(Errc::MixedDomains, "ideal from another domain");
    if (dom->backend() == Backend::KrullMonoid) return ideal;  // divisors are closed
    switch (star) {
        case StarOp::d:
            return ideal;
        case StarOp::v:
            return v_closure(dom, ideal);
        case StarOp::t:
            // Every ideal handled by the backends is finitely generated, so
            // the finite-type supremum collapses to the v-closure.
            return v_closure(dom, ideal);
        case StarOp::w:
            return w_closure(dom, ideal);
    }
    throw DomainError(Errc::Internal, "unreachable star tag");
}

Ideal star_product(const DomainHandle& dom, const Ideal& lhs, const Ideal& rhs, StarOp star) {
    return closure(dom, ideal_product(lhs, rhs), star);
}

Ideal star_sum(const DomainHandle& dom, const Ideal& lhs, const Ideal& rhs, StarOp star) {
    return closure(dom, ideal_sum(lhs, rhs), star);
}

bool is_star_ideal(const DomainHandle& dom, const Ideal& ideal, StarOp star) {
    return closure(dom, ideal, star) == ideal;
}

bool is_star_invertible(const DomainHandle& dom, const Ideal& ideal, StarOp star) {
    Ideal prod = ideal_product(ideal, ideal_inverse(ideal));
    return closure(dom, prod, star) == unit_ideal(dom);
}

bool is_star_comaximal(const DomainHandle& dom, const Ideal& lhs, const Ideal& rhs, StarOp star) {
    if (!lhs.is_integral() || !rhs.is_integral())
        throw DomainError(Errc::NotIntegral, "comaximality is about integral ideals");
    bool by_sum = star_sum(dom, lhs, rhs, star) == unit_ideal(dom);
    // Cross-validation: comaximal exactly when no maximal star-ideal contains
    // both.
    bool shared = false;
    if (!lhs.is_unit_ideal() && !rhs.is_unit_ideal()) {
        auto left = maximal_ideals_containing(dom, lhs, star);
        auto right = maximal_ideals_containing(dom, rhs, star);
        for (const MaxIdeal& l : left) {
            for (const MaxIdeal& r : right)
                if (l == r) { shared = true; break; }
            if (shared) break;
        }
    }
    if (by_sum == shared)
        throw DomainError(Errc::Internal, "comaximality cross-check failed");
    return by_sum;
}

}  // namespace starideal
