#pragma once

#include "starideal/domain.hpp"

namespace starideal {

/// The four closure operations on nonzero fractional ideals.
enum class StarOp { d, v, t, w };

inline constexpr StarOp kAllStars[] = {StarOp::d, StarOp::v, StarOp::t, StarOp::w};

char star_char(StarOp star);
StarOp parse_star(char c);

Ideal closure(const DomainHandle& dom, const Ideal& ideal, StarOp star);
Ideal star_product(const DomainHandle& dom, const Ideal& lhs, const Ideal& rhs, StarOp star);
Ideal star_sum(const DomainHandle& dom, const Ideal& lhs, const Ideal& rhs, StarOp star);
bool is_star_ideal(const DomainHandle& dom, const Ideal& ideal, StarOp star);
bool is_star_invertible(const DomainHandle& dom, const Ideal& ideal, StarOp star);
bool is_star_comaximal(const DomainHandle& dom, const Ideal& lhs, const Ideal& rhs, StarOp star);

}  // namespace starideal
