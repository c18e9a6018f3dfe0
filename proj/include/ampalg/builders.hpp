#pragma once

// Constructors for standard finite groupoids. All results carry complete
// identity, composition and inverse tables and pass validate().

#include <cstddef>
#include <string>
#include <vector>

#include "ampalg/group.hpp"
#include "ampalg/groupoid.hpp"

namespace ampalg {

/// Pair groupoid on n objects `a`, `b`, ...: exactly one arrow y -> z for
/// every pair, named `id_y` on the diagonal and `f_yz` elsewhere.
FiniteGroupoid pair_groupoid(std::size_t n);

/// A group as a one-object groupoid; the object is `o` and arrows carry the
/// group's element names.
FiniteGroupoid group_groupoid(const GroupTable& group);

/// Cartesian product; object and arrow names are joined with `|`.
FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Disjoint union; names are prefixed with `left_prefix` / `right_prefix`.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b, const std::string& left_prefix = "L.",
                              const std::string& right_prefix = "R.");

/// Action groupoid of a group acting on points 0..m-1. `action[g][x]` is g·x
/// and must be a left action. Objects are `x0`, `x1`, ...; the arrow (g, x)
/// goes x -> g·x and is named `<g>@x<k>`.
FiniteGroupoid action_groupoid(const GroupTable& group, const std::vector<std::vector<std::size_t>>& action);

}  // namespace ampalg
