#pragma once

// Independent reference computations used to check the library. None of
// these call into the code paths they are used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ampalg/groupoid.hpp"
#include "ampalg/groupoid_algebra.hpp"
#include "ampalg/leavitt.hpp"
#include "ampalg/ring.hpp"
#include "ampalg/verdicts.hpp"

namespace testsupport {

/// Groupoid axioms checked straight from the stored tables.
bool brute_force_is_groupoid(const ampalg::FiniteGroupoid& g);

/// Product from the basis rule δ_f δ_h = δ_{f∘h} if dom f = cod h, else 0.
ampalg::AlgebraElement basis_rule_product(const ampalg::AlgebraElement& a, const ampalg::AlgebraElement& b);

/// Random element with `terms` nonzero-ish coefficients in [-3, 3].
ampalg::AlgebraElement random_element(const ampalg::GroupoidPtr& g, const ampalg::RingDescriptor& r, std::mt19937& rng,
                                      std::size_t terms);

/// Arrows per orbit, from a union-find over arrows alone: (orbit size, loops at one object).
std::vector<std::pair<std::size_t, std::size_t>> orbit_census(const ampalg::FiniteGroupoid& g);

/// For each sink t, the number of finite paths ending at t (the empty path included),
/// from powers of the adjacency matrix.
std::vector<mpz_class> paths_to_sinks(const ampalg::Graph& g);

/// Number of distinct length-N prefixes of boundary paths: all paths of
/// length exactly N plus all shorter paths ending at a sink.
mpz_class boundary_prefix_count(const ampalg::Graph& g, std::size_t n);

/// Edge sequence of a boundary path, truncated to `length` (finite paths are
/// returned whole).
std::vector<std::size_t> expand(const ampalg::Graph& g, const std::vector<ampalg::Cycle>& cycles,
                                const ampalg::BoundaryPath& p, std::size_t length);

/// Decides (η, k, γ) by searching for α, β, δ with η = αδ, γ = βδ,
/// k = |α| - |β| on finite windows.
bool truncated_is_arrow(const ampalg::Graph& g, const std::vector<ampalg::Cycle>& cycles, const ampalg::BoundaryPath& eta,
                        std::int64_t k, const ampalg::BoundaryPath& gamma);

/// Dense check that every element of span(a·A + a·R) is nilpotent, i.e. that a
/// lies in the radical. Works over GF(p) for a small basis algebra.
bool generates_nilpotent_right_ideal(const ampalg::BasisAlgebra& alg, const std::vector<std::int64_t>& a, std::int64_t p);

}  // namespace testsupport
