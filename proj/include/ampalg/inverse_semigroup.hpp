#pragma once

// Finite inverse semigroups and the isomorphism RS ≅ R𝒢(S) onto the algebra
// of the underlying groupoid.
//
// Text format:
//
//   elements: 0 a b 1
//   row 0: 0 0 0 0
//   row a: 0 a ...      # products a*x for x in element order
//
// One `row` line per element, in any order.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ampalg/group.hpp"
#include "ampalg/groupoid.hpp"
#include "ampalg/groupoid_algebra.hpp"
#include "ampalg/ring.hpp"
#include "ampalg/verdicts.hpp"
#include "ampalg/verification.hpp"

namespace ampalg {

class InverseSemigroup {
 public:
  /// table[s * n + t] = st. Throws InputError if the table is not
  /// associative or some element lacks a unique pseudo-inverse.
  InverseSemigroup(std::vector<std::string> names, std::vector<std::size_t> table);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t s) const { return names_[s]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t multiply(std::size_t s, std::size_t t) const { return table_[s * size() + t]; }
  /// The unique t with sts = s and tst = t.
  std::size_t star(std::size_t s) const { return star_[s]; }
  std::optional<std::size_t> find(std::string_view name) const;

  bool is_idempotent(std::size_t s) const { return multiply(s, s) == s; }
  /// Idempotents in element order.
  std::vector<std::size_t> idempotents() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> star_;
};

InverseSemigroup parse_isg(std::string_view text);
std::string isg_to_text(const InverseSemigroup& s);

/// Partial bijections of {0, ..., n-1}, composed as functions (st)(x) = s(t(x)).
/// Element names list images, `-` for undefined: I₂ = {--, -0, -1, 0-, 01, 1-, 10}.
InverseSemigroup symmetric_inverse_monoid(std::size_t n);
/// The chain 0 < 1 < ... < n-1 under min.
InverseSemigroup chain_semilattice(std::size_t n);
InverseSemigroup group_semigroup(const GroupTable& g);

struct SemilatticeOrder {
  std::vector<std::size_t> idempotents;
  /// meet[i * m + j] indexes into `idempotents`.
  std::vector<std::size_t> meet;
  bool leq(std::size_t i, std::size_t j) const { return meet[i * idempotents.size() + j] == i; }
};

/// Throws VerificationError if E(S) is not a commutative band.
SemilatticeOrder semilattice(const InverseSemigroup& s);

/// t ≤ s iff t = (tt*)s.
bool natural_leq(const InverseSemigroup& s, std::size_t t, std::size_t u);
/// t ≤ s iff t = es for some idempotent e, by search.
bool natural_leq_by_search(const InverseSemigroup& s, std::size_t t, std::size_t u);

struct UnderlyingGroupoid {
  /// Arrow i is element i, from s*s to ss*; objects are the idempotents.
  FiniteGroupoid groupoid;
  /// Element index of each object.
  std::vector<std::size_t> object_element;
};

/// Throws VerificationError if the construction fails the groupoid axioms.
UnderlyingGroupoid underlying_groupoid(const InverseSemigroup& s);

struct MaximalSubgroup {
  std::size_t idempotent = 0;
  /// The idempotent first, then the other units of eSe in name order.
  std::vector<std::size_t> elements;
  std::shared_ptr<const GroupTable> table;
};

/// Unit group of eSe for every idempotent e, by brute-force search in eSe.
std::vector<MaximalSubgroup> maximal_subgroups(const InverseSemigroup& s);

BasisAlgebra basis_algebra(const InverseSemigroup& s);

struct SemigroupAlgebraIso {
  std::shared_ptr<const FiniteGroupoid> groupoid;
  /// image[s] = Σ_{t ≤ s} [t].
  std::vector<AlgebraElement> image;
  /// Determinant of the 0/1 transition matrix T[s][t] = [t ≤ s].
  mpz_class transition_determinant;
  VerificationReport report;
};

/// Largest semigroup accepted by semigroup_algebra_iso.
inline constexpr std::size_t kIsoMaxElements = 64;

/// Builds s ↦ Σ_{t ≤ s} [t] and checks it on all pairs, together with the
/// order cross-check, isotropy = maximal subgroups, the transition
/// determinant, and the composite with the matrix decomposition.
SemigroupAlgebraIso semigroup_algebra_iso(const InverseSemigroup& s, const RingDescriptor& r);

/// verdicts() on the underlying groupoid, citing the semigroup reduction.
Verdict isg_verdicts(const InverseSemigroup& s, const RingDescriptor& r);

namespace isg_labels {
inline constexpr const char* kOrderRoutes = "natural order routes agree";
inline constexpr const char* kIsotropy = "isotropy = maximal subgroups";
inline constexpr const char* kBijection = "arrows = elements";
inline constexpr const char* kMultiplicative = "semigroup multiplicativity";
inline constexpr const char* kUnimodular = "transition unimodular";
inline constexpr const char* kComposite = "composite with decomposition";
}  // namespace isg_labels

}  // namespace ampalg
