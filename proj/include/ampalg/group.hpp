#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ampalg/ring.hpp"

namespace ampalg {

/// A finite group given by its full multiplication table. Construction
/// verifies the group axioms; element 0 is always the identity.
class GroupTable {
 public:
  /// `table[a * n + b]` is the index of a*b. Throws InputError listing the
  /// first violated axiom if the table is not a group.
  GroupTable(std::vector<std::string> names, std::vector<std::size_t> table);

  static GroupTable trivial();
  static GroupTable cyclic(std::size_t n);
  /// Symmetric group on n points, elements as permutations in lexicographic order.
  static GroupTable symmetric(std::size_t n);
  static GroupTable klein_four();
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

  /// All axiom failures of an arbitrary table; empty iff it is a group.
  static std::vector<std::string> axiom_violations(std::size_t n, const std::vector<std::size_t>& table);

  std::size_t order() const { return names_.size(); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  static constexpr std::size_t identity() { return 0; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& table() const { return table_; }

  bool is_abelian() const;
  std::size_t element_order(std::size_t a) const;
  /// Short isomorphism-type label: 1, C_n, C_2xC_2, S_3, or G_n when unrecognised.
  std::string structure_name() const;

  /// Same multiplication table under the given relabelling (new index -> old index).
  bool isomorphic_via(const GroupTable& other, const std::vector<std::size_t>& map) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

/// The isotropy group attached to an orbit: either a finite group table or
/// the infinite cyclic group Z.
class IsotropyDescriptor {
 public:
  static IsotropyDescriptor finite(GroupTable table);
  static IsotropyDescriptor finite(std::shared_ptr<const GroupTable> table);
  static IsotropyDescriptor integers() { return IsotropyDescriptor(nullptr); }

  bool is_finite() const { return table_ != nullptr; }
  bool is_integers() const { return table_ == nullptr; }
  /// Group order, nullopt for Z.
  std::optional<std::size_t> order() const;
  const GroupTable& table() const;

  /// `1`, `C_3`, ..., or `Z`.
  std::string to_string() const;

  friend bool operator==(const IsotropyDescriptor& a, const IsotropyDescriptor& b);
  friend bool operator!=(const IsotropyDescriptor& a, const IsotropyDescriptor& b) { return !(a == b); }

 private:
  explicit IsotropyDescriptor(std::shared_ptr<const GroupTable> t) : table_(std::move(t)) {}
  std::shared_ptr<const GroupTable> table_;
};

/// One orbit of a groupoid, summarised: its size and isotropy group.
struct OrbitSummary {
  std::size_t size = 0;
  IsotropyDescriptor isotropy = IsotropyDescriptor::integers();
};

/// Entry ring of the block attached to an orbit: `R`, `R[C_3]`, `Laurent(R)`.
std::string group_ring_name(const IsotropyDescriptor& g, const RingDescriptor& r);

/// Finitely supported R-valued function on a group. For finite groups keys are
/// element indices; for Z keys are exponents, so the element is literally a
/// Laurent polynomial in R[x, x^-1].
class GroupAlgebraElement {
 public:
  using Terms = std::map<std::int64_t, RingElement>;

  GroupAlgebraElement(IsotropyDescriptor group, RingDescriptor ring) : group_(std::move(group)), ring_(std::move(ring)) {}

  static GroupAlgebraElement zero(const IsotropyDescriptor& g, const RingDescriptor& r) { return {g, r}; }
  static GroupAlgebraElement one(const IsotropyDescriptor& g, const RingDescriptor& r);
  /// coeff * delta_key.
  static GroupAlgebraElement basis(const IsotropyDescriptor& g, const RingDescriptor& r, std::int64_t key);
  static GroupAlgebraElement term(const IsotropyDescriptor& g, const RingElement& coeff, std::int64_t key);

  const IsotropyDescriptor& group() const { return group_; }
  const RingDescriptor& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  RingElement coefficient(std::int64_t key) const;
  /// Adds c * delta_key, dropping the term if it cancels.
  void add_term(std::int64_t key, const RingElement& c);

  /// For Z isotropy over a non-Laurent ring: the same value as an element of Laurent(R).
  RingElement to_laurent() const;
  static GroupAlgebraElement from_laurent(const RingElement& p);

  GroupAlgebraElement operator-() const;
  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  /// Group convolution: (ab)(g) = sum over hk = g of a(h) b(k).
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& b);

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_compatible(const GroupAlgebraElement& other) const;

  IsotropyDescriptor group_;
  RingDescriptor ring_;
  Terms terms_;
};

}  // namespace ampalg
