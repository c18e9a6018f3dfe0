#pragma once

// The convolution algebra R𝒢 of a finite groupoid and its explicit
// isomorphism onto a product of matrix algebras over isotropy group algebras.
//
// Given a frame (basepoint x_i and arrows g_y : x_i -> y for every y in the
// orbit O_i), an arrow g : y -> z is sent to (g_z⁻¹ g g_y) E_{zy} in
// M_{n_i}(R G_{x_i}); the inverse sends a E_{zy} to the arrow g_z a g_y⁻¹.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ampalg/block_matrix.hpp"
#include "ampalg/groupoid.hpp"
#include "ampalg/ring.hpp"
#include "ampalg/verification.hpp"

namespace ampalg {

/// Finitely supported function from arrows to R.
class AlgebraElement {
 public:
  AlgebraElement(GroupoidPtr groupoid, RingDescriptor ring);

  /// delta_arrow.
  static AlgebraElement basis(GroupoidPtr groupoid, const RingDescriptor& ring, std::size_t arrow);
  /// Characteristic function of a set of arrows.
  static AlgebraElement characteristic(GroupoidPtr groupoid, const RingDescriptor& ring, const std::vector<std::size_t>& arrows);
  /// Characteristic function of the identity arrows of the given objects.
  static AlgebraElement units_of(GroupoidPtr groupoid, const RingDescriptor& ring, const std::vector<std::size_t>& objects);
  /// chi of the whole unit space: the multiplicative identity.
  static AlgebraElement unit(GroupoidPtr groupoid, const RingDescriptor& ring);

  const GroupoidPtr& groupoid() const { return groupoid_; }
  const RingDescriptor& ring() const { return ring_; }
  const std::map<std::size_t, RingElement>& terms() const { return terms_; }

  RingElement coefficient(std::size_t arrow) const;
  void add_term(std::size_t arrow, const RingElement& c);
  bool is_zero() const { return terms_.empty(); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const RingElement& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  /// `3*f + (-1)*id_a`, terms in arrow-name order.
  std::string to_string() const;

 private:
  void check_compatible(const AlgebraElement& other) const;

  GroupoidPtr groupoid_;
  RingDescriptor ring_;
  std::map<std::size_t, RingElement> terms_;
};

/// Parses `3*f + (-1)*id_a + 1/2*g + h`. Coefficients use parse_ring_literal.
AlgebraElement parse_algebra_element(GroupoidPtr groupoid, const RingDescriptor& ring, std::string_view text);

/// (f1 ∗ f2)(g) = Σ_{d(h) = d(g)} f1(g h⁻¹) f2(h).
AlgebraElement convolve(const AlgebraElement& f1, const AlgebraElement& f2);

struct Decomposition {
  GroupoidPtr groupoid;
  RingDescriptor ring = RingDescriptor::integers();
  std::vector<Orbit> frames;
  /// Isotropy group at each frame's basepoint.
  std::vector<IsotropyGroup> isotropy;
  StructuredGroupoid structured;

  BlockShape shape() const { return structured.orbits; }
  /// (orbit index, row/column position) of an object, if some frame contains it.
  std::optional<std::pair<std::size_t, std::size_t>> locate(std::size_t object) const;
};

/// Validates the groupoid, then builds orbits, frames and isotropy tables.
/// Throws InputError when the groupoid is invalid.
Decomposition decompose(GroupoidPtr groupoid, const RingDescriptor& ring);

/// Same, but with caller-supplied frames that are used as given. Frames that
/// are not coherent make phi fail to be multiplicative, which
/// verify_isomorphism reports.
Decomposition decompose_with_frames(GroupoidPtr groupoid, const RingDescriptor& ring, std::vector<Orbit> frames);

/// Image of a single arrow as (block, row, col, group element); nullopt when
/// the frame does not carry the arrow to a basepoint loop.
std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> phi_arrow(const Decomposition& d, std::size_t arrow);

BlockMatrix phi(const Decomposition& d, const AlgebraElement& f);
AlgebraElement phi_inv(const Decomposition& d, const BlockMatrix& m);

/// Exhaustive check that phi is a unital algebra isomorphism: multiplicative
/// on every pair of basis arrows, unit to identity, and phi_inv a two-sided
/// inverse on basis arrows and on every matrix unit a E_{zy}.
VerificationReport verify_isomorphism(const Decomposition& d);

namespace check_labels {
inline constexpr const char* kFrame = "frame coherence";
inline constexpr const char* kCardinality = "cardinality";
inline constexpr const char* kMultiplicative = "multiplicativity";
inline constexpr const char* kUnit = "unit";
inline constexpr const char* kLeftInverse = "phi_inv(phi(arrow))";
inline constexpr const char* kRightInverse = "phi(phi_inv(unit))";
}  // namespace check_labels

}  // namespace ampalg
