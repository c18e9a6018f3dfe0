#pragma once

// Finite discrete groupoids given by explicit composition tables.
//
// Text format (line based, `#` starts a comment):
//
//   objects: a b
//   arrow f : a -> b
//   identity a = id_a
//   compose f g = h      # f after g; requires dom(f) = cod(g)
//   inverse f = finv
//
// Every arrow, identity and inverse is declared explicitly, and a `compose`
// line is required for every composable pair. Missing entries are reported by
// validate(), not by the parser.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ampalg/group.hpp"

namespace ampalg {

struct ArrowInfo {
  std::string name;
  std::size_t dom = 0;
  std::size_t cod = 0;
};

class FiniteGroupoid {
 public:
  std::size_t add_object(const std::string& name);
  std::size_t add_arrow(const std::string& name, std::size_t dom, std::size_t cod);
  void set_identity(std::size_t object, std::size_t arrow);
  /// Records f∘g = h. Throws InputError unless dom(f) = cod(g).
  void set_composite(std::size_t f, std::size_t g, std::size_t h);
  void set_inverse(std::size_t f, std::size_t finv);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& object_name(std::size_t x) const { return objects_[x]; }
  const ArrowInfo& arrow(std::size_t a) const { return arrows_[a]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<ArrowInfo>& arrows() const { return arrows_; }

  std::optional<std::size_t> find_object(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view name) const;
  /// Like find_*, but throws InputError for unknown names.
  std::size_t object_index(std::string_view name) const;
  std::size_t arrow_index(std::string_view name) const;

  std::optional<std::size_t> identity(std::size_t object) const { return identities_[object]; }
  /// f∘g when recorded.
  std::optional<std::size_t> composite(std::size_t f, std::size_t g) const;
  std::optional<std::size_t> inverse(std::size_t f) const { return inverses_[f]; }

  /// Object indices sorted by name.
  std::vector<std::size_t> objects_by_name() const;
  /// Arrow indices sorted by name.
  std::vector<std::size_t> arrows_by_name() const;

 private:
  std::vector<std::string> objects_;
  std::vector<ArrowInfo> arrows_;
  std::unordered_map<std::string, std::size_t> object_lookup_;
  std::unordered_map<std::string, std::size_t> arrow_lookup_;
  std::vector<std::optional<std::size_t>> identities_;
  std::vector<std::optional<std::size_t>> inverses_;
  std::unordered_map<std::uint64_t, std::size_t> composites_;  // key (f << 32) | g
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Parses the groupoid text format. The result is structurally well formed
/// (every name declared, every compose line typed correctly); the groupoid
/// axioms are not checked here.
FiniteGroupoid parse_groupoid(std::string_view text);

/// Renders a groupoid in the text format accepted by parse_groupoid.
std::string groupoid_to_text(const FiniteGroupoid& g);

enum class AxiomKind {
  MissingIdentity,
  IdentityTyping,
  MissingComposite,
  CompositeTyping,
  Associativity,
  IdentityLaw,
  MissingInverse,
  InverseTyping,
  InverseLaw,
};

struct AxiomViolation {
  AxiomKind kind;
  /// Arrow or object names forming the witness tuple.
  std::vector<std::string> witness;
  std::string message;
};

std::string to_string(AxiomKind k);

/// Exhaustive check of the groupoid axioms; every failure is returned with a
/// witness tuple. Empty result means the groupoid is valid.
std::vector<AxiomViolation> validate(const FiniteGroupoid& g);

/// Throws InputError carrying the first few violations if g is invalid.
void require_valid(const FiniteGroupoid& g);

/// An orbit with its frame: basepoint and one connecting arrow x -> y per member.
struct Orbit {
  /// Member objects in name order; this order indexes matrix rows and columns.
  std::vector<std::size_t> members;
  std::size_t basepoint = 0;
  /// connecting[k] is an arrow basepoint -> members[k].
  std::vector<std::size_t> connecting;

  std::size_t size() const { return members.size(); }
  /// Position of an object in `members`, if present.
  std::optional<std::size_t> position(std::size_t object) const;
};

/// Orbits ordered by basepoint name. The basepoint is the least member name;
/// connecting arrows come from a breadth-first search that visits arrows in
/// name order, composing as it goes.
std::vector<Orbit> orbits(const FiniteGroupoid& g);

struct IsotropyGroup {
  std::size_t object = 0;
  /// Group element index -> arrow index; element 0 is the identity arrow,
  /// the rest follow in arrow-name order.
  std::vector<std::size_t> arrows;
  std::shared_ptr<const GroupTable> table;

  std::optional<std::size_t> element_of(std::size_t arrow) const;
};

/// Loops at x with the induced table; the group axioms are re-verified.
IsotropyGroup isotropy(const FiniteGroupoid& g, std::size_t x);

/// Checks that h ↦ g_y⁻¹ h g_y maps the isotropy group at every member y
/// isomorphically onto the basepoint's. Returns the members where it fails.
std::vector<std::string> conjugation_failures(const FiniteGroupoid& g, const Orbit& orbit);

/// Orbit-level summary: the data the chain-condition verdicts depend on.
struct StructuredGroupoid {
  std::vector<OrbitSummary> orbits;

  /// sum_i n_i^2 |G_i|, nullopt when some isotropy group is Z.
  std::optional<std::size_t> arrow_count() const;
};

StructuredGroupoid structured_from_finite(const FiniteGroupoid& g);

}  // namespace ampalg
