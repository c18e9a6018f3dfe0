#pragma once

// Chain-condition verdicts for groupoid algebras, plus an independent
// radical computation used to cross-check the semisimplicity verdict.
//
// For a groupoid with finitely many orbits O_i of size n_i and isotropy G_i,
// R𝒢 ≅ ∏ M_{n_i}(R G_i), so
//   Noetherian  iff every R G_i is Noetherian,
//   Artinian    iff R is Artinian and every G_i is finite (Connell),
//   semisimple  iff every G_i is finite and R is a finite product of fields
//               whose characteristics divide no |G_i| (Maschke).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ampalg/block_matrix.hpp"
#include "ampalg/groupoid.hpp"
#include "ampalg/ring.hpp"

namespace ampalg {

enum class Citation {
  MatrixDecomposition,  // R𝒢 ≅ ∏ M_{n_i}(R G_i) for finitely many objects
  NoetherianClause,     // Noetherian iff finitely many objects and each R G_i Noetherian
  ArtinianClause,       // Artinian iff 𝒢 finite and R Artinian
  SemisimpleClause,     // semisimple iff 𝒢 finite and R a product of good fields
  HilbertBasis,         // R[x, x⁻¹] Noetherian iff R Noetherian
  Connell,              // R G Artinian iff R Artinian and G finite
  Maschke,              // R G semisimple iff R semisimple and |G| invertible
  GraphBoundary,        // ∂E finite iff E finite with condition (NE)
  GraphIsotropy,        // isotropy trivial off lassos, Z on lassos
  SemigroupGroupoid,    // RS ≅ R𝒢(S), isotropy = maximal subgroups
};

/// Short stable tag, e.g. `Connell`, `Hilbert-basis`, `noetherian-clause`.
std::string citation_tag(Citation c);

enum class Property { Noetherian, Artinian, Semisimple, Shape };

std::string to_string(Property p);

struct Justification {
  Property property;
  Citation rule;
  std::string detail;
};

struct ShapeEntry {
  std::size_t size = 0;
  IsotropyDescriptor isotropy = IsotropyDescriptor::integers();
  std::string entry_ring;
};

struct Verdict {
  bool noetherian = false;
  bool artinian = false;
  bool semisimple = false;
  /// Empty when the algebra is not a finite product of matrix algebras
  /// (infinite unit space).
  std::vector<ShapeEntry> decomposition_shape;
  std::vector<Justification> justification;

  /// `M_2(Q) x M_1(Q[C_2])`, or `none`.
  std::string shape_string() const;
  std::vector<Citation> citations(Property p) const;
};

std::vector<ShapeEntry> shape_entries(const StructuredGroupoid& sg, const RingDescriptor& r);

/// Verdicts for R𝒢 from the orbit/isotropy summary. Throws
/// std::invalid_argument for an empty summary.
Verdict verdicts(const StructuredGroupoid& sg, const RingDescriptor& r);

/// A finite-dimensional algebra with a basis closed under multiplication up
/// to zero: b_i b_j is either some b_k or 0. Covers groupoid algebras (arrow
/// basis) and semigroup algebras (element basis).
struct BasisAlgebra {
  std::vector<std::string> names;
  /// product[i * dim + j] = k for b_i b_j = b_k, or -1 for zero.
  std::vector<int> product;

  std::size_t dimension() const { return names.size(); }
  int multiply(std::size_t i, std::size_t j) const { return product[i * dimension() + j]; }
};

BasisAlgebra basis_algebra(const FiniteGroupoid& g);

struct RadicalResult {
  bool semisimple = false;
  /// Coefficients of a nonzero radical element in the basis, when one exists.
  std::vector<RingElement> witness;
  /// `b_0 + 2*b_3`, or empty.
  std::string witness_text;
  /// Dimension of the radical when computed (characteristic 0 only).
  std::optional<std::size_t> radical_dimension;
};

/// Search budget for the characteristic-p oracle.
inline constexpr std::size_t kOracleMaxDimensionCharP = 12;
inline constexpr std::size_t kOracleMaxDimensionChar0 = 64;
inline constexpr std::uint64_t kOracleMaxCandidates = std::uint64_t{1} << 21;

/// Jacobson radical of a basis algebra over Q or GF(p), computed without
/// reference to orbits or isotropy:
///   - over Q, as the null space of the trace form (a, b) ↦ tr(L_{ab});
///   - over GF(p), by exhaustive search for a nonzero a whose right ideal
///     aR + aA is nilpotent, in a fixed enumeration order.
/// Throws InputError for other rings and OracleBudgetError past the budget.
RadicalResult radical_oracle(const BasisAlgebra& algebra, const RingDescriptor& r);
RadicalResult radical_oracle(const FiniteGroupoid& g, const RingDescriptor& r);

}  // namespace ampalg
