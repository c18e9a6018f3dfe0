#include "ampalg/verdicts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ampalg/errors.hpp"

namespace ampalg {

std::string citation_tag(Citation c) {
  switch (c) {
    case Citation::MatrixDecomposition: return "matrix-decomposition";
    case Citation::NoetherianClause: return "noetherian-clause";
    case Citation::ArtinianClause: return "artinian-clause";
    case Citation::SemisimpleClause: return "semisimple-clause";
    case Citation::HilbertBasis: return "Hilbert-basis";
    case Citation::Connell: return "Connell";
    case Citation::Maschke: return "Maschke";
    case Citation::GraphBoundary: return "graph-boundary";
    case Citation::GraphIsotropy: return "graph-isotropy";
    case Citation::SemigroupGroupoid: return "semigroup-groupoid";
  }
  return "unknown";
}

std::string to_string(Property p) {
  switch (p) {
    case Property::Noetherian: return "noetherian";
    case Property::Artinian: return "artinian";
    case Property::Semisimple: return "semisimple";
    case Property::Shape: return "shape";
  }
  return "unknown";
}

std::string Verdict::shape_string() const {
  if (decomposition_shape.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < decomposition_shape.size(); ++i) {
    if (i) out += " x ";
    out += "M_" + std::to_string(decomposition_shape[i].size) + "(" + decomposition_shape[i].entry_ring + ")";
  }
  return out;
}

std::vector<Citation> Verdict::citations(Property p) const {
  std::vector<Citation> out;
  for (const auto& j : justification) {
    if (j.property == p && std::find(out.begin(), out.end(), j.rule) == out.end()) out.push_back(j.rule);
  }
  return out;
}

std::vector<ShapeEntry> shape_entries(const StructuredGroupoid& sg, const RingDescriptor& r) {
  std::vector<ShapeEntry> out;
  for (const auto& o : sg.orbits) out.push_back({o.size, o.isotropy, group_ring_name(o.isotropy, r)});
  return out;
}

Verdict verdicts(const StructuredGroupoid& sg, const RingDescriptor& r) {
  if (sg.orbits.empty()) throw std::invalid_argument("verdicts need at least one orbit");
  const RingPredicates rp = ring_predicates(r);
  const std::string rs = r.to_string();
  Verdict v;
  v.decomposition_shape = shape_entries(sg, r);

  bool all_finite = true;
  std::vector<std::size_t> orders;
  for (const auto& o : sg.orbits) {
    if (o.isotropy.is_finite()) {
      orders.push_back(*o.isotropy.order());
    } else {
      all_finite = false;
    }
  }

  v.justification.push_back({Property::Shape, Citation::MatrixDecomposition,
                             std::to_string(sg.orbits.size()) + " orbit(s), finitely many objects"});

  // Noetherian: each block ring R G_i must be Noetherian.
  v.noetherian = rp.noetherian;
  v.justification.push_back({Property::Noetherian, Citation::NoetherianClause,
                             "finitely many objects; each R G_i Noetherian iff " + rs + " is"});
  if (!all_finite) {
    v.justification.push_back({Property::Noetherian, Citation::HilbertBasis,
                               "Laurent(" + rs + ") Noetherian iff " + rs + " Noetherian"});
  }
  if (all_finite) {
    v.justification.push_back({Property::Noetherian, Citation::NoetherianClause,
                               "R G_i is a finitely generated " + rs + "-module for finite G_i"});
  }

  v.artinian = rp.artinian && all_finite;
  v.justification.push_back({Property::Artinian, Citation::Connell,
                             "R G Artinian iff R Artinian and G finite; " + rs + (rp.artinian ? " Artinian" : " not Artinian") +
                                 (all_finite ? ", all isotropy finite" : ", some isotropy is Z")});
  v.justification.push_back({Property::Artinian, Citation::ArtinianClause,
                             all_finite ? "groupoid finite" : "groupoid infinite"});

  std::string semisimple_reason;
  if (!all_finite) {
    semisimple_reason = "some isotropy is Z";
  } else if (!rp.field_product) {
    semisimple_reason = rs + " is not a finite product of fields";
  } else {
    for (auto ch : rp.characteristics) {
      if (ch == 0) continue;
      for (auto n : orders) {
        if (n % static_cast<std::size_t>(ch) == 0 && semisimple_reason.empty()) {
          semisimple_reason = "characteristic " + std::to_string(ch) + " divides |G_i| = " + std::to_string(n);
        }
      }
    }
  }
  v.semisimple = semisimple_reason.empty();
  v.justification.push_back({Property::Semisimple, Citation::Maschke,
                             v.semisimple ? "no characteristic of " + rs + " divides any |G_i|" : semisimple_reason});
  v.justification.push_back({Property::Semisimple, Citation::SemisimpleClause,
                             v.semisimple ? "finite groupoid over a product of good fields" : "clause fails"});
  return v;
}

BasisAlgebra basis_algebra(const FiniteGroupoid& g) {
  BasisAlgebra a;
  const std::size_t n = g.arrow_count();
  for (const auto& f : g.arrows()) a.names.push_back(f.name);
  a.product.assign(n * n, -1);
  // b_f b_h = f∘h when dom(f) = cod(h).
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      if (g.arrow(f).dom != g.arrow(h).cod) continue;
      auto c = g.composite(f, h);
      if (!c) throw InputError("missing composite " + g.arrow(f).name + " " + g.arrow(h).name);
      a.product[f * n + h] = static_cast<int>(*c);
    }
  }
  return a;
}

namespace {

std::string render_witness(const BasisAlgebra& a, const std::vector<RingElement>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (!coeffs[i].is_one()) out << coeffs[i].to_string() << "*";
    out << a.names[i];
  }
  return out.str();
}

// Null space of an integer matrix over Q, via reduced row echelon form.
std::vector<std::vector<mpq_class>> rational_null_space(std::vector<std::vector<mpq_class>> m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    mpq_class inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
      if (r2 == row || m[r2][c] == 0) continue;
      mpq_class f = m[r2][c];
      for (std::size_t k = 0; k < cols; ++k) m[r2][k] -= f * m[row][k];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RadicalResult rational_radical(const BasisAlgebra& a) {
  const std::size_t n = a.dimension();
  // tr(L_{b_k}) = #{j : b_k b_j = b_j}
  std::vector<long> trace(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.multiply(k, j) == static_cast<int>(j)) ++trace[k];
    }
  }
  std::vector<std::vector<mpq_class>> form(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int k = a.multiply(i, j);
      if (k >= 0) form[i][j] = trace[static_cast<std::size_t>(k)];
    }
  }
  auto null = rational_null_space(std::move(form), n);
  RadicalResult res;
  res.radical_dimension = null.size();
  res.semisimple = null.empty();
  if (!null.empty()) {
    // Clear denominators so the witness reads as an integer combination.
    mpz_class l = 1;
    for (const auto& x : null.front()) l = lcm(l, mpz_class(x.get_den()));
    const RingDescriptor q = RingDescriptor::rationals();
    for (const auto& x : null.front()) {
      mpq_class y = x * l;
      res.witness.push_back(RingElement::from_fraction(q, y.get_num(), y.get_den()));
    }
    res.witness_text = render_witness(a, res.witness);
  }
  return res;
}

// Dense arithmetic over GF(p) for the exhaustive search.
class ModpAlgebra {
 public:
  using Vec = std::vector<std::uint32_t>;

  ModpAlgebra(const BasisAlgebra& a, std::uint32_t p) : n_(a.dimension()), p_(p) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        int k = a.multiply(i, j);
        if (k >= 0) triples_.push_back({i, j, static_cast<std::size_t>(k)});
      }
    }
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec z(n_, 0);
    for (const auto& t : triples_) {
      if (x[t.i] == 0 || y[t.j] == 0) continue;
      z[t.k] = static_cast<std::uint32_t>((z[t.k] + std::uint64_t{x[t.i]} * y[t.j]) % p_);
    }
    return z;
  }

  static bool is_zero(const Vec& x) {
    return std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; });
  }

  bool nilpotent_element(const Vec& a) const {
    Vec x = a;
    for (std::size_t reach = 1; reach <= n_; reach *= 2) {
      x = mul(x, x);
      if (is_zero(x)) return true;
    }
    return false;
  }

  // Echelon basis of the span of `vs`.
  std::vector<Vec> span(std::vector<Vec> vs) const {
    std::vector<Vec> basis;
    std::vector<std::size_t> pivots;
    for (auto v : vs) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        std::uint32_t c = v[pivots[b]];
        if (c == 0) continue;
        for (std::size_t k = 0; k < n_; ++k) {
          v[k] = static_cast<std::uint32_t>((v[k] + std::uint64_t{p_ - c} * basis[b][k]) % p_);
        }
      }
      std::size_t piv = 0;
      while (piv < n_ && v[piv] == 0) ++piv;
      if (piv == n_) continue;
      std::uint32_t inv = inverse(v[piv]);
      for (auto& c : v) c = static_cast<std::uint32_t>(std::uint64_t{c} * inv % p_);
      // keep earlier basis vectors reduced at the new pivot
      for (std::size_t b = 0; b < basis.size(); ++b) {
        std::uint32_t c = basis[b][piv];
        if (c == 0) continue;
        for (std::size_t k = 0; k < n_; ++k) {
          basis[b][k] = static_cast<std::uint32_t>((basis[b][k] + std::uint64_t{p_ - c} * v[k]) % p_);
        }
      }
      basis.push_back(std::move(v));
      pivots.push_back(piv);
    }
    return basis;
  }

  // True iff the right ideal V = aR + aA is nilpotent, i.e. a ∈ J(A).
  bool in_radical(const Vec& a) const {
    std::vector<Vec> gens{a};
    for (std::size_t j = 0; j < n_; ++j) {
      Vec e(n_, 0);
      e[j] = 1;
      gens.push_back(mul(a, e));
    }
    const auto v = span(std::move(gens));
    auto w = v;
    // V^{m+1} ⊆ V^m, so the chain either reaches 0 or stalls.
    while (!w.empty()) {
      std::vector<Vec> next;
      for (const auto& x : w) {
        for (const auto& y : v) next.push_back(mul(x, y));
      }
      auto reduced = span(std::move(next));
      if (reduced.size() == w.size()) return false;
      w = std::move(reduced);
    }
    return true;
  }

 private:
  struct Triple {
    std::size_t i, j, k;
  };

  std::uint32_t inverse(std::uint32_t c) const {
    std::uint64_t result = 1, base = c, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }

  std::size_t n_;
  std::uint32_t p_;
  std::vector<Triple> triples_;
};

RadicalResult modular_radical(const BasisAlgebra& a, const RingDescriptor& r) {
  const std::size_t n = a.dimension();
  const auto p = static_cast<std::uint32_t>(r.modulus());
  if (n > kOracleMaxDimensionCharP) {
    throw OracleBudgetError("radical oracle: dimension " + std::to_string(n) + " exceeds " +
                            std::to_string(kOracleMaxDimensionCharP) + " over " + r.to_string());
  }
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    space *= p;
    if (space > kOracleMaxCandidates) {
      throw OracleBudgetError("radical oracle: " + r.to_string() + "^" + std::to_string(n) + " exceeds the search budget");
    }
  }
  ModpAlgebra alg(a, p);
  // Candidates with leading (lowest-index) nonzero coefficient 1, in counter
  // order with index 0 least significant. The radical is a subspace, so this
  // loses nothing.
  ModpAlgebra::Vec v(n, 0);
  RadicalResult res;
  res.semisimple = true;
  for (std::uint64_t step = 1; step < space; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      if (++v[i] < p) break;
      v[i] = 0;
    }
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    if (!alg.nilpotent_element(v)) continue;
    if (!alg.in_radical(v)) continue;
    res.semisimple = false;
    for (auto c : v) res.witness.push_back(RingElement::from_integer(r, static_cast<long>(c)));
    res.witness_text = render_witness(a, res.witness);
    break;
  }
  return res;
}

}  // namespace

RadicalResult radical_oracle(const BasisAlgebra& algebra, const RingDescriptor& r) {
  if (algebra.dimension() == 0) throw InputError("radical oracle: empty algebra");
  if (r.kind() == RingKind::Rationals) {
    if (algebra.dimension() > kOracleMaxDimensionChar0) {
      throw OracleBudgetError("radical oracle: dimension " + std::to_string(algebra.dimension()) + " exceeds " +
                              std::to_string(kOracleMaxDimensionChar0) + " over Q");
    }
    return rational_radical(algebra);
  }
  if (r.kind() == RingKind::GaloisField) return modular_radical(algebra, r);
  throw InputError("radical oracle supports Q and GF(p), not " + r.to_string());
}

RadicalResult radical_oracle(const FiniteGroupoid& g, const RingDescriptor& r) {
  return radical_oracle(basis_algebra(g), r);
}

}  // namespace ampalg
