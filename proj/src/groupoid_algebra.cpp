#include "ampalg/groupoid_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "ampalg/errors.hpp"

namespace ampalg {

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(GroupoidPtr groupoid, RingDescriptor ring) : groupoid_(std::move(groupoid)), ring_(std::move(ring)) {
  if (!groupoid_) throw std::invalid_argument("null groupoid");
}

AlgebraElement AlgebraElement::basis(GroupoidPtr groupoid, const RingDescriptor& ring, std::size_t arrow) {
  AlgebraElement out(std::move(groupoid), ring);
  out.add_term(arrow, RingElement::one(ring));
  return out;
}

AlgebraElement AlgebraElement::characteristic(GroupoidPtr groupoid, const RingDescriptor& ring, const std::vector<std::size_t>& arrows) {
  AlgebraElement out(std::move(groupoid), ring);
  std::vector<std::size_t> distinct = arrows;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t a : distinct) out.add_term(a, RingElement::one(ring));
  return out;
}

AlgebraElement AlgebraElement::units_of(GroupoidPtr groupoid, const RingDescriptor& ring, const std::vector<std::size_t>& objects) {
  std::vector<std::size_t> ids;
  for (std::size_t x : objects) {
    auto id = groupoid->identity(x);
    if (!id) throw InputError("object " + groupoid->object_name(x) + " has no identity");
    ids.push_back(*id);
  }
  return characteristic(std::move(groupoid), ring, ids);
}

AlgebraElement AlgebraElement::unit(GroupoidPtr groupoid, const RingDescriptor& ring) {
  std::vector<std::size_t> all(groupoid->object_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return units_of(std::move(groupoid), ring, all);
}

RingElement AlgebraElement::coefficient(std::size_t arrow) const {
  auto it = terms_.find(arrow);
  return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

void AlgebraElement::add_term(std::size_t arrow, const RingElement& c) {
  if (arrow >= groupoid_->arrow_count()) throw std::out_of_range("arrow index out of range");
  if (c.descriptor() != ring_) throw std::invalid_argument("ring descriptor mismatch in groupoid algebra");
  if (c.is_zero()) return;
  auto it = terms_.find(arrow);
  if (it == terms_.end()) {
    terms_.emplace(arrow, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const {
  if (groupoid_ != other.groupoid_) throw std::invalid_argument("elements of different groupoid algebras");
  if (ring_ != other.ring_) throw std::invalid_argument("ring descriptor mismatch: " + ring_.to_string() + " vs " + other.ring_.to_string());
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_compatible(b);
  AlgebraElement out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_compatible(b);
  AlgebraElement out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
  return out;
}

AlgebraElement operator*(const RingElement& c, const AlgebraElement& a) {
  AlgebraElement out(a.groupoid_, a.ring_);
  for (const auto& [k, v] : a.terms_) out.add_term(k, c * v);
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.groupoid_ == b.groupoid_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::size_t> order;
  for (const auto& [k, c] : terms_) order.push_back(k);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return groupoid_->arrow(x).name < groupoid_->arrow(y).name; });
  std::string out;
  for (std::size_t k : order) {
    if (!out.empty()) out += " + ";
    const RingElement& c = terms_.at(k);
    if (!c.is_one()) {
      std::string cs = c.to_string();
      bool simple = cs.find_first_of("-+ ,/x") == std::string::npos;
      out += (simple ? cs : "(" + cs + ")") + "*";
    }
    out += groupoid_->arrow(k).name;
  }
  return out;
}

AlgebraElement parse_algebra_element(GroupoidPtr groupoid, const RingDescriptor& ring, std::string_view text) {
  AlgebraElement out(groupoid, ring);
  std::vector<std::string> terms;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      terms.push_back(current);
      current.clear();
      continue;
    }
    current.push_back(c);
  }
  terms.push_back(current);
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  for (const auto& raw : terms) {
    std::string t = trim(raw);
    if (t.empty()) {
      if (terms.size() == 1) break;  // empty text is the zero element
      throw ParseError("empty term in algebra element literal", 1, 0);
    }
    std::size_t star = std::string::npos;
    depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (t[i] == '*' && depth == 0) {
        star = i;
        break;
      }
    }
    RingElement coeff = RingElement::one(ring);
    std::string name = t;
    if (star != std::string::npos) {
      coeff = parse_ring_literal(ring, t.substr(0, star));
      name = trim(t.substr(star + 1));
    } else if (t[0] == '-') {
      coeff = -coeff;
      name = trim(t.substr(1));
    }
    auto arrow = groupoid->find_arrow(name);
    if (!arrow) throw ParseError("unknown arrow '" + name + "' in algebra element literal", 1, 0);
    out.add_term(*arrow, coeff);
  }
  return out;
}

AlgebraElement convolve(const AlgebraElement& f1, const AlgebraElement& f2) {
  if (f1.groupoid() != f2.groupoid()) throw std::invalid_argument("elements of different groupoid algebras");
  if (f1.ring() != f2.ring()) throw std::invalid_argument("ring descriptor mismatch: " + f1.ring().to_string() + " vs " + f2.ring().to_string());
  const FiniteGroupoid& g = *f1.groupoid();
  AlgebraElement out(f1.groupoid(), f1.ring());
  for (std::size_t target = 0; target < g.arrow_count(); ++target) {
    RingElement sum = RingElement::zero(f1.ring());
    for (const auto& [h, c2] : f2.terms()) {
      if (g.arrow(h).dom != g.arrow(target).dom) continue;
      auto h_inv = g.inverse(h);
      if (!h_inv) throw InputError("arrow " + g.arrow(h).name + " has no inverse");
      auto gh = g.composite(target, *h_inv);
      if (!gh) throw InputError("missing composite " + g.arrow(target).name + "∘" + g.arrow(*h_inv).name);
      auto c1 = f1.terms().find(*gh);
      if (c1 != f1.terms().end()) sum += c1->second * c2;
    }
    out.add_term(target, sum);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition

std::optional<std::pair<std::size_t, std::size_t>> Decomposition::locate(std::size_t object) const {
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (auto p = frames[i].position(object)) return std::make_pair(i, *p);
  }
  return std::nullopt;
}

Decomposition decompose_with_frames(GroupoidPtr groupoid, const RingDescriptor& ring, std::vector<Orbit> frames) {
  Decomposition d;
  d.groupoid = std::move(groupoid);
  d.ring = ring;
  d.frames = std::move(frames);
  for (const auto& o : d.frames) {
    d.isotropy.push_back(isotropy(*d.groupoid, o.basepoint));
    d.structured.orbits.push_back({o.size(), IsotropyDescriptor::finite(d.isotropy.back().table)});
  }
  return d;
}

Decomposition decompose(GroupoidPtr groupoid, const RingDescriptor& ring) {
  require_valid(*groupoid);
  auto frames = orbits(*groupoid);
  return decompose_with_frames(std::move(groupoid), ring, std::move(frames));
}

std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> phi_arrow(const Decomposition& d, std::size_t arrow) {
  const FiniteGroupoid& g = *d.groupoid;
  const ArrowInfo& info = g.arrow(arrow);
  auto src = d.locate(info.dom);
  auto dst = d.locate(info.cod);
  if (!src || !dst || src->first != dst->first) return std::nullopt;
  std::size_t block = src->first;
  const Orbit& frame = d.frames[block];
  std::size_t g_y = frame.connecting[src->second];
  std::size_t g_z = frame.connecting[dst->second];
  auto g_z_inv = g.inverse(g_z);
  if (!g_z_inv) return std::nullopt;
  // g_z⁻¹ ∘ g ∘ g_y, with non-composable steps giving zero as in the category algebra.
  if (g.arrow(g_y).cod != info.dom) return std::nullopt;
  auto inner = g.composite(arrow, g_y);
  if (!inner || g.arrow(*g_z_inv).dom != g.arrow(*inner).cod) return std::nullopt;
  auto loop = g.composite(*g_z_inv, *inner);
  if (!loop) return std::nullopt;
  auto element = d.isotropy[block].element_of(*loop);
  if (!element) return std::nullopt;
  return std::make_tuple(block, dst->second, src->second, *element);
}

BlockMatrix phi(const Decomposition& d, const AlgebraElement& f) {
  if (f.groupoid() != d.groupoid) throw std::invalid_argument("element is not over the decomposed groupoid");
  if (f.ring() != d.ring) throw std::invalid_argument("ring descriptor mismatch: " + f.ring().to_string() + " vs " + d.ring.to_string());
  BlockMatrix out = BlockMatrix::zero(d.shape(), d.ring);
  for (const auto& [arrow, c] : f.terms()) {
    auto image = phi_arrow(d, arrow);
    if (!image) continue;
    auto [block, row, col, element] = *image;
    out.add_term(block, row, col, static_cast<std::int64_t>(element), c);
  }
  return out;
}

AlgebraElement phi_inv(const Decomposition& d, const BlockMatrix& m) {
  if (m.ring() != d.ring) throw std::invalid_argument("ring descriptor mismatch: " + m.ring().to_string() + " vs " + d.ring.to_string());
  BlockShape shape = d.shape();
  if (m.blocks().size() != shape.size()) throw std::invalid_argument("block-structure mismatch: block count");
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (m.blocks()[i].size != shape[i].size || m.blocks()[i].group != shape[i].isotropy) {
      throw std::invalid_argument("block-structure mismatch at block " + std::to_string(i));
    }
  }
  const FiniteGroupoid& g = *d.groupoid;
  AlgebraElement out(d.groupoid, d.ring);
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const Orbit& frame = d.frames[i];
    const Block& b = m.blocks()[i];
    for (std::size_t row = 0; row < b.size; ++row) {
      for (std::size_t col = 0; col < b.size; ++col) {
        for (const auto& [key, c] : b.at(row, col).terms()) {
          // a E_{zy} -> g_z ∘ a ∘ g_y⁻¹
          std::size_t a = d.isotropy[i].arrows[static_cast<std::size_t>(key)];
          std::size_t g_z = frame.connecting[row];
          auto g_y_inv = g.inverse(frame.connecting[col]);
          if (!g_y_inv || g.arrow(a).dom != g.arrow(*g_y_inv).cod || g.arrow(g_z).dom != g.arrow(a).cod) continue;
          auto inner = g.composite(a, *g_y_inv);
          if (!inner) continue;
          auto arrow = g.composite(g_z, *inner);
          if (!arrow) continue;
          out.add_term(*arrow, c);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

VerificationReport verify_isomorphism(const Decomposition& d) {
  const FiniteGroupoid& g = *d.groupoid;
  const RingDescriptor& r = d.ring;
  VerificationReport report;
  BlockShape shape = d.shape();

  CheckResult frame{check_labels::kFrame};
  for (const auto& o : d.frames) {
    for (std::size_t k = 0; k < o.size(); ++k) {
      const ArrowInfo& a = g.arrow(o.connecting[k]);
      frame.record(a.dom == o.basepoint && a.cod == o.members[k],
                   "connecting arrow " + a.name + " is not " + g.object_name(o.basepoint) + " -> " + g.object_name(o.members[k]));
    }
  }
  report.checks.push_back(frame);

  CheckResult cardinality{check_labels::kCardinality};
  auto expected = d.structured.arrow_count();
  cardinality.record(expected && *expected == g.arrow_count(),
                     "sum n_i^2 |G_i| = " + (expected ? std::to_string(*expected) : std::string("inf")) + " but |arrows| = " +
                         std::to_string(g.arrow_count()));
  report.checks.push_back(cardinality);

  std::vector<AlgebraElement> basis;
  std::vector<BlockMatrix> images;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    basis.push_back(AlgebraElement::basis(d.groupoid, r, a));
    images.push_back(phi(d, basis.back()));
  }

  CheckResult mult{check_labels::kMultiplicative};
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    for (std::size_t b = 0; b < g.arrow_count(); ++b) {
      BlockMatrix lhs = phi(d, convolve(basis[a], basis[b]));
      BlockMatrix rhs = images[a] * images[b];
      mult.check(lhs == rhs, [&] {
        return "phi(" + g.arrow(a).name + " * " + g.arrow(b).name + ") = " + lhs.to_string() + " but phi(" + g.arrow(a).name + ") phi(" +
               g.arrow(b).name + ") = " + rhs.to_string();
      });
    }
  }
  report.checks.push_back(mult);

  CheckResult unit{check_labels::kUnit};
  BlockMatrix unit_image = phi(d, AlgebraElement::unit(d.groupoid, r));
  unit.record(unit_image == BlockMatrix::identity(shape, r), "phi(1) = " + unit_image.to_string());
  report.checks.push_back(unit);

  CheckResult left{check_labels::kLeftInverse};
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    AlgebraElement back = phi_inv(d, images[a]);
    left.check(back == basis[a], [&] { return "phi_inv(phi(" + g.arrow(a).name + ")) = " + back.to_string(); });
  }
  report.checks.push_back(left);

  CheckResult right{check_labels::kRightInverse};
  for (std::size_t i = 0; i < shape.size(); ++i) {
    std::size_t n = shape[i].size;
    std::size_t order = *shape[i].isotropy.order();
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t e = 0; e < order; ++e) {
          BlockMatrix unit_matrix = BlockMatrix::unit(shape, RingElement::one(r), i, row, col, static_cast<std::int64_t>(e));
          BlockMatrix round = phi(d, phi_inv(d, unit_matrix));
          right.check(round == unit_matrix, [&] { return "phi(phi_inv(" + unit_matrix.to_string() + ")) = " + round.to_string(); });
        }
      }
    }
  }
  report.checks.push_back(right);
  return report;
}

}  // namespace ampalg
