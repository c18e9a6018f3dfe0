#include "ampalg/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ampalg/errors.hpp"

namespace ampalg {

// ---------------------------------------------------------------------------
// GroupTable

std::vector<std::string> GroupTable::axiom_violations(std::size_t n, const std::vector<std::size_t>& table) {
  std::vector<std::string> out;
  if (n == 0) return {"empty group"};
  if (table.size() != n * n) return {"table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(n * n)};
  for (std::size_t v : table) {
    if (v >= n) return {"table entry " + std::to_string(v) + " out of range"};
  }
  auto mul = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) out.push_back("element 0 is not a two-sided identity at " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = mul(a, b) == 0 && mul(b, a) == 0;
    if (!has_inverse) out.push_back("element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          out.push_back("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
          return out;
        }
      }
    }
  }
  return out;
}

GroupTable::GroupTable(std::vector<std::string> names, std::vector<std::size_t> table)
    : names_(std::move(names)), table_(std::move(table)) {
  auto bad = axiom_violations(names_.size(), table_);
  if (!bad.empty()) throw InputError("not a group: " + bad.front());
  std::size_t n = order();
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (multiply(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

GroupTable GroupTable::trivial() { return GroupTable({"e"}, {0}); }

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::string> names;
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  }
  return GroupTable(std::move(names), std::move(table));
}

GroupTable GroupTable::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t m = perms.size();
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(q[i]);
    names.push_back(s + "]");
  }
  std::vector<std::size_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a * m + b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable(std::move(names), std::move(table));
}

GroupTable GroupTable::klein_four() { return direct_product(cyclic(2), cyclic(2)); }

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> names;
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("(" + a.name(i / nb) + "," + b.name(i % nb) + ")");
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = a.multiply(i / nb, j / nb) * nb + b.multiply(i % nb, j % nb);
    }
  }
  return GroupTable(std::move(names), std::move(table));
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

std::size_t GroupTable::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

std::string GroupTable::structure_name() const {
  std::size_t n = order();
  if (n == 1) return "1";
  for (std::size_t a = 0; a < n; ++a) {
    if (element_order(a) == n) return "C_" + std::to_string(n);
  }
  if (n == 4) return "C_2xC_2";
  if (n == 6 && !is_abelian()) return "S_3";
  return "G_" + std::to_string(n);
}

bool GroupTable::isomorphic_via(const GroupTable& other, const std::vector<std::size_t>& map) const {
  if (other.order() != order() || map.size() != order()) return false;
  std::vector<bool> seen(order(), false);
  for (std::size_t v : map) {
    if (v >= order() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) {
      if (map[multiply(a, b)] != other.multiply(map[a], map[b])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// IsotropyDescriptor

IsotropyDescriptor IsotropyDescriptor::finite(GroupTable table) {
  return IsotropyDescriptor(std::make_shared<const GroupTable>(std::move(table)));
}

IsotropyDescriptor IsotropyDescriptor::finite(std::shared_ptr<const GroupTable> table) {
  if (!table) throw std::invalid_argument("null group table");
  return IsotropyDescriptor(std::move(table));
}

std::optional<std::size_t> IsotropyDescriptor::order() const {
  if (!table_) return std::nullopt;
  return table_->order();
}

const GroupTable& IsotropyDescriptor::table() const {
  if (!table_) throw std::logic_error("table() on the infinite cyclic isotropy group");
  return *table_;
}

std::string IsotropyDescriptor::to_string() const { return table_ ? table_->structure_name() : "Z"; }

bool operator==(const IsotropyDescriptor& a, const IsotropyDescriptor& b) {
  if (a.table_ == b.table_) return true;
  if (!a.table_ || !b.table_) return false;
  return a.table_->table() == b.table_->table();
}

std::string group_ring_name(const IsotropyDescriptor& g, const RingDescriptor& r) {
  if (g.is_integers()) return "Laurent(" + r.to_string() + ")";
  if (g.table().order() == 1) return r.to_string();
  return r.to_string() + "[" + g.to_string() + "]";
}

// ---------------------------------------------------------------------------
// GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::one(const IsotropyDescriptor& g, const RingDescriptor& r) {
  return basis(g, r, 0);
}

GroupAlgebraElement GroupAlgebraElement::basis(const IsotropyDescriptor& g, const RingDescriptor& r, std::int64_t key) {
  return term(g, RingElement::one(r), key);
}

GroupAlgebraElement GroupAlgebraElement::term(const IsotropyDescriptor& g, const RingElement& coeff, std::int64_t key) {
  if (g.is_finite() && (key < 0 || static_cast<std::size_t>(key) >= g.table().order())) {
    throw std::out_of_range("group element index " + std::to_string(key) + " out of range");
  }
  GroupAlgebraElement out(g, coeff.descriptor());
  out.add_term(key, coeff);
  return out;
}

RingElement GroupAlgebraElement::coefficient(std::int64_t key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

void GroupAlgebraElement::add_term(std::int64_t key, const RingElement& c) {
  if (c.descriptor() != ring_) throw std::invalid_argument("ring descriptor mismatch in group algebra");
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RingElement GroupAlgebraElement::to_laurent() const {
  if (!group_.is_integers()) throw std::logic_error("to_laurent() on a finite group algebra");
  RingDescriptor lr = RingDescriptor::laurent(ring_);
  RingElement out = RingElement::zero(lr);
  for (const auto& [e, c] : terms_) out += RingElement::monomial(lr, c, e);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::from_laurent(const RingElement& p) {
  if (p.descriptor().kind() != RingKind::Laurent) throw std::invalid_argument("from_laurent() needs a Laurent element");
  GroupAlgebraElement out(IsotropyDescriptor::integers(), p.descriptor().base());
  for (const auto& [e, c] : std::get<LaurentTerms>(p.payload()).terms) out.add_term(e, c);
  return out;
}

void GroupAlgebraElement::check_compatible(const GroupAlgebraElement& other) const {
  if (group_ != other.group_) throw std::invalid_argument("group descriptor mismatch: " + group_.to_string() + " vs " + other.group_.to_string());
  if (ring_ != other.ring_) throw std::invalid_argument("ring descriptor mismatch: " + ring_.to_string() + " vs " + other.ring_.to_string());
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement out(group_, ring_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& b) {
  check_compatible(b);
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out = a;
  out += b;
  return out;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a + (-b); }

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  a.check_compatible(b);
  GroupAlgebraElement out(a.group_, a.ring_);
  for (const auto& [h, ch] : a.terms_) {
    for (const auto& [k, ck] : b.terms_) {
      std::int64_t g = 0;
      if (a.group_.is_finite()) {
        g = static_cast<std::int64_t>(a.group_.table().multiply(static_cast<std::size_t>(h), static_cast<std::size_t>(k)));
      } else if (__builtin_add_overflow(h, k, &g)) {
        throw std::overflow_error("Laurent exponent overflow");
      }
      out.add_term(g, ch * ck);
    }
  }
  return out;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.group_ == b.group_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string basis_name;
    if (group_.is_integers()) {
      basis_name = k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k);
    } else {
      basis_name = k == 0 ? "1" : group_.table().name(static_cast<std::size_t>(k));
    }
    if (c.is_one()) {
      out += basis_name;
    } else if (basis_name == "1") {
      out += c.to_string();
    } else {
      out += "(" + c.to_string() + ")*" + basis_name;
    }
  }
  return out;
}

}  // namespace ampalg
