#include "ampalg/inverse_semigroup.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ampalg/errors.hpp"
#include "line_tokens.hpp"

namespace ampalg {

InverseSemigroup::InverseSemigroup(std::vector<std::string> names, std::vector<std::size_t> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("inverse semigroup has no elements");
  if (table_.size() != n * n) throw InputError("multiplication table must have " + std::to_string(n * n) + " entries");
  for (auto x : table_) {
    if (x >= n) throw InputError("multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
          throw InputError("not associative: (" + names_[a] + "*" + names_[b] + ")*" + names_[c] + " != " + names_[a] + "*(" +
                           names_[b] + "*" + names_[c] + ")");
        }
      }
    }
  }
  star_.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> found;
    for (std::size_t t = 0; t < n; ++t) {
      if (multiply(multiply(s, t), s) == s && multiply(multiply(t, s), t) == t) found.push_back(t);
    }
    if (found.size() != 1) {
      std::string list;
      for (auto t : found) list += (list.empty() ? "" : ", ") + names_[t];
      throw InputError("not an inverse semigroup: element " + names_[s] + " has " + std::to_string(found.size()) +
                       " pseudo-inverses" + (found.empty() ? "" : " (" + list + ")"));
    }
    star_[s] = found.front();
  }
}

std::optional<std::size_t> InverseSemigroup::find(std::string_view name) const {
  for (std::size_t s = 0; s < names_.size(); ++s) {
    if (names_[s] == name) return s;
  }
  return std::nullopt;
}

std::vector<std::size_t> InverseSemigroup::idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < size(); ++s) {
    if (is_idempotent(s)) out.push_back(s);
  }
  return out;
}

InverseSemigroup parse_isg(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::optional<std::vector<std::size_t>>> rows;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool saw_elements = false;
  auto lookup = [&](const detail::Token& t) -> std::size_t {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == t.text) return i;
    }
    throw ParseError("undeclared element '" + t.text + "'", lineno, t.column);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    auto tok = detail::tokenize(detail::strip_comment(raw));
    if (tok.empty()) continue;
    if (tok[0].text == "elements") {
      if (tok.size() < 2 || tok[1].text != ":") throw ParseError("expected `elements: a b ...`", lineno, tok[0].column);
      if (saw_elements) throw ParseError("`elements:` given twice", lineno, tok[0].column);
      saw_elements = true;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        if (detail::is_separator(tok[i].text)) throw ParseError("unexpected '" + tok[i].text + "'", lineno, tok[i].column);
        if (std::find(names.begin(), names.end(), tok[i].text) != names.end()) {
          throw ParseError("duplicate element '" + tok[i].text + "'", lineno, tok[i].column);
        }
        names.push_back(tok[i].text);
      }
      rows.assign(names.size(), std::nullopt);
    } else if (tok[0].text == "row") {
      if (!saw_elements) throw ParseError("`row` before `elements:`", lineno, tok[0].column);
      if (tok.size() < 3 || tok[2].text != ":") throw ParseError("expected `row a: x y ...`", lineno, tok[0].column);
      std::size_t s = lookup(tok[1]);
      if (rows[s]) throw ParseError("row " + names[s] + " given twice", lineno, tok[1].column);
      if (tok.size() - 3 != names.size()) {
        throw ParseError("row " + names[s] + " has " + std::to_string(tok.size() - 3) + " entries, expected " +
                             std::to_string(names.size()),
                         lineno, tok.back().column);
      }
      std::vector<std::size_t> row;
      for (std::size_t i = 3; i < tok.size(); ++i) row.push_back(lookup(tok[i]));
      rows[s] = std::move(row);
    } else {
      throw ParseError("unknown directive '" + tok[0].text + "'", lineno, tok[0].column);
    }
  }
  if (!saw_elements) throw ParseError("missing `elements:` line", lineno, 0);
  std::vector<std::size_t> table;
  for (std::size_t s = 0; s < names.size(); ++s) {
    if (!rows[s]) throw InputError("missing row for element " + names[s]);
    table.insert(table.end(), rows[s]->begin(), rows[s]->end());
  }
  return InverseSemigroup(std::move(names), std::move(table));
}

std::string isg_to_text(const InverseSemigroup& s) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& n : s.names()) out << ' ' << n;
  out << '\n';
  for (std::size_t a = 0; a < s.size(); ++a) {
    out << "row " << s.name(a) << ":";
    for (std::size_t b = 0; b < s.size(); ++b) out << ' ' << s.name(s.multiply(a, b));
    out << '\n';
  }
  return out.str();
}

InverseSemigroup symmetric_inverse_monoid(std::size_t n) {
  if (n == 0 || n > 4) throw std::invalid_argument("symmetric inverse monoid supported for 1 <= n <= 4");
  // Partial maps as image vectors, n meaning undefined; keep the injective ones.
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> cur(n, 0);
  std::function<void(std::size_t)> build = [&](std::size_t i) {
    if (i == n) {
      std::vector<bool> used(n, false);
      for (auto x : cur) {
        if (x == n) continue;
        if (used[x]) return;
        used[x] = true;
      }
      maps.push_back(cur);
      return;
    }
    for (std::size_t x = 0; x <= n; ++x) {
      cur[i] = x;
      build(i + 1);
    }
  };
  build(0);
  auto name = [n](const std::vector<std::size_t>& m) {
    std::string s;
    for (auto x : m) s += x == n ? '-' : static_cast<char>('0' + x);
    return s;
  };
  std::sort(maps.begin(), maps.end(), [&](const auto& a, const auto& b) { return name(a) < name(b); });
  std::vector<std::string> names;
  for (const auto& m : maps) names.push_back(name(m));
  std::vector<std::size_t> table;
  for (const auto& s : maps) {
    for (const auto& t : maps) {
      std::vector<std::size_t> st(n, n);
      for (std::size_t x = 0; x < n; ++x) {
        if (t[x] != n) st[x] = s[t[x]];
      }
      table.push_back(static_cast<std::size_t>(std::find(maps.begin(), maps.end(), st) - maps.begin()));
    }
  }
  return InverseSemigroup(std::move(names), std::move(table));
}

InverseSemigroup chain_semilattice(std::size_t n) {
  if (n == 0) throw std::invalid_argument("semilattice needs at least one element");
  std::vector<std::string> names;
  std::vector<std::size_t> table;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table.push_back(std::min(i, j));
  }
  return InverseSemigroup(std::move(names), std::move(table));
}

InverseSemigroup group_semigroup(const GroupTable& g) { return InverseSemigroup(g.names(), g.table()); }

SemilatticeOrder semilattice(const InverseSemigroup& s) {
  SemilatticeOrder order;
  order.idempotents = s.idempotents();
  const std::size_t m = order.idempotents.size();
  auto index_of = [&](std::size_t x) -> std::size_t {
    auto it = std::find(order.idempotents.begin(), order.idempotents.end(), x);
    if (it == order.idempotents.end()) throw VerificationError("product of idempotents is not idempotent");
    return static_cast<std::size_t>(it - order.idempotents.begin());
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto e = order.idempotents[i];
      auto f = order.idempotents[j];
      if (s.multiply(e, f) != s.multiply(f, e)) throw VerificationError("idempotents " + s.name(e) + ", " + s.name(f) + " do not commute");
      order.meet.push_back(index_of(s.multiply(e, f)));
    }
  }
  return order;
}

bool natural_leq(const InverseSemigroup& s, std::size_t t, std::size_t u) {
  return t == s.multiply(s.multiply(t, s.star(t)), u);
}

bool natural_leq_by_search(const InverseSemigroup& s, std::size_t t, std::size_t u) {
  for (auto e : s.idempotents()) {
    if (s.multiply(e, u) == t) return true;
  }
  return false;
}

UnderlyingGroupoid underlying_groupoid(const InverseSemigroup& s) {
  UnderlyingGroupoid ug;
  auto& g = ug.groupoid;
  const auto es = s.idempotents();
  std::vector<std::size_t> object_of(s.size(), 0);
  for (auto e : es) {
    object_of[e] = g.add_object(s.name(e));
    ug.object_element.push_back(e);
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    g.add_arrow(s.name(a), object_of[s.multiply(s.star(a), a)], object_of[s.multiply(a, s.star(a))]);
  }
  for (auto e : es) g.set_identity(object_of[e], e);
  for (std::size_t a = 0; a < s.size(); ++a) {
    g.set_inverse(a, s.star(a));
    for (std::size_t b = 0; b < s.size(); ++b) {
      // a∘b defined when a*a = bb*
      if (s.multiply(s.star(a), a) == s.multiply(b, s.star(b))) g.set_composite(a, b, s.multiply(a, b));
    }
  }
  auto violations = validate(g);
  if (!violations.empty()) throw VerificationError("underlying groupoid invalid: " + violations.front().message);
  return ug;
}

std::vector<MaximalSubgroup> maximal_subgroups(const InverseSemigroup& s) {
  std::vector<MaximalSubgroup> out;
  for (auto e : s.idempotents()) {
    std::vector<std::size_t> local;  // eSe
    for (std::size_t a = 0; a < s.size(); ++a) {
      auto x = s.multiply(s.multiply(e, a), e);
      if (std::find(local.begin(), local.end(), x) == local.end()) local.push_back(x);
    }
    std::vector<std::size_t> units;
    for (auto u : local) {
      for (auto v : local) {
        if (s.multiply(u, v) == e && s.multiply(v, u) == e) {
          units.push_back(u);
          break;
        }
      }
    }
    std::sort(units.begin(), units.end(), [&](std::size_t a, std::size_t b) {
      if ((a == e) != (b == e)) return a == e;
      return s.name(a) < s.name(b);
    });
    std::vector<std::string> names;
    std::vector<std::size_t> table;
    for (auto u : units) names.push_back(s.name(u));
    for (auto u : units) {
      for (auto v : units) {
        auto it = std::find(units.begin(), units.end(), s.multiply(u, v));
        if (it == units.end()) throw VerificationError("unit group of eSe not closed at " + s.name(e));
        table.push_back(static_cast<std::size_t>(it - units.begin()));
      }
    }
    out.push_back({e, units, std::make_shared<const GroupTable>(std::move(names), std::move(table))});
  }
  return out;
}

BasisAlgebra basis_algebra(const InverseSemigroup& s) {
  BasisAlgebra a;
  a.names = s.names();
  for (auto x : s.table()) a.product.push_back(static_cast<int>(x));
  return a;
}

namespace {

// Bareiss fraction-free elimination.
mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

SemigroupAlgebraIso semigroup_algebra_iso(const InverseSemigroup& s, const RingDescriptor& r) {
  using namespace isg_labels;
  const std::size_t n = s.size();
  if (n > kIsoMaxElements) {
    throw OracleBudgetError("semigroup has " + std::to_string(n) + " elements; the exhaustive check allows " +
                            std::to_string(kIsoMaxElements));
  }
  SemigroupAlgebraIso iso;
  auto ug = underlying_groupoid(s);
  iso.groupoid = std::make_shared<const FiniteGroupoid>(ug.groupoid);
  const auto& g = *iso.groupoid;

  CheckResult routes{kOrderRoutes};
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < n; ++u) {
      leq[t][u] = natural_leq(s, t, u);
      routes.check(leq[t][u] == natural_leq_by_search(s, t, u), [&] { return s.name(t) + " <= " + s.name(u); });
    }
  }

  CheckResult bijection{kBijection};
  bijection.check(g.arrow_count() == n, [&] { return std::to_string(g.arrow_count()) + " arrows"; });
  const auto sg = structured_from_finite(g);
  const auto count = sg.arrow_count();
  bijection.check(count && *count == n, [&] { return "sum n_i^2 |G_i| != " + std::to_string(n); });

  CheckResult iso_check{kIsotropy};
  for (const auto& ms : maximal_subgroups(s)) {
    const auto object = *g.find_object(s.name(ms.idempotent));
    const auto iso_group = isotropy(g, object);
    std::vector<std::size_t> arrows(iso_group.arrows.begin(), iso_group.arrows.end());
    bool same = arrows == ms.elements && iso_group.table->table() == ms.table->table();
    iso_check.check(same, [&] { return s.name(ms.idempotent); });
  }

  const auto shared = iso.groupoid;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::size_t> below;
    for (std::size_t t = 0; t < n; ++t) {
      if (leq[t][u]) below.push_back(t);
    }
    iso.image.push_back(AlgebraElement::characteristic(shared, r, below));
  }

  CheckResult mult{kMultiplicative};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mult.check(convolve(iso.image[a], iso.image[b]) == iso.image[s.multiply(a, b)],
                 [&] { return s.name(a) + "*" + s.name(b); });
    }
  }

  std::vector<std::vector<mpz_class>> transition(n, std::vector<mpz_class>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t t = 0; t < n; ++t) {
      if (leq[t][u]) transition[u][t] = 1;
    }
  }
  iso.transition_determinant = integer_determinant(std::move(transition));
  CheckResult unimodular{kUnimodular};
  unimodular.check(abs(iso.transition_determinant) == 1, [&] { return "det = " + iso.transition_determinant.get_str(); });

  CheckResult composite{kComposite};
  const auto d = decompose(shared, r);
  std::vector<BlockMatrix> blocks;
  for (const auto& x : iso.image) blocks.push_back(phi(d, x));
  for (std::size_t a = 0; a < n; ++a) {
    composite.check(phi_inv(d, blocks[a]) == iso.image[a], [&] { return "phi_inv(phi(" + s.name(a) + "))"; });
    for (std::size_t b = 0; b < n; ++b) {
      composite.check(blocks[a] * blocks[b] == blocks[s.multiply(a, b)], [&] { return s.name(a) + "*" + s.name(b); });
    }
  }

  iso.report.checks = {routes, bijection, iso_check, mult, unimodular, composite};
  return iso;
}

Verdict isg_verdicts(const InverseSemigroup& s, const RingDescriptor& r) {
  const auto ug = underlying_groupoid(s);
  Verdict v = verdicts(structured_from_finite(ug.groupoid), r);
  v.justification.push_back({Property::Shape, Citation::SemigroupGroupoid,
                             std::to_string(s.idempotents().size()) + " idempotent(s); blocks over group algebras of maximal subgroups"});
  return v;
}

}  // namespace ampalg
