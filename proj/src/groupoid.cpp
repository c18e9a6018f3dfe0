#include "ampalg/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ampalg/errors.hpp"
#include "line_tokens.hpp"

namespace ampalg {

namespace {

std::uint64_t pair_key(std::size_t f, std::size_t g) { return (static_cast<std::uint64_t>(f) << 32) | g; }

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroupoid

std::size_t FiniteGroupoid::add_object(const std::string& name) {
  if (object_lookup_.count(name)) throw InputError("object '" + name + "' declared twice");
  objects_.push_back(name);
  identities_.emplace_back();
  object_lookup_.emplace(name, objects_.size() - 1);
  return objects_.size() - 1;
}

std::size_t FiniteGroupoid::add_arrow(const std::string& name, std::size_t dom, std::size_t cod) {
  if (arrow_lookup_.count(name)) throw InputError("arrow '" + name + "' declared twice");
  if (dom >= objects_.size() || cod >= objects_.size()) throw InputError("arrow '" + name + "' references an unknown object");
  arrows_.push_back({name, dom, cod});
  inverses_.emplace_back();
  arrow_lookup_.emplace(name, arrows_.size() - 1);
  return arrows_.size() - 1;
}

void FiniteGroupoid::set_identity(std::size_t object, std::size_t arrow) {
  if (identities_.at(object)) throw InputError("identity of '" + objects_[object] + "' declared twice");
  identities_[object] = arrow;
}

void FiniteGroupoid::set_composite(std::size_t f, std::size_t g, std::size_t h) {
  const ArrowInfo& af = arrows_.at(f);
  const ArrowInfo& ag = arrows_.at(g);
  if (af.dom != ag.cod) {
    throw InputError("compose " + af.name + " " + ag.name + ": not composable (dom(" + af.name + ") = " + objects_[af.dom] +
                     " but cod(" + ag.name + ") = " + objects_[ag.cod] + ")");
  }
  auto [it, inserted] = composites_.emplace(pair_key(f, g), h);
  if (!inserted && it->second != h) throw InputError("compose " + af.name + " " + ag.name + " given two different values");
}

void FiniteGroupoid::set_inverse(std::size_t f, std::size_t finv) {
  if (inverses_.at(f) && *inverses_[f] != finv) throw InputError("inverse of '" + arrows_[f].name + "' declared twice");
  inverses_[f] = finv;
}

std::optional<std::size_t> FiniteGroupoid::find_object(std::string_view name) const {
  auto it = object_lookup_.find(std::string(name));
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteGroupoid::find_arrow(std::string_view name) const {
  auto it = arrow_lookup_.find(std::string(name));
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroupoid::object_index(std::string_view name) const {
  auto x = find_object(name);
  if (!x) throw InputError("undeclared object '" + std::string(name) + "'");
  return *x;
}

std::size_t FiniteGroupoid::arrow_index(std::string_view name) const {
  auto a = find_arrow(name);
  if (!a) throw InputError("undeclared arrow '" + std::string(name) + "'");
  return *a;
}

std::optional<std::size_t> FiniteGroupoid::composite(std::size_t f, std::size_t g) const {
  auto it = composites_.find(pair_key(f, g));
  if (it == composites_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FiniteGroupoid::objects_by_name() const {
  std::vector<std::size_t> idx(objects_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return objects_[a] < objects_[b]; });
  return idx;
}

std::vector<std::size_t> FiniteGroupoid::arrows_by_name() const {
  std::vector<std::size_t> idx(arrows_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return arrows_[a].name < arrows_[b].name; });
  return idx;
}

// ---------------------------------------------------------------------------
// Text format


FiniteGroupoid parse_groupoid(std::string_view text) {
  FiniteGroupoid g;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool saw_objects = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto tok = detail::tokenize(detail::strip_comment(raw));
    if (tok.empty()) continue;
    auto fail = [&](const std::string& what, std::size_t col) { throw ParseError(what, lineno, col); };
    auto object = [&](const detail::Token& t) -> std::size_t {
      auto x = g.find_object(t.text);
      if (!x) throw ParseError("undeclared object '" + t.text + "'", lineno, t.column);
      return *x;
    };
    auto arrow = [&](const detail::Token& t) -> std::size_t {
      auto a = g.find_arrow(t.text);
      if (!a) throw ParseError("undeclared arrow '" + t.text + "'", lineno, t.column);
      return *a;
    };
    auto shape = [&](std::size_t n, std::initializer_list<std::pair<std::size_t, const char*>> fixed, const char* usage) {
      bool ok = tok.size() == n;
      for (auto [pos, s] : fixed) ok = ok && pos < tok.size() && tok[pos].text == s;
      if (!ok) fail(std::string("expected `") + usage + "`", tok.back().column);
    };
    const std::string& head = tok[0].text;
    try {
      if (head == "objects") {
        if (tok.size() < 2 || tok[1].text != ":") fail("expected `objects: a b ...`", tok[0].column);
        if (saw_objects) fail("`objects:` given twice", tok[0].column);
        saw_objects = true;
        for (std::size_t i = 2; i < tok.size(); ++i) {
          if (tok[i].text == ":" || tok[i].text == "=" || tok[i].text == "->") fail("unexpected '" + tok[i].text + "'", tok[i].column);
          g.add_object(tok[i].text);
        }
      } else if (head == "arrow") {
        shape(6, {{2, ":"}, {4, "->"}}, "arrow f : a -> b");
        g.add_arrow(tok[1].text, object(tok[3]), object(tok[5]));
      } else if (head == "identity") {
        shape(4, {{2, "="}}, "identity a = id_a");
        g.set_identity(object(tok[1]), arrow(tok[3]));
      } else if (head == "compose") {
        shape(5, {{3, "="}}, "compose f g = h");
        g.set_composite(arrow(tok[1]), arrow(tok[2]), arrow(tok[4]));
      } else if (head == "inverse") {
        shape(4, {{2, "="}}, "inverse f = finv");
        g.set_inverse(arrow(tok[1]), arrow(tok[3]));
      } else {
        fail("unknown directive '" + head + "'", tok[0].column);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(e.what(), lineno, tok[0].column);
    }
  }
  if (!saw_objects) throw ParseError("missing `objects:` line", lineno, 0);
  return g;
}

std::string groupoid_to_text(const FiniteGroupoid& g) {
  std::ostringstream out;
  out << "objects:";
  for (const auto& o : g.objects()) out << ' ' << o;
  out << '\n';
  for (const auto& a : g.arrows()) out << "arrow " << a.name << " : " << g.object_name(a.dom) << " -> " << g.object_name(a.cod) << '\n';
  for (std::size_t x = 0; x < g.object_count(); ++x) {
    if (auto id = g.identity(x)) out << "identity " << g.object_name(x) << " = " << g.arrow(*id).name << '\n';
  }
  for (std::size_t f = 0; f < g.arrow_count(); ++f) {
    for (std::size_t h = 0; h < g.arrow_count(); ++h) {
      if (auto c = g.composite(f, h)) out << "compose " << g.arrow(f).name << ' ' << g.arrow(h).name << " = " << g.arrow(*c).name << '\n';
    }
  }
  for (std::size_t f = 0; f < g.arrow_count(); ++f) {
    if (auto inv = g.inverse(f)) out << "inverse " << g.arrow(f).name << " = " << g.arrow(*inv).name << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Validation

std::string to_string(AxiomKind k) {
  switch (k) {
    case AxiomKind::MissingIdentity: return "missing identity";
    case AxiomKind::IdentityTyping: return "identity typing";
    case AxiomKind::MissingComposite: return "missing composite";
    case AxiomKind::CompositeTyping: return "composite typing";
    case AxiomKind::Associativity: return "associativity";
    case AxiomKind::IdentityLaw: return "identity law";
    case AxiomKind::MissingInverse: return "missing inverse";
    case AxiomKind::InverseTyping: return "inverse typing";
    case AxiomKind::InverseLaw: return "inverse law";
  }
  return "?";
}

std::vector<AxiomViolation> validate(const FiniteGroupoid& g) {
  std::vector<AxiomViolation> out;
  auto name = [&](std::size_t a) { return g.arrow(a).name; };
  std::size_t n = g.arrow_count();

  for (std::size_t x = 0; x < g.object_count(); ++x) {
    auto id = g.identity(x);
    if (!id) {
      out.push_back({AxiomKind::MissingIdentity, {g.object_name(x)}, "object " + g.object_name(x) + " has no declared identity"});
    } else if (g.arrow(*id).dom != x || g.arrow(*id).cod != x) {
      out.push_back({AxiomKind::IdentityTyping, {g.object_name(x), name(*id)}, "identity " + name(*id) + " is not a loop at " + g.object_name(x)});
    }
  }

  // Composites: totality and dom/cod coherence.
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      if (g.arrow(f).dom != g.arrow(h).cod) continue;
      auto c = g.composite(f, h);
      if (!c) {
        out.push_back({AxiomKind::MissingComposite, {name(f), name(h)}, "no composite recorded for " + name(f) + "∘" + name(h)});
      } else if (g.arrow(*c).dom != g.arrow(h).dom || g.arrow(*c).cod != g.arrow(f).cod) {
        out.push_back({AxiomKind::CompositeTyping, {name(f), name(h), name(*c)},
                       name(f) + "∘" + name(h) + " = " + name(*c) + " has the wrong domain or codomain"});
      }
    }
  }

  // Identity laws.
  for (std::size_t f = 0; f < n; ++f) {
    auto id_dom = g.identity(g.arrow(f).dom);
    auto id_cod = g.identity(g.arrow(f).cod);
    if (id_dom) {
      auto c = g.composite(f, *id_dom);
      if (c && *c != f) out.push_back({AxiomKind::IdentityLaw, {name(f), name(*id_dom)}, name(f) + "∘" + name(*id_dom) + " = " + name(*c) + " ≠ " + name(f)});
    }
    if (id_cod) {
      auto c = g.composite(*id_cod, f);
      if (c && *c != f) out.push_back({AxiomKind::IdentityLaw, {name(*id_cod), name(f)}, name(*id_cod) + "∘" + name(f) + " = " + name(*c) + " ≠ " + name(f)});
    }
  }

  // Associativity over all composable triples.
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      if (g.arrow(f).dom != g.arrow(h).cod) continue;
      auto fh = g.composite(f, h);
      for (std::size_t k = 0; k < n; ++k) {
        if (g.arrow(h).dom != g.arrow(k).cod) continue;
        auto hk = g.composite(h, k);
        if (!fh || !hk) continue;
        auto left = g.composite(*fh, k);
        auto right = g.composite(f, *hk);
        if (!left || !right) continue;  // reported as typing/missing above
        if (*left != *right) {
          out.push_back({AxiomKind::Associativity, {name(f), name(h), name(k)},
                         "(" + name(f) + "∘" + name(h) + ")∘" + name(k) + " = " + name(*left) + " but " + name(f) + "∘(" + name(h) + "∘" +
                             name(k) + ") = " + name(*right)});
        }
      }
    }
  }

  // Inverses.
  for (std::size_t f = 0; f < n; ++f) {
    auto inv = g.inverse(f);
    if (!inv) {
      out.push_back({AxiomKind::MissingInverse, {name(f)}, "arrow " + name(f) + " has no declared inverse"});
      continue;
    }
    if (g.arrow(*inv).dom != g.arrow(f).cod || g.arrow(*inv).cod != g.arrow(f).dom) {
      out.push_back({AxiomKind::InverseTyping, {name(f), name(*inv)}, "inverse " + name(*inv) + " of " + name(f) + " is not typed cod -> dom"});
      continue;
    }
    auto id_dom = g.identity(g.arrow(f).dom);
    auto id_cod = g.identity(g.arrow(f).cod);
    auto left = g.composite(*inv, f);
    auto right = g.composite(f, *inv);
    if (id_dom && left && *left != *id_dom) {
      out.push_back({AxiomKind::InverseLaw, {name(*inv), name(f)}, name(*inv) + "∘" + name(f) + " = " + name(*left) + " ≠ " + name(*id_dom)});
    }
    if (id_cod && right && *right != *id_cod) {
      out.push_back({AxiomKind::InverseLaw, {name(f), name(*inv)}, name(f) + "∘" + name(*inv) + " = " + name(*right) + " ≠ " + name(*id_cod)});
    }
  }
  return out;
}

void require_valid(const FiniteGroupoid& g) {
  auto v = validate(g);
  if (v.empty()) return;
  std::string msg = "groupoid axioms violated (" + std::to_string(v.size()) + "):";
  for (std::size_t i = 0; i < v.size() && i < 5; ++i) msg += "\n  " + to_string(v[i].kind) + ": " + v[i].message;
  throw InputError(msg);
}

// ---------------------------------------------------------------------------
// Orbits and isotropy

std::optional<std::size_t> Orbit::position(std::size_t object) const {
  auto it = std::find(members.begin(), members.end(), object);
  if (it == members.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

std::vector<Orbit> orbits(const FiniteGroupoid& g) {
  std::vector<Orbit> out;
  std::vector<bool> seen(g.object_count(), false);
  auto arrows_sorted = g.arrows_by_name();
  for (std::size_t x : g.objects_by_name()) {
    if (seen[x]) continue;
    auto id = g.identity(x);
    if (!id) throw InputError("object " + g.object_name(x) + " has no identity");
    std::vector<std::optional<std::size_t>> connect(g.object_count());
    connect[x] = *id;
    seen[x] = true;
    std::deque<std::size_t> queue{x};
    std::vector<std::size_t> members{x};
    while (!queue.empty()) {
      std::size_t y = queue.front();
      queue.pop_front();
      for (std::size_t a : arrows_sorted) {
        const ArrowInfo& info = g.arrow(a);
        if (info.dom != y || seen[info.cod]) continue;
        auto c = g.composite(a, *connect[y]);
        if (!c) throw InputError("missing composite " + info.name + "∘" + g.arrow(*connect[y]).name);
        seen[info.cod] = true;
        connect[info.cod] = *c;
        members.push_back(info.cod);
        queue.push_back(info.cod);
      }
    }
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return g.object_name(a) < g.object_name(b); });
    Orbit o;
    o.basepoint = x;
    o.members = members;
    for (std::size_t m : members) o.connecting.push_back(*connect[m]);
    out.push_back(std::move(o));
  }
  return out;
}

std::optional<std::size_t> IsotropyGroup::element_of(std::size_t arrow) const {
  auto it = std::find(arrows.begin(), arrows.end(), arrow);
  if (it == arrows.end()) return std::nullopt;
  return static_cast<std::size_t>(it - arrows.begin());
}

IsotropyGroup isotropy(const FiniteGroupoid& g, std::size_t x) {
  if (x >= g.object_count()) throw InputError("unknown object index " + std::to_string(x));
  auto id = g.identity(x);
  if (!id) throw InputError("object " + g.object_name(x) + " has no identity");
  IsotropyGroup out;
  out.object = x;
  out.arrows.push_back(*id);
  for (std::size_t a : g.arrows_by_name()) {
    if (a != *id && g.arrow(a).dom == x && g.arrow(a).cod == x) out.arrows.push_back(a);
  }
  std::size_t n = out.arrows.size();
  std::vector<std::string> names;
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(g.arrow(out.arrows[i]).name);
    for (std::size_t j = 0; j < n; ++j) {
      auto c = g.composite(out.arrows[i], out.arrows[j]);
      if (!c) throw InputError("isotropy at " + g.object_name(x) + " is not closed under composition");
      auto k = out.element_of(*c);
      if (!k) throw InputError("isotropy at " + g.object_name(x) + " is not closed under composition");
      table[i * n + j] = *k;
    }
  }
  out.table = std::make_shared<const GroupTable>(std::move(names), std::move(table));
  return out;
}

std::vector<std::string> conjugation_failures(const FiniteGroupoid& g, const Orbit& orbit) {
  std::vector<std::string> out;
  IsotropyGroup base = isotropy(g, orbit.basepoint);
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    std::size_t y = orbit.members[k];
    std::size_t gy = orbit.connecting[k];
    auto gy_inv = g.inverse(gy);
    IsotropyGroup local = isotropy(g, y);
    std::vector<std::size_t> map(local.arrows.size());
    bool ok = gy_inv.has_value() && local.arrows.size() == base.arrows.size();
    for (std::size_t i = 0; ok && i < local.arrows.size(); ++i) {
      auto hg = g.composite(local.arrows[i], gy);
      auto c = hg ? g.composite(*gy_inv, *hg) : std::nullopt;
      auto e = c ? base.element_of(*c) : std::nullopt;
      if (!e) {
        ok = false;
        break;
      }
      map[i] = *e;
    }
    if (!ok || !local.table->isomorphic_via(*base.table, map)) out.push_back(g.object_name(y));
  }
  return out;
}

std::optional<std::size_t> StructuredGroupoid::arrow_count() const {
  std::size_t total = 0;
  for (const auto& o : orbits) {
    if (!o.isotropy.is_finite()) return std::nullopt;
    total += o.size * o.size * *o.isotropy.order();
  }
  return total;
}

StructuredGroupoid structured_from_finite(const FiniteGroupoid& g) {
  StructuredGroupoid sg;
  for (const auto& o : orbits(g)) {
    sg.orbits.push_back({o.size(), IsotropyDescriptor::finite(isotropy(g, o.basepoint).table)});
  }
  return sg;
}

}  // namespace ampalg
