#include "ampalg/builders.hpp"

#include <stdexcept>

namespace ampalg {

namespace {

std::string object_letter(std::size_t i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i-- > 0);
  return s;
}

}  // namespace

FiniteGroupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pair groupoid needs at least one object");
  FiniteGroupoid g;
  for (std::size_t i = 0; i < n; ++i) g.add_object(object_letter(i));
  // arrow index y * n + z is the unique arrow y -> z
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      std::string name = y == z ? "id_" + object_letter(y) : "f_" + object_letter(y) + object_letter(z);
      g.add_arrow(name, y, z);
    }
  }
  auto arrow = [n](std::size_t y, std::size_t z) { return y * n + z; };
  for (std::size_t y = 0; y < n; ++y) g.set_identity(y, arrow(y, y));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      g.set_inverse(arrow(x, y), arrow(y, x));
      for (std::size_t z = 0; z < n; ++z) g.set_composite(arrow(y, z), arrow(x, y), arrow(x, z));
    }
  }
  return g;
}

FiniteGroupoid group_groupoid(const GroupTable& group) {
  FiniteGroupoid g;
  g.add_object("o");
  for (std::size_t a = 0; a < group.order(); ++a) g.add_arrow(group.name(a), 0, 0);
  g.set_identity(0, GroupTable::identity());
  for (std::size_t a = 0; a < group.order(); ++a) {
    g.set_inverse(a, group.inverse(a));
    for (std::size_t b = 0; b < group.order(); ++b) g.set_composite(a, b, group.multiply(a, b));
  }
  return g;
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  FiniteGroupoid g;
  std::size_t nb_obj = b.object_count();
  std::size_t nb = b.arrow_count();
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    for (std::size_t y = 0; y < nb_obj; ++y) g.add_object(a.object_name(x) + "|" + b.object_name(y));
  }
  for (std::size_t f = 0; f < a.arrow_count(); ++f) {
    for (std::size_t h = 0; h < nb; ++h) {
      const auto& af = a.arrow(f);
      const auto& bh = b.arrow(h);
      g.add_arrow(af.name + "|" + bh.name, af.dom * nb_obj + bh.dom, af.cod * nb_obj + bh.cod);
    }
  }
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    for (std::size_t y = 0; y < nb_obj; ++y) {
      auto ia = a.identity(x);
      auto ib = b.identity(y);
      if (ia && ib) g.set_identity(x * nb_obj + y, *ia * nb + *ib);
    }
  }
  for (std::size_t f1 = 0; f1 < a.arrow_count(); ++f1) {
    for (std::size_t h1 = 0; h1 < nb; ++h1) {
      auto i1 = a.inverse(f1);
      auto i2 = b.inverse(h1);
      if (i1 && i2) g.set_inverse(f1 * nb + h1, *i1 * nb + *i2);
      for (std::size_t f2 = 0; f2 < a.arrow_count(); ++f2) {
        auto ca = a.composite(f1, f2);
        if (!ca) continue;
        for (std::size_t h2 = 0; h2 < nb; ++h2) {
          auto cb = b.composite(h1, h2);
          if (cb) g.set_composite(f1 * nb + h1, f2 * nb + h2, *ca * nb + *cb);
        }
      }
    }
  }
  return g;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b, const std::string& left_prefix,
                              const std::string& right_prefix) {
  FiniteGroupoid g;
  std::size_t obj_off = a.object_count();
  std::size_t arr_off = a.arrow_count();
  for (const auto& o : a.objects()) g.add_object(left_prefix + o);
  for (const auto& o : b.objects()) g.add_object(right_prefix + o);
  for (const auto& f : a.arrows()) g.add_arrow(left_prefix + f.name, f.dom, f.cod);
  for (const auto& f : b.arrows()) g.add_arrow(right_prefix + f.name, f.dom + obj_off, f.cod + obj_off);
  auto copy = [&](const FiniteGroupoid& src, std::size_t oo, std::size_t ao) {
    for (std::size_t x = 0; x < src.object_count(); ++x) {
      if (auto id = src.identity(x)) g.set_identity(x + oo, *id + ao);
    }
    for (std::size_t f = 0; f < src.arrow_count(); ++f) {
      if (auto inv = src.inverse(f)) g.set_inverse(f + ao, *inv + ao);
      for (std::size_t h = 0; h < src.arrow_count(); ++h) {
        if (auto c = src.composite(f, h)) g.set_composite(f + ao, h + ao, *c + ao);
      }
    }
  };
  copy(a, 0, 0);
  copy(b, obj_off, arr_off);
  return g;
}

FiniteGroupoid action_groupoid(const GroupTable& group, const std::vector<std::vector<std::size_t>>& action) {
  std::size_t n = group.order();
  if (action.size() != n) throw std::invalid_argument("action needs one permutation per group element");
  std::size_t m = action.front().size();
  for (std::size_t a = 0; a < n; ++a) {
    if (action[a].size() != m) throw std::invalid_argument("action permutations differ in size");
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < m; ++x) {
        if (action[group.multiply(a, b)][x] != action[a][action[b][x]]) throw std::invalid_argument("not a left action");
      }
    }
  }
  FiniteGroupoid g;
  for (std::size_t x = 0; x < m; ++x) g.add_object("x" + std::to_string(x));
  // arrow index a * m + x is (a, x): x -> a·x
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < m; ++x) g.add_arrow(group.name(a) + "@x" + std::to_string(x), x, action[a][x]);
  }
  for (std::size_t x = 0; x < m; ++x) g.set_identity(x, GroupTable::identity() * m + x);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < m; ++x) {
      g.set_inverse(a * m + x, group.inverse(a) * m + action[a][x]);
      // (b, a·x) ∘ (a, x) = (ba, x)
      for (std::size_t b = 0; b < n; ++b) g.set_composite(b * m + action[a][x], a * m + x, group.multiply(b, a) * m + x);
    }
  }
  return g;
}

}  // namespace ampalg
