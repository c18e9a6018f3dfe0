#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "ampalg/errors.hpp"
#include "ampalg/leavitt.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace ampalg;
using namespace testsupport;

namespace {

const std::vector<BoundaryPath>* finite_paths(const BoundaryEnumeration& e) { return std::get_if<std::vector<BoundaryPath>>(&e); }

std::vector<std::string> rendered(const Graph& g) {
  auto cycles = enumerate_cycles(g);
  std::vector<std::string> out;
  auto paths = boundary_paths(g);
  for (const auto& p : std::get<std::vector<BoundaryPath>>(paths)) out.push_back(render_path(g, cycles, p));
  return out;
}

bool acyclic(const Graph& g) { return enumerate_cycles(g).empty(); }

}  // namespace

TEST_CASE("graph parsing") {
  auto a2 = parse_graph("vertices: u v\nedge e : u -> v\n");
  CHECK(a2.vertex_count() == 2);
  CHECK(a2.edge_count() == 1);
  CHECK(a2.is_sink(*a2.find_vertex("v")));
  CHECK_THROWS_WITH_AS(parse_graph("vertices: u\nedge e : u -> w\n"), doctest::Contains("undeclared vertex 'w'"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: u\nedge e u -> u\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: u u\n"), InputError);
  for (const auto& [name, g] : graph_corpus()) CHECK(graph_to_text(parse_graph(graph_to_text(g))) == graph_to_text(g));
}

TEST_CASE("cycle enumeration") {
  CHECK(enumerate_cycles(graph_from_text("vertices: a b\nedge e : a -> b\n")).empty());
  CHECK(enumerate_cycles(graph_from_text("vertices: v\nedge e : v -> v\n")).size() == 1);
  auto rose = graph_from_text("vertices: v\nedge e : v -> v\nedge f : v -> v\n");
  auto cs = enumerate_cycles(rose);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].length() == 1);
  CHECK(cs[1].length() == 1);
  auto c3 = graph_from_text("vertices: b a c\nedge x : b -> c\nedge y : c -> a\nedge z : a -> b\n");
  auto c3s = enumerate_cycles(c3);
  REQUIRE(c3s.size() == 1);
  // Canonical rotation starts at the least-named vertex.
  CHECK(c3.edge(c3s[0].edges.front()).name == "z");
}

TEST_CASE("cycles are simple and closed across the corpus") {
  for (const auto& [name, g] : graph_corpus()) {
    for (const auto& c : enumerate_cycles(g)) {
      auto vs = c.vertices(g);
      std::sort(vs.begin(), vs.end());
      CAPTURE(name);
      CHECK(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
      for (std::size_t i = 0; i < c.length(); ++i) CHECK(g.edge(c.edges[i]).range == g.edge(c.edges[(i + 1) % c.length()]).source);
    }
  }
}

TEST_CASE("condition (NE) and its witness") {
  auto rose = graph_from_text("vertices: v\nedge e : v -> v\nedge f : v -> v\n");
  auto ne = condition_ne(rose);
  CHECK_FALSE(ne.holds);
  REQUIRE(ne.witness.has_value());
  CHECK(rose.vertex_name(ne.witness->vertex) == "v");
  CHECK(rose.edge(ne.witness->exit_edge).name == "f");
  CHECK(condition_ne(graph_from_text("vertices: v\nedge e : v -> v\n")).holds);
  CHECK(condition_ne(graph_from_text("vertices: a b\nedge e : a -> b\nedge f : a -> b\n")).holds);
}

TEST_CASE("boundary path examples") {
  CHECK(rendered(graph_from_text("vertices: v\n")) == std::vector<std::string>{"eps_v"});
  CHECK(rendered(graph_from_text("vertices: u v\nedge e : u -> v\n")) == std::vector<std::string>{"eps_v", "e"});
  CHECK(rendered(graph_from_text("vertices: v\nedge l : v -> v\n")) == std::vector<std::string>{"(l)^inf"});
  CHECK(rendered(graph_from_text("vertices: u v\nedge s : u -> v\nedge l : v -> v\n")) ==
        std::vector<std::string>{"(l)^inf", "s.(l)^inf"});
  auto rose = boundary_paths(graph_from_text("vertices: v\nedge e : v -> v\nedge f : v -> v\n"));
  REQUIRE(std::holds_alternative<InfiniteBoundary>(rose));
  CHECK(std::get<InfiniteBoundary>(rose).family.front() == "f");
}

TEST_CASE("boundary is finite exactly under (NE), and matches a prefix count") {
  for (const auto& [name, g] : graph_corpus()) {
    auto paths = boundary_paths(g);
    CAPTURE(name);
    CHECK((finite_paths(paths) != nullptr) == condition_ne(g).holds);
    const std::size_t n = 2 * g.vertex_count() + 1;
    if (auto* ps = finite_paths(paths)) {
      CHECK(mpz_class(ps->size()) == boundary_prefix_count(g, n));
      CHECK(boundary_prefix_count(g, n + 3) == boundary_prefix_count(g, n));
    } else {
      CHECK(boundary_prefix_count(g, 2 * n) > boundary_prefix_count(g, n));
    }
  }
  // A few graphs outside the corpus where (NE) fails.
  for (const char* text : {"vertices: v w\nedge l : v -> v\nedge x : v -> w\n",
                           "vertices: a b\nedge f : a -> b\nedge g : b -> a\nedge h : b -> b\n"}) {
    auto g = graph_from_text(text);
    CHECK_FALSE(condition_ne(g).holds);
    CHECK(std::holds_alternative<InfiniteBoundary>(boundary_paths(g)));
    CHECK(boundary_prefix_count(g, 12) > boundary_prefix_count(g, 6));
  }
}

TEST_CASE("is_arrow agrees with the truncation oracle") {
  std::size_t checked = 0;
  for (const auto& [name, g] : graph_corpus()) {
    auto paths = boundary_paths(g);
    auto* ps = finite_paths(paths);
    if (!ps) continue;
    auto cycles = enumerate_cycles(g);
    const auto bound = static_cast<std::int64_t>(2 * g.vertex_count());
    for (const auto& eta : *ps) {
      for (const auto& gamma : *ps) {
        for (std::int64_t k = -bound; k <= bound; ++k) {
          CAPTURE(name);
          CAPTURE(render_path(g, cycles, eta));
          CAPTURE(k);
          CAPTURE(render_path(g, cycles, gamma));
          CHECK(is_arrow(eta, k, gamma) == truncated_is_arrow(g, cycles, eta, k, gamma));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("is_arrow reference triples") {
  auto a2 = graph_from_text("vertices: u v\nedge e : u -> v\n");
  auto ps = std::get<std::vector<BoundaryPath>>(boundary_paths(a2));
  CHECK(is_arrow(ps[1], 1, ps[0]));
  CHECK_FALSE(is_arrow(ps[1], 0, ps[0]));
  for (const auto& p : ps) CHECK(is_arrow(p, 0, p));
  auto loop = graph_from_text("vertices: v\nedge l : v -> v\n");
  auto lp = std::get<std::vector<BoundaryPath>>(boundary_paths(loop));
  for (std::int64_t k = -7; k <= 7; ++k) CHECK(is_arrow(lp[0], k, lp[0]));
}

TEST_CASE("graph groupoid orbits and isotropy") {
  for (const auto& [name, g] : graph_corpus()) {
    if (!condition_ne(g).holds) {
      CHECK_THROWS_AS(graph_groupoid(g), InputError);
      continue;
    }
    auto gg = graph_groupoid(g);
    CAPTURE(name);
    CHECK(gg.boundary_size() == std::get<std::vector<BoundaryPath>>(boundary_paths(g)).size());
    REQUIRE(gg.orbits.size() == gg.structured.orbits.size());
    for (std::size_t i = 0; i < gg.orbits.size(); ++i) {
      const auto& o = gg.orbits[i];
      CHECK(gg.structured.orbits[i].isotropy.is_integers() == o.lasso);
      CHECK(gg.structured.orbits[i].size == o.members.size());
      if (o.lasso) {
        // Loops at the basepoint occur in exactly the degrees divisible by the cycle length.
        const auto len = static_cast<std::int64_t>(gg.cycles[o.anchor].length());
        for (std::int64_t k = -2 * len; k <= 2 * len; ++k) CHECK(is_arrow(o.members[0], k, o.members[0]) == (k % len == 0));
      } else {
        for (std::int64_t k = -3; k <= 3; ++k) CHECK(is_arrow(o.members[0], k, o.members[0]) == (k == 0));
      }
      for (std::size_t m = 0; m < o.members.size(); ++m) {
        CHECK(o.connecting_degree[m] >= 0);
        CHECK(is_arrow(o.members[m], o.connecting_degree[m], o.members[0]));
      }
    }
    if (acyclic(g)) {
      std::vector<mpz_class> sizes;
      for (const auto& o : gg.orbits) sizes.push_back(o.members.size());
      CHECK(sizes == paths_to_sinks(g));
    }
  }
}

TEST_CASE("graph groupoid reference shapes") {
  auto shape = [](const char* text) {
    auto g = graph_from_text(text);
    return leavitt_verdicts(g, RingDescriptor::rationals()).shape_string();
  };
  CHECK(shape("vertices: u v\nedge e : u -> v\n") == "M_2(Q)");
  CHECK(shape("vertices: v\nedge l : v -> v\n") == "M_1(Laurent(Q))");
  CHECK(shape("vertices: u v x\nedge e : u -> v\nedge l : x -> x\n") == "M_2(Q) x M_1(Laurent(Q))");
}

TEST_CASE("phi on graph arrows is a functor into matrix units") {
  for (const auto& [name, g] : graph_corpus()) {
    if (!condition_ne(g).holds) continue;
    auto gg = graph_groupoid(g);
    auto ps = std::get<std::vector<BoundaryPath>>(boundary_paths(g));
    const std::int64_t bound = 4;
    CAPTURE(name);
    for (const auto& a : ps) {
      auto id = phi_graph_arrow(gg, a, 0, a);
      REQUIRE(id.has_value());
      CHECK(std::get<1>(*id) == std::get<2>(*id));
      CHECK(std::get<3>(*id) == 0);
      for (const auto& b : ps) {
        for (const auto& c : ps) {
          for (std::int64_t k = -bound; k <= bound; ++k) {
            auto ab = phi_graph_arrow(gg, a, k, b);
            CHECK(ab.has_value() == is_arrow(a, k, b));
            if (!ab) continue;
            for (std::int64_t m = -bound; m <= bound; ++m) {
              auto bc = phi_graph_arrow(gg, b, m, c);
              if (!bc) continue;
              auto ac = phi_graph_arrow(gg, a, k + m, c);
              REQUIRE(ac.has_value());
              CHECK(std::get<0>(*ac) == std::get<0>(*ab));
              CHECK(std::get<1>(*ac) == std::get<1>(*ab));
              CHECK(std::get<2>(*ac) == std::get<2>(*bc));
              CHECK(std::get<3>(*ac) == std::get<3>(*ab) + std::get<3>(*bc));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Leavitt relations hold over several rings") {
  for (const auto& [name, g] : graph_corpus()) {
    if (!condition_ne(g).holds) continue;
    auto gg = graph_groupoid(g);
    for (const char* rt : {"Q", "Z", "GF(2)", "Z/6"}) {
      auto rep = verify_leavitt_relations(gg, parse_ring_descriptor(rt));
      CAPTURE(name);
      CAPTURE(rt);
      CHECK(rep.ok());
      CHECK(rep.find(leavitt_labels::kCuntzKrieger1) != nullptr);
      if (!gg.cycles.empty()) CHECK(rep.find(leavitt_labels::kCoverage) != nullptr);
    }
  }
}

TEST_CASE("single loop: the edge maps to the Laurent generator") {
  auto gg = graph_groupoid(graph_from_text("vertices: v\nedge l : v -> v\n"));
  auto z = RingDescriptor::integers();
  auto im = generator_images(gg, z);
  auto shape = gg.structured.orbits;
  CHECK(im.edge[0] == BlockMatrix::unit(shape, RingElement::one(z), 0, 0, 0, 1));
  CHECK(im.ghost[0] == BlockMatrix::unit(shape, RingElement::one(z), 0, 0, 0, -1));
  CHECK(im.vertex[0] == BlockMatrix::identity(shape, z));
}

TEST_CASE("generated subalgebra of an acyclic graph fills its blocks") {
  for (const auto& [name, g] : graph_corpus()) {
    if (!acyclic(g)) continue;
    auto gg = graph_groupoid(g);
    mpz_class expected = 0;
    for (const auto& n : paths_to_sinks(g)) expected += n * n;
    CAPTURE(name);
    CHECK(mpz_class(generated_subalgebra_dimension(gg)) == expected);
  }
  auto a3 = graph_groupoid(graph_from_text("vertices: u v w\nedge e : u -> v\nedge f : v -> w\n"));
  CHECK(generated_subalgebra_dimension(a3) == 9);
}

TEST_CASE("Leavitt verdicts") {
  auto rose = graph_from_text("vertices: v\nedge e : v -> v\nedge f : v -> v\n");
  for (const char* rt : {"Z", "Q", "GF(2)", "GF(3)", "Z/6", "Z/4", "Laurent(Q)", "Laurent(Z)", "Product(Q, GF(2))"}) {
    auto v = leavitt_verdicts(rose, parse_ring_descriptor(rt));
    CAPTURE(rt);
    CHECK_FALSE(v.noetherian);
    CHECK_FALSE(v.artinian);
    CHECK_FALSE(v.semisimple);
  }
  auto a3 = graph_from_text("vertices: u v w\nedge e : u -> v\nedge f : v -> w\n");
  auto va3 = leavitt_verdicts(a3, RingDescriptor::rationals());
  CHECK((va3.noetherian && va3.artinian && va3.semisimple));
  CHECK(va3.shape_string() == "M_3(Q)");
  auto loop = leavitt_verdicts(graph_from_text("vertices: v\nedge l : v -> v\n"), RingDescriptor::integers());
  CHECK(loop.noetherian);
  CHECK_FALSE(loop.artinian);
  CHECK(loop.shape_string() == "M_1(Laurent(Z))");
  for (const auto& [name, g] : graph_corpus()) {
    if (!condition_ne(g).holds) continue;
    for (const char* rt : {"Z", "Q", "GF(2)", "Z/4", "Laurent(Q)"}) {
      auto r = parse_ring_descriptor(rt);
      auto lv = leavitt_verdicts(g, r);
      auto cv = verdicts(graph_groupoid(g).structured, r);
      CAPTURE(name);
      CAPTURE(rt);
      CHECK(lv.noetherian == cv.noetherian);
      CHECK(lv.artinian == cv.artinian);
      CHECK(lv.semisimple == cv.semisimple);
      CHECK(lv.shape_string() == cv.shape_string());
    }
  }
}
