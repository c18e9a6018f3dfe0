#include "corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ampalg/builders.hpp"

namespace testsupport {

using namespace ampalg;

std::vector<std::vector<std::size_t>> subgroups(const GroupTable& group) {
  const std::size_t n = group.order();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain the identity
    std::vector<std::size_t> elems;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) elems.push_back(i);
    }
    bool closed = true;
    for (auto a : elems) {
      for (auto b : elems) {
        if (!(mask & (1u << group.multiply(a, b)))) closed = false;
      }
    }
    if (closed) out.push_back(elems);
  }
  return out;
}

FiniteGroupoid random_action_groupoid(const GroupTable& group, std::uint32_t seed, std::size_t max_arrows) {
  std::mt19937 rng(seed);
  const auto subs = subgroups(group);
  const std::size_t n = group.order();
  // Points are left cosets gH, stored as sorted element lists.
  std::vector<std::vector<std::size_t>> points;
  std::vector<std::size_t> point_block;
  std::size_t budget = max_arrows / n;
  std::size_t blocks = 0;
  while (true) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (points.size() + n / subs[i].size() <= budget) candidates.push_back(i);
    }
    if (candidates.empty() || (blocks > 0 && rng() % 3 == 0)) break;
    const auto& h = subs[candidates[rng() % candidates.size()]];
    std::set<std::vector<std::size_t>> cosets;
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::size_t> c;
      for (auto x : h) c.push_back(group.multiply(g, x));
      std::sort(c.begin(), c.end());
      cosets.insert(c);
    }
    for (const auto& c : cosets) {
      points.push_back(c);
      point_block.push_back(blocks);
    }
    ++blocks;
  }
  // Shuffle the points so object names do not follow orbit structure.
  std::vector<std::size_t> perm(points.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<std::size_t>> shuffled(points.size());
  std::vector<std::size_t> shuffled_block(points.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    shuffled[perm[i]] = points[i];
    shuffled_block[perm[i]] = point_block[i];
  }
  std::vector<std::vector<std::size_t>> action(n, std::vector<std::size_t>(points.size()));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < shuffled.size(); ++x) {
      std::vector<std::size_t> image;
      for (auto y : shuffled[x]) image.push_back(group.multiply(a, y));
      std::sort(image.begin(), image.end());
      for (std::size_t z = 0; z < shuffled.size(); ++z) {
        if (shuffled[z] == image && shuffled_block[z] == shuffled_block[x]) action[a][x] = z;
      }
    }
  }
  return action_groupoid(group, action);
}

std::vector<NamedGroupoid> groupoid_corpus() {
  std::vector<NamedGroupoid> out;
  auto add = [&](std::string name, FiniteGroupoid g) {
    out.push_back({std::move(name), std::make_shared<const FiniteGroupoid>(std::move(g))});
  };
  for (std::size_t n = 1; n <= 4; ++n) add("pair" + std::to_string(n), pair_groupoid(n));
  add("group-1", group_groupoid(GroupTable::trivial()));
  for (std::size_t n = 2; n <= 6; ++n) add("group-C" + std::to_string(n), group_groupoid(GroupTable::cyclic(n)));
  add("group-V4", group_groupoid(GroupTable::klein_four()));
  add("group-S3", group_groupoid(GroupTable::symmetric(3)));
  add("pair2xC2", product_groupoid(pair_groupoid(2), group_groupoid(GroupTable::cyclic(2))));
  add("pair2xC3", product_groupoid(pair_groupoid(2), group_groupoid(GroupTable::cyclic(3))));
  add("pair3xC2", product_groupoid(pair_groupoid(3), group_groupoid(GroupTable::cyclic(2))));
  add("pair2+C2", disjoint_union(pair_groupoid(2), group_groupoid(GroupTable::cyclic(2)), "L.", "R."));
  add("C3+pair1", disjoint_union(group_groupoid(GroupTable::cyclic(3)), pair_groupoid(1), "L.", "R."));
  add("pair2+S3", disjoint_union(pair_groupoid(2), group_groupoid(GroupTable::symmetric(3)), "L.", "R."));
  add("pair1+pair1", disjoint_union(pair_groupoid(1), pair_groupoid(1), "L.", "R."));
  const GroupTable groups[] = {GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::cyclic(4), GroupTable::klein_four(),
                               GroupTable::symmetric(3), GroupTable::cyclic(6)};
  std::uint32_t seed = 20240611;
  for (int round = 0; round < 2; ++round) {
    for (const auto& g : groups) {
      add("action-" + g.structure_name() + "-" + std::to_string(seed), random_action_groupoid(g, seed, 30));
      ++seed;
    }
  }
  return out;
}

Graph graph_from_text(const std::string& text) { return parse_graph(text); }

std::vector<NamedGraph> graph_corpus() {
  std::vector<NamedGraph> out;
  auto add = [&](std::string name, const std::string& text) { out.push_back({std::move(name), parse_graph(text)}); };
  add("A1", "vertices: v\n");
  add("A2", "vertices: u v\nedge e : u -> v\n");
  add("A3", "vertices: u v w\nedge e : u -> v\nedge f : v -> w\n");
  add("A4", "vertices: a b c d\nedge e1 : a -> b\nedge e2 : b -> c\nedge e3 : c -> d\n");
  add("A5", "vertices: a b c d e\nedge e1 : a -> b\nedge e2 : b -> c\nedge e3 : c -> d\nedge e4 : d -> e\n");
  add("loop", "vertices: v\nedge e : v -> v\n");
  add("loop+spoke", "vertices: u v\nedge s : u -> v\nedge e : v -> v\n");
  add("loop+2spokes", "vertices: u w v\nedge s : u -> v\nedge t : w -> u\nedge r : w -> v\nedge e : v -> v\n");
  add("rose2", "vertices: v\nedge e : v -> v\nedge f : v -> v\n");
  add("A2+loop", "vertices: u v x\nedge e : u -> v\nedge l : x -> x\n");
  add("cycle3", "vertices: a b c\nedge e1 : a -> b\nedge e2 : b -> c\nedge e3 : c -> a\n");
  add("cycle3+exit", "vertices: a b c s\nedge e1 : a -> b\nedge e2 : b -> c\nedge e3 : c -> a\nedge x : b -> s\n");
  add("cycle3+spoke", "vertices: a b c p\nedge e1 : a -> b\nedge e2 : b -> c\nedge e3 : c -> a\nedge in : p -> b\n");
  add("tree", "vertices: r s t\nedge e : r -> s\nedge f : r -> t\n");
  add("diamond", "vertices: u v w x\nedge a : u -> v\nedge b : u -> w\nedge c : v -> x\nedge d : w -> x\n");
  add("double-edge", "vertices: u v\nedge e : u -> v\nedge f : u -> v\n");
  add("two-loops-chained", "vertices: u v\nedge a : u -> u\nedge b : u -> v\nedge c : v -> v\n");
  add("cycle2+spokes", "vertices: p q x y\nedge f : p -> q\nedge g : q -> p\nedge h : x -> p\nedge k : y -> x\nedge m : y -> q\n");
  add("loop+sink-part", "vertices: a b c d\nedge l : a -> a\nedge e : b -> c\nedge f : d -> c\n");
  return out;
}

}  // namespace testsupport
