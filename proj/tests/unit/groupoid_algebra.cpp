#include <random>

#include "doctest.h"

#include "ampalg/builders.hpp"
#include "ampalg/errors.hpp"
#include "ampalg/groupoid_algebra.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace ampalg;
using namespace testsupport;

namespace {

std::vector<RingDescriptor> test_rings() {
  return {RingDescriptor::rationals(), RingDescriptor::integers(), RingDescriptor::galois_field(2),
          RingDescriptor::galois_field(3), RingDescriptor::modular_integers(6)};
}

}  // namespace

TEST_CASE("convolution equals the basis-rule product on random elements") {
  std::mt19937 rng(31337);
  for (const auto& [name, g] : groupoid_corpus()) {
    for (const auto& r : test_rings()) {
      CAPTURE(name);
      CAPTURE(r.to_string());
      for (int trial = 0; trial < 8; ++trial) {
        auto a = random_element(g, r, rng, 5);
        auto b = random_element(g, r, rng, 5);
        CHECK(convolve(a, b) == basis_rule_product(a, b));
      }
    }
  }
}

TEST_CASE("convolution is associative and unital") {
  std::mt19937 rng(5);
  for (const auto& [name, g] : groupoid_corpus()) {
    auto r = RingDescriptor::integers();
    auto one = AlgebraElement::unit(g, r);
    for (int trial = 0; trial < 4; ++trial) {
      auto a = random_element(g, r, rng, 4), b = random_element(g, r, rng, 4), c = random_element(g, r, rng, 4);
      CAPTURE(name);
      CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
      CHECK(convolve(one, a) == a);
      CHECK(convolve(a, one) == a);
    }
  }
}

TEST_CASE("phi is a ring isomorphism on random elements") {
  std::mt19937 rng(2024);
  for (const auto& [name, g] : groupoid_corpus()) {
    for (const auto& r : test_rings()) {
      auto d = decompose(g, r);
      CAPTURE(name);
      CAPTURE(r.to_string());
      CHECK(phi(d, AlgebraElement::unit(g, r)) == BlockMatrix::identity(d.shape(), r));
      for (int trial = 0; trial < 4; ++trial) {
        auto a = random_element(g, r, rng, 6), b = random_element(g, r, rng, 6);
        CHECK(phi(d, convolve(a, b)) == phi(d, a) * phi(d, b));
        CHECK(phi(d, a + b) == phi(d, a) + phi(d, b));
        CHECK(phi_inv(d, phi(d, a)) == a);
      }
    }
  }
}

TEST_CASE("exhaustive verification passes on the corpus") {
  for (const auto& [name, g] : groupoid_corpus()) {
    auto d = decompose(g, RingDescriptor::galois_field(3));
    auto rep = verify_isomorphism(d);
    CAPTURE(name);
    CHECK(rep.ok());
    const auto* mult = rep.find(check_labels::kMultiplicative);
    REQUIRE(mult != nullptr);
    CHECK(mult->total == g->arrow_count() * g->arrow_count());
  }
}

TEST_CASE("block sizes and isotropy orders account for every arrow") {
  for (const auto& [name, g] : groupoid_corpus()) {
    auto d = decompose(g, RingDescriptor::rationals());
    std::size_t count = 0;
    for (const auto& s : d.shape()) count += s.size * s.size * *s.isotropy.order();
    CAPTURE(name);
    CHECK(count == g->arrow_count());
    CHECK(d.structured.arrow_count() == g->arrow_count());
  }
}

TEST_CASE("pair groupoid on two objects is M_2(R)") {
  auto g = std::make_shared<const FiniteGroupoid>(pair_groupoid(2));
  auto d = decompose(g, RingDescriptor::rationals());
  CHECK(render_shape(d.shape(), d.ring) == "M_2(Q)");
  auto rep = verify_isomorphism(d);
  CHECK(rep.find(check_labels::kMultiplicative)->summary() == "16/16");
}

TEST_CASE("an incoherent frame is caught by verification") {
  auto g = std::make_shared<const FiniteGroupoid>(pair_groupoid(2));
  auto frames = orbits(*g);
  REQUIRE(frames.size() == 1);
  // Point the connecting arrow for the second object at the wrong arrow.
  std::swap(frames[0].connecting[0], frames[0].connecting[1]);
  auto d = decompose_with_frames(g, RingDescriptor::rationals(), frames);
  CHECK_FALSE(verify_isomorphism(d).ok());
}

TEST_CASE("algebra element parsing and rendering") {
  auto g = std::make_shared<const FiniteGroupoid>(pair_groupoid(2));
  auto q = RingDescriptor::rationals();
  auto a = parse_algebra_element(g, q, "3*f_ab + (-1)*id_a + 1/2*f_ab");
  CHECK(a.coefficient(g->arrow_index("f_ab")) == RingElement::from_fraction(q, 7, 2));
  CHECK(parse_algebra_element(g, q, a.to_string()) == a);
  CHECK_THROWS_AS(parse_algebra_element(g, q, "2*nope"), InputError);
}

TEST_CASE("decompose rejects invalid groupoids") {
  auto bad = std::make_shared<const FiniteGroupoid>(parse_groupoid("objects: a\narrow id : a -> a\n"));
  CHECK_THROWS_AS(decompose(bad, RingDescriptor::rationals()), InputError);
}
