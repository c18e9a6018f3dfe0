#pragma once

// Exact coefficient rings.
//
// A RingDescriptor names one ring of the finite grammar
//
//   ring := Z | Q | GF(p) | Z/n | Laurent(ring) | Product(ring, ...)
//
// and a RingElement is an exact value in such a ring. There is no floating
// point anywhere: integers and rationals are GMP values, residues are reduced
// into [0, n), Laurent polynomials are sparse exponent -> coefficient lists
// without zero terms, and products are tuples.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace ampalg {

enum class RingKind { Integers, Rationals, GaloisField, ModularIntegers, Laurent, Product };

/// Immutable handle to a ring of the descriptor grammar. Copies share the node.
class RingDescriptor {
 public:
  static RingDescriptor integers();
  static RingDescriptor rationals();
  static RingDescriptor galois_field(std::int64_t p);
  static RingDescriptor modular_integers(std::int64_t n);
  static RingDescriptor laurent(const RingDescriptor& base);
  static RingDescriptor product(std::vector<RingDescriptor> factors);

  RingKind kind() const { return node_->kind; }
  /// p for GF(p), n for Z/n, 0 otherwise.
  std::int64_t modulus() const { return node_->modulus; }
  /// Base ring of a Laurent ring.
  const RingDescriptor& base() const;
  /// Factors of a Product ring.
  const std::vector<RingDescriptor>& factors() const;

  bool contains_laurent() const;

  /// Canonical rendering; parse_ring_descriptor(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
  friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

 private:
  struct Node {
    RingKind kind;
    std::int64_t modulus = 0;
    std::vector<RingDescriptor> children;
  };
  explicit RingDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses the descriptor grammar. Whitespace is ignored. Throws ParseError
/// (syntax, with position) or InputError (non-prime p, n < 2, nested Laurent).
RingDescriptor parse_ring_descriptor(std::string_view text);

struct RingPredicates {
  bool noetherian = false;
  bool artinian = false;
  bool field_product = false;
  /// Characteristics of the residue fields involved; 0 stands for characteristic zero.
  std::set<std::int64_t> characteristics;
};

RingPredicates ring_predicates(const RingDescriptor& r);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);

class RingElement;

struct LaurentTerms {
  /// Strictly increasing exponents, no zero coefficients.
  std::vector<std::pair<std::int64_t, RingElement>> terms;
};

class RingElement {
 public:
  using Payload = std::variant<mpz_class, mpq_class, std::int64_t, LaurentTerms, std::vector<RingElement>>;

  static RingElement zero(const RingDescriptor& r);
  static RingElement one(const RingDescriptor& r);
  static RingElement from_integer(const RingDescriptor& r, const mpz_class& value);
  static RingElement from_integer(const RingDescriptor& r, long value) { return from_integer(r, mpz_class(value)); }
  /// num/den; requires den to be invertible in r. Throws InputError otherwise.
  static RingElement from_fraction(const RingDescriptor& r, const mpz_class& num, const mpz_class& den);
  /// coeff * x^exponent in Laurent(coeff's ring).
  static RingElement monomial(const RingDescriptor& laurent_ring, const RingElement& coeff, std::int64_t exponent);
  static RingElement tuple(const RingDescriptor& product_ring, std::vector<RingElement> components);

  const RingDescriptor& descriptor() const { return ring_; }
  const Payload& payload() const { return value_; }

  bool is_zero() const;
  bool is_one() const;

  /// Multiplicative inverse when it exists.
  std::optional<RingElement> inverse() const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
  RingElement& operator*=(const RingElement& b) { return *this = *this * b; }

  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  RingElement(RingDescriptor r, Payload v) : ring_(std::move(r)), value_(std::move(v)) {}

  RingDescriptor ring_;
  Payload value_;
};

/// Coefficient literal: an integer or a fraction `a/b`, optionally wrapped in
/// parentheses, e.g. `3`, `(-1)`, `1/2`.
RingElement parse_ring_literal(const RingDescriptor& r, std::string_view text);

}  // namespace ampalg
