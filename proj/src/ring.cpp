#include "ampalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ampalg/errors.hpp"

namespace ampalg {

namespace {

[[noreturn]] void mismatch(const RingDescriptor& a, const RingDescriptor& b) {
  throw std::invalid_argument("ring descriptor mismatch: " + a.to_string() + " vs " + b.to_string());
}

std::int64_t reduce(const mpz_class& v, std::int64_t n) {
  mpz_class r = v % n;
  if (r < 0) r += n;
  return r.get_si();
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

std::int64_t checked_exponent_sum(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Laurent exponent overflow");
  return out;
}

// Extended gcd inverse modulo n; nullopt when gcd(a, n) != 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
  mpz_class inv;
  mpz_class aa(static_cast<long>(a));
  mpz_class nn(static_cast<long>(n));
  if (mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), nn.get_mpz_t()) == 0) return std::nullopt;
  return reduce(inv, n);
}

}  // namespace

// ---------------------------------------------------------------------------
// Number theory helpers

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_squarefree(std::int64_t n) {
  for (std::int64_t p : prime_divisors(n)) {
    if ((n / p) % p == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescriptor RingDescriptor::integers() {
  static const RingDescriptor z(std::make_shared<const Node>(Node{RingKind::Integers, 0, {}}));
  return z;
}

RingDescriptor RingDescriptor::rationals() {
  static const RingDescriptor q(std::make_shared<const Node>(Node{RingKind::Rationals, 0, {}}));
  return q;
}

RingDescriptor RingDescriptor::galois_field(std::int64_t p) {
  if (!is_prime(p)) throw InputError("GF(" + std::to_string(p) + "): " + std::to_string(p) + " is not prime");
  return RingDescriptor(std::make_shared<const Node>(Node{RingKind::GaloisField, p, {}}));
}

RingDescriptor RingDescriptor::modular_integers(std::int64_t n) {
  if (n < 2) throw InputError("Z/" + std::to_string(n) + ": modulus must be at least 2 (the zero ring is not supported)");
  return RingDescriptor(std::make_shared<const Node>(Node{RingKind::ModularIntegers, n, {}}));
}

RingDescriptor RingDescriptor::laurent(const RingDescriptor& base) {
  if (base.contains_laurent()) {
    throw InputError("Laurent(" + base.to_string() + "): Laurent rings nest at most one level deep");
  }
  return RingDescriptor(std::make_shared<const Node>(Node{RingKind::Laurent, 0, {base}}));
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> factors) {
  if (factors.empty()) throw InputError("Product() needs at least one factor");
  return RingDescriptor(std::make_shared<const Node>(Node{RingKind::Product, 0, std::move(factors)}));
}

const RingDescriptor& RingDescriptor::base() const {
  if (kind() != RingKind::Laurent) throw std::logic_error("base() on a non-Laurent ring");
  return node_->children.front();
}

const std::vector<RingDescriptor>& RingDescriptor::factors() const {
  if (kind() != RingKind::Product) throw std::logic_error("factors() on a non-Product ring");
  return node_->children;
}

bool RingDescriptor::contains_laurent() const {
  if (kind() == RingKind::Laurent) return true;
  return std::any_of(node_->children.begin(), node_->children.end(),
                     [](const RingDescriptor& c) { return c.contains_laurent(); });
}

std::string RingDescriptor::to_string() const {
  switch (kind()) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::GaloisField: return "GF(" + std::to_string(modulus()) + ")";
    case RingKind::ModularIntegers: return "Z/" + std::to_string(modulus());
    case RingKind::Laurent: return "Laurent(" + base().to_string() + ")";
    case RingKind::Product: {
      std::string out = "Product(";
      for (std::size_t i = 0; i < factors().size(); ++i) {
        if (i) out += ",";
        out += factors()[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->modulus == b.node_->modulus &&
         a.node_->children == b.node_->children;
}

// ---------------------------------------------------------------------------
// Descriptor parser

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  RingDescriptor parse_all() {
    RingDescriptor r = parse_ring();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ring descriptor: " + what, 1, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 18) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoll(digits);
  }

  RingDescriptor parse_ring() {
    skip_ws();
    if (accept("Laurent")) {
      expect('(');
      std::size_t at = pos_;
      RingDescriptor base = parse_ring();
      expect(')');
      if (base.contains_laurent()) {
        pos_ = at;
        fail("Laurent nesting depth exceeds 1");
      }
      return RingDescriptor::laurent(base);
    }
    if (accept("Product")) {
      expect('(');
      std::vector<RingDescriptor> factors;
      factors.push_back(parse_ring());
      while (accept(",")) factors.push_back(parse_ring());
      expect(')');
      return RingDescriptor::product(std::move(factors));
    }
    if (accept("GF")) {
      expect('(');
      std::size_t at = pos_;
      std::int64_t p = number();
      expect(')');
      if (!is_prime(p)) {
        pos_ = at;
        fail(std::to_string(p) + " is not prime in GF(p)");
      }
      return RingDescriptor::galois_field(p);
    }
    if (accept("Q")) return RingDescriptor::rationals();
    if (accept("Z")) {
      if (accept("/")) {
        std::size_t at = pos_;
        std::int64_t n = number();
        if (n < 2) {
          pos_ = at;
          fail("modulus " + std::to_string(n) + " < 2 in Z/n (zero ring rejected)");
        }
        return RingDescriptor::modular_integers(n);
      }
      return RingDescriptor::integers();
    }
    fail("expected one of Z, Q, GF(p), Z/n, Laurent(...), Product(...)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingDescriptor parse_ring_descriptor(std::string_view text) { return DescriptorParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Predicates

RingPredicates ring_predicates(const RingDescriptor& r) {
  RingPredicates out;
  switch (r.kind()) {
    case RingKind::Integers:
      out.noetherian = true;
      out.characteristics = {0};
      break;
    case RingKind::Rationals:
      out = {true, true, true, {0}};
      break;
    case RingKind::GaloisField:
      out = {true, true, true, {r.modulus()}};
      break;
    case RingKind::ModularIntegers: {
      auto primes = prime_divisors(r.modulus());
      out = {true, true, is_squarefree(r.modulus()), {primes.begin(), primes.end()}};
      break;
    }
    case RingKind::Laurent: {
      RingPredicates b = ring_predicates(r.base());
      out.noetherian = b.noetherian;
      out.characteristics = b.characteristics;
      break;
    }
    case RingKind::Product:
      out.noetherian = out.artinian = out.field_product = true;
      for (const auto& f : r.factors()) {
        RingPredicates p = ring_predicates(f);
        out.noetherian = out.noetherian && p.noetherian;
        out.artinian = out.artinian && p.artinian;
        out.field_product = out.field_product && p.field_product;
        out.characteristics.insert(p.characteristics.begin(), p.characteristics.end());
      }
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement RingElement::zero(const RingDescriptor& r) {
  switch (r.kind()) {
    case RingKind::Integers: return RingElement(r, mpz_class(0));
    case RingKind::Rationals: return RingElement(r, mpq_class(0));
    case RingKind::GaloisField:
    case RingKind::ModularIntegers: return RingElement(r, std::int64_t{0});
    case RingKind::Laurent: return RingElement(r, LaurentTerms{});
    case RingKind::Product: {
      std::vector<RingElement> parts;
      for (const auto& f : r.factors()) parts.push_back(zero(f));
      return RingElement(r, std::move(parts));
    }
  }
  throw std::logic_error("unreachable");
}

RingElement RingElement::one(const RingDescriptor& r) { return from_integer(r, mpz_class(1)); }

RingElement RingElement::from_integer(const RingDescriptor& r, const mpz_class& value) {
  switch (r.kind()) {
    case RingKind::Integers: return RingElement(r, value);
    case RingKind::Rationals: return RingElement(r, mpq_class(value));
    case RingKind::GaloisField:
    case RingKind::ModularIntegers: return RingElement(r, reduce(value, r.modulus()));
    case RingKind::Laurent: {
      RingElement c = from_integer(r.base(), value);
      LaurentTerms t;
      if (!c.is_zero()) t.terms.emplace_back(0, std::move(c));
      return RingElement(r, std::move(t));
    }
    case RingKind::Product: {
      std::vector<RingElement> parts;
      for (const auto& f : r.factors()) parts.push_back(from_integer(f, value));
      return RingElement(r, std::move(parts));
    }
  }
  throw std::logic_error("unreachable");
}

RingElement RingElement::from_fraction(const RingDescriptor& r, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("division by zero in coefficient literal");
  if (r.kind() == RingKind::Rationals) {
    mpq_class q(num, den);
    q.canonicalize();
    return RingElement(r, q);
  }
  auto inv = from_integer(r, den).inverse();
  if (!inv) throw InputError(den.get_str() + " is not invertible in " + r.to_string());
  return from_integer(r, num) * *inv;
}

RingElement RingElement::monomial(const RingDescriptor& laurent_ring, const RingElement& coeff, std::int64_t exponent) {
  if (laurent_ring.kind() != RingKind::Laurent) throw std::invalid_argument("monomial() needs a Laurent ring");
  if (coeff.descriptor() != laurent_ring.base()) mismatch(coeff.descriptor(), laurent_ring.base());
  LaurentTerms t;
  if (!coeff.is_zero()) t.terms.emplace_back(exponent, coeff);
  return RingElement(laurent_ring, std::move(t));
}

RingElement RingElement::tuple(const RingDescriptor& product_ring, std::vector<RingElement> components) {
  const auto& fs = product_ring.factors();
  if (fs.size() != components.size()) throw std::invalid_argument("tuple arity does not match Product ring");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (components[i].descriptor() != fs[i]) mismatch(components[i].descriptor(), fs[i]);
  }
  return RingElement(product_ring, std::move(components));
}

bool RingElement::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpz_class> || std::is_same_v<T, mpq_class>) {
          return v == 0;
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return v == 0;
        } else if constexpr (std::is_same_v<T, LaurentTerms>) {
          return v.terms.empty();
        } else {
          return std::all_of(v.begin(), v.end(), [](const RingElement& c) { return c.is_zero(); });
        }
      },
      value_);
}

bool RingElement::is_one() const { return *this == one(ring_); }

std::optional<RingElement> RingElement::inverse() const {
  switch (ring_.kind()) {
    case RingKind::Integers: {
      const auto& v = std::get<mpz_class>(value_);
      if (v == 1 || v == -1) return *this;
      return std::nullopt;
    }
    case RingKind::Rationals: {
      const auto& v = std::get<mpq_class>(value_);
      if (v == 0) return std::nullopt;
      return RingElement(ring_, mpq_class(1 / v));
    }
    case RingKind::GaloisField:
    case RingKind::ModularIntegers: {
      auto inv = inverse_mod(std::get<std::int64_t>(value_), ring_.modulus());
      if (!inv) return std::nullopt;
      return RingElement(ring_, *inv);
    }
    case RingKind::Laurent: {
      // Units of R[x, x^-1] over a reduced R are u x^k; over the supported
      // rings a single term with an invertible coefficient is the only
      // case we invert.
      const auto& t = std::get<LaurentTerms>(value_).terms;
      if (t.size() != 1) return std::nullopt;
      auto c = t.front().second.inverse();
      if (!c) return std::nullopt;
      if (t.front().first == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("Laurent exponent overflow");
      return monomial(ring_, *c, -t.front().first);
    }
    case RingKind::Product: {
      std::vector<RingElement> parts;
      for (const auto& c : std::get<std::vector<RingElement>>(value_)) {
        auto inv = c.inverse();
        if (!inv) return std::nullopt;
        parts.push_back(*inv);
      }
      return RingElement(ring_, std::move(parts));
    }
  }
  return std::nullopt;
}

RingElement RingElement::operator-() const { return zero(ring_) - *this; }

RingElement operator+(const RingElement& a, const RingElement& b) {
  if (a.ring_ != b.ring_) mismatch(a.ring_, b.ring_);
  const RingDescriptor& r = a.ring_;
  switch (r.kind()) {
    case RingKind::Integers: return RingElement(r, mpz_class(std::get<mpz_class>(a.value_) + std::get<mpz_class>(b.value_)));
    case RingKind::Rationals: return RingElement(r, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
    case RingKind::GaloisField:
    case RingKind::ModularIntegers: {
      std::int64_t n = r.modulus();
      std::int64_t s = std::get<std::int64_t>(a.value_) + std::get<std::int64_t>(b.value_);
      if (s >= n) s -= n;
      return RingElement(r, s);
    }
    case RingKind::Laurent: {
      const auto& x = std::get<LaurentTerms>(a.value_).terms;
      const auto& y = std::get<LaurentTerms>(b.value_).terms;
      LaurentTerms out;
      std::size_t i = 0, j = 0;
      while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
          out.terms.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
          out.terms.push_back(y[j++]);
        } else {
          RingElement c = x[i].second + y[j].second;
          if (!c.is_zero()) out.terms.emplace_back(x[i].first, std::move(c));
          ++i;
          ++j;
        }
      }
      return RingElement(r, std::move(out));
    }
    case RingKind::Product: {
      const auto& x = std::get<std::vector<RingElement>>(a.value_);
      const auto& y = std::get<std::vector<RingElement>>(b.value_);
      std::vector<RingElement> out;
      for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
      return RingElement(r, std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  if (a.ring_ != b.ring_) mismatch(a.ring_, b.ring_);
  const RingDescriptor& r = a.ring_;
  switch (r.kind()) {
    case RingKind::Integers: return RingElement(r, mpz_class(std::get<mpz_class>(a.value_) - std::get<mpz_class>(b.value_)));
    case RingKind::Rationals: return RingElement(r, mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
    case RingKind::GaloisField:
    case RingKind::ModularIntegers: {
      std::int64_t d = std::get<std::int64_t>(a.value_) - std::get<std::int64_t>(b.value_);
      if (d < 0) d += r.modulus();
      return RingElement(r, d);
    }
    case RingKind::Laurent: {
      LaurentTerms neg;
      for (const auto& [e, c] : std::get<LaurentTerms>(b.value_).terms) neg.terms.emplace_back(e, -c);
      return a + RingElement(r, std::move(neg));
    }
    case RingKind::Product: {
      const auto& x = std::get<std::vector<RingElement>>(a.value_);
      const auto& y = std::get<std::vector<RingElement>>(b.value_);
      std::vector<RingElement> out;
      for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] - y[i]);
      return RingElement(r, std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  if (a.ring_ != b.ring_) mismatch(a.ring_, b.ring_);
  const RingDescriptor& r = a.ring_;
  switch (r.kind()) {
    case RingKind::Integers: return RingElement(r, mpz_class(std::get<mpz_class>(a.value_) * std::get<mpz_class>(b.value_)));
    case RingKind::Rationals: return RingElement(r, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
    case RingKind::GaloisField:
    case RingKind::ModularIntegers:
      return RingElement(r, mul_mod(std::get<std::int64_t>(a.value_), std::get<std::int64_t>(b.value_), r.modulus()));
    case RingKind::Laurent: {
      const auto& x = std::get<LaurentTerms>(a.value_).terms;
      const auto& y = std::get<LaurentTerms>(b.value_).terms;
      RingElement acc = RingElement::zero(r);
      for (const auto& [ex, cx] : x) {
        LaurentTerms row;
        for (const auto& [ey, cy] : y) {
          RingElement c = cx * cy;
          if (!c.is_zero()) row.terms.emplace_back(checked_exponent_sum(ex, ey), std::move(c));
        }
        acc = acc + RingElement(r, std::move(row));
      }
      return acc;
    }
    case RingKind::Product: {
      const auto& x = std::get<std::vector<RingElement>>(a.value_);
      const auto& y = std::get<std::vector<RingElement>>(b.value_);
      std::vector<RingElement> out;
      for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] * y[i]);
      return RingElement(r, std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.ring_ != b.ring_) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, LaurentTerms>) {
          return x.terms == y.terms;
        } else {
          return x == y;
        }
      },
      a.value_);
}

std::string RingElement::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return std::get<mpz_class>(value_).get_str();
    case RingKind::Rationals: return std::get<mpq_class>(value_).get_str();
    case RingKind::GaloisField:
    case RingKind::ModularIntegers: return std::to_string(std::get<std::int64_t>(value_));
    case RingKind::Laurent: {
      const auto& t = std::get<LaurentTerms>(value_).terms;
      if (t.empty()) return "0";
      std::string out;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& [e, c] = t[i];
        if (i) out += " + ";
        std::string cs = c.to_string();
        if (e == 0) {
          out += cs;
          continue;
        }
        if (!c.is_one()) out += "(" + cs + ")*";
        out += "x";
        if (e != 1) out += "^" + std::to_string(e);
      }
      return out;
    }
    case RingKind::Product: {
      std::string out = "(";
      const auto& parts = std::get<std::vector<RingElement>>(value_);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

RingElement parse_ring_literal(const RingDescriptor& r, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("invalid coefficient literal '" + std::string(text) + "'", 1, 0);
  return RingElement::from_fraction(r, mpz_class(num), mpz_class(den));
}

}  // namespace ampalg
