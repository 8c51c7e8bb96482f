#pragma once

// Exact arithmetic in Z_p and GF(p^e).
//
// Elements are stored by their canonical integer encoding: the base-p digits
// of the value are the polynomial coefficients, constant term first. For e = 1
// the encoding is the residue itself.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heffter/error.hpp"

namespace heffter {

struct Element {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Returns (p, e) with q = p^e, or nothing if q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  std::uint32_t e = 0;
  while (q > 1) {
    q /= factors.front();
    ++e;
  }
  return std::pair{static_cast<std::uint32_t>(factors.front()), e};
}

namespace detail {

// Dense polynomials over Z_p, constant term first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

inline Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = pow_mod(f.back(), p - 2, p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t p) {
  Poly result = poly_mod(Poly{1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f of degree e is irreducible over Z_p iff x^(p^e) = x mod f
// and gcd(x^(p^(e/r)) - x, f) = 1 for every prime r dividing e.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t e = f.size() - 1;
  if (e == 0 || f.back() == 0) return false;
  if (e == 1) return true;
  const Poly x{0, 1};
  auto frobenius_power = [&](std::size_t k) {
    Poly h = x;
    for (std::size_t i = 0; i < k; ++i) h = poly_powmod(h, p, f, p);
    return h;
  };
  if (poly_sub(frobenius_power(e), x, p) != Poly{}) return false;
  for (std::uint64_t r : prime_factors(e)) {
    Poly g = poly_gcd(f, poly_sub(frobenius_power(e / r), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// A finite field GF(p^e) described by its prime, exponent and modulus.
///
/// The additive group of the field is the vertex set of K_q throughout this
/// library. Arithmetic is exact; the modulus is monic of degree e and stored
/// constant term first. For e = 1 the modulus is the polynomial x.
class Field {
 public:
  /// Smallest monic irreducible modulus of degree e, where candidates are
  /// ordered by their low-to-high coefficient vector with the constant term
  /// varying fastest.
  static Field make(std::uint64_t p, std::uint64_t e) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1) throw Error(ErrorCode::BadParameters, "exponent must be positive");
    const std::uint64_t q = checked_power(p, e);
    if (e == 1) return Field(static_cast<std::uint32_t>(p), 1, {0, 1});
    for (std::uint64_t c = 0; c < q; ++c) {
      detail::Poly f(e + 1, 0);
      std::uint64_t rest = c;
      for (std::uint64_t i = 0; i < e; ++i) {
        f[i] = rest % p;
        rest /= p;
      }
      f[e] = 1;
      if (detail::is_irreducible(f, p)) {
        return Field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e),
                     std::vector<std::uint32_t>(f.begin(), f.end()));
      }
    }
    throw Error(ErrorCode::VerificationFailed, "no irreducible polynomial found");
  }

  /// Field with an explicit modulus; the modulus must be monic and irreducible.
  static Field with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() != 1) {
      throw Error(ErrorCode::BadParameters, "modulus must be monic of degree >= 1");
    }
    const std::uint64_t e = modulus.size() - 1;
    checked_power(p, e);
    if (e == 1) {
      if (modulus[0] != 0) {
        throw Error(ErrorCode::BadParameters, "degree-one modulus must be x");
      }
      return Field(static_cast<std::uint32_t>(p), 1, {0, 1});
    }
    for (auto c : modulus) {
      if (c >= p) throw Error(ErrorCode::BadParameters, "modulus coefficient out of range");
    }
    if (!detail::is_irreducible(detail::Poly(modulus.begin(), modulus.end()), p)) {
      throw Error(ErrorCode::BadParameters, "modulus is reducible");
    }
    return Field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), std::move(modulus));
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool contains(std::uint64_t value) const { return value < q_; }

  Element element(std::uint64_t value) const {
    if (!contains(value)) {
      throw Error(ErrorCode::InvalidElement,
                  std::to_string(value) + " is not an element of GF(" + std::to_string(q_) + ")");
    }
    return Element{static_cast<std::uint32_t>(value)};
  }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }

  Element add(Element a, Element b) const {
    if (e_ == 1) return Element{static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % p_)};
    if (add_table_) return Element{(*add_table_)[std::size_t{a.value} * q_ + b.value]};
    return add_digits(a, b);
  }

  Element neg(Element a) const {
    if (e_ == 1) return Element{a.value == 0 ? 0 : p_ - a.value};
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0, rest = a.value; i < e_; ++i, rest /= p_, scale *= p_) {
      const std::uint32_t d = rest % p_;
      out += (d == 0 ? 0 : p_ - d) * scale;
    }
    return Element{out};
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (e_ == 1) return Element{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < e_; ++j) {
        prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
      }
    }
    for (std::size_t d = prod.size(); d-- > e_;) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= e_; ++i) {
        auto& slot = prod[d - e_ + i];
        slot = (slot + p_ - c * modulus_[i] % p_) % p_;
      }
    }
    std::uint64_t out = 0;
    for (std::size_t i = e_; i-- > 0;) out = out * p_ + prod[i];
    return Element{static_cast<std::uint32_t>(out)};
  }

  Element pow(Element a, std::uint64_t k) const {
    Element result = one();
    while (k > 0) {
      if (k & 1) result = mul(result, a);
      a = mul(a, a);
      k >>= 1;
    }
    return result;
  }

  Element inv(Element a) const {
    if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return pow(a, q_ - 2);
  }

  /// Least d >= 1 with x^d = 1, found by stripping prime factors off q - 1.
  std::uint32_t element_order(Element x) const {
    if (x.value == 0) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative order");
    std::uint64_t order = q_ - 1;
    for (auto r : prime_factors(q_ - 1)) {
      while (order % r == 0 && pow(x, order / r) == one()) order /= r;
    }
    return static_cast<std::uint32_t>(order);
  }

  /// The element of order exactly d with the smallest encoding.
  Element find_element_of_order(std::uint64_t d) const {
    if (d == 0 || (q_ - 1) % d != 0) {
      throw Error(ErrorCode::NoSuchOrder,
                  std::to_string(d) + " does not divide " + std::to_string(q_ - 1));
    }
    for (std::uint32_t v = 1; v < q_; ++v) {
      if (element_order(Element{v}) == d) return Element{v};
    }
    throw Error(ErrorCode::NoSuchOrder, "no element of order " + std::to_string(d));
  }

  std::vector<std::uint32_t> digits(Element a) const {
    std::vector<std::uint32_t> out(e_);
    for (std::uint32_t i = 0, rest = a.value; i < e_; ++i, rest /= p_) out[i] = rest % p_;
    return out;
  }

  /// `field p=<p> e=<e> poly=<c0,...,ce>`
  std::string header() const {
    std::ostringstream os;
    os << "field p=" << p_ << " e=" << e_ << " poly=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    return os.str();
  }

  static Field parse_header(const std::string& line) {
    std::istringstream is(line);
    std::string word;
    if (!(is >> word) || word != "field") {
      throw Error(ErrorCode::ParseError, "expected field header, got '" + line + "'");
    }
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> e;
    std::optional<std::vector<std::uint32_t>> poly;
    try {
      while (is >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "bad token '" + word + "'");
        const std::string key = word.substr(0, eq);
        const std::string val = word.substr(eq + 1);
        if (key == "p") {
          p = std::stoull(val);
        } else if (key == "e") {
          e = std::stoull(val);
        } else if (key == "poly") {
          std::vector<std::uint32_t> coeffs;
          std::istringstream cs(val);
          std::string c;
          while (std::getline(cs, c, ',')) coeffs.push_back(static_cast<std::uint32_t>(std::stoul(c)));
          poly = std::move(coeffs);
        } else {
          throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
        }
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "malformed number in '" + line + "'");
    }
    if (!p || !e || !poly) throw Error(ErrorCode::ParseError, "incomplete field header '" + line + "'");
    if (poly->size() != *e + 1) throw Error(ErrorCode::ParseError, "modulus degree does not match e");
    return with_modulus(*p, *poly);
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
  static constexpr std::uint32_t kAddTableLimit = 1024;

  Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
      : p_(p), e_(e), q_(static_cast<std::uint32_t>(checked_power(p, e))), modulus_(std::move(modulus)) {
    if (e_ > 1 && q_ <= kAddTableLimit) {
      auto table = std::make_shared<std::vector<std::uint32_t>>(std::size_t{q_} * q_);
      for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
          (*table)[std::size_t{a} * q_ + b] = add_digits(Element{a}, Element{b}).value;
        }
      }
      add_table_ = std::move(table);
    }
  }

  static std::uint64_t checked_power(std::uint64_t p, std::uint64_t e) {
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      if (q > kMaxOrder / p) {
        throw Error(ErrorCode::Overflow, std::to_string(p) + "^" + std::to_string(e) + " is too large");
      }
      q *= p;
    }
    if (q >= kMaxOrder) throw Error(ErrorCode::Overflow, "field order too large");
    return q;
  }

  Element add_digits(Element a, Element b) const {
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    std::uint32_t ra = a.value;
    std::uint32_t rb = b.value;
    for (std::uint32_t i = 0; i < e_; ++i, ra /= p_, rb /= p_, scale *= p_) {
      out += ((ra % p_ + rb % p_) % p_) * scale;
    }
    return Element{out};
  }

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const std::vector<std::uint32_t>> add_table_;
};

inline Field make_field(std::uint64_t p, std::uint64_t e) { return Field::make(p, e); }

}  // namespace heffter
