#pragma once

#include "urn/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

namespace urn {

/// Exponent pair (x-degree, y-degree). For a normal form this is (k, l) in
/// the monomial X^k D^l.
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;

  unsigned total() const { return x + y; }
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse bivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored, so structural and semantic equality agree.
class BiPoly {
 public:
  using Storage = std::map<Monomial, Rational>;

  BiPoly() = default;
  BiPoly(std::initializer_list<std::pair<const Monomial, Rational>> terms);

  static BiPoly constant(const Rational& c);
  static BiPoly monomial(unsigned x_exp, unsigned y_exp, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient at (x_exp, y_exp), zero when absent.
  Rational coeff(unsigned x_exp, unsigned y_exp) const;
  void add_term(Monomial m, const Rational& c);

  const Storage& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  unsigned degree_x() const;
  unsigned degree_y() const;
  unsigned total_degree() const;

  /// Keeps terms of total degree <= max_total.
  BiPoly truncated(unsigned max_total) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const Rational& scale);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  /// Truncated product: only terms of total degree <= max_total are formed.
  static BiPoly multiply_truncated(const BiPoly& a, const BiPoly& b, unsigned max_total);

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  Storage terms_;
};

BiPoly shift_x(const BiPoly& p);       // x * p
BiPoly shift_y(const BiPoly& p);       // y * p
BiPoly derivative_x(const BiPoly& p);  // d/dx p

/// Human-readable rendering such as "x^2*y^2 + x*y"; "0" for zero.
std::string to_string(const BiPoly& p);

}  // namespace urn
