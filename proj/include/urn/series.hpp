#pragma once

#include "urn/algebra.hpp"
#include "urn/bipoly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace urn {

/// B(x, y, lambda) = sum_n B_n(x, y) lambda^n / n!, kept to order N.
struct LambdaSeries {
  unsigned order = 0;
  std::vector<BiPoly> terms;  // exactly order + 1 entries

  bool is_zero() const;
  friend bool operator==(const LambdaSeries&, const LambdaSeries&) = default;
};

/// Exponent triple of x^x y^y lambda^lambda.
struct TriIndex {
  unsigned x = 0;
  unsigned y = 0;
  unsigned lambda = 0;
  auto operator<=>(const TriIndex&) const = default;
};

/// Box on which a truncated series is exact: every index with
/// x <= x, y <= y, lambda <= lambda.
struct TriBounds {
  unsigned x = 0;
  unsigned y = 0;
  unsigned lambda = 0;

  bool contains(const TriIndex& i) const { return i.x <= x && i.y <= y && i.lambda <= lambda; }
  friend bool operator==(const TriBounds&, const TriBounds&) = default;
};

/// Sparse trivariate power series in x, y, lambda with plain (ordinary)
/// coefficients. Only coefficients inside bounds() are stored, and they are
/// exact.
class TriSeries {
 public:
  explicit TriSeries(TriBounds bounds) : bounds_(bounds) {}

  const TriBounds& bounds() const { return bounds_; }
  const std::map<TriIndex, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(unsigned x, unsigned y, unsigned lambda) const;
  /// Indices outside bounds() are ignored.
  void add_term(const TriIndex& i, const Rational& c);

  /// A bivariate polynomial times lambda^lambda_exp, clipped to bounds.
  static TriSeries from_bipoly(TriBounds bounds, const BiPoly& p, unsigned lambda_exp = 0,
                               const Rational& scale = 1);

  TriSeries& operator+=(const TriSeries& other);
  TriSeries& operator*=(const Rational& s);

  /// Truncated product, exact on the intersection of both boxes.
  friend TriSeries operator*(const TriSeries& a, const TriSeries& b);

  /// exp(f) for a series with zero constant term. Powers of f are summed
  /// until they vanish inside the box.
  static TriSeries exp(const TriSeries& f);

  friend bool operator==(const TriSeries&, const TriSeries&) = default;

 private:
  TriBounds bounds_;
  std::map<TriIndex, Rational> coeffs_;
};

/// Terms are bn_sequence(h, order).
LambdaSeries b_series(const Process& h, unsigned order);

/// G(x, y, lambda) = B(x, y, lambda) e^{xy} on the box n <= order,
/// x-degree <= dx, y-degree <= dy. [x^k y^l lambda^n] = G^(n)_{l->k} / (l! n!).
TriSeries g_series(const Process& h, unsigned order, unsigned dx, unsigned dy);

/// d/dlambda s - H(x, d/dx + y) s to order N - 1. Throws
/// std::invalid_argument when s has order 0.
LambdaSeries pde_residual(const Process& h, const LambdaSeries& s);

/// e^{(x+g)(y+g)(e^lambda - 1)} e^{-g^2 lambda} e^{xy} on the same box as
/// g_series; the generating function of XD + gX + gD.
TriSeries driven_oscillator_closed_form(const Rational& g, unsigned order, unsigned dx,
                                        unsigned dy);

/// XD + gX + gD as a process.
Process driven_oscillator(const Rational& g);

struct SeriesMismatch {
  TriIndex index;
  Rational lhs;
  Rational rhs;
};

/// First index (in TriIndex order) inside both boxes where a and b differ.
std::optional<SeriesMismatch> first_mismatch(const TriSeries& a, const TriSeries& b);

}  // namespace urn
