#include "urn/series.hpp"

#include "urn/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace urn {

bool LambdaSeries::is_zero() const {
  return std::all_of(terms.begin(), terms.end(), [](const BiPoly& p) { return p.is_zero(); });
}

Rational TriSeries::coeff(unsigned x, unsigned y, unsigned lambda) const {
  auto it = coeffs_.find({x, y, lambda});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TriSeries::add_term(const TriIndex& i, const Rational& c) {
  if (c == 0 || !bounds_.contains(i)) return;
  auto [it, inserted] = coeffs_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TriSeries TriSeries::from_bipoly(TriBounds bounds, const BiPoly& p, unsigned lambda_exp,
                                 const Rational& scale) {
  TriSeries s(bounds);
  for (const auto& [m, c] : p) s.add_term({m.x, m.y, lambda_exp}, c * scale);
  return s;
}

TriSeries& TriSeries::operator+=(const TriSeries& other) {
  bounds_ = {std::min(bounds_.x, other.bounds_.x), std::min(bounds_.y, other.bounds_.y),
             std::min(bounds_.lambda, other.bounds_.lambda)};
  std::erase_if(coeffs_, [this](const auto& kv) { return !bounds_.contains(kv.first); });
  for (const auto& [i, c] : other.coeffs_) add_term(i, c);
  return *this;
}

TriSeries& TriSeries::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, c] : coeffs_) c *= s;
  return *this;
}

TriSeries operator*(const TriSeries& a, const TriSeries& b) {
  TriSeries r({std::min(a.bounds_.x, b.bounds_.x), std::min(a.bounds_.y, b.bounds_.y),
               std::min(a.bounds_.lambda, b.bounds_.lambda)});
  for (const auto& [ia, ca] : a.coeffs_) {
    if (!r.bounds_.contains(ia)) continue;
    for (const auto& [ib, cb] : b.coeffs_) {
      r.add_term({ia.x + ib.x, ia.y + ib.y, ia.lambda + ib.lambda}, ca * cb);
    }
  }
  return r;
}

TriSeries TriSeries::exp(const TriSeries& f) {
  if (f.coeff(0, 0, 0) != 0) {
    throw std::invalid_argument("exp of a truncated series needs a zero constant term");
  }
  TriSeries sum(f.bounds_);
  sum.add_term({0, 0, 0}, 1);
  TriSeries power = sum;
  // Each power of f raises the total index by at least one, so this ends.
  for (unsigned m = 1; !power.coeffs_.empty(); ++m) {
    power = power * f;
    power *= Rational(1, m);
    sum += power;
  }
  return sum;
}

LambdaSeries b_series(const Process& h, unsigned order) { return {order, bn_sequence(h, order)}; }

TriSeries g_series(const Process& h, unsigned order, unsigned dx, unsigned dy) {
  const TriBounds box{dx, dy, order};
  TriSeries b(box);
  const auto seq = bn_sequence(h, order);
  for (unsigned n = 0; n <= order; ++n) {
    b += TriSeries::from_bipoly(box, seq[n], n, Rational(1) / Rational(factorial(n)));
  }
  return b * TriSeries::from_bipoly(box, exp_xy(2 * std::min(dx, dy)));
}

LambdaSeries pde_residual(const Process& h, const LambdaSeries& s) {
  if (s.order == 0 || s.terms.size() != s.order + 1) {
    throw std::invalid_argument("pde residual needs a series of order >= 1 with order + 1 terms");
  }
  LambdaSeries r{s.order - 1, {}};
  r.terms.reserve(s.order);
  for (unsigned n = 0; n < s.order; ++n) r.terms.push_back(s.terms[n + 1] - apply_shifted(h, s.terms[n]));
  return r;
}

Process driven_oscillator(const Rational& g) {
  Process h{{Word{Generator::X, Generator::D}, 1}};
  h.add(Word{Generator::X}, g);
  h.add(Word{Generator::D}, g);
  return h;
}

TriSeries driven_oscillator_closed_form(const Rational& g, unsigned order, unsigned dx,
                                        unsigned dy) {
  const TriBounds box{dx, dy, order};

  TriSeries e_lambda_minus_one(box);
  for (unsigned n = 1; n <= order; ++n) {
    e_lambda_minus_one.add_term({0, 0, n}, Rational(1) / Rational(factorial(n)));
  }

  // (x + g)(y + g) = xy + g x + g y + g^2
  TriSeries coupling(box);
  coupling.add_term({1, 1, 0}, 1);
  coupling.add_term({1, 0, 0}, g);
  coupling.add_term({0, 1, 0}, g);
  coupling.add_term({0, 0, 0}, g * g);

  TriSeries damping(box);
  damping.add_term({0, 0, 1}, -g * g);

  TriSeries xy(box);
  xy.add_term({1, 1, 0}, 1);

  return TriSeries::exp(coupling * e_lambda_minus_one) * TriSeries::exp(damping) *
         TriSeries::exp(xy);
}

std::optional<SeriesMismatch> first_mismatch(const TriSeries& a, const TriSeries& b) {
  const TriBounds box{std::min(a.bounds().x, b.bounds().x), std::min(a.bounds().y, b.bounds().y),
                      std::min(a.bounds().lambda, b.bounds().lambda)};
  std::map<TriIndex, std::pair<Rational, Rational>> merged;
  for (const auto& [i, c] : a.coeffs()) {
    if (box.contains(i)) merged[i].first = c;
  }
  for (const auto& [i, c] : b.coeffs()) {
    if (box.contains(i)) merged[i].second = c;
  }
  for (const auto& [i, pair] : merged) {
    if (pair.first != pair.second) return SeriesMismatch{i, pair.first, pair.second};
  }
  return std::nullopt;
}

}  // namespace urn
