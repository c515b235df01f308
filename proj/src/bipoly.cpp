#include "urn/bipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace urn {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BiPoly::BiPoly(std::initializer_list<std::pair<const Monomial, Rational>> terms) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(unsigned x_exp, unsigned y_exp, const Rational& c) {
  BiPoly p;
  p.add_term({x_exp, y_exp}, c);
  return p;
}

Rational BiPoly::coeff(unsigned x_exp, unsigned y_exp) const {
  auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned BiPoly::degree_x() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

unsigned BiPoly::degree_y() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y);
  return d;
}

unsigned BiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

BiPoly BiPoly::truncated(unsigned max_total) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.total() <= max_total) r.terms_.emplace(m, c);
  }
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scale;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    }
  }
  return r;
}

BiPoly BiPoly::multiply_truncated(const BiPoly& a, const BiPoly& b, unsigned max_total) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.total() > max_total) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.total() + mb.total() > max_total) continue;
      r.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    }
  }
  return r;
}

BiPoly shift_x(const BiPoly& p) {
  BiPoly r;
  for (const auto& [m, c] : p) r.add_term({m.x + 1, m.y}, c);
  return r;
}

BiPoly shift_y(const BiPoly& p) {
  BiPoly r;
  for (const auto& [m, c] : p) r.add_term({m.x, m.y + 1}, c);
  return r;
}

BiPoly derivative_x(const BiPoly& p) {
  BiPoly r;
  for (const auto& [m, c] : p) {
    if (m.x == 0) continue;
    r.add_term({m.x - 1, m.y}, c * m.x);
  }
  return r;
}

namespace {

void append_power(std::string& out, char var, unsigned e) {
  if (e == 0) return;
  if (!out.empty() && out.back() != ' ' && out.back() != '-') out += '*';
  out += var;
  if (e > 1) out += '^' + std::to_string(e);
}

}  // namespace

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest total degree first.
  std::vector<std::pair<Monomial, Rational>> ordered(p.begin(), p.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
    return a.first.x > b.first.x;
  });
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = m.total() > 0 && mag == 1;
    if (!unit) out += mag.get_str();
    std::string mono;
    append_power(mono, 'x', m.x);
    append_power(mono, 'y', m.y);
    if (!unit && !mono.empty()) out += '*';
    out += mono;
  }
  return out;
}

}  // namespace urn
