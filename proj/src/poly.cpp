#include "urn/poly.hpp"

#include <algorithm>

namespace urn {

namespace {

template <typename DOp>
BiPoly apply_word(const Word& w, BiPoly p, DOp&& d_action) {
  const auto& f = w.factors();
  for (auto it = f.rbegin(); it != f.rend() && !p.is_zero(); ++it) {
    p = *it == Generator::X ? shift_x(p) : d_action(p);
  }
  return p;
}

template <typename DOp>
BiPoly apply_process(const Process& h, const BiPoly& p, DOp&& d_action) {
  BiPoly out;
  for (const auto& [w, c] : h) out += apply_word(w, p, d_action) * c;
  return out;
}

}  // namespace

BiPoly apply_shifted(const Process& h, const BiPoly& p) {
  return apply_process(h, p, [](const BiPoly& q) { return derivative_x(q) + shift_y(q); });
}

BiPoly apply_plain(const Process& h, const BiPoly& p) {
  return apply_process(h, p, [](const BiPoly& q) { return derivative_x(q); });
}

std::vector<BiPoly> bn_sequence(const Process& h, unsigned n_max) {
  std::vector<BiPoly> seq;
  seq.reserve(n_max + 1);
  seq.push_back(BiPoly::constant(1));
  for (unsigned n = 0; n < n_max; ++n) seq.push_back(apply_shifted(h, seq.back()));
  return seq;
}

unsigned degree_drop(const Process& h) {
  int drop = 0;
  for (const auto& [w, c] : h) drop = std::max(drop, -w.excess());
  return static_cast<unsigned>(drop);
}

BiPoly exp_xy(unsigned max_total, int sign) {
  BiPoly e;
  Rational term = 1;
  for (unsigned j = 0; 2 * j <= max_total; ++j) {
    if (j > 0) {
      term *= sign;
      term /= j;
    }
    e.add_term({j, j}, term);
  }
  return e;
}

ConjugateResult conjugate_check(const Process& h, unsigned n, unsigned degree_bound) {
  const unsigned lost = n * degree_drop(h);
  if (lost > degree_bound) {
    throw InsufficientTruncation("degree bound " + std::to_string(degree_bound) +
                                 " leaves no exact region after " + std::to_string(n) +
                                 " applications (needs at least " + std::to_string(lost) + ")");
  }
  const unsigned exact = degree_bound - lost;

  BiPoly g = exp_xy(degree_bound);
  for (unsigned i = 0; i < n; ++i) g = apply_plain(h, g).truncated(degree_bound);
  BiPoly b = BiPoly::multiply_truncated(exp_xy(degree_bound, -1), g, exact);
  return {std::move(b), exact};
}

}  // namespace urn
