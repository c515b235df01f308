#pragma once

#include "urn/algebra.hpp"
#include "urn/bipoly.hpp"

#include <stdexcept>
#include <vector>

namespace urn {

/// Thrown when a truncated computation has no coefficients it can vouch for.
class InsufficientTruncation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// H(X, D + y) p: X multiplies by x, D + y acts as d/dx plus multiplication
/// by y. Within each word the rightmost generator acts first.
BiPoly apply_shifted(const Process& h, const BiPoly& p);

/// [B_0, ..., B_{n_max}] with B_0 = 1 and B_{n+1} = H(X, D + y) B_n.
std::vector<BiPoly> bn_sequence(const Process& h, unsigned n_max);

/// Plain action H(X, D) on a polynomial, D = d/dx.
BiPoly apply_plain(const Process& h, const BiPoly& p);

/// Largest per-application drop in total degree, max(0, #D - #X) over words.
unsigned degree_drop(const Process& h);

struct ConjugateResult {
  BiPoly value;        // restricted to total degree <= exact_degree
  unsigned exact_degree;
};

/// e^{-xy} H^n e^{xy} computed with both exponentials truncated at total
/// degree `degree_bound`. The result is exact on total degree
/// <= degree_bound - n * degree_drop(h) and is returned restricted to it.
/// Throws InsufficientTruncation when that region is empty.
ConjugateResult conjugate_check(const Process& h, unsigned n, unsigned degree_bound);

/// e^{sign * xy} truncated at total degree max_total.
BiPoly exp_xy(unsigned max_total, int sign = 1);

}  // namespace urn
