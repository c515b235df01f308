#pragma once

#include "urn/algebra.hpp"
#include "urn/bipoly.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace urn {

/// Final ball count k -> number of histories (weighted when weights are
/// rational).
using CountRow = std::map<unsigned, Rational>;

/// G^(n)_{l->k} for a fixed n. Rows whose counts are all zero are absent.
struct HistoryTable {
  unsigned n = 0;
  std::map<unsigned, CountRow> rows;  // keyed by initial count l

  Rational count(unsigned l, unsigned k) const;
  friend bool operator==(const HistoryTable&, const HistoryTable&) = default;
};

struct ProbabilityRow {
  unsigned n = 0;
  unsigned l = 0;
  std::map<unsigned, Rational> probs;
};

class UndefinedRow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  explicit SearchBudgetExceeded(std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

class NonIntegerWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// H^n x^l = sum_k G_{l->k} x^k via the polynomial action of X and D.
CountRow count_by_operator(const Process& h, unsigned n, unsigned l);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Counts labelled-ball histories by explicit tree search. Every step picks
/// one of the copies of a term (weight * weight_scale copies), each D picks
/// one of the balls present, each X inserts a fresh ball. The result equals
/// count_by_operator scaled by weight_scale^n.
CountRow count_by_search(const Process& h, unsigned n, unsigned l, const Integer& weight_scale = 1,
                         std::uint64_t node_budget = kDefaultSearchBudget);

/// Smallest positive integer that clears every weight denominator.
Integer weight_denominator_lcm(const Process& h);

/// Operator counts for every l in [l_min, l_max].
HistoryTable history_table(const Process& h, unsigned n, unsigned l_min, unsigned l_max);

/// G_{l->k} = l! * sum_j h_{k-j, l-j} / j! for l <= l_max, k <= k_max, where
/// h_{kl} are the coefficients of b = B_n.
HistoryTable history_counts_from_normal_form(const BiPoly& b, unsigned n, unsigned l_max,
                                             unsigned k_max);

/// P_{l->k} = G_{l->k} / sum_k G_{l->k}. Throws UndefinedRow on a zero sum.
ProbabilityRow probabilities(const HistoryTable& t, unsigned l);

}  // namespace urn
