#include "urn/enumerate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace urn {

SearchBudgetExceeded::SearchBudgetExceeded(std::uint64_t budget)
    : std::runtime_error("history search exceeded its budget of " + std::to_string(budget) +
                         " nodes"),
      budget_(budget) {}

Rational HistoryTable::count(unsigned l, unsigned k) const {
  auto row = rows.find(l);
  if (row == rows.end()) return 0;
  auto it = row->second.find(k);
  return it == row->second.end() ? Rational(0) : it->second;
}

CountRow count_by_operator(const Process& h, unsigned n, unsigned l) {
  UrnState state{{l, Rational(1)}};
  for (unsigned i = 0; i < n && !state.empty(); ++i) state = act(h, state);
  return state;
}

Integer weight_denominator_lcm(const Process& h) {
  Integer scale = 1;
  for (const auto& [w, c] : h) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  return scale;
}

namespace {

struct Branch {
  const Word* word;
  unsigned long copies;
};

class HistorySearch {
 public:
  HistorySearch(std::vector<Branch> branches, unsigned steps, std::uint64_t budget)
      : branches_(std::move(branches)), steps_(steps), budget_(budget) {}

  std::map<unsigned, Integer> run(unsigned initial) {
    for (unsigned i = 0; i < initial; ++i) urn_.push_back(next_label_++);
    step(0);
    return std::move(leaves_);
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw SearchBudgetExceeded(budget_);
  }

  void step(unsigned done) {
    if (done == steps_) {
      leaves_[static_cast<unsigned>(urn_.size())] += 1;
      return;
    }
    for (const auto& b : branches_) {
      for (unsigned long copy = 0; copy < b.copies; ++copy) {
        perform(*b.word, b.word->size(), done);
      }
    }
  }

  // Performs factors [0, remaining) of the word, rightmost first.
  void perform(const Word& w, std::size_t remaining, unsigned done) {
    tick();
    if (remaining == 0) {
      step(done + 1);
      return;
    }
    if (w.factors()[remaining - 1] == Generator::X) {
      urn_.push_back(next_label_++);
      perform(w, remaining - 1, done);
      urn_.pop_back();
      --next_label_;
      return;
    }
    for (std::size_t i = 0; i < urn_.size(); ++i) {
      const std::uint32_t ball = urn_[i];
      urn_.erase(urn_.begin() + static_cast<std::ptrdiff_t>(i));
      perform(w, remaining - 1, done);
      urn_.insert(urn_.begin() + static_cast<std::ptrdiff_t>(i), ball);
    }
  }

  std::vector<Branch> branches_;
  unsigned steps_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> urn_;
  std::uint32_t next_label_ = 0;
  std::map<unsigned, Integer> leaves_;
};

}  // namespace

CountRow count_by_search(const Process& h, unsigned n, unsigned l, const Integer& weight_scale,
                         std::uint64_t node_budget) {
  if (weight_scale <= 0) throw std::invalid_argument("weight scale must be positive");
  std::vector<Branch> branches;
  for (const auto& [w, c] : h) {
    Rational copies = c * weight_scale;
    if (!is_integer(copies) || !copies.get_num().fits_ulong_p()) {
      throw NonIntegerWeight("weight " + c.get_str() + " of '" + w.letters() + "' times scale " +
                             weight_scale.get_str() + " is not a small integer");
    }
    branches.push_back({&w, copies.get_num().get_ui()});
  }
  CountRow out;
  for (auto& [k, count] : HistorySearch(std::move(branches), n, node_budget).run(l)) {
    out.emplace(k, Rational(count));
  }
  return out;
}

HistoryTable history_table(const Process& h, unsigned n, unsigned l_min, unsigned l_max) {
  HistoryTable t{n, {}};
  for (unsigned l = l_min; l <= l_max; ++l) {
    CountRow row = count_by_operator(h, n, l);
    if (!row.empty()) t.rows.emplace(l, std::move(row));
  }
  return t;
}

HistoryTable history_counts_from_normal_form(const BiPoly& b, unsigned n, unsigned l_max,
                                             unsigned k_max) {
  HistoryTable t{n, {}};
  for (unsigned l = 0; l <= l_max; ++l) {
    CountRow row;
    for (unsigned k = 0; k <= k_max; ++k) {
      Rational sum = 0;
      for (unsigned j = 0; j <= std::min(k, l); ++j) {
        sum += b.coeff(k - j, l - j) / Rational(factorial(j));
      }
      sum *= factorial(l);
      if (sum != 0) row.emplace(k, sum);
    }
    if (!row.empty()) t.rows.emplace(l, std::move(row));
  }
  return t;
}

ProbabilityRow probabilities(const HistoryTable& t, unsigned l) {
  ProbabilityRow out{t.n, l, {}};
  auto row = t.rows.find(l);
  Rational total = 0;
  if (row != t.rows.end()) {
    for (const auto& [k, c] : row->second) total += c;
  }
  if (total == 0) {
    throw UndefinedRow("no histories start from an urn with " + std::to_string(l) +
                       " balls in " + std::to_string(t.n) + " steps");
  }
  for (const auto& [k, c] : row->second) out.probs.emplace(k, c / total);
  return out;
}

}  // namespace urn
