#include "urn/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace urn {

Word Word::from_letters(std::string_view letters) {
  std::vector<Generator> f;
  f.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'X': f.push_back(Generator::X); break;
      case 'D': f.push_back(Generator::D); break;
      default: throw std::invalid_argument(std::string("not a generator: '") + c + "'");
    }
  }
  return Word(std::move(f));
}

unsigned Word::count(Generator g) const {
  return static_cast<unsigned>(std::count(factors_.begin(), factors_.end(), g));
}

int Word::excess() const {
  return static_cast<int>(count(Generator::X)) - static_cast<int>(count(Generator::D));
}

bool Word::is_normal() const {
  auto first_d = std::find(factors_.begin(), factors_.end(), Generator::D);
  return std::find(first_d, factors_.end(), Generator::X) == factors_.end();
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Generator> f(a.factors_);
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return Word(std::move(f));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return b.size() <=> a.size();
  return a.factors_ <=> b.factors_;
}

std::string Word::letters() const {
  std::string s;
  for (auto g : factors_) s += g == Generator::X ? 'X' : 'D';
  return s;
}

Word power(Generator g, unsigned e) { return Word(std::vector<Generator>(e, g)); }

Process::Process(std::initializer_list<std::pair<const Word, Rational>> terms) {
  for (const auto& [w, c] : terms) add(w, c);
}

Process::Process(const Word& w, const Rational& weight) { add(w, weight); }

void Process::add(const Word& w, const Rational& weight) {
  if (weight < 0) {
    throw std::invalid_argument("negative process weight " + weight.get_str() + " for word '" +
                                w.letters() + "'");
  }
  if (weight == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, weight);
  if (!inserted) it->second += weight;
}

std::size_t Process::max_word_length() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

Process& Process::operator+=(const Process& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

Process& Process::operator*=(const Rational& scale) {
  if (scale < 0) throw std::invalid_argument("negative scale for a process");
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scale;
  return *this;
}

Process operator*(const Process& a, const Process& b) {
  Process r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
  }
  return r;
}

Process power(const Process& p, unsigned n) {
  Process r{{Word{}, 1}};
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

namespace {

// Signed so intermediate rewriting never has to special-case weights.
using Worklist = std::map<Word, Rational>;

void accumulate(Worklist& list, Word w, const Rational& c) {
  auto [it, inserted] = list.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) list.erase(it);
  }
}

// Rewrites D X -> X D + 1 at the leftmost D X adjacency until every word is
// normal. Each rewrite strictly lowers the number of (D, X) inversions.
NormalForm rewrite(Worklist pending) {
  NormalForm out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto& f = node.key().factors();
    auto pos = std::adjacent_find(f.begin(), f.end(), [](Generator a, Generator b) {
      return a == Generator::D && b == Generator::X;
    });
    if (pos == f.end()) {
      out.add_term({node.key().count(Generator::X), node.key().count(Generator::D)},
                   node.mapped());
      continue;
    }
    auto i = static_cast<std::size_t>(pos - f.begin());

    std::vector<Generator> swapped(f);
    std::swap(swapped[i], swapped[i + 1]);
    accumulate(pending, Word(std::move(swapped)), node.mapped());

    std::vector<Generator> contracted(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i));
    contracted.insert(contracted.end(), f.begin() + static_cast<std::ptrdiff_t>(i) + 2, f.end());
    accumulate(pending, Word(std::move(contracted)), node.mapped());
  }
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

NormalForm normal_order(const Word& w) { return rewrite(Worklist{{w, 1}}); }

NormalForm normal_order(const Process& p) { return rewrite(Worklist(p.begin(), p.end())); }

NormalForm double_dot(const Process& p) {
  NormalForm out;
  for (const auto& [w, c] : p) out.add_term({w.count(Generator::X), w.count(Generator::D)}, c);
  return out;
}

NormalForm weyl_closed_form(unsigned l, unsigned k) {
  NormalForm out;
  for (unsigned j = 0; j <= std::min(l, k); ++j) {
    Integer c = binomial(l, j) * binomial(k, j) * factorial(j);
    out.add_term({k - j, l - j}, Rational(c));
  }
  return out;
}

std::optional<std::pair<Integer, unsigned>> apply_to_monomial(const Word& w, unsigned m) {
  Integer coeff = 1;
  const auto& f = w.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (*it == Generator::X) {
      ++m;
    } else {
      if (m == 0) return std::nullopt;
      coeff *= m;
      --m;
    }
  }
  return std::pair{coeff, m};
}

UrnState apply_to_monomial(const NormalForm& nf, unsigned m) {
  UrnState out;
  for (const auto& [mono, c] : nf) {
    const unsigned k = mono.x, l = mono.y;
    if (l > m) continue;
    Integer falling = 1;
    for (unsigned i = 0; i < l; ++i) falling *= m - i;
    Rational& slot = out[m - l + k];
    slot += c * falling;
    if (slot == 0) out.erase(m - l + k);
  }
  return out;
}

UrnState act(const Process& p, const UrnState& state) {
  UrnState out;
  for (const auto& [m, a] : state) {
    for (const auto& [w, c] : p) {
      auto hit = apply_to_monomial(w, m);
      if (!hit) continue;
      Rational& slot = out[hit->second];
      slot += a * c * hit->first;
      if (slot == 0) out.erase(hit->second);
    }
  }
  return out;
}

}  // namespace urn
