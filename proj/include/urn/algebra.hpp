#pragma once

#include "urn/bipoly.hpp"
#include "urn/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace urn {

/// Elementary urn operations: X puts a ball in, D takes one out.
enum class Generator : std::uint8_t { X, D };

/// An operator product over {X, D}. Factors are stored in written order;
/// the rightmost factor acts first. The empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Generator> factors) : factors_(factors) {}
  explicit Word(std::vector<Generator> factors) : factors_(std::move(factors)) {}

  /// Builds a word from a string of 'X' and 'D' characters, e.g. "XDDX".
  /// Throws std::invalid_argument on any other character.
  static Word from_letters(std::string_view letters);

  const std::vector<Generator>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  unsigned count(Generator g) const;
  /// (#X) - (#D): the net change in ball count.
  int excess() const;
  bool is_normal() const;

  friend Word operator*(const Word& a, const Word& b);

  /// Canonical order: longer words first, then lexicographic with X < D.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  std::string letters() const;

 private:
  std::vector<Generator> factors_;
};

Word power(Generator g, unsigned e);

/// Weighted formal sum of words with nonnegative rational weights.
class Process {
 public:
  using Storage = std::map<Word, Rational>;

  Process() = default;
  /// Throws std::invalid_argument on a negative weight; zero weights are dropped.
  Process(std::initializer_list<std::pair<const Word, Rational>> terms);
  explicit Process(const Word& w, const Rational& weight = 1);

  void add(const Word& w, const Rational& weight);

  const Storage& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::size_t max_word_length() const;

  Process& operator+=(const Process& other);
  Process& operator*=(const Rational& scale);
  friend Process operator+(Process a, const Process& b) { return a += b; }
  friend Process operator*(Process a, const Rational& s) { return a *= s; }
  friend Process operator*(const Rational& s, Process a) { return a *= s; }
  /// Operator product: word concatenation with multiplied weights.
  friend Process operator*(const Process& a, const Process& b);

  friend bool operator==(const Process&, const Process&) = default;

 private:
  Storage terms_;
};

/// n-fold operator product; power(p, 0) is the identity word with weight 1.
Process power(const Process& p, unsigned n);

/// Sparse map (k, l) -> h_kl for sum h_kl X^k D^l. Monomial::x holds k and
/// Monomial::y holds l, so a normal form is also the polynomial B(x, y).
using NormalForm = BiPoly;

NormalForm normal_order(const Word& w);
NormalForm normal_order(const Process& p);

/// Reorders to X^a D^b ignoring the commutator. Not operator-equivalent in
/// general.
NormalForm double_dot(const Process& p);

/// Normal form of D^l X^k from the binomial formula
/// sum_j C(l,j) C(k,j) j! X^(k-j) D^(l-j).
NormalForm weyl_closed_form(unsigned l, unsigned k);

/// Univariate polynomial in x: exponent -> coefficient. An urn U_m is x^m.
using UrnState = std::map<unsigned, Rational>;

/// Action of a word on x^m via D x^m = m x^(m-1), X x^m = x^(m+1).
/// Returns (coefficient, exponent); empty when the word annihilates x^m.
std::optional<std::pair<Integer, unsigned>> apply_to_monomial(const Word& w, unsigned m);

/// Action of X^k D^l terms on x^m: X^k D^l x^m = (m)_l x^(m-l+k).
UrnState apply_to_monomial(const NormalForm& nf, unsigned m);

UrnState act(const Process& p, const UrnState& state);

}  // namespace urn
