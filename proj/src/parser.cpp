#include "urn/parser.hpp"

#include <cctype>

namespace urn {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Process expression() {
    Process out;
    skip_space();
    if (at_end()) return out;
    term(out);
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+') fail("expected '+' or end of input");
      ++pos_;
      term(out);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  std::size_t here() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, here()); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }
  bool at_factor() const { return !at_end() && (peek() == 'X' || peek() == 'D'); }

  Integer digits() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  void term(Process& out) {
    skip_space();
    if (at_end()) fail("expected a term");
    if (peek() == '-') throw NegativeCoefficient("negative coefficients are not allowed", here());

    Rational weight = 1;
    bool has_coefficient = false;
    if (at_digit()) {
      has_coefficient = true;
      Integer num = digits();
      Integer den = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        std::size_t slash = here();
        ++pos_;
        skip_space();
        if (!at_digit()) throw ParseError("expected a positive denominator after '/'", slash);
        std::size_t den_pos = here();
        den = digits();
        if (den == 0) throw ParseError("denominator must be positive", den_pos);
      }
      weight = Rational(num, den);
      weight.canonicalize();
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (!at_factor()) fail("expected 'X' or 'D' after '*'");
      }
    }

    std::vector<Generator> factors;
    skip_space();
    if (!has_coefficient && !at_factor()) fail("expected a coefficient, 'X' or 'D'");
    while (at_factor()) {
      Generator g = peek() == 'X' ? Generator::X : Generator::D;
      ++pos_;
      unsigned exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        std::size_t caret = here();
        ++pos_;
        skip_space();
        if (!at_digit()) throw ParseError("expected a positive exponent after '^'", caret);
        std::size_t exp_pos = here();
        Integer e = digits();
        if (e == 0 || !e.fits_uint_p()) throw ParseError("exponent must be a positive integer", exp_pos);
        exponent = static_cast<unsigned>(e.get_ui());
        skip_space();
      }
      factors.insert(factors.end(), exponent, g);
    }
    out.add(Word(std::move(factors)), weight);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Process parse(std::string_view src) { return Parser(src).expression(); }

std::string pretty(const Word& w) {
  std::string out;
  const auto& f = w.factors();
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    if (!out.empty()) out += ' ';
    out += f[i] == Generator::X ? 'X' : 'D';
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string pretty(const Process& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p) {
    if (!out.empty()) out += " + ";
    if (c != 1 || w.empty()) {
      out += c.get_str();
      if (!w.empty()) out += ' ';
    }
    out += pretty(w);
  }
  return out;
}

}  // namespace urn
