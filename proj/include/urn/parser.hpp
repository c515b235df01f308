#pragma once

#include "urn/algebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace urn {

/// Malformed expression. position() is 1-based.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NegativeCoefficient : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Grammar (whitespace insignificant):
///
///   expression  := term ('+' term)*  |  empty
///   term        := coefficient ['*'] factor*  |  factor+
///   factor      := ('X' | 'D') ['^' posint]
///   coefficient := integer ['/' posint]
///
/// Juxtaposed factors form an operator product in written order. A bare
/// coefficient is a multiple of the identity, so "0" and "" both denote the
/// zero process. Like terms are merged.
Process parse(std::string_view src);

/// Canonical rendering: terms in Word order, unit weights omitted, runs of a
/// generator collapsed to powers, "0" for the zero process.
std::string pretty(const Process& p);

std::string pretty(const Word& w);

}  // namespace urn
