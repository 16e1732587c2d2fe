#include "stringgrass/numbers.hpp"

#include <cctype>

#include "stringgrass/error.hpp"

namespace stringgrass {

namespace {

bool looks_like_rational(const std::string& s) {
  // mpq_set_str is lenient about some shapes we want to reject (leading '+',
  // whitespace, empty numerator/denominator), so pre-screen the text.
  std::size_t i = 0;
  auto digits = [&](std::size_t& k) {
    std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return k > start;
  };
  if (i < s.size() && s[i] == '-') ++i;
  if (!digits(i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  return digits(i) && i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!looks_like_rational(text)) {
    fail(Errc::ParseError, "not a rational: '" + text + "'");
  }
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    fail(Errc::ParseError, "not a rational: '" + text + "'");
  }
  Rational value(raw);
  mpq_clear(raw);
  if (value.get_den() == 0) {
    fail(Errc::ParseError, "zero denominator: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

}  // namespace stringgrass
