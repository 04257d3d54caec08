#include "pargroup/rational.hpp"

#include <ostream>

#include "pargroup/error.hpp"

namespace pargroup {

std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.v_; }

std::string format_rat(const Rat& r) {
  return r.numerator().str() + "/" + r.denominator().str();
}

namespace {

Int parse_big_int(std::string_view s) {
  try {
    return Int(std::string(s));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad integer '" + std::string(s) + "'");
  }
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_big_int(text));
  Int num = parse_big_int(text.substr(0, slash));
  Int den = parse_big_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

}  // namespace pargroup
