#include "cmtheta/rational.hpp"

#include <stdexcept>

namespace cmtheta {

Rat frac(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("frac: zero denominator");
  Rat q(a, b);
  q.canonicalize();
  return q;
}

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return frac(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal '" + text + "'");
  }
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("to_integer: " + q.get_str() + " is not an integer");
  return q.get_num();
}

} // namespace cmtheta
