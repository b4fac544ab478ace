#include "eulercat/rational.hpp"

#include <stdexcept>

namespace eulercat {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  if (slash != std::string::npos && text.find('/', slash + 1) != std::string::npos)
    throw std::invalid_argument("malformed rational literal: " + text);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' ||
              (c == '-' && (i == 0 || i == slash + 1));
    if (!ok) throw std::invalid_argument("malformed rational literal: " + text);
  }
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace eulercat
