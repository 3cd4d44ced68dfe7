#include "turan2d/rational.hpp"

#include <cstdlib>

namespace turan2d {

Rational Rational::parse(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s), 1);
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::domain_error("Rational: cannot parse '" + s + "'");
  }
}

}  // namespace turan2d
