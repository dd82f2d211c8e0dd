#include "digrack/rational.hpp"

#include "digrack/errors.hpp"

namespace digrack {

std::string rational_to_string(const Rational& r) { return r.str(); }

Rational rational_from_string(const std::string& text) {
  auto bad = [&] {
    return ValidationError("InvalidRational", "cannot parse '" + text + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  } catch (const std::exception&) {
    throw bad();
  }
}

}  // namespace digrack
