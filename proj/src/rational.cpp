#include "excalg/rational.hpp"

#include <stdexcept>

namespace excalg {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat q(Int(s));
      return q;
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty())
      throw std::invalid_argument("malformed rational \"" + s + "\"");
    Int p(num), q(den);
    if (q == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
    Rat r(p, q);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational \"" + s + "\"");
  }
}

std::string format_rat(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string format_int(const Int& z) { return z.get_str(); }

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed integer \"" + s + "\"");
  }
}

}  // namespace excalg
