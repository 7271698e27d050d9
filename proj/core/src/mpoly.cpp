#include "kisin3/mpoly.hpp"

#include <sstream>

namespace kisin3::poly {

std::string to_string(const QPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest plain-lex monomial first
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    bool printed = false;
    if (cc != 1 || mono_degree(m) == 0) {
      os << cc.get_str();
      printed = true;
    }
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (printed) os << "*";
      os << (v < names.size() ? names[v] : "x" + std::to_string(v));
      if (m[v] > 1) os << "^" << m[v];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace kisin3::poly
