#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kisin3 {

// A permutation of {0,1,2}. p[i] is the image of i.
struct Perm3 {
  std::array<int, 3> p{0, 1, 2};

  static Perm3 identity() { return {}; }
  static Perm3 transposition(int i, int j) {
    Perm3 s;
    std::swap(s.p[i], s.p[j]);
    return s;
  }
  static Perm3 cycle012() { return Perm3{{1, 2, 0}}; }  // 0->1->2->0

  int operator()(int i) const { return p[i]; }

  // (a*b)(i) = a(b(i))
  friend Perm3 operator*(const Perm3& a, const Perm3& b) {
    return Perm3{{a.p[b.p[0]], a.p[b.p[1]], a.p[b.p[2]]}};
  }
  Perm3 inverse() const {
    Perm3 r;
    for (int i = 0; i < 3; ++i) r.p[p[i]] = i;
    return r;
  }
  bool operator==(const Perm3&) const = default;
  auto operator<=>(const Perm3&) const = default;

  int index() const {  // 0..5, lexicographic
    int idx = p[0] * 2 + (p[1] > p[2] ? 1 : 0);
    return idx;
  }
  int sign() const {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
  }
  std::string str() const {
    return "(" + std::to_string(p[0] + 1) + " " + std::to_string(p[1] + 1) + " " +
           std::to_string(p[2] + 1) + ")";
  }
};

inline const std::array<Perm3, 6>& all_perms3() {
  static const std::array<Perm3, 6> all = {
      Perm3{{0, 1, 2}}, Perm3{{0, 2, 1}}, Perm3{{1, 0, 2}},
      Perm3{{1, 2, 0}}, Perm3{{2, 0, 1}}, Perm3{{2, 1, 0}}};
  return all;
}

}  // namespace kisin3
