#include "kisin3/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kisin3::weyl {

namespace {

const AffineWeylElt kGens[3] = {AffineWeylElt::alpha(), AffineWeylElt::beta(),
                                AffineWeylElt::gamma()};
const char kGenNames[4] = "abg";

AffineWeylElt descale(const AffineWeylElt& w) {
  if (w.det_valuation() != 3)
    throw std::invalid_argument("element not in v * W^0 (det valuation != 3)");
  AffineWeylElt r = w;
  for (int k = 0; k < 3; ++k) r.exps[k] -= 1;
  return r;
}

// Breadth-first exploration of W^0 from the identity, generators in the order
// a < b < g, up to the radius needed to reach `target`. Returns length and a
// reduced word (the first one found, which is deterministic).
struct BfsResult {
  int len;
  std::string word;
};

BfsResult bfs_find(const AffineWeylElt& target) {
  std::map<AffineWeylElt, std::pair<AffineWeylElt, char>> parent;  // elt -> (prev, letter)
  std::map<AffineWeylElt, int> dist;
  std::deque<AffineWeylElt> queue;
  AffineWeylElt id = AffineWeylElt::identity();
  dist[id] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    AffineWeylElt cur = queue.front();
    queue.pop_front();
    if (cur == target) {
      std::string word;
      AffineWeylElt x = cur;
      while (!(x == id)) {
        auto [prev, letter] = parent.at(x);
        word.push_back(letter);
        x = prev;
      }
      std::reverse(word.begin(), word.end());
      return {dist[target], word};
    }
    for (int g = 0; g < 3; ++g) {
      AffineWeylElt nxt = cur * kGens[g];
      if (dist.emplace(nxt, dist[cur] + 1).second) {
        parent.emplace(nxt, std::make_pair(cur, kGenNames[g]));
        queue.push_back(nxt);
      }
    }
  }
  throw std::logic_error("bfs_find: unreachable");
}

}  // namespace

std::string AffineWeylElt::str() const {
  std::ostringstream os;
  os << "perm" << perm.str() << " v^(" << exps[0] << "," << exps[1] << ","
     << exps[2] << ")";
  return os.str();
}

AffineWeylElt parse_word(const std::string& word) {
  AffineWeylElt r = AffineWeylElt::identity();
  for (size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (c == 'i') return r;  // "id"
    AffineWeylElt g;
    switch (c) {
      case 'a': g = AffineWeylElt::alpha(); break;
      case 'b': g = AffineWeylElt::beta(); break;
      case 'g': g = AffineWeylElt::gamma(); break;
      case 'd': g = AffineWeylElt::delta(); break;
      case ' ': continue;
      default: throw std::invalid_argument("parse_word: bad letter");
    }
    r = r * g;
  }
  return r;
}

AffineWeylElt delta_conjugate(const AffineWeylElt& w) {
  AffineWeylElt d = AffineWeylElt::delta();
  return d * w * d.inverse();
}

int length(const AffineWeylElt& w) { return bfs_find(descale(w)).len; }

std::string reduced_word(const AffineWeylElt& w) { return bfs_find(descale(w)).word; }

std::vector<std::string> all_reduced_words(const AffineWeylElt& w) {
  AffineWeylElt w0 = descale(w);
  int len = bfs_find(w0).len;
  std::vector<std::string> out;
  // Depth-first over words whose length increases at each letter.
  struct Frame {
    AffineWeylElt elt;
    std::string word;
  };
  std::vector<Frame> stack{{AffineWeylElt::identity(), ""}};
  std::map<AffineWeylElt, int> lencache;
  auto coxlen = [&](const AffineWeylElt& x) {
    auto it = lencache.find(x);
    if (it != lencache.end()) return it->second;
    int l = bfs_find(x).len;
    lencache.emplace(x, l);
    return l;
  };
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    int flen = static_cast<int>(f.word.size());
    if (flen == len) {
      if (f.elt == w0) out.push_back(f.word);
      continue;
    }
    for (int g = 0; g < 3; ++g) {
      AffineWeylElt nxt = f.elt * kGens[g];
      if (coxlen(nxt) == flen + 1)
        stack.push_back({nxt, f.word + kGenNames[g]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const AffineWeylElt& x, const AffineWeylElt& y) {
  AffineWeylElt x0 = descale(x), y0 = descale(y);
  std::string word = bfs_find(y0).word;
  // Elements representable as a subword of a fixed reduced word of y are
  // exactly the elements below y.
  std::set<AffineWeylElt> reach{AffineWeylElt::identity()};
  for (char c : word) {
    const AffineWeylElt& g = kGens[c == 'a' ? 0 : c == 'b' ? 1 : 2];
    std::set<AffineWeylElt> next = reach;
    for (const auto& e : reach) next.insert(e * g);
    reach = std::move(next);
  }
  return reach.count(x0) > 0;
}

std::vector<AffineWeylElt> extremal_translations() {
  std::vector<AffineWeylElt> out;
  const int mu[3] = {2, 1, 0};
  for (const Perm3& s : all_perms3())
    out.push_back(AffineWeylElt::translation(mu[s.inverse()(0)], mu[s.inverse()(1)],
                                             mu[s.inverse()(2)]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const AdmissibleSet& adm_210() {
  static const AdmissibleSet adm = [] {
    AdmissibleSet a;
    std::set<AffineWeylElt> seen;
    AffineWeylElt v = AffineWeylElt::v_times_identity();
    for (const auto& t : extremal_translations()) {
      // Subword closure of one reduced word of t.
      std::string word = reduced_word(t);
      std::set<AffineWeylElt> reach{AffineWeylElt::identity()};
      for (char c : word) {
        const AffineWeylElt& g = kGens[c == 'a' ? 0 : c == 'b' ? 1 : 2];
        std::set<AffineWeylElt> next = reach;
        for (const auto& e : reach) next.insert(e * g);
        reach = std::move(next);
      }
      for (const auto& e : reach) seen.insert(v * e);
    }
    for (const auto& w : seen) {
      a.elements.push_back(w);
      a.lengths[w] = length(w);
      std::string word = a.lengths[w] == 0 ? "id" : reduced_word(w);
      a.word_of[w] = word;
      a.elt_of[word] = w;
    }
    // Delta conjugation orbits, numbered in order of first appearance.
    int next_orbit = 0;
    for (const auto& w : a.elements) {
      if (a.orbit_id.count(w)) continue;
      AffineWeylElt x = w;
      for (int i = 0; i < 3; ++i) {
        a.orbit_id[x] = next_orbit;
        x = delta_conjugate(x);
      }
      ++next_orbit;
    }
    return a;
  }();
  return adm;
}

bool is_shadow(const AffineWeylElt& w) {
  static const std::set<AffineWeylElt> shadows = [] {
    std::set<AffineWeylElt> s;
    AffineWeylElt v = AffineWeylElt::v_times_identity();
    AffineWeylElt aba = v * parse_word("aba");
    for (int i = 0; i < 3; ++i) {
      s.insert(aba);
      aba = delta_conjugate(aba);
    }
    return s;
  }();
  return shadows.count(w) > 0;
}

}  // namespace kisin3::weyl
