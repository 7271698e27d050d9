#include "kisin3/shapes.hpp"

#include <random>
#include <stdexcept>

namespace kisin3::shapes {

int ShapeTemplate::var(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("ShapeTemplate: unknown variable " + name);
}

QPoly ShapeTemplate::vp(const std::string& name) const {
  return QPoly::variable(nvars(), var(name), Rat(1));
}

std::vector<Rat> ShapeTemplate::residue_point(unsigned seed, long p) const {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> unit(1, p - 1);
  std::vector<Rat> pt(vars.size(), Rat(0));
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].kind == VarKind::Star) pt[i] = Rat(unit(rng));
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].kind == VarKind::StarInverse) pt[i] = 1 / pt[vars[i].inverse_of];
  return pt;
}

const std::vector<std::string>& representative_words() {
  static const std::vector<std::string> words = {"abag", "bgag", "bag", "abg", "aba",
                                                 "ab",   "ba",   "a",   "id"};
  return words;
}

namespace {

// Incremental builder for the tabulated shape data.
struct Builder {
  ShapeTemplate sh;
  Rat p;

  explicit Builder(const Params& par) : p(par.p) {}

  void declare(std::initializer_list<std::pair<const char*, VarKind>> names) {
    for (const auto& [n, k] : names) sh.vars.push_back({n, k, -1});
    // star inverses are declared afterwards by inv()
  }
  void inv(const char* star) {
    int si = sh.var(star);
    sh.vars.push_back({std::string(star) + "i", VarKind::StarInverse, si});
  }
  void finish_vars() {
    int nv = static_cast<int>(sh.vars.size());
    sh.order = MonomialOrder::lex(nv);
    sh.universal = VMatrix::zero(nv);
    for (const auto& v : sh.vars)
      if (v.kind == VarKind::StarInverse)
        sh.relations.push_back(x(sh.vars[v.inverse_of].name) * x(v.name) -
                               QPoly::constant(nv, Rat(1)));
  }
  QPoly x(const std::string& name) const {
    return QPoly::variable(static_cast<int>(sh.vars.size()), sh.var(name), Rat(1));
  }
  QPoly cst(const Rat& r) const {
    return QPoly::constant(static_cast<int>(sh.vars.size()), r);
  }
  VPoly P() const { return VPoly::linear_vp(static_cast<int>(sh.vars.size()), p); }
  VPoly C(const QPoly& q) const { return VPoly::constant(q); }
  VPoly V(const QPoly& q, int deg) const { return VPoly::monomial(q, deg); }

  void entry(int i, int k, const VPoly& e) { sh.universal.m[i][k] = e; }
  void rel(const QPoly& r) { sh.relations.push_back(r); }

  // bounds notation helpers mirroring the table: deg(b) with flags
  void bound(int i, int k, int maxdeg, bool unit, bool vdiv) {
    sh.bounds[i][k] = {false, maxdeg, unit, vdiv};
  }
};

ShapeTemplate build_abag(const Params& par) {
  Builder b(par);
  b.declare({{"c11s", VarKind::Star},
             {"c22s", VarKind::Star},
             {"c33s", VarKind::Star},
             {"c21", VarKind::Plain},
             {"c31", VarKind::Plain},
             {"c31p", VarKind::Prime},
             {"c32", VarKind::Plain}});
  b.finish_vars();
  b.sh.word = "abag";
  VPoly P = b.P();
  b.entry(0, 0, P * P * b.C(b.x("c11s")));
  b.entry(1, 0, (P * b.C(b.x("c21"))).shifted(1));
  b.entry(1, 1, P * b.C(b.x("c22s")));
  b.entry(2, 0, (b.C(b.x("c31")) + P * b.C(b.x("c31p"))).shifted(1));
  b.entry(2, 1, b.V(b.x("c32"), 1));
  b.entry(2, 2, b.C(b.x("c33s")));
  b.bound(0, 0, 2, true, false);
  b.bound(0, 1, 0, false, false);
  b.bound(1, 0, 2, false, true);
  b.bound(1, 1, 1, true, false);
  b.bound(2, 0, 2, false, true);
  b.bound(2, 1, 1, false, true);
  b.bound(2, 2, 0, true, false);
  return b.sh;
}

ShapeTemplate build_bgag(const Params& par) {
  Builder b(par);
  b.declare({{"c11s", VarKind::Star},
             {"c12", VarKind::Plain},
             {"c22s", VarKind::Star},
             {"c31", VarKind::Plain},
             {"c32", VarKind::Plain},
             {"c32p", VarKind::Prime},
             {"c33s", VarKind::Star}});
  b.finish_vars();
  b.sh.word = "bgag";
  VPoly P = b.P();
  b.entry(0, 0, P * b.C(b.x("c11s")));
  b.entry(0, 1, P * b.C(b.x("c12")));
  b.entry(1, 1, P * P * b.C(b.x("c22s")));
  b.entry(2, 0, b.V(b.x("c31"), 1));
  b.entry(2, 1, (b.C(b.x("c32")) + P * b.C(b.x("c32p"))).shifted(1));
  b.entry(2, 2, b.C(b.x("c33s")));
  b.bound(0, 0, 1, true, false);
  b.bound(0, 1, 1, false, false);
  b.bound(1, 1, 2, true, false);
  b.bound(2, 0, 1, false, true);
  b.bound(2, 1, 2, false, true);
  b.bound(2, 2, 0, true, false);
  return b.sh;
}

ShapeTemplate build_bag(const Params& par) {
  Builder b(par);
  b.declare({{"c11", VarKind::Plain},
             {"c12s", VarKind::Star},
             {"c21s", VarKind::Star},
             {"c22", VarKind::Plain},
             {"c31", VarKind::Plain},
             {"c31p", VarKind::Prime},
             {"c32", VarKind::Plain},
             {"c33s", VarKind::Star}});
  b.finish_vars();
  b.sh.word = "bag";
  VPoly P = b.P();
  b.entry(0, 0, P * b.C(b.x("c11")));
  b.entry(0, 1, P * b.C(b.x("c12s")));
  b.entry(1, 0, (P * b.C(b.x("c21s"))).shifted(1));
  b.entry(1, 1, P * b.C(b.x("c22")));
  b.entry(2, 0, (b.C(b.x("c31")) + P * b.C(b.x("c31p"))).shifted(1));
  b.entry(2, 1, b.V(b.x("c32"), 1));
  b.entry(2, 2, b.C(b.x("c33s")));
  b.rel(b.x("c11") * b.x("c22") + b.cst(b.p) * b.x("c12s") * b.x("c21s"));
  b.bound(0, 0, 1, false, false);
  b.bound(0, 1, 1, true, false);
  b.bound(1, 0, 2, true, true);
  b.bound(1, 1, 1, false, false);
  b.bound(2, 0, 2, false, true);
  b.bound(2, 1, 1, false, true);
  b.bound(2, 2, 0, true, false);
  return b.sh;
}

ShapeTemplate build_abg(const Params& par) {
  Builder b(par);
  b.declare({{"c11s", VarKind::Star},
             {"c21", VarKind::Plain},
             {"c21p", VarKind::Prime},
             {"c22", VarKind::Plain},
             {"c23s", VarKind::Star},
             {"c31p", VarKind::Prime},
             {"c32s", VarKind::Star},
             {"c33", VarKind::Plain}});
  b.inv("c23s");
  b.finish_vars();
  b.sh.word = "abg";
  VPoly P = b.P();
  b.entry(0, 0, P * P * b.C(b.x("c11s")));
  b.entry(1, 0, (b.C(b.x("c21")) + P * b.C(b.x("c21p"))).shifted(1));
  b.entry(1, 1, b.C(b.x("c22")));
  b.entry(1, 2, b.C(b.x("c23s")));
  b.entry(2, 0,
          (b.C(b.x("c21") * b.x("c33") * b.x("c23si")) + P * b.C(b.x("c31p"))).shifted(1));
  b.entry(2, 1, b.V(b.x("c32s"), 1));
  b.entry(2, 2, b.C(b.x("c33")));
  b.rel(b.x("c22") * b.x("c33") + b.cst(b.p) * b.x("c32s") * b.x("c23s"));
  b.bound(0, 0, 2, true, false);
  b.bound(0, 1, 0, false, false);
  b.bound(1, 0, 2, false, true);
  b.bound(1, 1, 0, false, false);
  b.bound(1, 2, 0, true, false);
  b.bound(2, 0, 2, false, true);
  b.bound(2, 1, 1, true, true);
  b.bound(2, 2, 0, false, false);
  return b.sh;
}

ShapeTemplate build_aba(const Params& par) {
  Builder b(par);
  b.declare({{"c11", VarKind::Plain},
             {"c13", VarKind::Plain},
             {"c13s", VarKind::Star},
             {"c22s", VarKind::Star},
             {"c23", VarKind::Plain},
             {"c31s", VarKind::Star},
             {"c32", VarKind::Plain},
             {"c33", VarKind::Plain},
             {"c33p", VarKind::Prime}});
  b.inv("c31s");
  b.finish_vars();
  b.sh.word = "aba";
  VPoly P = b.P();
  b.entry(0, 0, b.C(b.x("c11")));
  b.entry(0, 1, b.C(b.x("c11") * b.x("c32") * b.x("c31si")));
  b.entry(0, 2, b.C(b.x("c13")) + P * b.C(b.x("c13s")));
  b.entry(1, 1, P * b.C(b.x("c22s")));
  b.entry(1, 2, P * b.C(b.x("c23")));
  b.entry(2, 0, b.V(b.x("c31s"), 1));
  b.entry(2, 1, b.V(b.x("c32"), 1));
  b.entry(2, 2, b.C(b.x("c33")) + P * b.C(b.x("c33p")));
  b.rel(b.x("c11") * b.x("c33") + b.cst(b.p) * b.x("c13") * b.x("c31s"));
  b.rel(b.x("c11") * b.x("c33p") - b.x("c13") * b.x("c31s") +
        b.cst(b.p) * b.x("c13s") * b.x("c31s"));
  b.bound(0, 0, 0, false, false);
  b.bound(0, 1, 0, false, false);
  b.bound(0, 2, 1, true, false);
  b.bound(1, 1, 1, true, false);
  b.bound(1, 2, 1, false, false);
  b.bound(2, 0, 1, true, true);
  b.bound(2, 1, 1, false, true);
  b.bound(2, 2, 1, false, false);
  return b.sh;
}

ShapeTemplate build_ab(const Params& par) {
  Builder b(par);
  b.declare({{"c12", VarKind::Plain},
             {"c13", VarKind::Plain},
             {"c13s", VarKind::Star},
             {"c21s", VarKind::Star},
             {"c22", VarKind::Plain},
             {"c23", VarKind::Plain},
             {"c23p", VarKind::Prime},
             {"c31", VarKind::Plain},
             {"c32s", VarKind::Star},
             {"c33p", VarKind::Prime}});
  b.inv("c21s");
  b.inv("c32s");
  b.finish_vars();
  b.sh.word = "ab";
  VPoly P = b.P();
  b.entry(0, 0, b.C(b.x("c31") * b.x("c12") * b.x("c32si")));
  b.entry(0, 1, b.C(b.x("c12")));
  b.entry(0, 2, b.C(b.x("c13")) + P * b.C(b.x("c13s")));
  b.entry(1, 0, b.V(b.x("c21s"), 1));
  b.entry(1, 1, b.C(b.x("c22")));
  b.entry(1, 2, b.C(b.x("c23")) + P * b.C(b.x("c23p")));
  b.entry(2, 0, b.V(b.x("c31"), 1));
  b.entry(2, 1, b.V(b.x("c32s"), 1));
  b.entry(2, 2, b.C(b.x("c31") * b.x("c23") * b.x("c21si")) + P * b.C(b.x("c33p")));
  b.rel(b.x("c22") * b.x("c31") + b.cst(b.p) * b.x("c21s") * b.x("c32s"));
  b.rel(b.x("c12") * b.x("c23") - b.x("c22") * b.x("c13"));
  b.rel(b.x("c21s") * b.x("c32s") * b.x("c13") -
        b.cst(b.p) * b.x("c21s") * b.x("c32s") * b.x("c13s") -
        b.x("c33p") * b.x("c21s") * b.x("c12"));
  b.bound(0, 0, 0, false, false);
  b.bound(0, 1, 0, false, false);
  b.bound(0, 2, 1, true, false);
  b.bound(1, 0, 1, true, true);
  b.bound(1, 1, 0, false, false);
  b.bound(1, 2, 1, false, false);
  b.bound(2, 0, 1, false, true);
  b.bound(2, 1, 1, true, true);
  b.bound(2, 2, 1, false, false);
  return b.sh;
}

ShapeTemplate build_ba(const Params& par) {
  Builder b(par);
  b.declare({{"c11", VarKind::Plain},
             {"c12s", VarKind::Star},
             {"c13", VarKind::Plain},
             {"c22p", VarKind::Prime},
             {"c23s", VarKind::Star},
             {"c31s", VarKind::Star},
             {"c32", VarKind::Plain},
             {"c33", VarKind::Plain},
             {"c33p", VarKind::Prime}});
  b.inv("c31s");
  b.finish_vars();
  b.sh.word = "ba";
  VPoly P = b.P();
  b.entry(0, 0, b.C(b.x("c11")));
  b.entry(0, 1, b.C(b.x("c31si") * b.x("c11") * b.x("c32")) + P * b.C(b.x("c12s")));
  b.entry(0, 2, b.C(b.x("c13")));
  b.entry(1, 1, P * b.C(b.x("c22p")));
  b.entry(1, 2, P * b.C(b.x("c23s")));
  b.entry(2, 0, b.V(b.x("c31s"), 1));
  b.entry(2, 1, b.V(b.x("c32"), 1));
  b.entry(2, 2, b.C(b.x("c33")) + P * b.C(b.x("c33p")));
  b.rel(b.x("c11") * b.x("c33") + b.cst(b.p) * b.x("c31s") * b.x("c13"));
  b.rel(b.x("c22p") * (b.x("c11") * b.x("c33p") - b.x("c13") * b.x("c31s")) -
        b.cst(b.p) * b.x("c23s") * b.x("c12s") * b.x("c31s"));
  b.bound(0, 0, 0, false, false);
  b.bound(0, 1, 1, true, false);
  b.bound(0, 2, 0, false, false);
  b.bound(1, 1, 1, false, false);
  b.bound(1, 2, 1, true, false);
  b.bound(2, 0, 1, true, true);
  b.bound(2, 1, 1, false, true);
  b.bound(2, 2, 1, false, false);
  return b.sh;
}

ShapeTemplate build_a(const Params& par) {
  Builder b(par);
  b.declare({{"c11", VarKind::Plain},
             {"c12", VarKind::Plain},
             {"c12s", VarKind::Star},
             {"c13", VarKind::Plain},
             {"c21s", VarKind::Star},
             {"c22", VarKind::Plain},
             {"c22p", VarKind::Prime},
             {"c23", VarKind::Plain},
             {"c31", VarKind::Plain},
             {"c32", VarKind::Plain},
             {"c33", VarKind::Plain},
             {"c33s", VarKind::Star}});
  b.inv("c21s");
  b.inv("c12s");
  b.inv("c33s");
  b.finish_vars();
  b.sh.word = "a";
  VPoly P = b.P();
  b.entry(0, 0, b.C(b.x("c11")));
  b.entry(0, 1, b.C(b.x("c12")) + P * b.C(b.x("c12s")));
  b.entry(0, 2, b.C(b.x("c13")));
  b.entry(1, 0, b.V(b.x("c21s"), 1));
  b.entry(1, 1, b.C(b.x("c22")) + P * b.C(b.x("c22p")));
  b.entry(1, 2, b.C(b.x("c23")));
  b.entry(2, 0, b.V(b.x("c31"), 1));
  b.entry(2, 1, b.V(b.x("c32"), 1));
  b.entry(2, 2, b.C(b.x("c33")) + P * b.C(b.x("c33s")));
  // all 2x2 minors of the matrix at v = -p
  QPoly u[3][3] = {{b.x("c11"), b.x("c12"), b.x("c13")},
                   {b.cst(-b.p) * b.x("c21s"), b.x("c22"), b.x("c23")},
                   {b.cst(-b.p) * b.x("c31"), b.cst(-b.p) * b.x("c32"), b.x("c33")}};
  for (int i0 = 0; i0 < 2; ++i0)
    for (int i1 = i0 + 1; i1 < 3; ++i1)
      for (int k0 = 0; k0 < 2; ++k0)
        for (int k1 = k0 + 1; k1 < 3; ++k1)
          b.rel(u[i0][k0] * u[i1][k1] - u[i0][k1] * u[i1][k0]);
  b.rel(b.x("c11") * b.x("c22p") * b.x("c33s") + b.x("c13") * b.x("c21s") * b.x("c32") -
        b.x("c13") * b.x("c22p") * b.x("c31") - b.x("c12") * b.x("c21s") * b.x("c33s") +
        b.cst(b.p) * b.x("c21s") * b.x("c12s") * b.x("c33s"));
  b.bound(0, 0, 0, false, false);
  b.bound(0, 1, 1, true, false);
  b.bound(0, 2, 0, false, false);
  b.bound(1, 0, 1, true, true);
  b.bound(1, 1, 1, false, false);
  b.bound(1, 2, 0, false, false);
  b.bound(2, 0, 1, false, true);
  b.bound(2, 1, 1, false, true);
  b.bound(2, 2, 1, true, false);
  return b.sh;
}

ShapeTemplate build_id(const Params& par) {
  Builder b(par);
  b.declare({{"c11", VarKind::Plain},
             {"c11s", VarKind::Star},
             {"c12", VarKind::Plain},
             {"c13", VarKind::Plain},
             {"c21", VarKind::Plain},
             {"c22", VarKind::Plain},
             {"c22s", VarKind::Star},
             {"c23", VarKind::Plain},
             {"c31", VarKind::Plain},
             {"c32", VarKind::Plain},
             {"c33", VarKind::Plain},
             {"c33s", VarKind::Star}});
  b.finish_vars();
  b.sh.word = "id";
  VPoly P = b.P();
  b.entry(0, 0, b.C(b.x("c11")) + P * b.C(b.x("c11s")));
  b.entry(0, 1, b.C(b.x("c12")));
  b.entry(0, 2, b.C(b.x("c13")));
  b.entry(1, 0, b.V(b.x("c21"), 1));
  b.entry(1, 1, b.C(b.x("c22")) + P * b.C(b.x("c22s")));
  b.entry(1, 2, b.C(b.x("c23")));
  b.entry(2, 0, b.V(b.x("c31"), 1));
  b.entry(2, 1, b.V(b.x("c32"), 1));
  b.entry(2, 2, b.C(b.x("c33")) + P * b.C(b.x("c33s")));
  QPoly u[3][3] = {{b.x("c11"), b.x("c12"), b.x("c13")},
                   {b.cst(-b.p) * b.x("c21"), b.x("c22"), b.x("c23")},
                   {b.cst(-b.p) * b.x("c31"), b.cst(-b.p) * b.x("c32"), b.x("c33")}};
  for (int i0 = 0; i0 < 2; ++i0)
    for (int i1 = i0 + 1; i1 < 3; ++i1)
      for (int k0 = 0; k0 < 2; ++k0)
        for (int k1 = k0 + 1; k1 < 3; ++k1)
          b.rel(u[i0][k0] * u[i1][k1] - u[i0][k1] * u[i1][k0]);
  b.rel(b.x("c11") * b.x("c22s") * b.x("c33s") + b.x("c22") * b.x("c33s") * b.x("c11s") +
        b.x("c33") * b.x("c11s") * b.x("c22s") - b.x("c11s") * b.x("c23") * b.x("c32") -
        b.x("c22s") * b.x("c13") * b.x("c31") - b.x("c33s") * b.x("c12") * b.x("c21") +
        b.x("c21") * b.x("c13") * b.x("c32"));
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (i == k)
        b.bound(i, k, 1, true, false);
      else
        b.bound(i, k, i > k ? 1 : 0, false, i > k);
    }
  return b.sh;
}

}  // namespace

ShapeTemplate make_shape(const std::string& word, const Params& par) {
  ShapeTemplate sh;
  if (word == "abag")
    sh = build_abag(par);
  else if (word == "bgag")
    sh = build_bgag(par);
  else if (word == "bag")
    sh = build_bag(par);
  else if (word == "abg")
    sh = build_abg(par);
  else if (word == "aba")
    sh = build_aba(par);
  else if (word == "ab")
    sh = build_ab(par);
  else if (word == "ba")
    sh = build_ba(par);
  else if (word == "a")
    sh = build_a(par);
  else if (word == "id")
    sh = build_id(par);
  else
    throw std::invalid_argument("make_shape: unknown representative " + word);
  sh.elt = weyl::AffineWeylElt::v_times_identity() * weyl::parse_word(sh.word);
  return sh;
}

}  // namespace kisin3::shapes
