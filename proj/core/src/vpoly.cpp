#include "kisin3/vpoly.hpp"

#include <stdexcept>

namespace kisin3::series {

VPoly VPoly::from_coeff(std::vector<QPoly> c) {
  VPoly r;
  r.coeff = std::move(c);
  for (const auto& q : r.coeff) r.nvars = std::max(r.nvars, q.nvars);
  r.trim();
  return r;
}

VPoly VPoly::constant(QPoly c) {
  VPoly r(c.nvars);
  if (!c.is_zero()) r.coeff.push_back(std::move(c));
  return r;
}

VPoly VPoly::monomial(QPoly c, int vdeg) {
  VPoly r(c.nvars);
  if (c.is_zero()) return r;
  r.coeff.assign(vdeg + 1, QPoly(c.nvars));
  r.coeff[vdeg] = std::move(c);
  return r;
}

VPoly VPoly::linear_vp(int nv, const Rat& p) {
  VPoly r(nv);
  r.coeff = {QPoly::constant(nv, p), QPoly::constant(nv, Rat(1))};
  return r;
}

void VPoly::trim() {
  while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
}

const QPoly& VPoly::at(int i) const {
  static const QPoly zero;
  if (i < 0 || i >= static_cast<int>(coeff.size())) return zero;
  return coeff[i];
}

VPoly operator+(const VPoly& a, const VPoly& b) {
  VPoly r(std::max(a.nvars, b.nvars));
  r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), QPoly(r.nvars));
  for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] = a.at(i) + b.at(i);
  r.trim();
  return r;
}

VPoly operator-(const VPoly& a, const VPoly& b) {
  VPoly r(std::max(a.nvars, b.nvars));
  r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), QPoly(r.nvars));
  for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] = a.at(i) - b.at(i);
  r.trim();
  return r;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
  if (a.is_zero() || b.is_zero()) return VPoly(std::max(a.nvars, b.nvars));
  VPoly r(std::max(a.nvars, b.nvars));
  r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, QPoly(r.nvars));
  for (size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeff.size(); ++j)
      r.coeff[i + j] = r.coeff[i + j] + a.coeff[i] * b.coeff[j];
  }
  r.trim();
  return r;
}

VPoly VPoly::operator-() const {
  VPoly r(nvars);
  for (const auto& c : coeff) r.coeff.push_back(-c);
  return r;
}

VPoly VPoly::scaled(const QPoly& c) const {
  VPoly r(nvars);
  if (c.is_zero()) return r;
  for (const auto& q : coeff) r.coeff.push_back(q * c);
  r.trim();
  return r;
}

VPoly VPoly::shifted(int k) const {
  if (is_zero()) return *this;
  VPoly r(nvars);
  r.coeff.assign(coeff.size() + k, QPoly(nvars));
  for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i + k] = coeff[i];
  return r;
}

VPoly VPoly::derivative() const {
  VPoly r(nvars);
  for (size_t i = 1; i < coeff.size(); ++i)
    r.coeff.push_back(coeff[i].scaled(Rat(static_cast<long>(i))));
  r.trim();
  return r;
}

QPoly VPoly::eval(const Rat& v) const {
  QPoly acc(nvars);
  Rat pw(1);
  for (size_t i = 0; i < coeff.size(); ++i) {
    acc = acc + coeff[i].scaled(pw);
    pw *= v;
  }
  return acc;
}

int VPoly::v_content() const {
  for (size_t i = 0; i < coeff.size(); ++i)
    if (!coeff[i].is_zero()) return static_cast<int>(i);
  return 0;
}

VPoly VPoly::remove_v_content() const {
  int k = v_content();
  if (k == 0) return *this;
  VPoly r(nvars);
  r.coeff.assign(coeff.begin() + k, coeff.end());
  return r;
}

VPoly VPoly::div_exact_vp(const Rat& p) const {
  // (f - f(-p)) / (v + p), computed by synthetic division from the top.
  VPoly f = *this;
  QPoly rem = eval(-p);
  if (!rem.is_zero()) {
    if (f.coeff.empty()) f.coeff.resize(1, QPoly(nvars));
    f.coeff[0] = f.coeff[0] - rem;
  }
  if (f.is_zero()) return VPoly(nvars);
  int d = f.degree();
  VPoly q(nvars);
  q.coeff.assign(d, QPoly(nvars));
  q.coeff[d - 1] = f.at(d);
  for (int i = d - 1; i >= 1; --i) q.coeff[i - 1] = f.at(i) - q.coeff[i].scaled(p);
  q.trim();
  return q;
}

VPoly VPoly::nf(const QIdeal& I) const {
  VPoly r(nvars);
  for (const auto& c : coeff) r.coeff.push_back(I.nf(c));
  r.trim();
  return r;
}

VPoly VPoly::substitute(const std::map<int, QPoly>& sub) const {
  VPoly r(nvars);
  for (const auto& c : coeff) r.coeff.push_back(c.substitute(sub));
  r.trim();
  return r;
}

VMatrix VMatrix::zero(int nvars) {
  VMatrix r;
  for (auto& row : r.m)
    for (auto& e : row) e = VPoly(nvars);
  return r;
}

VMatrix VMatrix::identity(int nvars) {
  VMatrix r = zero(nvars);
  for (int i = 0; i < 3; ++i) r.m[i][i] = VPoly::constant(QPoly::constant(nvars, Rat(1)));
  return r;
}

VMatrix operator+(const VMatrix& a, const VMatrix& b) {
  VMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = a.m[i][k] + b.m[i][k];
  return r;
}

VMatrix operator-(const VMatrix& a, const VMatrix& b) {
  VMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = a.m[i][k] - b.m[i][k];
  return r;
}

VMatrix operator*(const VMatrix& a, const VMatrix& b) {
  VMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      VPoly acc;
      for (int j = 0; j < 3; ++j) acc = acc + a.m[i][j] * b.m[j][k];
      r.m[i][k] = acc;
    }
  return r;
}

VMatrix VMatrix::adjugate() const {
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  VMatrix adj;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      int r0 = (k + 1) % 3, r1 = (k + 2) % 3;  // adj[i][k] = cofactor(k, i)
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      if (r0 > r1) std::swap(r0, r1);
      if (c0 > c1) std::swap(c0, c1);
      VPoly mn = minor2(r0, r1, c0, c1);
      adj.m[i][k] = ((k + i) % 2 == 0) ? mn : -mn;
    }
  return adj;
}

VPoly VMatrix::det() const {
  VPoly acc;
  acc = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return acc;
}

VMatrix VMatrix::transpose() const {
  VMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = m[k][i];
  return r;
}

VMatrix VMatrix::nf(const QIdeal& I) const {
  VMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = m[i][k].nf(I);
  return r;
}

VMatrix VMatrix::substitute(const std::map<int, QPoly>& sub) const {
  VMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = m[i][k].substitute(sub);
  return r;
}

VMatrix VMatrix::scaled(const QPoly& c) const {
  VMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = m[i][k].scaled(c);
  return r;
}

std::array<std::array<QPoly, 3>, 3> VMatrix::eval_minus_p(const Rat& p) const {
  std::array<std::array<QPoly, 3>, 3> r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r[i][k] = m[i][k].eval(-p);
  return r;
}

bool adjugate_identity_holds(const VMatrix& M) {
  VMatrix prod = M.adjugate() * M;
  VPoly d = M.det();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (i == k) {
        if (!(prod.m[i][k] == d)) return false;
      } else if (!prod.m[i][k].is_zero()) {
        return false;
      }
    }
  return true;
}

}  // namespace kisin3::series
