#include "superteich/superlinalg.hpp"

#include <cmath>
#include <stdexcept>

namespace superteich {

namespace {

// Odd slots of the block layout, row-major indices.
constexpr bool kOddSlot[9] = {false, true, false, true, false, true, false, true, false};

void check_same_algebra(const SuperMatrix& g, const SuperMatrix& h) {
  if (g.num_generators != h.num_generators)
    throw std::invalid_argument("mismatched num_generators");
}

}  // namespace

SuperMatrix SuperMatrix::zero(int n) {
  SuperMatrix r;
  r.num_generators = n;
  for (auto& e : r.m) e = GrassmannNumber::zero(n);
  return r;
}

SuperMatrix SuperMatrix::identity(int n) {
  SuperMatrix r = zero(n);
  r.at(0, 0) = GrassmannNumber::scalar(n, 1.0);
  r.at(1, 1) = GrassmannNumber::scalar(n, 1.0);
  r.at(2, 2) = GrassmannNumber::scalar(n, 1.0);
  return r;
}

SuperMatrix SuperMatrix::from_rows(std::array<GrassmannNumber, 9> rows) {
  SuperMatrix r;
  r.num_generators = rows[0].num_generators();
  for (const auto& e : rows)
    if (e.num_generators() != r.num_generators)
      throw std::invalid_argument("mismatched num_generators");
  r.m = std::move(rows);
  return r;
}

SuperMatrix matmul(const SuperMatrix& g, const SuperMatrix& h) {
  check_same_algebra(g, h);
  SuperMatrix r = SuperMatrix::zero(g.num_generators);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      GrassmannNumber acc = GrassmannNumber::zero(g.num_generators);
      for (int k = 0; k < 3; ++k) acc += g.at(i, k) * h.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

SuperMatrix operator*(const SuperMatrix& g, const SuperMatrix& h) { return matmul(g, h); }

SuperMatrix operator+(const SuperMatrix& g, const SuperMatrix& h) {
  check_same_algebra(g, h);
  SuperMatrix r = g;
  for (int i = 0; i < 9; ++i) r.m[i] += h.m[i];
  return r;
}

SuperMatrix operator-(const SuperMatrix& g, const SuperMatrix& h) {
  check_same_algebra(g, h);
  SuperMatrix r = g;
  for (int i = 0; i < 9; ++i) r.m[i] -= h.m[i];
  return r;
}

SuperMatrix scale(const SuperMatrix& g, const GrassmannNumber& s) {
  SuperMatrix r = g;
  for (int i = 0; i < 9; ++i) r.m[i] = s * r.m[i];
  return r;
}

bool parity_pattern_ok(const SuperMatrix& g) {
  for (int i = 0; i < 9; ++i) {
    if (kOddSlot[i] ? !g.m[i].is_odd() : !g.m[i].is_even()) return false;
  }
  return true;
}

SuperMatrix supertranspose(const SuperMatrix& g) {
  if (!parity_pattern_ok(g)) throw std::domain_error("supertranspose: parity pattern violated");
  SuperMatrix r = SuperMatrix::zero(g.num_generators);
  r.at(0, 0) = g.at(0, 0);
  r.at(0, 1) = g.at(1, 0);
  r.at(0, 2) = g.at(2, 0);
  r.at(1, 0) = -g.at(0, 1);
  r.at(1, 1) = g.at(1, 1);
  r.at(1, 2) = -g.at(2, 1);
  r.at(2, 0) = g.at(0, 2);
  r.at(2, 1) = g.at(1, 2);
  r.at(2, 2) = g.at(2, 2);
  return r;
}

GrassmannNumber sdet(const SuperMatrix& g) {
  const GrassmannNumber& a = g.at(0, 0);
  const GrassmannNumber& alpha = g.at(0, 1);
  const GrassmannNumber& b = g.at(0, 2);
  const GrassmannNumber& gamma = g.at(1, 0);
  const GrassmannNumber& f = g.at(1, 1);
  const GrassmannNumber& beta = g.at(1, 2);
  const GrassmannNumber& c = g.at(2, 0);
  const GrassmannNumber& delta = g.at(2, 1);
  const GrassmannNumber& d = g.at(2, 2);
  GrassmannNumber finv = f.inverse();
  GrassmannNumber p = a + finv * (alpha * gamma);
  GrassmannNumber q = b + finv * (alpha * delta);
  GrassmannNumber r = c + finv * (beta * gamma);
  GrassmannNumber s = d + finv * (beta * delta);
  return finv * (p * s - q * r);
}

GrassmannNumber supertrace(const SuperMatrix& g) { return g.at(0, 0) + g.at(2, 2) - g.at(1, 1); }

OspCheck is_osp(const SuperMatrix& g, double tol) {
  SuperMatrix j = special_j(g.num_generators);
  SuperMatrix lhs = matmul(matmul(supertranspose(g), j), g);
  double res = max_abs_diff(lhs, j);
  return OspCheck{res < tol, res};
}

std::array<double, 4> project_sl2(const SuperMatrix& g) {
  double f = g.at(1, 1).body();
  if (f <= 0) throw std::domain_error("project_sl2 requires body(f) > 0");
  double s = 1.0 / std::sqrt(f);
  return {s * g.at(0, 0).body(), s * g.at(0, 2).body(), s * g.at(2, 0).body(),
          s * g.at(2, 2).body()};
}

SuperMatrix special_j(int n) {
  SuperMatrix r = SuperMatrix::zero(n);
  r.at(0, 2) = GrassmannNumber::scalar(n, 1.0);
  r.at(1, 1) = GrassmannNumber::scalar(n, 1.0);
  r.at(2, 0) = GrassmannNumber::scalar(n, -1.0);
  return r;
}

SuperMatrix fermionic_reflection(int n) {
  return make_special(SpecialKind::Z, GrassmannNumber::scalar(n, -1.0));
}

SuperMatrix make_special(SpecialKind kind, const GrassmannNumber& param) {
  const int n = param.num_generators();
  switch (kind) {
    case SpecialKind::Identity:
      return SuperMatrix::identity(n);
    case SpecialKind::J:
      return special_j(n);
    case SpecialKind::D: {
      if (!param.is_even() || param.body() <= 0)
        throw std::domain_error("D_a requires an even parameter with positive body");
      SuperMatrix r = SuperMatrix::zero(n);
      r.at(0, 0) = param;
      r.at(1, 1) = GrassmannNumber::scalar(n, 1.0);
      r.at(2, 2) = param.inverse();
      return r;
    }
    case SpecialKind::Z: {
      bool neg_one = param.soul().is_zero() && std::abs(param.body() + 1.0) < 1e-12;
      if (!neg_one && (!param.is_even() || param.body() <= 0))
        throw std::domain_error("Z_a requires an even parameter with positive body (or -1)");
      SuperMatrix r = SuperMatrix::zero(n);
      r.at(0, 0) = param;
      r.at(1, 1) = param * param;
      r.at(2, 2) = param;
      return r;
    }
    case SpecialKind::PPlus: {
      if (!param.is_odd()) throw std::domain_error("P_theta requires an odd parameter");
      SuperMatrix r = SuperMatrix::zero(n);
      r.at(0, 0) = GrassmannNumber::scalar(n, -1.0);
      r.at(0, 1) = param;
      r.at(0, 2) = GrassmannNumber::scalar(n, 1.0);
      r.at(1, 0) = -param;
      r.at(1, 1) = GrassmannNumber::scalar(n, 1.0);
      r.at(2, 0) = GrassmannNumber::scalar(n, -1.0);
      return r;
    }
    case SpecialKind::PMinus: {
      if (!param.is_odd()) throw std::domain_error("P_theta requires an odd parameter");
      SuperMatrix r = SuperMatrix::zero(n);
      r.at(0, 2) = GrassmannNumber::scalar(n, -1.0);
      r.at(1, 1) = GrassmannNumber::scalar(n, 1.0);
      r.at(1, 2) = -param;
      r.at(2, 0) = GrassmannNumber::scalar(n, 1.0);
      r.at(2, 1) = -param;
      r.at(2, 2) = GrassmannNumber::scalar(n, -1.0);
      return r;
    }
    case SpecialKind::Upsilon: {
      if (!param.is_even() || param.body() <= 0)
        throw std::domain_error("Upsilon requires an even parameter with positive body");
      return matmul(special_j(n), make_special(SpecialKind::D, param.sqrt()));
    }
  }
  throw std::invalid_argument("unknown special kind");
}

SuperMatrix osp_inverse(const SuperMatrix& g) {
  const int n = g.num_generators;
  // J^{-1} = (0 0 -1 / 0 1 0 / 1 0 0)
  SuperMatrix jinv = SuperMatrix::zero(n);
  jinv.at(0, 2) = GrassmannNumber::scalar(n, -1.0);
  jinv.at(1, 1) = GrassmannNumber::scalar(n, 1.0);
  jinv.at(2, 0) = GrassmannNumber::scalar(n, 1.0);
  return matmul(matmul(jinv, supertranspose(g)), special_j(n));
}

SuperMatrix inverse(const SuperMatrix& g) {
  const int n = g.num_generators;
  // Invert the body 3x3 numerically, then a Neumann series in the soul part.
  double b[9];
  for (int i = 0; i < 9; ++i) b[i] = g.m[i].body();
  double det = b[0] * (b[4] * b[8] - b[5] * b[7]) - b[1] * (b[3] * b[8] - b[5] * b[6]) +
               b[2] * (b[3] * b[7] - b[4] * b[6]);
  if (std::abs(det) < 1e-12) throw std::domain_error("matrix body is singular");
  double inv[9] = {
      (b[4] * b[8] - b[5] * b[7]) / det, (b[2] * b[7] - b[1] * b[8]) / det,
      (b[1] * b[5] - b[2] * b[4]) / det, (b[5] * b[6] - b[3] * b[8]) / det,
      (b[0] * b[8] - b[2] * b[6]) / det, (b[2] * b[3] - b[0] * b[5]) / det,
      (b[3] * b[7] - b[4] * b[6]) / det, (b[1] * b[6] - b[0] * b[7]) / det,
      (b[0] * b[4] - b[1] * b[3]) / det};
  SuperMatrix binv = SuperMatrix::zero(n);
  for (int i = 0; i < 9; ++i) binv.m[i] = GrassmannNumber::scalar(n, inv[i]);
  // g = B + S, g^{-1} = (I + B^{-1} S)^{-1} B^{-1} = sum (-B^{-1} S)^k B^{-1}
  SuperMatrix s = SuperMatrix::zero(n);
  for (int i = 0; i < 9; ++i) s.m[i] = g.m[i].soul();
  SuperMatrix step = scale(matmul(binv, s), GrassmannNumber::scalar(n, -1.0));
  SuperMatrix acc = SuperMatrix::identity(n);
  SuperMatrix pw = step;
  for (int k = 1; k <= n && max_abs_coeff(pw) > 0; ++k) {
    acc = acc + pw;
    pw = matmul(pw, step);
  }
  return matmul(acc, binv);
}

double max_abs_coeff(const SuperMatrix& g) {
  double m = 0.0;
  for (const auto& e : g.m) m = std::max(m, e.max_abs_coeff());
  return m;
}

double max_abs_diff(const SuperMatrix& g, const SuperMatrix& h) {
  check_same_algebra(g, h);
  double m = 0.0;
  for (int i = 0; i < 9; ++i) m = std::max(m, max_abs_diff(g.m[i], h.m[i]));
  return m;
}

bool approx_equal(const SuperMatrix& g, const SuperMatrix& h, double tol) {
  return max_abs_diff(g, h) <= tol;
}

std::vector<std::string> serialize(const SuperMatrix& g) {
  std::vector<std::string> out;
  out.reserve(9);
  for (const auto& e : g.m) out.push_back(e.str());
  return out;
}

ComplexGrassmann ComplexGrassmann::make(GrassmannNumber re, GrassmannNumber im) {
  if (re.num_generators() != im.num_generators())
    throw std::invalid_argument("mismatched num_generators");
  return ComplexGrassmann{std::move(re), std::move(im)};
}

ComplexGrassmann operator+(const ComplexGrassmann& a, const ComplexGrassmann& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexGrassmann operator-(const ComplexGrassmann& a, const ComplexGrassmann& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexGrassmann operator*(const ComplexGrassmann& a, const ComplexGrassmann& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexGrassmann cg_inverse(const ComplexGrassmann& a) {
  GrassmannNumber norm = a.re * a.re + a.im * a.im;
  GrassmannNumber ninv = norm.inverse();
  return {a.re * ninv, -(a.im * ninv)};
}

ComplexGrassmann embed_real(const GrassmannNumber& x) {
  return {x, GrassmannNumber::zero(x.num_generators())};
}

double cg_max_abs_diff(const ComplexGrassmann& a, const ComplexGrassmann& b) {
  return std::max(max_abs_diff(a.re, b.re), max_abs_diff(a.im, b.im));
}

SuperPoint superconformal_action(const SuperMatrix& g, const SuperPoint& p) {
  const GrassmannNumber& a = g.at(0, 0);
  const GrassmannNumber& b = g.at(0, 2);
  const GrassmannNumber& gamma = g.at(1, 0);
  const GrassmannNumber& delta = g.at(2, 1);
  const GrassmannNumber& c = g.at(2, 0);
  const GrassmannNumber& d = g.at(2, 2);
  ComplexGrassmann den = embed_real(c) * p.z + embed_real(d);
  double den_body = std::hypot(den.re.body(), den.im.body());
  if (den_body < 1e-12) throw std::domain_error("superconformal action: vanishing denominator");
  ComplexGrassmann den_inv = cg_inverse(den);
  ComplexGrassmann num = embed_real(a) * p.z + embed_real(b);
  ComplexGrassmann odd_lin = embed_real(gamma) * p.z + embed_real(delta);
  ComplexGrassmann z_out =
      num * den_inv + p.eta * odd_lin * den_inv * den_inv;
  GrassmannNumber half_dg = (delta * gamma) * 0.5;
  ComplexGrassmann eta_out =
      odd_lin * den_inv + p.eta * embed_real(1.0 + half_dg) * den_inv;
  return SuperPoint{z_out, eta_out};
}

}  // namespace superteich
