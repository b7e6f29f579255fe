#include "superteich/minkowski.hpp"

#include <cmath>
#include <stdexcept>

namespace superteich {

namespace {

void check_parities(const SuperVector& a) {
  if (!a.x1.is_even() || !a.x2.is_even() || !a.y.is_even())
    throw std::domain_error("SuperVector: x1, x2, y must be even");
  if (!a.phi.is_odd() || !a.theta.is_odd())
    throw std::domain_error("SuperVector: phi, theta must be odd");
}

}  // namespace

SuperVector SuperVector::make(GrassmannNumber x1, GrassmannNumber x2, GrassmannNumber y,
                              GrassmannNumber phi, GrassmannNumber theta) {
  SuperVector v{std::move(x1), std::move(x2), std::move(y), std::move(phi), std::move(theta)};
  const int n = v.x1.num_generators();
  if (v.x2.num_generators() != n || v.y.num_generators() != n || v.phi.num_generators() != n ||
      v.theta.num_generators() != n)
    throw std::invalid_argument("mismatched num_generators");
  check_parities(v);
  return v;
}

GrassmannNumber inner(const SuperVector& a, const SuperVector& b) {
  return (a.x1 * b.x2 + b.x1 * a.x2) * 0.5 - a.y * b.y + a.phi * b.theta + b.phi * a.theta;
}

GrassmannNumber lambda_length(const SuperVector& a, const SuperVector& b) {
  return inner(a, b).sqrt();
}

bool is_light_cone(const SuperVector& a, double tol) {
  if (inner(a, a).max_abs_coeff() > tol) return false;
  double b1 = a.x1.body(), b2 = a.x2.body();
  if (b1 < -tol || b2 < -tol) return false;
  return b1 > tol || b2 > tol;
}

SuperMatrix point_matrix(const SuperVector& a, const GrassmannNumber& c) {
  const int n = a.num_generators();
  if (c.num_generators() != n) throw std::invalid_argument("mismatched num_generators");
  SuperMatrix m = SuperMatrix::zero(n);
  m.at(0, 0) = a.x1;
  m.at(0, 1) = a.phi;
  m.at(0, 2) = a.y - c;
  m.at(1, 0) = a.phi;
  m.at(1, 1) = c;
  m.at(1, 2) = a.theta;
  m.at(2, 0) = a.y + c;
  m.at(2, 1) = a.theta;
  m.at(2, 2) = a.x2;
  return m;
}

AdjointResult adjoint_act(const SuperMatrix& g, const SuperVector& a, const GrassmannNumber& c) {
  const int n = a.num_generators();
  SuperMatrix m = matmul(matmul(g, point_matrix(a, c)), supertranspose(g));
  // Read back and validate the pattern.
  double scale = std::max(1.0, max_abs_coeff(m));
  double tol = 1e-9 * scale;
  GrassmannNumber c_out = m.at(1, 1);
  GrassmannNumber y_out = (m.at(0, 2) + m.at(2, 0)) * 0.5;
  double res = std::max({max_abs_diff(m.at(0, 1), m.at(1, 0)),
                         max_abs_diff(m.at(1, 2), m.at(2, 1)),
                         max_abs_diff(m.at(2, 0) - m.at(0, 2), c_out * 2.0)});
  if (res > tol)
    throw std::domain_error("adjoint action image does not match the point-matrix pattern");
  SuperVector v = SuperVector::make(m.at(0, 0), m.at(2, 2), y_out, m.at(0, 1), m.at(1, 2));
  (void)n;
  return AdjointResult{v, c_out};
}

SuperVector apply(const SuperMatrix& g, const SuperVector& a) {
  return adjoint_act(g, a, GrassmannNumber::zero(a.num_generators())).v;
}

double max_abs_diff(const SuperVector& a, const SuperVector& b) {
  return std::max({max_abs_diff(a.x1, b.x1), max_abs_diff(a.x2, b.x2), max_abs_diff(a.y, b.y),
                   max_abs_diff(a.phi, b.phi), max_abs_diff(a.theta, b.theta)});
}

SuperVector spinor_point(const LightConeSpinor& s) {
  return SuperVector::make(s.u * s.u, s.v * s.v, s.u * s.v, s.u * s.xi, s.v * s.xi);
}

LightConeSpinor light_cone_spinor(const SuperVector& a, double tol) {
  const int n = a.num_generators();
  LightConeSpinor s;
  if (a.x1.body() > GrassmannNumber::kBodyEps) {
    s.u = a.x1.sqrt();
    GrassmannNumber uinv = s.u.inverse();
    s.v = uinv * a.y;
    s.xi = uinv * a.phi;
  } else if (a.x2.body() > GrassmannNumber::kBodyEps) {
    s.v = a.x2.sqrt();
    GrassmannNumber vinv = s.v.inverse();
    s.u = vinv * a.y;
    s.xi = vinv * a.theta;
  } else {
    throw std::domain_error("light_cone_spinor: both x1 and x2 have vanishing body");
  }
  double scale = std::max(1.0, std::max({a.x1.max_abs_coeff(), a.x2.max_abs_coeff(),
                                         a.y.max_abs_coeff(), 1.0}));
  double res = max_abs_diff(spinor_point(s), a);
  if (res > tol * scale)
    throw std::domain_error("point is not on the special light cone (spinor residual " +
                            std::to_string(res) + ")");
  (void)n;
  return s;
}

std::optional<StandardPositionData> is_standard_position(const SuperVector& a,
                                                         const SuperVector& b,
                                                         const SuperVector& c, double tol) {
  const int n = a.num_generators();
  GrassmannNumber z = GrassmannNumber::zero(n);
  // A = r(0,1,0|0,0)
  if (a.x1.max_abs_coeff() > tol || a.y.max_abs_coeff() > tol || a.phi.max_abs_coeff() > tol ||
      a.theta.max_abs_coeff() > tol)
    return std::nullopt;
  if (a.x2.body() <= tol) return std::nullopt;
  // C = s(1,0,0|0,0)
  if (c.x2.max_abs_coeff() > tol || c.y.max_abs_coeff() > tol || c.phi.max_abs_coeff() > tol ||
      c.theta.max_abs_coeff() > tol)
    return std::nullopt;
  if (c.x1.body() <= tol) return std::nullopt;
  // B = t(1,1,1|phi,phi)
  if (b.x1.body() <= tol) return std::nullopt;
  if (max_abs_diff(b.x1, b.x2) > tol || max_abs_diff(b.x1, b.y) > tol) return std::nullopt;
  if (max_abs_diff(b.phi, b.theta) > tol) return std::nullopt;
  GrassmannNumber t = b.x1;
  StandardPositionData d{a.x2, t, c.x1, t.inverse() * b.phi};
  (void)z;
  return d;
}

SuperMatrix standardize_triple(const SuperVector& a, const SuperVector& b, const SuperVector& c,
                               double tol) {
  const int n = a.num_generators();
  LightConeSpinor sa = light_cone_spinor(a, tol);
  LightConeSpinor sb = light_cone_spinor(b, tol);
  LightConeSpinor sc = light_cone_spinor(c, tol);

  // Columns of k (the map standard -> target): col1 = nu_C sigma_C,
  // col3 = nu_A sigma_A, middle column completed by the OSp conditions.
  // sigma_B = p sigma_C + q sigma_A + psi * col2.
  auto cross_body = [](const LightConeSpinor& x, const LightConeSpinor& y) {
    return x.u.body() * y.v.body() - y.u.body() * x.v.body();
  };
  double det_b = cross_body(sc, sa);
  if (std::abs(det_b) < 1e-9)
    throw std::domain_error("standardize_triple: degenerate triple (rays of A and C coincide)");
  // Spinors are defined up to sign; normalize so that the expansion
  // coefficients of sigma_B come out with positive body.
  double p_b = cross_body(sb, sa) / det_b;
  double q_b = cross_body(sc, sb) / det_b;
  if (std::abs(p_b) < 1e-9 || std::abs(q_b) < 1e-9)
    throw std::domain_error("standardize_triple: degenerate triple (B shares a ray with A or C)");
  auto negate = [](LightConeSpinor& s) {
    s.u = -s.u;
    s.xi = -s.xi;
    s.v = -s.v;
  };
  if (p_b < 0) negate(sc);  // flips p
  if (q_b < 0) negate(sa);  // flips q
  GrassmannNumber det = sc.u * sa.v - sa.u * sc.v;
  GrassmannNumber det_inv = det.inverse();
  GrassmannNumber ptilde = det + sc.xi * sa.xi;
  // With p, q normalized positive, sign(p q det) is independent of the spinor
  // sign choices and positive exactly for positively oriented triples.
  if (ptilde.body() <= 0)
    throw std::domain_error("standardize_triple: triple is not positively oriented");

  GrassmannNumber psi = GrassmannNumber::zero(n);
  GrassmannNumber alpha = GrassmannNumber::zero(n), delta = GrassmannNumber::zero(n);
  GrassmannNumber f = GrassmannNumber::scalar(n, 1.0);
  GrassmannNumber p = GrassmannNumber::zero(n), q = GrassmannNumber::zero(n);
  GrassmannNumber av, gv, cv, bv, betav, dv;

  bool converged = false;
  for (int pass = 0; pass <= n + 2; ++pass) {
    GrassmannNumber rhs_u = sb.u - psi * alpha;
    GrassmannNumber rhs_v = sb.v - psi * delta;
    p = (rhs_u * sa.v - rhs_v * sa.u) * det_inv;
    q = (sc.u * rhs_v - sc.v * rhs_u) * det_inv;
    GrassmannNumber tau = (p * q * ptilde).sqrt();
    GrassmannNumber tau_inv = tau.inverse();
    GrassmannNumber nu_c = p * tau_inv;
    GrassmannNumber nu_a = q * tau_inv;
    av = nu_c * sc.u;
    gv = nu_c * sc.xi;
    cv = nu_c * sc.v;
    bv = nu_a * sa.u;
    betav = nu_a * sa.xi;
    dv = nu_a * sa.v;
    // (i)  a*delta - c*alpha + f*gamma = 0, (iv) b*delta - d*alpha + f*beta = 0
    // with alpha = f*A1, delta = f*D1:
    //   -c A1 + a D1 = -gamma ;  -d A1 + b D1 = -beta
    GrassmannNumber dd = av * dv - bv * cv;
    GrassmannNumber dd_inv = dd.inverse();
    GrassmannNumber a1 = (av * betav - gv * bv) * dd_inv;
    GrassmannNumber d1 = (cv * betav - dv * gv) * dd_inv;
    f = (GrassmannNumber::scalar(n, 1.0) - a1 * d1 * 2.0).inverse().sqrt();
    alpha = f * a1;
    delta = f * d1;
    psi = f.inverse() * (sb.xi - p * sc.xi - q * sa.xi);
    double res = std::max({max_abs_diff(p * sc.u + q * sa.u + psi * alpha, sb.u),
                           max_abs_diff(p * sc.v + q * sa.v + psi * delta, sb.v),
                           max_abs_diff(p * sc.xi + q * sa.xi + psi * f, sb.xi)});
    if (res < 1e-13 * std::max(1.0, sb.u.max_abs_coeff() + sb.v.max_abs_coeff())) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("standardize_triple: correction loop did not converge");

  SuperMatrix k = SuperMatrix::zero(n);
  k.at(0, 0) = av;
  k.at(1, 0) = gv;
  k.at(2, 0) = cv;
  k.at(0, 1) = alpha;
  k.at(1, 1) = f;
  k.at(2, 1) = delta;
  k.at(0, 2) = bv;
  k.at(1, 2) = betav;
  k.at(2, 2) = dv;
  OspCheck chk = is_osp(k, 1e-7);
  if (!chk.ok)
    throw std::runtime_error("standardize_triple: completion is not OSp (residual " +
                             std::to_string(chk.residual) + ")");
  SuperMatrix h = osp_inverse(k);
  if (!is_standard_position(apply(h, a), apply(h, b), apply(h, c),
                            std::max(tol, 1e-8 * max_abs_coeff(k))))
    throw std::runtime_error("standardize_triple: result fails the standard-position check");
  return h;
}

}  // namespace superteich
