#include "superteich/holonomy.hpp"

#include <cmath>
#include <stdexcept>

namespace superteich {

SuperMatrix turn_factor(const TurnStep& s) {
  if (!s.chi.is_even() || s.chi.body() <= 0)
    throw std::domain_error("turn_factor: chi must be even with positive body");
  if (!s.theta.is_odd()) throw std::domain_error("turn_factor: theta must be odd");
  const int n = s.chi.num_generators();
  SuperMatrix z = make_special(SpecialKind::Z, GrassmannNumber::scalar(n, double(s.eps)));
  SuperMatrix u = make_special(SpecialKind::Upsilon, s.chi);
  SuperMatrix p = make_special(s.left ? SpecialKind::PPlus : SpecialKind::PMinus, s.theta);
  return matmul(z, matmul(u, p));
}

SuperMatrix path_holonomy(const std::vector<TurnStep>& steps, int num_generators) {
  SuperMatrix acc = SuperMatrix::identity(num_generators);
  for (const auto& s : steps) acc = matmul(turn_factor(s), acc);  // right to left
  return acc;
}

ClosedForm closed_form(const FanData& f, double tol) {
  const int count = static_cast<int>(f.chi.size());
  if (count == 0) throw std::invalid_argument("closed_form: empty fan");
  const int n = f.chi.front().num_generators();
  GrassmannNumber prod = cross_ratio_product(f);
  if (max_abs_diff(prod, GrassmannNumber::scalar(n, 1.0)) > tol)
    throw std::domain_error("closed_form: cross-ratio product around the fan is not 1");

  std::vector<GrassmannNumber> c(count), cinv(count);
  for (int k = 0; k < count; ++k) {
    c[k] = f.chi[k].sqrt() * double(-f.eps[k]);
    cinv[k] = c[k].inverse();
  }
  // Prefix products: pre[k] = prod_{j<k} c_j^{-1}; suf[k] = prod_{j>=k} c_j.
  std::vector<GrassmannNumber> pre(count + 1), suf(count + 1);
  pre[0] = GrassmannNumber::scalar(n, 1.0);
  for (int k = 0; k < count; ++k) pre[k + 1] = pre[k] * cinv[k];
  suf[count] = GrassmannNumber::scalar(n, 1.0);
  for (int k = count - 1; k >= 0; --k) suf[k] = c[k] * suf[k + 1];

  ClosedForm r;
  r.star0 = suf[0];
  r.star1 = GrassmannNumber::zero(n);
  r.star2 = GrassmannNumber::zero(n);
  for (int k = 0; k < count; ++k) {
    r.star1 += f.theta[k] * pre[k];
    r.star2 += f.theta[k] * suf[k];
  }
  // Even part plus the theta_i theta_j correction from the product induction
  // (the bilinear term carries prod_{k<i} c_k^{-1} prod_{k>=j} c_k).
  r.star3 = GrassmannNumber::zero(n);
  for (int j = 0; j < count; ++j) r.star3 += pre[j] * suf[j];
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      r.star3 -= f.theta[i] * f.theta[j] * pre[i] * suf[j];
  return r;
}

std::string to_string(PunctureType t) { return t == PunctureType::Ramond ? "Ramond" : "NS"; }

MonodromyReport puncture_monodromy(const Triangulation& t, const DecoratedCoords& c,
                                   const Orientation& o, int puncture, double tol) {
  PunctureFan fan = puncture_fan(t, puncture);
  FanData data = fan_data(t, c, fan, o);
  const int n = c.num_generators;

  MonodromyReport r;
  r.puncture = puncture;
  r.n = static_cast<int>(fan.corners.size());
  for (int e : data.eps)
    if (e < 0) ++r.eps_minus_count;

  std::vector<TurnStep> steps;
  for (size_t k = 0; k < data.chi.size(); ++k)
    steps.push_back(TurnStep{data.eps[k], data.chi[k], data.theta[k], true});
  r.matrix = path_holonomy(steps, n);
  r.stars = closed_form(data, tol);

  SuperMatrix expect = SuperMatrix::zero(n);
  expect.at(0, 0) = r.stars.star0;
  expect.at(1, 0) = -r.stars.star1;
  expect.at(1, 1) = GrassmannNumber::scalar(n, 1.0);
  expect.at(2, 0) = -r.stars.star3;
  expect.at(2, 1) = r.stars.star2;
  expect.at(2, 2) = r.stars.star0;
  r.closed_vs_product_residual = max_abs_diff(r.matrix, expect);

  r.triangular_residual = std::max({r.matrix.at(0, 1).max_abs_coeff(),
                                    r.matrix.at(0, 2).max_abs_coeff(),
                                    r.matrix.at(1, 2).max_abs_coeff(),
                                    max_abs_diff(r.matrix.at(1, 1), GrassmannNumber::scalar(n, 1.0)),
                                    max_abs_diff(r.matrix.at(0, 0), r.matrix.at(2, 2))});
  r.osp_residual = is_osp(r.matrix, tol).residual;
  r.sdet_residual = max_abs_diff(sdet(r.matrix), GrassmannNumber::scalar(n, 1.0));
  r.star2_identity_residual = max_abs_diff(r.stars.star2, r.stars.star0 * r.stars.star1);
  r.constraint_residual = r.stars.star1;
  r.type = classify(r, tol);
  return r;
}

PunctureType classify(const MonodromyReport& r, double tol) {
  double s0 = r.stars.star0.body();
  if (r.stars.star0.soul().max_abs_coeff() > tol || std::abs(std::abs(s0) - 1.0) > tol)
    throw std::domain_error("classify: star0 is not a unit sign");
  PunctureType by_star0 = s0 > 0 ? PunctureType::Ramond : PunctureType::NS;

  auto sl2 = project_sl2(r.matrix);
  double trace = sl2[0] + sl2[3];
  if (std::abs(std::abs(trace) - 2.0) > tol)
    throw std::domain_error("classify: projected trace is not +-2");
  PunctureType by_trace = trace > 0 ? PunctureType::Ramond : PunctureType::NS;

  PunctureType by_parity =
      ((r.n - r.eps_minus_count) % 2 == 0) ? PunctureType::Ramond : PunctureType::NS;

  if (by_star0 != by_trace || by_star0 != by_parity)
    throw std::domain_error("classify: star0 / trace / fan-parity criteria disagree");
  return by_star0;
}

GrassmannNumber ramond_constraint(const FanData& f, double tol) {
  ClosedForm cf = closed_form(f, tol);
  if (cf.star0.body() < 0)
    throw std::domain_error(
        "ramond_constraint: puncture is NS; the monodromy constraint is always satisfied there");
  GrassmannNumber alt = cf.star0 * cf.star1;  // the form multiplied by star0
  if (max_abs_diff(alt, cf.star2) > std::max(tol, 1e-9 * alt.max_abs_coeff()))
    throw std::runtime_error("ramond_constraint: the two printed forms disagree");
  return cf.star1;
}

ImposeResult impose_constraints(const Triangulation& t, const DecoratedCoords& c,
                                const Orientation& o, double tol) {
  const int n = c.num_generators;
  const int T = t.num_triangles();
  ImposeResult out{c, {}};
  ConstraintReport& rep = out.report;

  // Collect per-puncture fan data and classify.
  struct RamondFan {
    int puncture;
    FanData data;
    std::vector<int> tris;  // triangle of each corner
  };
  std::vector<RamondFan> ramond;
  for (int p = 0; p < t.punctures(); ++p) {
    PunctureFan fan = puncture_fan(t, p);
    FanData data = fan_data(t, c, fan, o);
    MonodromyReport mr = puncture_monodromy(t, c, o, p, tol);
    if (mr.type == PunctureType::Ramond) {
      RamondFan rf{p, std::move(data), {}};
      for (const auto& corner : fan.corners) rf.tris.push_back(corner.tri);
      ramond.push_back(std::move(rf));
      rep.ramond_punctures.push_back(p);
    }
  }
  rep.n_ramond = static_cast<int>(ramond.size());
  rep.n_ns = t.punctures() - rep.n_ramond;
  rep.expected_odd_dims = 4 * t.genus() - 4 + 2 * rep.n_ns + rep.n_ramond;

  if (ramond.empty()) {
    rep.rank = 0;
    rep.free_odd_dims = T;
    return out;
  }

  // One equation per Ramond puncture: sum_k w_k mu[tri_k] = 0 with
  // w_k = prod_{j<k} c_j^{-1}; aggregate the weights per triangle.
  const int R = rep.n_ramond;
  std::vector<std::vector<GrassmannNumber>> w(R, std::vector<GrassmannNumber>(T));
  for (int i = 0; i < R; ++i) {
    for (int tt = 0; tt < T; ++tt) w[i][tt] = GrassmannNumber::zero(n);
    const FanData& d = ramond[i].data;
    GrassmannNumber pre = GrassmannNumber::scalar(n, 1.0);
    for (size_t k = 0; k < d.chi.size(); ++k) {
      w[i][ramond[i].tris[k]] += pre;
      pre *= (d.chi[k].sqrt() * double(-d.eps[k])).inverse();
    }
  }

  // Gaussian elimination with partial pivoting on the body magnitude.
  std::vector<int> pivot_col(R, -1);
  std::vector<bool> used(T, false);
  int rank = 0;
  for (int i = 0; i < R; ++i) {
    int best = -1;
    double best_mag = 0.0;
    for (int tt = 0; tt < T; ++tt) {
      if (used[tt]) continue;
      double mag = std::abs(w[i][tt].body());
      if (mag > best_mag) {
        best_mag = mag;
        best = tt;
      }
    }
    if (best < 0 || best_mag < 1e-9) {
      rep.ok = false;
      rep.notes.push_back("constraint row for puncture " + std::to_string(ramond[i].puncture) +
                          " has no usable pivot (rank deficiency)");
      continue;
    }
    pivot_col[i] = best;
    used[best] = true;
    ++rank;
    GrassmannNumber inv = w[i][best].inverse();
    for (int j = 0; j < R; ++j) {
      if (j == i || w[j][best].is_zero()) continue;
      GrassmannNumber factor = w[j][best] * inv;
      for (int tt = 0; tt < T; ++tt) w[j][tt] -= factor * w[i][tt];
    }
  }
  rep.rank = rank;
  rep.free_odd_dims = T - rank;
  if (rank != R)
    rep.notes.push_back("rank " + std::to_string(rank) + " < number of Ramond punctures " +
                        std::to_string(R));

  // Back-substitute against a snapshot of the free mu values: after the
  // Gauss-Jordan pass every other pivot column is cleared from each row.
  std::vector<GrassmannNumber> mu_before = out.coords.mu;
  for (int i = 0; i < R; ++i) {
    if (pivot_col[i] < 0) continue;
    GrassmannNumber acc = GrassmannNumber::zero(n);
    for (int tt = 0; tt < T; ++tt) {
      if (tt == pivot_col[i] || used[tt] || w[i][tt].is_zero()) continue;
      acc += w[i][tt] * mu_before[tt];
    }
    out.coords.mu[pivot_col[i]] = -(w[i][pivot_col[i]].inverse() * acc);
    rep.eliminated_triangles.push_back(pivot_col[i]);
  }

  // Post-condition: every Ramond constraint residual below tolerance.
  for (const auto& rf : ramond) {
    FanData d = fan_data(t, out.coords, puncture_fan(t, rf.puncture), o);
    GrassmannNumber res = closed_form(d, tol).star1;
    if (res.max_abs_coeff() > tol) {
      if (rep.rank == R) {
        rep.ok = false;
        rep.notes.push_back("constraint residual " + std::to_string(res.max_abs_coeff()) +
                            " at puncture " + std::to_string(rf.puncture));
      }
    }
  }
  return out;
}

SuperMatrix conjugate_to_standard(const SuperMatrix& g, double tol) {
  const int n = g.num_generators;
  double upper = std::max({g.at(0, 1).max_abs_coeff(), g.at(0, 2).max_abs_coeff(),
                           g.at(1, 2).max_abs_coeff()});
  double mid = max_abs_diff(g.at(1, 1), GrassmannNumber::scalar(n, 1.0));
  double diag = max_abs_diff(g.at(0, 0), g.at(2, 2));
  double s0 = g.at(0, 0).body();
  if (upper > tol || mid > tol || diag > tol || std::abs(std::abs(s0) - 1.0) > tol ||
      g.at(0, 0).soul().max_abs_coeff() > tol)
    throw std::domain_error("conjugate_to_standard: input is not in the monodromy normal form");
  double s = s0 > 0 ? 1.0 : -1.0;
  GrassmannNumber theta = g.at(1, 0);
  // OSp forces the (2,1) entry to be -s * theta.
  if (max_abs_diff(g.at(2, 1), theta * (-s)) > tol)
    throw std::domain_error("conjugate_to_standard: odd entries violate the normal-form relation");

  if (s > 0) {
    // Ramond: standardizable iff theta = 0.
    if (theta.max_abs_coeff() > tol)
      throw std::domain_error(
          "conjugate_to_standard: Ramond monodromy with theta != 0 cannot be conjugated to the "
          "standard form by puncture-fixing elements");
    return SuperMatrix::identity(n);
  }
  // NS: U = (1 0 0 / theta/2 1 0 / 0 -theta/2 1).
  SuperMatrix u = SuperMatrix::identity(n);
  u.at(1, 0) = theta * 0.5;
  u.at(2, 1) = theta * (-0.5);
  SuperMatrix uinv = SuperMatrix::identity(n);
  uinv.at(1, 0) = theta * (-0.5);
  uinv.at(2, 1) = theta * 0.5;
  SuperMatrix conj = matmul(matmul(u, g), uinv);
  double res = std::max(conj.at(1, 0).max_abs_coeff(), conj.at(2, 1).max_abs_coeff());
  if (res > std::max(tol, 1e-9 * max_abs_coeff(g)))
    throw std::runtime_error("conjugate_to_standard: conjugation failed to clear the odd entries");
  return u;
}

}  // namespace superteich
