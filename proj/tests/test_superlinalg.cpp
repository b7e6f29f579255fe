#include <doctest.h>

#include "support.hpp"

using namespace superteich;
using sttest::Rng;

namespace {
GrassmannNumber g(int n, int i) { return GrassmannNumber::generator(n, i); }
GrassmannNumber sc(int n, double v) { return GrassmannNumber::scalar(n, v); }
}  // namespace

TEST_CASE("matmul basics") {
  const int n = 3;
  auto theta = g(n, 1);
  auto p = make_special(SpecialKind::PPlus, theta);
  CHECK(approx_equal(matmul(SuperMatrix::identity(n), p), p, 0.0));
  auto pm = make_special(SpecialKind::PMinus, theta);
  CHECK(approx_equal(matmul(p, pm), SuperMatrix::identity(n), 1e-14));
  CHECK(approx_equal(matmul(pm, p), SuperMatrix::identity(n), 1e-14));
  auto jj = matmul(special_j(n), special_j(n));
  CHECK(approx_equal(jj, fermionic_reflection(n), 1e-14));
}

TEST_CASE("supertranspose matches the printed formula") {
  const int n = 2;
  CHECK(approx_equal(supertranspose(SuperMatrix::identity(n)), SuperMatrix::identity(n), 0.0));
  // st(J) = (0 0 -1 / 0 1 0 / 1 0 0)
  auto stj = supertranspose(special_j(n));
  SuperMatrix expect = SuperMatrix::zero(n);
  expect.at(0, 2) = sc(n, -1);
  expect.at(1, 1) = sc(n, 1);
  expect.at(2, 0) = sc(n, 1);
  CHECK(approx_equal(stj, expect, 0.0));
  // st(P_theta^+) = (-1 -theta -1 / -theta 1 0 / 1 0 0)
  auto theta = g(n, 1);
  auto stp = supertranspose(make_special(SpecialKind::PPlus, theta));
  SuperMatrix expect2 = SuperMatrix::zero(n);
  expect2.at(0, 0) = sc(n, -1);
  expect2.at(0, 1) = -theta;
  expect2.at(0, 2) = sc(n, -1);
  expect2.at(1, 0) = -theta;
  expect2.at(1, 1) = sc(n, 1);
  expect2.at(2, 0) = sc(n, 1);
  CHECK(approx_equal(stp, expect2, 0.0));
  // Parity violation is rejected.
  SuperMatrix bad = SuperMatrix::identity(n);
  bad.at(0, 1) = sc(n, 1.0);  // even value in an odd slot
  CHECK_THROWS_AS(supertranspose(bad), std::domain_error);
}

TEST_CASE("sdet and supertrace") {
  const int n = 2;
  CHECK(approx_equal(sdet(special_j(n)), sc(n, 1), 1e-14));
  CHECK(approx_equal(sdet(SuperMatrix::identity(n)), sc(n, 1), 1e-14));
  CHECK(approx_equal(sdet(make_special(SpecialKind::D, sc(n, 2))), sc(n, 1), 1e-14));
  CHECK(approx_equal(supertrace(SuperMatrix::identity(n)), sc(n, 1), 0.0));
  CHECK(approx_equal(supertrace(special_j(n)), sc(n, -1), 0.0));
  CHECK(approx_equal(supertrace(fermionic_reflection(n)), sc(n, -3), 0.0));
}

TEST_CASE("is_osp") {
  const int n = 2;
  CHECK(is_osp(special_j(n)).ok);
  CHECK(is_osp(make_special(SpecialKind::PPlus, g(n, 1))).ok);
  SuperMatrix bad = SuperMatrix::zero(n);
  bad.at(0, 0) = sc(n, 2);
  bad.at(1, 1) = sc(n, 1);
  bad.at(2, 2) = sc(n, 1);
  CHECK_FALSE(is_osp(bad).ok);
}

TEST_CASE("project_sl2") {
  const int n = 2;
  auto id = project_sl2(SuperMatrix::identity(n));
  CHECK(id[0] == doctest::Approx(1.0));
  CHECK(id[3] == doctest::Approx(1.0));
  auto z = project_sl2(fermionic_reflection(n));
  CHECK(z[0] == doctest::Approx(-1.0));
  CHECK(z[1] == doctest::Approx(0.0));
  CHECK(z[3] == doctest::Approx(-1.0));
  auto p0 = project_sl2(make_special(SpecialKind::PPlus, GrassmannNumber::zero(n)));
  CHECK(p0[0] == doctest::Approx(-1.0));
  CHECK(p0[1] == doctest::Approx(1.0));
  CHECK(p0[2] == doctest::Approx(-1.0));
  CHECK(p0[3] == doctest::Approx(0.0));
}

TEST_CASE("make_special basics") {
  const int n = 2;
  CHECK(approx_equal(make_special(SpecialKind::Z, sc(n, 1)), SuperMatrix::identity(n), 0.0));
  CHECK(approx_equal(make_special(SpecialKind::Upsilon, sc(n, 1)), special_j(n), 1e-14));
  // P_0^+ = (-1 0 1 / 0 1 0 / -1 0 0)
  auto p0 = make_special(SpecialKind::PPlus, GrassmannNumber::zero(n));
  SuperMatrix expect = SuperMatrix::zero(n);
  expect.at(0, 0) = sc(n, -1);
  expect.at(0, 2) = sc(n, 1);
  expect.at(1, 1) = sc(n, 1);
  expect.at(2, 0) = sc(n, -1);
  CHECK(approx_equal(p0, expect, 0.0));
  CHECK_THROWS_AS(make_special(SpecialKind::D, sc(n, -2)), std::domain_error);
  CHECK_THROWS_AS(make_special(SpecialKind::Z, sc(n, -2)), std::domain_error);
  CHECK_THROWS_AS(make_special(SpecialKind::PPlus, sc(n, 1)), std::domain_error);
}

TEST_CASE("closure and invariants of random OSp products") {
  Rng rng(101);
  const int n = 4;
  for (int iter = 0; iter < 40; ++iter) {
    auto a = sttest::random_osp(rng, n);
    auto b = sttest::random_osp(rng, n);
    auto ab = matmul(a, b);
    double scale = std::max(1.0, max_abs_coeff(ab));
    CHECK(is_osp(ab, 1e-12 * scale * scale).ok);
    CHECK(max_abs_diff(sdet(ab), sc(n, 1)) < 1e-9 * scale * scale);
    // Supertranspose anti-homomorphism on the parity pattern.
    CHECK(max_abs_diff(supertranspose(ab), matmul(supertranspose(b), supertranspose(a))) <
          1e-12 * scale);
    // Projection is multiplicative up to a global sign (PSL(2,R)).
    auto pa = project_sl2(a);
    auto pb = project_sl2(b);
    auto pab = project_sl2(ab);
    std::array<double, 4> prod = {pa[0] * pb[0] + pa[1] * pb[2], pa[0] * pb[1] + pa[1] * pb[3],
                                  pa[2] * pb[0] + pa[3] * pb[2], pa[2] * pb[1] + pa[3] * pb[3]};
    double plus = 0, minus = 0;
    for (int i = 0; i < 4; ++i) {
      plus = std::max(plus, std::abs(prod[i] - pab[i]));
      minus = std::max(minus, std::abs(prod[i] + pab[i]));
    }
    CHECK(std::min(plus, minus) < 1e-9 * scale);
    // osp_inverse really inverts.
    CHECK(max_abs_diff(matmul(a, osp_inverse(a)), SuperMatrix::identity(n)) <
          1e-10 * scale * scale);
    CHECK(max_abs_diff(inverse(a), osp_inverse(a)) < 1e-9 * scale * scale);
  }
}

TEST_CASE("superconformal action examples") {
  const int n = 4;
  SuperPoint p{{sc(n, 0.3), sc(n, 1.2)}, {g(n, 1), g(n, 2) * 0.5}};
  auto q = superconformal_action(SuperMatrix::identity(n), p);
  CHECK(cg_max_abs_diff(q.z, p.z) < 1e-14);
  CHECK(cg_max_abs_diff(q.eta, p.eta) < 1e-14);

  // Translation z -> z + b.
  SuperMatrix tr = SuperMatrix::identity(n);
  tr.at(0, 2) = sc(n, 2.5);
  auto t = superconformal_action(tr, p);
  CHECK(cg_max_abs_diff(t.z, p.z + embed_real(sc(n, 2.5))) < 1e-14);
  CHECK(cg_max_abs_diff(t.eta, p.eta) < 1e-14);

  // Lower Borel with even Grassmann B on (i, 0): z' = i/(Bi + 1), eta' = 0.
  auto b = 0.7 + g(n, 1) * g(n, 2);
  SuperMatrix lower = SuperMatrix::identity(n);
  lower.at(2, 0) = b;
  SuperPoint pi{{sc(n, 0), sc(n, 1)}, {GrassmannNumber::zero(n), GrassmannNumber::zero(n)}};
  auto r = superconformal_action(lower, pi);
  ComplexGrassmann i_pt{sc(n, 0), sc(n, 1)};
  ComplexGrassmann denom = embed_real(b) * i_pt + embed_real(sc(n, 1));
  CHECK(cg_max_abs_diff(r.z, i_pt * cg_inverse(denom)) < 1e-13);
  CHECK(r.eta.re.is_zero());
  CHECK(r.eta.im.is_zero());
}

TEST_CASE("superconformal action composes as a left action") {
  Rng rng(77);
  const int n = 4;
  for (int iter = 0; iter < 25; ++iter) {
    auto gm = sttest::random_osp(rng, n, 3);
    auto hm = sttest::random_osp(rng, n, 3);
    std::uniform_real_distribution<double> re(-1, 1), im(0.2, 2.0);
    SuperPoint p{{sc(n, re(rng)), sc(n, im(rng))},
                 {sttest::random_odd(rng, n, -0.5, 0.5), sttest::random_odd(rng, n, -0.5, 0.5)}};
    SuperPoint lhs, rhs;
    bool defined = true;
    try {
      lhs = superconformal_action(hm, superconformal_action(gm, p));
      rhs = superconformal_action(matmul(hm, gm), p);
    } catch (const std::domain_error&) {
      defined = false;  // body of cz+d vanished along the way
    }
    if (!defined) continue;
    double scale = std::max({1.0, lhs.z.re.max_abs_coeff(), lhs.z.im.max_abs_coeff()});
    CHECK(cg_max_abs_diff(lhs.z, rhs.z) < 1e-9 * scale);
    CHECK(cg_max_abs_diff(lhs.eta, rhs.eta) < 1e-9 * scale);
    // The upper half-plane is preserved at the body level.
    CHECK(lhs.z.im.body() > 0);
  }
}
