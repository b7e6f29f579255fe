#include <doctest.h>

#include "support.hpp"

using namespace superteich;
using sttest::Rng;

namespace {
GrassmannNumber g(int n, int i) { return GrassmannNumber::generator(n, i); }
}  // namespace

TEST_CASE("generators square to zero and anticommute") {
  auto t1 = g(4, 1), t2 = g(4, 2);
  CHECK((t1 * t1).is_zero());
  CHECK(max_abs_diff(t1 * t2, -(t2 * t1)) == 0.0);
  CHECK(approx_equal((1.0 + t1 * t2) * (1.0 - t1 * t2), GrassmannNumber::scalar(4, 1.0), 1e-15));
}

TEST_CASE("addition basics") {
  auto t1 = g(4, 1), t2 = g(4, 2);
  CHECK(max_abs_diff(t1 + GrassmannNumber::zero(4), t1) == 0.0);
  CHECK((t1 + (-t1)).is_zero());
  auto lhs = (2.0 + t1) + (3.0 + t2);
  auto rhs = 5.0 + t1 + t2;
  CHECK(approx_equal(lhs, rhs, 0.0));
}

TEST_CASE("mismatched algebras are rejected") {
  CHECK_THROWS_AS(g(3, 1) + g(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(g(3, 1) * g(4, 1), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(approx_equal(GrassmannNumber::scalar(2, 2.0).inverse(),
                     GrassmannNumber::scalar(2, 0.5), 1e-15));
  auto x = 1.0 + g(4, 1) * g(4, 2);
  CHECK(approx_equal(x.inverse(), 1.0 - g(4, 1) * g(4, 2), 1e-12));
  CHECK(approx_equal(x * x.inverse(), GrassmannNumber::scalar(4, 1.0), 1e-12));
  CHECK_THROWS_AS(g(4, 1).inverse(), std::domain_error);
}

TEST_CASE("sqrt") {
  CHECK(approx_equal(GrassmannNumber::scalar(2, 4.0).sqrt(), GrassmannNumber::scalar(2, 2.0),
                     1e-15));
  auto x = 4.0 + g(4, 1) * g(4, 2);
  auto r = x.sqrt();
  CHECK(approx_equal(r, 2.0 + g(4, 1) * g(4, 2) * 0.25, 1e-12));
  CHECK(approx_equal(r * r, x, 1e-12));
  CHECK_THROWS_AS((g(4, 1) * g(4, 2)).sqrt(), std::domain_error);
  CHECK_THROWS_AS(g(4, 1).sqrt(), std::domain_error);
  CHECK_THROWS_AS(GrassmannNumber::scalar(2, -1.0).sqrt(), std::domain_error);
}

TEST_CASE("decompose") {
  auto x = 3.0 + 2.0 * g(4, 1) * g(4, 2);
  auto d = decompose(x);
  CHECK(d.body == doctest::Approx(3.0));
  CHECK(approx_equal(d.soul, 2.0 * g(4, 1) * g(4, 2), 0.0));
  auto d2 = decompose(g(4, 1));
  CHECK(d2.body == 0.0);
  CHECK(approx_equal(d2.soul, g(4, 1), 0.0));
  auto d3 = decompose(GrassmannNumber::zero(4));
  CHECK(d3.body == 0.0);
  CHECK(d3.soul.is_zero());
}

TEST_CASE("parity queries") {
  CHECK(GrassmannNumber::zero(3).parity() == Parity::Zero);
  CHECK(g(3, 1).parity() == Parity::Odd);
  CHECK((g(3, 1) * g(3, 2)).parity() == Parity::Even);
  CHECK((1.0 + g(3, 1)).parity() == Parity::Mixed);
  CHECK(GrassmannNumber::zero(3).is_even());
  CHECK(GrassmannNumber::zero(3).is_odd());
}

TEST_CASE("textual serialization") {
  auto x = 2.5 * g(4, 1) * g(4, 3) + 1.0;
  CHECK(x.str() == "2.5*g1g3 + 1.0");
  CHECK(GrassmannNumber::zero(4).str() == "0.0");
  CHECK(GrassmannNumber::scalar(4, -1.5).str() == "-1.5");
  CHECK((g(4, 2) - 2.0).str() == "1.0*g2 - 2.0");
}

TEST_CASE("storage epsilon keeps representations canonical") {
  auto tiny = GrassmannNumber::scalar(2, 1e-16);
  CHECK(tiny.is_zero());
  auto x = g(2, 1) * 1e-16;
  CHECK(x.is_zero());
}

TEST_CASE("algebra properties on random values") {
  Rng rng(20240811);
  const int n = 6;
  for (int iter = 0; iter < 300; ++iter) {
    auto x = sttest::random_grassmann(rng, n);
    auto y = sttest::random_grassmann(rng, n);
    auto z = sttest::random_grassmann(rng, n);
    double scale = (1 + x.max_abs_coeff()) * (1 + y.max_abs_coeff()) * (1 + z.max_abs_coeff());
    CHECK(max_abs_diff((x * y) * z, x * (y * z)) < 1e-12 * scale);
    CHECK(max_abs_diff(x * (y + z), x * y + x * z) < 1e-12 * scale);
    CHECK(max_abs_diff((x + y) + z, x + (y + z)) < 1e-12);
  }
}

TEST_CASE("supercommutativity for homogeneous values") {
  Rng rng(7);
  const int n = 6;
  for (int iter = 0; iter < 200; ++iter) {
    bool ox = iter % 2, oy = (iter / 2) % 2;
    auto x = sttest::random_homogeneous(rng, n, ox);
    auto y = sttest::random_homogeneous(rng, n, oy);
    double sign = (ox && oy) ? -1.0 : 1.0;
    CHECK(max_abs_diff(x * y, sign * (y * x)) <
          1e-12 * (1 + x.max_abs_coeff()) * (1 + y.max_abs_coeff()));
  }
}

TEST_CASE("souls are nilpotent") {
  Rng rng(11);
  const int n = 5;
  for (int iter = 0; iter < 50; ++iter) {
    auto s = sttest::random_grassmann(rng, n).soul();
    GrassmannNumber p = GrassmannNumber::scalar(n, 1.0);
    for (int k = 0; k <= n; ++k) p *= s;
    CHECK(p.is_zero());
  }
}

TEST_CASE("inverse and sqrt round-trips on random values") {
  Rng rng(13);
  const int n = 6;
  int tested = 0;
  for (int iter = 0; iter < 300; ++iter) {
    auto x = sttest::random_grassmann(rng, n, 5, -3, 3);
    if (std::abs(x.body()) <= 1e-6) continue;
    ++tested;
    CHECK(max_abs_diff(x * x.inverse(), GrassmannNumber::scalar(n, 1.0)) < 1e-9);
    auto even = x * x;  // even with nonnegative body
    if (even.body() > 1e-6) {
      auto r = even.sqrt();
      CHECK(max_abs_diff(r * r, even) < 1e-9 * (1 + even.max_abs_coeff()));
    }
  }
  CHECK(tested > 100);
}
