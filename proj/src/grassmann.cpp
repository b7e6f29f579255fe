#include "superteich/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

namespace superteich {

namespace {

void check_generator_count(int n) {
  if (n < 0 || n > GrassmannNumber::kMaxGenerators)
    throw std::invalid_argument("num_generators must be in [0, 64]");
}

void check_same_algebra(const GrassmannNumber& a, const GrassmannNumber& b) {
  if (a.num_generators() != b.num_generators())
    throw std::invalid_argument("mismatched num_generators");
}

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, p);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";
  return s;
}

}  // namespace

int merge_sign(uint64_t a, uint64_t b) {
  int swaps = 0;
  uint64_t t = a >> 1;
  while (t) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

GrassmannNumber GrassmannNumber::zero(int num_generators) {
  check_generator_count(num_generators);
  GrassmannNumber r;
  r.n_ = num_generators;
  return r;
}

GrassmannNumber GrassmannNumber::scalar(int num_generators, double value) {
  return monomial(num_generators, 0, value);
}

GrassmannNumber GrassmannNumber::generator(int num_generators, int index) {
  check_generator_count(num_generators);
  if (index < 1 || index > num_generators)
    throw std::invalid_argument("generator index out of range");
  return monomial(num_generators, uint64_t(1) << (index - 1), 1.0);
}

GrassmannNumber GrassmannNumber::monomial(int num_generators, uint64_t mask, double coeff) {
  check_generator_count(num_generators);
  if (num_generators < 64 && (mask >> num_generators) != 0)
    throw std::invalid_argument("basis mask references generators beyond num_generators");
  GrassmannNumber r;
  r.n_ = num_generators;
  if (std::abs(coeff) >= kStorageEps) r.terms_.push_back({mask, coeff});
  return r;
}

GrassmannNumber GrassmannNumber::from_terms(int num_generators, std::vector<Term> terms) {
  check_generator_count(num_generators);
  GrassmannNumber r;
  r.n_ = num_generators;
  for (const auto& [mask, c] : terms) {
    if (num_generators < 64 && (mask >> num_generators) != 0)
      throw std::invalid_argument("basis mask references generators beyond num_generators");
    (void)c;
  }
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

void GrassmannNumber::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return std::abs(t.second) < kStorageEps; }),
            out.end());
  terms_ = std::move(out);
}

double GrassmannNumber::body() const {
  if (!terms_.empty() && terms_.front().first == 0) return terms_.front().second;
  return 0.0;
}

GrassmannNumber GrassmannNumber::soul() const {
  GrassmannNumber r;
  r.n_ = n_;
  for (const auto& t : terms_)
    if (t.first != 0) r.terms_.push_back(t);
  return r;
}

double GrassmannNumber::coeff(uint64_t mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, uint64_t m) { return t.first < m; });
  if (it != terms_.end() && it->first == mask) return it->second;
  return 0.0;
}

Parity GrassmannNumber::parity() const {
  if (terms_.empty()) return Parity::Zero;
  bool even = true, odd = true;
  for (const auto& t : terms_) {
    if (std::popcount(t.first) % 2 == 0)
      odd = false;
    else
      even = false;
  }
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::Mixed;
}

bool GrassmannNumber::is_even() const {
  Parity p = parity();
  return p == Parity::Even || p == Parity::Zero;
}

bool GrassmannNumber::is_odd() const {
  Parity p = parity();
  return p == Parity::Odd || p == Parity::Zero;
}

double GrassmannNumber::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.second));
  return m;
}

GrassmannNumber GrassmannNumber::operator-() const {
  GrassmannNumber r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

GrassmannNumber& GrassmannNumber::operator+=(const GrassmannNumber& rhs) {
  check_same_algebra(*this, rhs);
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  normalize();
  return *this;
}

GrassmannNumber& GrassmannNumber::operator-=(const GrassmannNumber& rhs) {
  check_same_algebra(*this, rhs);
  for (const auto& t : rhs.terms_) terms_.push_back({t.first, -t.second});
  normalize();
  return *this;
}

GrassmannNumber& GrassmannNumber::operator*=(const GrassmannNumber& rhs) {
  check_same_algebra(*this, rhs);
  std::map<uint64_t, double> acc;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      if (ma & mb) continue;  // repeated generator squares to zero
      double c = ca * cb * merge_sign(ma, mb);
      acc[ma | mb] += c;
    }
  }
  terms_.clear();
  for (const auto& [m, c] : acc) terms_.push_back({m, c});
  normalize();
  return *this;
}

GrassmannNumber& GrassmannNumber::operator*=(double s) {
  for (auto& t : terms_) t.second *= s;
  normalize();
  return *this;
}

GrassmannNumber GrassmannNumber::inverse() const {
  double b = body();
  if (std::abs(b) < kBodyEps) throw std::domain_error("GrassmannNumber with zero body is not invertible");
  GrassmannNumber s = soul();
  GrassmannNumber acc = scalar(n_, 1.0 / b);
  if (s.is_zero()) return acc;
  // body^{-1} * sum_k (-soul/body)^k, truncated by nilpotency
  GrassmannNumber step = s * (-1.0 / b);
  GrassmannNumber pw = step;
  for (int k = 1; k <= n_ && !pw.is_zero(); ++k) {
    acc += pw * (1.0 / b);
    pw *= step;
  }
  return acc;
}

GrassmannNumber GrassmannNumber::sqrt() const {
  if (!is_even()) throw std::domain_error("sqrt requires an even value");
  double b = body();
  if (b < kBodyEps) throw std::domain_error("sqrt requires a positive body");
  double rb = std::sqrt(b);
  GrassmannNumber s = soul();
  GrassmannNumber acc = scalar(n_, rb);
  if (s.is_zero()) return acc;
  // rb * sum_k binom(1/2, k) (soul/body)^k
  GrassmannNumber u = s * (1.0 / b);
  GrassmannNumber pw = u;
  double coef = 0.5;
  for (int k = 1; k <= n_ && !pw.is_zero(); ++k) {
    acc += pw * (rb * coef);
    pw *= u;
    coef *= (0.5 - k) / (k + 1);
  }
  return acc;
}

std::string GrassmannNumber::str() const {
  if (terms_.empty()) return "0.0";
  std::string out;
  // Descending basis order: higher-grade terms first, scalar last.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    double c = it->second;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += (c < 0) ? " - " : " + ";
      c = std::abs(c);
    }
    out += format_double(c);
    uint64_t m = it->first;
    if (m) {
      out += "*";
      for (int i = 0; i < 64; ++i)
        if (m & (uint64_t(1) << i)) out += "g" + std::to_string(i + 1);
    }
  }
  return out;
}

BodySoulDecomposition decompose(const GrassmannNumber& x) {
  return BodySoulDecomposition{x.body(), x.soul()};
}

GrassmannNumber operator+(GrassmannNumber lhs, const GrassmannNumber& rhs) { return lhs += rhs; }
GrassmannNumber operator-(GrassmannNumber lhs, const GrassmannNumber& rhs) { return lhs -= rhs; }
GrassmannNumber operator*(GrassmannNumber lhs, const GrassmannNumber& rhs) { return lhs *= rhs; }
GrassmannNumber operator*(GrassmannNumber lhs, double s) { return lhs *= s; }
GrassmannNumber operator*(double s, GrassmannNumber rhs) { return rhs *= s; }
GrassmannNumber operator+(GrassmannNumber lhs, double s) {
  return lhs += GrassmannNumber::scalar(lhs.num_generators(), s);
}
GrassmannNumber operator+(double s, GrassmannNumber rhs) {
  return rhs += GrassmannNumber::scalar(rhs.num_generators(), s);
}
GrassmannNumber operator-(GrassmannNumber lhs, double s) {
  return lhs -= GrassmannNumber::scalar(lhs.num_generators(), s);
}
GrassmannNumber operator-(double s, const GrassmannNumber& rhs) {
  return GrassmannNumber::scalar(rhs.num_generators(), s) - rhs;
}

double max_abs_diff(const GrassmannNumber& x, const GrassmannNumber& y) {
  return (x - y).max_abs_coeff();
}

bool approx_equal(const GrassmannNumber& x, const GrassmannNumber& y, double tol) {
  return max_abs_diff(x, y) <= tol;
}

}  // namespace superteich
