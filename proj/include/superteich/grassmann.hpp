#ifndef SUPERTEICH_GRASSMANN_HPP
#define SUPERTEICH_GRASSMANN_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace superteich {

enum class Parity { Zero, Even, Odd, Mixed };

/// Element of the real exterior (Grassmann) algebra on up to 64 named
/// anticommuting generators g1..gN.  A value is a finite sum of terms
/// coeff * g_{i1}...g_{ik} with i1 < ... < ik; the index set is stored as a
/// bitmask.  Values are normalized (terms sorted by mask, coefficients below
/// the storage epsilon dropped) and immutable after construction.
class GrassmannNumber {
 public:
  static constexpr int kMaxGenerators = 64;
  static constexpr double kStorageEps = 1e-15;
  static constexpr double kBodyEps = 1e-12;

  using Term = std::pair<uint64_t, double>;

  GrassmannNumber() = default;  // zero in the 0-generator algebra

  static GrassmannNumber zero(int num_generators);
  static GrassmannNumber scalar(int num_generators, double value);
  /// Generator g_index, 1-based, 1 <= index <= num_generators.
  static GrassmannNumber generator(int num_generators, int index);
  static GrassmannNumber monomial(int num_generators, uint64_t mask, double coeff);
  static GrassmannNumber from_terms(int num_generators, std::vector<Term> terms);

  int num_generators() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Coefficient of the empty index set.
  double body() const;
  /// All terms with a nonempty index set (the nilpotent part).
  GrassmannNumber soul() const;
  double coeff(uint64_t mask) const;

  bool is_zero() const { return terms_.empty(); }
  Parity parity() const;
  /// True for purely even values; the zero value counts as both.
  bool is_even() const;
  bool is_odd() const;

  double max_abs_coeff() const;

  GrassmannNumber operator-() const;
  GrassmannNumber& operator+=(const GrassmannNumber& rhs);
  GrassmannNumber& operator-=(const GrassmannNumber& rhs);
  GrassmannNumber& operator*=(const GrassmannNumber& rhs);
  GrassmannNumber& operator*=(double s);

  /// Multiplicative inverse; requires |body| above tolerance.  Computed as
  /// body^{-1} * sum_k (-soul/body)^k, a finite sum by nilpotency.
  GrassmannNumber inverse() const;
  /// Principal square root of an even value with positive body.
  GrassmannNumber sqrt() const;

  /// Textual form, e.g. "2.5*g1g3 + 1.0"; the empty product prints as a
  /// plain coefficient and zero prints as "0.0".
  std::string str() const;

 private:
  void normalize();

  int n_ = 0;
  std::vector<Term> terms_;  // sorted by mask, no zero/subepsilon coefficients
};

struct BodySoulDecomposition {
  double body = 0.0;
  GrassmannNumber soul;
};

BodySoulDecomposition decompose(const GrassmannNumber& x);

GrassmannNumber operator+(GrassmannNumber lhs, const GrassmannNumber& rhs);
GrassmannNumber operator-(GrassmannNumber lhs, const GrassmannNumber& rhs);
GrassmannNumber operator*(GrassmannNumber lhs, const GrassmannNumber& rhs);
GrassmannNumber operator*(GrassmannNumber lhs, double s);
GrassmannNumber operator*(double s, GrassmannNumber rhs);
GrassmannNumber operator+(GrassmannNumber lhs, double s);
GrassmannNumber operator+(double s, GrassmannNumber rhs);
GrassmannNumber operator-(GrassmannNumber lhs, double s);
GrassmannNumber operator-(double s, const GrassmannNumber& rhs);

/// Largest absolute coefficient of x - y; the two must share num_generators.
double max_abs_diff(const GrassmannNumber& x, const GrassmannNumber& y);
bool approx_equal(const GrassmannNumber& x, const GrassmannNumber& y, double tol);

/// Sign (-1)^k where k is the number of transpositions needed to merge the
/// ascending index lists a and b; 0 is never passed for overlapping masks.
int merge_sign(uint64_t a, uint64_t b);

}  // namespace superteich

#endif
