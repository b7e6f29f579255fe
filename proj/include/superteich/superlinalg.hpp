#ifndef SUPERTEICH_SUPERLINALG_HPP
#define SUPERTEICH_SUPERLINALG_HPP

#include <array>
#include <string>
#include <vector>

#include "superteich/grassmann.hpp"

namespace superteich {

/// (2|1)x(2|1) supermatrix over the Grassmann algebra, stored row-major with
/// the block layout (a alpha b / gamma f beta / c delta d): positions
/// (0,1),(1,0),(1,2),(2,1) are odd, the rest even.
struct SuperMatrix {
  int num_generators = 0;
  std::array<GrassmannNumber, 9> m;

  static SuperMatrix zero(int n);
  static SuperMatrix identity(int n);
  static SuperMatrix from_rows(std::array<GrassmannNumber, 9> rows);

  const GrassmannNumber& at(int r, int c) const { return m[3 * r + c]; }
  GrassmannNumber& at(int r, int c) { return m[3 * r + c]; }
};

SuperMatrix matmul(const SuperMatrix& g, const SuperMatrix& h);
SuperMatrix operator*(const SuperMatrix& g, const SuperMatrix& h);
SuperMatrix operator+(const SuperMatrix& g, const SuperMatrix& h);
SuperMatrix operator-(const SuperMatrix& g, const SuperMatrix& h);
SuperMatrix scale(const SuperMatrix& g, const GrassmannNumber& s);

/// True when every entry has the parity the block layout demands.
bool parity_pattern_ok(const SuperMatrix& g);

/// (a gamma c / -alpha f -delta / b beta d); throws if the parity pattern is
/// violated.
SuperMatrix supertranspose(const SuperMatrix& g);

/// Berezinian f^{-1} det((a b / c d) + f^{-1}(alpha*gamma alpha*delta /
/// beta*gamma beta*delta)); requires body(f) != 0.
GrassmannNumber sdet(const SuperMatrix& g);

/// a + d - f.
GrassmannNumber supertrace(const SuperMatrix& g);

struct OspCheck {
  bool ok = false;
  double residual = 0.0;
};

/// Residual max-norm of g^st J g - J over all Grassmann coefficients.
OspCheck is_osp(const SuperMatrix& g, double tol = 1e-9);

/// Body projection (1/sqrt(f_#)) (a_# b_# / c_# d_#); requires body(f) > 0.
std::array<double, 4> project_sl2(const SuperMatrix& g);

enum class SpecialKind { D, Z, PPlus, PMinus, Upsilon, J, Identity };

/// The named OSp(1|2) elements.  D and Upsilon need an even parameter with
/// positive body, P a pure odd parameter; Z additionally accepts the literal
/// scalar -1 (the fermionic reflection).  J and Identity ignore the value and
/// use only its algebra size.
SuperMatrix make_special(SpecialKind kind, const GrassmannNumber& param);

SuperMatrix special_j(int n);
SuperMatrix fermionic_reflection(int n);  // Z_{-1}

/// Inverse of an OSp element: J^{-1} g^st J.
SuperMatrix osp_inverse(const SuperMatrix& g);

/// General inverse over the Grassmann ring (body matrix inverse + Neumann
/// series in the nilpotent part); requires an invertible body matrix.
SuperMatrix inverse(const SuperMatrix& g);

double max_abs_coeff(const SuperMatrix& g);
double max_abs_diff(const SuperMatrix& g, const SuperMatrix& h);
bool approx_equal(const SuperMatrix& g, const SuperMatrix& h, double tol);

/// Row-major list of 9 Grassmann serializations.
std::vector<std::string> serialize(const SuperMatrix& g);

/// Complex number whose real and imaginary parts are Grassmann values.
struct ComplexGrassmann {
  GrassmannNumber re, im;

  static ComplexGrassmann make(GrassmannNumber re, GrassmannNumber im);
};

ComplexGrassmann operator+(const ComplexGrassmann& a, const ComplexGrassmann& b);
ComplexGrassmann operator-(const ComplexGrassmann& a, const ComplexGrassmann& b);
ComplexGrassmann operator*(const ComplexGrassmann& a, const ComplexGrassmann& b);
ComplexGrassmann cg_inverse(const ComplexGrassmann& a);
ComplexGrassmann embed_real(const GrassmannNumber& x);
double cg_max_abs_diff(const ComplexGrassmann& a, const ComplexGrassmann& b);

/// Point of the super upper half-plane: z even with Im(body z) > 0, eta odd.
struct SuperPoint {
  ComplexGrassmann z;
  ComplexGrassmann eta;
};

/// z -> (az+b)/(cz+d) + eta (gamma z + delta)/(cz+d)^2,
/// eta -> (gamma z + delta)/(cz+d) + eta (1 + delta gamma / 2)/(cz+d).
SuperPoint superconformal_action(const SuperMatrix& g, const SuperPoint& p);

}  // namespace superteich

#endif
