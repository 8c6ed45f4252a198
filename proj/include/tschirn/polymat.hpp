#pragma once

#include <optional>
#include <vector>

#include "tschirn/laurent.hpp"
#include "tschirn/unipoly.hpp"

namespace tschirn {

// Dense matrix over Q[x].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}
  static PolyMatrix identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  UniPoly& at(size_t i, size_t j) { return e_[i * c_ + j]; }
  const UniPoly& at(size_t i, size_t j) const { return e_[i * c_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  PolyMatrix scaled(const UniPoly& f) const;
  PolyMatrix transposed() const;
  bool is_zero() const;
  bool is_identity() const;

  std::string str(const std::string& var = "x") const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<UniPoly> e_;
};

// Fraction-free Bareiss determinant. Square input.
UniPoly determinant(const PolyMatrix& m);

// Adjugate matrix: adj(M) * M = det(M) * I. Square input.
PolyMatrix adjugate(const PolyMatrix& m);

// Inverse of a unimodular matrix (determinant a nonzero constant);
// throws std::invalid_argument otherwise.
PolyMatrix inverse_unimodular(const PolyMatrix& m);

// Column-style Hermite form: M * U = H with U unimodular (det a nonzero
// constant), H lower triangular with monic diagonal and every entry left of
// the diagonal reduced below the diagonal entry of its row. Pivot choice:
// lowest-degree nonzero entry, then smallest column index. Requires full row
// rank (rows <= cols); throws std::invalid_argument when rank is deficient.
struct HermiteResult {
  PolyMatrix h;
  PolyMatrix u;
};
HermiteResult hermite_form(const PolyMatrix& m);

// Matrix over Q[x] with a common denominator pulled out: value = num / den.
struct FracMatrix {
  PolyMatrix num;
  UniPoly den = UniPoly::constant(Rat(1));

  static FracMatrix identity(size_t n);
  size_t rows() const { return num.rows(); }
  size_t cols() const { return num.cols(); }

  // Cancels gcd(den, all entries) and makes den monic.
  void simplify();

  friend FracMatrix operator*(const FracMatrix& a, const FracMatrix& b);
  FracMatrix inverse() const;  // throws std::invalid_argument when singular
  UniPoly det_num() const { return determinant(num); }

  bool equals(const FracMatrix& o) const;
};

// Dense matrix over Laurent polynomials.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}
  static LaurentMatrix identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  LaurentPoly& at(size_t i, size_t j) { return e_[i * c_ + j]; }
  const LaurentPoly& at(size_t i, size_t j) const { return e_[i * c_ + j]; }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);

  // Smallest/largest exponent over all nonzero entries; nullopt for the
  // zero matrix.
  std::optional<int> min_exp() const;
  std::optional<int> max_exp() const;

  LaurentMatrix shifted(int k) const;  // multiply every entry by x^k

  std::string str(const std::string& var = "x") const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<LaurentPoly> e_;
};

LaurentPoly determinant(const LaurentMatrix& m);

LaurentMatrix to_laurent(const PolyMatrix& m, int shift = 0);

// Conversion requiring the denominator to be a monomial c*x^k after
// simplification; throws std::invalid_argument otherwise.
LaurentMatrix to_laurent(const FracMatrix& m);

FracMatrix to_frac(const LaurentMatrix& m);

// Kernel of a rational matrix (row-major); returns a basis of column vectors.
std::vector<std::vector<Rat>> rat_kernel(const std::vector<std::vector<Rat>>& rows);

}  // namespace tschirn
