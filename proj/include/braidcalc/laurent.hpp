#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidcalc {

/// Integer Laurent polynomial in one variable t. Stored as a lowest degree
/// plus a dense coefficient run with no zero at either end; the zero
/// polynomial has no coefficients. Arithmetic throws std::overflow_error
/// rather than wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int low_degree, std::vector<std::int64_t> coefficients);

  static LaurentPoly monomial(std::int64_t coefficient, int degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int degree) const noexcept;
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  /// Exact quotient a / b in Z[t, t^-1]; throws std::domain_error when b
  /// does not divide a.
  friend LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiplies by a unit +-t^k so the lowest degree is 0 and the highest
  /// coefficient is positive.
  LaurentPoly normalized() const;

  /// `c0 + c1*t + c2*t^2` with negative coefficients as ` - |c|*t^k`, zero
  /// terms skipped, and "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// Dense square matrix over Z[t, t^-1].
class LaurentMatrix {
 public:
  explicit LaurentMatrix(int size = 0);
  static LaurentMatrix identity(int size);

  int size() const noexcept { return size_; }
  LaurentPoly& operator()(int row, int col) { return data_[static_cast<std::size_t>(row * size_ + col)]; }
  const LaurentPoly& operator()(int row, int col) const {
    return data_[static_cast<std::size_t>(row * size_ + col)];
  }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  LaurentPoly trace() const;
  /// Fraction-free Bareiss elimination.
  LaurentPoly determinant() const;

 private:
  int size_;
  std::vector<LaurentPoly> data_;
};

}  // namespace braidcalc
