#include "braidcalc/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidcalc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int low_degree, std::vector<std::int64_t> coefficients)
    : low_(low_degree), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, int degree) {
  return LaurentPoly(degree, {coefficient});
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t LaurentPoly::coefficient(int degree) const noexcept {
  if (is_zero() || degree < low_ || degree > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.low_, b.low_);
  const int high = std::max(a.high_degree(), b.high_degree());
  std::vector<std::int64_t> c(static_cast<std::size_t>(high - low + 1), 0);
  for (int d = low; d <= high; ++d) {
    c[static_cast<std::size_t>(d - low)] = checked_add(a.coefficient(d), b.coefficient(d));
  }
  return LaurentPoly(low, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return LaurentPoly(a.low_ + b.low_, std::move(c));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Long division from the top; exactness in Z[t] means every leading
  // coefficient of the running remainder is a multiple of lc(b).
  std::vector<std::int64_t> rem = a.coeffs_;
  const std::vector<std::int64_t>& div = b.coeffs_;
  if (rem.size() < div.size()) throw std::domain_error("inexact Laurent division");
  const std::size_t qlen = rem.size() - div.size() + 1;
  std::vector<std::int64_t> quot(qlen, 0);
  const std::int64_t lead = div.back();
  for (std::size_t step = 0; step < qlen; ++step) {
    const std::size_t top = rem.size() - 1 - step;
    if (rem[top] % lead != 0) throw std::domain_error("inexact Laurent division");
    const std::int64_t q = rem[top] / lead;
    const std::size_t shift = top - (div.size() - 1);
    quot[shift] = q;
    if (q == 0) continue;
    for (std::size_t k = 0; k < div.size(); ++k) {
      rem[shift + k] = checked_add(rem[shift + k], checked_mul(-q, div[k]));
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; })) {
    throw std::domain_error("inexact Laurent division");
  }
  return LaurentPoly(a.low_ - b.low_, std::move(quot));
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly r(0, coeffs_);
  return r.coeffs_.back() < 0 ? -r : r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const int deg = low_ + static_cast<int>(i);
    if (out.empty()) {
      out += std::to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += std::to_string(c < 0 ? -c : c);
    }
    if (deg == 1) {
      out += "*t";
    } else if (deg != 0) {
      out += "*t^" + std::to_string(deg);
    }
  }
  return out;
}

LaurentMatrix::LaurentMatrix(int size)
    : size_(size), data_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {}

LaurentMatrix LaurentMatrix::identity(int size) {
  LaurentMatrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix r(a.size_);
  for (int i = 0; i < a.size_; ++i) {
    for (int k = 0; k < a.size_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.size_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return r;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix r(a.size_);
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
  return r;
}

LaurentPoly LaurentMatrix::trace() const {
  LaurentPoly t;
  for (int i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

LaurentPoly LaurentMatrix::determinant() const {
  if (size_ == 0) return 1;
  LaurentMatrix m = *this;
  LaurentPoly prev = 1;
  bool negate = false;
  for (int k = 0; k < size_ - 1; ++k) {
    if (m(k, k).is_zero()) {
      int pivot = k + 1;
      while (pivot < size_ && m(pivot, k).is_zero()) ++pivot;
      if (pivot == size_) return {};
      for (int j = 0; j < size_; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (int i = k + 1; i < size_; ++i) {
      for (int j = k + 1; j < size_; ++j) {
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = {};
    }
    prev = m(k, k);
  }
  const LaurentPoly det = m(size_ - 1, size_ - 1);
  return negate ? -det : det;
}

}  // namespace braidcalc
