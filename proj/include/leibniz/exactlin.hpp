#pragma once

// Exact linear algebra over Q and F_p.
//
// Everything here is a value type. A Subspace is stored as the reduced row
// echelon form of a basis with zero rows dropped, so two subspaces are equal
// exactly when their stored bases are identical.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

}  // namespace detail

/// The field a scalar, matrix or algebra lives over: Q or F_p.
class FieldDesc {
 public:
  enum class Kind { rationals, prime };

  // Residues are multiplied in 64-bit arithmetic, so the modulus stays below
  // 2^31.
  static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 31) - 1;

  static FieldDesc rationals() { return FieldDesc(Kind::rationals, 0); }

  static FieldDesc prime(std::uint64_t p) {
    if (p < 2 || p > max_modulus || !detail::is_prime(p))
      throw std::invalid_argument("field modulus must be a prime below 2^31, got " +
                                  std::to_string(p));
    return FieldDesc(Kind::prime, p);
  }

  /// Accepts "Q" or "F<p>" (for example "F2", "F7").
  static FieldDesc parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text.front() == 'F') {
      std::uint64_t p = 0;
      for (char ch : text.substr(1)) {
        if (ch < '0' || ch > '9' || p > max_modulus)
          throw std::invalid_argument("malformed field name '" + std::string(text) + "'");
        p = p * 10 + static_cast<std::uint64_t>(ch - '0');
      }
      return prime(p);
    }
    throw std::invalid_argument("malformed field name '" + std::string(text) +
                                "' (expected Q or F<p>)");
  }

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }
  std::string name() const { return is_rationals() ? "Q" : "F" + std::to_string(modulus_); }

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

 private:
  FieldDesc(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldDesc::rationals()) {}

  Scalar(FieldDesc field, long long value) : field_(field) {
    if (field_.is_rationals()) {
      q_ = static_cast<long>(value);
    } else {
      auto p = static_cast<long long>(field_.modulus());
      residue_ = static_cast<std::uint64_t>(((value % p) + p) % p);
    }
  }

  Scalar(FieldDesc field, long long numerator, long long denominator)
      : Scalar(field, mpq_class(mpz_class(static_cast<long>(numerator)),
                                mpz_class(static_cast<long>(denominator)))) {}

  /// Reduces an exact rational into `field`; over F_p the denominator must be a
  /// unit.
  Scalar(FieldDesc field, mpq_class value) : field_(field) {
    if (value.get_den() == 0) throw std::domain_error("zero denominator");
    value.canonicalize();
    if (field_.is_rationals()) {
      q_ = std::move(value);
      return;
    }
    const auto p = static_cast<unsigned long>(field_.modulus());
    mpz_class num = value.get_num();
    mpz_class den = value.get_den();
    std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
    std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (d == 0)
      throw std::domain_error("denominator " + den.get_str() + " is not a unit mod " +
                              std::to_string(p));
    residue_ = n * detail::pow_mod(d, p - 2, p) % p;
  }

  static Scalar zero(FieldDesc field) { return Scalar(field, 0); }
  static Scalar one(FieldDesc field) { return Scalar(field, 1); }

  /// Parses "a", "-a" or "a/b".
  static Scalar parse(FieldDesc field, std::string_view text) {
    mpq_class q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
      throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    return Scalar(field, q);
  }

  const FieldDesc& field() const { return field_; }

  bool is_zero() const { return field_.is_rationals() ? sgn(q_) == 0 : residue_ == 0; }
  bool is_one() const { return field_.is_rationals() ? q_ == 1 : residue_ == 1; }

  const mpq_class& rational() const {
    if (!field_.is_rationals()) throw FieldMismatch("rational() on an F_p scalar");
    return q_;
  }
  std::uint64_t residue() const {
    if (field_.is_rationals()) throw FieldMismatch("residue() on a rational scalar");
    return residue_;
  }

  Scalar operator-() const {
    Scalar out(*this);
    if (field_.is_rationals())
      out.q_ = -q_;
    else if (residue_ != 0)
      out.residue_ = field_.modulus() - residue_;
    return out;
  }

  Scalar& operator+=(const Scalar& rhs) {
    require_same(rhs);
    if (field_.is_rationals())
      q_ += rhs.q_;
    else
      residue_ = (residue_ + rhs.residue_) % field_.modulus();
    return *this;
  }
  Scalar& operator-=(const Scalar& rhs) {
    require_same(rhs);
    if (field_.is_rationals())
      q_ -= rhs.q_;
    else
      residue_ = (residue_ + field_.modulus() - rhs.residue_) % field_.modulus();
    return *this;
  }
  Scalar& operator*=(const Scalar& rhs) {
    require_same(rhs);
    if (field_.is_rationals())
      q_ *= rhs.q_;
    else
      residue_ = residue_ * rhs.residue_ % field_.modulus();
    return *this;
  }
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar out(*this);
    if (field_.is_rationals())
      out.q_ = 1 / q_;
    else
      out.residue_ = detail::pow_mod(residue_, field_.modulus() - 2, field_.modulus());
    return out;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rationals() ? a.q_ == b.q_ : a.residue_ == b.residue_;
  }

  /// "3/4", "-2", "0"; residues print as their representative in [0, p).
  std::string to_string() const {
    return field_.is_rationals() ? q_.get_str() : std::to_string(residue_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  void require_same(const Scalar& rhs) const {
    if (field_ != rhs.field_)
      throw FieldMismatch("scalar field mismatch: " + field_.name() + " vs " +
                          rhs.field_.name());
  }

  FieldDesc field_;
  mpq_class q_;
  std::uint64_t residue_ = 0;
};

using Vector = std::vector<Scalar>;

inline Vector zero_vector(FieldDesc field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

inline Vector unit_vector(FieldDesc field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

/// Builds a vector from small integers, e.g. make_vector(Q, {1, -1}).
inline Vector make_vector(FieldDesc field, std::initializer_list<long long> entries) {
  Vector v;
  v.reserve(entries.size());
  for (long long e : entries) v.emplace_back(field, e);
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

// y += s * x
inline void axpy(Vector& y, const Scalar& s, const Vector& x) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

inline std::string to_string(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + "]";
}

/// Dense matrix over a single field.
class Matrix {
 public:
  Matrix(FieldDesc field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

  static Matrix identity(FieldDesc field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
  }

  static Matrix from_rows(FieldDesc field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw AmbientMismatch("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(FieldDesc field, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw AmbientMismatch("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  const FieldDesc& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vector column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw AmbientMismatch("matrix-vector size mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const Scalar& a = (*this)(r, c);
        if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
      }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw AmbientMismatch("matrix product size mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AmbientMismatch("matrix size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  Scalar trace() const {
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix pow(std::size_t k) const {
    Matrix out = identity(field_, rows_);
    for (std::size_t i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) out += ", ";
      out += leibniz::to_string(row(r));
    }
    return out + "]";
  }

 private:
  FieldDesc field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with its pivot columns. Zero rows are
/// dropped, so `reduced.rows() == pivots.size()` is the rank.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

inline Echelon echelon(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < a.rows() && a(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == a.rows()) continue;
    if (pivot_row != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot_row, c), a(lead, c));
    const Scalar inv = a(lead, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(lead, c).is_zero()) a(r, c) -= factor * a(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix reduced(a.field(), pivots.size(), a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) reduced(r, c) = a(r, c);
  return {std::move(reduced), std::move(pivots)};
}

inline Matrix rref(const Matrix& m) { return echelon(m).reduced; }

inline std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

/// A subspace of F^n with its canonical RREF basis.
class Subspace {
 public:
  static Subspace zero(FieldDesc field, std::size_t n) { return Subspace(Matrix(field, 0, n), {}); }

  static Subspace full(FieldDesc field, std::size_t n) {
    std::vector<std::size_t> pivots(n);
    for (std::size_t i = 0; i < n; ++i) pivots[i] = i;
    return Subspace(Matrix::identity(field, n), std::move(pivots));
  }

  static Subspace span(FieldDesc field, std::size_t n, const std::vector<Vector>& vectors) {
    return from_rows(Matrix::from_rows(field, n, vectors));
  }

  static Subspace from_rows(const Matrix& rows) {
    Echelon e = echelon(rows);
    return Subspace(std::move(e.reduced), std::move(e.pivots));
  }

  const FieldDesc& field() const { return basis_.field(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }

  /// v minus its projection along the basis onto the pivot coordinates; zero
  /// exactly when v lies in the subspace.
  Vector reduce(Vector v) const {
    check_length(v);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Scalar coeff = v[pivots_[i]];
      if (coeff.is_zero()) continue;
      for (std::size_t c = 0; c < ambient_dim(); ++c)
        if (!basis_(i, c).is_zero()) v[c] -= coeff * basis_(i, c);
    }
    return v;
  }

  bool contains(const Vector& v) const { return leibniz::is_zero(reduce(v)); }

  /// Coefficients of v in the canonical basis.
  Vector coordinates(const Vector& v) const {
    if (!contains(v)) throw AmbientMismatch("vector " + leibniz::to_string(v) + " is not in the subspace");
    Vector out;
    out.reserve(dim());
    for (std::size_t p : pivots_) out.push_back(v[p]);
    return out;
  }

  Vector combine(const Vector& coords) const {
    if (coords.size() != dim()) throw AmbientMismatch("coordinate length mismatch");
    Vector out = zero_vector(field(), ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i) axpy(out, coords[i], basis_.row(i));
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  std::string to_string() const { return basis_.to_string(); }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void check_length(const Vector& v) const {
    if (v.size() != ambient_dim())
      throw AmbientMismatch("vector of length " + std::to_string(v.size()) +
                            " in ambient dimension " + std::to_string(ambient_dim()));
  }

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

namespace detail {

inline void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field()) throw FieldMismatch("subspaces over different fields");
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatch("subspaces of F^" + std::to_string(a.ambient_dim()) + " and F^" +
                          std::to_string(b.ambient_dim()));
}

}  // namespace detail

/// Null space {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  const Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

/// Column space of m.
inline Subspace image(const Matrix& m) { return Subspace::from_rows(m.transpose()); }

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  detail::require_compatible(a, b);
  std::vector<Vector> rows = a.vectors();
  for (auto& v : b.vectors()) rows.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

inline Subspace operator+(const Subspace& a, const Subspace& b) { return subspace_sum(a, b); }

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  detail::require_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.field(), a.ambient_dim());
  // (alpha, beta) with sum alpha_i a_i - sum beta_j b_j = 0.
  const std::size_t n = a.ambient_dim();
  Matrix m(a.field(), n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()(i, r);
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis()(j, r);
  std::vector<Vector> common;
  for (const Vector& sol : kernel(m).vectors()) {
    Vector alpha(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    common.push_back(a.combine(alpha));
  }
  return Subspace::span(a.field(), n, common);
}

inline bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }

inline bool subspace_leq(const Subspace& a, const Subspace& b) {
  detail::require_compatible(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(a.vector(i))) return false;
  return true;
}

/// Standard basis vectors at the non-pivot columns of the canonical basis, in
/// ascending index. Together with the basis of `a` they span the ambient space.
inline std::vector<Vector> complement_basis(const Subspace& a) {
  std::vector<bool> is_pivot(a.ambient_dim(), false);
  for (std::size_t p : a.pivots()) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t i = 0; i < a.ambient_dim(); ++i)
    if (!is_pivot[i]) out.push_back(unit_vector(a.field(), a.ambient_dim(), i));
  return out;
}

/// Indices of the standard vectors returned by complement_basis.
inline std::vector<std::size_t> complement_indices(const Subspace& a) {
  std::vector<bool> is_pivot(a.ambient_dim(), false);
  for (std::size_t p : a.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.ambient_dim(); ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

}  // namespace leibniz
