#pragma once

// Right Leibniz algebras given by structure constants, and the
// structure-constant level computations on them.
//
// Convention: [e_i, e_j] = sum_k c[i][j][k] e_k, and the identity checked is
//   [x,[y,z]] = [[x,y],z] - [[x,z],y],
// i.e. every right multiplication R_z : y -> [y,z] is a derivation.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/exactlin.hpp"
#include "leibniz/report.hpp"

namespace leibniz {

class LeibnizAlgebra {
 public:
  /// `table` is c flattened as ((i * n) + j) * n + k. The Leibniz identity is
  /// not enforced here; see check_leibniz.
  LeibnizAlgebra(FieldDesc field, std::vector<std::string> labels, std::vector<Scalar> table)
      : field_(field), labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (table_.size() != n * n * n)
      throw std::invalid_argument("structure tensor has " + std::to_string(table_.size()) +
                                  " entries, expected " + std::to_string(n * n * n));
    for (const auto& c : table_)
      if (c.field() != field_) throw FieldMismatch("structure constant outside the algebra's field");
    products_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        products_.emplace_back(table_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                               table_.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
  }

  static LeibnizAlgebra zero_algebra(FieldDesc field) { return LeibnizAlgebra(field, {}, {}); }

  const FieldDesc& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Scalar>& table() const { return table_; }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_.at((i * dim() + j) * dim() + k);
  }

  /// [e_i, e_j] as a coordinate vector.
  const Vector& product(std::size_t i, std::size_t j) const { return products_.at(i * dim() + j); }

  Vector bracket(const Vector& x, const Vector& y) const {
    require_vector(x);
    require_vector(y);
    Vector out = zero_vector(field_, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        axpy(out, x[i] * y[j], product(i, j));
      }
    }
    return out;
  }

  /// Copy with one structure constant replaced.
  LeibnizAlgebra with_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value) const {
    std::vector<Scalar> table = table_;
    table.at((i * dim() + j) * dim() + k) = std::move(value);
    return LeibnizAlgebra(field_, labels_, std::move(table));
  }

  void require_vector(const Vector& v) const {
    if (v.size() != dim())
      throw AmbientMismatch("vector of length " + std::to_string(v.size()) +
                            " in an algebra of dimension " + std::to_string(dim()));
  }

  void require_subspace(const Subspace& s) const {
    if (s.field() != field_) throw FieldMismatch("subspace over " + s.field().name() +
                                                 " in an algebra over " + field_.name());
    if (s.ambient_dim() != dim())
      throw AmbientMismatch("subspace of F^" + std::to_string(s.ambient_dim()) +
                            " in an algebra of dimension " + std::to_string(dim()));
  }

  Subspace zero_subspace() const { return Subspace::zero(field_, dim()); }
  Subspace whole() const { return Subspace::full(field_, dim()); }
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.field_ == b.field_ && a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  FieldDesc field_;
  std::vector<std::string> labels_;
  std::vector<Scalar> table_;
  std::vector<Vector> products_;
};

/// Incremental construction of a structure tensor; unset products are zero.
class AlgebraBuilder {
 public:
  AlgebraBuilder(FieldDesc field, std::vector<std::string> labels)
      : field_(field),
        labels_(std::move(labels)),
        table_(labels_.size() * labels_.size() * labels_.size(), Scalar::zero(field)) {}

  AlgebraBuilder& set(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
    const std::size_t n = labels_.size();
    if (i >= n || j >= n || k >= n) throw std::out_of_range("basis index out of range");
    table_[(i * n + j) * n + k] = std::move(value);
    return *this;
  }
  AlgebraBuilder& set(std::size_t i, std::size_t j, std::size_t k, long long num, long long den = 1) {
    return set(i, j, k, Scalar(field_, num, den));
  }
  // [e_i, e_j] = c e_k and [e_j, e_i] = -c e_k
  AlgebraBuilder& set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, long long num,
                                    long long den = 1) {
    set(i, j, k, num, den);
    return set(j, i, k, -num, den);
  }

  LeibnizAlgebra build() const { return LeibnizAlgebra(field_, labels_, table_); }

 private:
  FieldDesc field_;
  std::vector<std::string> labels_;
  std::vector<Scalar> table_;
};

/// Human-readable linear combination of basis labels, e.g. "x - x2".
inline std::string combination_label(const std::vector<std::string>& labels, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coeff = v[i].to_string();
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (v[i].field().is_rationals() && negative) coeff.erase(0, 1);
    if (out.empty())
      out += negative && v[i].field().is_rationals() ? "-" : "";
    else
      out += negative && v[i].field().is_rationals() ? " - " : " + ";
    if (coeff != "1") out += coeff + "*";
    out += labels.at(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Leibniz identity

struct IdentityFailure {
  std::size_t i, j, k;
  Vector lhs;  // [e_i, [e_j, e_k]]
  Vector rhs;  // [[e_i, e_j], e_k] - [[e_i, e_k], e_j]
};

inline std::vector<IdentityFailure> leibniz_failures(const LeibnizAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<IdentityFailure> failures;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = L.basis_vector(i);
        Vector lhs = L.bracket(ei, L.product(j, k));
        Vector rhs = L.bracket(L.product(i, j), L.basis_vector(k)) -
                     L.bracket(L.product(i, k), L.basis_vector(j));
        if (lhs != rhs) failures.push_back({i, j, k, std::move(lhs), std::move(rhs)});
      }
  return failures;
}

/// Checks the identity on every basis triple, which suffices by trilinearity.
inline VerificationReport check_leibniz(const LeibnizAlgebra& L) {
  VerificationReport report("leibniz-identity", L.field());
  const auto failures = leibniz_failures(L);
  for (const auto& f : failures) {
    report.witness("(" + L.label(f.i) + ", " + L.label(f.j) + ", " + L.label(f.k) +
                   "): [x,[y,z]] = " + combination_label(L.labels(), f.lhs) +
                   " but [[x,y],z] - [[x,z],y] = " + combination_label(L.labels(), f.rhs));
  }
  const std::size_t triples = L.dim() * L.dim() * L.dim();
  report.check("identity on basis triples", failures.empty(),
               std::to_string(triples - failures.size()) + "/" + std::to_string(triples) +
                   " triples satisfy the identity");
  return report;
}

// ---------------------------------------------------------------------------
// Multiplication operators and subspace products

/// Matrix of y -> [y, x], acting on column coordinate vectors.
inline Matrix right_mult(const LeibnizAlgebra& L, const Vector& x) {
  L.require_vector(x);
  Matrix m(L.field(), L.dim(), L.dim());
  for (std::size_t a = 0; a < L.dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Vector& p = L.product(j, a);
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!p[k].is_zero()) m(k, j) += x[a] * p[k];
    }
  }
  return m;
}

/// Matrix of y -> [x, y].
inline Matrix left_mult(const LeibnizAlgebra& L, const Vector& x) {
  L.require_vector(x);
  Matrix m(L.field(), L.dim(), L.dim());
  for (std::size_t a = 0; a < L.dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Vector& p = L.product(a, j);
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!p[k].is_zero()) m(k, j) += x[a] * p[k];
    }
  }
  return m;
}

/// span{[a, b] : a in A, b in B}, one-sided.
inline Subspace bracket_span(const LeibnizAlgebra& L, const Subspace& A, const Subspace& B) {
  L.require_subspace(A);
  L.require_subspace(B);
  std::vector<Vector> products;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j) products.push_back(L.bracket(A.vector(i), B.vector(j)));
  return Subspace::span(L.field(), L.dim(), products);
}

/// [A, B] + [B, A].
inline Subspace two_sided_span(const LeibnizAlgebra& L, const Subspace& A, const Subspace& B) {
  L.require_subspace(A);
  L.require_subspace(B);
  std::vector<Vector> products;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j) {
      products.push_back(L.bracket(A.vector(i), B.vector(j)));
      products.push_back(L.bracket(B.vector(j), A.vector(i)));
    }
  return Subspace::span(L.field(), L.dim(), products);
}

inline bool is_subalgebra(const LeibnizAlgebra& L, const Subspace& A) {
  return subspace_leq(bracket_span(L, A, A), A);
}

/// Two-sided ideal: [A, L] and [L, A] both inside A.
inline bool is_ideal(const LeibnizAlgebra& L, const Subspace& A) {
  return subspace_leq(two_sided_span(L, A, L.whole()), A);
}

/// Smallest ideal containing S.
inline Subspace ideal_closure(const LeibnizAlgebra& L, const Subspace& S) {
  Subspace current = S;
  while (true) {
    Subspace next = current + two_sided_span(L, current, L.whole());
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

/// Smallest subalgebra containing S.
inline Subspace generated_subalgebra(const LeibnizAlgebra& L, const Subspace& S) {
  Subspace current = S;
  while (true) {
    Subspace next = current + bracket_span(L, current, current);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

/// I = span{x^2}. Squares of e_i and e_i + e_j span all squares, since
/// [x+y, x+y] = x^2 + y^2 + [x,y] + [y,x].
inline Subspace leibniz_kernel(const LeibnizAlgebra& L) {
  std::vector<Vector> squares;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    squares.push_back(L.product(i, i));
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Vector v = L.basis_vector(i);
      v[j] = Scalar::one(L.field());
      squares.push_back(L.bracket(v, v));
    }
  }
  return Subspace::span(L.field(), L.dim(), squares);
}

inline bool is_lie(const LeibnizAlgebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (!is_zero(L.product(i, i))) return false;
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (!is_zero(L.product(i, j) + L.product(j, i))) return false;
  }
  return true;
}

inline Subspace center(const LeibnizAlgebra& L) {
  // x is central iff [x, e_j] = [e_j, x] = 0 for all j; one row per (j, k, side).
  const std::size_t n = L.dim();
  Matrix constraints(L.field(), 2 * n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        constraints(2 * (j * n + k), i) = L.constant(i, j, k);
        constraints(2 * (j * n + k) + 1, i) = L.constant(j, i, k);
      }
  return kernel(constraints);
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientPresentation {
  LeibnizAlgebra parent;
  Subspace ideal;
  LeibnizAlgebra quotient;
  Matrix projection;                 // dim(quotient) x dim(parent)
  std::vector<Vector> section;       // coset representatives, in parent coordinates
  std::vector<std::size_t> section_indices;  // section[a] = e_{section_indices[a]}

  Vector project(const Vector& v) const { return projection.apply(v); }

  Subspace project(const Subspace& s) const {
    std::vector<Vector> images;
    for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(project(s.vector(i)));
    return Subspace::span(quotient.field(), quotient.dim(), images);
  }

  Vector lift(const Vector& q) const {
    quotient.require_vector(q);
    Vector v = zero_vector(parent.field(), parent.dim());
    for (std::size_t a = 0; a < section.size(); ++a) axpy(v, q[a], section[a]);
    return v;
  }

  /// Full preimage of a quotient subspace; always contains the ideal.
  Subspace preimage(const Subspace& q) const {
    quotient.require_subspace(q);
    std::vector<Vector> gens = ideal.vectors();
    for (std::size_t i = 0; i < q.dim(); ++i) gens.push_back(lift(q.vector(i)));
    return Subspace::span(parent.field(), parent.dim(), gens);
  }
};

/// L/J, presented on the standard coset representatives e_i for the non-pivot
/// columns of J's canonical basis.
inline QuotientPresentation quotient(const LeibnizAlgebra& L, const Subspace& J) {
  L.require_subspace(J);
  if (!is_ideal(L, J)) throw NotAnIdeal("subspace " + J.to_string() + " is not an ideal");
  const std::vector<std::size_t> idx = complement_indices(J);
  const std::size_t m = idx.size();
  Matrix projection(L.field(), m, L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) {
    const Vector r = J.reduce(L.basis_vector(j));
    for (std::size_t a = 0; a < m; ++a) projection(a, j) = r[idx[a]];
  }
  std::vector<std::string> labels;
  std::vector<Vector> section;
  for (std::size_t i : idx) {
    labels.push_back(L.label(i));
    section.push_back(L.basis_vector(i));
  }
  AlgebraBuilder builder(L.field(), labels);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector img = projection.apply(L.product(idx[a], idx[b]));
      for (std::size_t c = 0; c < m; ++c)
        if (!img[c].is_zero()) builder.set(a, b, c, img[c]);
    }
  return {L, J, builder.build(), std::move(projection), std::move(section), idx};
}

inline QuotientPresentation liesation(const LeibnizAlgebra& L) {
  return quotient(L, leibniz_kernel(L));
}

// ---------------------------------------------------------------------------
// Subalgebras as standalone algebras

struct Restriction {
  LeibnizAlgebra algebra;
  Subspace subspace;    // in parent coordinates
  Matrix embedding;     // parent_dim x dim, columns are the canonical basis

  Vector embed(const Vector& coords) const { return embedding.apply(coords); }

  Subspace embed(const Subspace& s) const {
    algebra.require_subspace(s);
    std::vector<Vector> images;
    for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(embed(s.vector(i)));
    return Subspace::span(subspace.field(), subspace.ambient_dim(), images);
  }

  Vector coordinates(const Vector& v) const { return subspace.coordinates(v); }

  /// A parent subspace contained in the subalgebra, in restricted coordinates.
  Subspace pull(const Subspace& s) const {
    std::vector<Vector> coords;
    for (std::size_t i = 0; i < s.dim(); ++i) coords.push_back(coordinates(s.vector(i)));
    return Subspace::span(algebra.field(), algebra.dim(), coords);
  }
};

/// The bracket of a subalgebra expressed in its canonical basis.
inline Restriction restrict(const LeibnizAlgebra& L, const Subspace& A) {
  L.require_subspace(A);
  if (!is_subalgebra(L, A)) throw NotASubalgebra("subspace " + A.to_string() + " is not a subalgebra");
  const std::size_t m = A.dim();
  std::vector<std::string> labels;
  std::vector<Vector> basis = A.vectors();
  for (const auto& b : basis) labels.push_back(combination_label(L.labels(), b));
  AlgebraBuilder builder(L.field(), labels);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector coords = A.coordinates(L.bracket(basis[a], basis[b]));
      for (std::size_t c = 0; c < m; ++c)
        if (!coords[c].is_zero()) builder.set(a, b, c, coords[c]);
    }
  return {builder.build(), A, Matrix::from_columns(L.field(), L.dim(), basis)};
}

// ---------------------------------------------------------------------------
// Series

namespace detail {

template <typename Step>
std::vector<Subspace> series(const Subspace& start, Step step) {
  std::vector<Subspace> terms{start};
  while (!terms.back().is_zero()) {
    Subspace next = step(terms.back());
    const bool stable = next.dim() == terms.back().dim();
    terms.push_back(std::move(next));
    if (stable) break;
  }
  return terms;
}

}  // namespace detail

/// L^1 = L, L^{k+1} = [L^k, L]. Ends at the first zero or repeated term.
inline std::vector<Subspace> lower_central_series(const LeibnizAlgebra& L) {
  return detail::series(L.whole(), [&](const Subspace& t) { return bracket_span(L, t, L.whole()); });
}

/// L^(1) = L, L^(k+1) = [L^(k), L^(k)]. Ends at the first zero or repeated term.
inline std::vector<Subspace> derived_series(const LeibnizAlgebra& L) {
  return detail::series(L.whole(), [&](const Subspace& t) { return bracket_span(L, t, t); });
}

inline bool is_nilpotent(const LeibnizAlgebra& L) { return lower_central_series(L).back().is_zero(); }
inline bool is_solvable(const LeibnizAlgebra& L) { return derived_series(L).back().is_zero(); }

/// Nilpotency of a subalgebra as an algebra in its own right.
inline bool is_nilpotent(const LeibnizAlgebra& L, const Subspace& A) {
  return is_nilpotent(restrict(L, A).algebra);
}
inline bool is_solvable(const LeibnizAlgebra& L, const Subspace& A) {
  return is_solvable(restrict(L, A).algebra);
}

/// Nilpotency of a single operator. In characteristic 0 this is the vanishing
/// of trace(M^k) for k = 1..n; over F_p it is M^n = 0.
inline bool is_nilpotent_operator(const Matrix& M) {
  const std::size_t n = M.rows();
  if (M.field().is_rationals()) {
    Matrix power = M;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!power.trace().is_zero()) return false;
      if (k < n) power = power * M;
    }
    return true;
  }
  return M.pow(n).is_zero();
}

// ---------------------------------------------------------------------------
// Direct sums and change of field

inline LeibnizAlgebra direct_sum(const LeibnizAlgebra& A, const LeibnizAlgebra& B) {
  if (A.field() != B.field()) throw FieldMismatch("direct sum of algebras over different fields");
  std::vector<std::string> labels = A.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (std::string label : B.labels()) {
    while (used.count(label)) label += "'";
    used.insert(label);
    labels.push_back(std::move(label));
  }
  AlgebraBuilder builder(A.field(), labels);
  const std::size_t off = A.dim();
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      for (std::size_t k = 0; k < A.dim(); ++k)
        if (!A.constant(i, j, k).is_zero()) builder.set(i, j, k, A.constant(i, j, k));
  for (std::size_t i = 0; i < B.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j)
      for (std::size_t k = 0; k < B.dim(); ++k)
        if (!B.constant(i, j, k).is_zero()) builder.set(off + i, off + j, off + k, B.constant(i, j, k));
  return builder.build();
}

/// Embeds subspaces of the summands of A (+) B into the sum.
inline Subspace embed_summand(const Subspace& s, std::size_t offset, std::size_t total_dim) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vector v = zero_vector(s.field(), total_dim);
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) v[offset + c] = s.basis()(i, c);
    rows.push_back(std::move(v));
  }
  return Subspace::span(s.field(), total_dim, rows);
}

/// Reduction of a rational algebra into `target`. Empty when a denominator is
/// not a unit or the reduced table fails the Leibniz identity.
inline std::optional<LeibnizAlgebra> reduce(const LeibnizAlgebra& L, FieldDesc target) {
  if (L.field() == target) return L;
  if (!L.field().is_rationals()) throw FieldMismatch("can only reduce rational algebras");
  std::vector<Scalar> table;
  table.reserve(L.table().size());
  for (const auto& c : L.table()) {
    try {
      table.emplace_back(target, c.rational());
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  }
  LeibnizAlgebra reduced(target, L.labels(), std::move(table));
  if (!leibniz_failures(reduced).empty()) return std::nullopt;
  return reduced;
}

/// Reduction of a rational subspace; empty when a denominator is not a unit.
inline std::optional<Subspace> reduce(const Subspace& s, FieldDesc target) {
  if (s.field() == target) return s;
  std::vector<Vector> rows;
  try {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Vector v;
      for (const auto& c : s.vector(i)) v.emplace_back(target, c.rational());
      rows.push_back(std::move(v));
    }
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  return Subspace::span(target, s.ambient_dim(), rows);
}

}  // namespace leibniz
