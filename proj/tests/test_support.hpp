#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// library's echelon or subspace code paths it is used to check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "leibniz/leibniz.hpp"

namespace leibniz::ts {

inline const FieldDesc Q = FieldDesc::rationals();

inline Scalar random_scalar(std::mt19937& rng, const FieldDesc& field, int lo = -3, int hi = 3) {
  if (field.is_rationals()) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    return Scalar(field, num(rng), den(rng));
  }
  std::uniform_int_distribution<long long> r(0, static_cast<long long>(field.modulus()) - 1);
  return Scalar(field, r(rng));
}

inline Vector random_vector(std::mt19937& rng, const FieldDesc& field, std::size_t n) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, field));
  return v;
}

/// Random matrix whose rows are combinations of `rank` random rows, so ranks
/// below full show up often.
inline Matrix random_matrix(std::mt19937& rng, const FieldDesc& field, std::size_t rows, std::size_t cols,
                            std::size_t rank) {
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < rank; ++i) seeds.push_back(random_vector(rng, field, cols));
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector v = zero_vector(field, cols);
    for (const auto& s : seeds) v = v + random_scalar(rng, field, -2, 2) * s;
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[c];
  }
  return m;
}

inline Subspace random_subspace(std::mt19937& rng, const FieldDesc& field, std::size_t n) {
  std::uniform_int_distribution<std::size_t> k(0, n);
  std::vector<Vector> rows;
  const std::size_t count = k(rng);
  for (std::size_t i = 0; i < count; ++i) rows.push_back(random_vector(rng, field, n));
  return Subspace::span(field, n, rows);
}

/// All vectors of F_p^n, as residue tuples encoded in base p.
inline std::vector<std::vector<std::uint64_t>> all_points(std::uint64_t p, std::size_t n) {
  std::vector<std::vector<std::uint64_t>> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> v(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = c % p;
      c /= p;
    }
    out.push_back(v);
  }
  return out;
}

/// Counts subspaces of F_p^n as the subsets of points that contain zero and
/// are closed under addition (closure under scaling follows over F_p).
/// Exponential in p^n; only for tiny cases.
inline std::uint64_t brute_force_subspace_count(std::uint64_t p, std::size_t n) {
  const auto points = all_points(p, n);
  const std::size_t m = points.size();
  const auto code_of = [&](const std::vector<std::uint64_t>& v) {
    std::uint64_t code = 0;
    for (std::size_t i = n; i-- > 0;) code = code * p + v[i];
    return code;
  };
  std::vector<std::vector<std::size_t>> sum(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::uint64_t> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = (points[a][i] + points[b][i]) % p;
      sum[a][b] = code_of(s);
    }
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (!(mask & 1U)) continue;  // point 0 is the zero vector
    bool closed = true;
    for (std::size_t a = 0; a < m && closed; ++a) {
      if (!(mask >> a & 1U)) continue;
      for (std::size_t b = 0; b < m && closed; ++b)
        if ((mask >> b & 1U) && !(mask >> sum[a][b] & 1U)) closed = false;
    }
    count += closed;
  }
  return count;
}

/// Evaluates [x,[y,z]] - [[x,y],z] + [[x,z],y] for arbitrary vectors.
inline Vector leibniz_defect(const LeibnizAlgebra& L, const Vector& x, const Vector& y, const Vector& z) {
  return L.bracket(x, L.bracket(y, z)) - L.bracket(L.bracket(x, y), z) + L.bracket(L.bracket(x, z), y);
}

inline Subspace span_of(const FieldDesc& field, std::size_t n, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(make_vector(field, r));
  return Subspace::span(field, n, vs);
}

}  // namespace leibniz::ts
