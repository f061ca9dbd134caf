#pragma once

// Ground truth by exhaustive enumeration over small prime fields.
//
// Every subspace of F_p^n is visited exactly once through its RREF: choose the
// pivot columns, then every assignment of the free entries to the right of
// each pivot that do not sit in a pivot column.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/exactlin.hpp"
#include "leibniz/report.hpp"

namespace leibniz::oracle {

struct Budget {
  // Hard cap on the number of subspaces (or field elements) a scan may visit.
  std::uint64_t max_subspaces = 1'000'000;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

inline void require_prime_field(const FieldDesc& field, const char* what) {
  if (field.is_rationals())
    throw UnsupportedField(std::string(what) + " needs a prime field; reduce the algebra mod p first");
}

}  // namespace detail

/// Number of k-dimensional subspaces of F_q^n (saturating at UINT64_MAX), by
/// the q-Pascal rule [n, k] = [n-1, k-1] + q^k [n-1, k].
inline std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      const std::uint64_t scaled = detail::saturating_mul(detail::saturating_pow(q, j), row[j]);
      row[j] = row[j - 1] > UINT64_MAX - scaled ? UINT64_MAX : row[j - 1] + scaled;
    }
  return row[k];
}

/// Total number of subspaces of F_q^n.
inline std::uint64_t subspace_count(std::size_t n, std::uint64_t q) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::uint64_t c = gaussian_binomial(n, k, q);
    if (c == UINT64_MAX || total > UINT64_MAX - c) return UINT64_MAX;
    total += c;
  }
  return total;
}

inline void require_budget(std::size_t n, const FieldDesc& field, const Budget& budget) {
  detail::require_prime_field(field, "exhaustive subspace enumeration");
  const std::uint64_t count = subspace_count(n, field.modulus());
  if (count > budget.max_subspaces)
    throw BudgetExceeded("F_" + std::to_string(field.modulus()) + "^" + std::to_string(n) + " has " +
                         (count == UINT64_MAX ? std::string("more than 2^64") : std::to_string(count)) +
                         " subspaces, above the budget of " + std::to_string(budget.max_subspaces));
}

inline bool within_budget(std::size_t n, const FieldDesc& field, const Budget& budget) {
  return !field.is_rationals() && subspace_count(n, field.modulus()) <= budget.max_subspaces;
}

/// Calls visit(const Subspace&) for every subspace of F_p^n, by increasing
/// dimension, then pivot pattern, then free-entry values.
template <typename Visitor>
void for_each_subspace(const FieldDesc& field, std::size_t n, const Budget& budget, Visitor&& visit) {
  require_budget(n, field, budget);
  const std::uint64_t p = field.modulus();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (std::size_t c : pivots) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free.emplace_back(r, c);

      std::vector<std::uint64_t> digits(free.size(), 0);
      while (true) {
        Matrix basis(field, k, n);
        for (std::size_t r = 0; r < k; ++r) basis(r, pivots[r]) = Scalar::one(field);
        for (std::size_t f = 0; f < free.size(); ++f)
          basis(free[f].first, free[f].second) = Scalar(field, static_cast<long long>(digits[f]));
        visit(Subspace::from_rows(basis));

        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }

      // next k-combination of {0..n-1}
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
}

inline std::vector<Subspace> enumerate_subspaces(const FieldDesc& field, std::size_t n,
                                                 const Budget& budget = {}) {
  std::vector<Subspace> out;
  for_each_subspace(field, n, budget, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

/// The ideal/subalgebra lattice of an algebra over F_p.
struct LatticeScan {
  LeibnizAlgebra algebra;
  std::uint64_t subspaces = 0;
  std::vector<Subspace> subalgebras;
  std::vector<Subspace> ideals;
  std::vector<Subspace> nilpotent_ideals;
  std::vector<Subspace> solvable_ideals;
  std::vector<Subspace> maximal_subalgebras;  // inclusion-maximal among proper subalgebras
};

inline LatticeScan scan_lattice(const LeibnizAlgebra& L, const Budget& budget = {}) {
  LatticeScan scan{L, 0, {}, {}, {}, {}, {}};
  for_each_subspace(L.field(), L.dim(), budget, [&](const Subspace& s) {
    ++scan.subspaces;
    if (!is_subalgebra(L, s)) return;
    scan.subalgebras.push_back(s);
    if (!is_ideal(L, s)) return;
    scan.ideals.push_back(s);
    const LeibnizAlgebra restricted = restrict(L, s).algebra;
    if (is_nilpotent(restricted)) scan.nilpotent_ideals.push_back(s);
    if (is_solvable(restricted)) scan.solvable_ideals.push_back(s);
  });
  for (const auto& a : scan.subalgebras) {
    if (a.is_full()) continue;
    const bool dominated = std::any_of(scan.subalgebras.begin(), scan.subalgebras.end(), [&](const Subspace& b) {
      return !b.is_full() && b.dim() > a.dim() && subspace_leq(a, b);
    });
    if (!dominated) scan.maximal_subalgebras.push_back(a);
  }
  return scan;
}

/// Largest ideal of L inside K: iterate K -> {x in K : [x, L] + [L, x] in K}.
inline Subspace largest_ideal_in(const LeibnizAlgebra& L, Subspace K) {
  L.require_subspace(K);
  while (true) {
    // Functionals vanishing exactly on K.
    const std::vector<Vector> annihilator = kernel(K.basis()).vectors();
    const std::size_t n = L.dim();
    Matrix constraints(L.field(), annihilator.size() * n * 2, K.dim());
    std::size_t row = 0;
    for (const auto& f : annihilator)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < K.dim(); ++i) {
          const Vector right = L.bracket(K.vector(i), L.basis_vector(j));
          const Vector left = L.bracket(L.basis_vector(j), K.vector(i));
          Scalar a = Scalar::zero(L.field());
          Scalar b = Scalar::zero(L.field());
          for (std::size_t c = 0; c < n; ++c) {
            a += f[c] * right[c];
            b += f[c] * left[c];
          }
          constraints(row, i) = a;
          constraints(row + 1, i) = b;
        }
        row += 2;
      }
    std::vector<Vector> members;
    for (const auto& coeffs : kernel(constraints).vectors()) members.push_back(K.combine(coeffs));
    Subspace next = Subspace::span(L.field(), n, members);
    if (next.dim() == K.dim()) return K;
    K = std::move(next);
  }
}

/// Sum of all nilpotent ideals; verifies it is itself a nilpotent ideal that
/// contains every nilpotent ideal of the scan.
inline Subspace nilradical_oracle(const LatticeScan& scan) {
  const LeibnizAlgebra& L = scan.algebra;
  Subspace sum = L.zero_subspace();
  for (const auto& j : scan.nilpotent_ideals) sum = sum + j;
  if (!is_ideal(L, sum) || !is_nilpotent(L, sum))
    throw TheoremViolation("sum of nilpotent ideals " + sum.to_string() + " is not a nilpotent ideal");
  const bool listed = std::find(scan.nilpotent_ideals.begin(), scan.nilpotent_ideals.end(), sum) !=
                      scan.nilpotent_ideals.end();
  if (!listed) throw TheoremViolation("sum of nilpotent ideals missing from the enumerated lattice");
  return sum;
}

inline Subspace nilradical_oracle(const LeibnizAlgebra& L, const Budget& budget = {}) {
  return nilradical_oracle(scan_lattice(L, budget));
}

inline Subspace radical_oracle(const LatticeScan& scan) {
  const LeibnizAlgebra& L = scan.algebra;
  Subspace sum = L.zero_subspace();
  for (const auto& j : scan.solvable_ideals) sum = sum + j;
  if (!is_ideal(L, sum) || !is_solvable(L, sum))
    throw TheoremViolation("sum of solvable ideals " + sum.to_string() + " is not a solvable ideal");
  return sum;
}

inline Subspace radical_oracle(const LeibnizAlgebra& L, const Budget& budget = {}) {
  return radical_oracle(scan_lattice(L, budget));
}

/// Largest ideal inside the intersection of all maximal subalgebras.
inline Subspace frattini_oracle(const LatticeScan& scan) {
  const LeibnizAlgebra& L = scan.algebra;
  Subspace meet = L.whole();
  for (const auto& m : scan.maximal_subalgebras) meet = subspace_intersect(meet, m);
  return largest_ideal_in(L, meet);
}

inline Subspace frattini_oracle(const LeibnizAlgebra& L, const Budget& budget = {}) {
  return frattini_oracle(scan_lattice(L, budget));
}

/// Sums of all pairs of nilpotent ideals are nilpotent, and the nilpotent
/// ideals have a unique maximal element.
inline VerificationReport verify_nilpotent_ideal_lattice(const LatticeScan& scan) {
  const LeibnizAlgebra& L = scan.algebra;
  VerificationReport report("nilpotent-ideal-lattice", L.field());
  std::size_t pairs = 0;
  std::size_t bad_pairs = 0;
  const auto& nil = scan.nilpotent_ideals;
  for (std::size_t a = 0; a < nil.size(); ++a)
    for (std::size_t b = a; b < nil.size(); ++b) {
      ++pairs;
      const Subspace s = nil[a] + nil[b];
      if (!is_nilpotent(L, s)) {
        ++bad_pairs;
        report.witness("non-nilpotent sum " + nil[a].to_string() + " + " + nil[b].to_string());
      }
    }
  report.check("sum of two nilpotent ideals is nilpotent", bad_pairs == 0,
               std::to_string(pairs) + " pairs checked");

  std::vector<Subspace> maximal;
  for (const auto& a : nil) {
    const bool dominated = std::any_of(nil.begin(), nil.end(), [&](const Subspace& b) {
      return b.dim() > a.dim() && subspace_leq(a, b);
    });
    if (!dominated) maximal.push_back(a);
  }
  report.check("unique maximal nilpotent ideal", maximal.size() == 1,
               std::to_string(maximal.size()) + " maximal element(s)");
  if (maximal.size() == 1) {
    const bool contains_all = std::all_of(nil.begin(), nil.end(),
                                          [&](const Subspace& j) { return subspace_leq(j, maximal[0]); });
    report.check("maximal nilpotent ideal contains every nilpotent ideal", contains_all);
    report.subspace("maximal nilpotent ideal", maximal[0]);
  }
  report.note(std::to_string(scan.subspaces) + " subspaces, " + std::to_string(scan.ideals.size()) +
              " ideals, " + std::to_string(nil.size()) + " nilpotent ideals");
  return report;
}

}  // namespace leibniz::oracle
