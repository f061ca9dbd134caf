#pragma once

// Solvable radical, nilradical, Frattini ideal, the complement B of the
// Leibniz kernel, and verification of the statements relating them.
//
// Characteristic 0
// ----------------
// radical: the liesation L/I is a Lie algebra, its radical is the orthogonal
// complement of its derived algebra under the Killing form, and R(L) is the
// preimage of that radical (R(L/I) = R(L)/I since I is abelian).
//
// nilradical: x -> R_x sends R(L) onto a solvable Lie algebra of operators
// (R_{[y,z]} = R_z R_y - R_y R_z), which is triangularizable over the algebraic
// closure. Its weights are linear functionals on R(L), so
//   N(L) = {x in R(L) : R_x nilpotent}
// is the common kernel of the weights. Starting from the trace-form candidate
//   C = {x in R : tr R_x = 0, tr(R_x R_y) = 0 for y in R}
// (which contains N(L)), any basis vector v of C whose R_v is not nilpotent
// is cut off by the equations tr(R_x R_v^k) = 0, k = 1..n. They hold on N(L)
// (the diagonal of R_x R_v^k is lambda(x) lambda(v)^k) and fail at v (the
// power sums p_2..p_{n+1} of a non-nilpotent operator cannot all vanish). The
// dimension drops on every round, and C equals N(L) when every basis vector
// passes.
//
// Prime fields
// ------------
// Both radicals are sums of principal ideals: every solvable (nilpotent) ideal
// is the sum of the ideals generated by its elements, and each of those is
// again solvable (nilpotent). Scanning the projective points of F_p^n gives an
// algorithm independent of the subspace-lattice oracle.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/exactlin.hpp"
#include "leibniz/oracle.hpp"
#include "leibniz/report.hpp"

namespace leibniz {

using oracle::Budget;

enum class RadicalMethod { cartan_pullback, principal_ideal_scan };
enum class NilradicalMethod { trace_form_char0, principal_ideal_scan };

inline const char* to_string(RadicalMethod m) {
  return m == RadicalMethod::cartan_pullback ? "cartan-pullback" : "principal-ideal-scan";
}
inline const char* to_string(NilradicalMethod m) {
  return m == NilradicalMethod::trace_form_char0 ? "trace-form-char0" : "principal-ideal-scan";
}

struct RadicalResult {
  Subspace subspace;
  RadicalMethod method;
  std::vector<Check> certificates;
};

struct NilradicalResult {
  Subspace subspace;
  NilradicalMethod method;
  std::vector<Check> certificates;
  std::size_t refinement_rounds = 0;
};

namespace detail {

inline std::vector<Matrix> right_mult_basis(const LeibnizAlgebra& L) {
  std::vector<Matrix> out;
  out.reserve(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) out.push_back(right_mult(L, L.basis_vector(i)));
  return out;
}

/// Row (tr(R_{e_a} M))_a, the functional x -> tr(R_x M).
inline Vector trace_functional(const std::vector<Matrix>& basis_ops, const Matrix& M) {
  Vector row;
  row.reserve(basis_ops.size());
  for (const auto& Ra : basis_ops) {
    Scalar t = Scalar::zero(M.field());
    for (std::size_t r = 0; r < Ra.rows(); ++r)
      for (std::size_t c = 0; c < Ra.cols(); ++c)
        if (!Ra(r, c).is_zero() && !M(c, r).is_zero()) t += Ra(r, c) * M(c, r);
    row.push_back(std::move(t));
  }
  return row;
}

inline std::string dims_of(const std::vector<Subspace>& series) {
  std::string out;
  for (const auto& s : series) out += (out.empty() ? "" : " > ") + std::to_string(s.dim());
  return out;
}

inline Check identity_certificate(const LeibnizAlgebra& L) {
  const auto failures = leibniz_failures(L);
  return {"leibniz identity", failures.empty(),
          failures.empty() ? "all basis triples satisfy the identity"
                           : std::to_string(failures.size()) + " basis triples violate the identity"};
}

[[noreturn]] inline void fail_certificates(const std::string& what, const std::vector<Check>& certs) {
  std::string msg = what + " failed certificates:";
  for (const auto& c : certs)
    if (!c.ok) msg += " [" + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "]";
  throw InternalInconsistency(msg);
}

inline void require_identity(const LeibnizAlgebra& L, const std::string& what) {
  Check c = identity_certificate(L);
  if (!c.ok) fail_certificates(what, {c});
}

// Sum of the ideals generated by single elements that satisfy `keep`.
template <typename Keep>
Subspace principal_ideal_scan(const LeibnizAlgebra& L, const Budget& budget, Keep keep) {
  const FieldDesc& field = L.field();
  const std::uint64_t p = field.modulus();
  const std::size_t n = L.dim();
  if (oracle::detail::saturating_pow(p, n) > budget.max_subspaces)
    throw BudgetExceeded("principal-ideal scan over F_" + std::to_string(p) + "^" + std::to_string(n) +
                         " exceeds the budget of " + std::to_string(budget.max_subspaces));
  Subspace sum = L.zero_subspace();
  // Projective points: first nonzero coordinate is 1.
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<std::uint64_t> digits(n - lead - 1, 0);
    while (true) {
      Vector x = zero_vector(field, n);
      x[lead] = Scalar::one(field);
      for (std::size_t d = 0; d < digits.size(); ++d) x[lead + 1 + d] = Scalar(field, static_cast<long long>(digits[d]));
      if (!sum.contains(x)) {
        const Subspace J = ideal_closure(L, Subspace::span(field, n, {x}));
        if (keep(J)) sum = sum + J;
      }
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  return sum;
}

}  // namespace detail

/// Killing form tr(R_x R_y) of an algebra, as a Gram matrix on the basis.
inline Matrix trace_form(const LeibnizAlgebra& L) {
  const auto ops = detail::right_mult_basis(L);
  Matrix gram(L.field(), L.dim(), L.dim());
  for (std::size_t a = 0; a < L.dim(); ++a) {
    const Vector row = detail::trace_functional(ops, ops[a]);
    for (std::size_t b = 0; b < L.dim(); ++b) gram(b, a) = row[b];
  }
  return gram;
}

/// Checks that S is a solvable ideal of L; in characteristic 0 also that
/// L/S has a nondegenerate Killing form, which makes S the largest one.
inline RadicalResult certify_radical(const LeibnizAlgebra& L, const Subspace& S, RadicalMethod method) {
  std::vector<Check> certs;
  certs.push_back(detail::identity_certificate(L));
  const bool ideal = is_ideal(L, S);
  certs.push_back({"ideal", ideal, ""});
  if (ideal) {
    const auto series = derived_series(restrict(L, S).algebra);
    certs.push_back({"solvable", series.back().is_zero(), "derived series dims " + detail::dims_of(series)});
    certs.push_back({"contains leibniz kernel", subspace_leq(leibniz_kernel(L), S), ""});
    if (L.field().is_rationals()) {
      const LeibnizAlgebra top = quotient(L, S).quotient;
      const bool lie = is_lie(top);
      const bool nondegenerate = lie && rank(trace_form(top)) == top.dim();
      certs.push_back({"quotient semisimple", nondegenerate,
                       lie ? "Killing form rank " + std::to_string(rank(trace_form(top))) + " of " +
                                 std::to_string(top.dim())
                           : "quotient is not a Lie algebra"});
    }
  }
  for (const auto& c : certs)
    if (!c.ok) detail::fail_certificates("radical", certs);
  return {S, method, std::move(certs)};
}

/// Checks that S is a nilpotent ideal on which every basis vector acts
/// nilpotently, and that it contains the ideals known to be nilpotent.
inline NilradicalResult certify_nilradical(const LeibnizAlgebra& L, const Subspace& S, NilradicalMethod method,
                                           std::size_t rounds = 0) {
  std::vector<Check> certs;
  certs.push_back(detail::identity_certificate(L));
  const bool ideal = is_ideal(L, S);
  certs.push_back({"ideal", ideal, ""});
  if (ideal) {
    const auto series = lower_central_series(restrict(L, S).algebra);
    certs.push_back({"nilpotent", series.back().is_zero(), "lower central series dims " + detail::dims_of(series)});
  }
  for (std::size_t i = 0; i < S.dim(); ++i) {
    const Vector v = S.vector(i);
    certs.push_back({"R nilpotent on " + combination_label(L.labels(), v), is_nilpotent_operator(right_mult(L, v)), ""});
  }
  certs.push_back({"contains leibniz kernel", subspace_leq(leibniz_kernel(L), S), ""});
  certs.push_back({"contains center", subspace_leq(center(L), S), ""});
  for (const auto& c : certs)
    if (!c.ok) detail::fail_certificates("nilradical", certs);
  return {S, method, std::move(certs), rounds};
}

inline RadicalResult radical(const LeibnizAlgebra& L, const Budget& budget = {}) {
  detail::require_identity(L, "radical");
  if (!L.field().is_rationals()) {
    const Subspace R = detail::principal_ideal_scan(L, budget, [&](const Subspace& J) { return is_solvable(L, J); });
    return certify_radical(L, R, RadicalMethod::principal_ideal_scan);
  }
  Subspace R = L.zero_subspace();
  try {
    const QuotientPresentation lies = liesation(L);
    const LeibnizAlgebra& lie = lies.quotient;
    const Subspace derived = bracket_span(lie, lie.whole(), lie.whole());
    const Matrix killing = trace_form(lie);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < derived.dim(); ++i) rows.push_back(killing.apply(derived.vector(i)));
    const Subspace lie_radical = kernel(Matrix::from_rows(lie.field(), lie.dim(), rows));
    R = lies.preimage(lie_radical);
  } catch (const NotAnIdeal& e) {
    throw InternalInconsistency(std::string("radical: ") + e.what());
  } catch (const NotASubalgebra& e) {
    throw InternalInconsistency(std::string("radical: ") + e.what());
  }
  return certify_radical(L, R, RadicalMethod::cartan_pullback);
}

inline NilradicalResult nilradical(const LeibnizAlgebra& L, const Budget& budget = {}) {
  detail::require_identity(L, "nilradical");
  if (!L.field().is_rationals()) {
    const Subspace N =
        detail::principal_ideal_scan(L, budget, [&](const Subspace& J) { return is_nilpotent(L, J); });
    return certify_nilradical(L, N, NilradicalMethod::principal_ideal_scan);
  }
  const std::size_t n = L.dim();
  const auto ops = detail::right_mult_basis(L);
  const auto apply_ops = [&](const Vector& x) {
    Matrix m(L.field(), n, n);
    for (std::size_t a = 0; a < n; ++a)
      if (!x[a].is_zero())
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (!ops[a](r, c).is_zero()) m(r, c) += x[a] * ops[a](r, c);
    return m;
  };

  const Subspace R = radical(L, budget).subspace;
  std::vector<Vector> equations{detail::trace_functional(ops, Matrix::identity(L.field(), n))};
  for (std::size_t i = 0; i < R.dim(); ++i) equations.push_back(detail::trace_functional(ops, apply_ops(R.vector(i))));
  Subspace C = subspace_intersect(R, kernel(Matrix::from_rows(L.field(), n, equations)));

  std::size_t rounds = 0;
  while (true) {
    std::optional<Matrix> offender;
    for (std::size_t i = 0; i < C.dim() && !offender; ++i) {
      Matrix Rv = apply_ops(C.vector(i));
      if (!is_nilpotent_operator(Rv)) offender = std::move(Rv);
    }
    if (!offender) break;
    std::vector<Vector> cut;
    Matrix power = *offender;
    for (std::size_t k = 1; k <= n; ++k) {
      cut.push_back(detail::trace_functional(ops, power));
      power = power * *offender;
    }
    Subspace next = subspace_intersect(C, kernel(Matrix::from_rows(L.field(), n, cut)));
    if (next.dim() >= C.dim())
      throw InternalInconsistency("nilradical refinement did not shrink the candidate " + C.to_string());
    C = std::move(next);
    ++rounds;
  }
  return certify_nilradical(L, C, NilradicalMethod::trace_form_char0, rounds);
}

/// phi(L) for nilpotent L (where it is L^2) or for algebras over F_p within
/// the oracle budget.
inline Subspace frattini_ideal(const LeibnizAlgebra& L, const Budget& budget = {}) {
  if (is_nilpotent(L)) return bracket_span(L, L.whole(), L.whole());
  if (L.field().is_rationals())
    throw Unsupported("Frattini ideal over Q is only computed for nilpotent algebras; reduce mod p (--field F2, F3) "
                      "for the exhaustive computation");
  return oracle::frattini_oracle(L, budget);
}

// ---------------------------------------------------------------------------
// Complements of the Leibniz kernel

struct ComplementSearch {
  std::optional<Subspace> subalgebra;
  bool exhaustive = false;
  std::size_t candidates = 0;
  std::vector<std::string> notices;
};

namespace detail {

// L = I + B and I cap B inside phi(B); empty when phi(B) is not computable.
inline std::optional<bool> complement_conditions(const LeibnizAlgebra& L, const Subspace& I, const Subspace& B,
                                                 const Budget& budget) {
  if (!(I + B).is_full()) return false;
  const Subspace meet = subspace_intersect(I, B);
  if (meet.is_zero()) return true;
  try {
    const Restriction rb = restrict(L, B);
    return subspace_leq(meet, rb.embed(frattini_ideal(rb.algebra, budget)));
  } catch (const Unsupported&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// A subalgebra B with L = I + B and I cap B inside phi(B).
///
/// Over F_p within budget every subalgebra is tried, smallest first. Otherwise
/// the subalgebras generated by perturbed complements e_a + sum t_ab g_b of I
/// (t_ab in {0, 1, -1}, fewest nonzero t first) are tried. An empty result from
/// that search only means the family was exhausted; such a B always exists.
inline ComplementSearch find_complement_B(const LeibnizAlgebra& L, const Budget& budget = {},
                                          std::size_t max_attempts = 4096) {
  ComplementSearch out;
  const Subspace I = leibniz_kernel(L);
  const std::size_t n = L.dim();

  if (oracle::within_budget(n, L.field(), budget)) {
    out.exhaustive = true;
    oracle::for_each_subspace(L.field(), n, budget, [&](const Subspace& B) {
      if (out.subalgebra || B.dim() + I.dim() < n || !is_subalgebra(L, B)) return;
      ++out.candidates;
      const auto ok = detail::complement_conditions(L, I, B, budget);
      if (!ok)
        out.notices.push_back("skipped " + B.to_string() + ": phi(B) not computable");
      else if (*ok)
        out.subalgebra = B;
    });
    return out;
  }

  const std::vector<std::size_t> idx = complement_indices(I);
  const std::vector<Vector> gens = I.vectors();
  const std::size_t slots = idx.size() * gens.size();
  std::set<std::vector<std::string>> seen;
  std::size_t attempts = 0;

  const auto try_assignment = [&](const std::vector<int>& t) {
    std::vector<Vector> reps;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      Vector v = L.basis_vector(idx[a]);
      for (std::size_t b = 0; b < gens.size(); ++b)
        if (t[a * gens.size() + b] != 0) axpy(v, Scalar(L.field(), t[a * gens.size() + b]), gens[b]);
      reps.push_back(std::move(v));
    }
    const Subspace B = generated_subalgebra(L, Subspace::span(L.field(), n, reps));
    std::vector<std::string> key;
    for (const auto& v : B.vectors()) key.push_back(to_string(v));
    if (!seen.insert(key).second) return;
    ++out.candidates;
    const auto ok = detail::complement_conditions(L, I, B, budget);
    if (!ok)
      out.notices.push_back("skipped " + B.to_string() + ": phi(B) not computable over " + L.field().name());
    else if (*ok)
      out.subalgebra = B;
  };

  // Assignments by increasing number of nonzero slots; +1 before -1.
  for (std::size_t weight = 0; weight <= slots && !out.subalgebra; ++weight) {
    std::vector<bool> chosen(slots, false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(weight), true);
    do {
      std::vector<std::size_t> pos;
      for (std::size_t s = 0; s < slots; ++s)
        if (chosen[s]) pos.push_back(s);
      for (std::size_t signs = 0; signs < (std::size_t{1} << weight) && !out.subalgebra; ++signs) {
        if (++attempts > max_attempts) {
          out.notices.push_back("search cap of " + std::to_string(max_attempts) + " perturbations reached");
          return out;
        }
        std::vector<int> t(slots, 0);
        for (std::size_t s = 0; s < weight; ++s) t[pos[s]] = (signs >> s) & 1U ? -1 : 1;
        try_assignment(t);
      }
    } while (!out.subalgebra && std::prev_permutation(chosen.begin(), chosen.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification of the statements about N(L/I)

struct Theorem2Report {
  std::string field;
  Subspace kernel;                  // I
  Subspace complement;              // B
  bool b_is_subalgebra = false;
  bool sum_is_whole = false;        // L = I + B
  bool meet_in_frattini = false;    // I cap B inside phi(B)
  Subspace nilradical_B;            // N(B), parent coordinates
  Subspace nilradical_L;            // N(L)
  Subspace lhs;                     // N(L/I), quotient coordinates
  Subspace rhs;                     // (I + N(B))/I
  Subspace projected_nilradical;    // N(L)/I
  bool formula_equal = false;
  bool nilpotency_condition = false;  // R_n|_I nilpotent for every basis n of N(B)
  bool kernel_quotient_equal = false; // N(L/I) = N(L)/I
  bool basis_level_only = false;      // condition checked on a basis outside char 0
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  bool premises_ok() const { return b_is_subalgebra && sum_is_whole && meet_in_frattini; }
  // The equivalence is only asserted in characteristic 0.
  bool condition_consistent() const { return basis_level_only || nilpotency_condition == kernel_quotient_equal; }

  VerificationReport to_report() const {
    VerificationReport r("theorem2", FieldDesc::parse(field));
    r.check("B is a subalgebra", b_is_subalgebra);
    r.check("L = I + B", sum_is_whole);
    r.check("I cap B inside phi(B)", meet_in_frattini);
    r.check("N(L/I) = (I + N(B))/I", formula_equal);
    if (!basis_level_only)
      r.check("R_n|_I nilpotent for all n in N(B) <=> N(L/I) = N(L)/I", condition_consistent());
    r.note(std::string("nilpotency_condition = ") + (nilpotency_condition ? "true" : "false"));
    r.note(std::string("kernel_quotient_equal = ") + (kernel_quotient_equal ? "true" : "false"));
    for (const auto& n : notes) r.note(n);
    for (const auto& w : witnesses) r.witness(w);
    r.subspace("I", kernel);
    r.subspace("B", complement);
    r.subspace("N(B)", nilradical_B);
    r.subspace("N(L)", nilradical_L);
    r.subspace("N(L/I)", lhs);
    r.subspace("(I+N(B))/I", rhs);
    r.subspace("N(L)/I", projected_nilradical);
    return r;
  }
};

inline Json to_json(const Theorem2Report& t) {
  return Json{{"subject", "theorem2"},
              {"field", t.field},
              {"premises",
               {{"b_is_subalgebra", t.b_is_subalgebra},
                {"sum_is_whole", t.sum_is_whole},
                {"meet_in_frattini", t.meet_in_frattini}}},
              {"formula_equal", t.formula_equal},
              {"nilpotency_condition", t.nilpotency_condition},
              {"kernel_quotient_equal", t.kernel_quotient_equal},
              {"condition_consistent", t.condition_consistent()},
              {"basis_level_only", t.basis_level_only},
              {"verdict", to_string(t.to_report().verdict())},
              {"subspaces",
               {{"I", to_json(t.kernel)},
                {"B", to_json(t.complement)},
                {"N(B)", to_json(t.nilradical_B)},
                {"N(L)", to_json(t.nilradical_L)},
                {"N(L/I)", to_json(t.lhs)},
                {"(I+N(B))/I", to_json(t.rhs)},
                {"N(L)/I", to_json(t.projected_nilradical)}}},
              {"notes", t.notes},
              {"witnesses", t.witnesses}};
}

/// Computes N(L/I) directly and through (I + N(B))/I, and compares the
/// nilpotency of N(B) acting on I with N(L/I) = N(L)/I.
inline Theorem2Report verify_theorem2(const LeibnizAlgebra& L, const Subspace& B, const Budget& budget = {}) {
  L.require_subspace(B);
  const Subspace I = leibniz_kernel(L);
  const Subspace zero = L.zero_subspace();
  Theorem2Report t{L.field().name(), I, B, false, false, false, zero, zero, zero, zero, zero, false, false, false, false, {}, {}};

  t.b_is_subalgebra = is_subalgebra(L, B);
  t.sum_is_whole = (I + B).is_full();
  std::string failed;
  if (!t.b_is_subalgebra) failed += " B is not a subalgebra;";
  if (!t.sum_is_whole) failed += " I + B != L;";
  if (t.b_is_subalgebra && t.sum_is_whole) {
    const auto meet = detail::complement_conditions(L, I, B, budget);
    if (!meet)
      failed += " I cap B inside phi(B) cannot be decided (phi(B) not computable);";
    else if (!*meet)
      failed += " I cap B is not inside phi(B);";
    else
      t.meet_in_frattini = true;
  }
  if (!failed.empty()) throw PremiseViolation("premise violated:" + failed);

  const QuotientPresentation q = quotient(L, I);
  const Restriction rb = restrict(L, B);
  t.nilradical_B = rb.embed(nilradical(rb.algebra, budget).subspace);
  t.nilradical_L = nilradical(L, budget).subspace;
  t.lhs = nilradical(q.quotient, budget).subspace;
  t.rhs = q.project(I + t.nilradical_B);
  t.projected_nilradical = q.project(t.nilradical_L);
  t.formula_equal = t.lhs == t.rhs;
  t.kernel_quotient_equal = t.lhs == t.projected_nilradical;

  // R_n restricted to the ideal I, in I's canonical basis.
  t.nilpotency_condition = true;
  for (std::size_t b = 0; b < t.nilradical_B.dim(); ++b) {
    const Vector nvec = t.nilradical_B.vector(b);
    Matrix action(L.field(), I.dim(), I.dim());
    for (std::size_t c = 0; c < I.dim(); ++c) {
      const Vector image = I.coordinates(L.bracket(I.vector(c), nvec));
      for (std::size_t r = 0; r < I.dim(); ++r) action(r, c) = image[r];
    }
    if (!is_nilpotent_operator(action)) {
      t.nilpotency_condition = false;
      t.witnesses.push_back("R_{" + combination_label(L.labels(), nvec) + "} restricted to I is not nilpotent");
    }
  }
  if (!L.field().is_rationals()) {
    t.basis_level_only = true;
    t.notes.push_back("over " + L.field().name() +
                      " the nilpotency condition was checked on a basis of N(B) only");
  }
  if (!t.formula_equal)
    t.witnesses.push_back("N(L/I) = " + t.lhs.to_string() + " but (I + N(B))/I = " + t.rhs.to_string());
  return t;
}

/// If I lies in phi(L) then N(L/I) = N(L)/I.
inline VerificationReport verify_lemma1(const LeibnizAlgebra& L, const Budget& budget = {}) {
  VerificationReport r("lemma1", L.field());
  const Subspace I = leibniz_kernel(L);
  r.subspace("I", I);

  std::optional<Subspace> phi;
  try {
    phi = frattini_ideal(L, budget);
  } catch (const Unsupported& e) {
    if (!I.is_zero()) {
      const ComplementSearch search = find_complement_B(L, budget);
      if (search.subalgebra && search.subalgebra->dim() < L.dim()) {
        r.subspace("B", *search.subalgebra);
        r.mark_not_applicable(
            "premise fails: the proper subalgebra B satisfies I + B = L, so a maximal subalgebra containing B "
            "misses I and I is not inside phi(L)");
        return r;
      }
      throw;
    }
    r.note(std::string("phi(L) not computed (") + e.what() + "); I = 0 lies in it regardless");
  }
  if (phi) {
    r.subspace("phi(L)", *phi);
    if (!subspace_leq(I, *phi)) {
      r.mark_not_applicable("premise fails: I is not inside phi(L)");
      return r;
    }
  }
  const QuotientPresentation q = quotient(L, I);
  const Subspace lhs = nilradical(q.quotient, budget).subspace;
  const Subspace rhs = q.project(nilradical(L, budget).subspace);
  r.subspace("N(L/I)", lhs);
  r.subspace("N(L)/I", rhs);
  r.check("I inside phi(L)", true);
  r.check("N(L/I) = N(L)/I", lhs == rhs);
  return r;
}

namespace detail {

inline void require_char0(const LeibnizAlgebra& L, const char* what) {
  if (!L.field().is_rationals())
    throw UnsupportedField(std::string(what) + " is stated for characteristic 0; the algebra is over " +
                           L.field().name() + " (supported: Q)");
}

}  // namespace detail

/// [L, R] inside N, in both product orientations and two-sided.
inline VerificationReport verify_prop3(const LeibnizAlgebra& L) {
  detail::require_char0(L, "[L,R] inside N");
  VerificationReport r("prop3", L.field());
  const Subspace R = radical(L).subspace;
  const Subspace N = nilradical(L).subspace;
  const Subspace two_sided = two_sided_span(L, L.whole(), R);
  const Subspace left = bracket_span(L, L.whole(), R);
  const Subspace right = bracket_span(L, R, L.whole());
  r.subspace("R", R);
  r.subspace("N", N);
  r.subspace("[L,R]+[R,L]", two_sided);
  r.check("[L,R] + [R,L] inside N", subspace_leq(two_sided, N));
  r.check("[L,R] inside N", subspace_leq(left, N));
  r.check("[R,L] inside N", subspace_leq(right, N));
  return r;
}

/// [R, R] inside N and nilpotent; L solvable iff [L, L] nilpotent.
inline VerificationReport verify_corollary(const LeibnizAlgebra& L) {
  detail::require_char0(L, "[R,R] inside N");
  VerificationReport r("corollary", L.field());
  const Subspace R = radical(L).subspace;
  const Subspace N = nilradical(L).subspace;
  const Subspace RR = bracket_span(L, R, R);
  const Subspace LL = bracket_span(L, L.whole(), L.whole());
  r.subspace("[R,R]", RR);
  r.subspace("[L,L]", LL);
  r.check("[R,R] inside N", subspace_leq(RR, N));
  const bool rr_sub = is_subalgebra(L, RR);
  r.check("[R,R] nilpotent", rr_sub && is_nilpotent(L, RR), rr_sub ? "" : "[R,R] is not a subalgebra");
  const bool solvable = is_solvable(L);
  const bool ll_nilpotent = is_subalgebra(L, LL) && is_nilpotent(L, LL);
  r.check("L solvable <=> [L,L] nilpotent", solvable == ll_nilpotent,
          std::string("solvable = ") + (solvable ? "true" : "false") +
              ", [L,L] nilpotent = " + (ll_nilpotent ? "true" : "false"));
  return r;
}

inline Json to_json(const RadicalResult& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return Json{{"method", to_string(r.method)}, {"subspace", to_json(r.subspace)}, {"certificates", certs}};
}

inline Json to_json(const NilradicalResult& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return Json{{"method", to_string(r.method)},
              {"subspace", to_json(r.subspace)},
              {"refinement_rounds", r.refinement_rounds},
              {"certificates", certs}};
}

}  // namespace leibniz
