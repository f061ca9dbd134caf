#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace leibniz;
using leibniz::ts::Q;
using leibniz::ts::span_of;

namespace {

Subspace coord(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> rows;
  for (std::size_t i : idx) rows.push_back(unit_vector(Q, n, i));
  return Subspace::span(Q, n, rows);
}

// Brute check that every element of a basis acts nilpotently via M^n = 0,
// independent of the trace criterion used by the library.
bool all_right_mults_nilpotent(const LeibnizAlgebra& L, const Subspace& S) {
  for (const auto& v : S.vectors())
    if (!right_mult(L, v).pow(L.dim()).is_zero()) return false;
  return true;
}

}  // namespace

TEST(Radical, Examples) {
  EXPECT_TRUE(radical(corpus::example1().algebra).subspace.is_full());
  EXPECT_TRUE(radical(corpus::sl2().algebra).subspace.is_zero());
  const auto S = direct_sum(corpus::example2(2, 1).algebra, corpus::sl2().algebra);
  EXPECT_EQ(radical(S).subspace, coord(6, {0, 1, 2}));
}

TEST(Radical, MethodAndCertificates) {
  const auto r = radical(corpus::example1().algebra);
  EXPECT_EQ(r.method, RadicalMethod::cartan_pullback);
  ASSERT_FALSE(r.certificates.empty());
  for (const auto& c : r.certificates) EXPECT_TRUE(c.ok) << c.name;
}

TEST(Nilradical, Examples) {
  EXPECT_EQ(nilradical(corpus::example1().algebra).subspace, coord(2, {1}));
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Vector> xs;
      for (std::size_t i = 0; i < n; ++i) xs.push_back(unit_vector(Q, n + 1, i));
      EXPECT_EQ(nilradical(corpus::example2(n, r).algebra).subspace, Subspace::span(Q, n + 1, xs));
    }
  EXPECT_TRUE(nilradical(corpus::abelian(3).algebra).subspace.is_full());
  EXPECT_TRUE(nilradical(corpus::sl2().algebra).subspace.is_zero());
  EXPECT_EQ(nilradical(corpus::affine2().algebra).subspace, coord(2, {0}));
}

TEST(Nilradical, RefinementLoopRuns) {
  const auto res = nilradical(corpus::permutation3().algebra);
  EXPECT_EQ(res.subspace, coord(4, {0, 1, 2}));
  EXPECT_GE(res.refinement_rounds, 1u);
}

TEST(Nilradical, CorpusExpectationsAndCertificates) {
  for (const auto& e : corpus::standard_corpus()) {
    const auto& L = e.algebra;
    const auto N = nilradical(L);
    const auto R = radical(L);
    for (const auto& c : N.certificates) EXPECT_TRUE(c.ok) << e.name << ": " << c.name;
    for (const auto& c : R.certificates) EXPECT_TRUE(c.ok) << e.name << ": " << c.name;
    if (e.expected.nilradical) {
      EXPECT_EQ(N.subspace, e.expected.nilradical->value) << e.name;
    }
    if (e.expected.radical) {
      EXPECT_EQ(R.subspace, e.expected.radical->value) << e.name;
    }
    // independent checks
    EXPECT_TRUE(is_ideal(L, N.subspace));
    EXPECT_TRUE(is_nilpotent(L, N.subspace)) << e.name;
    EXPECT_TRUE(all_right_mults_nilpotent(L, N.subspace)) << e.name;
    EXPECT_TRUE(subspace_leq(N.subspace, R.subspace)) << e.name;
    EXPECT_TRUE(is_solvable(L, R.subspace)) << e.name;
    // Maximality: no element outside N acts nilpotently together with N as an ideal.
    for (std::size_t i = 0; i < L.dim(); ++i) {
      const Vector v = L.basis_vector(i);
      if (N.subspace.contains(v)) continue;
      const Subspace bigger = ideal_closure(L, N.subspace + Subspace::span(Q, L.dim(), {v}));
      EXPECT_FALSE(is_nilpotent(L, bigger)) << e.name << " basis " << i;
    }
  }
}

TEST(Nilradical, QuotientOfRadicalPullsBack) {
  for (const auto& e : corpus::standard_corpus()) {
    const auto q = liesation(e.algebra);
    EXPECT_EQ(radical(q.quotient).subspace, q.project(radical(e.algebra).subspace)) << e.name;
    if (e.expected.liesation_nilradical) {
      EXPECT_EQ(nilradical(q.quotient).subspace, e.expected.liesation_nilradical->value) << e.name;
    }
  }
}

TEST(Nilradical, DirectSumsDistribute) {
  const auto entries = corpus::standard_corpus();
  for (const auto& a : entries)
    for (const auto& b : entries) {
      if (a.algebra.dim() + b.algebra.dim() > 6) continue;
      const auto S = direct_sum(a.algebra, b.algebra);
      const std::size_t n = S.dim(), off = a.algebra.dim();
      EXPECT_EQ(nilradical(S).subspace, embed_summand(nilradical(a.algebra).subspace, 0, n) +
                                            embed_summand(nilradical(b.algebra).subspace, off, n))
          << a.name << " + " << b.name;
      EXPECT_EQ(radical(S).subspace, embed_summand(radical(a.algebra).subspace, 0, n) +
                                         embed_summand(radical(b.algebra).subspace, off, n))
          << a.name << " + " << b.name;
    }
}

TEST(Nilradical, FpPathUsesScan) {
  const auto L = *reduce(corpus::example1().algebra, FieldDesc::prime(3));
  const auto N = nilradical(L);
  EXPECT_EQ(N.method, NilradicalMethod::principal_ideal_scan);
  EXPECT_EQ(N.subspace, *reduce(coord(2, {1}), FieldDesc::prime(3)));
}

TEST(Certificates, FaultInjectionThrows) {
  // [x, x2] = x2 breaks the identity at (x, x, x).
  const auto bad = corpus::example1().algebra.with_constant(0, 1, 1, Scalar::one(Q));
  EXPECT_THROW(nilradical(bad), InternalInconsistency);
  EXPECT_THROW(radical(bad), InternalInconsistency);
  const auto bad_p = reduce(corpus::example1().algebra, FieldDesc::prime(3))
                         ->with_constant(0, 1, 1, Scalar::one(FieldDesc::prime(3)));
  EXPECT_THROW(nilradical(bad_p), InternalInconsistency);
}

TEST(Certificates, WrongAnswerRejected) {
  const auto L = corpus::example1().algebra;
  EXPECT_THROW(certify_nilradical(L, L.whole(), NilradicalMethod::trace_form_char0), InternalInconsistency);
  EXPECT_THROW(certify_nilradical(L, span_of(Q, 2, {{1, -1}}), NilradicalMethod::trace_form_char0),
               InternalInconsistency);
  const auto S = corpus::sl2().algebra;
  EXPECT_THROW(certify_radical(S, S.whole(), RadicalMethod::cartan_pullback), InternalInconsistency);
  // A solvable ideal that is too small fails the semisimplicity check.
  const auto A = corpus::affine2().algebra;
  EXPECT_THROW(certify_radical(A, coord(2, {0}), RadicalMethod::cartan_pullback), InternalInconsistency);
}

TEST(Frattini, NilpotentAndUnsupported) {
  EXPECT_EQ(frattini_ideal(corpus::heisenberg().algebra), coord(3, {2}));
  EXPECT_EQ(frattini_ideal(corpus::nilcyclic2().algebra), coord(2, {1}));
  EXPECT_TRUE(frattini_ideal(corpus::abelian(2).algebra).is_zero());
  EXPECT_THROW(frattini_ideal(corpus::example1().algebra), Unsupported);
}

TEST(FindComplement, Examples) {
  const auto s1 = find_complement_B(corpus::example1().algebra);
  ASSERT_TRUE(s1.subalgebra.has_value());
  EXPECT_EQ(*s1.subalgebra, span_of(Q, 2, {{1, -1}}));
  const auto s2 = find_complement_B(corpus::example2(2, 1).algebra);
  ASSERT_TRUE(s2.subalgebra.has_value());
  EXPECT_EQ(*s2.subalgebra, coord(3, {0, 2}));
}

TEST(FindComplement, FoundBSatisfiesPremises) {
  for (const auto& e : corpus::standard_corpus()) {
    const auto& L = e.algebra;
    const auto s = find_complement_B(L);
    if (!s.subalgebra) continue;
    const auto I = leibniz_kernel(L);
    EXPECT_TRUE(is_subalgebra(L, *s.subalgebra)) << e.name;
    EXPECT_TRUE((I + *s.subalgebra).is_full()) << e.name;
  }
}

TEST(FindComplement, ExhaustiveOverFp) {
  const auto L = *reduce(corpus::example1().algebra, FieldDesc::prime(3));
  const auto s = find_complement_B(L);
  EXPECT_TRUE(s.exhaustive);
  ASSERT_TRUE(s.subalgebra.has_value());
  EXPECT_EQ(s.subalgebra->dim(), 1u);
}

TEST(Theorem2, Example1) {
  const auto L = corpus::example1().algebra;
  const auto t = verify_theorem2(L, span_of(Q, 2, {{1, -1}}));
  EXPECT_TRUE(t.premises_ok());
  EXPECT_TRUE(t.formula_equal);
  EXPECT_FALSE(t.nilpotency_condition);
  EXPECT_FALSE(t.kernel_quotient_equal);
  EXPECT_TRUE(t.lhs.is_full());
  EXPECT_EQ(t.lhs.ambient_dim(), 1u);
  EXPECT_TRUE(t.projected_nilradical.is_zero());
  EXPECT_TRUE(t.to_report().ok());
}

TEST(Theorem2, Example2) {
  const auto L = corpus::example2(2, 1).algebra;
  const auto t = verify_theorem2(L, coord(3, {0, 2}));
  EXPECT_TRUE(t.formula_equal);
  EXPECT_FALSE(t.nilpotency_condition);
  EXPECT_FALSE(t.kernel_quotient_equal);
}

TEST(Theorem2, PremiseViolation) {
  const auto L = corpus::example1().algebra;
  EXPECT_THROW(verify_theorem2(L, span_of(Q, 2, {{1, 0}})), PremiseViolation);
  EXPECT_THROW(verify_theorem2(L, L.zero_subspace()), PremiseViolation);
}

TEST(Theorem2, CorpusFormulaAndEquivalence) {
  for (const auto& e : corpus::standard_corpus()) {
    const auto s = find_complement_B(e.algebra);
    if (!s.subalgebra) continue;
    const auto t = verify_theorem2(e.algebra, *s.subalgebra);
    EXPECT_TRUE(t.formula_equal) << e.name;
    EXPECT_EQ(t.nilpotency_condition, t.kernel_quotient_equal) << e.name;
  }
}

TEST(Theorem2, FpFlagsBasisLevel) {
  const auto L = *reduce(corpus::example1().algebra, FieldDesc::prime(3));
  const auto s = find_complement_B(L);
  ASSERT_TRUE(s.subalgebra.has_value());
  const auto t = verify_theorem2(L, *s.subalgebra);
  EXPECT_TRUE(t.formula_equal);
  EXPECT_TRUE(t.basis_level_only);
  EXPECT_FALSE(t.notes.empty());
}

TEST(Lemma1, NilcyclicApplies) {
  const auto r = verify_lemma1(corpus::nilcyclic2().algebra);
  EXPECT_EQ(r.verdict(), Verdict::pass);
  ASSERT_NE(r.find_check("N(L/I) = N(L)/I"), nullptr);
  EXPECT_TRUE(r.find_check("N(L/I) = N(L)/I")->ok);
}

TEST(Lemma1, Example1NotApplicable) {
  EXPECT_EQ(verify_lemma1(corpus::example1().algebra).verdict(), Verdict::not_applicable);
  const auto Lp = *reduce(corpus::example1().algebra, FieldDesc::prime(3));
  EXPECT_EQ(verify_lemma1(Lp).verdict(), Verdict::not_applicable);
}

TEST(Prop3, Examples) {
  EXPECT_TRUE(verify_prop3(corpus::example2(2, 1).algebra).ok());
  const auto r = verify_prop3(corpus::with_simple_summand(corpus::example1()).algebra);
  EXPECT_TRUE(r.ok());
  EXPECT_THROW(verify_prop3(*reduce(corpus::example1().algebra, FieldDesc::prime(3))), UnsupportedField);
}

TEST(Prop3, CorpusBothReadings) {
  for (const auto& e : corpus::standard_corpus()) {
    EXPECT_TRUE(verify_prop3(e.algebra).ok()) << e.name;
    EXPECT_TRUE(verify_corollary(e.algebra).ok()) << e.name;
  }
}

TEST(Corollary, Examples) {
  const auto r = verify_corollary(corpus::example1().algebra);
  EXPECT_TRUE(r.ok());
  ASSERT_NE(r.find_subspace("[R,R]"), nullptr);
  EXPECT_EQ(*r.find_subspace("[R,R]"), coord(2, {1}));
  EXPECT_TRUE(verify_corollary(corpus::sl2().algebra).ok());
  EXPECT_TRUE(verify_corollary(corpus::abelian(2).algebra).ok());
}
