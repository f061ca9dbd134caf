#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace leibniz;
using leibniz::ts::Q;
using leibniz::ts::span_of;

namespace {

LeibnizAlgebra ex1() { return corpus::example1().algebra; }

// Quotient table recomputed from representatives shifted by ideal elements.
LeibnizAlgebra shifted_quotient(const QuotientPresentation& qp, std::mt19937& rng) {
  const auto& L = qp.parent;
  std::vector<Vector> reps;
  for (const auto& s : qp.section) {
    Vector shift = zero_vector(L.field(), L.dim());
    for (const auto& g : qp.ideal.vectors()) shift = shift + ts::random_scalar(rng, L.field()) * g;
    reps.push_back(s + shift);
  }
  AlgebraBuilder b(L.field(), qp.quotient.labels());
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const Vector img = qp.project(L.bracket(reps[a], reps[c]));
      for (std::size_t k = 0; k < img.size(); ++k)
        if (!img[k].is_zero()) b.set(a, c, k, img[k]);
    }
  return b.build();
}

}  // namespace

TEST(CheckLeibniz, Example1Passes) {
  const auto L = ex1();
  EXPECT_TRUE(check_leibniz(L).ok());
  // Independent evaluation on all basis triples.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        EXPECT_TRUE(is_zero(ts::leibniz_defect(L, L.basis_vector(i), L.basis_vector(j), L.basis_vector(k))));
}

TEST(CheckLeibniz, BrokenTableReportsAllFailures) {
  const auto L = AlgebraBuilder(Q, {"e1", "e2"}).set(0, 0, 1, 1).set(0, 1, 0, 1).build();
  const auto failures = leibniz_failures(L);
  ASSERT_FALSE(failures.empty());
  EXPECT_EQ(failures.front().i, 0u);
  EXPECT_EQ(failures.front().j, 0u);
  EXPECT_EQ(failures.front().k, 0u);
  // Cross-check the failure set against direct evaluation.
  std::size_t expected = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        expected += !is_zero(ts::leibniz_defect(L, L.basis_vector(i), L.basis_vector(j), L.basis_vector(k)));
  EXPECT_EQ(failures.size(), expected);
  EXPECT_FALSE(check_leibniz(L).ok());
}

TEST(CheckLeibniz, CorpusPasses) {
  for (const auto& e : corpus::standard_corpus()) EXPECT_TRUE(check_leibniz(e.algebra).ok()) << e.name;
}

TEST(RightMult, Example1) {
  const auto L = ex1();
  const Matrix R1 = right_mult(L, L.basis_vector(0));
  // columns are images of e1, e2
  EXPECT_EQ(R1.column(0), make_vector(Q, {0, 1}));
  EXPECT_EQ(R1.column(1), make_vector(Q, {0, 1}));
  EXPECT_TRUE(right_mult(L, L.basis_vector(1)).is_zero());
  // M v = [v, x] for arbitrary v
  const Vector v = make_vector(Q, {3, -2});
  EXPECT_EQ(R1.apply(v), L.bracket(v, L.basis_vector(0)));
  EXPECT_EQ(left_mult(L, L.basis_vector(0)).apply(v), L.bracket(L.basis_vector(0), v));
}

TEST(Spans, BracketAndTwoSided) {
  const auto L = ex1();
  EXPECT_EQ(bracket_span(L, L.whole(), L.whole()), span_of(Q, 2, {{0, 1}}));
  const auto M = corpus::example2(2, 1).algebra;
  EXPECT_EQ(two_sided_span(M, M.whole(), M.whole()), span_of(Q, 3, {{0, 1, 0}}));
}

TEST(Ideals, Example1) {
  const auto L = ex1();
  EXPECT_TRUE(is_ideal(L, span_of(Q, 2, {{0, 1}})));
  EXPECT_FALSE(is_subalgebra(L, span_of(Q, 2, {{1, 0}})));
  EXPECT_TRUE(is_subalgebra(L, span_of(Q, 2, {{1, -1}})));
  EXPECT_FALSE(is_ideal(L, span_of(Q, 2, {{1, -1}})));
}

TEST(Ideals, ClosureExample2) {
  const auto M = corpus::example2(2, 1).algebra;
  EXPECT_EQ(ideal_closure(M, span_of(Q, 3, {{0, 0, 1}})), span_of(Q, 3, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(generated_subalgebra(M, span_of(Q, 3, {{0, 1, 1}})), span_of(Q, 3, {{0, 1, 0}, {0, 0, 1}}));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(leibniz_kernel(ex1()), span_of(Q, 2, {{0, 1}}));
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r = 0; r < n; ++r) {
      const auto e = corpus::example2(n, r);
      std::vector<Vector> gens;
      for (std::size_t i = r; i < n; ++i) gens.push_back(unit_vector(Q, n + 1, i));
      EXPECT_EQ(leibniz_kernel(e.algebra), Subspace::span(Q, n + 1, gens)) << e.name;
    }
}

TEST(Kernel, SpannedBySquaresOfRandomVectors) {
  // The kernel must contain every square, and random squares must span it.
  std::mt19937 rng(3);
  for (const auto& e : corpus::standard_corpus()) {
    const auto& L = e.algebra;
    const auto I = leibniz_kernel(L);
    std::vector<Vector> squares;
    for (int t = 0; t < 12; ++t) {
      const Vector x = ts::random_vector(rng, Q, L.dim());
      squares.push_back(L.bracket(x, x));
      EXPECT_TRUE(I.contains(squares.back())) << e.name;
    }
    EXPECT_EQ(Subspace::span(Q, L.dim(), squares), I) << e.name;
  }
}

TEST(Kernel, AnnihilatesFromTheLeftAndIsIdeal) {
  for (const auto& e : corpus::standard_corpus()) {
    const auto& L = e.algebra;
    const auto I = leibniz_kernel(L);
    EXPECT_TRUE(is_ideal(L, I)) << e.name;
    for (std::size_t a = 0; a < L.dim(); ++a)
      for (const auto& y : I.vectors()) EXPECT_TRUE(is_zero(L.bracket(L.basis_vector(a), y))) << e.name;
    EXPECT_TRUE(is_lie(liesation(L).quotient)) << e.name;
  }
}

TEST(Quotient, Example1ModKernel) {
  const auto q = liesation(ex1());
  EXPECT_EQ(q.quotient.dim(), 1u);
  EXPECT_TRUE(is_zero(q.quotient.product(0, 0)));
}

TEST(Quotient, Example2LiesationIsAbelian) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r = 0; r < n; ++r) {
      const auto q = liesation(corpus::example2(n, r).algebra);
      EXPECT_EQ(q.quotient.dim(), r + 1);
      EXPECT_EQ(bracket_span(q.quotient, q.quotient.whole(), q.quotient.whole()).dim(), 0u);
    }
}

TEST(Quotient, RejectsNonIdeal) {
  EXPECT_THROW(quotient(ex1(), span_of(Q, 2, {{1, 0}})), NotAnIdeal);
}

TEST(Quotient, PresentationInvariants) {
  std::mt19937 rng(7);
  for (const auto& e : corpus::standard_corpus()) {
    const auto& L = e.algebra;
    const auto q = liesation(L);
    // projection o section = identity; kernel of projection = ideal
    for (std::size_t a = 0; a < q.section.size(); ++a)
      EXPECT_EQ(q.project(q.section[a]), unit_vector(Q, q.quotient.dim(), a)) << e.name;
    EXPECT_EQ(kernel(q.projection), q.ideal) << e.name;
    EXPECT_EQ(shifted_quotient(q, rng), q.quotient) << e.name;
    // preimage of 0 is the ideal, preimage of everything is L
    EXPECT_EQ(q.preimage(q.quotient.zero_subspace()), q.ideal);
    EXPECT_TRUE(q.preimage(q.quotient.whole()).is_full());
  }
}

TEST(Liesation, IsLieFlag) {
  EXPECT_FALSE(is_lie(ex1()));
  EXPECT_TRUE(is_lie(corpus::sl2().algebra));
}

TEST(Series, Example1) {
  const auto L = ex1();
  const auto lcs = lower_central_series(L);
  ASSERT_EQ(lcs.size(), 3u);
  EXPECT_TRUE(lcs[0].is_full());
  EXPECT_EQ(lcs[1], span_of(Q, 2, {{0, 1}}));
  EXPECT_EQ(lcs[2], span_of(Q, 2, {{0, 1}}));
  const auto ds = derived_series(L);
  ASSERT_EQ(ds.size(), 3u);
  EXPECT_EQ(ds[1], span_of(Q, 2, {{0, 1}}));
  EXPECT_TRUE(ds[2].is_zero());
  EXPECT_FALSE(is_nilpotent(L));
  EXPECT_TRUE(is_solvable(L));
}

TEST(Series, MonotoneAndIdeals) {
  for (const auto& e : corpus::standard_corpus()) {
    const auto& L = e.algebra;
    const auto lcs = lower_central_series(L);
    for (std::size_t i = 0; i < lcs.size(); ++i) {
      EXPECT_TRUE(is_ideal(L, lcs[i])) << e.name;
      if (i) {
        EXPECT_TRUE(subspace_leq(lcs[i], lcs[i - 1])) << e.name;
      }
    }
    const auto ds = derived_series(L);
    for (std::size_t i = 1; i < ds.size(); ++i) {
      EXPECT_TRUE(subspace_leq(ds[i], ds[i - 1])) << e.name;
      const auto prev = restrict(L, ds[i - 1]);
      EXPECT_TRUE(is_ideal(prev.algebra, prev.pull(ds[i]))) << e.name;
    }
  }
}

TEST(Series, EngelCrossCheck) {
  for (const auto& e : corpus::standard_corpus()) {
    const auto& L = e.algebra;
    bool all_nil = true;
    for (std::size_t i = 0; i < L.dim(); ++i) {
      // Independent test: M^dim = 0.
      const Matrix M = right_mult(L, L.basis_vector(i));
      all_nil = all_nil && M.pow(L.dim()).is_zero();
      EXPECT_EQ(is_nilpotent_operator(M), M.pow(L.dim()).is_zero()) << e.name;
    }
    EXPECT_EQ(is_nilpotent(L), all_nil) << e.name;
    if (e.expected.nilpotent) {
      EXPECT_EQ(is_nilpotent(L), e.expected.nilpotent->value) << e.name;
    }
    if (e.expected.solvable) {
      EXPECT_EQ(is_solvable(L), e.expected.solvable->value) << e.name;
    }
  }
}

TEST(DirectSum, Example1PlusSl2) {
  const auto S = direct_sum(ex1(), corpus::sl2().algebra);
  EXPECT_EQ(S.dim(), 5u);
  EXPECT_EQ(leibniz_kernel(S), span_of(Q, 5, {{0, 1, 0, 0, 0}}));
  EXPECT_TRUE(check_leibniz(S).ok());
}

TEST(DirectSum, KernelAndSeriesDistribute) {
  const auto corpus_entries = corpus::standard_corpus();
  for (const auto& a : corpus_entries)
    for (const auto& b : corpus_entries) {
      if (a.algebra.dim() + b.algebra.dim() > 6) continue;
      const auto S = direct_sum(a.algebra, b.algebra);
      const std::size_t n = S.dim(), off = a.algebra.dim();
      EXPECT_EQ(leibniz_kernel(S),
                embed_summand(leibniz_kernel(a.algebra), 0, n) + embed_summand(leibniz_kernel(b.algebra), off, n));
      const auto la = lower_central_series(a.algebra), lb = lower_central_series(b.algebra);
      const auto ls = lower_central_series(S);
      for (std::size_t i = 0; i < ls.size(); ++i) {
        const auto& ta = la[std::min(i, la.size() - 1)];
        const auto& tb = lb[std::min(i, lb.size() - 1)];
        EXPECT_EQ(ls[i], embed_summand(ta, 0, n) + embed_summand(tb, off, n)) << a.name << " + " << b.name;
      }
      EXPECT_EQ(center(S), embed_summand(center(a.algebra), 0, n) + embed_summand(center(b.algebra), off, n));
    }
}

TEST(DirectSum, LabelCollisionsRenamed) {
  const auto S = direct_sum(ex1(), ex1());
  EXPECT_EQ(S.label(2), "x'");
  EXPECT_EQ(S.label(3), "x2'");
}

TEST(Restrict, Example1Diagonal) {
  const auto L = ex1();
  const auto r = restrict(L, span_of(Q, 2, {{1, -1}}));
  EXPECT_EQ(r.algebra.dim(), 1u);
  EXPECT_TRUE(is_zero(r.algebra.product(0, 0)));
  EXPECT_EQ(r.embed(make_vector(Q, {1})), make_vector(Q, {1, -1}));
  EXPECT_THROW(restrict(L, span_of(Q, 2, {{1, 0}})), NotASubalgebra);
}

TEST(Center, Examples) {
  EXPECT_TRUE(center(ex1()).is_zero());
  EXPECT_EQ(center(corpus::heisenberg().algebra), span_of(Q, 3, {{0, 0, 1}}));
  EXPECT_TRUE(center(corpus::abelian(3).algebra).is_full());
  EXPECT_TRUE(center(corpus::sl2().algebra).is_zero());
}

TEST(Reduce, ModP) {
  const auto L = corpus::sl2().algebra;
  const auto L2 = reduce(L, FieldDesc::prime(2));
  ASSERT_TRUE(L2.has_value());
  EXPECT_TRUE(is_nilpotent(*L2));
  const auto half = AlgebraBuilder(Q, {"a", "b"}).set(1, 0, 1, 1, 2).build();
  EXPECT_FALSE(reduce(half, FieldDesc::prime(2)).has_value());
  EXPECT_TRUE(reduce(half, FieldDesc::prime(3)).has_value());
}

TEST(FaultInjection, WithConstantBreaksIdentity) {
  const auto L = ex1().with_constant(0, 1, 1, Scalar::one(Q));
  EXPECT_FALSE(check_leibniz(L).ok());
}
