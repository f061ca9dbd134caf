#pragma once

// Deterministic builders for a small zoo of Leibniz algebras over Q, each
// carrying the invariants known for it and where each value comes from.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/exactlin.hpp"

namespace leibniz::corpus {

enum class Provenance { published, trivial, derived };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::published:
      return "published";
    case Provenance::trivial:
      return "trivial";
    case Provenance::derived:
      return "derived";
  }
  return "?";
}

template <typename T>
struct Tagged {
  T value;
  Provenance source;
};

/// Known invariants. Subspaces are in the algebra's coordinates, except
/// liesation_nilradical which is in the coordinates of liesation(L).quotient.
struct Expectations {
  std::optional<Tagged<Subspace>> kernel;
  std::optional<Tagged<Subspace>> nilradical;
  std::optional<Tagged<Subspace>> radical;
  std::optional<Tagged<Subspace>> liesation_nilradical;
  std::optional<Tagged<Subspace>> frattini;
  std::optional<Tagged<bool>> solvable;
  std::optional<Tagged<bool>> nilpotent;
  std::optional<Tagged<bool>> lie;
};

struct CorpusEntry {
  std::string name;
  LeibnizAlgebra algebra;
  Expectations expected;
};

namespace detail {

inline const FieldDesc Q = FieldDesc::rationals();

inline std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

inline Subspace coordinate_span(std::size_t n, const std::vector<std::size_t>& indices) {
  std::vector<Vector> rows;
  for (std::size_t i : indices) rows.push_back(unit_vector(Q, n, i));
  return Subspace::span(Q, n, rows);
}

}  // namespace detail

/// Two-dimensional solvable cyclic algebra: [x, x] = x2, [x2, x] = x2.
inline CorpusEntry example1() {
  using detail::Q;
  LeibnizAlgebra L = AlgebraBuilder(Q, {"x", "x2"}).set(0, 0, 1, 1).set(1, 0, 1, 1).build();
  Expectations e;
  e.kernel = {detail::coordinate_span(2, {1}), Provenance::published};
  e.nilradical = {detail::coordinate_span(2, {1}), Provenance::published};
  e.liesation_nilradical = {Subspace::full(Q, 1), Provenance::published};
  e.radical = {Subspace::full(Q, 2), Provenance::derived};
  e.solvable = {true, Provenance::derived};
  e.nilpotent = {false, Provenance::derived};
  e.lie = {false, Provenance::published};
  return {"example1", std::move(L), std::move(e)};
}

/// Basis x1..xn, y with [x_i, y] = x_i for r < i <= n, other products zero.
inline CorpusEntry example2(std::size_t n, std::size_t r) {
  using detail::Q;
  if (n == 0 || r >= n) throw std::invalid_argument("example2 needs 0 <= r < n");
  auto labels = detail::numbered("x", n);
  labels.push_back("y");
  AlgebraBuilder b(Q, labels);
  for (std::size_t i = r; i < n; ++i) b.set(i, n, i, 1);
  std::vector<std::size_t> kernel_idx, x_idx;
  for (std::size_t i = r; i < n; ++i) kernel_idx.push_back(i);
  for (std::size_t i = 0; i < n; ++i) x_idx.push_back(i);
  Expectations e;
  e.kernel = {detail::coordinate_span(n + 1, kernel_idx), Provenance::published};
  e.nilradical = {detail::coordinate_span(n + 1, x_idx), Provenance::published};
  e.liesation_nilradical = {Subspace::full(Q, r + 1), Provenance::published};
  e.radical = {Subspace::full(Q, n + 1), Provenance::derived};
  e.solvable = {true, Provenance::derived};
  e.nilpotent = {false, Provenance::derived};
  e.lie = {false, Provenance::derived};
  return {"example2:" + std::to_string(n) + ":" + std::to_string(r), b.build(), std::move(e)};
}

/// [e, f] = h, [h, e] = 2e, [h, f] = -2f, antisymmetric.
inline CorpusEntry sl2() {
  using detail::Q;
  LeibnizAlgebra L = AlgebraBuilder(Q, {"e", "f", "h"})
                         .set_antisymmetric(0, 1, 2, 1)
                         .set_antisymmetric(2, 0, 0, 2)
                         .set_antisymmetric(2, 1, 1, -2)
                         .build();
  Expectations e;
  e.kernel = {Subspace::zero(Q, 3), Provenance::trivial};
  e.nilradical = {Subspace::zero(Q, 3), Provenance::derived};
  e.radical = {Subspace::zero(Q, 3), Provenance::derived};
  e.liesation_nilradical = {Subspace::zero(Q, 3), Provenance::derived};
  e.solvable = {false, Provenance::derived};
  e.nilpotent = {false, Provenance::derived};
  e.lie = {true, Provenance::trivial};
  return {"sl2", std::move(L), std::move(e)};
}

/// [e1, e2] = e3 = -[e2, e1].
inline CorpusEntry heisenberg() {
  using detail::Q;
  LeibnizAlgebra L = AlgebraBuilder(Q, {"e1", "e2", "e3"}).set_antisymmetric(0, 1, 2, 1).build();
  Expectations e;
  e.kernel = {Subspace::zero(Q, 3), Provenance::trivial};
  e.nilradical = {Subspace::full(Q, 3), Provenance::trivial};
  e.radical = {Subspace::full(Q, 3), Provenance::trivial};
  e.liesation_nilradical = {Subspace::full(Q, 3), Provenance::trivial};
  e.frattini = {detail::coordinate_span(3, {2}), Provenance::derived};
  e.solvable = {true, Provenance::trivial};
  e.nilpotent = {true, Provenance::trivial};
  e.lie = {true, Provenance::trivial};
  return {"heisenberg", std::move(L), std::move(e)};
}

inline CorpusEntry abelian(std::size_t n) {
  using detail::Q;
  if (n == 0) throw std::invalid_argument("abelian needs n >= 1");
  Expectations e;
  e.kernel = {Subspace::zero(Q, n), Provenance::trivial};
  e.nilradical = {Subspace::full(Q, n), Provenance::trivial};
  e.radical = {Subspace::full(Q, n), Provenance::trivial};
  e.liesation_nilradical = {Subspace::full(Q, n), Provenance::trivial};
  e.frattini = {Subspace::zero(Q, n), Provenance::trivial};
  e.solvable = {true, Provenance::trivial};
  e.nilpotent = {true, Provenance::trivial};
  e.lie = {true, Provenance::trivial};
  return {"abelian:" + std::to_string(n), AlgebraBuilder(Q, detail::numbered("e", n)).build(), std::move(e)};
}

/// Two-dimensional non-abelian Lie algebra: [x, y] = x = -[y, x].
inline CorpusEntry affine2() {
  using detail::Q;
  LeibnizAlgebra L = AlgebraBuilder(Q, {"x", "y"}).set_antisymmetric(0, 1, 0, 1).build();
  Expectations e;
  e.kernel = {Subspace::zero(Q, 2), Provenance::trivial};
  e.nilradical = {detail::coordinate_span(2, {0}), Provenance::derived};
  e.radical = {Subspace::full(Q, 2), Provenance::derived};
  e.liesation_nilradical = {detail::coordinate_span(2, {0}), Provenance::derived};
  e.solvable = {true, Provenance::derived};
  e.nilpotent = {false, Provenance::derived};
  e.lie = {true, Provenance::trivial};
  return {"affine2", std::move(L), std::move(e)};
}

/// Nilpotent cyclic algebra: [x, x] = x2, all other products zero.
inline CorpusEntry nilcyclic2() {
  using detail::Q;
  LeibnizAlgebra L = AlgebraBuilder(Q, {"x", "x2"}).set(0, 0, 1, 1).build();
  Expectations e;
  e.kernel = {detail::coordinate_span(2, {1}), Provenance::derived};
  e.nilradical = {Subspace::full(Q, 2), Provenance::derived};
  e.radical = {Subspace::full(Q, 2), Provenance::derived};
  e.liesation_nilradical = {Subspace::full(Q, 1), Provenance::derived};
  e.frattini = {detail::coordinate_span(2, {1}), Provenance::derived};
  e.solvable = {true, Provenance::derived};
  e.nilpotent = {true, Provenance::derived};
  e.lie = {false, Provenance::trivial};
  return {"nilcyclic2", std::move(L), std::move(e)};
}

/// Abelian x1, x2, x3 extended by t acting as a cyclic permutation:
/// [x1, t] = x2, [x2, t] = x3, [x3, t] = x1, antisymmetric. R_t has the cube
/// roots of unity as eigenvalues, so its trace form vanishes identically even
/// though t is not ad-nilpotent.
inline CorpusEntry permutation3() {
  using detail::Q;
  LeibnizAlgebra L = AlgebraBuilder(Q, {"x1", "x2", "x3", "t"})
                         .set_antisymmetric(0, 3, 1, 1)
                         .set_antisymmetric(1, 3, 2, 1)
                         .set_antisymmetric(2, 3, 0, 1)
                         .build();
  Expectations e;
  e.kernel = {Subspace::zero(Q, 4), Provenance::trivial};
  e.nilradical = {detail::coordinate_span(4, {0, 1, 2}), Provenance::derived};
  e.radical = {Subspace::full(Q, 4), Provenance::derived};
  e.liesation_nilradical = {detail::coordinate_span(4, {0, 1, 2}), Provenance::derived};
  e.solvable = {true, Provenance::derived};
  e.nilpotent = {false, Provenance::derived};
  e.lie = {true, Provenance::trivial};
  return {"permutation3", std::move(L), std::move(e)};
}

/// entry (+) sl2. Kernel, nilradical and radical stay on the first summand
/// since sl2 has none of them.
inline CorpusEntry with_simple_summand(const CorpusEntry& entry) {
  const std::size_t n = entry.algebra.dim();
  const std::size_t total = n + 3;
  const auto move_over = [&](const std::optional<Tagged<Subspace>>& s) -> std::optional<Tagged<Subspace>> {
    if (!s) return std::nullopt;
    return Tagged<Subspace>{embed_summand(s->value, 0, total), Provenance::derived};
  };
  Expectations e;
  e.kernel = move_over(entry.expected.kernel);
  e.nilradical = move_over(entry.expected.nilradical);
  e.radical = move_over(entry.expected.radical);
  if (entry.expected.liesation_nilradical) {
    const Subspace& q = entry.expected.liesation_nilradical->value;
    e.liesation_nilradical = {embed_summand(q, 0, q.ambient_dim() + 3), Provenance::derived};
  }
  e.solvable = {false, Provenance::derived};
  e.nilpotent = {false, Provenance::derived};
  if (entry.expected.lie) e.lie = {entry.expected.lie->value, Provenance::derived};
  return {entry.name + "+sl2", direct_sum(entry.algebra, sl2().algebra), std::move(e)};
}

/// The curated corpus used by the property and acceptance suites.
inline std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back(example1());
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t r = 0; r < n; ++r) out.push_back(example2(n, r));
  out.push_back(sl2());
  out.push_back(heisenberg());
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(abelian(n));
  out.push_back(affine2());
  out.push_back(nilcyclic2());
  out.push_back(permutation3());
  out.push_back(with_simple_summand(example1()));
  out.push_back(with_simple_summand(example2(2, 1)));
  out.push_back(with_simple_summand(nilcyclic2()));
  out.push_back(with_simple_summand(affine2()));
  return out;
}

/// Builds an entry from its name: "example1", "example2:n:r", "sl2",
/// "heisenberg", "abelian:n", "affine2", "nilcyclic2", "permutation3", and
/// "<name>+sl2" for the direct sum with sl2.
inline CorpusEntry by_name(const std::string& name) {
  if (name.size() > 4 && name.compare(name.size() - 4, 4, "+sl2") == 0)
    return with_simple_summand(by_name(name.substr(0, name.size() - 4)));
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = name.find(':', start);
    parts.push_back(name.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  const auto count = [&](std::size_t i) -> std::size_t {
    const std::string& s = parts.at(i);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
      throw std::invalid_argument("bad parameter '" + s + "' in corpus name '" + name + "'");
    return static_cast<std::size_t>(std::stoul(s));
  };
  const std::string& head = parts[0];
  if (head == "example1" && parts.size() == 1) return example1();
  if (head == "example2" && parts.size() == 3) return example2(count(1), count(2));
  if (head == "sl2" && parts.size() == 1) return sl2();
  if (head == "heisenberg" && parts.size() == 1) return heisenberg();
  if (head == "abelian" && parts.size() == 2) return abelian(count(1));
  if (head == "affine2" && parts.size() == 1) return affine2();
  if (head == "nilcyclic2" && parts.size() == 1) return nilcyclic2();
  if (head == "permutation3" && parts.size() == 1) return permutation3();
  throw std::invalid_argument("unknown corpus entry '" + name + "'");
}

}  // namespace leibniz::corpus
