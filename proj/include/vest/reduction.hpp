#pragma once

#include <cstddef>
#include <vector>

#include "vest/error.hpp"
#include "vest/graph.hpp"
#include "vest/instance.hpp"
#include "vest/linalg.hpp"

namespace vest {

/// Coordinates of the reduced state space: three per vertex, then one
/// constant coordinate c that stays 1.
struct CoordinateLayout {
  std::size_t vertices = 0;

  // 1 while u is undominated.
  std::size_t u1(std::size_t u) const noexcept { return 3 * u; }
  // Becomes 1 once M_u has been applied twice.
  std::size_t u2(std::size_t u) const noexcept { return 3 * u + 1; }
  // Becomes 1 once M_u has been applied.
  std::size_t u3(std::size_t u) const noexcept { return 3 * u + 2; }
  std::size_t c() const noexcept { return 3 * vertices; }
  std::size_t dimension() const noexcept { return 3 * vertices + 1; }

  friend bool operator==(const CoordinateLayout&, const CoordinateLayout&) = default;
};

inline CoordinateLayout coordinate_layout(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::empty_graph, "the reduction needs at least one vertex");
  return CoordinateLayout{n};
}

inline Vector build_initial_vector(const CoordinateLayout& layout) {
  std::vector<Rational> v(layout.dimension());
  for (std::size_t u = 0; u < layout.vertices; ++u) v[layout.u1(u)] = 1;
  v[layout.c()] = 1;
  return Vector(std::move(v));
}

/// M_u: zeroes w_1 for every w in N[u], sends u_3 -> u_2 and c -> u_3, and
/// is the identity on every other coordinate.
inline Matrix build_vertex_matrix(const Graph& g, const CoordinateLayout& layout, std::size_t u) {
  g.check_vertex(u);
  const std::size_t d = layout.dimension();
  const VertexSet dominated = closed_neighborhood(g, u);
  std::vector<FunctionalMatrix::RowAction> rows(d);
  for (std::size_t w = 0; w < layout.vertices; ++w) {
    if (!dominated.test(w)) rows[layout.u1(w)] = layout.u1(w);
    rows[layout.u2(w)] = layout.u2(w);
    rows[layout.u3(w)] = layout.u3(w);
  }
  rows[layout.u2(u)] = layout.u3(u);
  rows[layout.u3(u)] = layout.c();
  rows[layout.c()] = layout.c();
  return FunctionalMatrix(std::move(rows)).to_matrix();
}

/// 2n x d; row 2u picks u_1, row 2u+1 picks u_2.
inline Matrix build_selector(const CoordinateLayout& layout) {
  std::vector<Matrix::Row> rows(2 * layout.vertices);
  for (std::size_t u = 0; u < layout.vertices; ++u) {
    rows[2 * u].push_back({layout.u1(u), Rational(1)});
    rows[2 * u + 1].push_back({layout.u2(u), Rational(1)});
  }
  const std::size_t h = rows.size();
  return Matrix(h, layout.dimension(), std::move(rows));
}

struct ReducedInstance {
  VestInstance instance;
  CoordinateLayout layout;
  std::size_t vertex_count = 0;
};

/// Compiles a dominating-set instance into a VEST instance whose M_k equals
/// k! times the number of k-element dominating sets. Transformation i is M_i.
inline ReducedInstance reduce(const Graph& g, Semiring semiring) {
  const CoordinateLayout layout = coordinate_layout(g.vertex_count());
  std::vector<Matrix> matrices;
  matrices.reserve(layout.vertices);
  for (std::size_t u = 0; u < layout.vertices; ++u) matrices.push_back(build_vertex_matrix(g, layout, u));
  return ReducedInstance{VestInstance(semiring, build_initial_vector(layout), std::move(matrices), build_selector(layout)),
                         layout, layout.vertices};
}

}  // namespace vest
