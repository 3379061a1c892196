#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "osw/vertex.hpp"

namespace osw {

// Hop distances from one source vertex, dense over vertex indices.
struct DistanceField {
  std::int32_t source = 0;
  std::vector<std::int32_t> dist;
};

// The n-octahedral graph G'_n: vertices are the integer points with
// |u1|+|u2|+|u3| = n, edges join points differing by at most 1 in every
// coordinate. Immutable after construction and safe to share across
// threads; BFS allocates its own working state.
class OctahedralGraph {
 public:
  // Throws std::invalid_argument unless n >= 1.
  explicit OctahedralGraph(int n);

  int n() const { return n_; }
  std::int32_t vertex_count() const {
    return static_cast<std::int32_t>(vertices_.size());
  }
  std::int64_t edge_count() const { return edge_count_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex vertex(std::int32_t index) const { return vertices_[index]; }

  // Index of u in canonical (lexicographic) order, or nullopt if u is not
  // a vertex of this graph.
  std::optional<std::int32_t> find(Vertex u) const;
  // Same, but throws std::out_of_range for unknown vertices.
  std::int32_t index_of(Vertex u) const;
  bool contains(Vertex u) const { return find(u).has_value(); }

  // Neighbor indices in ascending order. Size 4 at the six poles, 6
  // elsewhere.
  std::span<const std::int32_t> neighbors(std::int32_t index) const;
  std::vector<Vertex> neighbors(Vertex u) const;
  bool adjacent(std::int32_t a, std::int32_t b) const;
  std::int32_t degree(std::int32_t index) const;

  // Undirected edges as index pairs (i, j) with i < j, ascending.
  std::vector<std::pair<std::int32_t, std::int32_t>> edges() const;

  DistanceField bfs_distances(std::int32_t source) const;
  DistanceField bfs_distances(Vertex u) const;

  // The distance-i ring P_ui. Empty beyond the eccentricity of u.
  std::vector<Vertex> ring(Vertex u, int i) const;

 private:
  int n_;
  std::int64_t edge_count_ = 0;
  std::vector<Vertex> vertices_;            // lexicographic order
  std::vector<std::int32_t> adj_offsets_;   // CSR offsets, size |V|+1
  std::vector<std::int32_t> adj_;           // CSR neighbor indices
};

}  // namespace osw
