#include "osw/octagraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace osw {

OctahedralGraph::OctahedralGraph(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("octahedral graph size parameter must be >= 1, got " +
                                std::to_string(n));
  }

  // Enumerate vertices directly in lexicographic order: u1 ascending, then
  // u2 over the remaining L1 budget, then u3 = +-(n - |u1| - |u2|).
  vertices_.reserve(static_cast<std::size_t>(4) * n * n + 2);
  for (int u1 = -n; u1 <= n; ++u1) {
    const int b1 = n - std::abs(u1);
    for (int u2 = -b1; u2 <= b1; ++u2) {
      const int r = b1 - std::abs(u2);
      if (r > 0) vertices_.push_back({u1, u2, -r});
      vertices_.push_back({u1, u2, r});
    }
  }

  // Adjacency: each vertex has at most 26 coordinate-offset candidates;
  // keep the ones that land on the surface.
  const auto nv = static_cast<std::int32_t>(vertices_.size());
  adj_offsets_.assign(static_cast<std::size_t>(nv) + 1, 0);
  adj_.reserve(static_cast<std::size_t>(12) * n * n * 2);
  for (std::int32_t i = 0; i < nv; ++i) {
    const Vertex v = vertices_[i];
    for (int d1 = -1; d1 <= 1; ++d1) {
      for (int d2 = -1; d2 <= 1; ++d2) {
        for (int d3 = -1; d3 <= 1; ++d3) {
          if (d1 == 0 && d2 == 0 && d3 == 0) continue;
          const auto j = find({v.u1 + d1, v.u2 + d2, v.u3 + d3});
          if (j) adj_.push_back(*j);
        }
      }
    }
    adj_offsets_[i + 1] = static_cast<std::int32_t>(adj_.size());
    std::sort(adj_.begin() + adj_offsets_[i], adj_.end());
  }
  edge_count_ = static_cast<std::int64_t>(adj_.size()) / 2;
}

std::optional<std::int32_t> OctahedralGraph::find(Vertex u) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), u);
  if (it == vertices_.end() || *it != u) return std::nullopt;
  return static_cast<std::int32_t>(it - vertices_.begin());
}

std::int32_t OctahedralGraph::index_of(Vertex u) const {
  const auto idx = find(u);
  if (!idx) {
    throw std::out_of_range("vertex (" + std::to_string(u.u1) + "," +
                            std::to_string(u.u2) + "," + std::to_string(u.u3) +
                            ") is not on the " + std::to_string(n_) +
                            "-octahedron");
  }
  return *idx;
}

std::span<const std::int32_t> OctahedralGraph::neighbors(std::int32_t index) const {
  return {adj_.data() + adj_offsets_[index],
          adj_.data() + adj_offsets_[index + 1]};
}

std::vector<Vertex> OctahedralGraph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  for (const std::int32_t j : neighbors(index_of(u))) out.push_back(vertices_[j]);
  return out;
}

bool OctahedralGraph::adjacent(std::int32_t a, std::int32_t b) const {
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::int32_t OctahedralGraph::degree(std::int32_t index) const {
  return adj_offsets_[index + 1] - adj_offsets_[index];
}

std::vector<std::pair<std::int32_t, std::int32_t>> OctahedralGraph::edges() const {
  std::vector<std::pair<std::int32_t, std::int32_t>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (std::int32_t i = 0; i < vertex_count(); ++i) {
    for (const std::int32_t j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

DistanceField OctahedralGraph::bfs_distances(std::int32_t source) const {
  DistanceField field;
  field.source = source;
  field.dist.assign(vertices_.size(), -1);
  field.dist[source] = 0;
  std::vector<std::int32_t> queue;
  queue.reserve(vertices_.size());
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t u = queue[head];
    const std::int32_t du = field.dist[u];
    for (const std::int32_t w : neighbors(u)) {
      if (field.dist[w] < 0) {
        field.dist[w] = du + 1;
        queue.push_back(w);
      }
    }
  }
  return field;
}

DistanceField OctahedralGraph::bfs_distances(Vertex u) const {
  return bfs_distances(index_of(u));
}

std::vector<Vertex> OctahedralGraph::ring(Vertex u, int i) const {
  if (i < 1) {
    throw std::invalid_argument("ring distance must be >= 1, got " +
                                std::to_string(i));
  }
  const DistanceField field = bfs_distances(index_of(u));
  std::vector<Vertex> out;
  for (std::int32_t j = 0; j < vertex_count(); ++j) {
    if (field.dist[j] == i) out.push_back(vertices_[j]);
  }
  return out;
}

}  // namespace osw
