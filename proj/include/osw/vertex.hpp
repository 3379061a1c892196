#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>

namespace osw {

// Integer lattice point on the L1-sphere of radius n (the octahedron
// surface). Ordering is lexicographic on (u1, u2, u3); vertex indices in
// OctahedralGraph follow this order.
struct Vertex {
  int u1 = 0;
  int u2 = 0;
  int u3 = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr std::int64_t dot(Vertex a, Vertex b) {
  return static_cast<std::int64_t>(a.u1) * b.u1 +
         static_cast<std::int64_t>(a.u2) * b.u2 +
         static_cast<std::int64_t>(a.u3) * b.u3;
}

constexpr std::int64_t norm1(Vertex v) {
  return std::abs(static_cast<std::int64_t>(v.u1)) +
         std::abs(static_cast<std::int64_t>(v.u2)) +
         std::abs(static_cast<std::int64_t>(v.u3));
}

constexpr std::int64_t norm2_squared(Vertex v) { return dot(v, v); }

inline double norm(Vertex v) {
  return std::sqrt(static_cast<double>(norm2_squared(v)));
}

constexpr bool is_zero(Vertex v) { return v.u1 == 0 && v.u2 == 0 && v.u3 == 0; }

}  // namespace osw
