#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "histlab/graph.hpp"

namespace histlab {

// Structural role of a vertex in a constructed counterexample:
//   CoreHub       the core vertex carrying the tail clique
//   Core          the other core-clique vertices, one per pendant block
//   PendantAnchor the pendant-clique vertex joined to its core vertex
//   PendantBody   remaining pendant-clique vertices
//   TailAnchor    the tail-clique vertex joined to the hub
//   TailBody      remaining tail-clique vertices
enum class Role : std::uint8_t {
  CoreHub,
  Core,
  PendantAnchor,
  PendantBody,
  TailAnchor,
  TailBody,
};

inline std::string_view role_name(Role r) {
  switch (r) {
    case Role::CoreHub: return "core_hub";
    case Role::Core: return "core";
    case Role::PendantAnchor: return "pendant_anchor";
    case Role::PendantBody: return "pendant_body";
    case Role::TailAnchor: return "tail_anchor";
    case Role::TailBody: return "tail_body";
  }
  throw std::logic_error("unknown role");
}

inline std::optional<Role> role_from_name(std::string_view name) {
  for (Role r : {Role::CoreHub, Role::Core, Role::PendantAnchor, Role::PendantBody,
                 Role::TailAnchor, Role::TailBody})
    if (role_name(r) == name) return r;
  return std::nullopt;
}

// Per-vertex role tags for a counterexample graph. block ties a Core vertex,
// its pendant clique and that clique's anchor together (blocks are numbered
// 1..d-1); hub and tail roles carry block 0.
struct RoleLabels {
  std::vector<Role> role;
  std::vector<int> block;

  int vertex_count() const { return static_cast<int>(role.size()); }

  // d = size of the core clique (hub plus one Core vertex per pendant block).
  int core_size() const {
    int cores = 0;
    for (Role r : role)
      if (r == Role::Core) ++cores;
    return cores + 1;
  }

  std::vector<VertexId> core_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
      if (role[static_cast<std::size_t>(v)] == Role::CoreHub ||
          role[static_cast<std::size_t>(v)] == Role::Core)
        out.push_back(v);
    return out;
  }

  // The d anchor edges (core vertex, pendant anchor) plus (hub, tail anchor);
  // these are exactly the bridges forced into every spanning tree.
  std::vector<Edge> anchor_edges() const {
    const int n = vertex_count();
    VertexId hub = -1;
    std::vector<VertexId> core_by_block(static_cast<std::size_t>(n) + 1, -1);
    for (VertexId v = 0; v < n; ++v) {
      const Role r = role[static_cast<std::size_t>(v)];
      if (r == Role::CoreHub) hub = v;
      if (r == Role::Core) {
        const int b = block[static_cast<std::size_t>(v)];
        if (b < 1 || b > n) throw std::invalid_argument("role labels: core block out of range");
        core_by_block[static_cast<std::size_t>(b)] = v;
      }
    }
    if (hub < 0) throw std::invalid_argument("role labels: missing core hub");
    std::vector<Edge> out;
    for (VertexId v = 0; v < n; ++v) {
      const Role r = role[static_cast<std::size_t>(v)];
      if (r == Role::PendantAnchor) {
        const int b = block[static_cast<std::size_t>(v)];
        if (b < 1 || b > n || core_by_block[static_cast<std::size_t>(b)] < 0)
          throw std::invalid_argument("role labels: pendant anchor without matching core vertex");
        out.emplace_back(core_by_block[static_cast<std::size_t>(b)], v);
      } else if (r == Role::TailAnchor) {
        out.emplace_back(hub, v);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Structural consistency against the host graph: role counts, block links
  // and the presence of every anchor edge. Throws on a mismatch.
  void validate(const Graph& g) const {
    if (vertex_count() != g.vertex_count())
      throw std::invalid_argument("role labels: vertex count does not match graph");
    if (block.size() != role.size())
      throw std::invalid_argument("role labels: block vector size mismatch");
    int hubs = 0, cores = 0, pendant_anchors = 0, tail_anchors = 0;
    for (Role r : role) {
      if (r == Role::CoreHub) ++hubs;
      if (r == Role::Core) ++cores;
      if (r == Role::PendantAnchor) ++pendant_anchors;
      if (r == Role::TailAnchor) ++tail_anchors;
    }
    if (hubs != 1) throw std::invalid_argument("role labels: need exactly one core hub");
    if (tail_anchors != 1) throw std::invalid_argument("role labels: need exactly one tail anchor");
    if (cores < 1 || pendant_anchors != cores)
      throw std::invalid_argument("role labels: core / pendant anchor counts inconsistent");
    for (const Edge& e : anchor_edges())
      if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("role labels: anchor edge missing from graph");
  }
};

}  // namespace histlab
