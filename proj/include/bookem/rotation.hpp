#pragma once

#include "bookem/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bookem {

struct DirectedEdge {
  Vertex from;
  Vertex to;
  EdgeId edge;

  bool operator==(const DirectedEdge&) const = default;
};

// Combinatorial embedding: a cyclic order of incident edges at every vertex.
// Rotations are inputs (hand-fixed for the named planar instances); nothing
// here computes an embedding from scratch.
struct RotationSystem {
  Graph graph;
  std::vector<std::vector<EdgeId>> rotation; // per vertex, cyclic

  // Validates that every vertex's sequence is a permutation of its incident
  // edges. Does not check planarity; faces() does, via Euler's formula.
  static RotationSystem make(Graph graph, std::vector<std::vector<EdgeId>> rotation);

  // Position of edge e in the cyclic order at v, and its successor.
  int index_at(Vertex v, EdgeId e) const;
  EdgeId next_at(Vertex v, EdgeId e) const;
};

struct Face {
  int id;
  std::vector<DirectedEdge> boundary;

  int length() const { return static_cast<int>(boundary.size()); }
};

// Face traversal of a connected embedded graph. Every directed edge lands in
// exactly one boundary; throws NotPlanarEmbedding unless V - E + F == 2.
std::vector<Face> faces(const RotationSystem& rs);

struct DualEdge {
  int left_face;  // face containing the directed edge (u -> v), u < v
  int right_face; // face containing (v -> u)
  EdgeId primal;
};

struct DualGraph {
  int face_count = 0;
  std::vector<DualEdge> dual_edges; // one per primal edge, indexed by EdgeId

  std::vector<int> face_degree() const;
};

DualGraph dual(const RotationSystem& rs);

// Face lookup table: for each edge, the face on each side.
// side 0 = face of (u -> v), side 1 = face of (v -> u), with u < v.
std::vector<std::array<int, 2>> face_of_edge(const std::vector<Face>& fs, const Graph& g);

// Hand-fixed planar rotations for the named Barnette instances:
// cube, prism(k), truncated_octahedron. Returns nullopt for other names.
std::optional<RotationSystem> named_rotation(const std::string& name,
                                             std::optional<int> a = std::nullopt);

RotationSystem prism_rotation(int k);
RotationSystem truncated_octahedron_rotation();
Graph truncated_octahedron();

} // namespace bookem
