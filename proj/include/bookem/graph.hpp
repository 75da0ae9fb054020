#pragma once

#include "bookem/error.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bookem {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u; // smaller endpoint
  Vertex v; // larger endpoint

  bool operator==(const Edge&) const = default;
  bool shares_endpoint(const Edge& other) const {
    return u == other.u || u == other.v || v == other.u || v == other.v;
  }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }
};

// Undirected simple graph. Edges are canonicalized (u < v) and sorted
// lexicographically, so EdgeId is stable for a given edge set.
class Graph {
public:
  Graph() = default;

  static Graph make(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }
  std::vector<Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }

  int max_degree() const;
  bool is_regular(int k) const;

  void set_label(Vertex v, const std::string& label);
  const std::string& label(Vertex v) const;
  bool has_labels() const { return !labels_.empty(); }
  std::optional<Vertex> vertex_by_label(const std::string& label) const;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::string> labels_; // empty, or one per vertex (possibly blank)
};

struct Bipartition {
  std::vector<int> side_of; // vertex -> 0/1
};

// Either a valid bipartition or an odd-cycle witness.
struct BipartitionResult {
  std::optional<Bipartition> bipartition;
  std::vector<Vertex> odd_cycle; // closed walk of odd length, first == last omitted

  bool ok() const { return bipartition.has_value(); }
};

BipartitionResult bipartition(const Graph& g);

bool is_connected(const Graph& g);

// Exhaustive check that no pair of vertices disconnects the graph. Intended
// for desk-scale instances only.
bool is_three_connected(const Graph& g);

// Named constructions from the source material.
Graph folkman();
Graph gray();

// heawood | cube | prism(k) | cycle(len) | complete_bipartite(a[,b]) |
// complete(n) | folkman | gray | truncated_octahedron
Graph named_graph(const std::string& name, std::optional<int> a = std::nullopt,
                  std::optional<int> b = std::nullopt);

std::vector<std::string> named_graph_names();

} // namespace bookem
