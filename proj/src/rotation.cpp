#include "bookem/rotation.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace bookem {

RotationSystem RotationSystem::make(Graph graph, std::vector<std::vector<EdgeId>> rotation) {
  require(static_cast<int>(rotation.size()) == graph.vertex_count(), ErrorKind::InvalidRotation,
          "one rotation per vertex expected");
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    std::vector<EdgeId> expected = graph.incident(v);
    std::vector<EdgeId> got = rotation[v];
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    require(expected == got, ErrorKind::InvalidRotation,
            "rotation at vertex " + std::to_string(v) + " is not a permutation of incident edges");
  }
  return RotationSystem{std::move(graph), std::move(rotation)};
}

int RotationSystem::index_at(Vertex v, EdgeId e) const {
  const auto& rot = rotation[v];
  for (int i = 0; i < static_cast<int>(rot.size()); ++i)
    if (rot[i] == e) return i;
  fail(ErrorKind::InvalidRotation, "edge not in rotation at vertex " + std::to_string(v));
}

EdgeId RotationSystem::next_at(Vertex v, EdgeId e) const {
  const auto& rot = rotation[v];
  return rot[(index_at(v, e) + 1) % rot.size()];
}

std::vector<Face> faces(const RotationSystem& rs) {
  const Graph& g = rs.graph;
  require(is_connected(g), ErrorKind::NotPlanarEmbedding, "face traversal needs a connected graph");
  const int m = g.edge_count();

  // Directed edge index: 2e for (u -> v), 2e+1 for (v -> u), with u < v.
  auto dir_index = [&](Vertex from, EdgeId e) {
    return 2 * e + (g.edge(e).u == from ? 0 : 1);
  };

  std::vector<bool> used(2 * m, false);
  std::vector<Face> result;
  for (EdgeId e0 = 0; e0 < m; ++e0) {
    for (int side = 0; side < 2; ++side) {
      int start = 2 * e0 + side;
      if (used[start]) continue;
      Face face;
      face.id = static_cast<int>(result.size());
      Vertex from = side == 0 ? g.edge(e0).u : g.edge(e0).v;
      EdgeId e = e0;
      while (true) {
        int idx = dir_index(from, e);
        if (used[idx]) break;
        used[idx] = true;
        Vertex to = g.edge(e).other(from);
        face.boundary.push_back({from, to, e});
        // Leave `to` along the rotation successor of the arriving edge.
        EdgeId next = rs.next_at(to, e);
        from = to;
        e = next;
      }
      require(!face.boundary.empty() && face.boundary.front().from ==
                  face.boundary.back().to,
              ErrorKind::InternalError, "face walk did not close");
      result.push_back(std::move(face));
    }
  }

  const int euler = g.vertex_count() - m + static_cast<int>(result.size());
  require(euler == 2, ErrorKind::NotPlanarEmbedding,
          "V - E + F = " + std::to_string(euler) + ", expected 2");
  return result;
}

std::vector<std::array<int, 2>> face_of_edge(const std::vector<Face>& fs, const Graph& g) {
  std::vector<std::array<int, 2>> table(g.edge_count(), {-1, -1});
  for (const Face& f : fs) {
    for (const DirectedEdge& d : f.boundary) {
      int side = g.edge(d.edge).u == d.from ? 0 : 1;
      table[d.edge][side] = f.id;
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    require(table[e][0] >= 0 && table[e][1] >= 0, ErrorKind::InternalError,
            "edge missing from face cover");
  return table;
}

DualGraph dual(const RotationSystem& rs) {
  std::vector<Face> fs = faces(rs);
  auto table = face_of_edge(fs, rs.graph);
  DualGraph d;
  d.face_count = static_cast<int>(fs.size());
  d.dual_edges.reserve(rs.graph.edge_count());
  for (EdgeId e = 0; e < rs.graph.edge_count(); ++e)
    d.dual_edges.push_back({table[e][0], table[e][1], e});
  return d;
}

std::vector<int> DualGraph::face_degree() const {
  std::vector<int> deg(face_count, 0);
  for (const DualEdge& de : dual_edges) {
    ++deg[de.left_face];
    ++deg[de.right_face];
  }
  return deg;
}

RotationSystem prism_rotation(int k) {
  Graph g = named_graph("prism", k);
  auto edge = [&](Vertex u, Vertex v) { return *g.find_edge(u, v); };
  std::vector<std::vector<EdgeId>> rot(2 * k);
  for (int i = 0; i < k; ++i) {
    int next = (i + 1) % k, prev = (i + k - 1) % k;
    rot[i] = {edge(i, next), edge(i, prev), edge(i, k + i)};
    rot[k + i] = {edge(k + i, k + next), edge(i, k + i), edge(k + i, k + prev)};
  }
  return RotationSystem::make(std::move(g), std::move(rot));
}

namespace {

// Vertex coordinates: all permutations of (0, +-1, +-2).
std::vector<std::array<int, 3>> trunc_oct_coords() {
  std::vector<std::array<int, 3>> pts;
  std::array<int, 3> base{0, 1, 2};
  std::sort(base.begin(), base.end());
  do {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        std::array<int, 3> p;
        for (int i = 0; i < 3; ++i) {
          int v = base[i];
          if (v == 1) v *= s1;
          if (v == 2) v *= s2;
          p[i] = v;
        }
        pts.push_back(p);
      }
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

long det3(const std::array<long, 3>& a, const std::array<long, 3>& b,
          const std::array<long, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

} // namespace

Graph truncated_octahedron() {
  auto pts = trunc_oct_coords();
  const int n = static_cast<int>(pts.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int d2 = 0;
      for (int c = 0; c < 3; ++c) d2 += (pts[i][c] - pts[j][c]) * (pts[i][c] - pts[j][c]);
      if (d2 == 2) edges.emplace_back(i, j);
    }
  }
  return Graph::make(n, edges);
}

RotationSystem truncated_octahedron_rotation() {
  Graph g = truncated_octahedron();
  auto pts = trunc_oct_coords();
  std::vector<std::vector<EdgeId>> rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<EdgeId> inc = g.incident(v);
    require(inc.size() == 3, ErrorKind::InternalError, "truncated octahedron must be cubic");
    // Orient the three neighbors consistently around the outward normal
    // (the position vector, since the solid is centered at the origin).
    auto delta = [&](EdgeId e) {
      Vertex w = g.edge(e).other(v);
      return std::array<long, 3>{pts[w][0] - pts[v][0], pts[w][1] - pts[v][1],
                                 pts[w][2] - pts[v][2]};
    };
    std::array<long, 3> normal{pts[v][0], pts[v][1], pts[v][2]};
    if (det3(delta(inc[0]), delta(inc[1]), normal) < 0) std::swap(inc[0], inc[1]);
    if (det3(delta(inc[1]), delta(inc[2]), normal) < 0) {
      std::swap(inc[1], inc[2]);
      if (det3(delta(inc[0]), delta(inc[1]), normal) < 0) std::swap(inc[0], inc[1]);
    }
    rot[v] = inc;
  }
  return RotationSystem::make(std::move(g), std::move(rot));
}

std::optional<RotationSystem> named_rotation(const std::string& name, std::optional<int> a) {
  if (name == "cube") return prism_rotation(4);
  if (name == "prism") {
    require(a.has_value(), ErrorKind::BadParameter, "prism needs a parameter k");
    return prism_rotation(*a);
  }
  if (name == "truncated_octahedron") return truncated_octahedron_rotation();
  return std::nullopt;
}

} // namespace bookem
