#include "bookem/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace bookem {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::EmbeddingGraphMismatch: return "EmbeddingGraphMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ModelDoesNotSatisfy: return "ModelDoesNotSatisfy";
    case ErrorKind::SigmaNotTotal: return "SigmaNotTotal";
    case ErrorKind::MalformedSolverOutput: return "MalformedSolverOutput";
    case ErrorKind::SolverProcessFailed: return "SolverProcessFailed";
    case ErrorKind::ColoringConflict: return "ColoringConflict";
    case ErrorKind::PropagationStalled: return "PropagationStalled";
    case ErrorKind::BgNotConnected: return "BgNotConnected";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::BadFormat: return "BadFormat";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Error";
}

Graph Graph::make(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  require(vertex_count >= 0, ErrorKind::BadParameter, "negative vertex count");
  Graph g;
  g.n_ = vertex_count;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    require(u >= 0 && u < vertex_count && v >= 0 && v < vertex_count,
            ErrorKind::EndpointOutOfRange,
            "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    require(u != v, ErrorKind::LoopEdge, "vertex " + std::to_string(u));
    g.edges_.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (size_t i = 1; i < g.edges_.size(); ++i) {
    require(!(g.edges_[i] == g.edges_[i - 1]), ErrorKind::DuplicateEdge,
            "(" + std::to_string(g.edges_[i].u) + "," + std::to_string(g.edges_[i].v) + ")");
  }
  g.incident_.assign(vertex_count, {});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    g.incident_[g.edges_[e].u].push_back(e);
    g.incident_[g.edges_[e].v].push_back(e);
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), key,
      [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  if (it != edges_.end() && *it == key) return static_cast<EdgeId>(it - edges_.begin());
  return std::nullopt;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(incident_[v].size());
  for (EdgeId e : incident_[v]) out.push_back(edges_[e].other(v));
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_regular(int k) const {
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) != k) return false;
  return true;
}

void Graph::set_label(Vertex v, const std::string& label) {
  require(v >= 0 && v < n_, ErrorKind::EndpointOutOfRange, "label for vertex " + std::to_string(v));
  if (labels_.empty()) labels_.assign(n_, "");
  labels_[v] = label;
}

const std::string& Graph::label(Vertex v) const {
  static const std::string empty;
  if (labels_.empty()) return empty;
  return labels_[v];
}

std::optional<Vertex> Graph::vertex_by_label(const std::string& label) const {
  for (Vertex v = 0; v < static_cast<int>(labels_.size()); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

BipartitionResult bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex start = 0; start < n; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          parent[w] = u;
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          // Odd cycle: join the two BFS-tree paths from u and w.
          std::vector<Vertex> pu{u}, pw{w};
          auto depth = [&](Vertex x) {
            int d = 0;
            for (Vertex y = x; parent[y] != -1; y = parent[y]) ++d;
            return d;
          };
          int du = depth(u), dw = depth(w);
          Vertex a = u, b = w;
          while (du > dw) { a = parent[a]; pu.push_back(a); --du; }
          while (dw > du) { b = parent[b]; pw.push_back(b); --dw; }
          while (a != b) {
            a = parent[a]; pu.push_back(a);
            b = parent[b]; pw.push_back(b);
          }
          std::vector<Vertex> cycle(pu.begin(), pu.end());
          pw.pop_back(); // shared apex appears once
          cycle.insert(cycle.end(), pw.rbegin(), pw.rend());
          BipartitionResult res;
          res.odd_cycle = std::move(cycle);
          return res;
        }
      }
    }
  }
  BipartitionResult res;
  res.bipartition = Bipartition{std::move(side)};
  return res;
}

namespace {

int reachable_count(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  Vertex start = -1;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) { start = v; break; }
  if (start == -1) return 0;
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{start};
  seen[start] = true;
  int count = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count;
}

} // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> removed(g.vertex_count(), false);
  return reachable_count(g, removed) == g.vertex_count();
}

bool is_three_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  std::vector<bool> removed(n, false);
  if (reachable_count(g, removed) != n) return false;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a; b < n; ++b) {
      removed.assign(n, false);
      removed[a] = removed[b] = true;
      int live = n - (a == b ? 1 : 2);
      if (reachable_count(g, removed) != live) return false;
    }
  }
  return true;
}

Graph folkman() {
  // Twins 0..9: A1,A2,B1,B2,...,E2. Connectors 10..19: one per K5 edge.
  const std::string names = "abcde";
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> k5_pairs;
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) k5_pairs.emplace_back(x, y);
  for (int c = 0; c < static_cast<int>(k5_pairs.size()); ++c) {
    auto [x, y] = k5_pairs[c];
    int connector = 10 + c;
    for (int copy = 0; copy < 2; ++copy) {
      edges.emplace_back(connector, 2 * x + copy);
      edges.emplace_back(connector, 2 * y + copy);
    }
  }
  Graph g = Graph::make(20, edges);
  for (int x = 0; x < 5; ++x) {
    char upper = static_cast<char>('A' + x);
    g.set_label(2 * x, std::string(1, upper) + "1");
    g.set_label(2 * x + 1, std::string(1, upper) + "2");
  }
  for (int c = 0; c < static_cast<int>(k5_pairs.size()); ++c) {
    auto [x, y] = k5_pairs[c];
    g.set_label(10 + c, std::string(1, names[x]) + std::string(1, names[y]));
  }
  return g;
}

Graph gray() {
  // Three copies of K_{3,3} on {a,b,c} x {d,e,f}, every edge subdivided, and
  // one extra vertex joining the three subdivision vertices of each K_{3,3}
  // edge position.
  //
  // Vertices: copy i in 0..2 holds originals 18i+0..18i+5 (a_i..f_i) and
  // subdivisions 18i+6..18i+17 is not used; we lay out originals first.
  const std::string orig = "abcdef";
  std::vector<std::pair<int, int>> pairs; // the 9 K_{3,3} edge positions
  for (int x = 0; x < 3; ++x)
    for (int y = 3; y < 6; ++y) pairs.emplace_back(x, y);

  auto original = [](int copy, int which) { return copy * 6 + which; }; // 0..17
  auto subdivision = [&](int copy, int pos) { return 18 + copy * 9 + pos; }; // 18..44
  auto joiner = [&](int pos) { return 45 + pos; }; // 45..53

  std::vector<std::pair<int, int>> edges;
  for (int copy = 0; copy < 3; ++copy) {
    for (int pos = 0; pos < 9; ++pos) {
      auto [x, y] = pairs[pos];
      edges.emplace_back(original(copy, x), subdivision(copy, pos));
      edges.emplace_back(original(copy, y), subdivision(copy, pos));
    }
  }
  for (int pos = 0; pos < 9; ++pos)
    for (int copy = 0; copy < 3; ++copy) edges.emplace_back(joiner(pos), subdivision(copy, pos));

  Graph g = Graph::make(54, edges);
  for (int copy = 0; copy < 3; ++copy) {
    for (int which = 0; which < 6; ++which)
      g.set_label(original(copy, which), std::string(1, orig[which]) + std::to_string(copy + 1));
    for (int pos = 0; pos < 9; ++pos) {
      auto [x, y] = pairs[pos];
      std::string xy = std::string(1, orig[x]) + std::string(1, orig[y]);
      g.set_label(subdivision(copy, pos), xy + std::to_string(copy + 1));
    }
  }
  for (int pos = 0; pos < 9; ++pos) {
    auto [x, y] = pairs[pos];
    g.set_label(joiner(pos), std::string(1, orig[x]) + std::string(1, orig[y]));
  }
  return g;
}

namespace {

Graph heawood() {
  // 14-cycle plus chords (i, i+5 mod 14) for even i.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  Graph g = Graph::make(14, edges);
  require(g.is_regular(3) && bipartition(g).ok(), ErrorKind::InternalError,
          "heawood generator postcondition");
  return g;
}

Graph prism(int k) {
  require(k >= 3, ErrorKind::BadParameter, "prism needs k >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, (i + 1) % k);             // outer cycle
    edges.emplace_back(k + i, k + (i + 1) % k);     // inner cycle
    edges.emplace_back(i, k + i);                   // rung
  }
  return Graph::make(2 * k, edges);
}

Graph cycle_graph(int len) {
  require(len >= 4 && len % 2 == 0, ErrorKind::BadParameter, "cycle length must be even, >= 4");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  return Graph::make(len, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, ErrorKind::BadParameter, "complete_bipartite needs positive sides");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::make(a + b, edges);
}

Graph complete(int n) {
  require(n >= 1, ErrorKind::BadParameter, "complete needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::make(n, edges);
}

} // namespace

Graph truncated_octahedron();

Graph named_graph(const std::string& name, std::optional<int> a, std::optional<int> b) {
  if (name == "heawood") return heawood();
  if (name == "cube") return prism(4);
  if (name == "prism") {
    require(a.has_value(), ErrorKind::BadParameter, "prism needs a parameter k");
    return prism(*a);
  }
  if (name == "cycle") {
    require(a.has_value(), ErrorKind::BadParameter, "cycle needs a length");
    return cycle_graph(*a);
  }
  if (name == "complete_bipartite") {
    require(a.has_value(), ErrorKind::BadParameter, "complete_bipartite needs at least one side");
    return complete_bipartite(*a, b.value_or(*a));
  }
  if (name == "complete") {
    require(a.has_value(), ErrorKind::BadParameter, "complete needs n");
    return complete(*a);
  }
  if (name == "folkman") return folkman();
  if (name == "gray") return gray();
  if (name == "truncated_octahedron") return truncated_octahedron();
  fail(ErrorKind::UnknownName, name);
}

std::vector<std::string> named_graph_names() {
  return {"heawood", "cube", "prism", "cycle", "complete_bipartite", "complete",
          "folkman", "gray", "truncated_octahedron"};
}

} // namespace bookem
