#include "bookem/book_embedding.hpp"

#include <algorithm>
#include <numeric>

namespace bookem {

namespace {

std::vector<int> positions_of(const std::vector<Vertex>& spine, int n) {
  std::vector<int> pos(n, -1);
  require(static_cast<int>(spine.size()) == n, ErrorKind::EmbeddingGraphMismatch,
          "spine length != vertex count");
  for (int i = 0; i < n; ++i) {
    Vertex v = spine[i];
    require(v >= 0 && v < n && pos[v] == -1, ErrorKind::EmbeddingGraphMismatch,
            "spine is not a permutation");
    pos[v] = i;
  }
  return pos;
}

bool cross_by_pos(const std::vector<int>& pos, const Edge& e, const Edge& f) {
  if (e.shares_endpoint(f)) return false;
  int a = pos[e.u], b = pos[e.v];
  int c = pos[f.u], d = pos[f.v];
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  // Interleave: exactly one of f's endpoints lies strictly between e's.
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

} // namespace

bool edges_cross(const std::vector<Vertex>& spine, const Edge& e, const Edge& f) {
  int n = static_cast<int>(spine.size());
  auto pos = positions_of(spine, n);
  return cross_by_pos(pos, e, f);
}

VerificationReport verify(const Graph& g, const BookEmbedding& emb, bool dispersable) {
  require(static_cast<int>(emb.page_of.size()) == g.edge_count(),
          ErrorKind::EmbeddingGraphMismatch, "page assignment does not cover the edge set");
  for (int p : emb.page_of)
    require(p >= 0 && p < emb.page_count, ErrorKind::EmbeddingGraphMismatch,
            "page index out of range");
  auto pos = positions_of(emb.spine, g.vertex_count());

  VerificationReport report;
  const int m = g.edge_count();
  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId f = e + 1; f < m; ++f) {
      if (emb.page_of[e] != emb.page_of[f]) continue;
      if (cross_by_pos(pos, g.edge(e), g.edge(f)))
        report.violations.push_back({ViolationKind::Crossing, e, f});
      else if (dispersable && g.edge(e).shares_endpoint(g.edge(f)))
        report.violations.push_back({ViolationKind::NonMatching, e, f});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

bool alternation_holds(const Graph& g, const Bipartition& bip, const BookEmbedding& emb) {
  const int k = g.max_degree();
  require(g.is_regular(k), ErrorKind::PreconditionViolated, "graph is not regular");
  require(emb.page_count == k, ErrorKind::PreconditionViolated,
          "page count != degree of regularity");
  require(verify(g, emb, /*dispersable=*/true).valid, ErrorKind::PreconditionViolated,
          "embedding is not a valid dispersable embedding");
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    if (bip.side_of[emb.spine[i]] == bip.side_of[emb.spine[(i + 1) % n]]) return false;
  }
  return true;
}

CircularEmbedding to_circular(const BookEmbedding& emb) {
  return CircularEmbedding{emb.spine, emb.page_of, emb.page_count};
}

BookEmbedding from_circular(const CircularEmbedding& c) {
  auto least = std::min_element(c.order.begin(), c.order.end());
  std::vector<Vertex> spine(c.order.begin() + (least - c.order.begin()), c.order.end());
  spine.insert(spine.end(), c.order.begin(), least);
  return BookEmbedding{std::move(spine), c.color_of, c.color_count};
}

CircularEmbedding rotated(const CircularEmbedding& c, int shift) {
  const int n = static_cast<int>(c.order.size());
  CircularEmbedding out = c;
  if (n == 0) return out;
  shift = ((shift % n) + n) % n;
  std::rotate(out.order.begin(), out.order.begin() + shift, out.order.end());
  return out;
}

CircularEmbedding reflected(const CircularEmbedding& c) {
  CircularEmbedding out = c;
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct OracleSearch {
  const Graph& g;
  bool dispersable;
  int pages;
  Clock::time_point deadline;
  bool has_deadline;
  bool out_of_time = false;

  std::vector<int> pos;        // vertex -> spine position
  std::vector<EdgeId> order;   // edges sorted by span, longest first
  std::vector<int> page_of;    // by EdgeId
  long long ticks = 0;

  bool time_up() {
    if (!has_deadline) return false;
    if (out_of_time) return true;
    if ((++ticks & 0x3ff) == 0 && Clock::now() > deadline) out_of_time = true;
    return out_of_time;
  }

  bool compatible(EdgeId e, EdgeId f) const {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    if (a.shares_endpoint(b)) return !dispersable;
    return !cross_by_pos(pos, a, b);
  }

  bool assign(size_t idx, int used) {
    if (time_up()) return false;
    if (idx == order.size()) return true;
    EdgeId e = order[idx];
    // Pages are interchangeable: never open more than one fresh page.
    int limit = std::min(pages, used + 1);
    for (int p = 0; p < limit; ++p) {
      bool ok = true;
      for (size_t j = 0; j < idx && ok; ++j)
        if (page_of[order[j]] == p && !compatible(e, order[j])) ok = false;
      if (!ok) continue;
      page_of[e] = p;
      if (assign(idx + 1, std::max(used, p + 1))) return true;
    }
    return false;
  }

  // Tries to complete the current spine; fills page_of on success.
  bool try_spine(const std::vector<Vertex>& spine) {
    pos.assign(g.vertex_count(), 0);
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) pos[spine[i]] = i;
    order.resize(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    auto span = [&](EdgeId e) { return std::abs(pos[g.edge(e).u] - pos[g.edge(e).v]); };
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return span(a) > span(b); });
    page_of.assign(g.edge_count(), -1);
    return assign(0, 0);
  }
};

} // namespace

ThicknessResult brute_force_thickness(const Graph& g, bool dispersable, int max_pages,
                                      std::chrono::milliseconds budget) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) {
    std::vector<Vertex> spine(n);
    std::iota(spine.begin(), spine.end(), 0);
    return {ThicknessResult::Status::Found, 0, BookEmbedding{spine, {}, 0}};
  }

  OracleSearch search{g, dispersable, 0, Clock::time_point{}, budget.count() > 0};
  if (search.has_deadline) search.deadline = Clock::now() + budget;

  // Pin vertex 0 at position 0; halve reflections by spine[1] < spine[n-1].
  // Sound because verdicts are invariant under rotation and reflection.
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);

  for (int k = 1; k <= max_pages; ++k) {
    search.pages = k;
    std::vector<Vertex> perm = rest;
    do {
      if (n > 2 && perm.front() > perm.back()) continue;
      std::vector<Vertex> spine;
      spine.reserve(n);
      spine.push_back(0);
      spine.insert(spine.end(), perm.begin(), perm.end());
      if (search.try_spine(spine)) {
        BookEmbedding emb{std::move(spine), search.page_of, k};
        return {ThicknessResult::Status::Found, k, std::move(emb)};
      }
      if (search.out_of_time)
        return {ThicknessResult::Status::BudgetExceeded, 0, std::nullopt};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {ThicknessResult::Status::Exhausted, 0, std::nullopt};
}

} // namespace bookem
