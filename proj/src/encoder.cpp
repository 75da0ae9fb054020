#include "bookem/encoder.hpp"

#include <algorithm>

namespace bookem {

namespace {

// Index of unordered pair (a, b), a < b, in lexicographic order over count items.
int pair_index(int a, int b, int count) {
  return a * count - a * (a + 1) / 2 + (b - a - 1);
}

} // namespace

VarMap::VarMap(const Graph& g, int pages) : n_(g.vertex_count()), pages_(pages), edges_(g.edges()) {}

int VarMap::sigma_var(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return 1 + pair_index(u, v, n_);
}

int VarMap::sigma_lit(Vertex u, Vertex v) const {
  return u < v ? sigma_var(u, v) : -sigma_var(v, u);
}

int VarMap::phi_var(EdgeId e, int page) const {
  return 1 + sigma_count() + e * pages_ + page;
}

int VarMap::chi_var(EdgeId e, EdgeId f) const {
  if (e > f) std::swap(e, f);
  return 1 + sigma_count() + phi_count() + pair_index(e, f, edge_count());
}

std::string VarMap::sidecar_map() const {
  std::string out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      out += std::to_string(sigma_var(u, v)) + " sigma " + std::to_string(u) + " " +
             std::to_string(v) + "\n";
  for (EdgeId e = 0; e < edge_count(); ++e)
    for (int i = 0; i < pages_; ++i)
      out += std::to_string(phi_var(e, i)) + " phi " + std::to_string(edges_[e].u) + " " +
             std::to_string(edges_[e].v) + " " + std::to_string(i) + "\n";
  for (EdgeId e = 0; e < edge_count(); ++e)
    for (EdgeId f = e + 1; f < edge_count(); ++f)
      out += std::to_string(chi_var(e, f)) + " chi " + std::to_string(edges_[e].u) + " " +
             std::to_string(edges_[e].v) + " " + std::to_string(edges_[f].u) + " " +
             std::to_string(edges_[f].v) + "\n";
  return out;
}

Encoding encode(const Graph& g, int pages, bool dispersable, SymmetryBreaking symmetry) {
  require(pages >= 1, ErrorKind::BadParameter, "pages must be >= 1");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Encoding enc;
  enc.vars = VarMap(g, pages);
  enc.formula.var_count = enc.vars.total_vars();
  if (m == 0) return enc;

  CnfFormula& f = enc.formula;
  const VarMap& vm = enc.vars;

  // (1) Transitivity. Two clauses per unordered triple forbid the two cyclic
  // assignments, which makes the sigma tournament a linear order.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w) {
        int suv = vm.sigma_var(u, v), svw = vm.sigma_var(v, w), suw = vm.sigma_var(u, w);
        f.add_clause({-suv, -svw, suw});
        f.add_clause({suv, svw, -suw});
      }

  // (2) Every edge lands on at least one page; decode picks the least.
  for (EdgeId e = 0; e < m; ++e) {
    std::vector<int> clause;
    for (int i = 0; i < pages; ++i) clause.push_back(vm.phi_var(e, i));
    f.add_clause(std::move(clause));
  }

  // (3) Same page forces chi.
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId fe = e + 1; fe < m; ++fe)
      for (int i = 0; i < pages; ++i)
        f.add_clause({-vm.phi_var(e, i), -vm.phi_var(fe, i), vm.chi_var(e, fe)});

  // (4) Independent edges on a common page must not interleave: one clause
  // per interleaving pattern of the four endpoints.
  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId fe = e + 1; fe < m; ++fe) {
      const Edge& a = g.edge(e);
      const Edge& b = g.edge(fe);
      if (a.shares_endpoint(b)) {
        // (5) Dispersable: adjacent edges never share a page.
        if (dispersable) f.add_clause({-vm.chi_var(e, fe)});
        continue;
      }
      int chi = vm.chi_var(e, fe);
      auto forbid = [&](Vertex x1, Vertex x2, Vertex x3, Vertex x4) {
        f.add_clause({-chi, -vm.sigma_lit(x1, x2), -vm.sigma_lit(x2, x3),
                      -vm.sigma_lit(x3, x4)});
      };
      forbid(a.u, b.u, a.v, b.v);
      forbid(a.u, b.v, a.v, b.u);
      forbid(a.v, b.u, a.u, b.v);
      forbid(a.v, b.v, a.u, b.u);
      forbid(b.u, a.u, b.v, a.v);
      forbid(b.u, a.v, b.v, a.u);
      forbid(b.v, a.u, b.u, a.v);
      forbid(b.v, a.v, b.u, a.u);
    }
  }

  // (6) Optional symmetry breaking.
  if (symmetry.pin_first_vertex)
    for (Vertex v = 1; v < n; ++v) f.add_clause({vm.sigma_lit(0, v)});
  if (symmetry.pin_first_edge_page) f.add_clause({vm.phi_var(0, 0)});
  if (symmetry.break_reflection && n >= 3) f.add_clause({vm.sigma_lit(1, 2)});

  return enc;
}

long long expected_clause_count(const Graph& g, int pages, bool dispersable,
                                SymmetryBreaking symmetry) {
  const long long n = g.vertex_count();
  const long long m = g.edge_count();
  if (m == 0) return 0;
  long long adjacent_pairs = 0;
  for (Vertex v = 0; v < n; ++v) {
    long long d = g.degree(v);
    adjacent_pairs += d * (d - 1) / 2;
  }
  long long edge_pairs = m * (m - 1) / 2;
  long long independent_pairs = edge_pairs - adjacent_pairs;
  long long total = 0;
  total += 2 * n * (n - 1) * (n - 2) / 6;  // transitivity
  total += m;                               // page coverage
  total += pages * edge_pairs;              // chi linking
  total += 8 * independent_pairs;           // crossing patterns
  if (dispersable) total += adjacent_pairs; // adjacency units
  if (symmetry.pin_first_vertex) total += n - 1;
  if (symmetry.pin_first_edge_page) total += 1;
  if (symmetry.break_reflection && n >= 3) total += 1;
  return total;
}

BookEmbedding decode(const Model& model, const VarMap& vm, const Graph& g, int pages,
                     const CnfFormula& f) {
  require(static_cast<int>(model.value.size()) == f.var_count + 1,
          ErrorKind::ModelDoesNotSatisfy, "model size does not match formula");
  require(model.satisfies(f), ErrorKind::ModelDoesNotSatisfy, "model fails a clause");

  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<int> lefts(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (model.lit_true(vm.sigma_lit(u, v))) ++lefts[v];
      else ++lefts[u];
    }
  std::vector<Vertex> spine(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    require(lefts[v] >= 0 && lefts[v] < n && spine[lefts[v]] == -1, ErrorKind::SigmaNotTotal,
            "sigma relation is not a linear order");
    spine[lefts[v]] = v;
  }

  BookEmbedding emb;
  emb.spine = std::move(spine);
  emb.page_count = pages;
  emb.page_of.assign(m, -1);
  for (EdgeId e = 0; e < m; ++e) {
    for (int i = 0; i < pages; ++i) {
      if (model[vm.phi_var(e, i)]) {
        emb.page_of[e] = i;
        break;
      }
    }
    require(emb.page_of[e] >= 0, ErrorKind::ModelDoesNotSatisfy,
            "edge " + std::to_string(e) + " has no page");
  }
  return emb;
}

Model assignment_from_embedding(const Graph& g, const BookEmbedding& emb, const VarMap& vm) {
  const int n = g.vertex_count();
  std::vector<int> pos(n, 0);
  for (int i = 0; i < n; ++i) pos[emb.spine[i]] = i;
  Model model;
  model.value.assign(vm.total_vars() + 1, false);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      model.value[vm.sigma_var(u, v)] = pos[u] < pos[v];
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    model.value[vm.phi_var(e, emb.page_of[e])] = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (EdgeId f = e + 1; f < g.edge_count(); ++f)
      model.value[vm.chi_var(e, f)] = emb.page_of[e] == emb.page_of[f];
  return model;
}

} // namespace bookem
