#pragma once

#include "bookem/book_embedding.hpp"
#include "bookem/cnf.hpp"
#include "bookem/graph.hpp"

namespace bookem {

struct SymmetryBreaking {
  bool pin_first_vertex = true;   // unit sigma(0,v) for every v
  bool pin_first_edge_page = true; // unit phi_0(e_0)
  bool break_reflection = false;  // unit "vertex 1 left of vertex 2"

  static SymmetryBreaking none() { return {false, false, false}; }
  static SymmetryBreaking all() { return {true, true, true}; }
};

// Variable registry for one encoding instance.
//   sigma({u,v}), u < v : true iff u is left of v on the spine
//   phi(e, i)           : true iff edge e is assigned to page i
//   chi({e,f}), e < f   : forced true when e and f share a page
// Ids are dense: sigma block, then phi, then chi.
class VarMap {
public:
  VarMap() = default;
  VarMap(const Graph& g, int pages);

  int sigma_var(Vertex u, Vertex v) const; // unordered, u != v
  int sigma_lit(Vertex u, Vertex v) const; // literal asserting "u left of v"
  int phi_var(EdgeId e, int page) const;
  int chi_var(EdgeId e, EdgeId f) const; // unordered, e != f

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int page_count() const { return pages_; }
  int sigma_count() const { return n_ * (n_ - 1) / 2; }
  int phi_count() const { return pages_ * edge_count(); }
  int chi_count() const { return edge_count() * (edge_count() - 1) / 2; }
  int total_vars() const { return sigma_count() + phi_count() + chi_count(); }

  // One "<var> <family> <args>" line per variable, for debugging.
  std::string sidecar_map() const;

private:
  int n_ = 0;
  int pages_ = 0;
  std::vector<Edge> edges_;
};

struct Encoding {
  CnfFormula formula;
  VarMap vars;
};

Encoding encode(const Graph& g, int pages, bool dispersable,
                SymmetryBreaking symmetry = {});

// Expected clause total for encode() with the same arguments, computed from
// the clause-family shapes rather than by running the encoder.
long long expected_clause_count(const Graph& g, int pages, bool dispersable,
                                SymmetryBreaking symmetry = {});

// Reads the spine from the sigma block and pages from the phi block.
// Throws ModelDoesNotSatisfy if the model fails any clause of f, and
// SigmaNotTotal if the sigma relation is not a linear order.
BookEmbedding decode(const Model& model, const VarMap& vm, const Graph& g, int pages,
                     const CnfFormula& f);

// Full assignment that encodes a known embedding; used to cross-check the
// encoder against independently constructed embeddings.
Model assignment_from_embedding(const Graph& g, const BookEmbedding& emb, const VarMap& vm);

} // namespace bookem
