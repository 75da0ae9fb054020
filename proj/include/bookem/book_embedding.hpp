#pragma once

#include "bookem/graph.hpp"

#include <chrono>
#include <optional>
#include <vector>

namespace bookem {

// Spine order plus an edge-to-page assignment. page_of is indexed by the
// EdgeId of the graph the embedding belongs to.
struct BookEmbedding {
  std::vector<Vertex> spine; // position -> vertex
  std::vector<int> page_of;  // edge -> page in [0, page_count)
  int page_count = 0;
};

enum class ViolationKind { Crossing, NonMatching };

struct Violation {
  ViolationKind kind;
  EdgeId e;
  EdgeId f;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// True iff the endpoints of e and f interleave along the spine. Edges that
// share an endpoint never cross.
bool edges_cross(const std::vector<Vertex>& spine, const Edge& e, const Edge& f);

// Checks no same-page crossing, and 1-regularity per page when dispersable.
// Throws EmbeddingGraphMismatch if emb does not cover exactly g's edges.
VerificationReport verify(const Graph& g, const BookEmbedding& emb, bool dispersable);

// Lemma check: the two sides of the bipartition alternate cyclically along
// the spine. Preconditions: g is max_degree-regular, emb has exactly
// max_degree pages and verifies as dispersable.
bool alternation_holds(const Graph& g, const Bipartition& bip, const BookEmbedding& emb);

// Circular view of a book embedding: same data, order read cyclically and
// pages read as edge colors.
struct CircularEmbedding {
  std::vector<Vertex> order;
  std::vector<int> color_of;
  int color_count = 0;
};

CircularEmbedding to_circular(const BookEmbedding& emb);
BookEmbedding from_circular(const CircularEmbedding& c); // cuts before the least vertex
CircularEmbedding rotated(const CircularEmbedding& c, int shift);
CircularEmbedding reflected(const CircularEmbedding& c);

struct ThicknessResult {
  enum class Status { Found, Exhausted, BudgetExceeded };
  Status status;
  int pages = 0; // meaningful when status == Found
  std::optional<BookEmbedding> witness;
};

// Independent exact oracle: enumerates spine orders (vertex 0 pinned first,
// reflections halved) and backtracks over page assignments. Deterministic.
// Intended for n <= 10.
ThicknessResult brute_force_thickness(
    const Graph& g, bool dispersable, int max_pages,
    std::chrono::milliseconds budget = std::chrono::milliseconds::zero());

} // namespace bookem
