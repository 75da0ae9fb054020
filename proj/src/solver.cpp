#include "bookem/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace bookem {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

using Clock = std::chrono::steady_clock;

// Internal literal: 2*var + sign, var in [0, n), sign 1 = negated.
using Lit = int;
inline Lit make_lit(int var, bool neg) { return 2 * var + (neg ? 1 : 0); }
inline int lit_var(Lit l) { return l >> 1; }
inline bool lit_neg(Lit l) { return l & 1; }
inline Lit lit_not(Lit l) { return l ^ 1; }

enum LBool : char { kUndef = 0, kTrue = 1, kFalse = 2 };

struct Clause {
  std::vector<Lit> lits;
  bool learnt = false;
  bool deleted = false;
  int lbd = 0;
  double activity = 0.0;
};

struct Watch {
  int clause;
  Lit blocker;
};

class Cdcl {
public:
  Cdcl(const CnfFormula& f, SolveBudget budget, std::uint64_t seed)
      : formula_(f), budget_(budget), nvars_(f.var_count) {
    assigns_.assign(nvars_, kUndef);
    level_.assign(nvars_, 0);
    reason_.assign(nvars_, -1);
    activity_.assign(nvars_, 0.0);
    polarity_.assign(nvars_, true); // saved phase; start with "false" branch
    seen_.assign(nvars_, 0);
    watches_.assign(2 * nvars_, {});
    heap_index_.assign(nvars_, -1);
    if (seed != 0) {
      // Portfolio perturbation: tiny activity noise, still deterministic.
      std::uint64_t s = seed;
      for (int v = 0; v < nvars_; ++v) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        activity_[v] = static_cast<double>(s >> 40) * 1e-9;
      }
    }
    for (int v = 0; v < nvars_; ++v) heap_insert(v);
  }

  SolveOutcome run() {
    auto start = Clock::now();
    SolveOutcome out;
    if (!load_clauses()) {
      out.verdict = Verdict::Unsat;
      out.stats = stats_;
      out.stats.elapsed_seconds = seconds_since(start);
      return out;
    }

    long long restart_target = luby_unit_ * luby(++luby_index_);
    long long conflicts_at_restart = 0;

    while (true) {
      int confl = propagate();
      if (confl >= 0) {
        ++stats_.conflicts;
        if (decision_level() == 0) {
          out.verdict = Verdict::Unsat;
          break;
        }
        std::vector<Lit> learnt;
        int back_level = 0;
        analyze(confl, learnt, back_level);
        backtrack(back_level);
        attach_learnt(learnt);
        decay_activities();
        if (budget_exhausted(start)) {
          out.verdict = Verdict::Unknown;
          break;
        }
        if (stats_.conflicts - conflicts_at_restart >= restart_target) {
          ++stats_.restarts;
          conflicts_at_restart = stats_.conflicts;
          restart_target = luby_unit_ * luby(++luby_index_);
          backtrack(0);
        }
        if (static_cast<long long>(learnts_.size()) > learnt_limit_) reduce_learnts();
      } else {
        int next = pick_branch_var();
        if (next == -1) {
          out.verdict = Verdict::Sat;
          out.model = extract_model();
          break;
        }
        ++stats_.decisions;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(make_lit(next, polarity_[next]), -1);
      }
    }

    out.stats = stats_;
    out.stats.elapsed_seconds = seconds_since(start);
    return out;
  }

private:
  const CnfFormula& formula_;
  SolveBudget budget_;
  int nvars_;

  std::vector<Clause> clauses_;      // problem clauses first, then learnts
  std::vector<int> learnts_;         // indices into clauses_
  std::vector<std::vector<Watch>> watches_;
  std::vector<LBool> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  int qhead_ = 0;

  std::vector<double> activity_;
  std::vector<char> polarity_;
  std::vector<char> seen_;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;

  std::vector<int> heap_; // max-heap of vars by activity
  std::vector<int> heap_index_;

  SolveStats stats_;
  long long luby_index_ = 0;
  const long long luby_unit_ = 128;
  long long learnt_limit_ = 20000;

  // --- setup ---

  bool load_clauses() {
    for (const auto& clause : formula_.clauses) {
      std::vector<Lit> lits;
      lits.reserve(clause.size());
      for (int l : clause) lits.push_back(make_lit(std::abs(l) - 1, l < 0));
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      bool tautology = false;
      for (size_t i = 0; i + 1 < lits.size(); ++i)
        if (lits[i + 1] == lit_not(lits[i])) { tautology = true; break; }
      if (tautology) continue;
      if (lits.size() == 1) {
        LBool val = value(lits[0]);
        if (val == kFalse) return false;
        if (val == kUndef) enqueue(lits[0], -1);
        continue;
      }
      int idx = static_cast<int>(clauses_.size());
      clauses_.push_back({std::move(lits), false, false, 0, 0.0});
      attach(idx);
    }
    return true;
  }

  // --- basic state ---

  LBool value(Lit l) const {
    LBool v = assigns_[lit_var(l)];
    if (v == kUndef) return kUndef;
    return (v == kTrue) != lit_neg(l) ? kTrue : kFalse;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(Lit l, int reason) {
    int v = lit_var(l);
    assigns_[v] = lit_neg(l) ? kFalse : kTrue;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  void attach(int ci) {
    Clause& c = clauses_[ci];
    watches_[lit_not(c.lits[0])].push_back({ci, c.lits[1]});
    watches_[lit_not(c.lits[1])].push_back({ci, c.lits[0]});
  }

  // --- propagation ---

  int propagate() {
    while (qhead_ < static_cast<int>(trail_.size())) {
      Lit p = trail_[qhead_++];
      ++stats_.propagations;
      Lit false_lit = lit_not(p);
      auto& wl = watches_[p]; // watches on clauses where lit_not-watched is now false
      size_t keep = 0;
      for (size_t i = 0; i < wl.size(); ++i) {
        Watch w = wl[i];
        if (value(w.blocker) == kTrue) {
          wl[keep++] = w;
          continue;
        }
        Clause& c = clauses_[w.clause];
        if (c.deleted) continue;
        auto& lits = c.lits;
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        if (value(lits[0]) == kTrue) {
          wl[keep++] = {w.clause, lits[0]};
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) != kFalse) {
            std::swap(lits[1], lits[k]);
            watches_[lit_not(lits[1])].push_back({w.clause, lits[0]});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        // Unit or conflicting.
        wl[keep++] = {w.clause, lits[0]};
        if (value(lits[0]) == kFalse) {
          for (size_t j = i + 1; j < wl.size(); ++j) wl[keep++] = wl[j];
          wl.resize(keep);
          return w.clause;
        }
        enqueue(lits[0], w.clause);
      }
      wl.resize(keep);
    }
    return -1;
  }

  // --- conflict analysis (first UIP) ---

  void analyze(int confl, std::vector<Lit>& learnt, int& back_level) {
    learnt.clear();
    learnt.push_back(0); // slot for the asserting literal
    int counter = 0;
    Lit p = -1;
    int index = static_cast<int>(trail_.size()) - 1;

    do {
      Clause& c = clauses_[confl];
      if (c.learnt) bump_clause(c);
      for (size_t j = (p == -1 ? 0 : 1); j < c.lits.size(); ++j) {
        Lit q = c.lits[j];
        int v = lit_var(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = 1;
          bump_var(v);
          if (level_[v] >= decision_level()) ++counter;
          else learnt.push_back(q);
        }
      }
      while (!seen_[lit_var(trail_[index])]) --index;
      p = trail_[index--];
      confl = reason_[lit_var(p)];
      seen_[lit_var(p)] = 0;
      --counter;
    } while (counter > 0);
    learnt[0] = lit_not(p);

    std::vector<Lit> before_minimize = learnt;
    minimize(learnt);

    back_level = 0;
    if (learnt.size() > 1) {
      size_t max_i = 1;
      for (size_t i = 2; i < learnt.size(); ++i)
        if (level_[lit_var(learnt[i])] > level_[lit_var(learnt[max_i])]) max_i = i;
      std::swap(learnt[1], learnt[max_i]);
      back_level = level_[lit_var(learnt[1])];
    }
    for (Lit l : before_minimize) seen_[lit_var(l)] = 0;
  }

  // Removes literals implied by the rest of the learnt clause.
  void minimize(std::vector<Lit>& learnt) {
    for (Lit l : learnt) seen_[lit_var(l)] = 1;
    size_t keep = 1;
    for (size_t i = 1; i < learnt.size(); ++i) {
      int v = lit_var(learnt[i]);
      if (reason_[v] < 0 || !redundant(learnt[i])) learnt[keep++] = learnt[i];
    }
    learnt.resize(keep);
  }

  bool redundant(Lit l) {
    int r = reason_[lit_var(l)];
    if (r < 0) return false;
    for (Lit q : clauses_[r].lits) {
      int v = lit_var(q);
      if (v == lit_var(l) || level_[v] == 0 || seen_[v]) continue;
      return false; // non-recursive check keeps this cheap
    }
    return true;
  }

  void attach_learnt(const std::vector<Lit>& learnt) {
    if (learnt.size() == 1) {
      enqueue(learnt[0], -1);
      return;
    }
    int idx = static_cast<int>(clauses_.size());
    Clause c;
    c.lits = learnt;
    c.learnt = true;
    c.lbd = compute_lbd(learnt);
    c.activity = cla_inc_;
    clauses_.push_back(std::move(c));
    learnts_.push_back(idx);
    attach(idx);
    enqueue(learnt[0], idx);
  }

  int compute_lbd(const std::vector<Lit>& lits) {
    thread_local std::vector<int> mark;
    mark.assign(decision_level() + 1, 0);
    int lbd = 0;
    for (Lit l : lits) {
      int lv = level_[lit_var(l)];
      if (lv >= 0 && lv < static_cast<int>(mark.size()) && !mark[lv]) {
        mark[lv] = 1;
        ++lbd;
      }
    }
    return lbd;
  }

  void backtrack(int target) {
    if (decision_level() <= target) return;
    int limit = trail_lim_[target];
    for (int i = static_cast<int>(trail_.size()) - 1; i >= limit; --i) {
      int v = lit_var(trail_[i]);
      polarity_[v] = lit_neg(trail_[i]); // phase saving
      assigns_[v] = kUndef;
      reason_[v] = -1;
      if (heap_index_[v] == -1) heap_insert(v);
    }
    trail_.resize(limit);
    trail_lim_.resize(target);
    qhead_ = limit;
  }

  // --- clause reduction ---

  void reduce_learnts() {
    std::vector<int> sorted = learnts_;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      const Clause& ca = clauses_[a];
      const Clause& cb = clauses_[b];
      if (ca.lbd != cb.lbd) return ca.lbd < cb.lbd;
      return ca.activity > cb.activity;
    });
    size_t keep_count = sorted.size() / 2;
    std::vector<char> drop(clauses_.size(), 0);
    for (size_t i = keep_count; i < sorted.size(); ++i) {
      Clause& c = clauses_[sorted[i]];
      if (c.lbd <= 3 || locked(sorted[i])) continue;
      c.deleted = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
      drop[sorted[i]] = 1;
    }
    learnts_.erase(std::remove_if(learnts_.begin(), learnts_.end(),
                                  [&](int ci) { return drop[ci]; }),
                   learnts_.end());
    learnt_limit_ += 2000;
  }

  bool locked(int ci) const {
    const Clause& c = clauses_[ci];
    if (c.lits.empty()) return false;
    int v = lit_var(c.lits[0]);
    return assigns_[v] != kUndef && reason_[v] == ci;
  }

  // --- activities / heap ---

  void bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (int u = 0; u < nvars_; ++u) activity_[u] *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_index_[v] != -1) heap_up(heap_index_[v]);
  }

  void bump_clause(Clause& c) {
    c.activity += cla_inc_;
    if (c.activity > 1e20) {
      for (int ci : learnts_) clauses_[ci].activity *= 1e-20;
      cla_inc_ *= 1e-20;
    }
  }

  void decay_activities() {
    var_inc_ /= 0.95;
    cla_inc_ /= 0.999;
  }

  void heap_insert(int v) {
    heap_index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_index_[v]);
  }

  void heap_up(int i) {
    int v = heap_[i];
    while (i > 0) {
      int parent = (i - 1) / 2;
      if (activity_[heap_[parent]] >= activity_[v]) break;
      heap_[i] = heap_[parent];
      heap_index_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = i;
  }

  void heap_down(int i) {
    int v = heap_[i];
    int size = static_cast<int>(heap_.size());
    while (true) {
      int child = 2 * i + 1;
      if (child >= size) break;
      if (child + 1 < size && activity_[heap_[child + 1]] > activity_[heap_[child]]) ++child;
      if (activity_[heap_[child]] <= activity_[v]) break;
      heap_[i] = heap_[child];
      heap_index_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    heap_index_[v] = i;
  }

  int heap_pop() {
    int v = heap_[0];
    heap_index_[v] = -1;
    heap_[0] = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_index_[heap_[0]] = 0;
      heap_down(0);
    }
    return v;
  }

  int pick_branch_var() {
    while (!heap_.empty()) {
      int v = heap_pop();
      if (assigns_[v] == kUndef) return v;
    }
    return -1;
  }

  // --- misc ---

  static long long luby(long long i) {
    // Luby sequence 1,1,2,1,1,2,4,...
    long long k = 1;
    while ((1ll << (k + 1)) - 1 <= i) ++k;
    while (i != (1ll << k) - 1) {
      i -= (1ll << k) - 1 - ((1ll << (k - 1)) - 1) + ((1ll << (k - 1)) - 1);
      i = i - ((1ll << k) - 1);
      k = 1;
      while ((1ll << (k + 1)) - 1 <= i) ++k;
    }
    return 1ll << (k - 1);
  }

  double seconds_since(Clock::time_point start) const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  bool budget_exhausted(Clock::time_point start) {
    if (budget_.conflicts > 0 && stats_.conflicts >= budget_.conflicts) return true;
    if (budget_.seconds > 0 && (stats_.conflicts & 0x3ff) == 0 &&
        seconds_since(start) > budget_.seconds)
      return true;
    return false;
  }

  Model extract_model() {
    Model model;
    model.value.assign(nvars_ + 1, false);
    for (int v = 0; v < nvars_; ++v) model.value[v + 1] = assigns_[v] == kTrue;
    return model;
  }
};

} // namespace

SolveOutcome solve(const CnfFormula& f, SolveBudget budget, std::uint64_t seed) {
  for (const auto& clause : f.clauses)
    require(!clause.empty(), ErrorKind::InternalError, "empty clause in formula");

  if (f.clauses.empty()) {
    SolveOutcome out;
    out.verdict = Verdict::Sat;
    Model model;
    model.value.assign(f.var_count + 1, false);
    out.model = std::move(model);
    return out;
  }

  Cdcl engine(f, budget, seed);
  SolveOutcome out = engine.run();
  if (out.verdict == Verdict::Sat) {
    require(out.model && out.model->satisfies(f), ErrorKind::InternalError,
            "solver produced a model that fails self-check");
  }
  return out;
}

} // namespace bookem
