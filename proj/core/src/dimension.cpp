#include "posetlab/dimension.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

// Strict order of P plus the reversals assigned to one extension, kept
// transitively closed.
struct ExtensionClass {
  std::vector<Bits> up;

  bool reverses(ElementPair pr) const { return up[pr.second].test(static_cast<std::size_t>(pr.first)); }
  bool accepts(ElementPair pr) const { return !up[pr.first].test(static_cast<std::size_t>(pr.second)); }

  // Adds b < a.
  void add(ElementPair pr) {
    const auto [a, b] = pr;
    Bits gain = up[a];
    gain.set(static_cast<std::size_t>(a));
    for (std::size_t u = 0; u < up.size(); ++u) {
      if (static_cast<Element>(u) == b || up[u].test(static_cast<std::size_t>(b))) up[u] |= gain;
    }
  }

  LinearExtension extension() const {
    const std::size_t n = up.size();
    std::vector<std::size_t> below(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
      for (auto v = up[u].find_first(); v != Bits::npos; v = up[u].find_next(v)) ++below[v];
    }
    LinearExtension order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) { return below[x] < below[y]; });
    return order;
  }
};

class RealizerSearch {
 public:
  RealizerSearch(const Poset& p, int t, Budget& budget) : p_(p), t_(static_cast<std::size_t>(t)), budget_(budget) {
    pairs_ = critical_pairs(p);
    std::vector<std::size_t> incomparable(p.size(), 0);
    for (const auto& [a, b] : incomparable_pairs(p)) ++incomparable[a];
    degree_.resize(pairs_.size());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      degree_[k] = incomparable[pairs_[k].first] + incomparable[pairs_[k].second];
    }
    base_.up.reserve(p.size());
    for (std::size_t e = 0; e < p.size(); ++e) base_.up.push_back(p.above(static_cast<Element>(e)));
  }

  std::optional<Realizer> run() {
    if (pairs_.empty()) return Realizer{default_extension(p_)};
    if (t_ < 2) return std::nullopt;
    std::vector<int> colour(pairs_.size(), -1);
    std::vector<ExtensionClass> classes;
    if (!search(classes, colour)) return std::nullopt;
    Realizer r;
    for (const auto& c : classes) r.push_back(c.extension());
    return r;
  }

 private:
  bool search(std::vector<ExtensionClass>& classes, std::vector<int>& colour) {
    budget_.tick();
    // Pairs some class already reverses cost nothing.
    std::vector<std::size_t> freebies;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (colour[k] != -1) continue;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].reverses(pairs_[k])) {
          colour[k] = static_cast<int>(c);
          freebies.push_back(k);
          break;
        }
      }
    }
    const bool ok = branch(classes, colour);
    for (std::size_t k : freebies) colour[k] = -1;
    return ok;
  }

  bool branch(std::vector<ExtensionClass>& classes, std::vector<int>& colour) {
    const bool can_open = classes.size() < t_;
    std::size_t pick = pairs_.size();
    std::size_t pick_options = 0;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (colour[k] != -1) continue;
      std::size_t options = can_open ? 1 : 0;
      for (const auto& c : classes) options += c.accepts(pairs_[k]) ? 1 : 0;
      if (options == 0) return false;
      if (pick == pairs_.size() || options < pick_options ||
          (options == pick_options && degree_[k] > degree_[pick])) {
        pick = k;
        pick_options = options;
      }
    }
    if (pick == pairs_.size()) return true;

    const ElementPair pr = pairs_[pick];
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!classes[c].accepts(pr)) continue;
      ExtensionClass saved = classes[c];
      classes[c].add(pr);
      colour[pick] = static_cast<int>(c);
      if (search(classes, colour)) return true;
      colour[pick] = -1;
      classes[c] = std::move(saved);
    }
    if (can_open) {
      classes.push_back(base_);
      classes.back().add(pr);
      colour[pick] = static_cast<int>(classes.size() - 1);
      if (search(classes, colour)) return true;
      colour[pick] = -1;
      classes.pop_back();
    }
    return false;
  }

  const Poset& p_;
  std::size_t t_;
  Budget& budget_;
  std::vector<ElementPair> pairs_;
  std::vector<std::size_t> degree_;
  ExtensionClass base_;
};

}  // namespace

Reversibility is_reversible(const Poset& p, std::span<const ElementPair> pairs) {
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= p.size() || static_cast<std::size_t>(b) >= p.size() ||
        !p.incomparable(a, b)) {
      throw Error(ErrorCode::PreconditionViolated, "reversal set contains a comparable or unknown pair");
    }
  }
  const std::size_t k = pairs.size();
  // i -> j when a_i <= b_j; a cycle here is an alternating cycle.
  std::vector<std::size_t> best;
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<std::size_t> parent(k, k);
    std::vector<bool> seen(k, false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    bool closed = false;
    std::size_t last = k;
    while (!queue.empty() && !closed) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < k; ++j) {
        if (!p.leq(pairs[i].first, pairs[j].second)) continue;
        if (j == s) {
          closed = true;
          last = i;
          break;
        }
        if (!seen[j]) {
          seen[j] = true;
          parent[j] = i;
          queue.push_back(j);
        }
      }
    }
    if (!closed) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t v = last; v != s; v = parent[v]) cycle.push_back(v);
    cycle.push_back(s);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
  }
  Reversibility r;
  if (!best.empty()) {
    r.reversible = false;
    for (std::size_t i : best) r.cycle.push_back(pairs[i]);
    return r;
  }
  ExtensionClass c;
  for (std::size_t e = 0; e < p.size(); ++e) c.up.push_back(p.above(static_cast<Element>(e)));
  for (const auto& pr : pairs) c.add(pr);
  r.extension = c.extension();
  return r;
}

std::optional<Realizer> dim_at_most(const Poset& p, int t, const SearchLimits& limits) {
  if (t < 1) throw Error(ErrorCode::PreconditionViolated, "t must be at least 1");
  Budget budget(limits, "dimension");
  return RealizerSearch(p, t, budget).run();
}

DimensionResult dim_exact(const Poset& p, int cap, const SearchLimits& limits) {
  if (cap < 1) throw Error(ErrorCode::PreconditionViolated, "cap must be at least 1");
  DimensionResult out;
  if (critical_pairs(p).empty()) {
    out.realizer = {default_extension(p)};
    return out;
  }
  out.se = se(p, std::max(cap, 2), limits);
  const int start = std::max(2, out.se.order);
  Budget budget(limits, "dimension");
  for (int t = start; t <= cap; ++t) {
    auto r = RealizerSearch(p, t, budget).run();
    if (!r) continue;
    out.dimension = static_cast<int>(r->size());
    out.realizer = std::move(*r);
    if (out.dimension == out.se.order) {
      out.lower_bound = DimensionResult::LowerBound::StandardExample;
    } else if (out.dimension == 2) {
      out.lower_bound = DimensionResult::LowerBound::Trivial;
    } else {
      out.lower_bound = DimensionResult::LowerBound::Exhaustive;
    }
    return out;
  }
  throw Error(ErrorCode::BudgetExceeded, "dimension exceeds the cap of " + std::to_string(cap));
}

}  // namespace posetlab
