#include "ekr/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "ekr/error.hpp"

namespace ekr {

IntersectionGraph build_graph(const DesignCertificate& cert, int s, std::size_t vertex_budget) {
  const Semilattice lattice(cert.spec);
  if (s < 0 || s > lattice.top_rank()) throw DomainError("s=" + std::to_string(s) + " outside 0..M");
  const std::size_t n = cert.elements.size();
  if (n > vertex_budget)
    throw BudgetExceeded("design has " + std::to_string(n) + " members, vertex budget " + std::to_string(vertex_budget));
  IntersectionGraph g;
  g.s = s;
  g.adjacency.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) {
    g.adjacency[a].set(a);
    for (std::size_t b = a + 1; b < n; ++b)
      if (lattice.rank(lattice.meet(cert.elements[a], cert.elements[b])) >= s) {
        g.adjacency[a].set(b);
        g.adjacency[b].set(a);
      }
  }
  return g;
}

GreedyBound greedy_lower_bound(const DesignCertificate& cert, int s) {
  const Semilattice lattice(cert.spec);
  GreedyBound best;
  for (const auto& z : lattice.enumerate_fiber(s)) {
    std::vector<std::size_t> family;
    for (std::size_t i = 0; i < cert.elements.size(); ++i)
      if (lattice.leq(z, cert.elements[i])) family.push_back(i);
    if (!best.center || family.size() > best.size) {
      best.size = family.size();
      best.family = std::move(family);
      best.center = z;
    }
  }
  return best;
}

namespace {

using Clique = std::vector<std::size_t>;

// Branch and bound over a graph relabelled so that position i is the i-th
// vertex of the chosen ordering. Greedy colouring of the candidate set gives
// the upper bound (Tomita-style).
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bitset> adjacency, const SearchOptions& options, std::size_t seed_size, Clique seed)
      : adj_(std::move(adjacency)), options_(options), best_(seed_size), witness_(std::move(seed)) {}

  void run(unsigned threads) {
    const std::size_t n = adj_.size();
    Bitset all(n);
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    std::vector<std::size_t> order, colour;
    colour_sort(all, order, colour);

    std::atomic<std::size_t> next{order.size()};
    auto worker = [&] {
      Clique current;
      while (!stop_.load()) {
        const std::size_t slot = next.fetch_sub(1);
        if (slot == 0 || slot > order.size()) return;
        const std::size_t i = slot - 1;
        if (!worth(colour[i])) continue;
        const std::size_t v = order[i];
        Bitset candidates(n);
        for (std::size_t j = 0; j < i; ++j) candidates.set(order[j]);
        candidates &= adj_[v];
        current.assign(1, v);
        if (candidates.none()) record(current);
        else expand(current, candidates);
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }

  std::size_t best() const { return best_.load(); }
  const Clique& witness() const { return witness_; }
  std::vector<Clique>& found() { return found_; }
  bool overflow() const { return overflow_; }
  bool exhausted() const { return exhausted_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  // Whether a branch that can reach at most `bound` vertices may still matter.
  bool worth(std::size_t bound) const {
    return options_.enumerate_all ? bound >= best_.load() : bound > best_.load();
  }

  void colour_sort(const Bitset& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
    Bitset uncoloured = candidates;
    std::size_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      Bitset available = uncoloured;
      while (!available.none()) {
        const std::size_t v = available.first();
        available.reset(v);
        available.subtract(adj_[v]);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  void expand(Clique& current, Bitset candidates) {
    const std::uint64_t visited = nodes_.fetch_add(1) + 1;
    if (options_.node_budget != 0 && visited > options_.node_budget) {
      exhausted_.store(true);
      stop_.store(true);
      return;
    }
    std::vector<std::size_t> order, colour;
    colour_sort(candidates, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (stop_.load()) return;
      if (!worth(current.size() + colour[i])) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) record(current);
      else expand(current, next);
      current.pop_back();
      candidates.reset(v);
    }
  }

  void record(const Clique& clique) {
    std::lock_guard lock(mutex_);
    const std::size_t size = clique.size();
    if (size > best_.load()) {
      best_.store(size);
      witness_ = clique;
      found_.clear();
      overflow_ = false;
      if (options_.enumerate_all) found_.push_back(clique);
    } else if (options_.enumerate_all && size == best_.load()) {
      if (found_.size() < options_.family_cap) found_.push_back(clique);
      else overflow_ = true;
    }
  }

  std::vector<Bitset> adj_;
  const SearchOptions& options_;
  std::atomic<std::size_t> best_;
  Clique witness_;
  std::vector<Clique> found_;
  bool overflow_ = false;
  std::mutex mutex_;
  std::atomic<bool> stop_{false};
  std::atomic<bool> exhausted_{false};
  std::atomic<std::uint64_t> nodes_{0};
};

}  // namespace

SearchResult max_intersecting(const DesignCertificate& cert, int s, const SearchOptions& options) {
  const IntersectionGraph graph = build_graph(cert, s);
  const std::size_t n = graph.size();
  const GreedyBound seed = greedy_lower_bound(cert, s);

  // Descending degree, ties by canonical element order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (!options.natural_order) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto da = graph.degree(a), db = graph.degree(b);
      if (da != db) return da > db;
      return cert.elements[a] < cert.elements[b];
    });
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<Bitset> adj(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    graph.adjacency[a].for_each([&](std::size_t b) {
      if (a != b) adj[position[a]].set(position[b]);
    });

  auto to_design = [&](const Clique& c) {
    Clique out;
    for (auto v : c) out.push_back(order[v]);
    std::sort(out.begin(), out.end());
    return out;
  };
  Clique seed_clique;
  for (auto v : seed.family) seed_clique.push_back(position[v]);

  const unsigned threads = options.deterministic ? 1U : std::max(1U, options.threads);
  CliqueSearch search(adj, options, seed.size, seed_clique);
  search.run(threads);

  SearchResult result;
  result.seed_size = seed.size;
  result.optimum = search.best();
  result.nodes = search.nodes();
  result.status = search.exhausted() ? SearchStatus::budget_exhausted : SearchStatus::proved_optimal;
  result.witness = to_design(search.witness());

  std::vector<Clique> all;
  bool overflow = false;
  if (options.enumerate_all) {
    for (const auto& c : search.found()) all.push_back(to_design(c));
    overflow = search.overflow();
  } else if (options.deterministic && !search.exhausted()) {
    // Second pass at the known optimum to pick the least witness.
    SearchOptions pass = options;
    pass.enumerate_all = true;
    CliqueSearch again(adj, pass, result.optimum, {});
    again.run(1);
    result.nodes += again.nodes();
    for (const auto& c : again.found()) all.push_back(to_design(c));
  }
  std::sort(all.begin(), all.end());
  if (options.deterministic && !all.empty()) result.witness = all.front();
  if (options.enumerate_all) {
    result.all_maximum = std::move(all);
    result.all_overflow = overflow;
  }
  return result;
}

}  // namespace ekr
