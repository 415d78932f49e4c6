#ifndef EKR_SEARCH_HPP
#define EKR_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ekr/bitset.hpp"
#include "ekr/designs.hpp"

namespace ekr {

/// Vertices are indices into the design; (i, j) is an edge iff the two
/// members meet in rank >= s. The diagonal is set.
struct IntersectionGraph {
  int s = 0;
  std::vector<Bitset> adjacency;

  std::size_t size() const { return adjacency.size(); }
  std::size_t degree(std::size_t v) const { return adjacency[v].count() - 1; }
};

IntersectionGraph build_graph(const DesignCertificate& cert, int s, std::size_t vertex_budget = 5000);

struct SearchOptions {
  /// Single-threaded, and the witness is the lexicographically least
  /// maximum family (as sorted design indices).
  bool deterministic = false;
  /// Collect every maximum family, up to family_cap.
  bool enumerate_all = false;
  /// Branch nodes before giving up; 0 means unlimited.
  std::uint64_t node_budget = 0;
  unsigned threads = 1;
  std::size_t family_cap = 1'000'000;
  /// Branch on vertices in design order instead of by descending degree.
  bool natural_order = false;
};

enum class SearchStatus { proved_optimal, budget_exhausted };

struct SearchResult {
  std::size_t optimum = 0;
  /// Sorted design indices of one maximum family.
  std::vector<std::size_t> witness;
  /// Every maximum family, sorted, when enumeration was requested.
  std::optional<std::vector<std::vector<std::size_t>>> all_maximum;
  bool all_overflow = false;
  std::uint64_t nodes = 0;
  std::size_t seed_size = 0;
  SearchStatus status = SearchStatus::proved_optimal;
};

SearchResult max_intersecting(const DesignCertificate& cert, int s, const SearchOptions& options = {});

/// The largest star Y_z over z in X_s; the first in canonical order wins ties.
struct GreedyBound {
  std::size_t size = 0;
  std::vector<std::size_t> family;
  std::optional<Element> center;
};

GreedyBound greedy_lower_bound(const DesignCertificate& cert, int s);

}  // namespace ekr

#endif  // EKR_SEARCH_HPP
