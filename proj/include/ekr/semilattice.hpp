#ifndef EKR_SEMILATTICE_HPP
#define EKR_SEMILATTICE_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ekr/family.hpp"
#include "ekr/galois_field.hpp"
#include "ekr/gf_matrix.hpp"

namespace ekr {

/// Strictly increasing subset of {1..v} (johnson).
struct Subset {
  std::vector<int> items;
  auto operator<=>(const Subset&) const = default;
};

/// Partial map as (position, value) pairs with strictly increasing
/// positions (hamming, nbjohnson, injection, signed).
struct PartialMap {
  std::vector<std::pair<int, int>> pairs;
  auto operator<=>(const PartialMap&) const = default;
};

/// RREF basis of a subspace of GF(q)^v (grassmann).
struct Subspace {
  Matrix basis;
  auto operator<=>(const Subspace&) const = default;
};

/// Linear map on a subspace of GF(q)^m: RREF domain basis and the image
/// of each basis row in GF(q)^n (bilinear).
struct LinearMap {
  Matrix domain;
  Matrix images;
  auto operator<=>(const LinearMap&) const = default;
};

using Payload = std::variant<Subset, PartialMap, Subspace, LinearMap>;

/// One point of a semilattice in canonical form. Two elements are equal iff
/// they belong to the same family and their payloads are identical.
struct Element {
  FamilySpec family;
  Payload payload;

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

/// Order, meet, join, enumeration and text codec for one family instance.
/// The lattice is truncated at the top rank: elements above rank M do not exist.
class Semilattice {
 public:
  explicit Semilattice(const FamilySpec& spec);

  const FamilySpec& spec() const { return spec_; }
  int top_rank() const { return spec_.top_rank(); }

  Element least() const;
  int rank(const Element& x) const;

  /// Greatest lower bound.
  Element meet(const Element& x, const Element& y) const;

  /// x below y, decided directly from the order definition (containment of
  /// sets or subspaces, restriction of maps), not through meet.
  bool leq(const Element& x, const Element& y) const;

  /// Least upper bound of rank <= M, if any upper bound exists.
  std::optional<Element> join_bounded(const Element& x, const Element& y) const;

  /// All rank-i elements, each once, sorted by canonical order.
  std::vector<Element> enumerate_fiber(int i) const;

  /// Parses the canonical text encoding. Non-canonical input is rejected.
  Element parse(std::string_view text) const;
  std::string format(const Element& x) const;

  const GaloisField& field() const;

 private:
  void check_family(const Element& x) const;
  void check_rank(int i) const;
  Matrix graph(const LinearMap& f) const;
  LinearMap from_graph(const Matrix& g) const;

  FamilySpec spec_;
  std::optional<GaloisField> field_;
};

}  // namespace ekr

#endif  // EKR_SEMILATTICE_HPP
