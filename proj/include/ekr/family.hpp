#ifndef EKR_FAMILY_HPP
#define EKR_FAMILY_HPP

#include <compare>
#include <string>
#include <string_view>

namespace ekr {

enum class FamilyKind { johnson, grassmann, hamming, bilinear, injection, nbjohnson, signed_sets };

std::string_view to_string(FamilyKind kind);

/// One of the seven regular semilattice families with its integer
/// parameters. Unused parameters are zero.
///
///   johnson    v, m     subsets of {1..v} of size <= m
///   grassmann  v, m, q  subspaces of GF(q)^v of dimension <= m
///   hamming    m, n     partial words {1..m} -> {0..n-1}
///   bilinear   m, n, q  linear maps from subspaces of GF(q)^m into GF(q)^n
///   injection  m, n     partial injections {1..m} -> {1..n}
///   nbjohnson  m, n, k  partial words of length <= k
///   signed     m, k     partial maps {1..m} -> {1..m} without fixed points, size <= k
struct FamilySpec {
  FamilyKind kind = FamilyKind::johnson;
  int v = 0;
  int m = 0;
  int n = 0;
  int q = 0;
  int k = 0;

  /// Rank of the top fiber.
  int top_rank() const {
    return kind == FamilyKind::nbjohnson || kind == FamilyKind::signed_sets ? k : m;
  }

  auto operator<=>(const FamilySpec&) const = default;
  bool operator==(const FamilySpec&) const = default;
};

/// Parses `kind:key=value,...`, e.g. `grassmann:v=4,m=2,q=2`, and validates it.
FamilySpec parse_family(std::string_view text);

/// Canonical spec string; parse_family(format_family(s)) == s.
std::string format_family(const FamilySpec& spec);

/// Throws DomainError unless the parameters satisfy the family's constraints.
void validate(const FamilySpec& spec);

}  // namespace ekr

#endif  // EKR_FAMILY_HPP
