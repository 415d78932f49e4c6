#ifndef EKR_DESIGNS_HPP
#define EKR_DESIGNS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/family.hpp"
#include "ekr/semilattice.hpp"

namespace ekr {

inline constexpr std::uint64_t kDefaultDesignBudget = 100'000'000;

/// A verified t-design: distinct top-fiber elements Y such that every rank-t
/// element lies below exactly indices[t] members. indices[j] holds lambda_j
/// for every j <= strength.
struct DesignCertificate {
  FamilySpec spec;
  std::vector<Element> elements;
  int strength = 0;
  std::vector<BigInt> indices;

  const BigInt& index(int j) const;
};

/// Result of a strength test. On failure, `low` and `high` are two rank-t
/// elements covered by different numbers of members.
struct DesignCheck {
  std::optional<BigInt> index;
  std::optional<Element> low;
  std::optional<Element> high;
  std::size_t low_count = 0;
  std::size_t high_count = 0;
};

/// Tests whether Y is a t-design. Throws DomainError for an empty Y, a
/// member below the top rank, a duplicate member or t > M, and
/// BudgetExceeded when |X_t| * |Y| exceeds the budget.
DesignCheck is_design(const Semilattice& lattice, std::span<const Element> members, int t,
                      std::uint64_t budget = kDefaultDesignBudget);

/// lambda_{t'} = lambda_t * theta(t') / theta(t), exact.
BigInt derive_index(const FamilySpec& spec, const BigInt& lambda_t, int t, int t_prime);

/// Verifies strength t and fills in every index. Throws VerificationError
/// with the witness pair when Y is not a t-design.
DesignCertificate certify(const Semilattice& lattice, std::vector<Element> members, int t,
                          std::uint64_t budget = kDefaultDesignBudget);

/// Members of Y above a fixed element z.
struct Star {
  Element center;
  std::vector<Element> members;
};

Star star(const Semilattice& lattice, std::span<const Element> members, const Element& z);

/// The whole top fiber, a design of strength M with lambda_j = theta(j).
DesignCertificate full_fiber(const Semilattice& lattice, std::uint64_t budget = kDefaultDesignBudget);

/// Rows (x_1, ..., x_{m-1}, x_1 + ... + x_{m-1} mod q) of the Hamming
/// semilattice (m, n = q); strength m-1 with index 1.
DesignCertificate generate_linear_oa(int q, int m);

/// Design file: `family <spec>`, `strength <t>`, then one canonical element
/// per line. Lines starting with '#' and blank lines are ignored. The
/// declared strength is re-verified.
DesignCertificate read_design(std::istream& in);
void write_design(const DesignCertificate& cert, std::ostream& out);
DesignCertificate load_design(const std::filesystem::path& path);
void save_design(const DesignCertificate& cert, const std::filesystem::path& path);

/// One canonical element per line; '#' comments and an optional leading
/// `family <spec>` line, which must match `lattice` when present.
std::vector<Element> read_family_file(const Semilattice& lattice, std::istream& in);

}  // namespace ekr

#endif  // EKR_DESIGNS_HPP
