#ifndef EKR_AUDIT_HPP
#define EKR_AUDIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ekr/family.hpp"
#include "ekr/semilattice.hpp"

namespace ekr {

struct AuditCheck {
  std::string id;
  bool passed = true;
  /// Concrete witness tuple when the check fails.
  std::vector<Element> counterexample;
  std::string detail;
  std::uint64_t cases = 0;
  double elapsed_ms = 0.0;
};

/// Outcome of exhaustively checking one family instance against the
/// semilattice axioms and the regularity conditions. Checks appear in a
/// fixed order: partial-order, meet-glb, rank-covering, mu, nu, theta,
/// alpha-lemma, join-rank.
struct AuditReport {
  FamilySpec spec;
  std::vector<std::uint64_t> fiber_sizes;
  std::vector<AuditCheck> checks;

  bool passed() const;
};

struct AuditOptions {
  /// Cap on elementary comparisons across all checks.
  std::uint64_t budget = 100'000'000;
};

/// Throws BudgetExceeded naming the overflowing check and the fiber sizes.
AuditReport audit(const FamilySpec& spec, const AuditOptions& options = {});

}  // namespace ekr

#endif  // EKR_AUDIT_HPP
