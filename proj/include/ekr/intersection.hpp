#ifndef EKR_INTERSECTION_HPP
#define EKR_INTERSECTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/designs.hpp"
#include "ekr/semilattice.hpp"

namespace ekr {

/// Minimum rank of x ^ y over unordered pairs of distinct members; M for a
/// single member. Members must be top elements.
int min_meet_rank(const Semilattice& lattice, std::span<const Element> family);

/// Every two members meet in rank >= s. Requires 0 < s < M.
bool is_intersecting(const Semilattice& lattice, std::span<const Element> family, int s);

/// One value of r in 0..s-1 with the inequalities evaluated there.
///
///   design form:  mu(r,s) nu(s,M) lambda_j < lambda_s
///   theta form:   mu(r,s) nu(s,M) theta(j)  < theta(s)
///   remark form:  nu(r,s) mu(s,M) theta(j)  < theta(s)
///
/// with j = t on the cond1 range r <= 2s-t and j = 2s-r on the cond2 range
/// max(0, 2s-t) <= r <= s-1. At r = 2s-t both apply and coincide.
struct ConditionRow {
  int r = 0;
  bool cond1 = false;
  bool cond2 = false;
  int j = 0;
  BigInt lhs, rhs;
  bool holds = false;
  BigInt theta_lhs, theta_rhs;
  bool theta_holds = false;
  BigInt remark_lhs, remark_rhs;
  bool remark_holds = false;
};

/// Per-family closed-form parameter condition for the full top fiber.
struct Table1Evaluation {
  std::string regime;  // "s<t-1" or "s=t-1"
  BigInt lhs, rhs;     // condition reads lhs > rhs
  bool holds = false;
};

Table1Evaluation table1_condition(const FamilySpec& spec, int s, int t);

struct ConditionReport {
  FamilySpec spec;
  int s = 0;
  int t = 0;
  std::vector<BigInt> indices;  // lambda_0..lambda_t
  bool cond1_vacuous = false;   // 2s - t < 0
  std::vector<ConditionRow> rows;
  bool theorem_form = false;
  bool theta_form = false;
  bool remark_form = false;
  Table1Evaluation table1;
  bool table1_agrees = false;  // table1.holds == theorem_form
};

/// Evaluates the hypotheses of the intersection bound for `cert` at s,
/// using strength t (defaults to the certificate strength). Requires
/// 0 < s < t <= strength.
ConditionReport check_conditions(const DesignCertificate& cert, int s, std::optional<int> t = std::nullopt);

/// lambda_s, the bound |Z| <= lambda_s. Throws DomainError when s exceeds
/// the certificate strength.
BigInt ekr_bound(const DesignCertificate& cert, int s);

struct DrReport {
  int s = 0;
  int r = 0;
  int t = 0;
  std::optional<std::size_t> value;  // empty when no pair meets at rank r
  std::optional<Element> x;
  std::optional<Element> y;
  BigInt bound;
  std::string bound_case;  // "2s-t<=r<=s-1" or "r<=2s-t"
  bool within_bound = true;
  std::uint64_t pairs = 0;
};

/// Exact maximum over x in X_s and y in Y with rank(x ^ y) = r of
/// |{z in Y : x <= z, rank(z ^ y) >= s}|, compared against its bound.
/// Requires 0 <= r <= s-1 < t, t the certificate strength.
DrReport compute_dr(const DesignCertificate& cert, int s, int r, std::uint64_t budget = kDefaultDesignBudget);

enum class ExtremalStatus { below_bound, extremal_star, extremal_but_not_star, exceeds_bound };

std::string_view to_string(ExtremalStatus status);

struct ExtremalVerdict {
  std::size_t size = 0;
  BigInt bound;
  ExtremalStatus status = ExtremalStatus::below_bound;
  std::optional<Element> center;
};

/// Classifies an s-intersecting subfamily of the design against lambda_s.
/// Throws DomainError when Z is not a duplicate-free subset of Y or is not
/// s-intersecting.
ExtremalVerdict verify_extremal(const DesignCertificate& cert, std::span<const Element> family, int s);

}  // namespace ekr

#endif  // EKR_INTERSECTION_HPP
