#include "ekr/intersection.hpp"

#include <algorithm>
#include <set>

#include "ekr/bitset.hpp"
#include "ekr/error.hpp"
#include "ekr/parameters.hpp"

namespace ekr {

int min_meet_rank(const Semilattice& lattice, std::span<const Element> family) {
  const int top = lattice.top_rank();
  if (family.empty()) throw DomainError("family must be non-empty");
  for (const auto& x : family)
    if (lattice.rank(x) != top) throw DomainError("family member " + lattice.format(x) + " is not in the top fiber");
  int best = top;
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      best = std::min(best, lattice.rank(lattice.meet(family[a], family[b])));
  return best;
}

bool is_intersecting(const Semilattice& lattice, std::span<const Element> family, int s) {
  if (s <= 0 || s >= lattice.top_rank())
    throw DomainError("intersection parameter s=" + std::to_string(s) + " requires 0 < s < M");
  return min_meet_rank(lattice, family) >= s;
}

Table1Evaluation table1_condition(const FamilySpec& spec, int s, int t) {
  if (s <= 0 || s >= t || t > spec.top_rank())
    throw DomainError("table condition requires 0 < s < t <= M");
  const bool tight = s == t - 1;
  Table1Evaluation e;
  e.regime = tight ? "s=t-1" : "s<t-1";
  const long long m = spec.m, v = spec.v, n = spec.n, q = spec.q, k = spec.k;
  switch (spec.kind) {
    case FamilyKind::johnson: {
      const BigInt c = binomial(m, s);
      e.lhs = v;
      e.rhs = tight ? BigInt(s + (m - s) * c * c) : BigInt(s + c * (m - s + 1) * (m - s));
      break;
    }
    case FamilyKind::grassmann: {
      const BigInt g = qbinom(m, s, q);
      const BigInt big_q = q;
      if (tight) {
        e.lhs = power(big_q, v - s) - 1;
        e.rhs = (power(big_q, m - s) - 1) * g * g;
      } else {
        e.lhs = (power(big_q, v - s) - 1) * (q - 1);
        e.rhs = (power(big_q, m - s) - 1) * (power(big_q, m - s - 1) - 1) * g * g;
      }
      break;
    }
    case FamilyKind::hamming: {
      const BigInt c = binomial(m, s);
      e.lhs = n;
      e.rhs = tight ? BigInt(c * c) : BigInt((m - s + 1) * c);
      break;
    }
    case FamilyKind::bilinear: {
      const BigInt g = qbinom(m, s, q);
      if (tight) {
        e.lhs = q;
        e.rhs = g * g;
      } else {
        e.lhs = BigInt(n) * (q - 1);
        e.rhs = (power(BigInt(q), m - s + 1) - 1) * g;
      }
      break;
    }
    case FamilyKind::injection: {
      const BigInt c = binomial(m, s);
      e.lhs = n;
      e.rhs = tight ? BigInt(s + c * c) : BigInt(s + (m - s + 1) * c);
      break;
    }
    case FamilyKind::nbjohnson: {
      const BigInt c = binomial(k, s);
      e.lhs = BigInt(n) * (m - s);
      e.rhs = tight ? BigInt((k - s) * c * c) : BigInt((k - s + 1) * (k - s) * c);
      break;
    }
    case FamilyKind::signed_sets: {
      const BigInt c = binomial(k, s);
      e.lhs = BigInt(m - 1) * (m - s);
      e.rhs = tight ? BigInt((k - s) * c * c) : BigInt((k - s + 1) * (k - s) * c);
      break;
    }
  }
  e.holds = e.lhs > e.rhs;
  return e;
}

ConditionReport check_conditions(const DesignCertificate& cert, int s, std::optional<int> t_opt) {
  const FamilySpec& spec = cert.spec;
  const int top = spec.top_rank();
  const int t = t_opt.value_or(cert.strength);
  if (t > cert.strength)
    throw DomainError("strength t=" + std::to_string(t) + " exceeds certified strength " + std::to_string(cert.strength));
  if (s <= 0 || s >= t || t > top)
    throw DomainError("conditions require 0 < s < t <= M, got s=" + std::to_string(s) + ", t=" + std::to_string(t));

  ConditionReport report;
  report.spec = spec;
  report.s = s;
  report.t = t;
  report.indices.assign(cert.indices.begin(), cert.indices.begin() + t + 1);
  report.cond1_vacuous = 2 * s - t < 0;

  const BigInt nu_s_top = nu(spec, s, top);
  const BigInt mu_s_top = mu(spec, s, top);
  const BigInt& lambda_s = report.indices[s];
  const BigInt theta_s = theta(spec, s);

  report.theorem_form = report.theta_form = report.remark_form = true;
  for (int r = 0; r <= s - 1; ++r) {
    ConditionRow row;
    row.r = r;
    row.cond1 = r <= 2 * s - t;
    row.cond2 = r >= std::max(0, 2 * s - t);
    row.j = row.cond1 ? t : 2 * s - r;
    const BigInt mu_rs = mu(spec, r, s);
    row.lhs = mu_rs * nu_s_top * report.indices[row.j];
    row.rhs = lambda_s;
    row.holds = row.lhs < row.rhs;
    row.theta_lhs = mu_rs * nu_s_top * theta(spec, row.j);
    row.theta_rhs = theta_s;
    row.theta_holds = row.theta_lhs < row.theta_rhs;
    row.remark_lhs = nu(spec, r, s) * mu_s_top * theta(spec, row.j);
    row.remark_rhs = theta_s;
    row.remark_holds = row.remark_lhs < row.remark_rhs;
    report.theorem_form = report.theorem_form && row.holds;
    report.theta_form = report.theta_form && row.theta_holds;
    report.remark_form = report.remark_form && row.remark_holds;
    report.rows.push_back(std::move(row));
  }
  report.table1 = table1_condition(spec, s, t);
  report.table1_agrees = report.table1.holds == report.theorem_form;
  return report;
}

BigInt ekr_bound(const DesignCertificate& cert, int s) {
  if (s < 0 || s > cert.strength)
    throw DomainError("bound lambda_" + std::to_string(s) + " needs s <= strength " + std::to_string(cert.strength));
  return derive_index(cert.spec, cert.indices[cert.strength], cert.strength, s);
}

DrReport compute_dr(const DesignCertificate& cert, int s, int r, std::uint64_t budget) {
  const Semilattice lattice(cert.spec);
  const int t = cert.strength;
  if (r < 0 || r > s - 1 || s - 1 >= t || t > lattice.top_rank())
    throw DomainError("d_r requires 0 <= r <= s-1 < t <= M, got r=" + std::to_string(r) + ", s=" + std::to_string(s) +
                      ", t=" + std::to_string(t));
  const auto& ys = cert.elements;
  const std::size_t ny = ys.size();
  const BigInt xs_size = alpha(cert.spec, 0, s);
  const BigInt cost = BigInt(ny) * ny + xs_size * ny * (1 + (ny + 63) / 64);
  if (cost > budget) throw BudgetExceeded("d_r scan needs " + cost.str() + " steps, budget " + std::to_string(budget));

  DrReport report;
  report.s = s;
  report.r = r;
  report.t = t;
  if (r >= 2 * s - t) {
    report.bound_case = "2s-t<=r<=s-1";
    report.bound = mu(cert.spec, r, s) * cert.indices[2 * s - r];
  } else {
    report.bound_case = "r<=2s-t";
    report.bound = mu(cert.spec, r, s) * cert.indices[t];
  }

  // meets_y[y] = members z with rank(z ^ y) >= s
  std::vector<Bitset> meets_y(ny, Bitset(ny));
  for (std::size_t a = 0; a < ny; ++a)
    for (std::size_t b = a; b < ny; ++b)
      if (lattice.rank(lattice.meet(ys[a], ys[b])) >= s) {
        meets_y[a].set(b);
        meets_y[b].set(a);
      }

  for (const auto& x : lattice.enumerate_fiber(s)) {
    Bitset above(ny);
    for (std::size_t z = 0; z < ny; ++z)
      if (lattice.leq(x, ys[z])) above.set(z);
    for (std::size_t y = 0; y < ny; ++y) {
      if (lattice.rank(lattice.meet(x, ys[y])) != r) continue;
      ++report.pairs;
      const std::size_t d = above.count_and(meets_y[y]);
      if (!report.value || d > *report.value) {
        report.value = d;
        report.x = x;
        report.y = ys[y];
      }
    }
  }
  report.within_bound = !report.value || BigInt(*report.value) <= report.bound;
  return report;
}

std::string_view to_string(ExtremalStatus status) {
  switch (status) {
    case ExtremalStatus::below_bound: return "below-bound";
    case ExtremalStatus::extremal_star: return "extremal-star";
    case ExtremalStatus::extremal_but_not_star: return "extremal-but-not-star";
    case ExtremalStatus::exceeds_bound: return "exceeds-bound";
  }
  return "?";
}

ExtremalVerdict verify_extremal(const DesignCertificate& cert, std::span<const Element> family, int s) {
  const Semilattice lattice(cert.spec);
  const std::set<Element> design(cert.elements.begin(), cert.elements.end());
  std::set<Element> members;
  for (const auto& z : family) {
    if (!design.count(z)) throw DomainError("family member " + lattice.format(z) + " is not in the design");
    if (!members.insert(z).second) throw DomainError("duplicate family member " + lattice.format(z));
  }
  if (!is_intersecting(lattice, family, s))
    throw DomainError("family is not " + std::to_string(s) + "-intersecting");

  ExtremalVerdict verdict;
  verdict.size = family.size();
  verdict.bound = ekr_bound(cert, s);
  if (verdict.bound > verdict.size) {
    verdict.status = ExtremalStatus::below_bound;
    return verdict;
  }
  if (verdict.bound < verdict.size) {
    verdict.status = ExtremalStatus::exceeds_bound;
    return verdict;
  }

  Element common = family.front();
  for (const auto& z : family) common = lattice.meet(common, z);
  const std::vector<Element> sorted(members.begin(), members.end());
  verdict.status = ExtremalStatus::extremal_but_not_star;
  if (lattice.rank(common) < s) return verdict;
  for (const auto& z : lattice.enumerate_fiber(s)) {
    if (!lattice.leq(z, common)) continue;
    if (star(lattice, cert.elements, z).members == sorted) {
      verdict.status = ExtremalStatus::extremal_star;
      verdict.center = z;
      break;
    }
  }
  return verdict;
}

}  // namespace ekr
