#ifndef EKR_PARAMETERS_HPP
#define EKR_PARAMETERS_HPP

#include <span>
#include <string_view>

#include "ekr/bigint.hpp"
#include "ekr/family.hpp"
#include "ekr/semilattice.hpp"

namespace ekr {

/// Gaussian binomial [a choose b]_q; zero when b > a.
BigInt qbinom(long long a, long long b, long long q);

// Closed-form regularity constants. All require 0 <= r <= s <= M.

/// Rank-s elements between a fixed rank-r element and a top element above it.
BigInt mu(const FamilySpec& spec, int r, int s);
/// Rank-r elements below a fixed rank-s element.
BigInt nu(const FamilySpec& spec, int r, int s);
/// Top elements above a fixed rank-r element.
BigInt theta(const FamilySpec& spec, int r);
/// Rank-s elements above a fixed rank-r element, theta(r) mu(r,s) / theta(s).
BigInt alpha(const FamilySpec& spec, int r, int s);

enum class Parameter { mu, nu, theta, alpha };

std::string_view to_string(Parameter p);

/// Counts the defining set of a parameter by enumeration, for one witness tuple:
///   mu:    witnesses (z, y), z of rank r below top element y; rank_arg = s
///   nu:    witnesses (u);                                      rank_arg = r
///   theta: witnesses (a)
///   alpha: witnesses (u);                                      rank_arg = s
/// Throws DomainError when the witnesses do not meet the definition's requirements.
BigInt oracle_count(const Semilattice& lattice, Parameter which, std::span<const Element> witnesses,
                    int rank_arg = -1);

}  // namespace ekr

#endif  // EKR_PARAMETERS_HPP
