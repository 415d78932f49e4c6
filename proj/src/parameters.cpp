#include "ekr/parameters.hpp"

#include <string>

#include "ekr/error.hpp"

namespace ekr {

namespace {

void check_ranks(const FamilySpec& spec, int r, int s) {
  if (r < 0 || s < r || s > spec.top_rank())
    throw DomainError("ranks (" + std::to_string(r) + ", " + std::to_string(s) + ") require 0 <= r <= s <= " +
                      std::to_string(spec.top_rank()));
}

}  // namespace

BigInt qbinom(long long a, long long b, long long q) {
  if (b < 0 || a < 0 || b > a) return 0;
  BigInt num = 1, den = 1;
  const BigInt qq = q;
  for (long long i = 0; i < b; ++i) {
    num *= power(qq, a - i) - 1;
    den *= power(qq, i + 1) - 1;
  }
  return exact_div(num, den, "qbinom");
}

BigInt mu(const FamilySpec& spec, int r, int s) {
  check_ranks(spec, r, s);
  switch (spec.kind) {
    case FamilyKind::johnson:
    case FamilyKind::hamming:
    case FamilyKind::injection:
      return binomial(spec.m - r, spec.m - s);
    case FamilyKind::grassmann:
    case FamilyKind::bilinear:
      return qbinom(spec.m - r, spec.m - s, spec.q);
    case FamilyKind::nbjohnson:
    case FamilyKind::signed_sets:
      return binomial(spec.k - r, s - r);
  }
  return 0;
}

BigInt nu(const FamilySpec& spec, int r, int s) {
  check_ranks(spec, r, s);
  if (spec.kind == FamilyKind::grassmann || spec.kind == FamilyKind::bilinear) return qbinom(s, r, spec.q);
  return binomial(s, r);
}

BigInt theta(const FamilySpec& spec, int r) {
  check_ranks(spec, r, r);
  switch (spec.kind) {
    case FamilyKind::johnson:
      return binomial(spec.v - r, spec.m - r);
    case FamilyKind::grassmann:
      return qbinom(spec.v - r, spec.m - r, spec.q);
    case FamilyKind::hamming:
      return power(spec.n, spec.m - r);
    case FamilyKind::bilinear:
      // |Hom| grows by |F| = q^n per extra domain dimension.
      return power(BigInt(spec.q), static_cast<long long>(spec.n) * (spec.m - r));
    case FamilyKind::injection:
      return falling_ratio(spec.n - r, spec.n - spec.m);
    case FamilyKind::nbjohnson:
      return power(spec.n, spec.k - r) * binomial(spec.m - r, spec.k - r);
    case FamilyKind::signed_sets:
      return power(spec.m - 1, spec.k - r) * binomial(spec.m - r, spec.k - r);
  }
  return 0;
}

BigInt alpha(const FamilySpec& spec, int r, int s) {
  check_ranks(spec, r, s);
  return exact_div(theta(spec, r) * mu(spec, r, s), theta(spec, s), "alpha");
}

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::mu: return "mu";
    case Parameter::nu: return "nu";
    case Parameter::theta: return "theta";
    case Parameter::alpha: return "alpha";
  }
  return "?";
}

BigInt oracle_count(const Semilattice& lattice, Parameter which, std::span<const Element> witnesses, int rank_arg) {
  const int top = lattice.top_rank();
  auto need = [&](std::size_t count) {
    if (witnesses.size() != count)
      throw DomainError(std::string(to_string(which)) + " oracle needs " + std::to_string(count) + " witness(es)");
  };
  auto need_rank = [&]() {
    if (rank_arg < 0 || rank_arg > top) throw DomainError("rank argument " + std::to_string(rank_arg) + " out of range");
  };
  BigInt count = 0;
  switch (which) {
    case Parameter::mu: {
      need(2);
      need_rank();
      const Element& z = witnesses[0];
      const Element& y = witnesses[1];
      if (lattice.rank(y) != top) throw DomainError("mu oracle: y must be a top element");
      if (!lattice.leq(z, y)) throw DomainError("mu oracle: z must lie below y");
      if (rank_arg < lattice.rank(z)) throw DomainError("mu oracle: s must be at least rank(z)");
      for (const auto& u : lattice.enumerate_fiber(rank_arg))
        if (lattice.leq(z, u) && lattice.leq(u, y)) ++count;
      break;
    }
    case Parameter::nu: {
      need(1);
      need_rank();
      if (rank_arg > lattice.rank(witnesses[0])) throw DomainError("nu oracle: r must not exceed rank(u)");
      for (const auto& z : lattice.enumerate_fiber(rank_arg))
        if (lattice.leq(z, witnesses[0])) ++count;
      break;
    }
    case Parameter::theta: {
      need(1);
      for (const auto& z : lattice.enumerate_fiber(top))
        if (lattice.leq(witnesses[0], z)) ++count;
      break;
    }
    case Parameter::alpha: {
      need(1);
      need_rank();
      if (rank_arg < lattice.rank(witnesses[0])) throw DomainError("alpha oracle: s must be at least rank(u)");
      for (const auto& z : lattice.enumerate_fiber(rank_arg))
        if (lattice.leq(witnesses[0], z)) ++count;
      break;
    }
  }
  return count;
}

}  // namespace ekr
