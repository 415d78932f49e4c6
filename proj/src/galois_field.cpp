#include "ekr/galois_field.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "ekr/error.hpp"

namespace ekr {

namespace {

struct ConwayEntry {
  int p;
  int degree;
  // Coefficients of the monic polynomial, constant term first, leading 1 omitted.
  std::array<int, 6> low;
};

constexpr ConwayEntry kConway[] = {
    {2, 2, {1, 1}},
    {2, 3, {1, 1, 0}},
    {2, 4, {1, 1, 0, 0}},
    {2, 5, {1, 0, 1, 0, 0}},
    {2, 6, {1, 1, 0, 1, 1, 0}},
    {3, 2, {2, 2}},
    {3, 3, {1, 2, 0}},
    {5, 2, {2, 4}},
    {7, 2, {3, 6}},
};

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(int q, int& p, int& e) {
  if (q < 2) return false;
  int d = 2;
  while (q % d != 0) ++d;
  p = d;
  e = 0;
  while (q % d == 0) {
    q /= d;
    ++e;
  }
  return q == 1;
}

GaloisField::GaloisField(int q) : q_(q) {
  if (!prime_power(q, p_, degree_)) throw DomainError("q=" + std::to_string(q) + " is not a prime power");
  if (degree_ == 1) {
    if (q > kMaxPrime) throw DomainError("prime field order " + std::to_string(q) + " too large");
    return;
  }
  const ConwayEntry* entry = nullptr;
  for (const auto& c : kConway)
    if (c.p == p_ && c.degree == degree_) entry = &c;
  if (entry == nullptr) throw DomainError("no field table for q=" + std::to_string(q) + " (prime powers up to 64)");

  // x^e = -(low coefficients); build successive powers of x.
  log_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  std::vector<int> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    const int a = undigits(cur, p_);
    if (k > 0 && a == 1) throw std::logic_error("field polynomial is not primitive");
    exp_[k] = static_cast<Symbol>(a);
    log_[a] = static_cast<Symbol>(k);
    const int carry = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < degree_; ++i) cur[i] = ((cur[i] - carry * entry->low[i]) % p_ + p_) % p_;
  }
  if (undigits(cur, p_) != 1) throw std::logic_error("field polynomial is not primitive");

  add_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a, p_, degree_);
    std::vector<int> dn(degree_);
    for (int i = 0; i < degree_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Symbol>(undigits(dn, p_));
    for (int b = 0; b < q_; ++b) {
      auto ds = digits(b, p_, degree_);
      for (int i = 0; i < degree_; ++i) ds[i] = (ds[i] + da[i]) % p_;
      add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<Symbol>(undigits(ds, p_));
    }
  }
}

Symbol GaloisField::add(Symbol a, Symbol b) const {
  if (degree_ == 1) return static_cast<Symbol>((a + b) % q_);
  return add_[static_cast<std::size_t>(a) * q_ + b];
}

Symbol GaloisField::neg(Symbol a) const {
  if (degree_ == 1) return static_cast<Symbol>((q_ - a) % q_);
  return neg_[a];
}

Symbol GaloisField::sub(Symbol a, Symbol b) const { return add(a, neg(b)); }

Symbol GaloisField::mul(Symbol a, Symbol b) const {
  if (a == 0 || b == 0) return 0;
  if (degree_ == 1) return static_cast<Symbol>((static_cast<long>(a) * b) % q_);
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

Symbol GaloisField::inv(Symbol a) const {
  if (a == 0) throw DomainError("inverse of zero");
  if (degree_ == 1) {
    // a^(q-2) mod q
    long result = 1, base = a;
    for (int e = q_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % q_;
      base = base * base % q_;
    }
    return static_cast<Symbol>(result);
  }
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

}  // namespace ekr
