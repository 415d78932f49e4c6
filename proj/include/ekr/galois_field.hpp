#ifndef EKR_GALOIS_FIELD_HPP
#define EKR_GALOIS_FIELD_HPP

#include <cstdint>
#include <vector>

namespace ekr {

using Symbol = std::uint16_t;

/// Arithmetic in GF(q). Elements are the integers 0..q-1; for q = p^e an
/// element encodes the polynomial sum c_i x^i as sum c_i p^i.
///
/// Prime fields use plain modular arithmetic. Proper prime powers up to 64
/// use log/antilog tables over a Conway polynomial, whose root x is primitive.
class GaloisField {
 public:
  explicit GaloisField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  bool is_prime() const { return degree_ == 1; }

  Symbol add(Symbol a, Symbol b) const;
  Symbol sub(Symbol a, Symbol b) const;
  Symbol neg(Symbol a) const;
  Symbol mul(Symbol a, Symbol b) const;
  Symbol inv(Symbol a) const;

  /// Largest q accepted for a prime field.
  static constexpr int kMaxPrime = 32749;

 private:
  int q_;
  int p_;
  int degree_;
  std::vector<Symbol> log_;
  std::vector<Symbol> exp_;
  std::vector<Symbol> add_;
  std::vector<Symbol> neg_;
};

/// Decomposes q = p^e; returns false if q is not a prime power.
bool prime_power(int q, int& p, int& e);
bool is_prime(long long n);

}  // namespace ekr

#endif  // EKR_GALOIS_FIELD_HPP
