// Brute-force reference computations used by the tests. Nothing here calls
// into the library: counts come from direct enumeration of raw sets, maps
// and vectors.
#ifndef EKR_TESTS_ORACLE_HPP
#define EKR_TESTS_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Pascal's triangle.
inline long long choose(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  std::vector<std::vector<long long>> t(a + 1);
  for (int i = 0; i <= a; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[a][b];
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// k-subsets of {1..v} as bitmasks.
inline std::vector<unsigned> subsets(int v, int k) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1U << v); ++mask)
    if (std::popcount(mask) == k) out.push_back(mask);
  return out;
}

// Vectors of GF(p)^d (p prime) encoded base p, least significant digit = last coordinate.
using Space = std::vector<int>;  // sorted codes of all vectors in a subspace

inline int add_vec(int a, int b, int p, int d) {
  int out = 0, scale = 1;
  for (int i = 0; i < d; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

inline int scale_vec(int a, int c, int p, int d) {
  int out = 0, scale = 1;
  for (int i = 0; i < d; ++i) {
    out += ((a % p) * c % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

inline Space extend(const Space& s, int g, int p, int d) {
  std::set<int> out;
  for (int x : s)
    for (int c = 0; c < p; ++c) out.insert(add_vec(x, scale_vec(g, c, p, d), p, d));
  return {out.begin(), out.end()};
}

// Every subspace of GF(p)^d of dimension k.
inline std::set<Space> subspaces(int p, int d, int k) {
  std::set<Space> level{{0}};
  const int total = static_cast<int>(ipow(p, d));
  for (int step = 0; step < k; ++step) {
    std::set<Space> next;
    for (const auto& s : level)
      for (int g = 0; g < total; ++g)
        if (!std::binary_search(s.begin(), s.end(), g)) next.insert(extend(s, g, p, d));
    level = std::move(next);
  }
  return level;
}

inline Space span(const std::vector<int>& gens, int p, int d) {
  Space s{0};
  for (int g : gens) s = extend(s, g, p, d);
  return s;
}

// Encodes a coordinate list (first coordinate most significant).
inline int code(const std::vector<int>& coords, int p) {
  int out = 0;
  for (int c : coords) out = out * p + c;
  return out;
}

// Partial maps {1..m} -> values, restricted by `allowed(pos, val)`, with
// exactly k defined positions; optionally injective.
inline long long count_maps(int m, const std::vector<int>& values, int k, bool injective,
                            const std::function<bool(int, int)>& allowed) {
  const int choices = static_cast<int>(values.size()) + 1;  // last choice = undefined
  long long count = 0;
  std::vector<int> a(m, 0);
  const long long total = ipow(choices, m);
  for (long long code_ = 0; code_ < total; ++code_) {
    long long c = code_;
    for (int i = 0; i < m; ++i) {
      a[i] = static_cast<int>(c % choices);
      c /= choices;
    }
    int defined = 0;
    bool ok = true;
    std::set<int> used;
    for (int i = 0; i < m && ok; ++i) {
      if (a[i] == choices - 1) continue;
      ++defined;
      const int val = values[a[i]];
      if (!allowed(i + 1, val)) ok = false;
      if (injective && !used.insert(val).second) ok = false;
    }
    if (ok && defined == k) ++count;
  }
  return count;
}

inline std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

// Fano plane lines {x, x+1, x+3} mod 7 on points 1..7, as sorted text.
inline std::vector<std::string> fano_lines() {
  std::vector<std::string> out;
  for (int x = 0; x < 7; ++x) {
    std::vector<int> line{x % 7 + 1, (x + 1) % 7 + 1, (x + 3) % 7 + 1};
    std::sort(line.begin(), line.end());
    out.push_back(std::to_string(line[0]) + " " + std::to_string(line[1]) + " " + std::to_string(line[2]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

#endif  // EKR_TESTS_ORACLE_HPP
