#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace abid {

using IntVec = std::vector<int>;
using IntMat = std::vector<std::vector<int>>;  // row-major, m[i][j]
using Rat = boost::rational<long long>;

// ---------------------------------------------------------------------------
// errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cartan matrix fails a structural requirement (symmetrizability,
// positive definiteness, connectedness, entry ranges).
struct InvalidCartanError : Error { using Error::Error; };

// a word over the affine generators is not reduced
struct NonReducedError : Error { using Error::Error; };

// an eta-vector pairing falls outside {-2,-1,0,1}
struct RangeViolationError : Error { using Error::Error; };

// a root subset (or generated closure) is not an abelian set
struct NotAbelianError : Error { using Error::Error; };

// a partition does not fit the staircase bound lambda_1 + #parts <= n
struct OutOfStaircaseError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// small dense integer linear algebra; sizes here never exceed 9x9

inline IntMat identity_mat(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntVec mat_vec(const IntMat& m, const IntVec& v) {
  const int n = static_cast<int>(m.size());
  IntVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < static_cast<int>(v.size()); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int p = static_cast<int>(b[0].size());
  IntMat out(n, IntVec(p, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      const int a_it = a[i][t];
      if (a_it == 0) continue;
      for (int j = 0; j < p; ++j) out[i][j] += a_it * b[t][j];
    }
  return out;
}

inline int dot(const IntVec& a, const IntVec& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec vec_add(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline IntVec vec_sub(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline IntVec vec_scaled(IntVec a, int c) {
  for (auto& x : a) x *= c;
  return a;
}

inline IntVec vec_neg(IntVec a) {
  for (auto& x : a) x = -x;
  return a;
}

inline bool vec_is_zero(const IntVec& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

// componentwise v >= 0, v != 0
inline bool vec_nonneg_nonzero(const IntVec& a) {
  bool nonzero = false;
  for (int x : a) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

inline int vec_sum(const IntVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

// column j of m
inline IntVec mat_col(const IntMat& m, int j) {
  IntVec c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
  return c;
}

inline IntMat mat_transpose(const IntMat& m) {
  const int r = static_cast<int>(m.size());
  const int c = static_cast<int>(m[0].size());
  IntMat t(c, IntVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) t[j][i] = m[i][j];
  return t;
}

// ---------------------------------------------------------------------------
// RootMask: subset of the positive roots as a fixed 128-bit set.
// The largest system handled (rank 8) has 120 positive roots.

struct RootMask {
  std::array<std::uint64_t, 2> w{0, 0};

  friend auto operator<=>(const RootMask&, const RootMask&) = default;

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]);
  }
  bool empty() const { return w[0] == 0 && w[1] == 0; }

  bool subset_of(const RootMask& o) const {
    return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
  }
  bool intersects(const RootMask& o) const {
    return (w[0] & o.w[0]) != 0 || (w[1] & o.w[1]) != 0;
  }

  RootMask operator|(const RootMask& o) const {
    return RootMask{{w[0] | o.w[0], w[1] | o.w[1]}};
  }
  RootMask operator&(const RootMask& o) const {
    return RootMask{{w[0] & o.w[0], w[1] & o.w[1]}};
  }
  // elements of *this not in o
  RootMask minus(const RootMask& o) const {
    return RootMask{{w[0] & ~o.w[0], w[1] & ~o.w[1]}};
  }

  std::vector<int> bits() const {
    std::vector<int> out;
    for (int blk = 0; blk < 2; ++blk) {
      std::uint64_t x = w[blk];
      while (x) {
        const int b = __builtin_ctzll(x);
        out.push_back(blk * 64 + b);
        x &= x - 1;
      }
    }
    return out;
  }

  static RootMask single(int i) {
    RootMask m;
    m.set(i);
    return m;
  }
};

}  // namespace abid
