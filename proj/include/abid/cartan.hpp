#pragma once

#include <algorithm>
#include <numeric>

#include "abid/common.hpp"

namespace abid {

enum class Family : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

inline char family_char(Family f) { return static_cast<char>(f); }

inline Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return static_cast<Family>(c);
    default:
      throw Error(std::string("unknown family '") + c + "'");
  }
}

// admissible (family, rank) pairs for finite irreducible systems
inline bool valid_family_rank(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

inline std::string type_name(Family f, int rank) {
  return std::string(1, family_char(f)) + std::to_string(rank);
}

// A Cartan matrix together with the minimal positive integer symmetrizers
// d_i, normalized so that a_ij * d_j is symmetric.
struct CartanDatum {
  Family family;
  int rank = 0;
  IntMat cartan;        // a[i][j] = <alpha_i, alpha_j^vee>, 0-based
  IntVec symmetrizers;  // d, with a[i][j]*d[j] == a[j][i]*d[i]
};

namespace detail {

// determinant of the leading k x k block, exact (entries stay tiny)
inline long long leading_minor(const IntMat& s, int k) {
  std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = s[i][j];
  Rat det{1};
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int r = c; r < k; ++r)
      if (m[r][c].numerator() != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) { std::swap(m[piv], m[c]); det = -det; }
    det *= m[c][c];
    for (int r = c + 1; r < k; ++r) {
      const Rat f = m[r][c] / m[c][c];
      for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  if (det.denominator() != 1) throw std::logic_error("minor not integral");
  return det.numerator();
}

}  // namespace detail

// Compute minimal positive integer symmetrizers for a generalized Cartan
// matrix; throws InvalidCartanError if none exist or the graph is
// disconnected.
inline IntVec compute_symmetrizers(const IntMat& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rat> d(n, Rat{0});
  d[0] = 1;
  std::vector<int> queue{0};
  std::size_t head = 0;
  while (head < queue.size()) {
    const int i = queue[head++];
    for (int j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0) continue;
      // want a[i][j]*d[j] == a[j][i]*d[i]
      const Rat dj = d[i] * Rat(a[j][i], a[i][j]);
      if (d[j].numerator() == 0) {
        d[j] = dj;
        queue.push_back(j);
      } else if (d[j] != dj) {
        throw InvalidCartanError("Cartan matrix is not symmetrizable");
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (d[i].numerator() == 0) throw InvalidCartanError("Cartan matrix is not connected");
  long long den_lcm = 1;
  for (const auto& x : d) den_lcm = std::lcm(den_lcm, x.denominator());
  IntVec out(n);
  long long g = 0;
  for (int i = 0; i < n; ++i) {
    const Rat v = d[i] * den_lcm;
    out[i] = static_cast<int>(v.numerator());
    g = std::gcd(g, static_cast<long long>(out[i]));
  }
  for (auto& x : out) x = static_cast<int>(x / g);
  for (int x : out)
    if (x <= 0) throw InvalidCartanError("symmetrizers are not positive");
  return out;
}

// Full validation of a finite-type Cartan matrix: entry ranges, zero
// symmetry, symmetrizability, connectedness, positive definiteness.
inline IntVec validate_cartan(const IntMat& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw InvalidCartanError("empty Cartan matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw InvalidCartanError("Cartan matrix is not square");
    if (a[i][i] != 2) throw InvalidCartanError("diagonal entries must equal 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0 || a[i][j] < -3)
        throw InvalidCartanError("off-diagonal entries must lie in {0,-1,-2,-3}");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw InvalidCartanError("zero pattern must be symmetric");
    }
  }
  IntVec d = compute_symmetrizers(a);
  // symmetrized matrix s[i][j] = a[i][j]*d[j] must be positive definite
  IntMat s(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = a[i][j] * d[j];
  for (int k = 1; k <= n; ++k)
    if (detail::leading_minor(s, k) <= 0)
      throw InvalidCartanError("Cartan matrix is not positive definite");
  return d;
}

// Cartan matrices in the standard (Bourbaki) numbering.
//   A_n: path 1-2-...-n
//   B_n: path with alpha_n short (a[n-1][n] = -2)
//   C_n: path with alpha_n long  (a[n][n-1] = -2)
//   D_n: path 1-...-(n-2) with n-1 and n attached to n-2
//   E_n: path 1-3-4-...-n with 2 attached to 4
//   F_4: 1-2=>3-4 (alpha_1, alpha_2 long)
//   G_2: alpha_1 short, alpha_2 long, a[2][1] = -3
inline CartanDatum cartan_datum(Family f, int rank) {
  if (!valid_family_rank(f, rank))
    throw Error("invalid family/rank combination " + type_name(f, rank));
  const int n = rank;
  IntMat a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (f) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 1; i <= n - 3; ++i) bond(i, i + 1);
      bond(n - 2, n - 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      bond(2, 4);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[1][2] = -2;
      break;
    case Family::G:
      bond(1, 2);
      a[1][0] = -3;
      break;
  }
  CartanDatum datum;
  datum.family = f;
  datum.rank = n;
  datum.cartan = std::move(a);
  datum.symmetrizers = validate_cartan(datum.cartan);
  return datum;
}

}  // namespace abid
