#pragma once

#include <map>
#include <optional>

#include "abid/cartan.hpp"

namespace abid {

enum class LengthClass { Long, Short };

// positive root as coefficients over the simple roots
struct RootVec {
  IntVec coeffs;
  LengthClass length_class = LengthClass::Long;
};

// A finite irreducible root system with every derived quantity the rest of
// the library needs, normalized so that (theta, theta) = 2.
struct RootSystem {
  CartanDatum datum;
  std::vector<RootVec> positive_roots;  // sorted by (height, coeffs)
  RootVec theta;                        // highest root
  IntVec marks;                         // theta = sum marks[i] * alpha_i
  IntVec comarks;                       // theta^vee = sum comarks[i] * alpha_i^vee
  int h_dual = 0;                       // 1 + sum(comarks)

  // caches
  std::map<IntVec, int> index_of;          // coeffs -> index in positive_roots
  std::vector<IntVec> fw;                  // fundamental-weight coords per root
  std::vector<int> height;                 // coefficient sums
  IntVec theta_fw;                         // <theta, alpha_j^vee>
  IntVec pair_theta_covee;                 // <alpha_j, theta^vee>
  std::vector<RootMask> up_strict;         // {s : root_s > root_r}, componentwise
  std::vector<RootMask> down_strict;       // {s : root_s < root_r}
  std::vector<RootMask> bad_partner;       // {s : root_r + root_s is a root}
  std::vector<std::vector<int>> sum_index; // index of alpha_r + alpha_s, or -1
  IntMat ext_cartan;                       // (n+1)x(n+1), index 0 = affine node
  int dmax = 1;                            // symmetrizer of the long roots

  int n() const { return datum.rank; }
  int count() const { return static_cast<int>(positive_roots.size()); }
  const IntMat& cartan() const { return datum.cartan; }

  bool is_long(int root_idx) const {
    return positive_roots[root_idx].length_class == LengthClass::Long;
  }
};

// dmax * (x, y) for x, y in root coordinates; always an integer
inline long long inner_scaled(const RootSystem& rs, const IntVec& x, const IntVec& y) {
  const auto& a = rs.cartan();
  const auto& d = rs.datum.symmetrizers;
  long long s = 0;
  for (int i = 0; i < rs.n(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rs.n(); ++j) s += static_cast<long long>(x[i]) * y[j] * a[i][j] * d[j];
  }
  return s;
}

// the invariant symmetric form, normalized so (theta, theta) = 2
inline Rat inner(const RootSystem& rs, const IntVec& x, const IntVec& y) {
  return Rat(inner_scaled(rs, x, y), rs.dmax);
}

// fundamental-weight coordinates of a root-lattice vector: u_j = <x, alpha_j^vee>
inline IntVec fw_coords(const RootSystem& rs, const IntVec& root_coords) {
  IntVec u(rs.n(), 0);
  const auto& a = rs.cartan();
  for (int j = 0; j < rs.n(); ++j)
    for (int i = 0; i < rs.n(); ++i) u[j] += root_coords[i] * a[i][j];
  return u;
}

// componentwise comparison in the root lattice order
inline bool root_leq(const RootSystem& rs, int lo, int hi) {
  const auto& x = rs.positive_roots[lo].coeffs;
  const auto& y = rs.positive_roots[hi].coeffs;
  for (int i = 0; i < rs.n(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

inline std::optional<RootVec> root_sum(const RootSystem& rs, const RootVec& x, const RootVec& y) {
  IntVec s = vec_add(x.coeffs, y.coeffs);
  auto it = rs.index_of.find(s);
  if (it == rs.index_of.end()) return std::nullopt;
  return rs.positive_roots[it->second];
}

namespace detail {

// classical positive root counts, used as a generation cross-check
inline int classical_root_count(Family f, int n) {
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace detail

// Closure generation of the positive roots by root strings: alpha + alpha_i
// is a root iff the alpha_i-string through alpha does not stop at alpha,
// i.e. q = p - <alpha, alpha_i^vee> > 0 where p counts the steps down.
inline RootSystem build_root_system(const CartanDatum& datum) {
  RootSystem rs;
  rs.datum = datum;
  const int n = datum.rank;
  const auto& a = datum.cartan;

  std::map<IntVec, int> seen;
  std::vector<IntVec> roots;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.emplace(e, static_cast<int>(roots.size()));
    roots.push_back(std::move(e));
  }
  std::size_t begin = 0;
  while (begin < roots.size()) {
    const std::size_t end = roots.size();
    for (std::size_t r = begin; r < end; ++r) {
      for (int i = 0; i < n; ++i) {
        const IntVec c = roots[r];  // copy: roots may reallocate
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += c[j] * a[j][i];
        int p = 0;
        IntVec down = c;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        if (p - pair <= 0) continue;
        IntVec up = c;
        up[i] += 1;
        if (!seen.count(up)) {
          seen.emplace(up, static_cast<int>(roots.size()));
          roots.push_back(std::move(up));
        }
      }
    }
    begin = end;
  }

  std::sort(roots.begin(), roots.end(), [](const IntVec& x, const IntVec& y) {
    const int hx = vec_sum(x), hy = vec_sum(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  if (static_cast<int>(roots.size()) != detail::classical_root_count(datum.family, n))
    throw std::logic_error("root closure count mismatch for " + type_name(datum.family, n));
  if (roots.size() > 128)
    throw Error("positive root count exceeds the 128-bit subset capacity");

  rs.dmax = *std::max_element(datum.symmetrizers.begin(), datum.symmetrizers.end());
  rs.positive_roots.reserve(roots.size());
  for (auto& c : roots) {
    RootVec rv;
    rv.coeffs = std::move(c);
    rs.positive_roots.push_back(std::move(rv));
  }
  for (int r = 0; r < rs.count(); ++r) {
    auto& rv = rs.positive_roots[r];
    const long long norm = inner_scaled(rs, rv.coeffs, rv.coeffs);
    rv.length_class = (norm == 2LL * rs.dmax) ? LengthClass::Long : LengthClass::Short;
    rs.index_of.emplace(rv.coeffs, r);
    rs.height.push_back(vec_sum(rv.coeffs));
    rs.fw.push_back(fw_coords(rs, rv.coeffs));
  }

  // highest root: the unique maximum of the root order
  rs.theta = rs.positive_roots.back();
  rs.marks = rs.theta.coeffs;
  for (int r = 0; r + 1 < rs.count(); ++r)
    if (!root_leq(rs, r, rs.count() - 1))
      throw std::logic_error("highest root is not a maximum");
  if (rs.theta.length_class != LengthClass::Long)
    throw std::logic_error("highest root must be long");

  // comarks: theta^vee = sum (d_i / dmax) marks_i alpha_i^vee
  rs.comarks.resize(n);
  for (int i = 0; i < n; ++i) {
    const int num = rs.marks[i] * rs.datum.symmetrizers[i];
    if (num % rs.dmax != 0) throw std::logic_error("comarks are not integral");
    rs.comarks[i] = num / rs.dmax;
  }
  rs.h_dual = 1 + vec_sum(rs.comarks);

  rs.theta_fw = rs.fw.back();
  rs.pair_theta_covee.assign(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rs.pair_theta_covee[j] += a[j][i] * rs.comarks[i];

  const int cnt = rs.count();
  rs.up_strict.assign(cnt, {});
  rs.down_strict.assign(cnt, {});
  rs.bad_partner.assign(cnt, {});
  rs.sum_index.assign(cnt, std::vector<int>(cnt, -1));
  for (int r = 0; r < cnt; ++r)
    for (int s = 0; s < cnt; ++s) {
      if (r != s) {
        if (root_leq(rs, r, s)) rs.up_strict[r].set(s);
        if (root_leq(rs, s, r)) rs.down_strict[r].set(s);
      }
      const IntVec sum = vec_add(rs.positive_roots[r].coeffs, rs.positive_roots[s].coeffs);
      auto it = rs.index_of.find(sum);
      if (it != rs.index_of.end()) {
        rs.sum_index[r][s] = it->second;
        rs.bad_partner[r].set(s);
      }
    }

  // extended Cartan matrix over {alpha_0 = delta - theta, alpha_1..alpha_n}
  rs.ext_cartan.assign(n + 1, IntVec(n + 1, 0));
  rs.ext_cartan[0][0] = 2;
  for (int j = 0; j < n; ++j) {
    rs.ext_cartan[0][j + 1] = -rs.theta_fw[j];
    rs.ext_cartan[j + 1][0] = -rs.pair_theta_covee[j];
    for (int i = 0; i < n; ++i) rs.ext_cartan[i + 1][j + 1] = a[i][j];
  }
  return rs;
}

inline RootSystem build_root_system(Family f, int rank) {
  return build_root_system(cartan_datum(f, rank));
}

}  // namespace abid
