#pragma once

#include "abid/dynkin.hpp"

namespace abid {

// weakly decreasing positive parts; empty vector is the empty shape
using Partition = std::vector<int>;

inline void check_partition(const Partition& lam) {
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && lam[i] > lam[i - 1]) throw Error("partition parts must decrease");
  }
}

// the shapes attached to sl_n: first part plus number of parts at most n
inline bool in_staircase(const Partition& lam, int n) {
  if (lam.empty()) return true;
  return lam[0] + static_cast<int>(lam.size()) <= n;
}

inline void require_staircase(const Partition& lam, int n) {
  check_partition(lam);
  if (!in_staircase(lam, n))
    throw OutOfStaircaseError("shape does not fit the staircase for n=" + std::to_string(n));
}

inline Partition conjugate(const Partition& lam) {
  Partition out;
  if (lam.empty()) return out;
  out.resize(lam[0]);
  for (int i = 0; i < lam[0]; ++i) {
    int cnt = 0;
    for (int part : lam)
      if (part > i) ++cnt;
    out[i] = cnt;
  }
  return out;
}

inline std::size_t ideal_size(const Partition& lam) {
  std::size_t total = 0;
  for (int p : lam) total += p;
  return total;
}

inline std::string partition_str(const Partition& lam) {
  if (lam.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lam[i]);
  }
  return s;
}

// all shapes for sl_n, lexicographically sorted; there are 2^(n-1)
inline std::vector<Partition> staircase_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> rec = [&](int maxpart) {
    out.push_back(cur);
    for (int p = 1; p <= maxpart; ++p) {
      cur.push_back(p);
      if (in_staircase(cur, n)) rec(p);
      cur.pop_back();
    }
  };
  rec(n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

// conjugation, an involution on the staircase family
inline Partition tau(const Partition& lam, int n) {
  require_staircase(lam, n);
  return conjugate(lam);
}

// The order-n map on the staircase family, via the conjugate shape: with
// mu the conjugate of lam, the conjugate of sigma(lam) has parts
// n - lam_1 - 1, mu_1 - 1, ..., mu_{lam_1} - 1 (zeros dropped).
inline Partition sigma(const Partition& lam, int n) {
  require_staircase(lam, n);
  const int l1 = lam.empty() ? 0 : lam[0];
  const Partition mu = conjugate(lam);
  Partition nu;
  if (n - l1 - 1 > 0) nu.push_back(n - l1 - 1);
  for (int i = 0; i < l1; ++i)
    if (mu[i] - 1 > 0) nu.push_back(mu[i] - 1);
  const Partition out = conjugate(nu);
  if (!in_staircase(out, n)) throw std::logic_error("sigma left the staircase");
  return out;
}

// closed form for nonempty shapes: drop the first part, add one to the
// rest, pad with ones up to n - m - lam_1 extra rows
inline Partition sigma_direct(const Partition& lam, int n) {
  require_staircase(lam, n);
  if (lam.empty()) throw Error("closed form needs a nonempty shape");
  const int m = static_cast<int>(lam.size());
  Partition out;
  for (int h = 1; h < m; ++h) out.push_back(lam[h] + 1);
  for (int k = 0; k < n - m - lam[0]; ++k) out.push_back(1);
  return out;
}

// Weight of the attached ideal, computed in coordinate space: the vector
// sum_i lam'_i eps_i - sum_h lam_h eps_{n-h+1}, read off against the
// simple coroots of sl_n.
inline IntVec partition_weight_fw(const Partition& lam, int n) {
  require_staircase(lam, n);
  std::vector<long long> e(n, 0);
  const Partition mu = conjugate(lam);
  for (std::size_t i = 0; i < mu.size(); ++i) e[i] += mu[i];
  for (std::size_t h = 0; h < lam.size(); ++h) e[n - 1 - h] -= lam[h];
  IntVec u(n - 1, 0);
  for (int j = 0; j < n - 1; ++j) u[j] = e[j] - e[j + 1];
  return u;
}

// Row h of the shape holds the lam_h roots that are the intervals
// [j, n-h] for j = 1..lam_h, in the interval model of the A-series roots.
inline RootMask mask_of_partition(const RootSystem& rs, const Partition& lam) {
  if (rs.datum.family != Family::A) throw Error("shape model needs an A-series system");
  const int n = rs.n() + 1;
  require_staircase(lam, n);
  RootMask phi;
  for (std::size_t h = 0; h < lam.size(); ++h) {
    const int end = n - 1 - static_cast<int>(h);  // row h+1 holds [j, n-(h+1)]
    for (int j = 1; j <= lam[h]; ++j) {
      IntVec c(rs.n(), 0);
      for (int k = j; k <= end; ++k) c[k - 1] = 1;
      auto it = rs.index_of.find(c);
      if (it == rs.index_of.end()) throw std::logic_error("shape row is not a root interval");
      phi.set(it->second);
    }
  }
  return phi;
}

inline int ideal_of_partition(const AbelianIdeals& ideals, const Partition& lam) {
  const int idx = ideals.index_of_mask(mask_of_partition(ideals.rs(), lam));
  if (idx < 0) throw std::logic_error("shape mask is not an enumerated ideal");
  return idx;
}

inline Partition partition_of_ideal(const RootSystem& rs, const IdealSet& ideal) {
  if (rs.datum.family != Family::A) throw Error("shape model needs an A-series system");
  const int n = rs.n() + 1;
  std::vector<int> rows(n, 0);
  for (int r : ideal.phi.bits()) {
    const IntVec& c = rs.positive_roots[r].coeffs;
    int end = -1;
    for (int k = 0; k < rs.n(); ++k)
      if (c[k] == 1) end = k;
    const int h = rs.n() - end;  // interval ends at simple index end+1 = n-h
    ++rows[h];
  }
  Partition lam;
  for (int h = 1; h < n; ++h) {
    if (rows[h] == 0) break;
    lam.push_back(rows[h]);
  }
  if (mask_of_partition(rs, lam) != ideal.phi)
    throw std::logic_error("ideal is not of shape form");
  return lam;
}

// The full package for one rank: the shape family matches the ideal family,
// sigma and tau generate a dihedral symmetry group of order 2n, and both
// maps transport to the intrinsic ideal symmetries (the center element at
// the first node, and the diagram flip).
inline Report verify_dihedral(int n) {
  const RootSystem rs = build_root_system(Family::A, n - 1);
  const AbelianIdeals ideals(rs);
  const auto shapes = staircase_partitions(n);
  const std::string tag = "A" + std::to_string(n - 1);
  Report rep{"dihedral", {}};

  rep.add(tag + "/shape-count", std::to_string(ideals.size()),
          std::to_string(shapes.size()));

  std::map<Partition, int> pos;
  for (std::size_t i = 0; i < shapes.size(); ++i) pos[shapes[i]] = static_cast<int>(i);

  bool bijective = true;
  for (const Partition& lam : shapes) {
    const int idx = ideal_of_partition(ideals, lam);
    if (partition_of_ideal(rs, ideals.ideal(idx)) != lam) bijective = false;
    if (ideals.ideal(idx).weight_fw != partition_weight_fw(lam, n)) bijective = false;
    if (static_cast<int>(ideal_size(lam)) != ideals.ideal(idx).grade) bijective = false;
  }
  rep.add_bool(tag + "/shape-ideal-bijection", bijective);

  bool closed_form_ok = true;
  for (const Partition& lam : shapes)
    if (!lam.empty() && sigma_direct(lam, n) != sigma(lam, n)) closed_form_ok = false;
  rep.add_bool(tag + "/sigma-closed-form", closed_form_ok);

  const int count = static_cast<int>(shapes.size());
  NodePermutation sp(count), tp(count);
  for (int i = 0; i < count; ++i) {
    sp[i] = pos.at(sigma(shapes[i], n));
    tp[i] = pos.at(tau(shapes[i], n));
  }

  int order = 1;
  NodePermutation acc = sp;
  while (acc != identity_perm(count)) {
    acc = compose_perm(sp, acc);
    ++order;
  }
  rep.add(tag + "/sigma-order", std::to_string(n), std::to_string(order));
  rep.add_bool(tag + "/tau-involution", compose_perm(tp, tp) == identity_perm(count));
  rep.add_bool(tag + "/tau-sigma-tau-inverts",
               compose_perm(tp, compose_perm(sp, tp)) == inverse_perm(sp));
  const auto group = generate_group({sp, tp}, count);
  const int expected_order = n >= 3 ? 2 * n : n;
  rep.add(tag + "/group-order", std::to_string(expected_order),
          std::to_string(group.size()));

  NodePermutation via_center(count), via_flip(count);
  const CenterAction z1 = make_center_action(rs, CenterElement{1});
  const DiagramAut flip{minus_w0_perm(rs)};
  bool transport_ok = true;
  for (const Partition& lam : shapes) {
    const int idx = ideal_of_partition(ideals, lam);
    if (act_center(ideals, z1, idx) != ideal_of_partition(ideals, sigma(lam, n)))
      transport_ok = false;
    if (act_diagram(ideals, flip, idx) != ideal_of_partition(ideals, tau(lam, n)))
      transport_ok = false;
  }
  rep.add_bool(tag + "/sigma-is-center-action", transport_ok);
  return rep;
}

}  // namespace abid
