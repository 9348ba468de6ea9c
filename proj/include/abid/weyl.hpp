#pragma once

#include "abid/rootsys.hpp"

namespace abid {

// An element of the finite Weyl group, kept as exact integer matrices for
// its action on the root lattice and on the coroot lattice (columns are
// images of basis vectors).  The fundamental-weight action is derived:
// <w lambda, alpha_j^vee> = <lambda, w^{-1} alpha_j^vee>.
struct FiniteWeyl {
  IntMat root, root_inv;
  IntMat coroot, coroot_inv;

  static FiniteWeyl ident(int n) {
    FiniteWeyl w;
    w.root = w.root_inv = w.coroot = w.coroot_inv = identity_mat(n);
    return w;
  }

  IntVec apply_root(const IntVec& c) const { return mat_vec(root, c); }
  IntVec apply_root_inv(const IntVec& c) const { return mat_vec(root_inv, c); }
  IntVec apply_coroot(const IntVec& h) const { return mat_vec(coroot, h); }
  IntVec apply_coroot_inv(const IntVec& h) const { return mat_vec(coroot_inv, h); }

  IntVec apply_weight_fw(const IntVec& u) const {
    const int n = static_cast<int>(u.size());
    IntVec out(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) out[j] += u[i] * coroot_inv[i][j];
    return out;
  }

  FiniteWeyl inverse() const { return FiniteWeyl{root_inv, root, coroot_inv, coroot}; }

  bool is_identity() const {
    const int n = static_cast<int>(root.size());
    return root == identity_mat(n);
  }

  friend bool operator==(const FiniteWeyl& a, const FiniteWeyl& b) {
    return a.root == b.root;
  }
};

// a followed after b: (a*b)(x) = a(b(x))
inline FiniteWeyl compose(const FiniteWeyl& a, const FiniteWeyl& b) {
  FiniteWeyl w;
  w.root = mat_mul(a.root, b.root);
  w.root_inv = mat_mul(b.root_inv, a.root_inv);
  w.coroot = mat_mul(a.coroot, b.coroot);
  w.coroot_inv = mat_mul(b.coroot_inv, a.coroot_inv);
  return w;
}

// s_i, 1-based generator index i in {1..n}
inline FiniteWeyl simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.n();
  const auto& a = rs.cartan();
  FiniteWeyl w = FiniteWeyl::ident(n);
  const int k = i - 1;
  for (int j = 0; j < n; ++j) {
    w.root[k][j] -= a[j][k];    // s_i(alpha_j) = alpha_j - a_{ji} alpha_i
    w.coroot[k][j] -= a[k][j];  // s_i(alpha_j^vee) = alpha_j^vee - a_{ij} alpha_i^vee
  }
  w.root_inv = w.root;
  w.coroot_inv = w.coroot;
  return w;
}

// reflection in the highest root
inline FiniteWeyl theta_reflection(const RootSystem& rs) {
  const int n = rs.n();
  FiniteWeyl w = FiniteWeyl::ident(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      w.root[i][j] -= rs.pair_theta_covee[j] * rs.marks[i];
      w.coroot[i][j] -= rs.theta_fw[j] * rs.comarks[i];
    }
  w.root_inv = w.root;
  w.coroot_inv = w.coroot;
  return w;
}

// word [i_1, ..., i_k] denotes s_{i_1} s_{i_2} ... s_{i_k}
inline FiniteWeyl weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  FiniteWeyl w = FiniteWeyl::ident(rs.n());
  for (int i : word) w = compose(w, simple_reflection(rs, i));
  return w;
}

// apply a word of finite generators to fundamental-weight coordinates,
// rightmost letter first; exact on any integral weight
inline IntVec apply_word_to_fw(const RootSystem& rs, const std::vector<int>& word, IntVec u) {
  const auto& a = rs.cartan();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int k = *it - 1;
    const int c = u[k];
    if (c == 0) continue;
    for (int j = 0; j < rs.n(); ++j) u[j] -= c * a[k][j];
  }
  return u;
}

namespace detail {

// descend rho through the positive chamber walls; restricting the allowed
// generators to a subset yields the longest element of that parabolic
inline std::vector<int> descent_word(const RootSystem& rs, int excluded) {
  IntVec lam(rs.n(), 1);
  std::vector<int> steps;
  const auto& a = rs.cartan();
  while (true) {
    int pick = 0;
    for (int i = 1; i <= rs.n(); ++i) {
      if (i == excluded) continue;
      if (lam[i - 1] > 0) { pick = i; break; }
    }
    if (pick == 0) break;
    const int c = lam[pick - 1];
    for (int j = 0; j < rs.n(); ++j) lam[j] -= c * a[pick - 1][j];
    steps.push_back(pick);
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace detail

// reduced word for the longest element w_0
inline std::vector<int> longest_word(const RootSystem& rs) {
  auto w = detail::descent_word(rs, 0);
  if (static_cast<int>(w.size()) != rs.count())
    throw std::logic_error("longest element has wrong length");
  return w;
}

// reduced word for the longest element of the parabolic generated by all
// simple reflections except s_i
inline std::vector<int> longest_parabolic_word(const RootSystem& rs, int excluded_i) {
  return detail::descent_word(rs, excluded_i);
}

// sum of the inversion set N(v) = {alpha > 0 : v^{-1} alpha < 0}, in
// fundamental-weight coordinates
inline IntVec inversion_sum_fw(const RootSystem& rs, const FiniteWeyl& v) {
  IntVec total(rs.n(), 0);
  for (int r = 0; r < rs.count(); ++r) {
    const IntVec pre = v.apply_root_inv(rs.positive_roots[r].coeffs);
    bool neg = true;
    for (int x : pre)
      if (x > 0) { neg = false; break; }
    if (neg) total = vec_add(total, rs.fw[r]);
  }
  return total;
}

// the permutation f of {1..n} with -w_0(alpha_i) = alpha_{f(i)}; stored with
// f[0] = 0 so it doubles as a diagram automorphism fixing the affine node
inline std::vector<int> minus_w0_perm(const RootSystem& rs) {
  const FiniteWeyl w0 = weyl_from_word(rs, longest_word(rs));
  std::vector<int> f(rs.n() + 1, 0);
  for (int i = 1; i <= rs.n(); ++i) {
    IntVec img = vec_neg(mat_col(w0.root, i - 1));
    auto it = rs.index_of.find(img);
    if (it == rs.index_of.end() || rs.height[it->second] != 1)
      throw std::logic_error("-w0 does not permute the simple roots");
    for (int j = 0; j < rs.n(); ++j)
      if (img[j] == 1) f[i] = j + 1;
  }
  return f;
}

}  // namespace abid
