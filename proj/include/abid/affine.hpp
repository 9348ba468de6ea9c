#pragma once

#include <sstream>

#include "abid/weyl.hpp"

namespace abid {

// The real affine root alpha + level*delta, stored by the coefficients of
// its finite part over the simple roots.
struct AffineRoot {
  IntVec finite;
  int level = 0;

  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;

  bool is_positive() const {
    if (level != 0) return level > 0;
    return vec_nonneg_nonzero(finite);
  }
  bool is_negative() const {
    AffineRoot neg{vec_neg(finite), -level};
    return neg.is_positive();
  }
};

// alpha_0 = delta - theta for i = 0, else the finite simple root alpha_i
inline AffineRoot simple_affine_root(const RootSystem& rs, int i) {
  if (i == 0) return AffineRoot{vec_neg(rs.theta.coeffs), 1};
  IntVec e(rs.n(), 0);
  e[i - 1] = 1;
  return AffineRoot{std::move(e), 0};
}

// action of the generator s_gen on an affine root.  For gen >= 1 this is the
// finite reflection on the finite part; s_0 reflects through theta and
// shifts the level by <alpha, theta^vee>.
inline AffineRoot reflect_affine(const RootSystem& rs, int gen, AffineRoot a) {
  const int n = rs.n();
  if (gen == 0) {
    int k = 0;
    for (int j = 0; j < n; ++j) k += a.finite[j] * rs.pair_theta_covee[j];
    for (int j = 0; j < n; ++j) a.finite[j] -= k * rs.marks[j];
    a.level += k;
    return a;
  }
  const int i = gen - 1;
  int k = 0;
  for (int j = 0; j < n; ++j) k += a.finite[j] * rs.cartan()[j][i];
  a.finite[i] -= k;
  return a;
}

// word [i_1,...,i_k] acts as the composite s_{i_1} ... s_{i_k}; the
// rightmost letter is applied first
inline AffineRoot act_on_affine_root(const RootSystem& rs, const std::vector<int>& word,
                                     AffineRoot a) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) a = reflect_affine(rs, *it, a);
  return a;
}

// N(w) = {alpha_{i_1}, s_{i_1}(alpha_{i_2}), ..., s_{i_1}...s_{i_{k-1}}(alpha_{i_k})};
// a repeated or negative entry certifies that the word is not reduced
inline std::vector<AffineRoot> inversion_set(const RootSystem& rs,
                                             const std::vector<int>& word) {
  std::vector<AffineRoot> out;
  out.reserve(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    AffineRoot img = simple_affine_root(rs, word[j]);
    for (std::size_t t = j; t-- > 0;) img = reflect_affine(rs, word[t], img);
    if (!img.is_positive())
      throw NonReducedError("word is not reduced: negative inversion at position " +
                            std::to_string(j));
    for (const auto& prev : out)
      if (prev == img)
        throw NonReducedError("word is not reduced: repeated inversion at position " +
                              std::to_string(j));
    out.push_back(std::move(img));
  }
  return out;
}

// w = t_tau v with tau in the coroot lattice and v finite; accumulated left
// to right, one letter at a time
struct Decomposition {
  IntVec translation;  // coroot coordinates of tau
  FiniteWeyl linear;   // v
};

inline Decomposition decompose(const RootSystem& rs, const std::vector<int>& word) {
  Decomposition d{IntVec(rs.n(), 0), FiniteWeyl::ident(rs.n())};
  const FiniteWeyl s_theta = theta_reflection(rs);
  for (int letter : word) {
    if (letter == 0) {
      d.translation = vec_add(d.translation, d.linear.apply_coroot(rs.comarks));
      d.linear = compose(d.linear, s_theta);
    } else {
      d.linear = compose(d.linear, simple_reflection(rs, letter));
    }
  }
  return d;
}

// eta = v^{-1}(tau); for a minuscule word every pairing <alpha, eta> with
// alpha positive lies in {-2,-1,0,1} (reading the admissible set as four
// values, with -2 and -1 listed separately)
inline IntVec eta(const RootSystem& rs, const std::vector<int>& word) {
  const Decomposition d = decompose(rs, word);
  IntVec h = d.linear.apply_coroot_inv(d.translation);
  for (int r = 0; r < rs.count(); ++r) {
    const int p = dot(rs.fw[r], h);
    if (p < -2 || p > 1) {
      std::ostringstream msg;
      msg << "eta pairing " << p << " with positive root #" << r
          << " falls outside {-2,-1,0,1}; the word is not minuscule";
      throw RangeViolationError(msg.str());
    }
  }
  return h;
}

// Action on integral weights at level h_dual, in fundamental-weight
// coordinates:
//   s_0(lambda) = lambda - (<lambda, theta^vee> - h_dual) * theta
//   s_i(lambda) = lambda - lambda_i * alpha_i
// Letters act rightmost first.
inline IntVec affine_act_on_weight(const RootSystem& rs, const std::vector<int>& word,
                                   IntVec u) {
  const auto& a = rs.cartan();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == 0) {
      const int t = dot(u, rs.comarks) - rs.h_dual;
      for (int j = 0; j < rs.n(); ++j) u[j] -= t * rs.theta_fw[j];
    } else {
      const int k = *it - 1;
      const int c = u[k];
      for (int j = 0; j < rs.n(); ++j) u[j] -= c * a[k][j];
    }
  }
  return u;
}

// order of s_i s_j in the affine Weyl group, from the extended Cartan
// matrix; 0 encodes an infinite order (only in affine type A_1)
inline int affine_braid_order(const RootSystem& rs, int i, int j) {
  if (i == j) return 1;
  const int p = rs.ext_cartan[i][j] * rs.ext_cartan[j][i];
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

// A word over the affine generators with its derived data.
class AffineWord {
 public:
  AffineWord(const RootSystem& rs, std::vector<int> letters) : letters_(std::move(letters)) {
    for (int l : letters_)
      if (l < 0 || l > rs.n()) throw Error("generator index out of range");
    try {
      inversions_ = abid::inversion_set(rs, letters_);
      reduced_ = true;
    } catch (const NonReducedError&) {
      reduced_ = false;
    }
    const Decomposition d = decompose(rs, letters_);
    translation_ = d.translation;
    linear_ = d.linear;
  }

  const std::vector<int>& letters() const { return letters_; }
  bool is_reduced() const { return reduced_; }
  const std::vector<AffineRoot>& inversion_set() const {
    if (!reduced_) throw NonReducedError("inversion set requested for a non-reduced word");
    return inversions_;
  }
  const IntVec& translation() const { return translation_; }
  const FiniteWeyl& linear_part() const { return linear_; }

 private:
  std::vector<int> letters_;
  bool reduced_ = false;
  std::vector<AffineRoot> inversions_;
  IntVec translation_;
  FiniteWeyl linear_;
};

}  // namespace abid
