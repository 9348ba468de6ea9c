#pragma once

#include <functional>

#include "abid/affine.hpp"

namespace abid {

// One abelian ideal of the Borel: the root set Phi, its canonical minuscule
// word, and every derived encoding.
struct IdealSet {
  RootMask phi;
  int grade = 0;               // |Phi|
  std::vector<int> word;       // lexicographically smallest reduced word
  IntVec weight_root;          // sum of Phi in root coordinates
  IntVec weight_fw;            // same in fundamental-weight coordinates
  std::vector<int> antichain;  // minimal elements of Phi, ascending root indices
  IntVec eta;                  // v^{-1}(tau), coroot coordinates
  IntMat aff;                  // images of the affine simple roots under w
};

struct HasseEdge {
  int lo = 0, hi = 0, label = 0;
  friend auto operator<=>(const HasseEdge&, const HasseEdge&) = default;
};

inline bool is_dual_order_ideal(const RootSystem& rs, const RootMask& phi) {
  for (int r : phi.bits())
    if (!rs.up_strict[r].subset_of(phi)) return false;
  return true;
}

inline bool is_abelian_set(const RootSystem& rs, const RootMask& phi) {
  for (int r : phi.bits())
    if (rs.bad_partner[r].intersects(phi)) return false;
  return true;
}

inline bool is_abelian_dual_ideal(const RootSystem& rs, const RootMask& phi) {
  return is_dual_order_ideal(rs, phi) && is_abelian_set(rs, phi);
}

namespace detail {

// decode an affine-basis coordinate column into (finite coeffs, level)
inline AffineRoot decode_affine_column(const RootSystem& rs, const IntVec& x) {
  AffineRoot a;
  a.level = x[0];
  a.finite.resize(rs.n());
  for (int k = 0; k < rs.n(); ++k) a.finite[k] = x[k + 1] - a.level * rs.marks[k];
  return a;
}

// right-multiplication matrices for the affine generators over the basis
// {alpha_0, ..., alpha_n}: column j of S_i is e_j - ext_cartan[j][i] e_i
inline std::vector<IntMat> affine_gen_mats(const RootSystem& rs) {
  const int m = rs.n() + 1;
  std::vector<IntMat> mats;
  mats.reserve(m);
  for (int i = 0; i < m; ++i) {
    IntMat s = identity_mat(m);
    for (int j = 0; j < m; ++j) s[i][j] -= rs.ext_cartan[j][i];
    mats.push_back(std::move(s));
  }
  return mats;
}

}  // namespace detail

// All abelian ideals with caches, in canonical order: by grade, then by
// lexicographic canonical word.
class AbelianIdeals {
 public:
  explicit AbelianIdeals(const RootSystem& rs) : rs_(&rs) { enumerate(); }

  const RootSystem& rs() const { return *rs_; }
  const std::vector<IdealSet>& all() const { return items_; }
  int size() const { return static_cast<int>(items_.size()); }
  const IdealSet& ideal(int i) const { return items_[i]; }

  int index_of_mask(const RootMask& m) const {
    auto it = by_mask_.find(m);
    return it == by_mask_.end() ? -1 : it->second;
  }
  std::optional<int> index_by_weight(const IntVec& fw) const {
    auto it = by_weight_.find(fw);
    if (it == by_weight_.end()) return std::nullopt;
    return it->second;
  }

  // every single-root extension found during the search; these are exactly
  // the covers of the inclusion order
  const std::vector<HasseEdge>& bfs_edges() const { return edges_; }

  const IdealSet& from_antichain(const std::vector<int>& roots) const;

 private:
  void enumerate();

  const RootSystem* rs_;
  std::vector<IdealSet> items_;
  std::map<RootMask, int> by_mask_;
  std::map<IntVec, int> by_weight_;
  std::vector<HasseEdge> edges_;
};

inline void AbelianIdeals::enumerate() {
  const RootSystem& rs = *rs_;
  const int n = rs.n();
  const auto gens = detail::affine_gen_mats(rs);
  const FiniteWeyl s_theta = theta_reflection(rs);
  const std::vector<FiniteWeyl> s_fin = [&] {
    std::vector<FiniteWeyl> v;
    for (int i = 1; i <= n; ++i) v.push_back(simple_reflection(rs, i));
    return v;
  }();

  struct Node {
    RootMask phi;
    std::vector<int> word;
    IntMat aff;
    IntVec tau;
    IntMat lin, lin_inv;  // coroot action of the linear part
  };

  std::vector<Node> nodes;
  nodes.push_back(Node{{}, {}, identity_mat(n + 1), IntVec(n, 0), identity_mat(n),
                       identity_mat(n)});
  by_mask_.emplace(RootMask{}, 0);

  // Layered search; parents are visited in canonical order and letters
  // ascending, so the first word reaching a set is its lexicographic
  // minimum among all reduced words.
  std::size_t lo = 0;
  while (lo < nodes.size()) {
    const std::size_t hi = nodes.size();
    for (std::size_t p = lo; p < hi; ++p) {
      for (int i = 0; i <= n; ++i) {
        const AffineRoot img = detail::decode_affine_column(rs, mat_col(nodes[p].aff, i));
        if (img.level != 1) continue;
        auto it = rs.index_of.find(vec_neg(img.finite));
        if (it == rs.index_of.end()) continue;
        const int beta = it->second;
        const RootMask& phi = nodes[p].phi;
        if (phi.test(beta)) continue;
        if (!rs.up_strict[beta].subset_of(phi)) continue;
        if (rs.bad_partner[beta].intersects(phi)) continue;
        RootMask next = phi;
        next.set(beta);
        auto found = by_mask_.find(next);
        int child;
        if (found == by_mask_.end()) {
          Node c;
          c.phi = next;
          c.word = nodes[p].word;
          c.word.push_back(i);
          c.aff = mat_mul(nodes[p].aff, gens[i]);
          if (i == 0) {
            c.tau = vec_add(nodes[p].tau, mat_vec(nodes[p].lin, rs.comarks));
            c.lin = mat_mul(nodes[p].lin, s_theta.coroot);
            c.lin_inv = mat_mul(s_theta.coroot, nodes[p].lin_inv);
          } else {
            c.tau = nodes[p].tau;
            c.lin = mat_mul(nodes[p].lin, s_fin[i - 1].coroot);
            c.lin_inv = mat_mul(s_fin[i - 1].coroot, nodes[p].lin_inv);
          }
          child = static_cast<int>(nodes.size());
          by_mask_.emplace(next, child);
          nodes.push_back(std::move(c));
        } else {
          child = found->second;
        }
        edges_.push_back(HasseEdge{static_cast<int>(p), child, i});
      }
    }
    lo = hi;
  }

  items_.reserve(nodes.size());
  for (const auto& nd : nodes) {
    IdealSet id;
    id.phi = nd.phi;
    id.grade = nd.phi.count();
    id.word = nd.word;
    id.weight_root.assign(n, 0);
    for (int r : nd.phi.bits())
      id.weight_root = vec_add(id.weight_root, rs.positive_roots[r].coeffs);
    id.weight_fw = fw_coords(rs, id.weight_root);
    for (int r : nd.phi.bits())
      if (!rs.down_strict[r].intersects(nd.phi)) id.antichain.push_back(r);
    id.eta = mat_vec(nd.lin_inv, nd.tau);
    for (int r = 0; r < rs.count(); ++r) {
      const int p = dot(rs.fw[r], id.eta);
      if (p < -2 || p > 1)
        throw RangeViolationError("enumerated ideal has an eta pairing outside {-2,-1,0,1}");
    }
    id.aff = nd.aff;
    by_weight_.emplace(id.weight_fw, static_cast<int>(items_.size()));
    items_.push_back(std::move(id));
  }
  if (by_weight_.size() != items_.size())
    throw std::logic_error("ideal weights are not pairwise distinct");
  std::sort(edges_.begin(), edges_.end());
}

inline AbelianIdeals enumerate_ideals(const RootSystem& rs) { return AbelianIdeals(rs); }

// upward closure of an antichain, with the pair condition: the closure is
// an abelian ideal iff no alpha, beta in the antichain (alpha = beta
// allowed) satisfy alpha + beta <= theta
inline RootMask from_antichain_mask(const RootSystem& rs, const std::vector<int>& roots) {
  for (std::size_t x = 0; x < roots.size(); ++x)
    for (std::size_t y = x + 1; y < roots.size(); ++y) {
      if (roots[x] == roots[y]) throw Error("antichain has a repeated root");
      if (rs.up_strict[roots[x]].test(roots[y]) || rs.up_strict[roots[y]].test(roots[x]))
        throw Error("root set is not an antichain");
    }
  const IntVec& th = rs.theta.coeffs;
  for (std::size_t x = 0; x < roots.size(); ++x)
    for (std::size_t y = x; y < roots.size(); ++y) {
      const IntVec s = vec_add(rs.positive_roots[roots[x]].coeffs,
                               rs.positive_roots[roots[y]].coeffs);
      bool leq_theta = true;
      for (int k = 0; k < rs.n(); ++k)
        if (s[k] > th[k]) { leq_theta = false; break; }
      if (leq_theta)
        throw NotAbelianError("antichain violates the pair condition: a sum of two members"
                              " (repetition allowed) stays below the highest root");
    }
  RootMask phi;
  for (int r : roots) {
    phi.set(r);
    phi = phi | rs.up_strict[r];
  }
  return phi;
}

inline const IdealSet& AbelianIdeals::from_antichain(const std::vector<int>& roots) const {
  const RootMask phi = from_antichain_mask(*rs_, roots);
  const int idx = index_of_mask(phi);
  if (idx < 0) throw std::logic_error("antichain closure missing from the enumeration");
  return items_[idx];
}

// independent engine: enumerate antichains of the root order, keep those
// passing the pair condition, emit upward closures
inline std::vector<RootMask> enumerate_by_antichains(const RootSystem& rs) {
  std::vector<RootMask> out;
  std::vector<int> cur;
  const IntVec& th = rs.theta.coeffs;
  auto pair_ok = [&](int x, int y) {
    const IntVec s =
        vec_add(rs.positive_roots[x].coeffs, rs.positive_roots[y].coeffs);
    for (int k = 0; k < rs.n(); ++k)
      if (s[k] > th[k]) return true;
    return false;
  };
  std::function<void(int)> rec = [&](int start) {
    RootMask phi;
    for (int r : cur) {
      phi.set(r);
      phi = phi | rs.up_strict[r];
    }
    out.push_back(phi);
    for (int r = start; r < rs.count(); ++r) {
      bool ok = pair_ok(r, r);
      for (int c : cur) {
        if (!ok) break;
        if (rs.up_strict[c].test(r) || rs.up_strict[r].test(c) || !pair_ok(c, r)) ok = false;
      }
      if (!ok) continue;
      cur.push_back(r);
      rec(r + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// second independent engine: all dual order ideals of the root order,
// filtered by the abelian condition
inline std::vector<RootMask> enumerate_by_filter(const RootSystem& rs) {
  std::vector<RootMask> out;
  RootMask cur;
  // roots are sorted by height, so scanning indices downward decides every
  // element above r before r itself
  std::function<void(int)> rec = [&](int r) {
    if (r < 0) {
      if (is_abelian_set(rs, cur)) out.push_back(cur);
      return;
    }
    rec(r - 1);
    if (rs.up_strict[r].subset_of(cur)) {
      cur.set(r);
      rec(r - 1);
      cur.reset(r);
    }
  };
  rec(rs.count() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

// rho + <ideal>, cross-checked against the affine action of the word on rho
inline IntVec rho_point(const RootSystem& rs, const IdealSet& ideal) {
  IntVec rho(rs.n(), 1);
  const IntVec direct = vec_add(rho, ideal.weight_fw);
  const IntVec via_word = affine_act_on_weight(rs, ideal.word, rho);
  if (direct != via_word)
    throw std::logic_error("word action on rho disagrees with rho + <ideal>");
  return direct;
}

// <lambda, alpha^vee> != 0 for every positive root: scaled pairing
// sum_j u_j c_j d_j stays nonzero
inline bool is_regular_weight(const RootSystem& rs, const IntVec& fw) {
  for (int r = 0; r < rs.count(); ++r) {
    long long s = 0;
    const auto& c = rs.positive_roots[r].coeffs;
    for (int j = 0; j < rs.n(); ++j)
      s += static_cast<long long>(fw[j]) * c[j] * rs.datum.symmetrizers[j];
    if (s == 0) return false;
  }
  return true;
}

}  // namespace abid
