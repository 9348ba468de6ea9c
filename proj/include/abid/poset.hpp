#pragma once

#include <array>
#include <set>

#include "abid/abelian.hpp"

namespace abid {

// The labeled Hasse diagram of the ideal poset.  Node i is ideal i in
// canonical order; each cover carries the affine generator that realizes
// the extension.
struct LabeledHasse {
  Family family{};
  int rank = 0;
  std::vector<int> grade;
  std::vector<std::vector<int>> words;
  std::vector<HasseEdge> edges;  // sorted by (lo, hi)
  std::vector<std::vector<std::pair<int, int>>> up, down;  // (neighbor, label)
  std::vector<int> pi_prime;  // sorted set of labels that occur

  int node_count() const { return static_cast<int>(grade.size()); }
  int degree(int v) const { return static_cast<int>(up[v].size() + down[v].size()); }
};

inline LabeledHasse build_hasse(const AbelianIdeals& ideals) {
  const RootSystem& rs = ideals.rs();
  LabeledHasse h;
  h.family = rs.datum.family;
  h.rank = rs.n();
  const int nn = ideals.size();
  h.grade.resize(nn);
  h.words.resize(nn);
  for (int i = 0; i < nn; ++i) {
    h.grade[i] = ideals.ideal(i).grade;
    h.words[i] = ideals.ideal(i).word;
  }
  h.edges = ideals.bfs_edges();

  // independent cover computation: one-root containments
  std::set<std::pair<int, int>> covers;
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y) {
      if (h.grade[y] != h.grade[x] + 1) continue;
      if (ideals.ideal(x).phi.subset_of(ideals.ideal(y).phi)) covers.emplace(x, y);
    }
  std::set<std::pair<int, int>> from_words;
  for (const auto& e : h.edges) from_words.emplace(e.lo, e.hi);
  if (covers != from_words)
    throw std::logic_error("word extensions disagree with the inclusion covers");

  h.up.resize(nn);
  h.down.resize(nn);
  std::set<int> labels;
  for (const auto& e : h.edges) {
    h.up[e.lo].emplace_back(e.hi, e.label);
    h.down[e.hi].emplace_back(e.lo, e.label);
    labels.insert(e.label);
  }
  h.pi_prime.assign(labels.begin(), labels.end());

  // structural sanity: unique minimum of degree 1, unique grade-1 node
  int minima = 0, grade1 = 0;
  for (int v = 0; v < nn; ++v) {
    if (h.grade[v] == 0) {
      ++minima;
      if (h.degree(v) != 1) throw std::logic_error("minimum must have degree 1");
    }
    if (h.grade[v] == 1) ++grade1;
  }
  if (minima != 1 || grade1 != 1) throw std::logic_error("bottom of the poset is malformed");
  return h;
}

// maximal chains of length 2 that close into a square
struct Diamond {
  int bottom = 0, mid_lo = 0, mid_hi = 0, top = 0;
  int lab_bottom_lo = 0;  // bottom -> mid_lo
  int lab_bottom_hi = 0;  // bottom -> mid_hi
  int lab_lo_top = 0;     // mid_lo -> top
  int lab_hi_top = 0;     // mid_hi -> top
};

inline std::vector<Diamond> diamonds(const LabeledHasse& h) {
  std::vector<Diamond> out;
  for (int b = 0; b < h.node_count(); ++b) {
    const auto& ups = h.up[b];
    for (std::size_t x = 0; x < ups.size(); ++x)
      for (std::size_t y = x + 1; y < ups.size(); ++y) {
        const auto [m1, l1] = ups[x];
        const auto [m2, l2] = ups[y];
        for (const auto& [t1, lt1] : h.up[m1])
          for (const auto& [t2, lt2] : h.up[m2])
            if (t1 == t2) {
              Diamond d;
              d.bottom = b;
              d.mid_lo = std::min(m1, m2);
              d.mid_hi = std::max(m1, m2);
              d.top = t1;
              d.lab_bottom_lo = m1 < m2 ? l1 : l2;
              d.lab_bottom_hi = m1 < m2 ? l2 : l1;
              d.lab_lo_top = m1 < m2 ? lt1 : lt2;
              d.lab_hi_top = m1 < m2 ? lt2 : lt1;
              out.push_back(d);
            }
      }
  }
  return out;
}

// nodes weakly below v
inline std::vector<char> downset_of(const LabeledHasse& h, int v) {
  std::vector<char> in(h.node_count(), 0);
  std::vector<int> stack{v};
  in[v] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& [d, lab] : h.down[x])
      if (!in[d]) {
        in[d] = 1;
        stack.push_back(d);
      }
  }
  return in;
}

using NodePermutation = std::vector<int>;

namespace detail {

// iterative color refinement, then exhaustive backtracking; rel is the
// (possibly asymmetric) adjacency matrix. Signatures and the backtrack
// pruning both use all-pairs distances in the symmetrized graph: any
// automorphism of rel preserves them, and on near-regular graphs plain
// neighbor-multiset refinement stalls while distance profiles do not.
inline std::vector<NodePermutation> search_automorphisms(
    const std::vector<std::vector<std::uint8_t>>& rel, std::vector<int> color) {
  const int n = static_cast<int>(rel.size());
  constexpr int kFar = 1 << 20;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kFar));
  for (int s = 0; s < n; ++s) {
    std::vector<int> queue{s};
    dist[s][s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int u = 0; u < n; ++u) {
        if ((rel[v][u] || rel[u][v]) && dist[s][u] == kFar) {
          dist[s][u] = dist[s][v] + 1;
          queue.push_back(u);
        }
      }
    }
  }

  // refinement to a fixpoint
  while (true) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::array<int, 4>> prof;
      prof.reserve(n);
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        prof.push_back({dist[v][u], static_cast<int>(rel[v][u]),
                        static_cast<int>(rel[u][v]), color[u]});
      }
      std::sort(prof.begin(), prof.end());
      std::vector<int> sig{color[v]};
      for (const auto& p : prof) sig.insert(sig.end(), p.begin(), p.end());
      auto it = sig_ids.find(sig);
      if (it == sig_ids.end()) it = sig_ids.emplace(sig, static_cast<int>(sig_ids.size())).first;
      next[v] = it->second;
    }
    const std::set<int> before(color.begin(), color.end());
    const bool stable = sig_ids.size() == before.size();
    color = next;
    if (stable || static_cast<int>(sig_ids.size()) == n) break;
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> class_size(n, 0);
  for (int v = 0; v < n; ++v) ++class_size[color[v]];
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (class_size[color[x]] != class_size[color[y]])
      return class_size[color[x]] < class_size[color[y]];
    return x < y;
  });

  std::vector<NodePermutation> found;
  NodePermutation img(n, -1);
  std::vector<char> used(n, 0);
  std::vector<int> assigned;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      found.push_back(img);
      return;
    }
    const int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || color[w] != color[v]) continue;
      bool ok = true;
      for (int u : assigned) {
        if (rel[v][u] != rel[w][img[u]] || rel[u][v] != rel[img[u]][w] ||
            dist[v][u] != dist[w][img[u]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      assigned.push_back(v);
      rec(k + 1);
      assigned.pop_back();
      used[w] = 0;
      img[v] = -1;
    }
  };
  rec(0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace detail

// grade-preserving bijections preserving covers in both directions
inline std::vector<NodePermutation> poset_automorphisms(const LabeledHasse& h) {
  const int n = h.node_count();
  std::vector<std::vector<std::uint8_t>> rel(n, std::vector<std::uint8_t>(n, 0));
  for (const auto& e : h.edges) rel[e.lo][e.hi] = 1;
  return detail::search_automorphisms(rel, h.grade);
}

// automorphisms of the underlying undirected unlabeled graph
inline std::vector<NodePermutation> graph_automorphisms(const LabeledHasse& h) {
  const int n = h.node_count();
  std::vector<std::vector<std::uint8_t>> rel(n, std::vector<std::uint8_t>(n, 0));
  for (const auto& e : h.edges) rel[e.lo][e.hi] = rel[e.hi][e.lo] = 1;
  return detail::search_automorphisms(rel, std::vector<int>(n, 0));
}

// Degree of a node from its word matrix alone: the number of affine simple
// roots sent to +-(delta - beta) with beta positive.
inline int degree_of_node(const RootSystem& rs, const IdealSet& ideal) {
  int deg = 0;
  for (int i = 0; i <= rs.n(); ++i) {
    AffineRoot img = detail::decode_affine_column(rs, mat_col(ideal.aff, i));
    if (img.level == -1) {
      img.level = 1;
      img.finite = vec_neg(img.finite);
    }
    if (img.level != 1) continue;
    if (rs.index_of.count(vec_neg(img.finite))) ++deg;
  }
  return deg;
}

inline NodePermutation compose_perm(const NodePermutation& a, const NodePermutation& b) {
  NodePermutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline NodePermutation inverse_perm(const NodePermutation& a) {
  NodePermutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

inline NodePermutation identity_perm(int n) {
  NodePermutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

// closure of a generating set under composition
inline std::vector<NodePermutation> generate_group(std::vector<NodePermutation> gens, int n) {
  std::set<NodePermutation> seen;
  seen.insert(identity_perm(n));
  std::vector<NodePermutation> queue{identity_perm(n)};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& g : gens) {
      NodePermutation c = compose_perm(g, queue[h]);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  return {seen.begin(), seen.end()};
}

}  // namespace abid
