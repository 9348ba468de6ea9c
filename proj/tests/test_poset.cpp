#include <catch2/catch_amalgamated.hpp>

#include "abid/abid.hpp"

using namespace abid;

namespace {
struct Case {
  RootSystem rs;
  AbelianIdeals ideals;
  LabeledHasse h;
  explicit Case(Family f, int n)
      : rs(build_root_system(cartan_datum(f, n))), ideals(rs), h(build_hasse(ideals)) {}
};
}  // namespace

TEST_CASE("the A3 diagram structure is frozen") {
  const Case c(Family::A, 3);
  REQUIRE(c.h.node_count() == 8);
  CHECK(c.h.grade == std::vector<int>{0, 1, 2, 2, 3, 3, 3, 4});
  CHECK(c.h.words[5] == std::vector<int>{0, 1, 3});
  const std::vector<HasseEdge> want = {{0, 1, 0}, {1, 2, 1}, {1, 3, 3}, {2, 4, 2},
                                       {2, 5, 3}, {3, 5, 1}, {3, 6, 2}, {5, 7, 0}};
  CHECK(c.h.edges == want);
  CHECK(c.h.pi_prime == std::vector<int>{0, 1, 2, 3});
  CHECK(c.h.degree(1) == 3);
  CHECK(c.h.degree(4) == 1);

  // adjacency lists mirror the edge list
  for (const auto& e : c.h.edges) {
    CHECK(std::count(c.h.up[e.lo].begin(), c.h.up[e.lo].end(), std::pair{e.hi, e.label}) == 1);
    CHECK(std::count(c.h.down[e.hi].begin(), c.h.down[e.hi].end(), std::pair{e.lo, e.label}) ==
          1);
  }
}

TEST_CASE("diamonds carry swapped labels") {
  const Case a3(Family::A, 3);
  const auto ds = diamonds(a3.h);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].bottom == 1);
  CHECK(ds[0].mid_lo == 2);
  CHECK(ds[0].mid_hi == 3);
  CHECK(ds[0].top == 5);
  CHECK(ds[0].lab_bottom_lo == 1);
  CHECK(ds[0].lab_bottom_hi == 3);
  CHECK(ds[0].lab_lo_top == 3);
  CHECK(ds[0].lab_hi_top == 1);

  for (auto f : {Family::D, Family::E}) {
    const Case c(f, f == Family::D ? 4 : 6);
    for (const Diamond& d : diamonds(c.h)) {
      CHECK(d.lab_bottom_lo == d.lab_hi_top);
      CHECK(d.lab_bottom_hi == d.lab_lo_top);
    }
  }

  CHECK(diamonds(Case(Family::C, 2).h).empty());
  CHECK(diamonds(Case(Family::G, 2).h).empty());
}

TEST_CASE("chains have no symmetry besides reversal") {
  const Case g2(Family::G, 2);
  REQUIRE(g2.h.node_count() == 4);
  CHECK(g2.h.words[3] == std::vector<int>{0, 2, 1});
  CHECK(poset_automorphisms(g2.h).size() == 1);
  CHECK(graph_automorphisms(g2.h).size() == 2);
  CHECK(g2.h.pi_prime == std::vector<int>{0, 1, 2});

  const Case c2(Family::C, 2);
  CHECK(poset_automorphisms(c2.h).size() == 1);
  CHECK(graph_automorphisms(c2.h).size() == 2);
  CHECK(c2.h.pi_prime == std::vector<int>{0, 1});
}

TEST_CASE("generator labels that occur") {
  CHECK(Case(Family::A, 1).h.pi_prime == std::vector<int>{0});
  CHECK(Case(Family::B, 2).h.pi_prime == std::vector<int>{0, 2});
  CHECK(Case(Family::B, 3).h.pi_prime == std::vector<int>{0, 1, 2, 3});
  CHECK(Case(Family::C, 3).h.pi_prime == std::vector<int>{0, 1, 2});
  CHECK(Case(Family::D, 4).h.pi_prime == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("order and graph symmetry group sizes on small systems") {
  CHECK(poset_automorphisms(Case(Family::A, 3).h).size() == 2);
  CHECK(graph_automorphisms(Case(Family::A, 3).h).size() == 8);
  CHECK(poset_automorphisms(Case(Family::B, 3).h).size() == 1);
  CHECK(graph_automorphisms(Case(Family::B, 3).h).size() == 2);
  CHECK(poset_automorphisms(Case(Family::C, 3).h).size() == 2);
  CHECK(graph_automorphisms(Case(Family::C, 3).h).size() == 4);
  CHECK(poset_automorphisms(Case(Family::D, 4).h).size() == 6);
  CHECK(graph_automorphisms(Case(Family::D, 4).h).size() == 24);
}

TEST_CASE("poset maps preserve grades and covers, graph maps may flip") {
  const Case c(Family::C, 3);
  for (const auto& p : poset_automorphisms(c.h))
    for (int v = 0; v < c.h.node_count(); ++v) CHECK(c.h.grade[p[v]] == c.h.grade[v]);
  bool found_flip = false;
  for (const auto& p : graph_automorphisms(c.h)) {
    bool flips = true;
    for (const auto& e : c.h.edges)
      if (c.h.grade[p[e.lo]] <= c.h.grade[p[e.hi]]) {
        flips = false;
        break;
      }
    found_flip |= flips;
  }
  CHECK(found_flip);
}

TEST_CASE("weak order downsets") {
  const Case c(Family::A, 3);
  const auto below5 = downset_of(c.h, 5);
  const auto below4 = downset_of(c.h, 4);
  const std::vector<char> want5 = {1, 1, 1, 1, 0, 1, 0, 0};
  const std::vector<char> want4 = {1, 1, 1, 0, 1, 0, 0, 0};
  CHECK(below5 == want5);
  CHECK(below4 == want4);
}

TEST_CASE("node degrees match the adjacency structure") {
  for (auto [f, n] : {std::pair{Family::C, 3}, {Family::D, 4}}) {
    const Case c(f, n);
    for (int v = 0; v < c.h.node_count(); ++v)
      CHECK(degree_of_node(c.rs, c.ideals.ideal(v)) == c.h.degree(v));
  }
}

TEST_CASE("permutation helpers compose correctly") {
  const NodePermutation a = {1, 2, 0};
  const NodePermutation b = {0, 2, 1};
  CHECK(compose_perm(a, b) == NodePermutation{1, 0, 2});
  CHECK(compose_perm(a, inverse_perm(a)) == identity_perm(3));
  CHECK(compose_perm(inverse_perm(a), a) == identity_perm(3));
  const auto s3 = generate_group({{1, 0, 2}, {0, 2, 1}}, 3);
  CHECK(s3.size() == 6);
  const auto closure = generate_group(graph_automorphisms(Case(Family::A, 3).h), 8);
  CHECK(closure.size() == 8);
}
