#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "abid/abid.hpp"

using namespace abid;

namespace {
RootSystem make(Family f, int n) { return build_root_system(cartan_datum(f, n)); }

int root_index(const RootSystem& rs, const IntVec& c) {
  auto it = rs.index_of.find(c);
  REQUIRE(it != rs.index_of.end());
  return it->second;
}
}  // namespace

TEST_CASE("rank one has exactly the empty set and the highest root") {
  const RootSystem rs = make(Family::A, 1);
  const AbelianIdeals ideals(rs);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals.ideal(0).phi.empty());
  CHECK(ideals.ideal(0).word.empty());
  CHECK(ideals.ideal(1).word == std::vector<int>{0});
  CHECK(ideals.ideal(1).phi.count() == 1);
  CHECK(ideals.ideal(1).phi.test(0));
}

TEST_CASE("the C2 chain is frozen") {
  const RootSystem rs = make(Family::C, 2);
  const AbelianIdeals ideals(rs);
  REQUIRE(ideals.size() == 4);
  const std::vector<std::vector<int>> words = {{}, {0}, {0, 1}, {0, 1, 0}};
  const std::vector<IntVec> weights = {{0, 0}, {2, 0}, {2, 1}, {0, 3}};
  const std::vector<IntVec> antichain_roots = {{}, {2, 1}, {1, 1}, {0, 1}};
  for (int i = 0; i < 4; ++i) {
    INFO("node " << i);
    CHECK(ideals.ideal(i).word == words[i]);
    CHECK(ideals.ideal(i).grade == i);
    CHECK(ideals.ideal(i).weight_fw == weights[i]);
    if (i > 0) {
      REQUIRE(ideals.ideal(i).antichain.size() == 1);
      CHECK(ideals.ideal(i).antichain[0] == root_index(rs, antichain_roots[i]));
      CHECK(ideals.ideal(i - 1).phi.subset_of(ideals.ideal(i).phi));
    }
  }
  const std::vector<HasseEdge> want = {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}};
  CHECK(ideals.bfs_edges() == want);
}

TEST_CASE("the B2 chain uses the other short generator") {
  const RootSystem rs = make(Family::B, 2);
  const AbelianIdeals ideals(rs);
  REQUIRE(ideals.size() == 4);
  const std::vector<std::vector<int>> words = {{}, {0}, {0, 2}, {0, 2, 0}};
  for (int i = 0; i < 4; ++i) {
    CHECK(ideals.ideal(i).word == words[i]);
    CHECK(ideals.ideal(i).grade == i);
    if (i > 0) CHECK(ideals.ideal(i - 1).phi.subset_of(ideals.ideal(i).phi));
  }
}

TEST_CASE("ideal masks really are abelian dual order ideals") {
  for (auto [f, n] : {std::pair{Family::B, 3}, {Family::D, 4}, {Family::G, 2}}) {
    const RootSystem rs = make(f, n);
    const AbelianIdeals ideals(rs);
    INFO(type_name(f, n));
    for (const IdealSet& s : ideals.all()) {
      CHECK(is_dual_order_ideal(rs, s.phi));
      CHECK(is_abelian_set(rs, s.phi));
      CHECK(is_abelian_dual_ideal(rs, s.phi));
      CHECK(s.grade == static_cast<int>(s.phi.count()));
    }
    // single simple root below the highest root: upward closed it is not
    RootMask lone;
    lone.set(0);
    CHECK_FALSE(is_dual_order_ideal(rs, lone));
  }
}

TEST_CASE("all three enumeration engines produce the same masks") {
  for (auto [f, n] : {std::pair{Family::C, 3}, {Family::D, 4}, {Family::F, 4}}) {
    const RootSystem rs = make(f, n);
    const AbelianIdeals ideals(rs);
    std::vector<RootMask> bfs;
    for (const IdealSet& s : ideals.all()) bfs.push_back(s.phi);
    std::sort(bfs.begin(), bfs.end());
    INFO(type_name(f, n));
    CHECK(bfs == enumerate_by_antichains(rs));
    CHECK(bfs == enumerate_by_filter(rs));
    CHECK(ideals.size() == 1 << n);
  }
}

TEST_CASE("antichains round-trip through from_antichain") {
  const RootSystem rs = make(Family::F, 4);
  const AbelianIdeals ideals(rs);
  for (const IdealSet& s : ideals.all()) {
    const IdealSet& back = ideals.from_antichain(s.antichain);
    CHECK(&back == &s);
  }
}

TEST_CASE("bad antichains are rejected with specific errors") {
  const RootSystem a3 = make(Family::A, 3);
  const AbelianIdeals ideals(a3);
  const int a1 = root_index(a3, {1, 0, 0});
  const int a3r = root_index(a3, {0, 0, 1});
  const int top = root_index(a3, {1, 1, 1});

  CHECK_THROWS_AS(ideals.from_antichain({a1, a1}), Error);
  CHECK_THROWS_AS(ideals.from_antichain({a1, top}), Error);          // comparable
  CHECK_THROWS_AS(ideals.from_antichain({a1, a3r}), NotAbelianError);  // closure has a root sum

  const RootSystem c2 = make(Family::C, 2);
  const AbelianIdeals c2i(c2);
  // 2*alpha_1 stays under the highest root, so alpha_1 cannot generate
  CHECK_THROWS_AS(c2i.from_antichain({root_index(c2, {1, 0})}), NotAbelianError);
}

TEST_CASE("mask and weight lookups invert the enumeration") {
  const RootSystem rs = make(Family::B, 4);
  const AbelianIdeals ideals(rs);
  std::set<IntVec> seen;
  for (int i = 0; i < ideals.size(); ++i) {
    CHECK(ideals.index_of_mask(ideals.ideal(i).phi) == i);
    auto j = ideals.index_by_weight(ideals.ideal(i).weight_fw);
    REQUIRE(j.has_value());
    CHECK(*j == i);
    seen.insert(ideals.ideal(i).weight_fw);
  }
  CHECK(seen.size() == static_cast<std::size_t>(ideals.size()));
  RootMask junk;
  junk.set(0);
  junk.set(1);
  CHECK(ideals.index_of_mask(junk) == -1);
  CHECK_FALSE(ideals.index_by_weight(IntVec{9, 9, 9, 9}).has_value());
}

TEST_CASE("moved base points stay regular and stay apart") {
  const RootSystem rs = make(Family::F, 4);
  const AbelianIdeals ideals(rs);
  const IntVec rho(rs.n(), 1);
  std::set<IntVec> points;
  for (const IdealSet& s : ideals.all()) {
    const IntVec p = rho_point(rs, s);
    CHECK(p == vec_add(rho, s.weight_fw));
    CHECK(is_regular_weight(rs, p));
    points.insert(p);
  }
  CHECK(points.size() == static_cast<std::size_t>(ideals.size()));
  CHECK(is_regular_weight(rs, rho));
  CHECK_FALSE(is_regular_weight(rs, IntVec{0, 1, 1, 1}));
}
