#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "abid/abid.hpp"

using namespace abid;

TEST_CASE("staircase shapes are counted by powers of two") {
  const std::vector<Partition> want = {{},     {1},    {1, 1}, {1, 1, 1},
                                       {2},    {2, 1}, {2, 2}, {3}};
  CHECK(staircase_partitions(4) == want);
  for (int n = 2; n <= 8; ++n)
    CHECK(staircase_partitions(n).size() == (1u << (n - 1)));
}

TEST_CASE("partition plumbing") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  CHECK(ideal_size(Partition{2, 1}) == 3);
  CHECK(partition_str(Partition{}) == "-");
  CHECK(partition_str(Partition{2, 1}) == "2,1");
  CHECK_THROWS_AS(check_partition(Partition{1, 2}), Error);
  CHECK_THROWS_AS(check_partition(Partition{2, -1}), Error);
  CHECK(in_staircase(Partition{2, 1}, 4));
  CHECK_FALSE(in_staircase(Partition{3, 1}, 4));
  CHECK_THROWS_AS(require_staircase(Partition{3, 1}, 4), OutOfStaircaseError);
}

TEST_CASE("the rotation has the advertised values and order") {
  CHECK(sigma(Partition{2, 1}, 5) == Partition{2, 1});
  CHECK(sigma(Partition{1, 1}, 5) == Partition{2, 1, 1});

  // the hook orbit walks through the full staircase diagonal
  CHECK(sigma(Partition{}, 5) == Partition{1, 1, 1, 1});
  CHECK(sigma(Partition{1, 1, 1, 1}, 5) == Partition{2, 2, 2});
  CHECK(sigma(Partition{2, 2, 2}, 5) == Partition{3, 3});
  CHECK(sigma(Partition{3, 3}, 5) == Partition{4});
  CHECK(sigma(Partition{4}, 5) == Partition{});

  for (int n = 3; n <= 7; ++n) {
    CHECK(sigma(Partition{}, n) == Partition(n - 1, 1));
    for (const Partition& lam : staircase_partitions(n)) {
      Partition cur = lam;
      for (int k = 0; k < n; ++k) cur = sigma(cur, n);
      CHECK(cur == lam);
    }
  }
}

TEST_CASE("fixed shapes of the rotation") {
  int fixed = 0;
  for (const Partition& lam : staircase_partitions(5))
    if (sigma(lam, 5) == lam) ++fixed;
  CHECK(fixed == 1);  // only the half staircase 2,1 survives
  CHECK(sigma(Partition{3, 2, 1}, 7) == Partition{3, 2, 1});
}

TEST_CASE("the closed form agrees with the conjugate description") {
  for (int n = 3; n <= 7; ++n)
    for (const Partition& lam : staircase_partitions(n)) {
      if (lam.empty()) continue;
      CHECK(sigma(lam, n) == sigma_direct(lam, n));
    }
  CHECK_THROWS_AS(sigma_direct(Partition{}, 5), Error);
}

TEST_CASE("conjugation is the involution partner") {
  for (int n = 3; n <= 7; ++n)
    for (const Partition& lam : staircase_partitions(n)) {
      CHECK(tau(tau(lam, n), n) == lam);
      // dihedral relation: conjugating the rotation inverts it
      Partition lhs = tau(sigma(tau(lam, n), n), n);
      CHECK(sigma(lhs, n) == lam);
    }
}

TEST_CASE("shapes index the A-series ideals bijectively") {
  for (int n : {4, 5}) {
    const RootSystem rs = build_root_system(cartan_datum(Family::A, n - 1));
    const AbelianIdeals ideals(rs);
    std::set<int> hit;
    for (const Partition& lam : staircase_partitions(n)) {
      const int idx = ideal_of_partition(ideals, lam);
      hit.insert(idx);
      CHECK(partition_of_ideal(rs, ideals.ideal(idx)) == lam);
      CHECK(ideals.ideal(idx).weight_fw == partition_weight_fw(lam, n));
      CHECK(ideals.ideal(idx).grade == static_cast<int>(ideal_size(lam)));
    }
    CHECK(hit.size() == static_cast<std::size_t>(ideals.size()));
  }
}

TEST_CASE("the interval model needs the A series") {
  const RootSystem rs = build_root_system(cartan_datum(Family::C, 3));
  CHECK_THROWS_AS(mask_of_partition(rs, Partition{1}), Error);
  const RootSystem a3 = build_root_system(cartan_datum(Family::A, 3));
  CHECK_THROWS_AS(mask_of_partition(a3, Partition{3, 1}), OutOfStaircaseError);
}

TEST_CASE("rotation and conjugation transport to the ideal actions") {
  const int n = 4;
  const RootSystem rs = build_root_system(cartan_datum(Family::A, n - 1));
  const AbelianIdeals ideals(rs);
  const auto z = center(rs);
  auto z1 = std::find_if(z.begin(), z.end(), [](const CenterElement& e) { return e.index == 1; });
  REQUIRE(z1 != z.end());
  const auto flip = minus_w0_perm(rs);
  DiagramAut f;
  f.img = flip;

  for (const Partition& lam : staircase_partitions(n)) {
    const int idx = ideal_of_partition(ideals, lam);
    CHECK(ideal_of_partition(ideals, sigma(lam, n)) == act_center(ideals, *z1, idx));
    CHECK(ideal_of_partition(ideals, tau(lam, n)) == act_diagram(ideals, f, idx));
  }
}

TEST_CASE("dihedral reports pass") {
  for (int n = 3; n <= 6; ++n) {
    const Report rep = verify_dihedral(n);
    INFO(report_text(rep));
    CHECK(rep.pass());
  }
}
