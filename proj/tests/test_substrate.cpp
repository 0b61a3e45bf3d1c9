#include "doctest.h"

#include <random>

#include "lokatif/substrate.hpp"
#include "test_util.hpp"

using namespace lokatif;
using testutil::random_region;
using testutil::random_walk_region;

TEST_CASE("part_of basics") {
  Region a{{0, 0, 0}};
  Region b{{0, 0, 0}, {1, 0, 0}};
  CHECK(part_of(a, b));
  CHECK_FALSE(part_of(b, a));
  CHECK(part_of(a, a));
  CHECK(part_of(b, b));
}

TEST_CASE("overlap and connection basics") {
  Region a{{0, 0, 0}};
  Region face{{1, 0, 0}};
  Region diag{{1, 1, 0}};
  Region far{{3, 0, 0}};
  CHECK_FALSE(overlaps(a, face));
  CHECK(connected(a, face));
  CHECK_FALSE(connected(a, diag));  // corner contact is not contact
  CHECK_FALSE(connected(a, far));
  CHECK(externally_connected(a, face));
  CHECK_FALSE(externally_connected(a, a));
  Region ab{{0, 0, 0}, {1, 0, 0}};
  CHECK(overlaps(a, ab));
  CHECK(connected(a, ab));
}

TEST_CASE("self_connected basics") {
  CHECK(self_connected(Region{{5, 5, 5}}));
  CHECK_FALSE(self_connected(Region{{0, 0, 0}, {3, 0, 0}}));
  CHECK(self_connected(Region::box({0, 0, 0}, {2, 2, 2})));
}

TEST_CASE("dilate basics") {
  Region a{{0, 0, 0}};
  CHECK(dilate(a, 0) == a);
  CHECK(dilate(a, 1).size() == 27);
  CHECK(dilate(a, 2).size() == 125);
}

TEST_CASE("regions are non-empty") {
  CHECK_THROWS_AS(Region(VoxelSet{}), std::invalid_argument);
  CHECK_FALSE(Region::from_voxels({}).has_value());
}

TEST_CASE("random pairs match the voxel-enumeration oracles") {
  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    Region a = random_region(rng, 8);
    Region b = random_region(rng, 8);
    CHECK(part_of(a, b) == testutil::subset_oracle(a, b));
    CHECK(overlaps(a, b) == testutil::intersect_oracle(a, b));
    CHECK(connected(a, b) == testutil::contact_oracle(a, b));
    CHECK(externally_connected(a, b) == (connected(a, b) && !overlaps(a, b)));
    if (overlaps(a, b)) CHECK(connected(a, b));
  }
}

TEST_CASE("self_connected matches the union-find oracle") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Region a = i % 2 ? random_region(rng, 6, 8) : random_walk_region(rng, 6);
    CHECK(self_connected(a) == testutil::one_component_oracle(a));
  }
}

TEST_CASE("parthood is a partial order") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Region a = random_region(rng, 4, 6);
    Region b = random_region(rng, 4, 6);
    Region c = random_region(rng, 4, 6);
    CHECK(part_of(a, a));
    if (part_of(a, b) && part_of(b, a)) CHECK(a == b);
    if (part_of(a, b) && part_of(b, c)) CHECK(part_of(a, c));
  }
}

TEST_CASE("symmetry, reflexivity, monotonicity") {
  std::mt19937 rng(13);
  for (int i = 0; i < 1000; ++i) {
    Region a = random_region(rng, 5, 6);
    Region b = random_region(rng, 5, 6);
    Region c = random_region(rng, 5, 6);
    CHECK(overlaps(a, b) == overlaps(b, a));
    CHECK(connected(a, b) == connected(b, a));
    CHECK(connected(a, a));
    // part_of(a,b) and connected(c,a) imply connected(c,b)
    if (part_of(a, b) && connected(c, a)) CHECK(connected(c, b));
  }
}

TEST_CASE("dilate is monotone in both arguments") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    Region a = random_region(rng, 5, 5);
    Region b(set_union(a.voxels(), random_region(rng, 5, 5).voxels()));
    for (int r : {1, 2, 3}) {
      CHECK(part_of(a, dilate(a, r)));
      CHECK(part_of(dilate(a, r), dilate(b, r)));
      CHECK(part_of(dilate(a, r - 1), dilate(a, r)));
    }
  }
}
