#include "doctest.h"

#include <random>

#include "lokatif/ontology.hpp"
#include "test_util.hpp"

using namespace lokatif;

namespace {

View object_view(bool fix, bool esp) {
  return {{TopCategory::Material, MaterialSub::Object, {}}, {fix, esp, false}};
}

View place_view() {
  return {{TopCategory::Material, MaterialSub::Place, {}}, {true, true, false}};
}

View portion_view(bool fix, bool esp) {
  return {{TopCategory::Material, MaterialSub::MatterPortion, {}},
          {fix, esp, false}};
}

EntityRecord entity(std::string id, std::vector<View> views,
                    std::map<int, Region> extent) {
  EntityRecord e;
  e.id = id;
  e.lemma = id;
  e.views = std::move(views);
  e.extent = std::move(extent);
  return e;
}

/// Vehicle drifting +x with an on-board place; a rock stays on the ground.
KB moving_vehicle_scene() {
  KB kb;
  auto box_at = [](int x0) { return Region::box({x0, 0, 0}, {x0 + 3, 1, 1}); };
  auto deck_at = [](int x0) { return Region::box({x0 + 2, 0, 2}, {x0 + 3, 1, 2}); };
  kb.entities["vehicle"] = entity(
      "vehicle", {object_view(false, false)},
      {{0, box_at(0)}, {1, box_at(2)}, {2, box_at(5)}});
  kb.entities["deck"] = entity(
      "deck", {place_view()}, {{0, deck_at(0)}, {1, deck_at(2)}, {2, deck_at(5)}});
  kb.entities["rock"] = entity(
      "rock", {object_view(true, false)},
      {{0, Region{{20, 0, 0}}}, {1, Region{{20, 0, 0}}}, {2, Region{{20, 0, 0}}}});
  kb.entities["meadow"] = entity(
      "meadow", {place_view()},
      {{0, Region::box({18, 0, 0}, {25, 4, 0})},
       {1, Region::box({18, 0, 0}, {25, 4, 0})},
       {2, Region::box({18, 0, 0}, {25, 4, 0})}});
  return kb;
}

KB translated(const KB& kb, Voxel d) {
  KB out = kb;
  for (auto& [id, e] : out.entities)
    for (auto& [t, r] : e.extent) r = r.translated(d);
  return out;
}

}  // namespace

TEST_CASE("is_fixed: reflexive at the anchor, trivial on one instant") {
  KB kb = testutil::fixture_scene();
  CHECK(is_fixed("table1", "table1", {0, 2}, kb));
  CHECK(is_fixed("mouche1", "mouche1", {0, 2}, kb));
  CHECK(is_fixed("mouche1", "table1", {0, 0}, kb));
}

TEST_CASE("is_fixed: a fly drifting over a static table is not fixed") {
  KB kb = testutil::fixture_scene();
  CHECK_FALSE(is_fixed("mouche1", "table1", {0, 2}, kb));
  CHECK(is_fixed("extremite1", "table1", {0, 2}, kb));
}

TEST_CASE("is_fixed: MissingExtent when a step lacks an extent") {
  KB kb = testutil::fixture_scene();
  CHECK_THROWS_AS(is_fixed("rocher1", "table1", {0, 2}, kb), Error);
}

TEST_CASE("is_fixed is invariant under global translation") {
  KB kb = moving_vehicle_scene();
  KB shifted = translated(kb, {5, 7, 9});
  for (const char* e : {"vehicle", "deck", "rock", "meadow"})
    for (const char* a : {"vehicle", "rock"})
      CHECK(is_fixed(e, a, {0, 2}, kb) == is_fixed(e, a, {0, 2}, shifted));
  CHECK(is_fixed("deck", "vehicle", {0, 2}, kb));
  CHECK_FALSE(is_fixed("rock", "vehicle", {0, 2}, kb));
  CHECK_FALSE(is_fixed("vehicle", "rock", {0, 2}, kb));
}

TEST_CASE("space_portion_of: a flying bird is inside the meadow's portion") {
  KB kb = testutil::fixture_scene();
  // the bird is the located target: excluded, it occupies the portion
  auto portion = space_portion_of("pre1", kb, 0, {}, "oiseau1");
  REQUIRE(portion.has_value());
  CHECK(portion->contains({23, 3, 3}));
  CHECK_FALSE(portion->contains({23, 3, 0}));  // the meadow itself is material
  // without exclusion the bird's own matter bounds the portion
  auto strict = space_portion_of("pre1", kb, 0);
  REQUIRE(strict.has_value());
  CHECK_FALSE(strict->contains({23, 3, 3}));
}

TEST_CASE("space_portion_of: -esp views determine nothing") {
  KB kb = testutil::fixture_scene();
  CHECK_FALSE(space_portion_of("couteau1", kb, 0).has_value());
  CHECK_FALSE(space_portion_of("mouche1", kb, 0).has_value());
  CHECK(space_portion_of("verre1", kb, 0).has_value());  // -fix,+esp
}

TEST_CASE("space_portion_of never overlaps material extents") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    KB kb;
    for (int i = 0; i < 4; ++i) {
      std::string id = "e" + std::to_string(i);
      View v = i == 0 ? place_view() : object_view(i % 2 == 0, i == 2);
      kb.entities[id] =
          entity(id, {v}, {{0, testutil::random_walk_region(rng, 6)}});
    }
    for (const auto& [id, e] : kb.entities) {
      auto p = space_portion_of(id, kb, 0);
      if (!p) continue;
      for (const auto& [oid, oe] : kb.entities)
        CHECK_FALSE(overlaps(*p, oe.extent.at(0)));
    }
  }
}

TEST_CASE("build_frame: static instant gathers every esp-bearing entity") {
  KB kb = testutil::fixture_scene();
  Frame f = build_frame("pre1", {0, 0}, kb);
  CHECK(f.places.count("pre1"));
  CHECK(f.places.count("extremite1"));
  CHECK(f.places.count("maison1"));
  CHECK(f.places.count("verre1"));
  CHECK_FALSE(f.places.count("couteau1"));  // -esp
  CHECK_FALSE(f.places.count("rocher1"));   // +fix but -esp
}

TEST_CASE("build_frame: the table's end is in the table's frame") {
  KB kb = testutil::fixture_scene();
  Frame f = build_frame("table1", {0, 2}, kb);
  CHECK(f.places.count("table1"));  // anchor always included
  CHECK(f.places.count("extremite1"));
  CHECK_FALSE(f.places.count("mouche1"));  // moves relative to the table
}

TEST_CASE("build_frame: moving vehicle keeps fixtures, drops ground entities") {
  KB kb = moving_vehicle_scene();
  Frame f = build_frame("vehicle", {0, 2}, kb);
  CHECK(f.places.count("vehicle"));
  CHECK(f.places.count("deck"));
  CHECK_FALSE(f.places.count("rock"));
  CHECK_FALSE(f.places.count("meadow"));
  Frame ground = build_frame("rock", {0, 2}, kb);
  CHECK(ground.places.count("meadow"));
  CHECK_FALSE(ground.places.count("deck"));
}

TEST_CASE("effective_features: spc comes from definiteness alone") {
  View place = place_view();
  FeatureSet f = effective_features(place, Definiteness::Proper);
  CHECK(f == FeatureSet{true, true, true});
  CHECK(effective_features(place, Definiteness::Indefinite) ==
        FeatureSet{true, true, false});
  View knife = object_view(false, false);
  CHECK(effective_features(knife, Definiteness::Definite) ==
        FeatureSet{false, false, true});

  for (bool fix : {false, true})
    for (bool esp : {false, true})
      for (bool spc : {false, true})
        for (Definiteness d : {Definiteness::Proper, Definiteness::Definite,
                               Definiteness::Indefinite}) {
          View v = portion_view(fix, esp);
          v.features.spc = spc;  // stored spc must be ignored
          FeatureSet ef = effective_features(v, d);
          CHECK(ef.fix == fix);
          CHECK(ef.esp == esp);
          CHECK(ef.spc == (d != Definiteness::Indefinite));
        }
}

TEST_CASE("frontal orientation: precedence and factor kind") {
  EntityRecord car = entity("car", {object_view(false, false)}, {});
  car.orientation.motion_front = AxisDir{Axis::X, 1};
  car.orientation.function_front = AxisDir{Axis::X, -1};
  auto o = assign_frontal_orientation(car);
  REQUIRE(o.has_value());
  CHECK(o->direction == AxisDir{Axis::X, 1});
  CHECK(o->intrinsic);

  EntityRecord arrow = entity("arrow", {object_view(false, false)}, {});
  arrow.orientation.elongation_axis = Axis::X;
  arrow.orientation.aerodynamic_front = AxisDir{Axis::X, -1};
  auto oa = assign_frontal_orientation(arrow);
  REQUIRE(oa.has_value());
  CHECK(oa->direction == AxisDir{Axis::X, -1});
  CHECK_FALSE(oa->intrinsic);

  EntityRecord blob = entity("blob", {object_view(false, false)}, {});
  CHECK_FALSE(assign_frontal_orientation(blob).has_value());
}

TEST_CASE("contextual attributes never override an intrinsic front") {
  EntityRecord e = entity("e", {object_view(false, false)}, {});
  e.orientation.function_front = AxisDir{Axis::Y, 1};
  auto before = assign_frontal_orientation(e);
  e.orientation.elongation_axis = Axis::X;
  e.orientation.aerodynamic_front = AxisDir{Axis::X, -1};
  auto after = assign_frontal_orientation(e);
  REQUIRE(before.has_value());
  REQUIRE(after.has_value());
  CHECK(before->direction == after->direction);
  CHECK(after->intrinsic);
}
