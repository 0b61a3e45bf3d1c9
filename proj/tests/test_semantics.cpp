#include "doctest.h"

#include <string>
#include <vector>

#include "lokatif/semantics.hpp"
#include "test_util.hpp"

using namespace lokatif;

namespace {

LocativeClause clause_of(const std::string& text, const Lexicon& lex) {
  AST ast = parse_text(text, lex);
  return std::get<LocativeClause>(ast);
}

Judgment judge(const std::string& text, const Lexicon& lex) {
  return judge_a(clause_of(text, lex), lex);
}

LocativeClause synthetic_clause(const std::string& site, Definiteness def) {
  return {NP{{{Definiteness::Proper, "x"}}}, Prep::A, NP{{{def, site}}}};
}

}  // namespace

TEST_CASE("judge_a: the seven localization fixtures") {
  Lexicon lex = testutil::fixture_lexicon();

  CHECK(judge("Max est à Toulouse", lex).verdict == Verdict::Accept);
  CHECK(judge("Max est au jardin public", lex).verdict == Verdict::Accept);
  CHECK(judge("Max est à l'extrémité de la table", lex).verdict ==
        Verdict::Accept);

  auto expect_reject = [&](const std::string& text, std::set<Reason> reasons) {
    Judgment j = judge(text, lex);
    CHECK(j.verdict == Verdict::Reject);
    CHECK(j.reasons == reasons);
    CHECK_FALSE(j.chosen_view.has_value());
  };
  expect_reject("Max est au rocher", {Reason::NoSpacePortion});
  expect_reject("La mouche est au verre", {Reason::NotFixed});
  expect_reject("La mouche est au couteau",
                {Reason::NotFixed, Reason::NoSpacePortion});
  expect_reject("Max est à un jardin public", {Reason::NotSpecified});
}

TEST_CASE("judge_a: accepts carry the licensing view, traces are stable") {
  Lexicon lex = testutil::fixture_lexicon();
  Judgment j = judge("Max est à Toulouse", lex);
  REQUIRE(j.chosen_view.has_value());
  CHECK(j.chosen_view->features.fix);
  CHECK(j.chosen_view->features.esp);
  CHECK(j.reasons.empty());
  CHECK_FALSE(j.trace.empty());

  for (const char* text :
       {"Max est à Toulouse", "Max est au rocher", "La mouche est au couteau",
        "Max est à l'extrémité de la table"}) {
    Judgment a = judge(text, lex);
    Judgment b = judge(text, lex);
    CHECK(a.verdict == b.verdict);
    CHECK(a.reasons == b.reasons);
    CHECK(a.trace == b.trace);
    CHECK_FALSE(a.trace.empty());
  }
}

TEST_CASE("judge_a: internal-location heads need a genitive whole") {
  Lexicon lex = testutil::fixture_lexicon();
  Judgment j = judge("Max est à l'extrémité", lex);
  CHECK(j.verdict == Verdict::Reject);
  CHECK(j.reasons == std::set<Reason>{Reason::NotSpecified});
}

TEST_CASE("judge_a: errors") {
  Lexicon lex = testutil::fixture_lexicon();
  try {
    judge_a(synthetic_clause("zorglub", Definiteness::Definite), lex);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownLemma);
  }
  LocativeClause c = synthetic_clause("table", Definiteness::Definite);
  c.prep = Prep::Dans;
  CHECK_THROWS_AS(judge_a(c, lex), Error);
}

TEST_CASE("judge_a: exhaustive feature lattice, 8 triples x 3 determiners") {
  // synthetic entries over the one sub-category with free features; the
  // stored spc bit must be inert
  Lexicon lex;
  for (int fix = 0; fix < 2; ++fix)
    for (int esp = 0; esp < 2; ++esp)
      for (int spc = 0; spc < 2; ++spc) {
        LexEntry e;
        e.lemma = "syn" + std::to_string(fix) + std::to_string(esp) +
                  std::to_string(spc);
        View v;
        v.category = {TopCategory::Material, MaterialSub::MatterPortion, {}};
        v.features = {fix != 0, esp != 0, spc != 0};
        e.views = {v};
        lex.add(e);
      }

  int accepts = 0;
  for (const std::string& lemma : lex.lemmas()) {
    const FeatureSet& f = lex.find(lemma)->views.front().features;
    for (Definiteness def : {Definiteness::Proper, Definiteness::Definite,
                             Definiteness::Indefinite}) {
      Judgment j = judge_a(synthetic_clause(lemma, def), lex);
      bool expected = f.fix && f.esp && def != Definiteness::Indefinite;
      CHECK((j.verdict == Verdict::Accept) == expected);
      if (j.verdict == Verdict::Accept) ++accepts;
      // weakening the determiner never flips a reject into an accept
      if (j.verdict == Verdict::Reject && def != Definiteness::Indefinite) {
        Judgment weaker =
            judge_a(synthetic_clause(lemma, Definiteness::Indefinite), lex);
        CHECK(weaker.verdict == Verdict::Reject);
      }
    }
  }
  CHECK(accepts == 4);  // +fix +esp entries (stored spc inert) x {Proper, Definite}
}

TEST_CASE("judge_a strict mode: a site that moves in the scene is rejected") {
  Lexicon lex;
  LexEntry quai;
  quai.lemma = "quai";
  View v;
  v.category = {TopCategory::Material, MaterialSub::Place, {}};
  v.features = {true, true, false};
  quai.views = {v};
  lex.add(quai);

  KB kb;
  EntityRecord e;
  e.id = "quai1";
  e.lemma = "quai";
  e.views = {v};
  e.extent = {{0, Region::box({0, 0, 0}, {3, 1, 0})},
              {1, Region::box({5, 0, 0}, {8, 1, 0})}};
  kb.entities["quai1"] = e;

  LocativeClause c = synthetic_clause("quai", Definiteness::Definite);
  CHECK(judge_a(c, lex).verdict == Verdict::Accept);
  CHECK(judge_a(c, lex, &kb, false).verdict == Verdict::Accept);
  Judgment strict = judge_a(c, lex, &kb, true);
  CHECK(strict.verdict == Verdict::Reject);
  CHECK(strict.reasons == std::set<Reason>{Reason::NotFixed});
}

TEST_CASE("judge_a strict mode: NLI site verified against the whole's frame") {
  Lexicon lex = testutil::fixture_lexicon();
  KB kb = testutil::fixture_scene();
  Judgment j = judge_a(clause_of("Max est à l'extrémité de la table", lex), lex,
                       &kb, true);
  CHECK(j.verdict == Verdict::Accept);

  LocativeClause c{NP{{{Definiteness::Proper, "max"}}},
                   Prep::A,
                   NP{{{Definiteness::Definite, "extrémité"},
                       {Definiteness::Definite, "inconnu"}}}};
  CHECK_THROWS_AS(judge_a(c, lex, &kb, true), Error);
}

TEST_CASE("judge_genitive: the six genitive fixtures delegate to classify") {
  Lexicon lex = testutil::fixture_lexicon();
  KB kb = testutil::fixture_scene();
  auto run = [&](const std::string& text) {
    return judge_genitive(std::get<NP>(parse_text(text, lex)), kb, lex);
  };

  struct Case {
    const char* text;
    RelationKind kind;
  } cases[] = {
      {"une brebis du troupeau", RelationKind::MemberCollection},
      {"le couple des gagnants", RelationKind::SubcollectionCollection},
      {"une part du gâteau", RelationKind::PortionWhole},
      {"la farine du gâteau", RelationKind::SubstanceWhole},
      {"un morceau de la tasse", RelationKind::PieceWhole},
      {"la poignée de la maison", RelationKind::ComponentWhole},
  };
  for (const Case& c : cases) {
    GenitiveResult r = run(c.text);
    CHECK(r.relation.kind == c.kind);
    CHECK(r.relation == classify(r.part_id, r.whole_id, kb));
    CHECK_FALSE(r.explanation.empty());
  }

  GenitiveResult handle = run("la poignée de la porte");
  CHECK(handle.relation ==
        PartWholeRelation::component(DependenceDirection::WholeDependsOnPart,
                                     Directness::Direct));

  CHECK_THROWS_AS(run("la fête du gâteau"), Error);
  CHECK_THROWS_AS(judge_genitive(NP{{{Definiteness::Definite, "table"}}}, kb, lex),
                  Error);
}

TEST_CASE("resolve_nli: threshold rules on constructed shapes") {
  Lexicon lex = testutil::fixture_lexicon();

  KB kb;
  EntityRecord col;
  col.id = "col";
  col.lemma = "col";
  View v;
  v.category = {TopCategory::Material, MaterialSub::Object, {}};
  v.features = {true, false, false};
  col.views = {v};
  col.extent = {{0, Region::box({0, 0, 0}, {2, 2, 8})}};
  kb.entities["col"] = col;

  // top of a 3x3x9 column: the top ceil(9/3) = 3 slabs
  NliZones top = resolve_nli("col", "haut", kb, lex);
  VoxelSet expected;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 6; z <= 8; ++z) expected.insert({x, y, z});
  CHECK(top.material_zone.voxels() == expected);

  // corner of a 6x6x1 plate: a ceil(6/3) = 2 square patch
  EntityRecord plate;
  plate.id = "plate";
  plate.lemma = "plate";
  plate.views = {v};
  plate.extent = {{0, Region::box({0, 0, 0}, {5, 5, 0})}};
  kb.entities["plate"] = plate;
  NliZones corner = resolve_nli("plate", "coin", kb, lex);
  VoxelSet patch{{4, 4, 0}, {5, 4, 0}, {4, 5, 0}, {5, 5, 0}};
  CHECK(corner.material_zone.voxels() == patch);

  // no orientation attributes: directional nouns cannot resolve
  try {
    resolve_nli("plate", "avant", kb, lex);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingOrientation);
  }
}

TEST_CASE("resolve_nli: errors") {
  Lexicon lex = testutil::fixture_lexicon();
  KB kb = testutil::fixture_scene();
  try {
    resolve_nli("table1", "table", kb, lex);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnNLI);
  }
  CHECK_THROWS_AS(resolve_nli("table1", "zorglub", kb, lex), Error);
  CHECK_THROWS_AS(resolve_nli("fete1", "haut", kb, lex), Error);
}

TEST_CASE("resolve_nli: zone invariants on the fixture pairs") {
  Lexicon lex = testutil::fixture_lexicon();
  KB kb = testutil::fixture_scene();
  struct Pair {
    const char* whole;
    const char* lemma;
  } pairs[] = {
      {"armoire1", "haut"},   {"armoire1", "pied"},   {"armoire1", "coin"},
      {"table1", "extrémité"}, {"maison1", "dessus"},  {"pre1", "fond"},
      {"voiture1", "avant"},  {"voiture1", "arrière"}, {"voiture1", "gauche"},
      {"voiture1", "droite"},
  };
  for (const Pair& p : pairs) {
    CAPTURE(p.whole);
    CAPTURE(p.lemma);
    NliZones z = resolve_nli(p.whole, p.lemma, kb, lex);
    const Region& ext = kb.at(p.whole).extent_at(0);
    CHECK(part_of(z.material_zone, ext));
    for (const auto& [id, e] : kb.entities) {
      auto it = e.extent.find(0);
      if (it != e.extent.end()) CHECK_FALSE(overlaps(z.space_portion, it->second));
    }
    CHECK(self_connected(
        Region(set_union(z.material_zone.voxels(), z.space_portion.voxels()))));
  }
}

TEST_CASE("resolve_nli: the table's end zone is the declared end part") {
  Lexicon lex = testutil::fixture_lexicon();
  KB kb = testutil::fixture_scene();
  NliZones z = resolve_nli("table1", "extrémité", kb, lex);
  CHECK(z.material_zone == kb.at("extremite1").extent_at(0));
}

TEST_CASE("resolve_nli: motion front beats geometric saliency") {
  // the car's motion front points +x while aerodynamics point -x; the front
  // zone must sit at the +x end
  Lexicon lex = testutil::fixture_lexicon();
  KB kb = testutil::fixture_scene();
  NliZones front = resolve_nli("voiture1", "avant", kb, lex);
  NliZones back = resolve_nli("voiture1", "arrière", kb, lex);
  for (Voxel v : front.material_zone.voxels()) CHECK(v.x >= 84);
  for (Voxel v : back.material_zone.voxels()) CHECK(v.x <= 81);
}

TEST_CASE("check_route_prep: conduit and path tags") {
  Lexicon lex = testutil::fixture_lexicon();
  RouteCheck door = check_route_prep(Prep::Par, lookup("porte", lex));
  CHECK(door.ok);
  CHECK(door.tag == RouteSub::Conduit);
  RouteCheck trail = check_route_prep(Prep::ATravers, lookup("sentier", lex));
  CHECK(trail.ok);
  CHECK(trail.tag == RouteSub::Path);
  RouteCheck cake = check_route_prep(Prep::Par, lookup("gâteau", lex));
  CHECK_FALSE(cake.ok);
  CHECK_THROWS_AS(check_route_prep(Prep::Dans, lookup("porte", lex)), Error);
}
