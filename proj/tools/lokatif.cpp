// Command-line driver: load a lexicon and an optional scene, then judge
// locative sentences, classify part-whole pairs, run closures, resolve
// internal-location zones.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "lokatif/builtin_data.hpp"
#include "lokatif/lexicon.hpp"
#include "lokatif/meronomy.hpp"
#include "lokatif/ontology.hpp"
#include "lokatif/parser.hpp"
#include "lokatif/scene.hpp"
#include "lokatif/semantics.hpp"

namespace {

using namespace lokatif;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyInput:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownWord:
    case ErrorCode::UnknownLemma:
    case ErrorCode::UnknownEntity:
      return kExitUsage;
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateLemma:
    case ErrorCode::InvalidEntry:
    case ErrorCode::CycleDetected:
      return kExitData;
    default:
      return kExitReject;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidEntry, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string lexicon_path;
  std::string scene_path;
  bool json = false;
  bool strict = false;
  GeometryConfig geometry;
};

Lexicon load_lexicon_or_builtin(const Options& opt) {
  if (!opt.lexicon_path.empty()) return load_lexicon(read_file(opt.lexicon_path));
  if (const char* env = std::getenv("LOKATIF_LEXICON"))
    return load_lexicon(read_file(env));
  throw Error(ErrorCode::InvalidEntry,
              "no lexicon: pass --lexicon or set LOKATIF_LEXICON");
}

std::optional<KB> load_scene_if_given(const Options& opt, const Lexicon& lex) {
  if (opt.scene_path.empty()) return std::nullopt;
  return load_scene(read_file(opt.scene_path), lex);
}

void emit(const Options& opt, const ordered_json& doc,
          const std::string& text_form) {
  if (opt.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text_form << "\n";
}

ordered_json region_json(const Region& r) {
  ordered_json arr = ordered_json::array();
  for (Voxel v : r.voxels()) arr.push_back({v.x, v.y, v.z});
  return arr;
}

ordered_json judgment_json(const Judgment& j) {
  ordered_json doc;
  doc["verdict"] = j.verdict == Verdict::Accept ? "Accept" : "Reject";
  doc["reasons"] = ordered_json::array();
  for (Reason r : j.reasons) doc["reasons"].push_back(to_string(r));
  doc["trace"] = j.trace;
  return doc;
}

std::string reasons_text(const Judgment& j) {
  std::string s;
  for (Reason r : j.reasons) {
    if (!s.empty()) s += ",";
    s += to_string(r);
  }
  return s;
}

// -------------------------------------------------------------------------
// check

int run_check(const Options& opt, const std::string& sentence) {
  Lexicon lex = load_lexicon_or_builtin(opt);
  auto scene = load_scene_if_given(opt, lex);
  AST ast = parse_text(sentence, lex);

  if (const auto* clause = std::get_if<LocativeClause>(&ast)) {
    if (clause->prep == Prep::A) {
      Judgment j = judge_a(*clause, lex, scene ? &*scene : nullptr, opt.strict,
                           opt.geometry);
      std::string text = j.verdict == Verdict::Accept
                             ? "Accept"
                             : "Reject {" + reasons_text(j) + "}";
      emit(opt, judgment_json(j), text);
      return j.verdict == Verdict::Accept ? kExitAccept : kExitReject;
    }
    if (clause->prep == Prep::Par || clause->prep == Prep::ATravers) {
      RouteCheck rc = check_route_prep(clause->prep,
                                       lookup(clause->site.head().head, lex));
      ordered_json doc;
      doc["verdict"] = rc.ok ? "Accept" : "Reject";
      doc["route"] = !rc.ok ? "mismatch"
                     : (rc.tag == RouteSub::Conduit ? "conduit" : "path");
      emit(opt, doc,
           rc.ok ? std::string("Accept (") + doc["route"].get<std::string>() + ")"
                 : "Reject {RouteMismatch}");
      return rc.ok ? kExitAccept : kExitReject;
    }
    ordered_json doc;
    doc["verdict"] = "Parsed";
    doc["prep"] = to_string(clause->prep);
    emit(opt, doc,
         std::string("Parsed (no judgment for «") + to_string(clause->prep) +
             "»)");
    return kExitAccept;
  }

  const NP& np = std::get<NP>(ast);
  if (np.has_genitive() && scene) {
    GenitiveResult res = judge_genitive(np, *scene, lex);
    ordered_json doc;
    doc["relation"] = to_string(res.relation);
    doc["part"] = res.part_id;
    doc["whole"] = res.whole_id;
    doc["trace"] = res.explanation;
    emit(opt, doc, to_string(res.relation));
    return kExitAccept;
  }
  throw Error(ErrorCode::SyntaxError,
              "expected a locative clause (or a genitive phrase with --scene)");
}

// -------------------------------------------------------------------------
// partwhole / infer

int run_partwhole(const Options& opt, const std::string& part,
                  const std::string& whole) {
  Lexicon lex = load_lexicon_or_builtin(opt);
  auto scene = load_scene_if_given(opt, lex);
  if (!scene) throw Error(ErrorCode::InvalidEntry, "partwhole requires --scene");
  // Accept entity ids directly, falling back to lemma resolution.
  auto resolve = [&](const std::string& name) {
    if (scene->has(name)) return name;
    if (auto id = scene->find_by_lemma(name)) return *id;
    throw Error(ErrorCode::UnknownEntity, name);
  };
  std::string pid = resolve(part), wid = resolve(whole);
  PartWholeRelation r = classify(pid, wid, *scene);
  ordered_json doc;
  doc["relation"] = to_string(r);
  doc["part"] = pid;
  doc["whole"] = wid;
  emit(opt, doc, to_string(r) + "  (" + pid + " / " + wid + ")");
  return kExitAccept;
}

int run_infer(const Options& opt, const std::string& whole) {
  Lexicon lex = load_lexicon_or_builtin(opt);
  auto scene = load_scene_if_given(opt, lex);
  if (!scene) throw Error(ErrorCode::InvalidEntry, "infer requires --scene");
  std::string wid = scene->has(whole)
                        ? whole
                        : scene->find_by_lemma(whole).value_or(whole);
  auto parts = transitive_parts(wid, *scene);
  ordered_json doc;
  doc["whole"] = wid;
  doc["parts"] = ordered_json::array();
  std::string text;
  for (const auto& [id, r] : parts) {
    ordered_json e;
    e["id"] = id;
    e["relation"] = to_string(r);
    doc["parts"].push_back(e);
    text += id + ": " + to_string(r) + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(opt, doc, text.empty() ? "(no parts)" : text);
  return kExitAccept;
}

// -------------------------------------------------------------------------
// nli / orient / classify lemma

int run_nli(const Options& opt, const std::string& whole,
            const std::string& lemma) {
  Lexicon lex = load_lexicon_or_builtin(opt);
  auto scene = load_scene_if_given(opt, lex);
  if (!scene) throw Error(ErrorCode::InvalidEntry, "nli requires --scene");
  std::string wid = scene->has(whole)
                        ? whole
                        : scene->find_by_lemma(whole).value_or(whole);
  NliZones z = resolve_nli(wid, lemma, *scene, lex, std::nullopt, opt.geometry);
  ordered_json doc;
  doc["whole"] = wid;
  doc["lemma"] = lemma;
  doc["material_zone"] = region_json(z.material_zone);
  doc["space_portion"] = region_json(z.space_portion);
  emit(opt, doc,
       "material_zone: " + std::to_string(z.material_zone.size()) +
           " voxels\nspace_portion: " + std::to_string(z.space_portion.size()) +
           " voxels");
  return kExitAccept;
}

int run_orient(const Options& opt, const std::string& entity) {
  Lexicon lex = load_lexicon_or_builtin(opt);
  auto scene = load_scene_if_given(opt, lex);
  if (!scene) throw Error(ErrorCode::InvalidEntry, "orient requires --scene");
  std::string id = scene->has(entity)
                       ? entity
                       : scene->find_by_lemma(entity).value_or(entity);
  auto o = assign_frontal_orientation(scene->at(id));
  ordered_json doc;
  doc["entity"] = id;
  if (o) {
    std::string dir = (o->direction.sign > 0 ? "+" : "-");
    dir += o->direction.axis == Axis::X ? "x" : o->direction.axis == Axis::Y ? "y" : "z";
    doc["front"] = dir;
    doc["factor"] = o->intrinsic ? "intrinsic" : "contextual";
    emit(opt, doc, "front: " + dir + " (" + doc["factor"].get<std::string>() + ")");
  } else {
    doc["front"] = nullptr;
    emit(opt, doc, "no frontal orientation");
  }
  return kExitAccept;
}

int run_classify_lemma(const Options& opt, const std::string& lemma) {
  Lexicon lex = load_lexicon_or_builtin(opt);
  const LexEntry* e = lex.find(lemma);
  if (!e) throw Error(ErrorCode::UnknownLemma, lemma);
  ordered_json doc;
  doc["lemma"] = e->lemma;
  doc["proper"] = e->proper;
  doc["views"] = ordered_json::array();
  std::string text = e->lemma + (e->proper ? " (proper)" : "");
  for (const View& v : e->views) {
    ordered_json jv;
    std::string cat;
    switch (v.category.top) {
      case TopCategory::Material:
        cat = v.category.material_sub == MaterialSub::Object   ? "object"
              : v.category.material_sub == MaterialSub::Place  ? "place"
              : v.category.material_sub == MaterialSub::Mixed  ? "mixed"
                                                               : "matter_portion";
        break;
      case TopCategory::Eventuality: cat = "eventuality"; break;
      case TopCategory::Substance: cat = "substance"; break;
      case TopCategory::SpacePortion: cat = "space_portion"; break;
    }
    jv["category"] = cat;
    if (v.category.route_sub)
      jv["route"] = v.category.route_sub == RouteSub::Conduit ? "conduit" : "path";
    jv["fix"] = v.features.fix;
    jv["esp"] = v.features.esp;
    doc["views"].push_back(jv);
    text += "\n  " + cat + " (" + (v.features.fix ? "+fix" : "-fix") + "," +
            (v.features.esp ? "+esp" : "-esp") + ")";
  }
  emit(opt, doc, text);
  return kExitAccept;
}

// -------------------------------------------------------------------------
// selftest: the bundled fixture suites

int run_selftest(const Options& opt) {
  Lexicon lex = load_lexicon(builtin::kLexiconJson);
  KB scene = load_scene(builtin::kSceneJson, lex);

  int failed = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) ++failed;
  };

  auto expect_accept = [&](const std::string& s) {
    Judgment j = judge_a(std::get<LocativeClause>(parse_text(s, lex)), lex);
    report("« " + s + " » -> Accept", j.verdict == Verdict::Accept);
  };
  auto expect_reject = [&](const std::string& s, std::set<Reason> reasons) {
    Judgment j = judge_a(std::get<LocativeClause>(parse_text(s, lex)), lex);
    report("« " + s + " » -> Reject {" + reasons_text(j) + "}",
           j.verdict == Verdict::Reject && j.reasons == reasons);
  };
  auto expect_relation = [&](const std::string& s, RelationKind kind) {
    try {
      GenitiveResult r = judge_genitive(std::get<NP>(parse_text(s, lex)), scene, lex);
      report("« " + s + " » -> " + to_string(r.relation), r.relation.kind == kind);
    } catch (const Error& e) {
      report("« " + s + " » -> error " + e.what(), false);
    }
  };

  expect_accept("Max est à Toulouse");
  expect_accept("Max est au jardin public");
  expect_accept("Max est à l'extrémité de la table");
  expect_reject("Max est au rocher", {Reason::NoSpacePortion});
  expect_reject("La mouche est au verre", {Reason::NotFixed});
  expect_reject("La mouche est au couteau",
                {Reason::NotFixed, Reason::NoSpacePortion});
  expect_reject("Max est à un jardin public", {Reason::NotSpecified});

  expect_relation("une brebis du troupeau", RelationKind::MemberCollection);
  expect_relation("le couple des gagnants", RelationKind::SubcollectionCollection);
  expect_relation("une part du gâteau", RelationKind::PortionWhole);
  expect_relation("la farine du gâteau", RelationKind::SubstanceWhole);
  expect_relation("un morceau de la tasse", RelationKind::PieceWhole);
  expect_relation("la poignée de la maison", RelationKind::ComponentWhole);

  bool homogeneity = false;
  try {
    classify("fete1", "gateau1", scene);
  } catch (const Error& e) {
    homogeneity = e.code() == ErrorCode::HomogeneityViolation;
  }
  report("cross-category pair -> HomogeneityViolation", homogeneity);

  std::cout << (failed == 0 ? "selftest: all checks passed"
                            : "selftest: " + std::to_string(failed) + " failed")
            << "\n";
  return failed == 0 ? kExitAccept : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial-entity categorization engine: locative judgments and "
               "part-whole classification for a controlled French fragment"};
  app.require_subcommand(1);

  Options opt;
  std::string format = "text";
  app.add_option("--lexicon", opt.lexicon_path, "lexicon JSON file");
  app.add_option("--scene", opt.scene_path, "scene/KB JSON file");
  app.add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", opt.strict, "verify fixity/frames against the scene");
  app.add_option("--height", opt.geometry.column_height,
                 "ground-place space portion height");
  app.add_option("--radius", opt.geometry.dilation_radius,
                 "space portion dilation radius");

  std::string sentence, part, whole, entity, lemma;
  auto* check = app.add_subcommand("check", "judge a locative sentence");
  check->add_option("sentence", sentence)->required();
  auto* partwhole = app.add_subcommand("partwhole", "classify a part-whole pair");
  partwhole->add_option("part", part)->required();
  partwhole->add_option("whole", whole)->required();
  auto* infer = app.add_subcommand("infer", "transitive part closure");
  infer->add_option("whole", whole)->required();
  auto* nli = app.add_subcommand("nli", "resolve an internal-location zone");
  nli->add_option("whole", whole)->required();
  nli->add_option("lemma", lemma)->required();
  auto* orient = app.add_subcommand("orient", "frontal orientation of an entity");
  orient->add_option("entity", entity)->required();
  auto* classify_cmd = app.add_subcommand("classify", "views of a lemma");
  classify_cmd->add_option("lemma", lemma)->required();
  app.add_subcommand("selftest", "run the bundled fixture suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    opt.json = format == "json";
    if (check->parsed()) return run_check(opt, sentence);
    if (partwhole->parsed()) return run_partwhole(opt, part, whole);
    if (infer->parsed()) return run_infer(opt, whole);
    if (nli->parsed()) return run_nli(opt, whole, lemma);
    if (orient->parsed()) return run_orient(opt, entity);
    if (classify_cmd->parsed()) return run_classify_lemma(opt, lemma);
    return run_selftest(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
