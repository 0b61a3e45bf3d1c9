#pragma once

// Applies the ontology to parsed phrases: acceptability of localizing «à»,
// classification of genitive part-whole phrases, internal-location zones,
// route prepositions.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lokatif/errors.hpp"
#include "lokatif/lexicon.hpp"
#include "lokatif/meronomy.hpp"
#include "lokatif/ontology.hpp"
#include "lokatif/parser.hpp"

namespace lokatif {

enum class Verdict { Accept, Reject };

enum class Reason { NotFixed, NoSpacePortion, NotSpecified, UnknownLemma };

inline const char* to_string(Reason r) {
  switch (r) {
    case Reason::NotFixed: return "NotFixed";
    case Reason::NoSpacePortion: return "NoSpacePortion";
    case Reason::NotSpecified: return "NotSpecified";
    case Reason::UnknownLemma: return "UnknownLemma";
  }
  return "?";
}

struct Judgment {
  Verdict verdict = Verdict::Reject;
  std::set<Reason> reasons;               // empty iff Accept
  std::optional<View> chosen_view;        // present iff Accept
  std::vector<std::string> trace;
};

namespace detail {

inline std::set<Reason> view_failures(const FeatureSet& f) {
  std::set<Reason> out;
  if (!f.fix) out.insert(Reason::NotFixed);
  if (!f.esp) out.insert(Reason::NoSpacePortion);
  if (!f.spc) out.insert(Reason::NotSpecified);
  return out;
}

inline std::string describe_features(const FeatureSet& f) {
  std::string s = "(";
  s += f.fix ? "+fix," : "-fix,";
  s += f.esp ? "+esp," : "-esp,";
  s += f.spc ? "+spc)" : "-spc)";
  return s;
}

inline const char* describe_definiteness(Definiteness d) {
  switch (d) {
    case Definiteness::Proper: return "proper";
    case Definiteness::Definite: return "definite";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

/// Strict-mode fixity check: in scene coordinates (the terrestrial frame),
/// the site's extent must not move over the scene's time steps.
inline bool scene_fixed(const EntityRecord& e) {
  if (e.extent.size() < 2) return true;
  const Region& first = e.extent.begin()->second;
  for (const auto& [t, r] : e.extent)
    if (r != first) return false;
  return true;
}

}  // namespace detail

/// Acceptability of a localizing «à» clause. A view licenses acceptance when
/// it is +fix and +esp and the determiner specifies the site's position.
/// Views are scanned in lexicon order and the first satisfier wins; on
/// rejection the reasons come from the view with the fewest failures.
inline Judgment judge_a(const LocativeClause& clause, const Lexicon& lexicon,
                        const KB* scene = nullptr, bool strict = false,
                        const GeometryConfig& cfg = {}) {
  if (clause.prep != Prep::A)
    throw Error(ErrorCode::SyntaxError, "judge_a requires the preposition à");
  const NPSegment& site = clause.site.head();
  const LexEntry* entry = lexicon.find(site.head);
  if (!entry) throw Error(ErrorCode::UnknownLemma, site.head);

  Judgment j;
  j.trace.push_back("site head: " + site.head + " [" +
                    detail::describe_definiteness(site.definiteness) + "]");

  std::vector<View> views = entry->views;
  if (entry->nli_rule) {
    // Internal-location nouns localize relative to a genitive whole; the
    // Place view carries their semantics.
    views.clear();
    for (const View& v : entry->views)
      if (v.category.material_sub == MaterialSub::Place) views.push_back(v);
    if (!clause.site.has_genitive()) {
      j.trace.push_back(
          "internal-location noun without a genitive whole: position "
          "unspecified");
      j.verdict = Verdict::Reject;
      j.reasons = {Reason::NotSpecified};
      return j;
    }
    const std::string& whole_lemma = clause.site.chain[1].head;
    j.trace.push_back("internal-location noun anchored at «" + whole_lemma + "»");
    if (strict && scene) {
      auto whole_id = scene->find_by_lemma(whole_lemma);
      if (!whole_id) throw Error(ErrorCode::UnknownEntity, whole_lemma);
      const EntityRecord& whole = scene->at(*whole_id);
      if (whole.extent.empty())
        throw Error(ErrorCode::MissingExtent, *whole_id);
      int t0 = whole.extent.begin()->first;
      Frame frame = build_frame(*whole_id, {t0, t0}, *scene, cfg);
      bool anchored = false;
      for (const std::string& p : frame.places)
        if (scene->at(p).lemma == site.head) anchored = true;
      if (!anchored) {
        j.trace.push_back("no «" + site.head + "» part in the frame of " +
                          *whole_id);
        j.verdict = Verdict::Reject;
        j.reasons = {Reason::NotFixed};
        return j;
      }
      j.trace.push_back("frame of " + *whole_id + " contains a «" + site.head +
                        "» place");
    }
  }

  std::vector<std::set<Reason>> all_failures;
  for (std::size_t i = 0; i < views.size(); ++i) {
    FeatureSet f = effective_features(views[i], site.definiteness);
    std::set<Reason> failures = detail::view_failures(f);

    if (failures.empty() && strict && scene) {
      if (auto id = scene->find_by_lemma(site.head)) {
        const EntityRecord& e = scene->at(*id);
        if (!detail::scene_fixed(e)) {
          failures.insert(Reason::NotFixed);
          j.trace.push_back("scene: extent of " + *id + " moves over time");
        }
      }
    }

    j.trace.push_back("view " + std::to_string(i + 1) + ": " +
                      detail::describe_features(f) +
                      (failures.empty() ? " => satisfies à" : " => fails"));
    if (failures.empty()) {
      j.verdict = Verdict::Accept;
      j.chosen_view = views[i];
      j.trace.push_back("accepted via view " + std::to_string(i + 1));
      return j;
    }
    all_failures.push_back(std::move(failures));
  }
  // Fewest failures wins; ties go to the first view.
  j.verdict = Verdict::Reject;
  std::size_t fewest = SIZE_MAX;
  for (const auto& f : all_failures)
    if (f.size() < fewest) {
      fewest = f.size();
      j.reasons = f;
    }
  j.trace.push_back("rejected");
  return j;
}

// ---------------------------------------------------------------------------
// Genitive part-whole phrases

struct GenitiveResult {
  std::string part_id;
  std::string whole_id;
  PartWholeRelation relation;
  std::vector<std::string> explanation;
};

/// Classifies the head of a genitive NP against its nearest complement,
/// resolving both lemmas to KB individuals; the explanation names the
/// triggering facts.
inline GenitiveResult judge_genitive(const NP& np, const KB& kb,
                                     const Lexicon& lexicon) {
  if (!np.has_genitive())
    throw Error(ErrorCode::SyntaxError, "noun phrase has no genitive complement");
  const std::string& part_lemma = np.chain[0].head;
  const std::string& whole_lemma = np.chain[1].head;
  auto part = kb.find_by_lemma(part_lemma);
  auto whole = kb.find_by_lemma(whole_lemma);
  if (!part) throw Error(ErrorCode::UnknownEntity, part_lemma);
  if (!whole) throw Error(ErrorCode::UnknownEntity, whole_lemma);

  GenitiveResult res;
  res.part_id = *part;
  res.whole_id = *whole;
  res.relation = classify(*part, *whole, kb);
  res.explanation.push_back("«" + part_lemma + " de " + whole_lemma + "» -> " +
                            to_string(res.relation));
  switch (res.relation.kind) {
    case RelationKind::MemberCollection:
      res.explanation.push_back(*part + " is a declared member of the collection " +
                                *whole);
      break;
    case RelationKind::SubcollectionCollection:
      res.explanation.push_back("members of " + *part +
                                " are all members of " + *whole);
      break;
    case RelationKind::PortionWhole:
      res.explanation.push_back("declared conventional portion of " + *whole);
      break;
    case RelationKind::SubstanceWhole:
      res.explanation.push_back(*whole + " (or a spatial part of it) is made of " +
                                *part);
      break;
    case RelationKind::PieceWhole:
      res.explanation.push_back("declared arbitrary piece of " + *whole);
      break;
    case RelationKind::ComponentWhole:
      res.explanation.push_back(
          std::string("functional dependence path, ") +
          (res.relation.direction == DependenceDirection::PartDependsOnWhole
               ? "part depends on whole"
               : "whole depends on part") +
          (res.relation.directness == Directness::Direct ? ", direct"
                                                         : ", mediated"));
      break;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Internal-location zones

struct NliZones {
  Region material_zone;
  Region space_portion;
};

namespace detail {

inline int cdiv(int a, int b) { return (a + b - 1) / b; }

struct Box {
  Voxel lo, hi;
  int size(Axis a) const { return coord(hi, a) - coord(lo, a) + 1; }
};

inline Box bounding_box(const Region& r) {
  Box b{*r.voxels().begin(), *r.voxels().begin()};
  for (Voxel v : r.voxels()) {
    b.lo.x = std::min(b.lo.x, v.x); b.hi.x = std::max(b.hi.x, v.x);
    b.lo.y = std::min(b.lo.y, v.y); b.hi.y = std::max(b.hi.y, v.y);
    b.lo.z = std::min(b.lo.z, v.z); b.hi.z = std::max(b.hi.z, v.z);
  }
  return b;
}

/// Keep the slab of thickness ceil(size/den) at the `sign` end of `axis`.
inline VoxelSet end_slab(const Region& ext, const Box& b, Axis axis, int sign,
                         int den) {
  int s = b.size(axis);
  int depth = cdiv(s, den);
  VoxelSet out;
  for (Voxel v : ext.voxels()) {
    int c = coord(v, axis);
    bool keep = sign > 0 ? c >= coord(b.hi, axis) - depth + 1
                         : c <= coord(b.lo, axis) + depth - 1;
    if (keep) out.insert(v);
  }
  return out;
}

inline AxisDir left_of(AxisDir front) {
  if (front.axis == Axis::X) return {Axis::Y, front.sign};
  if (front.axis == Axis::Y) return {Axis::X, -front.sign};
  throw Error(ErrorCode::MissingOrientation,
              "vertical frontal orientation determines no left/right");
}

}  // namespace detail

/// The material part a whole's internal-location noun picks out, plus the
/// immaterial zone adjacent to it. material_zone is a subset of the whole's
/// extent; space_portion is disjoint from every material extent.
inline NliZones resolve_nli(const std::string& whole_id, const std::string& lemma,
                            const KB& kb, const Lexicon& lexicon,
                            std::optional<int> time = std::nullopt,
                            const GeometryConfig& cfg = {}) {
  const LexEntry* entry = lexicon.find(lemma);
  if (!entry) throw Error(ErrorCode::UnknownLemma, lemma);
  if (!entry->nli_rule)
    throw Error(ErrorCode::NotAnNLI, lemma + " carries no zone rule");
  const EntityRecord& whole = kb.at(whole_id);
  if (whole.extent.empty()) throw Error(ErrorCode::MissingExtent, whole_id);
  int t = time.value_or(whole.extent.begin()->first);
  const Region& ext = whole.extent_at(t);
  detail::Box box = detail::bounding_box(ext);

  auto oriented = [&]() -> AxisDir {
    auto o = assign_frontal_orientation(whole);
    if (!o)
      throw Error(ErrorCode::MissingOrientation,
                  whole_id + " has no frontal orientation");
    return o->direction;
  };

  VoxelSet zone;
  switch (*entry->nli_rule) {
    case NliRule::Top:
      zone = detail::end_slab(ext, box, Axis::Z, +1, 3);
      break;
    case NliRule::Bottom:
      zone = detail::end_slab(ext, box, Axis::Z, -1, 3);
      break;
    case NliRule::End: {
      Axis major = Axis::X;
      if (box.size(Axis::Y) > box.size(major)) major = Axis::Y;
      if (box.size(Axis::Z) > box.size(major)) major = Axis::Z;
      zone = detail::end_slab(ext, box, major, +1, 4);
      break;
    }
    case NliRule::Corner: {
      VoxelSet xs = detail::end_slab(ext, box, Axis::X, +1, 3);
      VoxelSet ys = detail::end_slab(ext, box, Axis::Y, +1, 3);
      VoxelSet out;
      std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                            std::inserter(out, out.begin()));
      zone = std::move(out);
      break;
    }
    case NliRule::Interior: {
      for (Voxel v : ext.voxels()) {
        bool inside = true;
        for (Voxel d : kFaceNeighbors)
          if (!ext.contains(v + d)) inside = false;
        if (inside) zone.insert(v);
      }
      if (zone.empty()) zone = ext.voxels();  // degenerate thin extent
      break;
    }
    case NliRule::Front: {
      AxisDir d = oriented();
      zone = detail::end_slab(ext, box, d.axis, d.sign, 3);
      break;
    }
    case NliRule::Back: {
      AxisDir d = oriented();
      zone = detail::end_slab(ext, box, d.axis, -d.sign, 3);
      break;
    }
    case NliRule::Left: {
      AxisDir l = detail::left_of(oriented());
      zone = detail::end_slab(ext, box, l.axis, l.sign, 3);
      break;
    }
    case NliRule::Right: {
      AxisDir l = detail::left_of(oriented());
      zone = detail::end_slab(ext, box, l.axis, -l.sign, 3);
      break;
    }
  }

  Region material_zone(std::move(zone));
  VoxelSet portion = set_minus(dilate(material_zone, cfg.dilation_radius).voxels(),
                               detail::material_voxels(kb, t));
  auto space_portion = Region::from_voxels(std::move(portion));
  if (!space_portion)
    throw Error(ErrorCode::MissingExtent,
                "no empty space adjacent to the «" + lemma + "» zone of " +
                    whole_id);
  return {std::move(material_zone), std::move(*space_portion)};
}

// ---------------------------------------------------------------------------
// Route prepositions

struct RouteCheck {
  bool ok = false;
  std::optional<RouteSub> tag;
};

/// «par» / «à travers» select route-enabling sites: conduits (object
/// subclass) and paths (place subclass). Shallow tag check only.
inline RouteCheck check_route_prep(Prep prep, const std::vector<View>& site_views) {
  if (prep != Prep::Par && prep != Prep::ATravers)
    throw Error(ErrorCode::SyntaxError, "not a route preposition");
  for (const View& v : site_views)
    if (v.category.route_sub) return {true, v.category.route_sub};
  return {false, std::nullopt};
}

}  // namespace lokatif
