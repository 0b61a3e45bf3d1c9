#pragma once

// Scene/KB file ingestion. A scene is a JSON array of entity objects; views
// come from the lexicon via each entity's lemma. The ground plane is z = 0.

#include <string>

#include <nlohmann/json.hpp>

#include "lokatif/errors.hpp"
#include "lokatif/lexicon.hpp"
#include "lokatif/meronomy.hpp"
#include "lokatif/ontology.hpp"

namespace lokatif {

namespace detail {

inline AxisDir parse_axis_dir(const std::string& s) {
  if (s.size() != 2 || (s[0] != '+' && s[0] != '-'))
    throw Error(ErrorCode::InvalidEntry, "bad axis direction: " + s);
  Axis a;
  switch (s[1]) {
    case 'x': a = Axis::X; break;
    case 'y': a = Axis::Y; break;
    case 'z': a = Axis::Z; break;
    default: throw Error(ErrorCode::InvalidEntry, "bad axis direction: " + s);
  }
  return {a, s[0] == '+' ? 1 : -1};
}

inline Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  throw Error(ErrorCode::InvalidEntry, "bad axis: " + s);
}

inline KB build_scene(const nlohmann::json& doc, const Lexicon& lexicon);

}  // namespace detail

inline KB load_scene(const std::string& text, const Lexicon& lexicon) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("scene: ") + e.what(),
                detail::line_of_byte(text, e.byte));
  }
  if (!doc.is_array())
    throw Error(ErrorCode::InvalidEntry, "scene top level must be an array");
  try {
    return detail::build_scene(doc, lexicon);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidEntry, e.what());
  }
}

namespace detail {

inline KB build_scene(const nlohmann::json& doc, const Lexicon& lexicon) {
  KB kb;
  for (const auto& je : doc) {
    if (!je.is_object())
      throw Error(ErrorCode::InvalidEntry, "scene entity must be an object");
    detail::require_keys(je,
                         {"id", "lemma", "plurality", "members", "made_of",
                          "extent", "orientation", "dependence", "portions"},
                         "scene entity");
    EntityRecord e;
    if (!je.contains("id") || !je["id"].is_string())
      throw Error(ErrorCode::InvalidEntry, "scene entity without an id");
    e.id = je["id"].get<std::string>();
    if (!je.contains("lemma"))
      throw Error(ErrorCode::InvalidEntry, e.id + ": missing lemma");
    e.lemma = je["lemma"].get<std::string>();
    const LexEntry* lx = lexicon.find(e.lemma);
    if (!lx)
      throw Error(ErrorCode::InvalidEntry,
                  e.id + ": lemma «" + e.lemma + "» not in the lexicon");
    e.views = lx->views;

    std::string plurality = je.value("plurality", "singular");
    if (plurality == "singular") e.plurality = Plurality::Singular;
    else if (plurality == "plural") e.plurality = Plurality::Plural;
    else if (plurality == "collection") e.plurality = Plurality::Collection;
    else throw Error(ErrorCode::InvalidEntry, e.id + ": bad plurality " + plurality);

    if (je.contains("members")) {
      if (e.plurality != Plurality::Collection)
        throw Error(ErrorCode::InvalidEntry,
                    e.id + ": members require plurality=collection");
      for (const auto& m : je["members"]) e.members.insert(m.get<std::string>());
    } else if (e.plurality == Plurality::Collection) {
      throw Error(ErrorCode::InvalidEntry, e.id + ": collection without members");
    }

    if (je.contains("made_of")) e.made_of = je["made_of"].get<std::string>();

    if (je.contains("extent")) {
      for (const auto& [key, arr] : je["extent"].items()) {
        int t = 0;
        try {
          t = std::stoi(key);
        } catch (const std::exception&) {
          throw Error(ErrorCode::InvalidEntry, e.id + ": bad time step " + key);
        }
        if (t < 0)
          throw Error(ErrorCode::InvalidEntry, e.id + ": negative time step");
        VoxelSet vs;
        for (const auto& triple : arr) {
          if (!triple.is_array() || triple.size() != 3)
            throw Error(ErrorCode::InvalidEntry, e.id + ": bad voxel triple");
          vs.insert({triple[0].get<int>(), triple[1].get<int>(),
                     triple[2].get<int>()});
        }
        auto region = Region::from_voxels(std::move(vs));
        if (!region)
          throw Error(ErrorCode::InvalidEntry, e.id + ": empty extent at t=" + key);
        e.extent.emplace(t, std::move(*region));
      }
    }
    if (e.top() == TopCategory::Material && e.extent.empty())
      throw Error(ErrorCode::InvalidEntry,
                  e.id + ": material entity without an extent");

    if (je.contains("orientation")) {
      const auto& jo = je["orientation"];
      detail::require_keys(jo,
                           {"motion_front", "function_front", "elongation_axis",
                            "aerodynamic_front"},
                           e.id + " orientation");
      if (jo.contains("motion_front"))
        e.orientation.motion_front =
            detail::parse_axis_dir(jo["motion_front"].get<std::string>());
      if (jo.contains("function_front"))
        e.orientation.function_front =
            detail::parse_axis_dir(jo["function_front"].get<std::string>());
      if (jo.contains("elongation_axis"))
        e.orientation.elongation_axis =
            detail::parse_axis(jo["elongation_axis"].get<std::string>());
      if (jo.contains("aerodynamic_front"))
        e.orientation.aerodynamic_front =
            detail::parse_axis_dir(jo["aerodynamic_front"].get<std::string>());
    }

    if (je.contains("dependence")) {
      for (const auto& jd : je["dependence"]) {
        detail::require_keys(jd, {"on", "genericity", "kind"},
                             e.id + " dependence");
        DependenceEdge edge;
        edge.dependent = e.id;
        edge.dependee = jd["on"].get<std::string>();
        if (edge.dependee == e.id)
          throw Error(ErrorCode::InvalidEntry, e.id + ": self-dependence");
        std::string g = jd.value("genericity", "generic");
        edge.genericity = g == "individual" ? Genericity::Individual
                                            : Genericity::Generic;
        std::string k = jd.value("kind", "functional");
        if (k == "functional") edge.kind = DependenceType::Functional;
        else if (k == "constitution") edge.kind = DependenceType::Constitution;
        else if (k == "participation") edge.kind = DependenceType::Participation;
        else if (k == "quantity") edge.kind = DependenceType::Quantity;
        else throw Error(ErrorCode::InvalidEntry, e.id + ": bad dependence kind " + k);
        kb.dependence.push_back(edge);
      }
    }

    if (je.contains("portions")) {
      for (const auto& jp : je["portions"]) {
        detail::require_keys(jp, {"whole", "mode"}, e.id + " portion fact");
        PortionFact f;
        f.part = e.id;
        f.whole = jp["whole"].get<std::string>();
        std::string m = jp.value("mode", "conventional");
        if (m == "conventional") f.mode = PortionMode::ConventionalPortion;
        else if (m == "piece") f.mode = PortionMode::ArbitraryPiece;
        else throw Error(ErrorCode::InvalidEntry, e.id + ": bad portion mode " + m);
        kb.portion_facts.push_back(f);
      }
    }

    if (!kb.entities.emplace(e.id, std::move(e)).second)
      throw Error(ErrorCode::InvalidEntry, "duplicate entity id " + je["id"].get<std::string>());
  }

  // Referential integrity and functional acyclicity.
  for (const DependenceEdge& edge : kb.dependence) {
    kb.at(edge.dependent);
    kb.at(edge.dependee);
  }
  for (const PortionFact& f : kb.portion_facts) {
    if (kb.at(f.part).top() != TopCategory::Material ||
        kb.at(f.whole).top() != TopCategory::Material)
      throw Error(ErrorCode::InvalidEntry,
                  "portion fact endpoints must be material: " + f.part);
  }
  for (const auto& [id, e] : kb.entities) {
    for (const std::string& m : e.members) kb.at(m);
    if (e.made_of) kb.at(*e.made_of);
  }
  if (!detail::functional_dependence_acyclic(kb))
    throw Error(ErrorCode::CycleDetected,
                "functional dependence graph contains a cycle");
  return kb;
}

}  // namespace detail

}  // namespace lokatif
