#pragma once

// Lexical knowledge: nouns with one or more category views, internal-location
// and component-noun markers, proper-noun status. JSON ingestion, validation,
// serialization.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lokatif/errors.hpp"
#include "lokatif/ontology.hpp"

namespace lokatif {

enum class NliRule { Top, Bottom, Front, Back, Left, Right, Corner, End, Interior };

struct LexEntry {
  std::string lemma;  // lowercase; may contain internal spaces
  bool proper = false;
  std::vector<View> views;
  std::optional<NliRule> nli_rule;
  std::optional<std::string> component_function;
};

class Lexicon {
 public:
  void add(LexEntry entry) {
    if (!entries_.emplace(entry.lemma, entry).second)
      throw Error(ErrorCode::DuplicateLemma, entry.lemma);
    order_.push_back(entry.lemma);
  }

  const LexEntry* find(const std::string& lemma) const {
    auto it = entries_.find(lemma);
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool contains(const std::string& lemma) const { return entries_.count(lemma) != 0; }

  /// Lemmas in file order.
  const std::vector<std::string>& lemmas() const { return order_; }

 private:
  std::map<std::string, LexEntry> entries_;
  std::vector<std::string> order_;
};

/// All views of a lemma, in file order; empty for an unknown lemma.
inline std::vector<View> lookup(const std::string& lemma, const Lexicon& lex) {
  const LexEntry* e = lex.find(lemma);
  return e ? e->views : std::vector<View>{};
}

// ---------------------------------------------------------------------------
// String tables

namespace detail {

inline const std::map<std::string, TopCategory> kTopNames = {
    {"material", TopCategory::Material},
    {"eventuality", TopCategory::Eventuality},
    {"substance", TopCategory::Substance},
    {"space_portion", TopCategory::SpacePortion}};

inline const std::map<std::string, MaterialSub> kMaterialSubNames = {
    {"object", MaterialSub::Object},
    {"matter_portion", MaterialSub::MatterPortion},
    {"place", MaterialSub::Place},
    {"mixed", MaterialSub::Mixed}};

inline const std::map<std::string, RouteSub> kRouteSubNames = {
    {"conduit", RouteSub::Conduit}, {"path", RouteSub::Path}};

inline const std::map<std::string, NliRule> kNliRuleNames = {
    {"top", NliRule::Top},         {"bottom", NliRule::Bottom},
    {"front", NliRule::Front},     {"back", NliRule::Back},
    {"left", NliRule::Left},       {"right", NliRule::Right},
    {"corner", NliRule::Corner},   {"end", NliRule::End},
    {"interior", NliRule::Interior}};

template <typename T>
std::string name_of(const std::map<std::string, T>& table, T value) {
  for (const auto& [name, v] : table)
    if (v == value) return name;
  return "?";
}

template <typename T>
T parse_name(const std::map<std::string, T>& table, const std::string& name,
             const std::string& what) {
  auto it = table.find(name);
  if (it == table.end())
    throw Error(ErrorCode::InvalidEntry, "unknown " + what + ": " + name);
  return it->second;
}

inline void require_keys(const nlohmann::json& obj,
                         std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, v] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return key == k;
        }) == allowed.end())
      throw Error(ErrorCode::InvalidEntry,
                  "unknown key \"" + key + "\" in " + where);
  }
}

inline std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  return 1 + static_cast<std::size_t>(std::count(
                 text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Load / serialize

inline View parse_view_json(const nlohmann::json& jv, const std::string& lemma) {
  if (!jv.is_object())
    throw Error(ErrorCode::InvalidEntry, lemma + ": view must be an object");
  detail::require_keys(jv, {"top", "material_sub", "route_sub", "fix", "esp"},
                       "view of " + lemma);
  View v;
  v.category.top = detail::parse_name(detail::kTopNames,
                                      jv.value("top", "material"), "top category");
  if (jv.contains("material_sub"))
    v.category.material_sub = detail::parse_name(
        detail::kMaterialSubNames, jv["material_sub"].get<std::string>(),
        "material_sub");
  if (jv.contains("route_sub"))
    v.category.route_sub = detail::parse_name(
        detail::kRouteSubNames, jv["route_sub"].get<std::string>(), "route_sub");
  v.features.fix = jv.value("fix", false);
  v.features.esp = jv.value("esp", false);
  v.features.spc = false;  // phrase-level, never stored
  if (auto why = view_violation(v))
    throw Error(ErrorCode::InvalidEntry, lemma + ": " + *why);
  return v;
}

namespace detail {
inline Lexicon build_lexicon(const nlohmann::json& doc);
}

inline Lexicon load_lexicon(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                std::string("lexicon: ") + e.what(),
                detail::line_of_byte(text, e.byte));
  }
  if (!doc.is_array())
    throw Error(ErrorCode::InvalidEntry, "lexicon top level must be an array");

  try {
    return detail::build_lexicon(doc);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidEntry, e.what());
  }
}

namespace detail {

inline Lexicon build_lexicon(const nlohmann::json& doc) {
  Lexicon lex;
  for (const auto& je : doc) {
    if (!je.is_object())
      throw Error(ErrorCode::InvalidEntry, "lexicon entry must be an object");
    detail::require_keys(
        je, {"lemma", "proper", "views", "nli_rule", "component_function"},
        "lexicon entry");
    LexEntry e;
    if (!je.contains("lemma") || !je["lemma"].is_string())
      throw Error(ErrorCode::InvalidEntry, "entry without a lemma");
    e.lemma = je["lemma"].get<std::string>();
    e.proper = je.value("proper", false);
    if (!je.contains("views") || !je["views"].is_array() || je["views"].empty())
      throw Error(ErrorCode::InvalidEntry, e.lemma + ": views must be non-empty");
    for (const auto& jv : je["views"]) e.views.push_back(parse_view_json(jv, e.lemma));
    if (je.contains("nli_rule"))
      e.nli_rule = detail::parse_name(detail::kNliRuleNames,
                                      je["nli_rule"].get<std::string>(), "nli_rule");
    if (je.contains("component_function"))
      e.component_function = je["component_function"].get<std::string>();

    if (e.nli_rule && e.component_function)
      throw Error(ErrorCode::InvalidEntry,
                  e.lemma + ": nli_rule and component_function are exclusive");
    if (e.nli_rule) {
      bool ok = false;
      for (const View& v : e.views)
        if (v.category.material_sub == MaterialSub::Place && v.features.fix &&
            v.features.esp)
          ok = true;
      if (!ok)
        throw Error(ErrorCode::InvalidEntry,
                    e.lemma + ": nli_rule requires a +fix +esp Place view");
    }
    if (e.component_function) {
      bool ok = false;
      for (const View& v : e.views)
        if (v.category.material_sub == MaterialSub::Object && !v.features.esp)
          ok = true;
      if (!ok)
        throw Error(ErrorCode::InvalidEntry,
                    e.lemma + ": component_function requires a -esp Object view");
    }
    lex.add(std::move(e));
  }
  return lex;
}

}  // namespace detail

inline std::string serialize(const Lexicon& lex) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const std::string& lemma : lex.lemmas()) {
    const LexEntry& e = *lex.find(lemma);
    nlohmann::ordered_json je;
    je["lemma"] = e.lemma;
    je["proper"] = e.proper;
    je["views"] = nlohmann::ordered_json::array();
    for (const View& v : e.views) {
      nlohmann::ordered_json jv;
      jv["top"] = detail::name_of(detail::kTopNames, v.category.top);
      if (v.category.material_sub)
        jv["material_sub"] =
            detail::name_of(detail::kMaterialSubNames, *v.category.material_sub);
      if (v.category.route_sub)
        jv["route_sub"] =
            detail::name_of(detail::kRouteSubNames, *v.category.route_sub);
      jv["fix"] = v.features.fix;
      jv["esp"] = v.features.esp;
      je["views"].push_back(jv);
    }
    if (e.nli_rule)
      je["nli_rule"] = detail::name_of(detail::kNliRuleNames, *e.nli_rule);
    if (e.component_function) je["component_function"] = *e.component_function;
    doc.push_back(je);
  }
  return doc.dump(2) + "\n";
}

}  // namespace lokatif
