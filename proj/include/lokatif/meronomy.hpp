#pragma once

// The six part-whole relations: classification ladder, dependence direction
// and directness, composition table, transitive closure with explanations.

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lokatif/errors.hpp"
#include "lokatif/ontology.hpp"

namespace lokatif {

enum class RelationKind {
  MemberCollection,
  SubcollectionCollection,
  PortionWhole,
  SubstanceWhole,
  PieceWhole,
  ComponentWhole,
};

enum class DependenceDirection { PartDependsOnWhole, WholeDependsOnPart };
enum class Directness { Direct, Indirect };

struct PartWholeRelation {
  RelationKind kind = RelationKind::ComponentWhole;
  // Component relations carry exactly one direction and one directness.
  std::optional<DependenceDirection> direction;
  std::optional<Directness> directness;

  static PartWholeRelation simple(RelationKind k) { return {k, {}, {}}; }
  static PartWholeRelation component(DependenceDirection dir, Directness d) {
    return {RelationKind::ComponentWhole, dir, d};
  }

  auto operator<=>(const PartWholeRelation&) const = default;
};

inline const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::MemberCollection: return "MemberCollection";
    case RelationKind::SubcollectionCollection: return "SubcollectionCollection";
    case RelationKind::PortionWhole: return "PortionWhole";
    case RelationKind::SubstanceWhole: return "SubstanceWhole";
    case RelationKind::PieceWhole: return "PieceWhole";
    case RelationKind::ComponentWhole: return "ComponentWhole";
  }
  return "Unknown";
}

inline std::string to_string(const PartWholeRelation& r) {
  std::string s = to_string(r.kind);
  if (r.kind == RelationKind::ComponentWhole) {
    s += "(";
    s += r.direction == DependenceDirection::PartDependsOnWhole
             ? "PartDependsOnWhole"
             : "WholeDependsOnPart";
    s += r.directness == Directness::Direct ? ", Direct" : ", Indirect";
    s += ")";
  }
  return s;
}

namespace detail {

/// Length of the shortest functional-dependence path from `from` to `to`,
/// following edges dependent -> dependee. 0 when unreachable.
inline int functional_distance(const std::string& from, const std::string& to,
                               const KB& kb) {
  std::map<std::string, int> dist{{from, 0}};
  std::deque<std::string> frontier{from};
  while (!frontier.empty()) {
    std::string cur = frontier.front();
    frontier.pop_front();
    if (cur == to) return dist[cur];
    for (const DependenceEdge& e : kb.dependence) {
      if (e.kind != DependenceType::Functional || e.dependent != cur) continue;
      if (dist.emplace(e.dependee, dist[cur] + 1).second)
        frontier.push_back(e.dependee);
    }
  }
  return 0;
}

inline bool functional_dependence_acyclic(const KB& kb) {
  // Kahn over the functional sub-graph.
  std::map<std::string, int> indegree;
  std::multimap<std::string, std::string> out;
  for (const DependenceEdge& e : kb.dependence) {
    if (e.kind != DependenceType::Functional) continue;
    indegree.try_emplace(e.dependent, 0);
    indegree[e.dependee]++;
    out.emplace(e.dependent, e.dependee);
  }
  std::deque<std::string> ready;
  for (const auto& [n, d] : indegree)
    if (d == 0) ready.push_back(n);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::string n = ready.front();
    ready.pop_front();
    ++removed;
    auto [lo, hi] = out.equal_range(n);
    for (auto it = lo; it != hi; ++it)
      if (--indegree[it->second] == 0) ready.push_back(it->second);
  }
  return removed == indegree.size();
}

}  // namespace detail

/// Direction and directness of the functional dependence between part and
/// whole. Direct iff a single declared edge links them.
inline std::pair<DependenceDirection, Directness> dependence_kind(
    const std::string& part, const std::string& whole, const KB& kb) {
  if (int d = detail::functional_distance(part, whole, kb); d > 0)
    return {DependenceDirection::PartDependsOnWhole,
            d == 1 ? Directness::Direct : Directness::Indirect};
  if (int d = detail::functional_distance(whole, part, kb); d > 0)
    return {DependenceDirection::WholeDependsOnPart,
            d == 1 ? Directness::Direct : Directness::Indirect};
  throw Error(ErrorCode::NoDependence,
              "no functional dependence path between " + part + " and " + whole);
}

/// Decision ladder over the stored facts. Structural facts (membership,
/// declared portions, constitution) are tried before graph-derived component
/// facts. Substance-whole is the one relation exempt from strict category
/// homogeneity: it links a Substance view to a Material whole through
/// constitution.
inline PartWholeRelation classify(const std::string& part,
                                  const std::string& whole, const KB& kb) {
  const EntityRecord& p = kb.at(part);
  const EntityRecord& w = kb.at(whole);

  bool part_has_substance_view = false;
  for (const View& v : p.views)
    if (v.category.top == TopCategory::Substance) part_has_substance_view = true;

  auto substance_whole = [&]() -> bool {
    if (!part_has_substance_view) return false;
    if (w.made_of == part) return true;
    // made_of declared on a spatial part of the whole
    for (const auto& [id, e] : kb.entities) {
      if (e.made_of != part || id == whole) continue;
      for (const auto& [t, ext] : e.extent) {
        auto wt = w.extent.find(t);
        if (wt != w.extent.end() && part_of(ext, wt->second)) return true;
      }
    }
    return false;
  };

  if (p.top() != w.top()) {
    if (substance_whole())
      return PartWholeRelation::simple(RelationKind::SubstanceWhole);
    throw Error(ErrorCode::HomogeneityViolation,
                part + " and " + whole + " belong to different top categories");
  }

  if (w.plurality == Plurality::Collection && w.members.count(part) &&
      p.plurality != Plurality::Collection)
    return PartWholeRelation::simple(RelationKind::MemberCollection);

  if (w.plurality == Plurality::Collection &&
      p.plurality == Plurality::Collection &&
      std::includes(w.members.begin(), w.members.end(), p.members.begin(),
                    p.members.end()))
    return PartWholeRelation::simple(RelationKind::SubcollectionCollection);

  for (const PortionFact& f : kb.portion_facts)
    if (f.part == part && f.whole == whole &&
        f.mode == PortionMode::ConventionalPortion)
      return PartWholeRelation::simple(RelationKind::PortionWhole);

  if (substance_whole())
    return PartWholeRelation::simple(RelationKind::SubstanceWhole);

  for (const PortionFact& f : kb.portion_facts)
    if (f.part == part && f.whole == whole &&
        f.mode == PortionMode::ArbitraryPiece)
      return PartWholeRelation::simple(RelationKind::PieceWhole);

  try {
    auto [dir, directness] = dependence_kind(part, whole, kb);
    return PartWholeRelation::component(dir, directness);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoDependence) throw;
  }

  throw Error(ErrorCode::NoRelation,
              "no part-whole relation between " + part + " and " + whole);
}

/// Composition table. r1 relates a to b, r2 relates b to c; the result, when
/// defined, relates a to c. Undefined cells are the intransitivity
/// phenomenon: no standard relation follows.
inline std::optional<PartWholeRelation> compose(const PartWholeRelation& r1,
                                                const PartWholeRelation& r2) {
  using K = RelationKind;
  if (r1.kind == K::MemberCollection && r2.kind == K::SubcollectionCollection)
    return PartWholeRelation::simple(K::MemberCollection);
  if (r1.kind == K::SubcollectionCollection &&
      r2.kind == K::SubcollectionCollection)
    return PartWholeRelation::simple(K::SubcollectionCollection);
  if (r1.kind == K::PieceWhole && r2.kind == K::PieceWhole)
    return PartWholeRelation::simple(K::PieceWhole);
  if (r1.kind == K::SubstanceWhole &&
      (r2.kind == K::PieceWhole || r2.kind == K::PortionWhole ||
       r2.kind == K::ComponentWhole))
    return PartWholeRelation::simple(K::SubstanceWhole);
  if (r1.kind == K::ComponentWhole && r2.kind == K::ComponentWhole &&
      r1.direction == r2.direction)
    return PartWholeRelation::component(*r1.direction, Directness::Indirect);
  return std::nullopt;
}

/// Least fixed point of direct classifications closed under compose.
inline std::set<std::pair<std::string, PartWholeRelation>> transitive_parts(
    const std::string& whole, const KB& kb) {
  kb.at(whole);
  if (!detail::functional_dependence_acyclic(kb))
    throw Error(ErrorCode::CycleDetected,
                "functional dependence graph contains a cycle");

  auto try_classify =
      [&](const std::string& p,
          const std::string& w) -> std::optional<PartWholeRelation> {
    try {
      return classify(p, w, kb);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoRelation ||
          e.code() == ErrorCode::HomogeneityViolation)
        return std::nullopt;
      throw;
    }
  };

  std::set<std::pair<std::string, PartWholeRelation>> result;
  for (const auto& [id, e] : kb.entities)
    if (id != whole)
      if (auto r = try_classify(id, whole)) result.emplace(id, *r);

  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = result;
    for (const auto& [mid, r2] : snapshot) {
      for (const auto& [id, e] : kb.entities) {
        if (id == whole || id == mid) continue;
        auto r1 = try_classify(id, mid);
        if (!r1) continue;
        if (auto composed = compose(*r1, r2))
          if (result.emplace(id, *composed).second) grew = true;
      }
    }
  }
  return result;
}

/// Voxel-level soundness: at every shared time the part's extent lies inside
/// the whole's material extent (for collections, the union of the members'
/// extents).
inline bool spatial_inclusion_holds(const std::string& part,
                                    const std::string& whole, const KB& kb) {
  const EntityRecord& p = kb.at(part);
  const EntityRecord& w = kb.at(whole);

  auto whole_region_at = [&](int t) -> std::optional<Region> {
    if (w.plurality == Plurality::Collection) {
      VoxelSet u;
      for (const std::string& m : w.members) {
        const EntityRecord& me = kb.at(m);
        auto it = me.extent.find(t);
        if (it != me.extent.end())
          u.insert(it->second.voxels().begin(), it->second.voxels().end());
      }
      return Region::from_voxels(std::move(u));
    }
    auto it = w.extent.find(t);
    if (it == w.extent.end()) return std::nullopt;
    return it->second;
  };

  bool shared = false;
  for (const auto& [t, ext] : p.extent) {
    auto wr = whole_region_at(t);
    if (!wr) continue;
    shared = true;
    if (!part_of(ext, *wr)) return false;
  }
  if (!shared)
    throw Error(ErrorCode::MissingExtent,
                part + " and " + whole + " share no time step with extents");
  return true;
}

}  // namespace lokatif
