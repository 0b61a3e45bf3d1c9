#pragma once

// Entity layer: fundamental categories, the (fix, esp, spc) feature system,
// frames of reference, functional dependence, frontal orientation.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lokatif/errors.hpp"
#include "lokatif/substrate.hpp"

namespace lokatif {

enum class TopCategory { Material, Eventuality, Substance, SpacePortion };
enum class MaterialSub { Object, MatterPortion, Place, Mixed };
enum class RouteSub { Conduit, Path };
enum class Plurality { Singular, Plural, Collection };

struct Category {
  TopCategory top = TopCategory::Material;
  std::optional<MaterialSub> material_sub;
  std::optional<RouteSub> route_sub;

  bool operator==(const Category&) const = default;
};

/// fix: stable in a frame of reference; esp: determines a portion of space;
/// spc: position given or presupposed. spc is never stored meaningfully in
/// the lexicon, it is computed per phrase from definiteness.
struct FeatureSet {
  bool fix = false;
  bool esp = false;
  bool spc = false;

  bool operator==(const FeatureSet&) const = default;
};

struct View {
  Category category;
  FeatureSet features;

  bool operator==(const View&) const = default;
};

/// Checks the category-level constraints a stored view must satisfy.
/// Returns an explanation of the violation, or nullopt when valid.
inline std::optional<std::string> view_violation(const View& v) {
  const Category& c = v.category;
  if (c.material_sub.has_value() != (c.top == TopCategory::Material))
    return "material_sub present iff top is Material";
  if (c.route_sub == RouteSub::Conduit && c.material_sub != MaterialSub::Object)
    return "Conduit requires an Object view";
  if (c.route_sub == RouteSub::Path && c.material_sub != MaterialSub::Place)
    return "Path requires a Place view";
  if (c.material_sub == MaterialSub::Place && !(v.features.fix && v.features.esp))
    return "Place views must be +fix +esp";
  if (c.material_sub == MaterialSub::Mixed && !(v.features.fix && v.features.esp))
    return "Mixed views must be +fix +esp";
  if (c.material_sub == MaterialSub::Object && v.features.fix && v.features.esp)
    return "Object views cannot be both +fix and +esp";
  return std::nullopt;
}

enum class Axis { X, Y, Z };

struct AxisDir {
  Axis axis = Axis::X;
  int sign = 1;  // +1 or -1

  bool operator==(const AxisDir&) const = default;
};

inline int coord(Voxel v, Axis a) {
  switch (a) {
    case Axis::X: return v.x;
    case Axis::Y: return v.y;
    case Axis::Z: return v.z;
  }
  return 0;
}

struct OrientationAttrs {
  std::optional<AxisDir> motion_front;
  std::optional<AxisDir> function_front;
  std::optional<Axis> elongation_axis;
  std::optional<AxisDir> aerodynamic_front;
};

enum class Genericity { Generic, Individual };
enum class DependenceType { Functional, Constitution, Participation, Quantity };

struct DependenceEdge {
  std::string dependent;
  std::string dependee;
  Genericity genericity = Genericity::Generic;
  DependenceType kind = DependenceType::Functional;
};

enum class PortionMode { ConventionalPortion, ArbitraryPiece };

struct PortionFact {
  std::string part;
  std::string whole;
  PortionMode mode = PortionMode::ConventionalPortion;
};

struct Period {
  int t0 = 0;
  int t1 = 0;
};

/// A scene/KB individual: one or more category views, an extent trajectory,
/// collection membership, constitution, orientation attributes.
struct EntityRecord {
  std::string id;
  std::string lemma;
  std::vector<View> views;
  Plurality plurality = Plurality::Singular;
  std::map<int, Region> extent;
  std::set<std::string> members;       // only when plurality == Collection
  std::optional<std::string> made_of;  // substance entity id
  OrientationAttrs orientation;

  TopCategory top() const { return views.front().category.top; }

  const Region& extent_at(int t) const {
    auto it = extent.find(t);
    if (it == extent.end())
      throw Error(ErrorCode::MissingExtent,
                  id + " has no extent at t=" + std::to_string(t));
    return it->second;
  }
};

/// Fact store read by every query: scene entities plus dependence and
/// portion facts.
struct KB {
  std::map<std::string, EntityRecord> entities;
  std::vector<DependenceEdge> dependence;
  std::vector<PortionFact> portion_facts;

  const EntityRecord& at(const std::string& id) const {
    auto it = entities.find(id);
    if (it == entities.end())
      throw Error(ErrorCode::UnknownEntity, id);
    return it->second;
  }

  bool has(const std::string& id) const { return entities.count(id) != 0; }

  /// First entity (in id order) carrying the given lemma.
  std::optional<std::string> find_by_lemma(const std::string& lemma) const {
    for (const auto& [id, e] : entities)
      if (e.lemma == lemma) return id;
    return std::nullopt;
  }
};

struct GeometryConfig {
  int column_height = 5;   // ground-place space portions reach up to z = H
  int dilation_radius = 2; // neighborhood radius for non-ground portions
};

// ---------------------------------------------------------------------------
// Fixity and frames

/// Relative fixity of `e` w.r.t. `anchor` over `period`: e's extent, after
/// removing the anchor's own displacement, must be constant. The reference
/// point of an extent is its lexicographically minimal voxel.
inline bool is_fixed(const std::string& e, const std::string& anchor,
                     Period period, const KB& kb) {
  const EntityRecord& re = kb.at(e);
  const EntityRecord& ra = kb.at(anchor);
  const Region& e0 = re.extent_at(period.t0);
  Voxel a0 = ra.extent_at(period.t0).refpoint();
  for (int t = period.t0 + 1; t <= period.t1; ++t) {
    Voxel drift = ra.extent_at(t).refpoint() - a0;
    if (re.extent_at(t).translated(Voxel{} - drift) != e0) return false;
  }
  return true;
}

namespace detail {

/// Union of the extents, at time t, of all Material-viewed entities.
inline VoxelSet material_voxels(const KB& kb, int t,
                                const std::string& exclude = {}) {
  VoxelSet out;
  for (const auto& [id, e] : kb.entities) {
    if (e.top() != TopCategory::Material || id == exclude) continue;
    auto it = e.extent.find(t);
    if (it == e.extent.end()) continue;
    out.insert(it->second.voxels().begin(), it->second.voxels().end());
  }
  return out;
}

inline bool touches_ground(const Region& r) {
  for (Voxel v : r.voxels())
    if (v.z == 0) return true;
  return false;
}

}  // namespace detail

/// The immaterial region an entity determines, at time t. Geographic places
/// resting on the ground plane project a column of empty space above their
/// footprint; other esp-bearing entities determine a dilated neighborhood.
/// The result is always disjoint from every material extent. A target being
/// located inside the portion may be named in `exclude`: it is then treated
/// as immaterial (it occupies the portion instead of bounding it).
inline std::optional<Region> space_portion_of(const std::string& e, const KB& kb,
                                              int t,
                                              const GeometryConfig& cfg = {},
                                              const std::string& exclude = {}) {
  const EntityRecord& rec = kb.at(e);
  const View* view = nullptr;
  for (const View& v : rec.views)
    if (v.features.esp) { view = &v; break; }
  if (!view) return std::nullopt;

  const Region& ext = rec.extent_at(t);
  VoxelSet material = detail::material_voxels(kb, t, exclude);

  VoxelSet out;
  bool geographic = view->category.material_sub == MaterialSub::Place &&
                    detail::touches_ground(ext);
  if (geographic) {
    std::set<std::pair<int, int>> footprint;
    for (Voxel v : ext.voxels()) footprint.insert({v.x, v.y});
    for (auto [x, y] : footprint)
      for (int z = 0; z <= cfg.column_height; ++z) out.insert({x, y, z});
  } else {
    out = dilate(ext, cfg.dilation_radius).voxels();
  }
  return Region::from_voxels(set_minus(out, material));
}

/// A frame of reference: entities mutually stable w.r.t. an anchor, each
/// determining a space portion.
struct Frame {
  std::string anchor;
  Period period;
  std::set<std::string> places;
};

/// places = anchor plus every entity fixed w.r.t. the anchor over the period
/// that determines a space portion. The anchor is always included, so frames
/// can be anchored at a whole object whose stable parts become places.
inline Frame build_frame(const std::string& anchor, Period period, const KB& kb,
                         const GeometryConfig& cfg = {}) {
  const EntityRecord& ra = kb.at(anchor);
  for (int t = period.t0; t <= period.t1; ++t) ra.extent_at(t);  // MissingExtent

  Frame frame{anchor, period, {anchor}};
  for (const auto& [id, e] : kb.entities) {
    if (id == anchor) continue;
    try {
      if (is_fixed(id, anchor, period, kb) &&
          space_portion_of(id, kb, period.t0, cfg).has_value())
        frame.places.insert(id);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::MissingExtent) throw;
    }
  }
  return frame;
}

// ---------------------------------------------------------------------------
// Feature computation

enum class Definiteness { Proper, Definite, Indefinite };

/// fix and esp come from the view; spc is true exactly for proper names and
/// definite descriptions. Definiteness never repairs a missing fix or esp.
inline FeatureSet effective_features(const View& view, Definiteness def) {
  return {view.features.fix, view.features.esp,
          def == Definiteness::Proper || def == Definiteness::Definite};
}

// ---------------------------------------------------------------------------
// Frontal orientation

struct FrontalOrientation {
  AxisDir direction;
  bool intrinsic = false;  // motion/function factors are intrinsic,
                           // saliency/aerodynamics are contextual
};

/// Precedence: motion function, then function independent of motion, then
/// geometric saliency (elongation, directed by aerodynamics when present),
/// then aerodynamics alone. Only intrinsic winners are classification
/// relevant.
inline std::optional<FrontalOrientation> assign_frontal_orientation(
    const EntityRecord& e) {
  const OrientationAttrs& o = e.orientation;
  if (o.motion_front) return FrontalOrientation{*o.motion_front, true};
  if (o.function_front) return FrontalOrientation{*o.function_front, true};
  if (o.elongation_axis) {
    int sign = 1;
    if (o.aerodynamic_front && o.aerodynamic_front->axis == *o.elongation_axis)
      sign = o.aerodynamic_front->sign;
    return FrontalOrientation{AxisDir{*o.elongation_axis, sign}, false};
  }
  if (o.aerodynamic_front) return FrontalOrientation{*o.aerodynamic_front, false};
  return std::nullopt;
}

}  // namespace lokatif
