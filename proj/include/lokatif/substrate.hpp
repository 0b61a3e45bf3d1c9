#pragma once

// Finite-model mereotopology over discrete voxel regions. Parthood is set
// inclusion, contact is 6-adjacency (face contact only), dilation is
// Chebyshev. All operations are pure functions on immutable values.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

#include "lokatif/errors.hpp"

namespace lokatif {

struct Voxel {
  int x = 0;
  int y = 0;
  int z = 0;

  auto operator<=>(const Voxel&) const = default;
};

inline Voxel operator+(Voxel a, Voxel b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Voxel operator-(Voxel a, Voxel b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

using VoxelSet = std::set<Voxel>;

/// Non-empty finite set of voxels; the spatio-temporal footprint of every
/// concrete entity.
class Region {
 public:
  explicit Region(VoxelSet voxels) : voxels_(std::move(voxels)) {
    if (voxels_.empty())
      throw std::invalid_argument("Region must be non-empty");
  }

  Region(std::initializer_list<Voxel> vs) : Region(VoxelSet(vs)) {}

  static std::optional<Region> from_voxels(VoxelSet voxels) {
    if (voxels.empty()) return std::nullopt;
    return Region(std::move(voxels));
  }

  /// Axis-aligned box, inclusive bounds.
  static Region box(Voxel lo, Voxel hi) {
    VoxelSet vs;
    for (int x = lo.x; x <= hi.x; ++x)
      for (int y = lo.y; y <= hi.y; ++y)
        for (int z = lo.z; z <= hi.z; ++z) vs.insert({x, y, z});
    return Region(std::move(vs));
  }

  const VoxelSet& voxels() const noexcept { return voxels_; }
  std::size_t size() const noexcept { return voxels_.size(); }
  bool contains(Voxel v) const { return voxels_.count(v) != 0; }

  /// Lexicographically minimal voxel; used as the fixity reference point.
  Voxel refpoint() const { return *voxels_.begin(); }

  Region translated(Voxel d) const {
    VoxelSet vs;
    for (Voxel v : voxels_) vs.insert(v + d);
    return Region(std::move(vs));
  }

  bool operator==(const Region&) const = default;

 private:
  VoxelSet voxels_;
};

inline constexpr std::array<Voxel, 6> kFaceNeighbors = {
    Voxel{1, 0, 0}, Voxel{-1, 0, 0}, Voxel{0, 1, 0},
    Voxel{0, -1, 0}, Voxel{0, 0, 1}, Voxel{0, 0, -1}};

/// Spatio-temporal inclusion: every voxel of `a` is a voxel of `b`.
inline bool part_of(const Region& a, const Region& b) {
  return std::includes(b.voxels().begin(), b.voxels().end(),
                       a.voxels().begin(), a.voxels().end());
}

inline bool overlaps(const Region& a, const Region& b) {
  const Region& small = a.size() <= b.size() ? a : b;
  const Region& large = a.size() <= b.size() ? b : a;
  for (Voxel v : small.voxels())
    if (large.contains(v)) return true;
  return false;
}

/// Contact: shared voxel or face-adjacent voxels.
inline bool connected(const Region& a, const Region& b) {
  const Region& small = a.size() <= b.size() ? a : b;
  const Region& large = a.size() <= b.size() ? b : a;
  for (Voxel v : small.voxels()) {
    if (large.contains(v)) return true;
    for (Voxel d : kFaceNeighbors)
      if (large.contains(v + d)) return true;
  }
  return false;
}

inline bool externally_connected(const Region& a, const Region& b) {
  return connected(a, b) && !overlaps(a, b);
}

/// One piece: the face-adjacency graph on the region's voxels has a single
/// connected component.
inline bool self_connected(const Region& a) {
  VoxelSet seen;
  std::queue<Voxel> frontier;
  frontier.push(*a.voxels().begin());
  seen.insert(*a.voxels().begin());
  while (!frontier.empty()) {
    Voxel v = frontier.front();
    frontier.pop();
    for (Voxel d : kFaceNeighbors) {
      Voxel n = v + d;
      if (a.contains(n) && seen.insert(n).second) frontier.push(n);
    }
  }
  return seen.size() == a.size();
}

/// All voxels within Chebyshev distance <= r of the region.
inline Region dilate(const Region& a, int r) {
  if (r < 0) throw std::invalid_argument("dilate: negative radius");
  if (r == 0) return a;
  VoxelSet vs;
  for (Voxel v : a.voxels())
    for (int dx = -r; dx <= r; ++dx)
      for (int dy = -r; dy <= r; ++dy)
        for (int dz = -r; dz <= r; ++dz)
          vs.insert({v.x + dx, v.y + dy, v.z + dz});
  return Region(std::move(vs));
}

inline VoxelSet set_minus(const VoxelSet& a, const VoxelSet& b) {
  VoxelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.begin()));
  return out;
}

inline VoxelSet set_union(const VoxelSet& a, const VoxelSet& b) {
  VoxelSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace lokatif
