// Copyright 2026 The hqcnbv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HQCNBV_WORLD_HPP
#define HQCNBV_WORLD_HPP

// 2D exploration world: axis-aligned rectangular obstacles rasterized onto
// a ternary occupancy grid (UNKNOWN / FREE / OCCUPIED), a wedge
// field-of-view sensor, coverage accounting and feature extraction.
//
// Geometry conventions:
//  * the map rectangle is [0, width] x [0, height], x right, y up;
//  * cell (ix, iy) owns the closed square
//    [ix*res, (ix+1)*res] x [iy*res, (iy+1)*res];
//  * a cell is an obstacle cell iff its center lies inside a (closed)
//    obstacle rectangle;
//  * all visibility questions are decided at cell centers: a cell is in
//    the sensing wedge iff its center is within `range` of the viewpoint
//    and the center's bearing is within fov/2 of the view heading. A
//    non-obstacle cell is visible iff no obstacle cell touches the
//    segment from the viewpoint to its center; an obstacle cell is
//    visible iff no other obstacle cell is entered strictly earlier
//    along that segment.
//
// Knowledge is monotone: cells only ever transition UNKNOWN -> FREE or
// UNKNOWN -> OCCUPIED, and the class of a cell never changes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hqcnbv/hamiltonian.hpp"

namespace hqcnbv {

inline double wrap_2pi(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r < 0) r += two_pi;
  return r;
}

// Signed angular difference a - b wrapped to (-pi, pi].
inline double angle_diff(double a, double b) {
  const double d = std::remainder(a - b, 2.0 * std::numbers::pi);
  return d;
}

enum class CellState : std::uint8_t { Unknown = 0, Free = 1, Occupied = 2 };

struct Rect {
  double x = 0, y = 0, w = 0, h = 0;

  bool contains(double px, double py) const {
    return px >= x && px <= x + w && py >= y && py <= y + h;
  }
};

struct CameraModel {
  double fov = 2.0 * std::numbers::pi / 3.0;
  double range = 8.0;
};

struct Viewpoint {
  double x = 0, y = 0, theta = 0;
};

inline double travel_distance(const Viewpoint& a, const Viewpoint& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

struct Scene {
  std::string name;
  double width = 20.0;
  double height = 20.0;
  double resolution = 1.0;
  std::vector<Rect> obstacles;
  Viewpoint start{10.5, 10.5, 0.0};
  CameraModel camera;

  void validate() const {
    if (!(width > 0) || !(height > 0) || !(resolution > 0))
      throw std::invalid_argument("Scene: dimensions and resolution must be positive");
    const double nx = width / resolution;
    const double ny = height / resolution;
    if (std::abs(nx - std::round(nx)) > 1e-9 || std::abs(ny - std::round(ny)) > 1e-9)
      throw std::invalid_argument("Scene: size must be a whole number of cells");
    if (!(camera.fov > 0) || camera.fov > 2.0 * std::numbers::pi + 1e-12)
      throw std::invalid_argument("Scene: camera fov out of (0, 2pi]");
    if (!(camera.range > 0))
      throw std::invalid_argument("Scene: camera range must be positive");
    for (const Rect& r : obstacles)
      if (!(r.w > 0) || !(r.h > 0) || !std::isfinite(r.x) || !std::isfinite(r.y))
        throw std::invalid_argument("Scene: degenerate obstacle rectangle");
    if (start.x < 0 || start.x > width || start.y < 0 || start.y > height)
      throw std::invalid_argument("Scene: start pose out of bounds");
    // Fail fast if the start cell rasterizes onto an obstacle.
    const double cx =
        (std::floor(std::min(start.x / resolution, nx - 1.0)) + 0.5) * resolution;
    const double cy =
        (std::floor(std::min(start.y / resolution, ny - 1.0)) + 0.5) * resolution;
    for (const Rect& r : obstacles)
      if (r.contains(cx, cy))
        throw std::invalid_argument("Scene: start pose inside an obstacle");
  }
};

class GridMap {
 public:
  explicit GridMap(Scene scene) : scene_(std::move(scene)) {
    scene_.validate();
    nx_ = static_cast<int>(std::llround(scene_.width / scene_.resolution));
    ny_ = static_cast<int>(std::llround(scene_.height / scene_.resolution));
    cells_.assign(static_cast<std::size_t>(nx_) * ny_, CellState::Unknown);
    obstacle_.assign(cells_.size(), 0);
    for (int iy = 0; iy < ny_; ++iy)
      for (int ix = 0; ix < nx_; ++ix) {
        const auto [cx, cy] = cell_center(ix, iy);
        for (const Rect& r : scene_.obstacles)
          if (r.contains(cx, cy)) {
            obstacle_[index(ix, iy)] = 1;
            break;
          }
      }
  }

  const Scene& scene() const { return scene_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::size_t total_cells() const { return cells_.size(); }
  int known_cells() const { return known_; }

  bool in_bounds(int ix, int iy) const {
    return ix >= 0 && ix < nx_ && iy >= 0 && iy < ny_;
  }

  bool position_in_bounds(double x, double y) const {
    return x >= 0 && x <= scene_.width && y >= 0 && y <= scene_.height;
  }

  CellState at(int ix, int iy) const {
    check(ix, iy);
    return cells_[index(ix, iy)];
  }

  bool is_obstacle_cell(int ix, int iy) const {
    check(ix, iy);
    return obstacle_[index(ix, iy)] != 0;
  }

  std::pair<double, double> cell_center(int ix, int iy) const {
    return {(ix + 0.5) * scene_.resolution, (iy + 0.5) * scene_.resolution};
  }

  // Containing cell of a position; boundary coordinates clamp inward so
  // every point of the closed map rectangle maps to a valid cell.
  std::pair<int, int> cell_of(double x, double y) const {
    int ix = static_cast<int>(std::floor(x / scene_.resolution));
    int iy = static_cast<int>(std::floor(y / scene_.resolution));
    ix = std::clamp(ix, 0, nx_ - 1);
    iy = std::clamp(iy, 0, ny_ - 1);
    return {ix, iy};
  }

  double coverage() const {
    return static_cast<double>(known_) / static_cast<double>(cells_.size());
  }

  // Marks a cell as known, deriving Free/Occupied from the scene geometry.
  // Planners call this for the cell the robot currently stands on, which is
  // observed by occupancy rather than by the camera. Returns the number of
  // newly known cells (0 or 1).
  int reveal(int ix, int iy) {
    check(ix, iy);
    int newly = 0;
    mark(ix, iy, obstacle_[index(ix, iy)] ? CellState::Occupied : CellState::Free,
         newly);
    return newly;
  }

 private:
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * nx_ + ix;
  }

  void check(int ix, int iy) const {
    if (!in_bounds(ix, iy)) throw std::out_of_range("GridMap: cell index out of range");
  }

  // Knowledge monotonicity is enforced here: the only legal transition is
  // Unknown -> (Free | Occupied), and the value must agree with the
  // rasterized obstacle set.
  void mark(int ix, int iy, CellState s, int& newly) {
    const std::size_t i = index(ix, iy);
    if ((s == CellState::Occupied) != (obstacle_[i] != 0))
      throw std::logic_error("GridMap: observation disagrees with geometry");
    if (cells_[i] == CellState::Unknown) {
      cells_[i] = s;
      ++known_;
      ++newly;
    }
  }

  Scene scene_;
  int nx_ = 0, ny_ = 0;
  int known_ = 0;
  std::vector<CellState> cells_;
  std::vector<std::uint8_t> obstacle_;

  friend int update_observation(GridMap&, const Viewpoint&);
};

inline double coverage(const GridMap& map) { return map.coverage(); }

namespace detail {

// Closed-interval slab clip of segment p0 + t*(p1-p0), t in [0,1], against
// a cell's closed square. Returns the entry parameter when the segment
// touches the square (boundary contact counts).
inline std::optional<double> segment_cell_entry(double x0, double y0, double x1,
                                                double y1, double lox, double loy,
                                                double hix, double hiy) {
  double tmin = 0.0, tmax = 1.0;
  const double d[2] = {x1 - x0, y1 - y0};
  const double p[2] = {x0, y0};
  const double lo[2] = {lox, loy};
  const double hi[2] = {hix, hiy};
  for (int axis = 0; axis < 2; ++axis) {
    if (d[axis] == 0.0) {
      if (p[axis] < lo[axis] || p[axis] > hi[axis]) return std::nullopt;
      continue;
    }
    double t0 = (lo[axis] - p[axis]) / d[axis];
    double t1 = (hi[axis] - p[axis]) / d[axis];
    if (t0 > t1) std::swap(t0, t1);
    tmin = std::max(tmin, t0);
    tmax = std::min(tmax, t1);
    if (tmin > tmax) return std::nullopt;
  }
  return tmin;
}

struct CellBox {
  int ix0, iy0, ix1, iy1;
};

inline CellBox segment_cell_box(const GridMap& m, double x0, double y0, double x1,
                                double y1) {
  const double res = m.scene().resolution;
  const auto lo_of = [&](double a, int n) {
    return std::clamp(static_cast<int>(std::floor(a / res)), 0, n - 1);
  };
  const auto hi_of = [&](double a, int n) {
    // Points exactly on a gridline belong to both neighboring closed
    // squares, so the upper index rounds outward.
    return std::clamp(static_cast<int>(std::floor(a / res)) + 1, 0, n - 1);
  };
  CellBox b{};
  b.ix0 = lo_of(std::min(x0, x1), m.nx());
  b.iy0 = lo_of(std::min(y0, y1), m.ny());
  b.ix1 = hi_of(std::max(x0, x1), m.nx());
  b.iy1 = hi_of(std::max(y0, y1), m.ny());
  return b;
}

// Entry parameter of the first obstacle cell along the segment, ignoring
// the cell (skip_ix, skip_iy). Returns +inf when the segment is clear.
inline double first_obstacle_entry(const GridMap& m, double x0, double y0, double x1,
                                   double y1, int skip_ix, int skip_iy) {
  const double res = m.scene().resolution;
  const CellBox b = segment_cell_box(m, x0, y0, x1, y1);
  double best = std::numeric_limits<double>::infinity();
  for (int iy = b.iy0; iy <= b.iy1; ++iy)
    for (int ix = b.ix0; ix <= b.ix1; ++ix) {
      if (ix == skip_ix && iy == skip_iy) continue;
      if (!m.is_obstacle_cell(ix, iy)) continue;
      const auto t = segment_cell_entry(x0, y0, x1, y1, ix * res, iy * res,
                                        (ix + 1) * res, (iy + 1) * res);
      if (t && *t < best) best = *t;
    }
  return best;
}

// Same sweep against *known* occupied cells; used for planning-time
// visibility where only mapped obstacles can occlude.
inline bool blocked_by_known(const GridMap& m, double x0, double y0, double x1,
                             double y1, int skip_ix, int skip_iy) {
  const double res = m.scene().resolution;
  const CellBox b = segment_cell_box(m, x0, y0, x1, y1);
  for (int iy = b.iy0; iy <= b.iy1; ++iy)
    for (int ix = b.ix0; ix <= b.ix1; ++ix) {
      if (ix == skip_ix && iy == skip_iy) continue;
      if (m.at(ix, iy) != CellState::Occupied) continue;
      if (segment_cell_entry(x0, y0, x1, y1, ix * res, iy * res, (ix + 1) * res,
                             (iy + 1) * res))
        return true;
    }
  return false;
}

inline bool in_wedge(const Viewpoint& v, const CameraModel& cam, double cx,
                     double cy) {
  const double dx = cx - v.x, dy = cy - v.y;
  const double r = std::hypot(dx, dy);
  if (r > cam.range) return false;
  const double bearing = std::atan2(dy, dx);
  return std::abs(angle_diff(bearing, v.theta)) <= cam.fov / 2.0;
}

}  // namespace detail

// Marks every cell visible from `v` and returns how many were previously
// unknown. Throws if the viewpoint is out of bounds or its cell is an
// obstacle cell.
inline int update_observation(GridMap& map, const Viewpoint& v) {
  if (!map.position_in_bounds(v.x, v.y))
    throw std::invalid_argument("update_observation: viewpoint out of bounds");
  const auto [vix, viy] = map.cell_of(v.x, v.y);
  if (map.is_obstacle_cell(vix, viy))
    throw std::invalid_argument("update_observation: viewpoint inside an obstacle");

  const CameraModel& cam = map.scene().camera;
  const double res = map.scene().resolution;
  const int ix0 = std::max(0, static_cast<int>(std::floor((v.x - cam.range) / res)));
  const int ix1 =
      std::min(map.nx() - 1, static_cast<int>(std::floor((v.x + cam.range) / res)) + 1);
  const int iy0 = std::max(0, static_cast<int>(std::floor((v.y - cam.range) / res)));
  const int iy1 =
      std::min(map.ny() - 1, static_cast<int>(std::floor((v.y + cam.range) / res)) + 1);

  int newly = 0;
  for (int iy = iy0; iy <= iy1; ++iy)
    for (int ix = ix0; ix <= ix1; ++ix) {
      const auto [cx, cy] = map.cell_center(ix, iy);
      if (!detail::in_wedge(v, cam, cx, cy)) continue;
      const double block = detail::first_obstacle_entry(map, v.x, v.y, cx, cy, ix, iy);
      if (map.is_obstacle_cell(ix, iy)) {
        // The face of an obstacle is visible unless some other obstacle
        // cell is entered strictly first.
        const double self =
            detail::segment_cell_entry(v.x, v.y, cx, cy, ix * res, iy * res,
                                       (ix + 1) * res, (iy + 1) * res)
                .value_or(0.0);
        if (block < self) continue;
        map.mark(ix, iy, CellState::Occupied, newly);
      } else {
        if (block < std::numeric_limits<double>::infinity()) continue;
        map.mark(ix, iy, CellState::Free, newly);
      }
    }
  return newly;
}

// True iff every cell whose closed square the segment touches is known
// FREE. Unknown cells fail the test, so planned motion stays in mapped
// space.
inline bool is_path_free(const GridMap& map, const Viewpoint& from,
                         const Viewpoint& to) {
  if (!map.position_in_bounds(from.x, from.y) || !map.position_in_bounds(to.x, to.y))
    return false;
  const double res = map.scene().resolution;
  const detail::CellBox b = detail::segment_cell_box(map, from.x, from.y, to.x, to.y);
  for (int iy = b.iy0; iy <= b.iy1; ++iy)
    for (int ix = b.ix0; ix <= b.ix1; ++ix) {
      if (!detail::segment_cell_entry(from.x, from.y, to.x, to.y, ix * res, iy * res,
                                      (ix + 1) * res, (iy + 1) * res))
        continue;
      if (map.at(ix, iy) != CellState::Free) return false;
    }
  return true;
}

// Number of unknown cells the sensor would newly mark from `v`, using only
// already-known obstacles for occlusion. This is the planning-time
// information gain; it never mutates the map.
inline int predicted_unknown_visible(const GridMap& map, const Viewpoint& v) {
  const CameraModel& cam = map.scene().camera;
  const double res = map.scene().resolution;
  const int ix0 = std::max(0, static_cast<int>(std::floor((v.x - cam.range) / res)));
  const int ix1 =
      std::min(map.nx() - 1, static_cast<int>(std::floor((v.x + cam.range) / res)) + 1);
  const int iy0 = std::max(0, static_cast<int>(std::floor((v.y - cam.range) / res)));
  const int iy1 =
      std::min(map.ny() - 1, static_cast<int>(std::floor((v.y + cam.range) / res)) + 1);
  int count = 0;
  for (int iy = iy0; iy <= iy1; ++iy)
    for (int ix = ix0; ix <= ix1; ++ix) {
      if (map.at(ix, iy) != CellState::Unknown) continue;
      const auto [cx, cy] = map.cell_center(ix, iy);
      if (!detail::in_wedge(v, cam, cx, cy)) continue;
      if (detail::blocked_by_known(map, v.x, v.y, cx, cy, ix, iy)) continue;
      ++count;
    }
  return count;
}

// Cells whose center is within `radius` of (x, y); the exploration-term
// denominator.
inline int cells_in_disc(const GridMap& map, double x, double y, double radius) {
  const double res = map.scene().resolution;
  const int ix0 = std::max(0, static_cast<int>(std::floor((x - radius) / res)));
  const int ix1 =
      std::min(map.nx() - 1, static_cast<int>(std::floor((x + radius) / res)) + 1);
  const int iy0 = std::max(0, static_cast<int>(std::floor((y - radius) / res)));
  const int iy1 =
      std::min(map.ny() - 1, static_cast<int>(std::floor((y + radius) / res)) + 1);
  int count = 0;
  for (int iy = iy0; iy <= iy1; ++iy)
    for (int ix = ix0; ix <= ix1; ++ix) {
      const auto [cx, cy] = map.cell_center(ix, iy);
      if (std::hypot(cx - x, cy - y) <= radius) ++count;
    }
  return count;
}

// Distance from (x, y) to the nearest *known* occupied cell center,
// capped at the camera range. An empty obstacle map reports the cap.
inline double distance_to_known_obstacle(const GridMap& map, double x, double y) {
  const double cap = map.scene().camera.range;
  double best = cap;
  for (int iy = 0; iy < map.ny(); ++iy)
    for (int ix = 0; ix < map.nx(); ++ix) {
      if (map.at(ix, iy) != CellState::Occupied) continue;
      const auto [cx, cy] = map.cell_center(ix, iy);
      best = std::min(best, std::hypot(cx - x, cy - y));
    }
  return best;
}

// Circular mean of bearings from (x, y) to unknown cells within `radius`;
// nullopt when no unknown cell is in range.
inline std::optional<double> unknown_mass_direction(const GridMap& map, double x,
                                                    double y, double radius) {
  double sx = 0.0, sy = 0.0;
  bool any = false;
  const double res = map.scene().resolution;
  const int ix0 = std::max(0, static_cast<int>(std::floor((x - radius) / res)));
  const int ix1 =
      std::min(map.nx() - 1, static_cast<int>(std::floor((x + radius) / res)) + 1);
  const int iy0 = std::max(0, static_cast<int>(std::floor((y - radius) / res)));
  const int iy1 =
      std::min(map.ny() - 1, static_cast<int>(std::floor((y + radius) / res)) + 1);
  for (int iy = iy0; iy <= iy1; ++iy)
    for (int ix = ix0; ix <= ix1; ++ix) {
      if (map.at(ix, iy) != CellState::Unknown) continue;
      const auto [cx, cy] = map.cell_center(ix, iy);
      const double dx = cx - x, dy = cy - y;
      if (std::hypot(dx, dy) > radius) continue;
      const double b = std::atan2(dy, dx);
      sx += std::cos(b);
      sy += std::sin(b);
      any = true;
    }
  if (!any) return std::nullopt;
  return wrap_2pi(std::atan2(sy, sx));
}

// Scalar features feeding the Hamiltonian builders. The density uses the
// sensing disc; the directional statistics prefer unknown cells inside the
// sensing disc, the cells the very next view can still reach, and widen to
// radius 2*range only when the disc is exhausted, to pull the planner
// toward distant frontiers.
inline ExplorationFeatures extract_features(const GridMap& map, const Viewpoint& v) {
  const CameraModel& cam = map.scene().camera;
  ExplorationFeatures f;
  f.d_max = cam.range;
  f.coverage = map.coverage();

  const double r2 = 2.0 * cam.range;
  std::array<int, kNumBearings> sector_unknown{};
  std::array<int, kNumBearings> sector_total{};
  double far_x = 0.0, far_y = 0.0;
  double near_x = 0.0, near_y = 0.0;
  int unknown_far = 0;
  int unknown_near = 0, near_total = 0;
  double d_obs = cam.range;

  for (int iy = 0; iy < map.ny(); ++iy)
    for (int ix = 0; ix < map.nx(); ++ix) {
      const auto [cx, cy] = map.cell_center(ix, iy);
      const double dx = cx - v.x, dy = cy - v.y;
      const double r = std::hypot(dx, dy);
      const CellState s = map.at(ix, iy);
      if (s == CellState::Occupied) d_obs = std::min(d_obs, r);
      if (r <= cam.range) ++near_total;
      if (r > r2) continue;
      const double bearing = std::atan2(dy, dx);
      const int sector = static_cast<int>(bearing_of_angle(bearing));
      ++sector_total[static_cast<std::size_t>(sector)];
      if (s == CellState::Unknown) {
        ++sector_unknown[static_cast<std::size_t>(sector)];
        far_x += std::cos(bearing);
        far_y += std::sin(bearing);
        ++unknown_far;
        if (r <= cam.range) {
          ++unknown_near;
          near_x += std::cos(bearing);
          near_y += std::sin(bearing);
        }
      }
    }

  // While the sensing disc still holds unknown cells, each sector's entry
  // is its unknown fraction out to 2*range: local contrasts are sharp when
  // one side of the viewpoint is explored and the other is not. Once the
  // neighborhood is exhausted those ratios dilute toward zero everywhere,
  // so the entries switch to each sector's share of the remaining unknown
  // mass: the shares sum to one and concentrate on whichever direction
  // still hides cells, however far away they are.
  if (unknown_near > 0) {
    for (int b = 0; b < kNumBearings; ++b) {
      const auto sb = static_cast<std::size_t>(b);
      f.unexplored[sb] =
          sector_total[sb] > 0
              ? static_cast<double>(sector_unknown[sb]) / sector_total[sb]
              : 0.0;
    }
  } else {
    for (int b = 0; b < kNumBearings; ++b) {
      const auto sb = static_cast<std::size_t>(b);
      f.unexplored[sb] =
          unknown_far > 0
              ? static_cast<double>(sector_unknown[sb]) / unknown_far
              : 0.0;
    }
  }
  f.d_obs = d_obs;
  f.point_density =
      near_total > 0 ? static_cast<double>(unknown_near) / near_total : 0.0;
  const double rx = unknown_near > 0 ? near_x : far_x;
  const double ry = unknown_near > 0 ? near_y : far_y;
  const int rn = unknown_near > 0 ? unknown_near : unknown_far;
  if (rn > 0) {
    const double resultant = std::hypot(rx, ry) / rn;
    f.dispersion = std::clamp(1.0 - resultant, 0.0, 1.0);
    f.target_angle = wrap_2pi(std::atan2(ry, rx));
  } else {
    f.dispersion = 0.0;
    f.target_angle = 0.0;
  }
  return f;
}

// --- built-in scenes ------------------------------------------------------

inline std::vector<std::string> list_builtin_scenes() {
  return {"S1", "S2", "S3", "S4"};
}

// Four reference layouts. Perimeter scenes place 2x6 blocks centered on
// each edge midpoint, inset 2 units from the wall.
inline Scene builtin_scene(std::string_view name) {
  Scene s;
  s.name = std::string(name);
  const std::vector<Rect> perimeter20 = {
      {7, 1, 6, 2}, {7, 17, 6, 2}, {1, 7, 2, 6}, {17, 7, 2, 6}};
  if (name == "S1") {
    s.obstacles = perimeter20;
    s.start = {10.5, 10.5, 0.0};
  } else if (name == "S2") {
    s.obstacles = {{7, 7, 6, 6}};
    s.start = {4.5, 10.5, 0.0};
  } else if (name == "S3") {
    s.obstacles = perimeter20;
    s.obstacles.push_back({6, 4, 1, 8});
    s.obstacles.push_back({6, 12, 8, 1});
    s.start = {10.5, 7.5, 0.0};
  } else if (name == "S4") {
    s.width = 40.0;
    s.height = 40.0;
    s.obstacles = {
        {17, 1, 6, 2}, {17, 37, 6, 2}, {1, 17, 2, 6}, {37, 17, 2, 6},
        {16, 16, 8, 8}};
    s.start = {8.5, 8.5, 0.0};
  } else {
    throw std::invalid_argument("builtin_scene: unknown scene '" +
                                std::string(name) + "'");
  }
  s.validate();
  return s;
}

}  // namespace hqcnbv

#endif  // HQCNBV_WORLD_HPP
