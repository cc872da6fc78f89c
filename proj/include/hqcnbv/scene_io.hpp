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

#ifndef HQCNBV_SCENE_IO_HPP
#define HQCNBV_SCENE_IO_HPP

// JSON (de)serialization for Scene. The normative keys are name, width,
// height, resolution, obstacles [{x, y, w, h}], start {x, y, theta} and
// camera {fov, range}; missing resolution/camera fields fall back to the
// defaults so data files stay terse.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "hqcnbv/world.hpp"

namespace hqcnbv {

inline nlohmann::json scene_to_json(const Scene& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["width"] = s.width;
  j["height"] = s.height;
  j["resolution"] = s.resolution;
  j["obstacles"] = nlohmann::json::array();
  for (const Rect& r : s.obstacles)
    j["obstacles"].push_back({{"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}});
  j["start"] = {{"x", s.start.x}, {"y", s.start.y}, {"theta", s.start.theta}};
  j["camera"] = {{"fov", s.camera.fov}, {"range", s.camera.range}};
  return j;
}

inline Scene scene_from_json(const nlohmann::json& j) {
  Scene s;
  try {
    s.name = j.at("name").get<std::string>();
    s.width = j.at("width").get<double>();
    s.height = j.at("height").get<double>();
    s.resolution = j.value("resolution", 1.0);
    if (j.contains("obstacles"))
      for (const auto& o : j.at("obstacles"))
        s.obstacles.push_back({o.at("x").get<double>(), o.at("y").get<double>(),
                               o.at("w").get<double>(), o.at("h").get<double>()});
    const auto& st = j.at("start");
    s.start = {st.at("x").get<double>(), st.at("y").get<double>(),
               st.value("theta", 0.0)};
    if (j.contains("camera")) {
      s.camera.fov = j.at("camera").value("fov", s.camera.fov);
      s.camera.range = j.at("camera").value("range", s.camera.range);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("scene_from_json: malformed scene: ") +
                             e.what());
  }
  s.validate();
  return s;
}

inline Scene load_scene_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("load_scene: invalid JSON: ") + e.what());
  }
  return scene_from_json(j);
}

// Loads a scene by built-in name ("S1".."S4") or from a JSON file path.
inline Scene load_scene(const std::string& name_or_path) {
  for (const std::string& b : list_builtin_scenes())
    if (name_or_path == b) return builtin_scene(name_or_path);
  std::ifstream in(name_or_path);
  if (!in)
    throw std::runtime_error("load_scene: cannot open '" + name_or_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scene_text(buf.str());
}

inline void save_scene(const Scene& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_scene: cannot open '" + path + "'");
  out << scene_to_json(s).dump(2) << "\n";
}

}  // namespace hqcnbv

#endif  // HQCNBV_SCENE_IO_HPP
