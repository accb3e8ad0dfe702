#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xx0/paths.hpp"

namespace xx0 {

struct SceneSpec {
  PathNest nest;
  long cell_px = 24;
  std::vector<std::string> palette;  // empty -> default palette
  bool labels = true;
};

using LatticePath = std::vector<std::pair<long, long>>;

/// Unit-step vertex sequences of every path in the scene, in lattice
/// coordinates (abscissa line, height); time x site for random turns.
std::vector<LatticePath> scene_paths(const SceneSpec& scene);

/// Deterministic SVG 1.1 text: identical scenes render byte-identically.
std::string render_svg(const SceneSpec& scene);

std::string scene_to_json(const SceneSpec& scene);
SceneSpec scene_from_json(const std::string& text);

const std::vector<std::string>& default_palette();

}  // namespace xx0
