#include "xx0/draw.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

namespace xx0 {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void check_lattice_nest(const PathNest& nest, long lines) {
  if (static_cast<long>(nest.steps.size()) != nest.N)
    throw InconsistentNest("steps row count differs from N");
  for (const auto& row : nest.steps) {
    if (static_cast<long>(row.size()) != lines)
      throw InconsistentNest("steps column count differs from line count");
    for (long v : row)
      if (v < 0) throw InconsistentNest("negative step count");
  }
}

LatticePath walk_lines(long start_line, long start_height, long end_line,
                       const std::vector<long>& steps) {
  LatticePath path;
  long x = start_line, y = start_height;
  path.emplace_back(x, y);
  for (long line = start_line; line <= end_line; ++line) {
    for (long s = 0; s < steps[static_cast<size_t>(line - 1)]; ++s)
      path.emplace_back(x, ++y);
    if (line < end_line) path.emplace_back(++x, y);
  }
  return path;
}

}  // namespace

const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> pal = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
      "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
  return pal;
}

std::vector<LatticePath> scene_paths(const SceneSpec& scene) {
  const PathNest& nest = scene.nest;
  const long N = nest.N;
  std::vector<LatticePath> out;

  switch (nest.kind) {
    case NestKind::Star: {
      check_lattice_nest(nest, N);
      for (long i = 1; i <= N; ++i)
        out.push_back(walk_lines(i, N - i, N, nest.steps[static_cast<size_t>(i - 1)]));
      break;
    }
    case NestKind::ConjStar: {
      check_lattice_nest(nest, N);
      const long M = nest.mcal + N - 1;
      for (long a = 1; a <= N; ++a) {
        const long mu_a = nest.lambda.part(a - 1) + N - a;
        auto path = walk_lines(1, mu_a, a, nest.steps[static_cast<size_t>(a - 1)]);
        if (path.back() != std::make_pair(a, M + 1 - a))
          throw InconsistentNest("conjugate star path misses its endpoint");
        out.push_back(std::move(path));
      }
      break;
    }
    case NestKind::Watermelon: {
      check_lattice_nest(nest, 2 * N);
      const long M = nest.mcal + N - 1;
      for (long l = 1; l <= N; ++l) {
        const auto& row = nest.steps[static_cast<size_t>(l - 1)];
        std::vector<long> star_part(row.begin(), row.begin() + N);
        LatticePath path = walk_lines(l, N - l, N, star_part);
        // crossing segment onto the conjugate half
        long x = N, y = path.back().second;
        path.emplace_back(++x, y);
        for (long b = 1; b <= l; ++b) {
          for (long s = 0; s < row[static_cast<size_t>(N + b - 1)]; ++s)
            path.emplace_back(x, ++y);
          if (b < l) path.emplace_back(++x, y);
        }
        if (path.back() != std::make_pair(N + l, M + 1 - l))
          throw InconsistentNest("watermelon path misses its endpoint");
        out.push_back(std::move(path));
      }
      break;
    }
    case NestKind::RandomTurns: {
      if (nest.trajectory.empty())
        throw InconsistentNest("random turns nest without trajectory");
      const size_t n_walk = nest.trajectory.front().size();
      std::vector<long> pos = nest.trajectory.front();
      out.assign(n_walk, {});
      for (size_t w = 0; w < n_walk; ++w) out[w].emplace_back(0, pos[w]);
      for (size_t tick = 1; tick < nest.trajectory.size(); ++tick) {
        const auto& next = nest.trajectory[tick];
        std::multiset<long> before(pos.begin(), pos.end());
        std::multiset<long> after(next.begin(), next.end());
        std::vector<long> gone, arrived;
        for (long s : before)
          if (!after.count(s)) gone.push_back(s);
        for (long s : after)
          if (!before.count(s)) arrived.push_back(s);
        if (gone.size() != 1 || arrived.size() != 1)
          throw InconsistentNest("trajectory tick is not a single hop");
        for (size_t w = 0; w < n_walk; ++w) {
          if (pos[w] == gone.front()) pos[w] = arrived.front();
          out[w].emplace_back(static_cast<long>(tick), pos[w]);
        }
      }
      break;
    }
  }

  // Vicious condition: distinct paths never share a lattice vertex.
  std::set<std::pair<long, long>> seen;
  for (const auto& path : out) {
    std::set<std::pair<long, long>> own(path.begin(), path.end());
    for (const auto& v : own) {
      if (seen.count(v)) throw InconsistentNest("paths share a lattice vertex");
      seen.insert(v);
    }
  }
  return out;
}

std::string render_svg(const SceneSpec& scene) {
  ensure(scene.cell_px >= 4, "render_svg: cell_px too small");
  const auto& palette = scene.palette.empty() ? default_palette() : scene.palette;
  const long repeats = 4;
  if (scene.nest.N > static_cast<long>(palette.size()) * repeats)
    throw PaletteExhausted("more paths than the palette cycle admits");

  const auto paths = scene_paths(scene);
  long xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  for (const auto& p : paths)
    for (const auto& [x, y] : p) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (scene.nest.kind != NestKind::RandomTurns) {
    xmin = std::min(xmin, 1L);
    ymin = std::min(ymin, 0L);
  }
  const double cell = static_cast<double>(scene.cell_px);
  const double margin = 1.5 * cell;
  const double w = margin * 2 + cell * static_cast<double>(xmax - xmin);
  const double h = margin * 2 + cell * static_cast<double>(ymax - ymin);
  auto px = [&](long x) { return margin + cell * static_cast<double>(x - xmin); };
  auto py = [&](long y) { return margin + cell * static_cast<double>(ymax - y); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt(w) << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w)
      << " " << fmt(h) << "\">\n";
  svg << "<rect width=\"" << fmt(w) << "\" height=\"" << fmt(h)
      << "\" fill=\"white\"/>\n";

  // dashed grid
  svg << "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\" stroke-dasharray=\"3,3\">\n";
  for (long x = xmin; x <= xmax; ++x)
    svg << "<line x1=\"" << fmt(px(x)) << "\" y1=\"" << fmt(py(ymin))
        << "\" x2=\"" << fmt(px(x)) << "\" y2=\"" << fmt(py(ymax)) << "\"/>\n";
  for (long y = ymin; y <= ymax; ++y)
    svg << "<line x1=\"" << fmt(px(xmin)) << "\" y1=\"" << fmt(py(y))
        << "\" x2=\"" << fmt(px(xmax)) << "\" y2=\"" << fmt(py(y)) << "\"/>\n";
  svg << "</g>\n";

  // dissection line for watermelons
  if (scene.nest.kind == NestKind::Watermelon) {
    const double xd = px(scene.nest.N) + 0.5 * cell;
    svg << "<line x1=\"" << fmt(xd) << "\" y1=\"" << fmt(py(ymin)) << "\" x2=\""
        << fmt(xd) << "\" y2=\"" << fmt(py(ymax))
        << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,3\"/>\n";
    if (scene.labels)
      for (size_t i = 0; i < scene.nest.mu.parts.size(); ++i)
        svg << "<circle cx=\"" << fmt(xd) << "\" cy=\""
            << fmt(py(scene.nest.mu.parts[i])) << "\" r=\"" << fmt(cell * 0.12)
            << "\" fill=\"#888888\"/>\n";
  }

  for (size_t i = 0; i < paths.size(); ++i) {
    const auto& color = palette[i % palette.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (size_t v = 0; v < paths[i].size(); ++v) {
      if (v) svg << " ";
      svg << fmt(px(paths[i][v].first)) << "," << fmt(py(paths[i][v].second));
    }
    svg << "\"/>\n";
    svg << "<circle cx=\"" << fmt(px(paths[i].front().first)) << "\" cy=\""
        << fmt(py(paths[i].front().second)) << "\" r=\"" << fmt(cell * 0.15)
        << "\" fill=\"" << color << "\"/>\n";
    svg << "<circle cx=\"" << fmt(px(paths[i].back().first)) << "\" cy=\""
        << fmt(py(paths[i].back().second)) << "\" r=\"" << fmt(cell * 0.15)
        << "\" fill=\"" << color << "\"/>\n";
  }

  if (scene.labels) {
    svg << "<g font-family=\"monospace\" font-size=\"" << fmt(cell * 0.45)
        << "\" fill=\"#333333\">\n";
    if (scene.nest.kind == NestKind::RandomTurns) {
      svg << "<text x=\"" << fmt(px(xmax) + 0.3 * cell) << "\" y=\""
          << fmt(py(ymin) + 0.4 * cell) << "\">t</text>\n";
    } else {
      for (size_t i = 0; i < paths.size(); ++i) {
        svg << "<text x=\"" << fmt(px(paths[i].front().first) - 0.4 * cell)
            << "\" y=\"" << fmt(py(paths[i].front().second) + 0.9 * cell)
            << "\">C" << (i + 1) << "</text>\n";
        if (scene.nest.kind != NestKind::Star)
          svg << "<text x=\"" << fmt(px(paths[i].back().first) - 0.4 * cell)
              << "\" y=\"" << fmt(py(paths[i].back().second) - 0.5 * cell)
              << "\">B" << (i + 1) << "</text>\n";
      }
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string scene_to_json(const SceneSpec& scene) {
  nlohmann::json j = nlohmann::json::parse(scene.nest.json());
  nlohmann::json out;
  out["nest"] = j;
  out["cell_px"] = scene.cell_px;
  out["palette"] = scene.palette;
  out["labels"] = scene.labels;
  return out.dump();
}

SceneSpec scene_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  SceneSpec scene;
  const auto& nj = j.at("nest");
  const std::string kind = nj.at("kind").get<std::string>();
  if (kind == "star")
    scene.nest.kind = NestKind::Star;
  else if (kind == "conj_star")
    scene.nest.kind = NestKind::ConjStar;
  else if (kind == "watermelon")
    scene.nest.kind = NestKind::Watermelon;
  else if (kind == "random_turns")
    scene.nest.kind = NestKind::RandomTurns;
  else
    throw Error("scene_from_json: unknown kind " + kind);
  scene.nest.N = nj.at("N").get<long>();
  scene.nest.k = nj.at("k").get<long>();
  scene.nest.mcal = nj.at("mcal").get<long>();
  scene.nest.lambda = Partition(nj.at("lambda").get<std::vector<long>>());
  scene.nest.mu = StrictPartition(nj.at("mu").get<std::vector<long>>());
  scene.nest.steps = nj.at("per_path_steps").get<std::vector<std::vector<long>>>();
  if (nj.contains("M")) scene.nest.M = nj.at("M").get<long>();
  if (nj.contains("trajectory"))
    scene.nest.trajectory =
        nj.at("trajectory").get<std::vector<std::vector<long>>>();
  if (j.contains("cell_px")) scene.cell_px = j.at("cell_px").get<long>();
  if (j.contains("palette"))
    scene.palette = j.at("palette").get<std::vector<std::string>>();
  if (j.contains("labels")) scene.labels = j.at("labels").get<bool>();
  return scene;
}

}  // namespace xx0
