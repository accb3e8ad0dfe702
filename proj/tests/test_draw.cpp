#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "xx0/draw.hpp"

using namespace xx0;

namespace {

PathNest star_nest(const Partition& lam, long N, long index) {
  std::vector<PathNest> nests;
  enumerate_stars(lam, N, 0, [&](const PathNest& n) { nests.push_back(n); });
  return nests.at(static_cast<size_t>(index));
}

}  // namespace

TEST_CASE("figure-style star renders four disjoint paths") {
  // shape (6,3,3,1) on four lines: endpoint ordinates 9, 5, 4, 1
  SceneSpec scene;
  scene.nest = star_nest(Partition({6, 3, 3, 1}), 4, 0);
  const auto paths = scene_paths(scene);
  REQUIRE(paths.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(paths[i].front() ==
          std::make_pair(static_cast<long>(i + 1), static_cast<long>(4 - (i + 1))));
    CHECK(paths[i].back().first == 4);
  }
  std::multiset<long> ends;
  for (const auto& p : paths) ends.insert(p.back().second);
  CHECK(ends == std::multiset<long>({9, 5, 4, 1}));

  // vertex disjointness across all tableaux of the shape
  long count = 0;
  enumerate_stars(Partition({6, 3, 3, 1}), 4, 0, [&](const PathNest& n) {
    SceneSpec s;
    s.nest = n;
    CHECK_NOTHROW(scene_paths(s));
    ++count;
  });
  CHECK(count > 0);
}

TEST_CASE("byte-identical re-rendering") {
  SceneSpec scene;
  scene.nest = star_nest(Partition({2, 1}), 3, 4);
  const std::string a = render_svg(scene);
  const std::string b = render_svg(scene);
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
}

TEST_CASE("empty nest renders a grid-only document") {
  SceneSpec scene;
  scene.nest.kind = NestKind::Star;
  scene.nest.N = 0;
  const std::string svg = render_svg(scene);
  CHECK(svg.find("<polyline") == std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
}

TEST_CASE("all six watermelons render with a common bounding box") {
  std::vector<std::string> docs;
  enumerate_watermelons(2, 2, 1, 0, 0, [&](const PathNest& w, long) {
    SceneSpec scene;
    scene.nest = w;
    docs.push_back(render_svg(scene));
  });
  REQUIRE(docs.size() == 6);
  std::set<std::string> distinct(docs.begin(), docs.end());
  CHECK(distinct.size() == 6);
  // identical viewBox line on every document
  const auto header_of = [](const std::string& d) {
    return d.substr(0, d.find('\n'));
  };
  for (const auto& d : docs) CHECK(header_of(d) == header_of(docs.front()));
}

TEST_CASE("drawn vertical segments equal the step counts") {
  SceneSpec scene;
  scene.nest = star_nest(Partition({3, 1}), 3, 2);
  const auto paths = scene_paths(scene);
  const auto totals = scene.nest.line_totals();
  for (long line = 1; line <= scene.nest.N; ++line) {
    long vertical = 0;
    for (const auto& p : paths)
      for (size_t v = 1; v < p.size(); ++v)
        if (p[v].first == line && p[v - 1].first == line &&
            p[v].second == p[v - 1].second + 1)
          ++vertical;
    CHECK(vertical == totals[static_cast<size_t>(line - 1)]);
  }
}

TEST_CASE("random turns worldlines") {
  std::vector<PathNest> nests;
  enumerate_random_turns_paths({2, 0}, {3, 1}, 2, 4,
                               [&](const PathNest& n) { nests.push_back(n); });
  REQUIRE(!nests.empty());
  SceneSpec scene;
  scene.nest = nests.front();
  const auto paths = scene_paths(scene);
  REQUIRE(paths.size() == 2);
  for (const auto& p : paths) CHECK(p.size() == 3);  // K+1 ticks
  CHECK(render_svg(scene).find("polyline") != std::string::npos);
}

TEST_CASE("scene JSON round trip") {
  SceneSpec scene;
  scene.nest = star_nest(Partition({2, 1}), 3, 0);
  scene.cell_px = 30;
  scene.labels = false;
  const SceneSpec back = scene_from_json(scene_to_json(scene));
  CHECK(render_svg(back) == render_svg(scene));
}

TEST_CASE("palette exhaustion") {
  SceneSpec scene;
  scene.nest = star_nest(Partition({1}), 2, 0);
  scene.palette = {"#000000"};
  CHECK_NOTHROW(render_svg(scene));
  scene.nest.N = 9;  // inconsistent on purpose; palette check precedes walk
  scene.palette = {"#000000", "#111111"};
  // 9 paths over a 2-color palette exceeds the 4-cycle allowance
  CHECK_THROWS_AS(render_svg(scene), PaletteExhausted);
}
