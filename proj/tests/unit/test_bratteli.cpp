#include <doctest.h>

#include <map>
#include <set>

#include "reflect96/bratteli.hpp"
#include "reflect96/context.hpp"
#include "reflect96/refdata.hpp"

using namespace reflect96;

namespace {

const Context& ctx() {
  static Context c = Context::build();
  return c;
}

const BratteliDiagram& diagram() {
  static BratteliDiagram d = build_diagram(13, ctx().table);
  return d;
}

// Independent path counting: walk every root-to-vertex path explicitly.
std::map<int, long> count_paths(const BratteliDiagram& d, int k) {
  std::map<int, std::vector<int>> children;
  for (const auto& [from, to] : d.edges) children[from].push_back(to);
  std::map<int, long> paths = {{10, 1}};
  for (int level = 1; level < k; ++level) {
    std::map<int, long> next;
    for (const auto& [label, count] : paths)
      for (int child : children[label]) next[child] += count;
    paths = std::move(next);
  }
  return paths;
}

}  // namespace

TEST_CASE("level contents match the reference rows") {
  for (int k = 1; k <= 9; ++k) {
    const auto& expect = refdata::diagram_rows()[static_cast<std::size_t>(k - 1)];
    CHECK(diagram().levels[static_cast<std::size_t>(k - 1)].size() == expect.size());
    for (const auto& [label, mult] : expect)
      CHECK(diagram().multiplicity(label, k) == Int(mult));
  }
  CHECK(diagram().multiplicity(16, 9) == 85);
  CHECK(diagram().multiplicity(14, 6) == 10);
  CHECK(diagram().multiplicity(10, 1) == 1);
  CHECK(diagram().multiplicity(1, 3) == 0);  // absent label answers zero
}

TEST_CASE("square sums per level") {
  for (int k = 1; k <= 9; ++k)
    CHECK(level_profile(diagram(), k).square_sum ==
          Int(refdata::diagram_square_sums()[static_cast<std::size_t>(k - 1)]));
  CHECK_THROWS_AS(level_profile(diagram(), 0), std::out_of_range);
  CHECK_THROWS_AS(level_profile(diagram(), 14), std::out_of_range);
  CHECK_THROWS_AS(diagram().multiplicity(10, 99), std::out_of_range);
}

TEST_CASE("path counting agrees with the level recurrence") {
  for (int k = 1; k <= 9; ++k) {
    std::map<int, long> paths = count_paths(diagram(), k);
    CHECK(paths.size() == diagram().levels[static_cast<std::size_t>(k - 1)].size());
    for (const auto& [label, count] : paths)
      CHECK(diagram().multiplicity(label, k) == Int(count));
  }
}

TEST_CASE("period-four label sets") {
  auto labels_at = [](int k) {
    std::set<int> s;
    for (const auto& [label, mult] : diagram().levels[static_cast<std::size_t>(k - 1)])
      s.insert(label);
    return s;
  };
  CHECK(labels_at(5) == std::set<int>{8, 10, 16});
  CHECK(labels_at(9) == labels_at(5));
  CHECK(labels_at(13) == labels_at(5));
  CHECK(labels_at(6) == labels_at(10));
  CHECK(labels_at(7) == labels_at(11));
  CHECK(labels_at(8) == labels_at(12));
}

TEST_CASE("exports") {
  BratteliDiagram two = build_diagram(2, ctx().table);
  std::string dot = to_dot(two);
  // 3 vertices, 2 edges in the drawn part
  CHECK(dot.find("L1_rho10 [label=\"rho_10:1\"]") != std::string::npos);
  int arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos;
       p = dot.find("->", p + 1))
    ++arrows;
  CHECK(arrows == 2);
  CHECK(to_dot(two) == dot);  // deterministic

  std::string json_text = to_json(build_diagram(5, ctx().table));
  CHECK(json_text == to_json(build_diagram(5, ctx().table)));
  CHECK(json_text.find("\"square_sum\": 51") != std::string::npos);

  CHECK_THROWS_AS(build_diagram(0, ctx().table), dimension_error);
}
