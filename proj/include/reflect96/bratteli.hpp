#pragma once

// The Bratteli diagram of the tower End(V10^(x)k): levels hold irrep
// multiplicities, edges come from decomposing chi_10 * chi_j at runtime.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reflect96/chartable.hpp"

namespace reflect96 {

struct BratteliDiagram {
  int max_level = 0;
  // levels[k-1]: label -> multiplicity; only labels with multiplicity > 0.
  std::vector<std::map<int, Int>> levels;
  // Branching rule, one entry per multiplicity unit, sorted by (from, to).
  std::vector<std::pair<int, int>> edges;

  // Zero when the label is absent; std::out_of_range on a bad level.
  Int multiplicity(int label, int k) const;
};

struct LevelProfile {
  int k = 0;
  std::vector<std::pair<int, Int>> entries;  // ascending label
  Int square_sum;
};

BratteliDiagram build_diagram(int max_level, const CharacterTable& table);
LevelProfile level_profile(const BratteliDiagram& d, int k);

std::string to_dot(const BratteliDiagram& d);
std::string to_json(const BratteliDiagram& d);

}  // namespace reflect96
