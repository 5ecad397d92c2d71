#include "reflect96/bratteli.hpp"

#include <json.hpp>

#include <stdexcept>

namespace reflect96 {

Int BratteliDiagram::multiplicity(int label, int k) const {
  if (k < 1 || k > max_level)
    throw std::out_of_range("level " + std::to_string(k) + " outside 1.." +
                            std::to_string(max_level));
  const auto& lvl = levels[static_cast<std::size_t>(k - 1)];
  auto it = lvl.find(label);
  return it == lvl.end() ? Int(0) : it->second;
}

BratteliDiagram build_diagram(int max_level, const CharacterTable& table) {
  if (max_level < 1) throw dimension_error("diagram needs at least one level");
  BratteliDiagram d;
  d.max_level = max_level;

  std::vector<Cyc8> chi10 = table.row(10);
  std::map<int, std::vector<std::pair<int, Int>>> rule;  // from -> (to, mult)
  for (int j = 1; j <= table.count(); ++j) {
    std::vector<Int> m = decompose(character_product(chi10, table.row(j)), table);
    for (int i = 1; i <= table.count(); ++i) {
      const Int& mult = m[static_cast<std::size_t>(i - 1)];
      if (mult == 0) continue;
      rule[j].emplace_back(i, mult);
      for (Int c = 0; c < mult; ++c) d.edges.emplace_back(j, i);
    }
  }

  d.levels.push_back({{10, Int(1)}});
  for (int k = 2; k <= max_level; ++k) {
    std::map<int, Int> next;
    for (const auto& [label, mult] : d.levels.back())
      for (const auto& [child, emult] : rule.at(label)) next[child] += emult * mult;
    d.levels.push_back(std::move(next));
  }
  return d;
}

LevelProfile level_profile(const BratteliDiagram& d, int k) {
  if (k < 1 || k > d.max_level)
    throw std::out_of_range("level " + std::to_string(k) + " outside 1.." +
                            std::to_string(d.max_level));
  LevelProfile p;
  p.k = k;
  p.square_sum = 0;
  for (const auto& [label, mult] : d.levels[static_cast<std::size_t>(k - 1)]) {
    p.entries.emplace_back(label, mult);
    p.square_sum += mult * mult;
  }
  return p;
}

namespace {

nlohmann::ordered_json json_int(const Int& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

}  // namespace

std::string to_dot(const BratteliDiagram& d) {
  std::string out = "digraph bratteli {\n  rankdir=TB;\n  node [shape=box];\n";
  for (int k = 1; k <= d.max_level; ++k) {
    out += "  { rank=same;";
    for (const auto& [label, mult] : d.levels[static_cast<std::size_t>(k - 1)]) {
      out += " L" + std::to_string(k) + "_rho" + std::to_string(label) +
             " [label=\"rho_" + std::to_string(label) + ":" + mult.get_str() +
             "\"];";
    }
    out += " }\n";
  }
  for (int k = 1; k < d.max_level; ++k) {
    const auto& here = d.levels[static_cast<std::size_t>(k - 1)];
    const auto& below = d.levels[static_cast<std::size_t>(k)];
    for (const auto& [from, to] : d.edges) {
      if (!here.count(from) || !below.count(to)) continue;
      out += "  L" + std::to_string(k) + "_rho" + std::to_string(from) + " -> L" +
             std::to_string(k + 1) + "_rho" + std::to_string(to) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string to_json(const BratteliDiagram& d) {
  nlohmann::ordered_json j;
  j["levels"] = nlohmann::json::array();
  for (int k = 1; k <= d.max_level; ++k) {
    nlohmann::ordered_json lvl;
    lvl["k"] = k;
    lvl["vertices"] = nlohmann::json::array();
    Int sq = 0;
    for (const auto& [label, mult] : d.levels[static_cast<std::size_t>(k - 1)]) {
      nlohmann::ordered_json v;
      v["rho"] = label;
      v["mult"] = json_int(mult);
      lvl["vertices"].push_back(v);
      sq += mult * mult;
    }
    lvl["square_sum"] = json_int(sq);
    j["levels"].push_back(lvl);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [from, to] : d.edges) {
    nlohmann::ordered_json e;
    e["from_rho"] = from;
    e["to_rho"] = to;
    j["edges"].push_back(e);
  }
  return j.dump(2) + "\n";
}

}  // namespace reflect96
