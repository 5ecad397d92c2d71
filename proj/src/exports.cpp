#include "reflect96/exports.hpp"

#include <json.hpp>

#include "reflect96/centralizer.hpp"

namespace reflect96 {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_int(const Int& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string group_json(const Context& ctx) {
  ordered_json j;
  j["order"] = ctx.group.size();
  j["generators"] = ordered_json::array();
  for (int g = 0; g < ctx.group.generator_count(); ++g)
    j["generators"].push_back(ctx.group.generator(g));
  j["elements"] = ordered_json::array();
  for (const auto& m : ctx.group.elements()) {
    ordered_json e = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) e.push_back(m.at(r, c).str());
    j["elements"].push_back(e);
  }
  j["classes"] = ordered_json::array();
  ordered_json order_row = ordered_json::array();
  for (int c = 0; c < ctx.classes.count(); ++c) {
    ordered_json cls;
    cls["word"] = ctx.classes.words[static_cast<std::size_t>(c)];
    cls["representative"] = ctx.classes.representatives[static_cast<std::size_t>(c)];
    cls["size"] = ctx.classes.size_of(c);
    cls["members"] = ctx.classes.members[static_cast<std::size_t>(c)];
    j["classes"].push_back(cls);
    order_row.push_back(
        ctx.group.order_of(ctx.classes.representatives[static_cast<std::size_t>(c)]));
  }
  j["order_row"] = order_row;
  return dump(j);
}

std::string chartab_csv(const CharacterTable& t) {
  std::string out = "chi";
  for (int c = 0; c < t.count(); ++c)
    out += ",C" + std::to_string(c + 1) + ":" + t.class_words[static_cast<std::size_t>(c)];
  out += "\n";
  for (int i = 1; i <= t.count(); ++i) {
    out += "chi" + std::to_string(i);
    for (int c = 0; c < t.count(); ++c) out += "," + t.X.at(i - 1, c).str();
    out += "\n";
  }
  return out;
}

std::string chartab_json(const CharacterTable& t) {
  ordered_json j;
  j["classes"] = ordered_json::array();
  for (int c = 0; c < t.count(); ++c) {
    ordered_json cls;
    cls["name"] = "C" + std::to_string(c + 1);
    cls["word"] = t.class_words[static_cast<std::size_t>(c)];
    cls["size"] = t.class_sizes[static_cast<std::size_t>(c)];
    j["classes"].push_back(cls);
  }
  j["rows"] = ordered_json::array();
  for (int i = 1; i <= t.count(); ++i) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < t.count(); ++c) row.push_back(t.X.at(i - 1, c).str());
    j["rows"].push_back(row);
  }
  return dump(j);
}

std::string decomposition_json(const Context& ctx, int i, int j) {
  std::vector<Cyc8> product =
      character_product(ctx.table.row(i), ctx.table.row(j));
  std::vector<Int> m = decompose(product, ctx.table);
  ordered_json out;
  out["product"] = {i, j};
  out["values"] = ordered_json::array();
  for (const auto& v : product) out["values"].push_back(v.str());
  out["multiplicities"] = ordered_json::array();
  for (const auto& v : m) out["multiplicities"].push_back(json_int(v));
  return dump(out);
}

std::string irreps_json(const IrrepSet& irreps) {
  ordered_json j = ordered_json::array();
  for (const auto& r : irreps.list) {
    ordered_json e;
    e["label"] = r.label;
    e["dim"] = r.dim;
    auto mat = [](const MatrixCyc& m) {
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
        rows.push_back(row);
      }
      return rows;
    };
    e["image_T"] = mat(r.image_T);
    e["image_D"] = mat(r.image_D);
    ordered_json chi = ordered_json::array();
    for (const auto& v : r.character) chi.push_back(v.str());
    e["character"] = chi;
    j.push_back(e);
  }
  return dump(j);
}

namespace {

struct DimsRow {
  int k;
  Int bratteli, theorem, corollary, oracle;
  ComponentSizes sizes;
  bool agree;
};

DimsRow dims_row(const Context& ctx, const BratteliDiagram& d, int k) {
  DimsRow row{k, 0, 0, 0, 0, theorem_sizes(k), true};
  row.bratteli = level_profile(d, k).square_sum;
  row.theorem = row.sizes.square_sum();
  row.corollary = dim_corollary(k);
  row.oracle = dim_character_oracle(k, ctx.table);
  row.agree = row.bratteli == row.theorem && row.theorem == row.corollary &&
              row.corollary == row.oracle;
  // The named sizes must also match the diagram label-by-label.
  for (const auto& [label, size] : row.sizes.by_label())
    if (size != d.multiplicity(label, k)) row.agree = false;
  return row;
}

}  // namespace

bool dims_agree(const Context& ctx, int max_k) {
  BratteliDiagram d = build_diagram(max_k, ctx.table);
  for (int k = 1; k <= max_k; ++k)
    if (!dims_row(ctx, d, k).agree) return false;
  return true;
}

std::string dims_json(const Context& ctx, int max_k) {
  BratteliDiagram d = build_diagram(max_k, ctx.table);
  ordered_json j;
  j["max_k"] = max_k;
  j["rows"] = ordered_json::array();
  bool all = true;
  for (int k = 1; k <= max_k; ++k) {
    DimsRow row = dims_row(ctx, d, k);
    all = all && row.agree;
    ordered_json e;
    e["k"] = k;
    ordered_json sizes;
    sizes["d_plus"] = json_int(row.sizes.d_plus);
    sizes["d_minus"] = json_int(row.sizes.d_minus);
    sizes["d_zero"] = json_int(row.sizes.d_zero);
    if (row.sizes.even) {
      sizes["e_plus"] = json_int(row.sizes.e_plus);
      sizes["e_minus"] = json_int(row.sizes.e_minus);
    }
    ordered_json labels;
    for (const auto& [name, label] : row.sizes.label_map)
      labels[name] = label;
    e["sizes"] = sizes;
    e["labels"] = labels;
    e["bratteli_square_sum"] = json_int(row.bratteli);
    e["theorem_square_sum"] = json_int(row.theorem);
    e["corollary"] = json_int(row.corollary);
    e["character_sum"] = json_int(row.oracle);
    e["agree"] = row.agree;
    j["rows"].push_back(e);
  }
  j["all_agree"] = all;
  return dump(j);
}

std::string molien_json(const Context& ctx, int rep, int order) {
  RatSeries s = molien_series(ctx.irreps.by_label(rep), order);
  ordered_json j;
  j["rho"] = rep;
  j["order"] = order;
  j["image_order"] = image_order(ctx.irreps.by_label(rep));
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : s.coeff) coeffs.push_back(to_string(c));
  j["coefficients"] = coeffs;
  return dump(j);
}

std::string codes_json(const BinaryCode& code, const Context& ctx) {
  WeightEnumerator w = weight_enumerator(code);
  ordered_json j;
  j["n"] = code.length();
  j["dim"] = code.dim();
  ordered_json counts;
  for (const auto& [weight, count] : w.counts)
    counts[std::to_string(weight)] = count;
  j["enumerator"] = counts;
  j["self_dual"] = is_self_dual(code);
  j["doubly_even"] = is_doubly_even(code);
  j["h1_invariant"] =
      w.n % 8 == 0 && invariant_under_group(w, ctx.group);
  return dump(j);
}

std::string theta_json(const BinaryCode& code, int order) {
  WeightEnumerator w = weight_enumerator(code);
  QuarterQSeries s = modular_map(w, order);
  ordered_json j;
  j["n"] = code.length();
  j["order"] = order;
  ordered_json q;
  for (std::size_t idx = 0; idx < s.quarter.size(); ++idx) {
    if (s.quarter[idx] == 0) continue;
    std::string key = idx % 4 == 0 ? std::to_string(idx / 4)
                                   : std::to_string(idx) + "/4";
    q[key] = to_string(s.quarter[idx]);
  }
  j["q_expansion"] = q;
  j["integer_exponents_only"] = [&s] {
    for (std::size_t idx = 0; idx < s.quarter.size(); ++idx)
      if (idx % 4 != 0 && s.quarter[idx] != 0) return false;
    return true;
  }();
  return dump(j);
}

}  // namespace reflect96
