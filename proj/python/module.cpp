// Python bindings: a lazily-built session exposing the main operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reflect96/bratteli.hpp"
#include "reflect96/centralizer.hpp"
#include "reflect96/codes.hpp"
#include "reflect96/exports.hpp"
#include "reflect96/verify.hpp"

namespace py = pybind11;
using namespace reflect96;

namespace {

class Session {
 public:
  Session() : ctx_(Context::build()) {}

  int group_order() const { return ctx_.group.size(); }
  int class_count() const { return ctx_.classes.count(); }

  std::vector<int> class_sizes() const {
    std::vector<int> s;
    for (int c = 0; c < ctx_.classes.count(); ++c) s.push_back(ctx_.classes.size_of(c));
    return s;
  }

  std::vector<std::string> class_words() const { return ctx_.classes.words; }

  std::vector<int> order_row() const {
    std::vector<int> o;
    for (int c = 0; c < ctx_.classes.count(); ++c)
      o.push_back(ctx_.group.order_of(
          ctx_.classes.representatives[static_cast<std::size_t>(c)]));
    return o;
  }

  std::vector<std::vector<std::string>> character_table() const {
    std::vector<std::vector<std::string>> rows;
    for (int i = 1; i <= ctx_.table.count(); ++i) {
      std::vector<std::string> row;
      for (const auto& v : ctx_.table.row(i)) row.push_back(v.str());
      rows.push_back(std::move(row));
    }
    return rows;
  }

  std::vector<long long> decompose_product(int i, int j) const {
    std::vector<Cyc8> prod =
        character_product(ctx_.table.row(i), ctx_.table.row(j));
    std::vector<long long> out;
    for (const auto& m : decompose(prod, ctx_.table)) out.push_back(to_int64(m));
    return out;
  }

  std::vector<long long> bratteli_square_sums(int levels) const {
    BratteliDiagram d = build_diagram(levels, ctx_.table);
    std::vector<long long> out;
    for (int k = 1; k <= levels; ++k)
      out.push_back(to_int64(level_profile(d, k).square_sum));
    return out;
  }

  std::vector<std::map<int, long long>> bratteli_levels(int levels) const {
    BratteliDiagram d = build_diagram(levels, ctx_.table);
    std::vector<std::map<int, long long>> out;
    for (const auto& lvl : d.levels) {
      std::map<int, long long> m;
      for (const auto& [label, mult] : lvl) m[label] = to_int64(mult);
      out.push_back(std::move(m));
    }
    return out;
  }

  std::string bratteli_json(int levels) const {
    return to_json(build_diagram(levels, ctx_.table));
  }

  std::string bratteli_dot(int levels) const {
    return to_dot(build_diagram(levels, ctx_.table));
  }

  long long centralizer_dimension(int k) const { return to_int64(dim_corollary(k)); }

  bool dims_agree_through(int max_k) const { return dims_agree(ctx_, max_k); }

  std::string dims_report(int max_k) const { return dims_json(ctx_, max_k); }

  std::vector<int> image_orders() const {
    std::vector<int> out;
    for (int l = 1; l <= 16; ++l)
      out.push_back(static_cast<int>(image_order(ctx_.irreps.by_label(l))));
    return out;
  }

  std::vector<std::string> molien_coefficients(int label, int order) const {
    RatSeries s = molien_series(ctx_.irreps.by_label(label), order);
    std::vector<std::string> out;
    for (const auto& c : s.coeff) out.push_back(to_string(c));
    return out;
  }

  std::map<int, long long> weight_enumerator_of(
      const std::vector<std::string>& rows) const {
    WeightEnumerator w = weight_enumerator(BinaryCode::from_rows(rows));
    std::map<int, long long> out;
    for (const auto& [weight, count] : w.counts)
      out[weight] = static_cast<long long>(count);
    return out;
  }

  bool self_dual(const std::vector<std::string>& rows) const {
    return is_self_dual(BinaryCode::from_rows(rows));
  }

  bool doubly_even(const std::vector<std::string>& rows) const {
    return is_doubly_even(BinaryCode::from_rows(rows));
  }

  bool h1_invariant(const std::vector<std::string>& rows) const {
    WeightEnumerator w = weight_enumerator(BinaryCode::from_rows(rows));
    return invariant_under_group(w, ctx_.group);
  }

  std::map<int, std::string> modular_q_expansion(
      const std::vector<std::string>& rows, int order) const {
    WeightEnumerator w = weight_enumerator(BinaryCode::from_rows(rows));
    std::map<int, std::string> out;
    for (const auto& [e, c] : integer_q_expansion(modular_map(w, order)))
      out[e] = to_string(c);
    return out;
  }

  bool verify_all() const { return run_all_checks(ctx_).all_pass(); }

  std::string verify_all_report() const { return report_json(run_all_checks(ctx_)); }

  std::string chartab_csv_text() const { return chartab_csv(ctx_.table); }

 private:
  Context ctx_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact representation theory of the order-96 unitary reflection "
            "group (Shephard-Todd No. 8)";

  py::class_<Session>(m, "Session")
      .def(py::init<>())
      .def("group_order", &Session::group_order)
      .def("class_count", &Session::class_count)
      .def("class_sizes", &Session::class_sizes)
      .def("class_words", &Session::class_words)
      .def("order_row", &Session::order_row)
      .def("character_table", &Session::character_table)
      .def("decompose_product", &Session::decompose_product, py::arg("i"),
           py::arg("j"))
      .def("bratteli_square_sums", &Session::bratteli_square_sums,
           py::arg("levels"))
      .def("bratteli_levels", &Session::bratteli_levels, py::arg("levels"))
      .def("bratteli_json", &Session::bratteli_json, py::arg("levels"))
      .def("bratteli_dot", &Session::bratteli_dot, py::arg("levels"))
      .def("centralizer_dimension", &Session::centralizer_dimension, py::arg("k"))
      .def("dims_agree", &Session::dims_agree_through, py::arg("max_k") = 20)
      .def("dims_report", &Session::dims_report, py::arg("max_k") = 20)
      .def("image_orders", &Session::image_orders)
      .def("molien_coefficients", &Session::molien_coefficients, py::arg("label"),
           py::arg("order") = 40)
      .def("weight_enumerator", &Session::weight_enumerator_of, py::arg("rows"))
      .def("is_self_dual", &Session::self_dual, py::arg("rows"))
      .def("is_doubly_even", &Session::doubly_even, py::arg("rows"))
      .def("h1_invariant", &Session::h1_invariant, py::arg("rows"))
      .def("modular_q_expansion", &Session::modular_q_expansion, py::arg("rows"),
           py::arg("order") = 10)
      .def("verify_all", &Session::verify_all)
      .def("verify_all_report", &Session::verify_all_report)
      .def("chartab_csv", &Session::chartab_csv_text);

  m.attr("E8_ROWS") = std::vector<std::string>{"10000111", "01001011",
                                               "00101101", "00011110"};
}
