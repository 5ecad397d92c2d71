#include "reflect96/molien.hpp"

#include "reflect96/refdata.hpp"

namespace reflect96 {

namespace {

// 1 / p as a power series through `order`; requires p(0) = 1.
std::vector<Cyc8> series_reciprocal(const PolyCyc& p, int order) {
  if (p.coeff(0) != Cyc8(1))
    throw arithmetic_error("series reciprocal needs unit constant term");
  std::vector<Cyc8> inv(static_cast<std::size_t>(order) + 1);
  inv[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Cyc8 acc;
    for (int j = 1; j <= std::min(n, p.degree()); ++j)
      acc += p.coeff(j) * inv[static_cast<std::size_t>(n - j)];
    inv[static_cast<std::size_t>(n)] = -acc;
  }
  return inv;
}

}  // namespace

RatSeries molien_series(const Irrep& r, int order, std::size_t max_closure) {
  if (order < 1) throw dimension_error("series order must be positive");
  FiniteMatrixGroup image = generate_group({r.image_T, r.image_D}, max_closure);
  std::vector<Cyc8> acc(static_cast<std::size_t>(order) + 1);
  for (const auto& g : image.elements()) {
    std::vector<Cyc8> rec = series_reciprocal(charpoly_det(g), order);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += rec[k];
  }
  Cyc8 scale = Cyc8(Rat(image.size())).inverse();
  RatSeries s;
  s.order = order;
  for (auto& c : acc) {
    Cyc8 v = scale * c;
    if (!v.is_rational())
      throw arithmetic_error("non-rational Molien coefficient: " + v.str());
    s.coeff.push_back(v.as_rational());
  }
  return s;
}

RatSeries product_form_series(const std::vector<int>& degrees, int order) {
  RatSeries s;
  s.order = order;
  s.coeff.assign(static_cast<std::size_t>(order) + 1, Rat(0));
  s.coeff[0] = 1;
  // Multiply successively by 1/(1 - t^d): a running prefix recurrence.
  for (int d : degrees) {
    if (d < 1) throw dimension_error("degree must be positive");
    for (int n = d; n <= order; ++n)
      s.coeff[static_cast<std::size_t>(n)] +=
          s.coeff[static_cast<std::size_t>(n - d)];
  }
  return s;
}

namespace {

std::string coeffs_preview(const RatSeries& s, int upto) {
  std::string out = "[";
  for (int n = 0; n <= std::min(upto, s.order); ++n) {
    if (n) out += ", ";
    out += to_string(s.coeff[static_cast<std::size_t>(n)]);
  }
  return out + "]";
}

// Numerator of s * prod_i (1-t^d_i) through the series order.
std::vector<Rat> series_numerator(const RatSeries& s, const std::vector<int>& degrees) {
  std::vector<Rat> num = s.coeff;
  for (int deg : degrees) {
    // multiply in place by (1 - t^deg), highest degree first
    for (int n = static_cast<int>(num.size()) - 1; n >= deg; --n)
      num[static_cast<std::size_t>(n)] -= num[static_cast<std::size_t>(n - deg)];
  }
  return num;
}

// Non-negative integral numerator with a vanishing truncation tail.
bool plausible_numerator(const std::vector<Rat>& num, int tail) {
  for (const Rat& c : num)
    if (c < 0 || !is_integer(c)) return false;
  for (std::size_t k = num.size() - static_cast<std::size_t>(tail); k < num.size(); ++k)
    if (num[k] != 0) return false;
  return true;
}

}  // namespace

DegreeClaimReport verify_degree_claims(const IrrepSet& irreps, int order) {
  if (order < 24) throw dimension_error("degree claims need order >= 24");
  DegreeClaimReport rep;
  auto add = [&rep](const std::string& name, bool pass, const std::string& detail) {
    rep.items.push_back({name, pass, detail});
  };

  RatSeries m10 = molien_series(irreps.by_label(10), order);
  RatSeries free_8_12 = product_form_series({8, 12}, order);
  add("rho10_free_ring_degrees_8_12", m10 == free_8_12,
      "series == 1/((1-t^8)(1-t^12)); computed " + coeffs_preview(m10, 12));
  add("rho10_degree8_space_is_one_dimensional",
      m10.coeff[8] == 1, "coefficient of t^8 is " + to_string(m10.coeff[8]));

  RatSeries m5 = molien_series(irreps.by_label(5), order);
  add("rho5_free_ring_degrees_2_3", m5 == product_form_series({2, 3}, order),
      "series == 1/((1-t^2)(1-t^3)); computed " + coeffs_preview(m5, 8));

  RatSeries m7 = molien_series(irreps.by_label(7), order);
  RatSeries m8 = molien_series(irreps.by_label(8), order);
  RatSeries m9 = molien_series(irreps.by_label(9), order);
  add("rho7_to_rho10_share_molien_series",
      m7 == m8 && m8 == m9 && m9 == m10,
      "four natural-type image rings coincide");

  {
    RatSeries m11 = molien_series(irreps.by_label(11), order);
    RatSeries m12 = molien_series(irreps.by_label(12), order);
    RatSeries free234 = product_form_series({2, 3, 4}, order);
    std::string which;
    if (m11 == free234) which += "rho_11";
    if (m12 == free234) which += which.empty() ? "rho_12" : " and rho_12";
    if (which.empty()) which = "neither rho_11 nor rho_12";
    rep.notes.push_back(
        "among the order-24 3-dim images, the free invariant ring with "
        "degrees {2,3,4} belongs to " + which +
        " under this labeling; computed rho_12 series starts " +
        coeffs_preview(m12, 9));
  }

  bool orders_ok = true;
  std::string order_list;
  for (int l = 1; l <= 16; ++l) {
    long got = image_order(irreps.by_label(l));
    if (l > 1) order_list += ",";
    order_list += std::to_string(got);
    if (got != refdata::image_orders()[static_cast<std::size_t>(l - 1)])
      orders_ok = false;
  }
  add("image_orders_match_expected_list", orders_ok, "computed " + order_list);

  // rho_15: not a free ring. A parameter-degree multiset {d1..d4} giving a
  // rank-32 module must have product 32 * 96 = 3072; scan those within the
  // truncation for a non-negative integral numerator that has terminated.
  RatSeries m15 = molien_series(irreps.by_label(15), order);
  std::string candidates;
  int cap = order / 2;
  for (int d1 = 2; d1 <= cap; ++d1)
    for (int d2 = d1; d2 <= cap; ++d2)
      for (int d3 = d2; d3 <= cap; ++d3) {
        long prod3 = static_cast<long>(d1) * d2 * d3;
        if (prod3 == 0 || 3072 % prod3 != 0) continue;
        long d4 = 3072 / prod3;
        if (d4 < d3 || d4 > cap) continue;
        if (d1 + d2 + d3 + d4 + 6 > order) continue;
        std::vector<int> degs = {d1, d2, d3, static_cast<int>(d4)};
        if (!plausible_numerator(series_numerator(m15, degs), 6)) continue;
        if (!candidates.empty()) candidates += ", ";
        candidates += "{" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                      std::to_string(d3) + "," + std::to_string(d4) + "}";
      }
  rep.notes.push_back(
      "rho_15 invariant ring: parameter-degree multisets with product 3072 "
      "(module rank 32) and a non-negative terminated numerator within "
      "truncation: " +
      (candidates.empty() ? std::string("none found") : candidates) +
      "; the rank-32 module structure itself is not verified here");
  return rep;
}

}  // namespace reflect96
