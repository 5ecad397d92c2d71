#pragma once

// Molien series of the invariant ring of each irrep image:
// (1/|image|) * sum over the image group of 1/det(I - t*g), as an exact
// truncated rational series. Summing over the image (not over H1) factors
// out the kernel and doubles as a consistency check on the image order.

#include <string>
#include <vector>

#include "reflect96/irreps.hpp"

namespace reflect96 {

struct RatSeries {
  int order = 0;            // coefficients for t^0 .. t^order
  std::vector<Rat> coeff;   // size order + 1

  bool operator==(const RatSeries& o) const = default;
};

RatSeries molien_series(const Irrep& r, int order,
                        std::size_t max_closure = kDefaultClosureBound);

// Expansion of 1/((1-t^d1)(1-t^d2)...) through the given order.
RatSeries product_form_series(const std::vector<int>& degrees, int order);

struct DegreeClaimItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct DegreeClaimReport {
  std::vector<DegreeClaimItem> items;
  std::vector<std::string> notes;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// Checks the known invariant-ring degree facts: the natural representation
// has a free invariant ring with generator degrees {8, 12} (and a single
// degree-8 invariant), rho_5 has degrees {2, 3}, the images of rho_7..rho_10
// share one Molien series, image orders match the expected list, and the
// rho_15 series is scanned for candidate degree sets {2,3,4,d} with
// non-negative numerator summing to 32.
DegreeClaimReport verify_degree_claims(const IrrepSet& irreps, int order);

}  // namespace reflect96
