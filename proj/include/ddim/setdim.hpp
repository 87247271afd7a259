#pragma once

// Dimension polynomials of point sets: omega_E for finite E in N^m with a
// partition of the coordinates (inclusion-exclusion over coordinate-wise
// maxima) and phi_A for finite A in N^m x Z^n via the positive/negative
// part embedding into N^{m+2n}.

#include "ddim/lambda.hpp"
#include "ddim/numpoly.hpp"

#include <vector>

namespace ddim {

struct PointSetN {
    std::vector<std::vector<int>> points;  // m-tuples, entries >= 0
    Partition part;                        // num_autos ignored
};

struct PointSetNZ {
    std::vector<std::vector<int>> points;  // (m+n)-tuples, last n may be negative
    Partition part;
};

// Minimal elements under the product order.
std::vector<std::vector<int>> minimal_elements(const std::vector<std::vector<int>>& points);

// The p-variable polynomial counting V_E(r_1..r_p), the m-tuples not above
// any element of E; inputs are reduced to their minimal elements first.
NumPoly omega_E(const PointSetN& e);

// (a_1..a_m, l_1..l_n) -> (a_1..a_m, max(l_j,0).., max(-l_j,0)..):
// positive parts at m+1..m+n, negative parts at m+n+1..m+2n.
std::vector<int> rho_embed(const std::vector<int>& a, int m, int n);

// The (p+1)-variable polynomial counting W_A(r_1..r_{p+1}) through
// omega of rho(A) together with the n paired-unit exclusion points.
NumPoly phi_A(const PointSetNZ& a);

}  // namespace ddim
