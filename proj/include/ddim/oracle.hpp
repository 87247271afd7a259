#pragma once

// Ground truth by exhaustive enumeration: order-truncated monomial sets,
// direct cardinalities of V_E / W_A / the reduced-term sets behind the
// dimension polynomial, and exact polynomial interpolation from value
// grids.

#include "ddim/dimpoly.hpp"
#include "ddim/lambda.hpp"
#include "ddim/numpoly.hpp"
#include "ddim/setdim.hpp"

#include <functional>
#include <map>
#include <vector>

namespace ddim {

struct GridSpec {
    std::vector<long long> lower;
    std::vector<long long> upper;  // inclusive, componentwise >= lower
    void validate() const;
};

inline constexpr long long kDefaultLambdaCap = 1000000;

// Visits every monomial with ord_i <= bounds[i] (i = 1..p) and
// ord_sigma <= bounds[p] exactly once; throws consistency_error when more
// than `cap` monomials would be produced.
void enumerate_lambda(const Partition& part, const std::vector<long long>& bounds,
                      const std::function<void(const LambdaMonomial&)>& visit,
                      long long cap = kDefaultLambdaCap);

long long count_lambda(const Partition& part, const std::vector<long long>& bounds,
                       long long cap = kDefaultLambdaCap);

// Card V_E(r): m-tuples within the block bounds not above any point of E.
long long count_VE(const PointSetN& e, const std::vector<long long>& r,
                   long long cap = kDefaultLambdaCap);

// Card W_A(r): (m+n)-tuples within the bounds not above any point of A in
// the orthant order.
long long count_WA(const PointSetNZ& a, const std::vector<long long>& r,
                   long long cap = kDefaultLambdaCap);

// Card U_r: terms within the bounds that are either free of leader
// multiples or whose every divisor representation escapes some block
// truncation.
long long count_reduced_terms(const Ring& ring, const LeaderTable& table, int num_indets,
                              const std::vector<long long>& r, long long cap = kDefaultLambdaCap);

// Exact polynomial through the values with per-variable degrees bounded by
// `caps`, interpolated on the nodes base_j .. base_j + caps_j (which must
// all be present); every further grid value is verified and the violating
// point reported on mismatch.
NumPoly interpolate_numerical(const std::map<std::vector<long long>, Rational>& values,
                              const std::vector<int>& caps, const std::vector<long long>& base);

}  // namespace ddim
