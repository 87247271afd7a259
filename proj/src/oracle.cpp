#include "ddim/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace ddim {

void GridSpec::validate() const {
    if (lower.size() != upper.size()) throw input_error("grid bounds length mismatch");
    for (size_t i = 0; i < lower.size(); ++i)
        if (lower[i] > upper[i]) throw input_error("grid lower bound exceeds upper bound");
}

namespace {

struct Budget {
    long long remaining;
    void spend() {
        if (--remaining < 0) throw consistency_error("enumeration cap exceeded");
    }
};

// All nonnegative vectors with sum <= bound.
void walk_simplex(long long bound, std::vector<int>& out, size_t at,
                  const std::function<void()>& visit) {
    if (bound < 0) return;
    if (at == out.size()) {
        visit();
        return;
    }
    for (int v = 0; v <= bound; ++v) {
        out[at] = v;
        walk_simplex(bound - v, out, at + 1, visit);
    }
    out[at] = 0;
}

// All integer vectors with sum of absolute values <= bound.
void walk_cross(long long bound, std::vector<int>& out, size_t at,
                const std::function<void()>& visit) {
    if (at == out.size()) {
        visit();
        return;
    }
    for (int v = -static_cast<int>(bound); v <= bound; ++v) {
        out[at] = v;
        walk_cross(bound - std::abs(v), out, at + 1, visit);
    }
    out[at] = 0;
}

}  // namespace

void enumerate_lambda(const Partition& part, const std::vector<long long>& bounds,
                      const std::function<void(const LambdaMonomial&)>& visit, long long cap) {
    part.validate();
    const int p = part.block_count();
    if (static_cast<int>(bounds.size()) != p + 1) throw input_error("lambda bounds length mismatch");
    for (long long b : bounds)
        if (b < 0) throw input_error("lambda bounds must be nonnegative");

    Budget budget{cap};
    LambdaMonomial lam = LambdaMonomial::identity(part.derivation_count(), part.num_autos);

    // nested per-block simplex walks, then the shift cross-polytope
    std::function<void(int)> per_block = [&](int block) {
        if (block > p) {
            std::vector<int> sigma(part.num_autos);
            walk_cross(bounds[p], sigma, 0, [&] {
                lam.sigma = sigma;
                budget.spend();
                visit(lam);
            });
            return;
        }
        const int begin = part.block_begin(block);
        const int size = part.blocks[block - 1];
        std::vector<int> exps(size);
        if (size == 0) {
            per_block(block + 1);
            return;
        }
        walk_simplex(bounds[block - 1], exps, 0, [&] {
            for (int i = 0; i < size; ++i) lam.delta[begin + i] = exps[i];
            per_block(block + 1);
        });
        for (int i = 0; i < size; ++i) lam.delta[begin + i] = 0;
    };
    per_block(1);
}

long long count_lambda(const Partition& part, const std::vector<long long>& bounds, long long cap) {
    long long count = 0;
    enumerate_lambda(part, bounds, [&](const LambdaMonomial&) { ++count; }, cap);
    return count;
}

long long count_VE(const PointSetN& e, const std::vector<long long>& r, long long cap) {
    Partition part = e.part;
    part.num_autos = 0;
    const int m = part.derivation_count();
    for (const auto& pt : e.points)
        if (static_cast<int>(pt.size()) != m) throw input_error("point length differs from m");
    std::vector<long long> bounds = r;
    bounds.push_back(0);
    long long count = 0;
    enumerate_lambda(part, bounds,
                     [&](const LambdaMonomial& lam) {
                         for (const auto& pt : e.points) {
                             bool above = true;
                             for (int i = 0; i < m; ++i)
                                 if (lam.delta[i] < pt[i]) {
                                     above = false;
                                     break;
                                 }
                             if (above) return;
                         }
                         ++count;
                     },
                     cap);
    return count;
}

long long count_WA(const PointSetNZ& a, const std::vector<long long>& r, long long cap) {
    const int m = a.part.derivation_count();
    const int n = a.part.num_autos;
    long long count = 0;
    enumerate_lambda(a.part, r,
                     [&](const LambdaMonomial& lam) {
                         for (const auto& pt : a.points) {
                             bool above = true;
                             for (int i = 0; i < m && above; ++i)
                                 if (lam.delta[i] < pt[i]) above = false;
                             for (int j = 0; j < n && above; ++j) {
                                 long long pj = pt[m + j], lj = lam.sigma[j];
                                 if (pj * lj < 0 || std::abs(pj) > std::abs(lj)) above = false;
                             }
                             if (above) return;
                         }
                         ++count;
                     },
                     cap);
    return count;
}

long long count_reduced_terms(const Ring& ring, const LeaderTable& table, int num_indets,
                              const std::vector<long long>& r, long long cap) {
    const int p = ring.p();
    long long count = 0;
    enumerate_lambda(ring.part, r,
                     [&](const LambdaMonomial& lam) {
                         for (int k = 0; k < num_indets; ++k) {
                             bool multiple = false;
                             bool all_escape = true;
                             for (const auto& e : table.entries) {
                                 if (e.v.indet != k || !divides(e.v.mono, lam)) continue;
                                 multiple = true;
                                 bool escapes = false;
                                 for (int i = 1; i <= p && !escapes; ++i) {
                                     // ord_i(quotient * u^{(i)}) > r_i
                                     long long q = order_block(ring.part, lam, i) - e.a[i - 1];
                                     if (q + e.b[i - 1] > r[i - 1]) escapes = true;
                                 }
                                 if (!escapes) {
                                     all_escape = false;
                                     break;
                                 }
                             }
                             if (!multiple || all_escape) ++count;
                         }
                     },
                     cap);
    return count;
}

namespace {

NumPoly newton_interpolate(const std::map<std::vector<long long>, Rational>& values, int nvars,
                           const std::vector<int>& caps, const std::vector<long long>& base,
                           std::vector<long long>& prefix, int dim) {
    if (dim == nvars) {
        auto it = values.find(prefix);
        if (it == values.end()) {
            std::ostringstream os;
            os << "interpolation grid is missing node (";
            for (size_t i = 0; i < prefix.size(); ++i) os << (i ? "," : "") << prefix[i];
            os << ")";
            throw input_error(os.str());
        }
        return NumPoly::constant(nvars, it->second);
    }
    const int k = caps[dim];
    std::vector<NumPoly> diffs;
    diffs.reserve(k + 1);
    for (int j = 0; j <= k; ++j) {
        prefix.push_back(base[dim] + j);
        diffs.push_back(newton_interpolate(values, nvars, caps, base, prefix, dim + 1));
        prefix.pop_back();
    }
    // divided differences on consecutive integer nodes
    std::vector<NumPoly> dd = diffs;
    NumPoly result = dd[0];
    NumPoly basis = NumPoly::constant(nvars, Rational(1));
    for (int order = 1; order <= k; ++order) {
        for (int j = 0; j + order <= k; ++j)
            dd[j] = (dd[j + 1] - dd[j]).scaled(Rational(1, order));
        NumPoly linear(nvars);
        MultiIndex unit(nvars, 0);
        unit[dim] = 1;
        linear.add_term(unit, Rational(1));
        linear.add_term(MultiIndex(nvars, 0), Rational(-(base[dim] + order - 1)));
        basis = basis * linear;
        result = result + dd[0] * basis;
    }
    return result;
}

}  // namespace

NumPoly interpolate_numerical(const std::map<std::vector<long long>, Rational>& values,
                              const std::vector<int>& caps, const std::vector<long long>& base) {
    const int nvars = static_cast<int>(caps.size());
    if (base.size() != caps.size()) throw input_error("interpolation base length mismatch");
    std::vector<long long> prefix;
    NumPoly poly = newton_interpolate(values, nvars, caps, base, prefix, 0);
    for (const auto& [point, value] : values) {
        if (static_cast<int>(point.size()) != nvars)
            throw input_error("interpolation point length mismatch");
        if (poly.evaluate(point) != value) {
            std::ostringstream os;
            os << "values are not polynomial within the degree caps: mismatch at (";
            for (size_t i = 0; i < point.size(); ++i) os << (i ? "," : "") << point[i];
            os << ")";
            throw consistency_error(os.str());
        }
    }
    return poly;
}

}  // namespace ddim
