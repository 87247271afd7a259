#include "ddim/setdim.hpp"

#include <algorithm>

namespace ddim {

namespace {

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
    // a >= b componentwise
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

}  // namespace

std::vector<std::vector<int>> minimal_elements(const std::vector<std::vector<int>>& points) {
    std::vector<std::vector<int>> out;
    for (const auto& p : points) {
        bool minimal = true;
        for (const auto& q : points) {
            if (q == p) continue;
            if (dominates(p, q) && !dominates(q, p)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NumPoly omega_E(const PointSetN& e) {
    e.part.validate();
    const int m = e.part.derivation_count();
    const int p = e.part.block_count();
    for (const auto& pt : e.points) {
        if (static_cast<int>(pt.size()) != m) throw input_error("point length differs from m");
        for (int v : pt)
            if (v < 0) throw input_error("omega_E points must be nonnegative");
    }

    const auto reduced = minimal_elements(e.points);
    const int q = static_cast<int>(reduced.size());
    if (q > 22) throw input_error("omega_E: too many minimal points for subset expansion");

    NumPoly out(p);
    for (unsigned long long mask = 0; mask < (1ULL << q); ++mask) {
        std::vector<int> top(m, 0);
        int bits = 0;
        for (int i = 0; i < q; ++i) {
            if (!(mask >> i & 1)) continue;
            ++bits;
            for (int v = 0; v < m; ++v) top[v] = std::max(top[v], reduced[i][v]);
        }
        NumPoly term = NumPoly::constant(p, Rational(bits % 2 ? -1 : 1));
        for (int j = 1; j <= p; ++j) {
            long long b = 0;
            for (int v = e.part.block_begin(j); v < e.part.block_end(j); ++v) b += top[v];
            term = term * binomial_term(p, j - 1, e.part.blocks[j - 1] - b, e.part.blocks[j - 1]);
        }
        out = out + term;
    }
    return out;
}

std::vector<int> rho_embed(const std::vector<int>& a, int m, int n) {
    if (static_cast<int>(a.size()) != m + n) throw input_error("rho_embed tuple length mismatch");
    std::vector<int> out(m + 2 * n, 0);
    for (int i = 0; i < m; ++i) out[i] = a[i];
    for (int j = 0; j < n; ++j) {
        out[m + j] = std::max(a[m + j], 0);
        out[m + n + j] = std::max(-a[m + j], 0);
    }
    return out;
}

NumPoly phi_A(const PointSetNZ& a) {
    a.part.validate();
    const int m = a.part.derivation_count();
    const int n = a.part.num_autos;
    const int p = a.part.block_count();
    for (const auto& pt : a.points) {
        if (static_cast<int>(pt.size()) != m + n) throw input_error("point length differs from m+n");
        for (int i = 0; i < m; ++i)
            if (pt[i] < 0) throw input_error("phi_A derivation coordinates must be nonnegative");
    }

    if (n == 0) {
        PointSetN e{a.points, a.part};
        NumPoly base = omega_E(e);
        // lift to p+1 variables; the sigma variable never appears
        NumPoly out(p + 1);
        for (const auto& [idx, c] : base.coeffs()) {
            MultiIndex lifted = idx;
            lifted.push_back(0);
            out.add_term(lifted, c);
        }
        return out;
    }

    PointSetN b;
    b.part.blocks = a.part.blocks;
    b.part.blocks.push_back(2 * n);
    b.part.num_autos = 0;
    for (const auto& pt : a.points) b.points.push_back(rho_embed(pt, m, n));
    for (int j = 0; j < n; ++j) {
        std::vector<int> unit(m + 2 * n, 0);
        unit[m + j] = 1;
        unit[m + n + j] = 1;
        b.points.push_back(unit);
    }
    return omega_E(b);
}

}  // namespace ddim
