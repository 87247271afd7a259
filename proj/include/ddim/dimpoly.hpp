#pragma once

// The dimension polynomial of a linear system from a characteristic set:
// U^(1) counts the terms free of leader multiples (via phi_A on the leader
// exponents), U^(2) counts the leader multiples that escape the truncation
// in some derivation block (lcm-based inclusion-exclusion over subsets of
// elements with pairwise similar sigma-leaders on one indeterminate).

#include "ddim/linpoly.hpp"
#include "ddim/numpoly.hpp"
#include "ddim/setdim.hpp"

#include <string>
#include <vector>

namespace ddim {

struct LeaderEntry {
    Term v;                        // sigma-leader
    std::vector<Term> u;           // block leaders u^{(1)} .. u^{(p)}
    std::vector<long long> a;      // a_i = ord_i v
    std::vector<long long> b;      // b_i = ord_i u^{(i)}
    long long c = 0;               // ord_sigma v
};

struct LeaderTable {
    std::vector<LeaderEntry> entries;
};

LeaderTable make_leader_table(const Ring& ring, const std::vector<LinearPoly>& charset);

NumPoly u1_polynomial(const Ring& ring, const LeaderTable& table, int num_indets);
NumPoly u2_polynomial(const Ring& ring, const LeaderTable& table);

// Componentwise thresholds from which every binomial in the closed forms
// counts exactly, so polynomial values equal enumerated cardinalities.
std::vector<long long> stability_offsets(const Ring& ring, const LeaderTable& table);

struct DimensionReport {
    NumPoly phi;
    NumPoly u1_part;
    NumPoly u2_part;
    InvariantReport invariants;
    std::vector<LinearPoly> charset;
    std::vector<long long> stability;
};

// charset_linear_system -> u1 + u2 -> invariant extraction.
DimensionReport dimension_polynomial(const Ring& ring, const std::vector<LinearPoly>& generators,
                                     int max_rounds = 1000);

// Report assembly from an already computed characteristic set / Groebner
// basis (shared by the module route).
DimensionReport assemble_report(const Ring& ring, std::vector<LinearPoly> charset, int num_indets);

// Plain-text report: polynomial, canonical listing, invariants, a value
// table on the given inclusive per-variable ranges, and the
// Einstein-strength reading of the values.
std::string strength_report(const Ring& ring, const DimensionReport& report,
                            const std::vector<std::pair<long long, long long>>& grid);

}  // namespace ddim
