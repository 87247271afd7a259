#include "ddim/dimpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ddim {

LeaderTable make_leader_table(const Ring& ring, const std::vector<LinearPoly>& charset) {
    LeaderTable table;
    const int p = ring.p();
    for (const auto& el : charset) {
        const Leaders l = leaders(ring, el);
        LeaderEntry e;
        e.v = l.sigma_leader;
        e.u = l.block_leaders;
        e.c = order_sigma(e.v);
        e.a.resize(p);
        e.b.resize(p);
        for (int i = 1; i <= p; ++i) {
            e.a[i - 1] = order_block(ring.part, e.v, i);
            e.b[i - 1] = order_block(ring.part, e.u[i - 1], i);
            if (e.a[i - 1] > e.b[i - 1])
                throw consistency_error("leader table violates a_ij <= b_ij");
        }
        table.entries.push_back(std::move(e));
    }
    return table;
}

NumPoly u1_polynomial(const Ring& ring, const LeaderTable& table, int num_indets) {
    const int p = ring.p();
    NumPoly total(p + 1);
    for (int k = 0; k < num_indets; ++k) {
        PointSetNZ a;
        a.part = ring.part;
        for (const auto& e : table.entries) {
            if (e.v.indet != k) continue;
            std::vector<int> pt = e.v.mono.delta;
            pt.insert(pt.end(), e.v.mono.sigma.begin(), e.v.mono.sigma.end());
            a.points.push_back(std::move(pt));
        }
        total = total + phi_A(a);
    }
    return total;
}

namespace {

// Number of sigma-parts similar to `lead` of order at most
// t_{p+1} - c_sigma, as a polynomial: free-signed coordinates (zero in
// `lead`) contribute the (1+x)^{n0} factor of the generating function.
NumPoly sigma_factor(const Ring& ring, const LambdaMonomial& lead, long long c_sigma) {
    const int n = ring.n();
    const int p = ring.p();
    int zeros = 0;
    for (int l : lead.sigma)
        if (l == 0) ++zeros;
    NumPoly out(p + 1);
    for (int i = 0; i <= zeros; ++i) {
        NumPoly part = binomial_term(p + 1, p, n - c_sigma - i, n);
        out = out + part.scaled(rational_binomial(zeros, i));
    }
    return out;
}

}  // namespace

NumPoly u2_polynomial(const Ring& ring, const LeaderTable& table) {
    const int p = ring.p();
    NumPoly total(p + 1);

    // cluster by indeterminate
    std::map<int, std::vector<int>> clusters;
    for (size_t j = 0; j < table.entries.size(); ++j)
        clusters[table.entries[j].v.indet].push_back(static_cast<int>(j));

    for (const auto& [indet, members] : clusters) {
        const int d = static_cast<int>(members.size());
        if (d > 20) throw input_error("u2_polynomial: too many leaders on one indeterminate");
        for (unsigned long long mask = 1; mask < (1ULL << d); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < d; ++i)
                if (mask >> i & 1) subset.push_back(members[i]);

            bool compatible = true;
            for (size_t x = 0; x + 1 < subset.size() && compatible; ++x)
                for (size_t y = x + 1; y < subset.size() && compatible; ++y)
                    if (!similar(table.entries[subset[x]].v, table.entries[subset[y]].v))
                        compatible = false;
            if (!compatible) continue;

            LambdaMonomial lcm = table.entries[subset[0]].v.mono;
            for (size_t x = 1; x < subset.size(); ++x)
                lcm = lcm_similar(lcm, table.entries[subset[x]].v.mono);

            std::vector<long long> c_block(p);
            for (int i = 1; i <= p; ++i) c_block[i - 1] = order_block(ring.part, lcm, i);
            const NumPoly sig = sigma_factor(ring, lcm, order_sigma(lcm));

            // A term belongs to U^(2) when it is a leader multiple and
            // every divisor representation overflows some block bound:
            // count (union of multiple sets) minus (union of sets with a
            // within-bounds representation).  Both intersections collapse
            // onto the subset lcm; a representation for element l stays
            // within bounds iff ord_k mu <= t_k - c^(k) - (b-a)_{k,l} for
            // every block, so the second product shifts by
            // S_k = max over the subset of b - a.
            NumPoly multiples = NumPoly::constant(p + 1, Rational(1));
            NumPoly covered = NumPoly::constant(p + 1, Rational(1));
            for (int k = 1; k <= p; ++k) {
                long long cap = 0;
                for (int x : subset) {
                    const auto& e = table.entries[x];
                    cap = std::max(cap, e.b[k - 1] - e.a[k - 1]);
                }
                const int mk = ring.part.blocks[k - 1];
                multiples = multiples * binomial_term(p + 1, k - 1, mk - c_block[k - 1], mk);
                covered = covered * binomial_term(p + 1, k - 1, mk - c_block[k - 1] - cap, mk);
            }
            const NumPoly contribution = (multiples - covered) * sig;
            total = subset.size() % 2 ? total + contribution : total - contribution;
        }
    }
    return total;
}

std::vector<long long> stability_offsets(const Ring& ring, const LeaderTable& table) {
    const int p = ring.p();
    std::vector<long long> off(p + 1, 0);
    for (const auto& e : table.entries) {
        for (int k = 0; k < p; ++k) off[k] += e.b[k];
        off[p] += e.c;
    }
    off[p] += ring.n();  // phi_A's paired-unit points and the free-sign shifts
    return off;
}

DimensionReport assemble_report(const Ring& ring, std::vector<LinearPoly> charset, int num_indets) {
    DimensionReport rep;
    rep.charset = std::move(charset);
    const LeaderTable table = make_leader_table(ring, rep.charset);
    rep.u1_part = u1_polynomial(ring, table, num_indets);
    rep.u2_part = u2_polynomial(ring, table);
    rep.phi = rep.u1_part + rep.u2_part;
    rep.invariants = invariant_report(rep.phi, ring.part);
    rep.stability = stability_offsets(ring, table);
    return rep;
}

DimensionReport dimension_polynomial(const Ring& ring, const std::vector<LinearPoly>& generators,
                                     int max_rounds) {
    return assemble_report(ring, charset_linear_system(ring, generators, max_rounds),
                           ring.num_indets());
}

std::string strength_report(const Ring& ring, const DimensionReport& report,
                            const std::vector<std::pair<long long, long long>>& grid) {
    const int p = ring.p();
    std::ostringstream os;
    os << "characteristic set (" << report.charset.size() << " elements):\n";
    for (const auto& el : report.charset) os << "  " << to_string(ring, el) << "\n";
    os << "Phi = " << report.phi.to_string() << "\n";
    os << "Card U1 = " << report.u1_part.to_string() << "\n";
    os << "Card U2 = " << report.u2_part.to_string() << "\n";
    os << "canonical coefficients:\n" << canonical_listing(canonical_coeffs(report.phi));
    os << to_string(report.invariants);
    os << "stability offsets:";
    for (long long s : report.stability) os << " " << s;
    os << "\n";
    if (static_cast<int>(grid.size()) == p + 1) {
        os << "value table (r1..r" << p + 1 << " -> Phi):\n";
        std::vector<long long> r(p + 1);
        for (int i = 0; i <= p; ++i) r[i] = grid[i].first;
        while (true) {
            os << " ";
            for (long long v : r) os << " " << v;
            os << " -> " << ddim::to_string(report.phi.evaluate(r)) << "\n";
            int i = p;
            while (i >= 0 && r[i] == grid[i].second) --i;
            if (i < 0) break;
            ++r[i];
            for (int j = i + 1; j <= p; ++j) r[j] = grid[j].first;
        }
    }
    os << "For all sufficiently large truncation orders (r1,...,r" << p + 1
       << "), Phi(r1,...,r" << p + 1
       << ") equals the number of freely choosable coefficients of order at most r_i in each "
          "derivation block and at most r"
       << p + 1
       << " in the shifts: the strength of the system in the sense of Einstein.\n";
    return os.str();
}

}  // namespace ddim
