#include "ddim/linpoly.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace ddim {

void Ring::validate() const {
    part.validate();
    if (indets.empty()) throw input_error("ring needs at least one indeterminate");
}

void LinearPoly::add_term(const Term& t, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(t, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Coefficient LinearPoly::coeff(const Term& t) const {
    auto it = terms.find(t);
    return it == terms.end() ? Coefficient() : it->second;
}

LinearPoly LinearPoly::operator+(const LinearPoly& other) const {
    LinearPoly out = *this;
    for (const auto& [t, c] : other.terms) out.add_term(t, c);
    out.constant = out.constant + other.constant;
    return out;
}

LinearPoly LinearPoly::operator-(const LinearPoly& other) const { return *this + (-other); }

LinearPoly LinearPoly::operator-() const { return scaled(Coefficient(Rational(-1))); }

LinearPoly LinearPoly::scaled(const Coefficient& c) const {
    LinearPoly out;
    if (c.is_zero()) return out;
    for (const auto& [t, v] : terms) out.add_term(t, c * v);
    out.constant = c * constant;
    return out;
}

namespace {

LinearPoly derivation_step(const Ring& ring, int k, const LinearPoly& a) {
    LinearPoly out;
    for (const auto& [t, c] : a.terms) {
        Term lifted = t;
        lifted.mono.delta[k] += 1;
        out.add_term(lifted, c);
        if (ring.model == CoefficientModel::formal_symbols) out.add_term(t, c.derived(k));
    }
    if (ring.model == CoefficientModel::formal_symbols) out.constant = a.constant.derived(k);
    return out;
}

}  // namespace

LinearPoly apply(const Ring& ring, const LambdaMonomial& lam, const LinearPoly& a) {
    LinearPoly out;
    const bool shiftless = std::all_of(lam.sigma.begin(), lam.sigma.end(), [](int l) { return l == 0; });
    if (shiftless) {
        out = a;
    } else {
        for (const auto& [t, c] : a.terms) {
            Term shifted = t;
            for (size_t j = 0; j < lam.sigma.size(); ++j) shifted.mono.sigma[j] += lam.sigma[j];
            out.add_term(shifted, c.shifted(lam.sigma));
        }
        out.constant = a.constant.shifted(lam.sigma);
    }
    for (size_t k = 0; k < lam.delta.size(); ++k)
        for (int rep = 0; rep < lam.delta[k]; ++rep) out = derivation_step(ring, static_cast<int>(k), out);
    return out;
}

Leaders leaders(const Ring& ring, const LinearPoly& a) {
    if (a.is_constant()) throw input_error("constant polynomial has no leaders");
    Leaders out;
    const int p = ring.p();
    out.block_leaders.resize(p);
    bool first = true;
    for (const auto& [t, c] : a.terms) {
        if (first) {
            out.sigma_leader = t;
            for (int i = 0; i < p; ++i) out.block_leaders[i] = t;
            first = false;
            continue;
        }
        if (compare_terms(ring.part, out.sigma_leader, t, kSigmaOrder) < 0) out.sigma_leader = t;
        for (int i = 1; i <= p; ++i)
            if (compare_terms(ring.part, out.block_leaders[i - 1], t, i) < 0) out.block_leaders[i - 1] = t;
    }
    return out;
}

int rank_compare(const Ring& ring, const LinearPoly& a, const LinearPoly& b) {
    const bool ca = a.is_constant(), cb = b.is_constant();
    if (ca && cb) return 0;
    if (ca) return -1;
    if (cb) return 1;
    const Leaders la = leaders(ring, a), lb = leaders(ring, b);
    int c = compare_terms(ring.part, la.sigma_leader, lb.sigma_leader, kSigmaOrder);
    if (c != 0) return c;
    for (int i = 1; i <= ring.p(); ++i) {
        long long oa = order_block(ring.part, la.block_leaders[i - 1], i);
        long long ob = order_block(ring.part, lb.block_leaders[i - 1], i);
        if (oa != ob) return oa < ob ? -1 : 1;
    }
    return 0;
}

namespace {

// A term w = lambda * v_A of B is eliminable against A when lambda has a
// nontrivial derivation part and the block orders of lambda u_A^{(j)} stay
// within those of B's block leaders, or unconditionally when lambda is a
// pure shift.
bool eliminable(const Ring& ring, const Term& w, const Leaders& la,
                const std::vector<long long>& b_block_orders) {
    if (!divides(la.sigma_leader, w)) return false;
    const LambdaMonomial lam = quotient(w.mono, la.sigma_leader.mono);
    if (lam.delta_trivial()) return true;
    for (int j = 1; j <= ring.p(); ++j) {
        long long lhs = order_block(ring.part, lam, j) + order_block(ring.part, la.block_leaders[j - 1], j);
        if (lhs > b_block_orders[j - 1]) return false;
    }
    return true;
}

std::vector<long long> block_leader_orders(const Ring& ring, const LinearPoly& b) {
    const Leaders lb = leaders(ring, b);
    std::vector<long long> out(ring.p());
    for (int j = 1; j <= ring.p(); ++j) out[j - 1] = order_block(ring.part, lb.block_leaders[j - 1], j);
    return out;
}

}  // namespace

bool is_reduced(const Ring& ring, const LinearPoly& b, const LinearPoly& a) {
    if (a.is_constant()) throw input_error("reduction against a constant");
    if (b.is_constant()) return true;
    const Leaders la = leaders(ring, a);
    const auto orders = block_leader_orders(ring, b);
    for (const auto& [w, c] : b.terms)
        if (eliminable(ring, w, la, orders)) return false;
    return true;
}

bool is_reduced(const Ring& ring, const LinearPoly& b, const std::vector<LinearPoly>& sigma) {
    return std::all_of(sigma.begin(), sigma.end(),
                       [&](const LinearPoly& a) { return is_reduced(ring, b, a); });
}

void Operator::add(const LambdaMonomial& lam, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = parts.emplace(lam, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) parts.erase(it);
    }
}

Operator Operator::scaled(const Coefficient& c) const {
    Operator out;
    if (c.is_zero()) return out;
    for (const auto& [lam, v] : parts) out.add(lam, c * v);
    return out;
}

LinearPoly apply(const Ring& ring, const Operator& op, const LinearPoly& a) {
    LinearPoly out;
    for (const auto& [lam, c] : op.parts) out = out + apply(ring, lam, a).scaled(c);
    return out;
}

ReductionResult reduce_unchecked(const Ring& ring, const LinearPoly& b,
                                 const std::vector<LinearPoly>& sigma) {
    ReductionResult res;
    res.normal_form = b;
    res.j_factor = Coefficient(Rational(1));
    res.multipliers.assign(sigma.size(), Operator{});

    std::vector<Leaders> ls;
    ls.reserve(sigma.size());
    for (const auto& a : sigma) ls.push_back(leaders(ring, a));

    while (!res.normal_form.is_constant()) {
        const auto orders = block_leader_orders(ring, res.normal_form);
        // greatest eliminable term, then the divisor with the greatest leader
        std::optional<Term> best;
        int chosen = -1;
        for (const auto& [w, c] : res.normal_form.terms) {
            int divisor = -1;
            for (size_t i = 0; i < sigma.size(); ++i) {
                if (!eliminable(ring, w, ls[i], orders)) continue;
                if (divisor < 0 ||
                    compare_terms(ring.part, ls[divisor].sigma_leader, ls[i].sigma_leader, kSigmaOrder) < 0)
                    divisor = static_cast<int>(i);
            }
            if (divisor < 0) continue;
            if (!best || compare_terms(ring.part, *best, w, kSigmaOrder) < 0) {
                best = w;
                chosen = divisor;
            }
        }
        if (!best) break;

        const LambdaMonomial lam = quotient(best->mono, ls[chosen].sigma_leader.mono);
        const Coefficient c_w = res.normal_form.coeff(*best);
        const Coefficient lead = sigma[chosen].coeff(ls[chosen].sigma_leader).shifted(lam.sigma);
        const LinearPoly image = apply(ring, lam, sigma[chosen]);
        if (lead.is_rational()) {
            const Coefficient factor = c_w * Coefficient(Rational(1) / lead.rational_value());
            res.normal_form = res.normal_form - image.scaled(factor);
            res.multipliers[chosen].add(lam, factor);
        } else {
            res.j_factor = res.j_factor * lead;
            res.normal_form = res.normal_form.scaled(lead) - image.scaled(c_w);
            for (auto& q : res.multipliers) q = q.scaled(lead);
            res.multipliers[chosen].add(lam, c_w);
        }
    }
    return res;
}

ReductionResult reduce(const Ring& ring, const LinearPoly& b, const std::vector<LinearPoly>& sigma) {
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i].is_constant()) throw input_error("reduction set contains a constant");
        for (size_t j = 0; j < sigma.size(); ++j)
            if (i != j && !is_reduced(ring, sigma[i], sigma[j]))
                throw input_error("reduction set is not autoreduced");
    }
    return reduce_unchecked(ring, b, sigma);
}

namespace {

// Monic where possible: divide by a rational initial; otherwise clear the
// rational multiplier of the initial's first token monomial.
LinearPoly normalize_leading(const Ring& ring, const LinearPoly& a) {
    if (a.is_zero() || a.is_constant()) return a;
    const Leaders la = leaders(ring, a);
    const Coefficient lead = a.coeff(la.sigma_leader);
    Rational scale;
    if (lead.is_rational())
        scale = lead.rational_value();
    else
        scale = lead.parts().begin()->second;
    return a.scaled(Coefficient(Rational(1) / scale));
}

}  // namespace

std::vector<LinearPoly> autoreduce(const Ring& ring, std::vector<LinearPoly> polys) {
    std::vector<LinearPoly> work;
    for (auto& a : polys)
        if (!a.is_zero()) work.push_back(normalize_leading(ring, a));

    const auto rank_sort = [&](std::vector<LinearPoly>& v) {
        std::stable_sort(v.begin(), v.end(), [&](const LinearPoly& x, const LinearPoly& y) {
            return rank_compare(ring, x, y) < 0;
        });
    };

    for (int guard = 0; guard < 100000; ++guard) {
        rank_sort(work);
        bool changed = false;
        for (size_t i = 0; i < work.size(); ++i) {
            if (work[i].is_constant()) continue;
            std::vector<LinearPoly> others;
            for (size_t j = 0; j < work.size(); ++j)
                if (j != i && !work[j].is_constant()) others.push_back(work[j]);
            if (others.empty()) continue;
            auto red = reduce_unchecked(ring, work[i], others);
            if (red.normal_form == work[i]) continue;
            changed = true;
            if (red.normal_form.is_zero())
                work.erase(work.begin() + static_cast<long>(i));
            else
                work[i] = normalize_leading(ring, red.normal_form);
            break;
        }
        if (!changed) {
            rank_sort(work);
            return work;
        }
    }
    throw consistency_error("autoreduction failed to stabilize");
}

namespace {

// Sigma-shift witnesses: all shift vectors with each |l_j| <= radius,
// excluding the identity.
std::vector<LambdaMonomial> shift_box(const Ring& ring, int radius) {
    std::vector<LambdaMonomial> out;
    const int n = ring.n();
    if (n == 0) return out;
    std::vector<int> shift(n, -radius);
    while (true) {
        if (std::any_of(shift.begin(), shift.end(), [](int l) { return l != 0; })) {
            LambdaMonomial lam = LambdaMonomial::identity(ring.m(), n);
            lam.sigma = shift;
            out.push_back(lam);
        }
        int j = 0;
        while (j < n && shift[j] == radius) shift[j++] = -radius;
        if (j == n) break;
        ++shift[j];
    }
    return out;
}

int sigma_spread(const LinearPoly& a) {
    long long spread = 0;
    for (const auto& [t, c] : a.terms)
        for (const auto& [u, d] : a.terms)
            spread = std::max(spread, std::abs(order_sigma(t) - order_sigma(u)));
    return static_cast<int>(spread) + 1;
}

// Coherence witnesses for one element: sigma shifts within its spread
// radius, optionally composed with one derivation.
std::vector<LambdaMonomial> coherence_witnesses(const Ring& ring, const LinearPoly& a) {
    std::vector<LambdaMonomial> out;
    for (int k = 0; k < ring.m(); ++k) {
        LambdaMonomial lam = LambdaMonomial::identity(ring.m(), ring.n());
        lam.delta[k] = 1;
        out.push_back(lam);
    }
    for (const auto& shift : shift_box(ring, sigma_spread(a))) {
        out.push_back(shift);
        for (int k = 0; k < ring.m(); ++k) {
            LambdaMonomial lam = shift;
            lam.delta[k] = 1;
            out.push_back(lam);
        }
    }
    return out;
}

// The lcm S-polynomial of a similar-leader pair, with the initials'
// shifted images cross-multiplied so the leading terms cancel.
LinearPoly s_polynomial(const Ring& ring, const LinearPoly& a, const Leaders& la,
                        const LinearPoly& b, const Leaders& lb) {
    const Term w = lcm_similar(la.sigma_leader, lb.sigma_leader);
    const LambdaMonomial qa = quotient(w.mono, la.sigma_leader.mono);
    const LambdaMonomial qb = quotient(w.mono, lb.sigma_leader.mono);
    const Coefficient ia = a.coeff(la.sigma_leader).shifted(qa.sigma);
    const Coefficient ib = b.coeff(lb.sigma_leader).shifted(qb.sigma);
    return apply(ring, qa, a).scaled(ib) - apply(ring, qb, b).scaled(ia);
}

// Nonzero normal forms of all coherence witnesses of Sigma.
std::vector<LinearPoly> coherence_defects(const Ring& ring, const std::vector<LinearPoly>& sigma) {
    std::vector<LinearPoly> defects;
    std::vector<Leaders> ls;
    for (const auto& a : sigma) ls.push_back(leaders(ring, a));
    for (const auto& a : sigma) {
        for (const auto& lam : coherence_witnesses(ring, a)) {
            auto red = reduce_unchecked(ring, apply(ring, lam, a), sigma);
            if (!red.normal_form.is_zero()) defects.push_back(red.normal_form);
        }
    }
    for (size_t i = 0; i < sigma.size(); ++i) {
        for (size_t j = i + 1; j < sigma.size(); ++j) {
            if (ls[i].sigma_leader.indet != ls[j].sigma_leader.indet) continue;
            if (!similar(ls[i].sigma_leader, ls[j].sigma_leader)) continue;
            auto red =
                reduce_unchecked(ring, s_polynomial(ring, sigma[i], ls[i], sigma[j], ls[j]), sigma);
            if (!red.normal_form.is_zero()) defects.push_back(red.normal_form);
        }
    }
    return defects;
}

}  // namespace

bool is_coherent(const Ring& ring, const std::vector<LinearPoly>& sigma) {
    for (const auto& a : sigma)
        if (a.is_constant()) return false;
    return coherence_defects(ring, sigma).empty();
}

std::vector<LinearPoly> charset_single_candidates(const Ring& ring, const LinearPoly& a) {
    if (a.is_zero()) return {};
    if (a.is_constant()) throw input_error("characteristic set of a constant");
    const int radius = sigma_spread(a);

    std::vector<LinearPoly> cands{normalize_leading(ring, a)};
    for (const auto& shift : shift_box(ring, radius))
        cands.push_back(normalize_leading(ring, apply(ring, shift, a)));

    std::stable_sort(cands.begin(), cands.end(), [&](const LinearPoly& x, const LinearPoly& y) {
        return rank_compare(ring, x, y) < 0;
    });
    std::vector<LinearPoly> kept;
    std::vector<Term> kept_leaders;
    for (const auto& cand : cands) {
        const Term v = leaders(ring, cand).sigma_leader;
        bool dominated = false;
        for (const auto& lead : kept_leaders)
            if (divides(lead, v)) {
                dominated = true;
                break;
            }
        if (!dominated) {
            kept.push_back(cand);
            kept_leaders.push_back(v);
        }
    }
    return kept;
}

std::vector<LinearPoly> charset_single(const Ring& ring, const LinearPoly& a) {
    auto out = charset_single_candidates(ring, a);
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j)
            if (i != j && !is_reduced(ring, out[i], out[j]))
                throw consistency_error("minimal shift multiples are not autoreduced");
    if (!is_coherent(ring, out))
        throw consistency_error("minimal shift multiples are not coherent");
    return out;
}

std::vector<LinearPoly> charset_linear_system(const Ring& ring,
                                              const std::vector<LinearPoly>& generators,
                                              int max_rounds) {
    std::vector<LinearPoly> work;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (g.is_constant()) throw input_error("inconsistent system: constant generator");
        auto cands = charset_single_candidates(ring, g);
        work.insert(work.end(), cands.begin(), cands.end());
    }
    if (work.empty()) return {};

    for (int round = 0; round < max_rounds; ++round) {
        if (getenv("DDIM_TRACE")) fprintf(stderr, "[round %d] work=%zu\n", round, work.size());
        std::vector<LinearPoly> sigma = autoreduce(ring, work);
        if (getenv("DDIM_TRACE")) fprintf(stderr, "[round %d] sigma=%zu\n", round, sigma.size());
        if (sigma.empty()) return {};
        for (const auto& el : sigma)
            if (el.is_constant())
                throw input_error("inconsistent system: ideal contains a nonzero constant");
        auto defects = coherence_defects(ring, sigma);
        if (defects.empty()) return sigma;
        work = sigma;
        for (const auto& d : defects) {
            auto cands = charset_single_candidates(ring, d);
            work.insert(work.end(), cands.begin(), cands.end());
        }
    }
    throw consistency_error("characteristic-set completion exceeded " +
                            std::to_string(max_rounds) + " rounds");
}

bool ideal_membership(const Ring& ring, const LinearPoly& b,
                      const std::vector<LinearPoly>& charset) {
    if (b.is_zero()) return true;
    if (charset.empty()) return false;
    return reduce_unchecked(ring, b, charset).normal_form.is_zero();
}

std::string to_string(const Ring& ring, const LinearPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // terms in descending sigma order for readability
    std::vector<const std::pair<const Term, Coefficient>*> order;
    for (const auto& entry : a.terms) order.push_back(&entry);
    std::sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
        return compare_terms(ring.part, x->first, y->first, kSigmaOrder) > 0;
    });
    auto emit = [&](const Coefficient& c, const std::string& tail) {
        std::string body;
        bool negative = false;
        if (c.is_rational()) {
            Rational r = c.rational_value();
            negative = r < 0;
            Rational mag = negative ? Rational(-r) : r;
            if (tail.empty() || mag != 1) {
                body = ddim::to_string(mag);
                if (!tail.empty()) body += "*";
            }
        } else if (c.parts().size() == 1) {
            Rational r = c.parts().begin()->second;
            negative = r < 0;
            Coefficient mag = negative ? -c : c;
            body = mag.to_string();
            if (!tail.empty()) body += "*";
        } else {
            body = "(" + c.to_string() + ")";
            if (!tail.empty()) body += "*";
        }
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        os << body << tail;
        first = false;
    };
    for (const auto* entry : order) emit(entry->second, ddim::to_string(entry->first, ring.indets));
    if (!a.constant.is_zero()) emit(a.constant, "");
    return os.str();
}

}  // namespace ddim
