#include "ddim/numpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ddim {

namespace {

void check_nvars(const NumPoly& a, const NumPoly& b) {
    if (a.nvars() != b.nvars()) throw input_error("polynomial variable-count mismatch");
}

long long index_total(const MultiIndex& idx) {
    return std::accumulate(idx.begin(), idx.end(), 0LL);
}

}  // namespace

NumPoly NumPoly::constant(int nvars, const Rational& c) {
    NumPoly p(nvars);
    p.add_term(MultiIndex(nvars, 0), c);
    return p;
}

Rational NumPoly::coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void NumPoly::add_term(const MultiIndex& idx, const Rational& c) {
    if (static_cast<int>(idx.size()) != nvars_) throw input_error("multi-index length mismatch");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

NumPoly NumPoly::operator+(const NumPoly& other) const {
    check_nvars(*this, other);
    NumPoly out = *this;
    for (const auto& [idx, c] : other.coeffs_) out.add_term(idx, c);
    return out;
}

NumPoly NumPoly::operator-(const NumPoly& other) const {
    check_nvars(*this, other);
    NumPoly out = *this;
    for (const auto& [idx, c] : other.coeffs_) out.add_term(idx, -c);
    return out;
}

NumPoly NumPoly::operator*(const NumPoly& other) const {
    check_nvars(*this, other);
    NumPoly out(nvars_);
    for (const auto& [ia, ca] : coeffs_) {
        for (const auto& [ib, cb] : other.coeffs_) {
            MultiIndex idx(nvars_);
            for (int v = 0; v < nvars_; ++v) idx[v] = ia[v] + ib[v];
            out.add_term(idx, ca * cb);
        }
    }
    return out;
}

NumPoly NumPoly::operator-() const { return scaled(Rational(-1)); }

NumPoly NumPoly::scaled(const Rational& c) const {
    NumPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [idx, v] : coeffs_) out.coeffs_[idx] = v * c;
    return out;
}

bool NumPoly::operator==(const NumPoly& other) const {
    return nvars_ == other.nvars_ && coeffs_ == other.coeffs_;
}

Rational NumPoly::evaluate(const std::vector<long long>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw input_error("evaluation point length mismatch");
    Rational total(0);
    for (const auto& [idx, c] : coeffs_) {
        Rational term = c;
        for (int v = 0; v < nvars_; ++v)
            for (int e = 0; e < idx[v]; ++e) term *= point[v];
        total += term;
    }
    return total;
}

std::vector<long long> NumPoly::degrees() const {
    std::vector<long long> d(nvars_, 0);
    for (const auto& [idx, c] : coeffs_)
        for (int v = 0; v < nvars_; ++v) d[v] = std::max<long long>(d[v], idx[v]);
    return d;
}

long long NumPoly::total_degree() const {
    long long d = 0;
    for (const auto& [idx, c] : coeffs_) d = std::max(d, index_total(idx));
    return d;
}

std::string NumPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    // descending total degree, then descending lex
    std::vector<const std::pair<const MultiIndex, Rational>*> order;
    for (const auto& entry : coeffs_) order.push_back(&entry);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        long long ta = index_total(a->first), tb = index_total(b->first);
        if (ta != tb) return ta > tb;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* entry : order) {
        const auto& [idx, c] = *entry;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        for (int v = 0; v < nvars_; ++v) {
            if (idx[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "t" + std::to_string(v + 1);
            if (idx[v] > 1) vars += "^" + std::to_string(idx[v]);
        }
        if (vars.empty()) {
            os << ddim::to_string(mag);
        } else if (mag == 1) {
            os << vars;
        } else {
            os << ddim::to_string(mag) << "*" << vars;
        }
    }
    return os.str();
}

NumPoly binomial_term(int nvars, int var, long long shift, int k) {
    if (k < 0) throw input_error("binomial_term degree must be nonnegative");
    if (var < 0 || var >= nvars) throw input_error("binomial_term variable out of range");
    NumPoly out = NumPoly::constant(nvars, Rational(1));
    for (int i = 0; i < k; ++i) {
        NumPoly factor(nvars);
        MultiIndex unit(nvars, 0);
        unit[var] = 1;
        factor.add_term(unit, Rational(1));
        factor.add_term(MultiIndex(nvars, 0), Rational(shift - i));
        out = out * factor;
    }
    return out.scaled(Rational(1) / rational_factorial(k));
}

BinomialForm canonical_coeffs(const NumPoly& p) {
    BinomialForm form;
    NumPoly residual = p;
    while (!residual.is_zero()) {
        // lexicographically greatest remaining exponent; clearing it only
        // introduces componentwise-smaller (hence lex-smaller) exponents
        const auto it = std::prev(residual.coeffs().end());
        const MultiIndex idx = it->first;
        Rational a = it->second;
        for (int e : idx) a *= rational_factorial(e);
        form[idx] = a;
        NumPoly basis = NumPoly::constant(p.nvars(), Rational(1));
        for (int v = 0; v < p.nvars(); ++v)
            if (idx[v] > 0) basis = basis * binomial_term(p.nvars(), v, idx[v], idx[v]);
        residual = residual - basis.scaled(a);
    }
    return form;
}

NumPoly from_canonical(int nvars, const BinomialForm& form) {
    NumPoly out(nvars);
    for (const auto& [idx, a] : form) {
        NumPoly basis = NumPoly::constant(nvars, Rational(1));
        for (int v = 0; v < nvars; ++v)
            if (idx[v] > 0) basis = basis * binomial_term(nvars, v, idx[v], idx[v]);
        out = out + basis.scaled(a);
    }
    return out;
}

std::string canonical_listing(const BinomialForm& form) {
    if (form.empty()) return "0\n";
    std::ostringstream os;
    for (auto it = form.rbegin(); it != form.rend(); ++it) {
        os << "coeff";
        for (int e : it->first) os << " " << e;
        os << " : " << ddim::to_string(it->second) << "\n";
    }
    return os.str();
}

std::vector<MultiIndex> maximal_elements_lex_family(const std::vector<MultiIndex>& s) {
    if (s.empty()) return {};
    const int d = static_cast<int>(s.front().size());
    for (const auto& e : s)
        if (static_cast<int>(e.size()) != d) throw input_error("mixed multi-index lengths");
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<MultiIndex> found;
    std::vector<int> work = perm;
    do {
        const MultiIndex* best = nullptr;
        for (const auto& e : s) {
            if (!best) {
                best = &e;
                continue;
            }
            // lex comparison along the permuted coordinates
            for (int k = 0; k < d; ++k) {
                int c = work[k];
                if (e[c] != (*best)[c]) {
                    if (e[c] > (*best)[c]) best = &e;
                    break;
                }
            }
        }
        found.insert(*best);
    } while (std::next_permutation(work.begin(), work.end()));
    return {found.begin(), found.end()};
}

InvariantReport invariant_report(const NumPoly& phi, const Partition& part) {
    const int p = part.block_count();
    const int n = part.num_autos;
    if (phi.nvars() != p + 1) throw input_error("invariant report expects p+1 variables");

    MultiIndex caps(p + 1);
    for (int i = 0; i < p; ++i) caps[i] = part.blocks[i];
    caps[p] = n;

    BinomialForm form = canonical_coeffs(phi);
    for (const auto& [idx, a] : form) {
        if (!is_integer(a))
            throw consistency_error("non-integer canonical coefficient " + ddim::to_string(a));
        for (int v = 0; v <= p; ++v)
            if (idx[v] > caps[v])
                throw consistency_error("canonical coefficient exceeds degree cap t" +
                                        std::to_string(v + 1));
    }

    InvariantReport rep;
    rep.total_degree = phi.total_degree();
    auto it = form.find(caps);
    rep.leading_cap_coeff = it == form.end() ? Rational(0) : it->second;
    Rational pow2 = 1;
    for (int i = 0; i < n; ++i) pow2 *= 2;
    rep.trdeg = rep.leading_cap_coeff / pow2;
    if (!is_integer(rep.trdeg))
        throw consistency_error("2^n does not divide the leading cap coefficient " +
                                ddim::to_string(rep.leading_cap_coeff));
    for (const auto& [idx, a] : form) rep.e_set.push_back(idx);
    rep.e_prime = maximal_elements_lex_family(rep.e_set);
    for (const auto& idx : rep.e_prime) rep.fixed_coeffs[idx] = form.at(idx);
    for (const auto& [idx, a] : form)
        if (index_total(idx) == rep.total_degree) rep.top_degree_coeffs[idx] = a;
    return rep;
}

std::string to_string(const InvariantReport& rep) {
    std::ostringstream os;
    os << "total degree d = " << rep.total_degree << "\n";
    os << "leading cap coefficient = " << ddim::to_string(rep.leading_cap_coeff) << "\n";
    os << "delta-sigma transcendence degree = " << ddim::to_string(rep.trdeg) << "\n";
    os << "E' (lex-family maximal positions, with coefficients):\n";
    for (const auto& idx : rep.e_prime) {
        os << "  (";
        for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        os << ") -> " << ddim::to_string(rep.fixed_coeffs.at(idx)) << "\n";
    }
    os << "top-degree canonical coefficients:\n";
    for (const auto& [idx, a] : rep.top_degree_coeffs) {
        os << "  (";
        for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        os << ") -> " << ddim::to_string(a) << "\n";
    }
    return os.str();
}

}  // namespace ddim
