#include "ddim/lambda.hpp"

#include "ddim/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace ddim {

namespace {

void check_dims(const LambdaMonomial& a, const LambdaMonomial& b) {
    if (a.delta.size() != b.delta.size() || a.sigma.size() != b.sigma.size())
        throw input_error("monomial dimension mismatch");
}

int checked_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    if (s > 1000000000LL || s < -1000000000LL)
        throw input_error("monomial exponent overflow");
    return static_cast<int>(s);
}

// Signs compatible: never strictly opposite.
bool orthant_compatible(int a, int b) {
    return static_cast<long long>(a) * b >= 0;
}

}  // namespace

int Partition::derivation_count() const {
    int m = 0;
    for (int b : blocks) m += b;
    return m;
}

int Partition::block_begin(int block) const {
    int off = 0;
    for (int i = 1; i < block; ++i) off += blocks[i - 1];
    return off;
}

int Partition::block_end(int block) const { return block_begin(block) + blocks[block - 1]; }

void Partition::validate() const {
    if (blocks.empty()) throw input_error("partition needs at least one block");
    for (int b : blocks)
        if (b < 0) throw input_error("negative partition block size");
    if (num_autos < 0) throw input_error("negative automorphism count");
}

LambdaMonomial LambdaMonomial::identity(int m, int n) {
    LambdaMonomial lam;
    lam.delta.assign(m, 0);
    lam.sigma.assign(n, 0);
    return lam;
}

bool LambdaMonomial::is_identity() const {
    return delta_trivial() && std::all_of(sigma.begin(), sigma.end(), [](int l) { return l == 0; });
}

bool LambdaMonomial::delta_trivial() const {
    return std::all_of(delta.begin(), delta.end(), [](int k) { return k == 0; });
}

bool LambdaMonomial::operator<(const LambdaMonomial& other) const {
    if (delta != other.delta) return delta < other.delta;
    return sigma < other.sigma;
}

bool Term::operator<(const Term& other) const {
    if (indet != other.indet) return indet < other.indet;
    return mono < other.mono;
}

long long order_block(const Partition& part, const LambdaMonomial& lam, int block) {
    if (block < 1 || block > part.block_count()) throw input_error("block index out of range");
    long long s = 0;
    for (int i = part.block_begin(block); i < part.block_end(block); ++i) s += lam.delta[i];
    return s;
}

long long order_sigma(const LambdaMonomial& lam) {
    long long s = 0;
    for (int l : lam.sigma) s += std::abs(static_cast<long long>(l));
    return s;
}

long long order_total(const LambdaMonomial& lam) {
    long long s = order_sigma(lam);
    for (int k : lam.delta) s += k;
    return s;
}

long long order_component(const Partition& part, const LambdaMonomial& lam, int order_id) {
    if (order_id == kSigmaOrder) return order_sigma(lam);
    return order_block(part, lam, order_id);
}

namespace {

// The (m + 2n + p + 2)-tuple whose lexicographic comparison realizes <_i
// or <_sigma.
std::vector<long long> order_tuple(const Partition& part, const LambdaMonomial& lam, int order_id) {
    const int p = part.block_count();
    std::vector<long long> ords(p + 1);
    for (int i = 1; i <= p; ++i) ords[i] = order_block(part, lam, i);
    const long long osig = order_sigma(lam);
    long long ototal = osig;
    for (int i = 1; i <= p; ++i) ototal += ords[i];

    std::vector<long long> t;
    t.reserve(lam.delta.size() + 2 * lam.sigma.size() + p + 2);
    if (order_id == kSigmaOrder) {
        // (ord_sigma, ord, ord_1..ord_p, |l|, l, k)
        t.push_back(osig);
        t.push_back(ototal);
        for (int i = 1; i <= p; ++i) t.push_back(ords[i]);
        for (int l : lam.sigma) t.push_back(std::abs(static_cast<long long>(l)));
        for (int l : lam.sigma) t.push_back(l);
        for (int k : lam.delta) t.push_back(k);
    } else {
        // (ord_i, ord, ord_1..ord_{i-1}, ord_{i+1}..ord_p, ord_sigma,
        //  block-i exponents, earlier-block exponents, later-block
        //  exponents, |l|, l)
        const int i = order_id;
        t.push_back(ords[i]);
        t.push_back(ototal);
        for (int j = 1; j <= p; ++j)
            if (j != i) t.push_back(ords[j]);
        t.push_back(osig);
        for (int v = part.block_begin(i); v < part.block_end(i); ++v) t.push_back(lam.delta[v]);
        for (int v = 0; v < part.block_begin(i); ++v) t.push_back(lam.delta[v]);
        for (int v = part.block_end(i); v < static_cast<int>(lam.delta.size()); ++v)
            t.push_back(lam.delta[v]);
        for (int l : lam.sigma) t.push_back(std::abs(static_cast<long long>(l)));
        for (int l : lam.sigma) t.push_back(l);
    }
    return t;
}

}  // namespace

int compare(const Partition& part, const LambdaMonomial& a, const LambdaMonomial& b, int order_id) {
    check_dims(a, b);
    const auto ta = order_tuple(part, a, order_id);
    const auto tb = order_tuple(part, b, order_id);
    if (ta < tb) return -1;
    if (tb < ta) return 1;
    return 0;
}

int compare_terms(const Partition& part, const Term& a, const Term& b, int order_id) {
    int c = compare(part, a.mono, b.mono, order_id);
    if (c != 0) return c;
    if (a.indet != b.indet) return a.indet < b.indet ? -1 : 1;
    return 0;
}

LambdaMonomial multiply(const LambdaMonomial& a, const LambdaMonomial& b) {
    check_dims(a, b);
    LambdaMonomial out = a;
    for (size_t i = 0; i < out.delta.size(); ++i) out.delta[i] = checked_add(out.delta[i], b.delta[i]);
    for (size_t i = 0; i < out.sigma.size(); ++i) out.sigma[i] = checked_add(out.sigma[i], b.sigma[i]);
    return out;
}

Term multiply(const LambdaMonomial& a, const Term& t) {
    return Term{multiply(a, t.mono), t.indet};
}

bool similar(const LambdaMonomial& a, const LambdaMonomial& b) {
    if (a.sigma.size() != b.sigma.size()) throw input_error("monomial dimension mismatch");
    for (size_t j = 0; j < a.sigma.size(); ++j)
        if (!orthant_compatible(a.sigma[j], b.sigma[j])) return false;
    return true;
}

bool similar(const Term& a, const Term& b) { return similar(a.mono, b.mono); }

bool divides(const LambdaMonomial& a, const LambdaMonomial& b) {
    check_dims(a, b);
    for (size_t i = 0; i < a.delta.size(); ++i)
        if (a.delta[i] > b.delta[i]) return false;
    for (size_t j = 0; j < a.sigma.size(); ++j) {
        if (!orthant_compatible(a.sigma[j], b.sigma[j])) return false;
        if (std::abs(static_cast<long long>(a.sigma[j])) > std::abs(static_cast<long long>(b.sigma[j])))
            return false;
    }
    return true;
}

bool divides(const Term& a, const Term& b) {
    return a.indet == b.indet && divides(a.mono, b.mono);
}

LambdaMonomial quotient(const LambdaMonomial& b, const LambdaMonomial& a) {
    if (!divides(a, b)) throw input_error("quotient of non-divisible monomials");
    LambdaMonomial out = b;
    for (size_t i = 0; i < out.delta.size(); ++i) out.delta[i] -= a.delta[i];
    for (size_t j = 0; j < out.sigma.size(); ++j) out.sigma[j] -= a.sigma[j];
    return out;
}

LambdaMonomial lcm_similar(const LambdaMonomial& a, const LambdaMonomial& b) {
    if (!similar(a, b)) throw input_error("lcm of non-similar monomials");
    LambdaMonomial out = a;
    for (size_t i = 0; i < out.delta.size(); ++i) out.delta[i] = std::max(a.delta[i], b.delta[i]);
    for (size_t j = 0; j < out.sigma.size(); ++j)
        out.sigma[j] = std::abs(a.sigma[j]) >= std::abs(b.sigma[j]) ? a.sigma[j] : b.sigma[j];
    return out;
}

Term lcm_similar(const Term& a, const Term& b) {
    if (a.indet != b.indet) throw input_error("lcm of terms with different generators");
    return Term{lcm_similar(a.mono, b.mono), a.indet};
}

std::string to_string(const LambdaMonomial& lam) {
    if (lam.is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    if (!lam.delta.empty()) {
        os << "d[";
        for (size_t i = 0; i < lam.delta.size(); ++i) os << (i ? "," : "") << lam.delta[i];
        os << "]";
        first = false;
    }
    if (!lam.sigma.empty()) {
        if (!first) os << " ";
        os << "s[";
        for (size_t i = 0; i < lam.sigma.size(); ++i) os << (i ? "," : "") << lam.sigma[i];
        os << "]";
    }
    return os.str();
}

std::string to_string(const Term& t, const std::vector<std::string>& names) {
    std::string name = t.indet < static_cast<int>(names.size()) ? names[t.indet]
                                                                : "y" + std::to_string(t.indet + 1);
    if (t.mono.is_identity()) return name;
    return to_string(t.mono) + " " + name;
}

}  // namespace ddim
