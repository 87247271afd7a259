#pragma once

// The free commutative monoid of power products
//   delta_1^{k_1} ... delta_m^{k_m} alpha_1^{l_1} ... alpha_n^{l_n}
// (derivation exponents natural, automorphism exponents integer), the block
// orders <_1..<_p and <_sigma induced by a partition of the derivations,
// orthant similarity, orthant-restricted divisibility, and least common
// multiples of similar monomials.  Terms attach a monomial to an
// indeterminate (or free module generator) index.

#include <string>
#include <vector>

namespace ddim {

// Partition of the m derivations into p consecutive blocks, plus the number
// n of automorphisms.  Block sizes may be zero so that pure difference
// (m = 0) settings work.
struct Partition {
    std::vector<int> blocks;  // m_1 .. m_p, each >= 0
    int num_autos = 0;        // n

    int derivation_count() const;                       // m
    int block_count() const { return static_cast<int>(blocks.size()); }  // p
    int block_begin(int block) const;                   // 0-based offset, block in 1..p
    int block_end(int block) const;
    void validate() const;
};

struct LambdaMonomial {
    std::vector<int> delta;  // size m, entries >= 0
    std::vector<int> sigma;  // size n, any sign

    static LambdaMonomial identity(int m, int n);
    bool is_identity() const;
    bool delta_trivial() const;  // lambda_Delta == 1

    bool operator==(const LambdaMonomial&) const = default;
    // Structural container order; not one of the term orders.
    bool operator<(const LambdaMonomial& other) const;
};

// A term lambda * y_j (polynomial ring) or lambda * f_j (free module).
struct Term {
    LambdaMonomial mono;
    int indet = 0;  // 0-based generator index

    bool operator==(const Term&) const = default;
    bool operator<(const Term& other) const;
};

// Order selector: kSigmaOrder picks <_sigma, values 1..p pick <_i.
inline constexpr int kSigmaOrder = 0;

long long order_block(const Partition& part, const LambdaMonomial& lam, int block);
long long order_sigma(const LambdaMonomial& lam);
long long order_total(const LambdaMonomial& lam);
long long order_component(const Partition& part, const LambdaMonomial& lam, int order_id);

inline long long order_block(const Partition& part, const Term& t, int block) {
    return order_block(part, t.mono, block);
}
inline long long order_sigma(const Term& t) { return order_sigma(t.mono); }

// Three-way comparison under <_i / <_sigma: -1, 0 or +1.
int compare(const Partition& part, const LambdaMonomial& a, const LambdaMonomial& b, int order_id);
// Same, lifted to terms with the generator index as tie-break.
int compare_terms(const Partition& part, const Term& a, const Term& b, int order_id);

LambdaMonomial multiply(const LambdaMonomial& a, const LambdaMonomial& b);
Term multiply(const LambdaMonomial& a, const Term& t);

// Shared-orthant test on the automorphism exponents (zero coordinates are
// compatible with either sign).
bool similar(const LambdaMonomial& a, const LambdaMonomial& b);
bool similar(const Term& a, const Term& b);

// Orthant-restricted divisibility: a | b iff a ~ b and b = q a with q ~ a.
bool divides(const LambdaMonomial& a, const LambdaMonomial& b);
bool divides(const Term& a, const Term& b);  // additionally requires equal generators

// Exponent quotient b / a; requires divides(a, b).
LambdaMonomial quotient(const LambdaMonomial& b, const LambdaMonomial& a);

// Least common multiple of similar monomials: component-wise max of the
// derivation exponents, sign-preserving max of absolute values on the
// automorphism exponents.  Throws if the inputs are not similar.
LambdaMonomial lcm_similar(const LambdaMonomial& a, const LambdaMonomial& b);
Term lcm_similar(const Term& a, const Term& b);

// Display syntax "d[k1,...,km] s[l1,...,ln]"; identity prints as "1".
std::string to_string(const LambdaMonomial& lam);
std::string to_string(const Term& t, const std::vector<std::string>& names);

}  // namespace ddim
