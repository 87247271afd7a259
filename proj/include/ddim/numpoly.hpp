#pragma once

// Exact-arithmetic polynomials in several variables, their canonical
// representation over the binomial basis prod_j C(t_j + i_j, i_j), and the
// invariant extraction used by dimension polynomials (total degree, leading
// cap coefficient, transcendence degree, the E' family of lex-maximal
// coefficient positions).

#include "ddim/lambda.hpp"
#include "ddim/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace ddim {

using MultiIndex = std::vector<int>;

class NumPoly {
public:
    NumPoly() = default;
    explicit NumPoly(int nvars) : nvars_(nvars) {}
    static NumPoly constant(int nvars, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<MultiIndex, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const MultiIndex& idx) const;
    void add_term(const MultiIndex& idx, const Rational& c);

    NumPoly operator+(const NumPoly& other) const;
    NumPoly operator-(const NumPoly& other) const;
    NumPoly operator*(const NumPoly& other) const;
    NumPoly operator-() const;
    NumPoly scaled(const Rational& c) const;
    bool operator==(const NumPoly& other) const;

    Rational evaluate(const std::vector<long long>& point) const;

    std::vector<long long> degrees() const;  // per-variable degrees (0 for zero poly)
    long long total_degree() const;

    // Expanded display "t1*t2 + 4*t1*t3 + ... + 1", terms by descending
    // total degree, then descending lexicographic exponent order.
    std::string to_string() const;

private:
    int nvars_ = 0;
    std::map<MultiIndex, Rational> coeffs_;  // monomial basis, no zero entries
};

// The polynomial C(t_var + shift, k); C(., 0) == 1.  k must be >= 0.
NumPoly binomial_term(int nvars, int var, long long shift, int k);

// Canonical coefficients over the basis prod_j C(t_j + i_j, i_j); the
// mapping is triangular and exact.  Round-trips with from_canonical.
using BinomialForm = std::map<MultiIndex, Rational>;
BinomialForm canonical_coeffs(const NumPoly& p);
NumPoly from_canonical(int nvars, const BinomialForm& form);

// One coefficient per line: "coeff i1 ... ik : value", descending
// lexicographic order; the zero polynomial prints a single "0" line.
std::string canonical_listing(const BinomialForm& form);

// Subset of S maximal under at least one of the d! coordinate-permutation
// lexicographic orders.
std::vector<MultiIndex> maximal_elements_lex_family(const std::vector<MultiIndex>& s);

struct InvariantReport {
    long long total_degree = 0;
    Rational leading_cap_coeff;              // a_{m_1..m_p n}
    Rational trdeg;                          // a_{m_1..m_p n} / 2^n
    std::vector<MultiIndex> e_set;           // positions with nonzero canonical coefficient
    std::vector<MultiIndex> e_prime;         // lex-family maximal positions
    std::map<MultiIndex, Rational> fixed_coeffs;       // coefficients at e_prime
    std::map<MultiIndex, Rational> top_degree_coeffs;  // canonical coefficients of total degree d
};

// Extracts the generator-independent invariants of a dimension polynomial
// with caps (m_1..m_p, n).  Hard consistency failures: non-integer
// canonical coefficients, degree caps exceeded, 2^n not dividing the cap
// coefficient.
InvariantReport invariant_report(const NumPoly& phi, const Partition& part);

std::string to_string(const InvariantReport& report);

}  // namespace ddim
