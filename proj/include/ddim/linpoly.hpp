#pragma once

// Affine-linear difference-differential polynomials: operator application,
// sigma- and block-leaders, ranking, reduction with exact certificates,
// autoreduced and coherent sets, and characteristic sets of linear ideals.

#include "ddim/coeff.hpp"
#include "ddim/lambda.hpp"

#include <map>
#include <string>
#include <vector>

namespace ddim {

// Ambient ring description shared by all operations.
struct Ring {
    Partition part;
    std::vector<std::string> indets;
    CoefficientModel model = CoefficientModel::rational_constants;

    int m() const { return part.derivation_count(); }
    int n() const { return part.num_autos; }
    int p() const { return part.block_count(); }
    int num_indets() const { return static_cast<int>(indets.size()); }
    void validate() const;
};

struct LinearPoly {
    std::map<Term, Coefficient> terms;  // no zero coefficients
    Coefficient constant;

    bool is_zero() const { return terms.empty() && constant.is_zero(); }
    bool is_constant() const { return terms.empty(); }
    void add_term(const Term& t, const Coefficient& c);
    Coefficient coeff(const Term& t) const;

    LinearPoly operator+(const LinearPoly& other) const;
    LinearPoly operator-(const LinearPoly& other) const;
    LinearPoly operator-() const;
    LinearPoly scaled(const Coefficient& c) const;
    bool operator==(const LinearPoly& other) const = default;
};

// lambda(A): terms multiplied, coefficients transformed per the model
// (sigma shifts act multiplicatively, derivations by the Leibniz rule, so
// non-constant coefficients generate lower-order companion terms).
LinearPoly apply(const Ring& ring, const LambdaMonomial& lam, const LinearPoly& a);

struct Leaders {
    Term sigma_leader;               // v_A
    std::vector<Term> block_leaders; // u_A^{(1)} .. u_A^{(p)}
};
// Throws input_error on constants (they have no leaders).
Leaders leaders(const Ring& ring, const LinearPoly& a);

// Rank of Def 5.6 restricted to the linear case: constants lowest, then
// (v_A, ord_1 u^{(1)}, ..., ord_p u^{(p)}) lexicographically.
int rank_compare(const Ring& ring, const LinearPoly& a, const LinearPoly& b);

// Reducedness of B with respect to A: no term of B is an eliminable
// multiple of A's sigma-leader.  A multiple lambda*v_A is eliminable when
// lambda_Delta != 1 and ord_j(lambda u_A^{(j)}) <= ord_j(u_B^{(j)}) for
// every block j, or unconditionally when lambda_Delta == 1 (in the linear
// case the degree clause cannot save a pure-shift multiple).
bool is_reduced(const Ring& ring, const LinearPoly& b, const LinearPoly& a);
bool is_reduced(const Ring& ring, const LinearPoly& b, const std::vector<LinearPoly>& sigma);

// Element of the operator ring D, used for reduction certificates.
struct Operator {
    std::map<LambdaMonomial, Coefficient> parts;

    void add(const LambdaMonomial& lam, const Coefficient& c);
    Operator scaled(const Coefficient& c) const;
    bool is_zero() const { return parts.empty(); }
};
LinearPoly apply(const Ring& ring, const Operator& op, const LinearPoly& a);

struct ReductionResult {
    LinearPoly normal_form;             // B0
    Coefficient j_factor;               // J, = 1 when all initials divide out
    std::vector<Operator> multipliers;  // Q_i with J*B - B0 = sum Q_i A_i
};

// Reduction of Thm 5.5: at each step the greatest (w.r.t. <_sigma)
// eliminable term is cleared against the element with the greatest
// sigma-leader among those whose leader divides it.  Symbolic initials are
// multiplied through and collected in J; rational initials divide out.
// The public entry point rejects non-autoreduced sets.
ReductionResult reduce(const Ring& ring, const LinearPoly& b, const std::vector<LinearPoly>& sigma);

// Same procedure without the autoreducedness precondition (used internally
// and by the coherence check, whose spec feeds non-autoreduced sets).
ReductionResult reduce_unchecked(const Ring& ring, const LinearPoly& b,
                                 const std::vector<LinearPoly>& sigma);

// Pairwise reduction to a rank-sorted autoreduced set; zero remainders are
// dropped and leaders are normalized monic where the initial is rational.
std::vector<LinearPoly> autoreduce(const Ring& ring, std::vector<LinearPoly> polys);

// Coherence of a set of linear polynomials: bounded Lambda-multiples of
// every element reduce to zero, and for every pair with similar
// sigma-leaders on the same indeterminate the lcm S-polynomial reduces to
// zero.
bool is_coherent(const Ring& ring, const std::vector<LinearPoly>& sigma);

// The finitely many minimal elements of {lambda A} under leader
// divisibility: a characteristic set of the principal ideal [A]
// (candidates come from sigma-shifts within the spread radius; the result
// is verified autoreduced and coherent).
std::vector<LinearPoly> charset_single(const Ring& ring, const LinearPoly& a);

// Candidate generation without the verification step (used by completion).
std::vector<LinearPoly> charset_single_candidates(const Ring& ring, const LinearPoly& a);

// Completion loop for a finite set of linear generators: seed with the
// minimal shift multiples, autoreduce, adjoin nonzero reductions of the
// coherence witnesses, repeat.  Throws input_error("inconsistent system")
// if the ideal contains a nonzero constant and consistency_error if the
// iteration cap is exceeded.
std::vector<LinearPoly> charset_linear_system(const Ring& ring,
                                              const std::vector<LinearPoly>& generators,
                                              int max_rounds = 1000);

// B lies in the linear ideal with the given characteristic set iff its
// normal form vanishes.
bool ideal_membership(const Ring& ring, const LinearPoly& b,
                      const std::vector<LinearPoly>& charset);

std::string to_string(const Ring& ring, const LinearPoly& a);

}  // namespace ddim
