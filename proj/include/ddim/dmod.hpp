#pragma once

// Free modules over the ring of difference-differential operators: the
// rho-map into Gamma-terms, Groebner-basis verification by overlap and
// multiple witnesses, normal forms with operator certificates, and the
// filtration dimension polynomial computed from a basis' leader table.
// Module elements are constant-free linear forms over generator terms and
// reuse the linpoly reduction engine.

#include "ddim/dimpoly.hpp"
#include "ddim/linpoly.hpp"

#include <string>
#include <vector>

namespace ddim {

struct GammaTerm {
    std::vector<int> z;  // z_1^{k_1}..z_p^{k_p}, entries >= 0
    Term base;

    bool operator==(const GammaTerm&) const = default;
};

struct ModulePresentation {
    Ring ring;  // indets play the role of the free generators e_1..e_q
    std::vector<LinearPoly> relations;
};

// rho(f) = z^{d(f)} v_f with d_i(f) = ord_i u_f^{(i)} - ord_i v_f.
GammaTerm rho_map(const Ring& ring, const LinearPoly& f);

// Generator indices equal, heads divide (orthant-aware), z componentwise <=.
bool gamma_divides(const GammaTerm& a, const GammaTerm& b);

// Normal form of f modulo a set of module elements, with certificate.
ReductionResult module_reduce(const Ring& ring, const LinearPoly& f,
                              const std::vector<LinearPoly>& basis);

// Verification for the rational-constants model: the relation generators
// and their bounded Lambda-multiples reduce to zero modulo G, and so do
// all lcm-overlap S-elements of G.
bool is_groebner(const Ring& ring, const std::vector<LinearPoly>& basis,
                 const ModulePresentation& presentation);

// The relation module of the Kaehler differentials of a linear system:
// one relation per defining polynomial, constant part dropped.
ModulePresentation kahler_module_of_linear_system(const Ring& ring,
                                                  const std::vector<LinearPoly>& system);

// Completion of the relation generators to a verified basis
// (rational-constants model only).
std::vector<LinearPoly> complete_module_basis(const ModulePresentation& presentation,
                                              int max_rounds = 1000);

// Dimension polynomial of the filtered module from a verified basis.
DimensionReport gb_dimension_polynomial(const Ring& ring, const std::vector<LinearPoly>& basis);

std::string to_string(const Ring& ring, const GammaTerm& g);

}  // namespace ddim
