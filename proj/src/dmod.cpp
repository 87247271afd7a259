#include "ddim/dmod.hpp"

#include <sstream>

namespace ddim {

GammaTerm rho_map(const Ring& ring, const LinearPoly& f) {
    if (f.is_zero()) throw input_error("rho of the zero element");
    if (!f.constant.is_zero()) throw input_error("module elements have no constant part");
    const Leaders l = leaders(ring, f);
    GammaTerm g;
    g.base = l.sigma_leader;
    g.z.resize(ring.p());
    for (int i = 1; i <= ring.p(); ++i)
        g.z[i - 1] = static_cast<int>(order_block(ring.part, l.block_leaders[i - 1], i) -
                                      order_block(ring.part, l.sigma_leader, i));
    return g;
}

bool gamma_divides(const GammaTerm& a, const GammaTerm& b) {
    if (a.z.size() != b.z.size()) throw input_error("gamma term shape mismatch");
    if (!divides(a.base, b.base)) return false;
    for (size_t i = 0; i < a.z.size(); ++i)
        if (a.z[i] > b.z[i]) return false;
    return true;
}

ReductionResult module_reduce(const Ring& ring, const LinearPoly& f,
                              const std::vector<LinearPoly>& basis) {
    for (const auto& g : basis) {
        if (g.is_zero()) throw input_error("zero element in module basis");
        if (!g.constant.is_zero()) throw input_error("module elements have no constant part");
    }
    return reduce_unchecked(ring, f, basis);
}

bool is_groebner(const Ring& ring, const std::vector<LinearPoly>& basis,
                 const ModulePresentation& presentation) {
    if (ring.model != CoefficientModel::rational_constants)
        throw input_error("Groebner verification supports the rational-constants model only");
    if (basis.empty()) return presentation.relations.empty();
    if (!is_coherent(ring, basis)) return false;
    for (const auto& rel : presentation.relations) {
        if (rel.is_zero()) continue;
        if (!module_reduce(ring, rel, basis).normal_form.is_zero()) return false;
        // bounded multiples of the relation generators
        for (const auto& cand : charset_single_candidates(ring, rel))
            if (!module_reduce(ring, cand, basis).normal_form.is_zero()) return false;
    }
    return true;
}

ModulePresentation kahler_module_of_linear_system(const Ring& ring,
                                                  const std::vector<LinearPoly>& system) {
    ModulePresentation pres;
    pres.ring = ring;
    pres.ring.indets.clear();
    for (int i = 0; i < ring.num_indets(); ++i) pres.ring.indets.push_back("e" + std::to_string(i + 1));
    bool rational = true;
    for (const auto& poly : system) {
        if (poly.is_zero()) continue;
        if (poly.is_constant())
            throw input_error("inconsistent system: constant defining polynomial");
        LinearPoly rel;
        rel.terms = poly.terms;  // differentials kill the constant part
        for (const auto& [t, c] : rel.terms) rational = rational && c.is_rational();
        pres.relations.push_back(std::move(rel));
    }
    // symbolic systems whose term coefficients are all rational present a
    // constant-coefficient module
    if (rational) pres.ring.model = CoefficientModel::rational_constants;
    return pres;
}

std::vector<LinearPoly> complete_module_basis(const ModulePresentation& presentation,
                                              int max_rounds) {
    if (presentation.ring.model != CoefficientModel::rational_constants)
        throw input_error("module completion supports the rational-constants model only");
    return charset_linear_system(presentation.ring, presentation.relations, max_rounds);
}

DimensionReport gb_dimension_polynomial(const Ring& ring, const std::vector<LinearPoly>& basis) {
    return assemble_report(ring, basis, ring.num_indets());
}

std::string to_string(const Ring& ring, const GammaTerm& g) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < g.z.size(); ++i) {
        if (g.z[i] == 0) continue;
        if (any) os << "*";
        os << "z" << i + 1;
        if (g.z[i] > 1) os << "^" << g.z[i];
        any = true;
    }
    if (any) os << "*";
    os << to_string(g.base, ring.indets);
    return os.str();
}

}  // namespace ddim
