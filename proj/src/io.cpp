#include "ddim/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ddim {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
    throw input_error(source + ":" + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& source, int line, const std::string& tok) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(source, line, "expected an integer, got '" + tok + "'");
    }
}

// one monomial: <coeff> d k1..km s l1..ln <indet|one>
void parse_mono(const Ring& ring, const std::vector<std::string>& toks, LinearPoly& poly,
                const std::string& source, int line) {
    size_t at = 0;
    auto need = [&](const char* what) -> const std::string& {
        if (at >= toks.size()) fail(source, line, std::string("monomial is missing ") + what);
        return toks[at++];
    };

    Coefficient coeff(Rational(1));
    bool have_rational = false;
    if (at < toks.size() && toks[at] != "sym" && toks[at] != "d") {
        coeff = Coefficient(parse_rational(need("coefficient")));
        have_rational = true;
    }
    if (at < toks.size() && toks[at] == "sym") {
        ++at;
        const std::string& name = need("symbol name");
        if (ring.model != CoefficientModel::formal_symbols)
            fail(source, line, "symbolic coefficient in a rational-constants system");
        coeff = coeff * Coefficient::symbol(name, ring.m(), ring.n());
    } else if (!have_rational) {
        fail(source, line, "monomial must start with a coefficient");
    }

    if (need("'d'") != "d") fail(source, line, "expected 'd' before derivation exponents");
    LambdaMonomial mono = LambdaMonomial::identity(ring.m(), ring.n());
    for (int i = 0; i < ring.m(); ++i) {
        mono.delta[i] = parse_int(source, line, need("derivation exponent"));
        if (mono.delta[i] < 0) fail(source, line, "negative derivation exponent");
    }
    if (need("'s'") != "s") fail(source, line, "expected 's' before shift exponents");
    for (int j = 0; j < ring.n(); ++j) mono.sigma[j] = parse_int(source, line, need("shift exponent"));

    const std::string& target = need("indeterminate or 'one'");
    if (at != toks.size()) fail(source, line, "trailing tokens after monomial");
    if (target == "one") {
        // constants are acted on by the monomial's operator image
        Coefficient shifted = coeff.shifted(mono.sigma);
        if (ring.model == CoefficientModel::formal_symbols) {
            for (int k = 0; k < ring.m(); ++k)
                for (int rep = 0; rep < mono.delta[k]; ++rep) shifted = shifted.derived(k);
        } else if (!mono.delta_trivial()) {
            shifted = Coefficient();  // derivations kill rational constants
        }
        poly.constant = poly.constant + shifted;
        return;
    }
    auto it = std::find(ring.indets.begin(), ring.indets.end(), target);
    if (it == ring.indets.end()) fail(source, line, "unknown indeterminate '" + target + "'");
    poly.add_term(Term{mono, static_cast<int>(it - ring.indets.begin())}, coeff);
}

LinearPoly parse_poly(const Ring& ring, const std::string& body, const std::string& source,
                      int line) {
    LinearPoly poly;
    std::string chunk;
    std::istringstream is(body);
    std::vector<std::string> parts;
    while (std::getline(is, chunk, ';')) parts.push_back(chunk);
    for (const auto& part : parts) {
        auto toks = tokens_of(part);
        if (toks.empty()) fail(source, line, "empty monomial between ';'");
        parse_mono(ring, toks, poly, source, line);
    }
    return poly;
}

}  // namespace

SystemFile parse_system(std::istream& in, const std::string& source) {
    SystemFile out;
    bool have_m = false, have_partition = false, have_autos = false, have_indets = false,
         have_model = false;
    int m = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        if (key == "derivations") {
            if (toks.size() != 2) fail(source, lineno, "derivations expects one count");
            m = parse_int(source, lineno, toks[1]);
            if (m < 0) fail(source, lineno, "negative derivation count");
            have_m = true;
        } else if (key == "partition") {
            out.ring.part.blocks.clear();
            for (size_t i = 1; i < toks.size(); ++i)
                out.ring.part.blocks.push_back(parse_int(source, lineno, toks[i]));
            if (out.ring.part.blocks.empty() && m == 0) out.ring.part.blocks.push_back(0);
            if (out.ring.part.blocks.empty()) fail(source, lineno, "partition needs block sizes");
            have_partition = true;
        } else if (key == "automorphisms") {
            if (toks.size() != 2) fail(source, lineno, "automorphisms expects one count");
            out.ring.part.num_autos = parse_int(source, lineno, toks[1]);
            have_autos = true;
        } else if (key == "indeterminates" || key == "module") {
            if (toks.size() < 2) fail(source, lineno, key + " expects at least one name");
            out.ring.indets.assign(toks.begin() + 1, toks.end());
            out.module_form = key == "module";
            have_indets = true;
        } else if (key == "coefficients") {
            if (toks.size() != 2 || (toks[1] != "rational" && toks[1] != "symbolic"))
                fail(source, lineno, "coefficients expects 'rational' or 'symbolic'");
            out.ring.model = toks[1] == "rational" ? CoefficientModel::rational_constants
                                                   : CoefficientModel::formal_symbols;
            have_model = true;
        } else if (key == "poly" || key == "rel") {
            if (!have_m || !have_partition || !have_indets)
                fail(source, lineno, "polynomial before the header is complete");
            if ((key == "rel") != out.module_form)
                fail(source, lineno, "'rel' lines go with a 'module' stanza, 'poly' with "
                                     "'indeterminates'");
            if (!have_autos) out.ring.part.num_autos = 0;
            if (!have_model) out.ring.model = CoefficientModel::rational_constants;
            try {
                out.ring.validate();
            } catch (const input_error& e) {
                fail(source, lineno, e.what());
            }
            if (out.ring.m() != m)
                fail(source, lineno, "partition blocks sum to " + std::to_string(out.ring.m()) +
                                         " but derivations is " + std::to_string(m));
            auto body_at = strip_comment(line).find(key);
            LinearPoly poly =
                parse_poly(out.ring, strip_comment(line).substr(body_at + key.size()), source, lineno);
            if (out.module_form && !poly.constant.is_zero())
                fail(source, lineno, "module relations cannot have a constant part");
            out.polys.push_back(std::move(poly));
        } else {
            fail(source, lineno, "unknown stanza '" + key + "'");
        }
    }
    if (!have_m || !have_partition || !have_indets)
        throw input_error(source + ": incomplete header (derivations, partition, indeterminates)");
    out.ring.validate();
    if (out.ring.m() != m)
        throw input_error(source + ": partition blocks do not sum to the derivation count");
    return out;
}

SystemFile parse_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_system(in, path);
}

PointFile parse_points(std::istream& in, const std::string& source) {
    PointFile out;
    Partition part;
    bool have_partition = false;
    int m = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "derivations") {
            m = parse_int(source, lineno, toks[1]);
        } else if (toks[0] == "partition") {
            part.blocks.clear();
            for (size_t i = 1; i < toks.size(); ++i)
                part.blocks.push_back(parse_int(source, lineno, toks[i]));
            have_partition = true;
        } else if (toks[0] == "automorphisms") {
            if (toks.size() != 2) fail(source, lineno, "automorphisms expects one count");
            part.num_autos = parse_int(source, lineno, toks[1]);
        } else {
            std::vector<int> pt;
            for (const auto& tok : toks) pt.push_back(parse_int(source, lineno, tok));
            if (!out.points.empty() && out.points.front().size() != pt.size())
                fail(source, lineno, "inconsistent tuple length");
            out.points.push_back(std::move(pt));
        }
    }
    if (have_partition) {
        if (m >= 0 && part.derivation_count() != m)
            throw input_error(source + ": partition blocks do not sum to the derivation count");
        out.part = part;
    }
    return out;
}

PointFile parse_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_points(in, path);
}

namespace {

void emit_simple_coeff(std::ostringstream& os, const Coefficient& c) {
    if (c.is_rational()) {
        os << to_string(c.rational_value());
        return;
    }
    if (c.parts().size() == 1 && c.parts().begin()->first.size() == 1 &&
        c.parts().begin()->first.front().op.is_identity()) {
        const Rational& r = c.parts().begin()->second;
        if (r != 1) os << to_string(r) << " ";
        os << "sym " << c.parts().begin()->first.front().name;
        return;
    }
    throw input_error("coefficient has no system-syntax form");
}

void emit_mono(std::ostringstream& os, const LambdaMonomial& mono, const std::string& target) {
    os << " d";
    for (int k : mono.delta) os << " " << k;
    os << " s";
    for (int l : mono.sigma) os << " " << l;
    os << " " << target;
}

}  // namespace

std::string to_system_line(const Ring& ring, const LinearPoly& poly, bool module_form) {
    std::ostringstream os;
    os << (module_form ? "rel" : "poly");
    bool first = true;
    auto element = [&](const std::string& body) {
        os << (first ? " " : " ; ") << body;
        first = false;
    };
    for (const auto& [t, c] : poly.terms) {
        std::ostringstream part;
        emit_simple_coeff(part, c);
        emit_mono(part, t.mono, ring.indets[t.indet]);
        element(part.str());
    }
    // constant summands carry their operator image in the monomial slot:
    // r * lambda(name) becomes "r sym name d .. s .. one"
    for (const auto& [mono, r] : poly.constant.parts()) {
        std::ostringstream part;
        if (mono.empty()) {
            part << to_string(r);
            emit_mono(part, LambdaMonomial::identity(ring.m(), ring.n()), "one");
        } else if (mono.size() == 1) {
            if (r != 1) part << to_string(r) << " ";
            part << "sym " << mono.front().name;
            emit_mono(part, mono.front().op, "one");
        } else {
            throw input_error("coefficient has no system-syntax form");
        }
        element(part.str());
    }
    if (first) {
        std::ostringstream part;
        part << "0/1";
        emit_mono(part, LambdaMonomial::identity(ring.m(), ring.n()),
                  module_form ? ring.indets[0] : "one");
        element(part.str());
    }
    return os.str();
}

BinomialForm parse_canonical_listing(std::istream& in, int nvars) {
    BinomialForm form;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        if (toks.size() == 1 && toks[0] == "0") continue;  // zero polynomial
        if (toks[0] != "coeff" || static_cast<int>(toks.size()) != nvars + 3 ||
            toks[nvars + 1] != ":")
            throw input_error("listing line " + std::to_string(lineno) + " is malformed");
        MultiIndex idx(nvars);
        for (int i = 0; i < nvars; ++i) idx[i] = parse_int("<listing>", lineno, toks[1 + i]);
        form[idx] = parse_rational(toks[nvars + 2]);
    }
    return form;
}

}  // namespace ddim
