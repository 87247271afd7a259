// Command-line front end: parses system / point-set / module files,
// dispatches the counting pipelines and emits plain-text reports plus the
// machine-readable canonical coefficient listing.
//
// Exit status: 0 success, 1 input error, 2 consistency failure (oracle
// disagreement or a violated structural guarantee).

#include "ddim/dimpoly.hpp"
#include "ddim/dmod.hpp"
#include "ddim/io.hpp"
#include "ddim/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ddim;

struct CommonOpts {
    std::string input;
    std::string output;           // empty = stdout
    std::string partition_text;   // override, e.g. "1 1"
    std::string grid_text;        // "lo:hi,lo:hi,..."
    std::string format = "both";  // binomial|expanded|both
    bool check_oracle = false;
    bool check_interpolation = false;
    int max_rounds = 1000;
    long long oracle_cap = kDefaultLambdaCap;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_oracle = true) {
    cmd->add_option("input", opts.input, "input file")->required();
    cmd->add_option("-o,--output", opts.output, "write the report to this path instead of stdout");
    cmd->add_option("--partition", opts.partition_text, "partition override, e.g. \"1 1\"");
    cmd->add_option("--format", opts.format, "binomial|expanded|both")
        ->check(CLI::IsMember({"binomial", "expanded", "both"}));
    cmd->add_option("--grid", opts.grid_text, "value grid, lo:hi per variable, comma separated");
    if (with_oracle) {
        cmd->add_flag("--check-oracle", opts.check_oracle,
                      "cross-check the closed form against brute-force enumeration");
        cmd->add_flag("--check-interpolation", opts.check_interpolation,
                      "recompute the polynomial by interpolation from enumerated counts");
        cmd->add_option("--oracle-cap", opts.oracle_cap, "enumeration budget per grid point");
    }
    cmd->add_option("--max-iterations", opts.max_rounds, "completion iteration cap");
}

void write_out(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw input_error("cannot write '" + opts.output + "'");
    out << text;
}

Partition parse_partition_text(const std::string& text, int num_autos) {
    Partition part;
    std::istringstream is(text);
    int v;
    while (is >> v) part.blocks.push_back(v);
    if (part.blocks.empty()) throw input_error("empty partition override");
    part.num_autos = num_autos;
    return part;
}

std::vector<std::pair<long long, long long>> parse_grid_text(const std::string& text, int nvars) {
    std::vector<std::pair<long long, long long>> grid;
    std::istringstream is(text);
    std::string chunk;
    while (std::getline(is, chunk, ',')) {
        auto colon = chunk.find(':');
        if (colon == std::string::npos) throw input_error("grid ranges look like lo:hi");
        grid.emplace_back(std::stoll(chunk.substr(0, colon)), std::stoll(chunk.substr(colon + 1)));
    }
    if (static_cast<int>(grid.size()) != nvars)
        throw input_error("grid needs one lo:hi range per variable");
    for (auto& [lo, hi] : grid)
        if (lo > hi) throw input_error("grid lower bound exceeds upper bound");
    return grid;
}

std::vector<std::pair<long long, long long>> default_grid(const std::vector<long long>& stability,
                                                          int width = 2) {
    std::vector<std::pair<long long, long long>> grid;
    for (long long s : stability) grid.emplace_back(s, s + width);
    return grid;
}

Partition partition_for_points(const CommonOpts& opts, const PointFile& file) {
    if (!opts.partition_text.empty()) {
        Partition part = parse_partition_text(opts.partition_text, 0);
        if (file.part && (file.part->blocks != part.blocks))
            throw input_error("partition override disagrees with the file header");
        if (file.part) part.num_autos = file.part->num_autos;
        return part;
    }
    if (file.part) return *file.part;
    throw input_error("no partition: give a file header or --partition");
}

std::string polynomial_block(const std::string& name, const NumPoly& poly,
                             const std::string& format) {
    std::ostringstream os;
    if (format != "binomial") os << name << " = " << poly.to_string() << "\n";
    if (format != "expanded") {
        os << name << " canonical coefficients:\n";
        os << canonical_listing(canonical_coeffs(poly));
    }
    return os.str();
}

void oracle_check_system(const Ring& ring, const DimensionReport& rep, long long cap) {
    const LeaderTable table = make_leader_table(ring, rep.charset);
    for (const auto& r0 : {0LL, 1LL}) {
        std::vector<long long> r = rep.stability;
        for (auto& v : r) v += r0;
        const long long counted = count_reduced_terms(ring, table, ring.num_indets(), r, cap);
        const Rational predicted = rep.phi.evaluate(r);
        if (predicted != counted) {
            std::ostringstream os;
            os << "oracle mismatch at (";
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << "): enumeration " << counted << ", polynomial " << to_string(predicted);
            throw consistency_error(os.str());
        }
    }
}

int run_setdim(const CommonOpts& opts, bool signed_points) {
    PointFile file = parse_points_file(opts.input);
    Partition part = partition_for_points(opts, file);
    std::ostringstream os;
    NumPoly poly;
    if (!signed_points) {
        PointSetN e{file.points, part};
        poly = omega_E(e);
        os << "point set: " << file.points.size() << " points, m = " << part.derivation_count()
           << ", partition blocks = " << part.block_count() << "\n";
        os << polynomial_block("omega_E", poly, opts.format);
        if (opts.check_oracle) {
            std::vector<long long> r(part.block_count(), 0);
            for (const auto& pt : file.points) {
                for (int j = 1; j <= part.block_count(); ++j) {
                    long long b = 0;
                    for (int v = part.block_begin(j); v < part.block_end(j); ++v) b += pt[v];
                    r[j - 1] += b;
                }
            }
            const long long counted = count_VE(PointSetN{file.points, part}, r, opts.oracle_cap);
            if (poly.evaluate(r) != counted)
                throw consistency_error("omega_E disagrees with Card V_E at the stability corner");
            os << "oracle check passed at the stability corner\n";
        }
    } else {
        // infer the automorphism count from the tuple length when the
        // header does not provide one
        if (!file.points.empty()) {
            const int n = static_cast<int>(file.points.front().size()) - part.derivation_count();
            if (n < 0) throw input_error("points are shorter than the derivation count");
            if (part.num_autos == 0) part.num_autos = n;
            if (part.num_autos != n)
                throw input_error("automorphism count disagrees with the tuple length");
        }
        PointSetNZ a{file.points, part};
        poly = phi_A(a);
        os << "point set: " << file.points.size() << " points, m = " << part.derivation_count()
           << ", n = " << part.num_autos << ", partition blocks = " << part.block_count() << "\n";
        os << polynomial_block("phi_A", poly, opts.format);
        if (opts.check_oracle) {
            const int m = part.derivation_count();
            std::vector<long long> r(part.block_count() + 1, 0);
            for (const auto& pt : file.points) {
                for (int j = 1; j <= part.block_count(); ++j) {
                    long long b = 0;
                    for (int v = part.block_begin(j); v < part.block_end(j); ++v) b += pt[v];
                    r[j - 1] += b;
                }
                for (int j = 0; j < part.num_autos; ++j)
                    r[part.block_count()] += std::abs(pt[m + j]);
            }
            r[part.block_count()] += part.num_autos;
            const long long counted = count_WA(PointSetNZ{file.points, part}, r, opts.oracle_cap);
            if (poly.evaluate(r) != counted)
                throw consistency_error("phi_A disagrees with Card W_A at the stability corner");
            os << "oracle check passed at the stability corner\n";
        }
    }
    if (!opts.grid_text.empty()) {
        auto grid = parse_grid_text(opts.grid_text, poly.nvars());
        os << "value table:\n";
        std::vector<long long> r;
        for (auto& [lo, hi] : grid) r.push_back(lo);
        while (true) {
            os << " ";
            for (long long v : r) os << " " << v;
            os << " -> " << to_string(poly.evaluate(r)) << "\n";
            int i = poly.nvars() - 1;
            while (i >= 0 && r[i] == grid[i].second) --i;
            if (i < 0) break;
            ++r[i];
            for (int j = i + 1; j < poly.nvars(); ++j) r[j] = grid[j].first;
        }
    }
    write_out(opts, os.str());
    return 0;
}

SystemFile load_system(const CommonOpts& opts, bool expect_module) {
    SystemFile sys = parse_system_file(opts.input);
    if (!opts.partition_text.empty()) {
        Partition part = parse_partition_text(opts.partition_text, sys.ring.part.num_autos);
        if (part.derivation_count() != sys.ring.m())
            throw input_error("partition override disagrees with the file header");
        sys.ring.part = part;
    }
    if (expect_module && !sys.module_form)
        throw input_error("this command expects a module file (use a 'module' stanza)");
    return sys;
}

std::string charset_block(const Ring& ring, const std::vector<LinearPoly>& charset,
                          bool module_form) {
    std::ostringstream os;
    os << "characteristic set (" << charset.size() << " elements):\n";
    for (const auto& el : charset) {
        os << "  " << to_string(ring, el) << "\n";
        try {
            os << "    " << to_system_line(ring, el, module_form) << "\n";
        } catch (const input_error&) {
            os << "    # coefficients have no system-syntax form\n";
        }
    }
    return os.str();
}

int run_charset(const CommonOpts& opts) {
    SystemFile sys = load_system(opts, false);
    auto charset = charset_linear_system(sys.ring, sys.polys, opts.max_rounds);
    std::ostringstream os;
    os << charset_block(sys.ring, charset, sys.module_form);
    write_out(opts, os.str());
    return 0;
}

// Rebuilds Phi by exact interpolation from enumerated counts on the grid
// stability + [0 .. cap_j] and compares coefficient by coefficient.
void interpolation_check_system(const Ring& ring, const DimensionReport& rep, long long cap) {
    const LeaderTable table = make_leader_table(ring, rep.charset);
    const int p = ring.p();
    std::vector<int> caps(p + 1);
    for (int i = 0; i < p; ++i) caps[i] = ring.part.blocks[i];
    caps[p] = ring.n();
    std::map<std::vector<long long>, Rational> values;
    std::vector<long long> r = rep.stability;
    while (true) {
        values[r] = count_reduced_terms(ring, table, ring.num_indets(), r, cap);
        int i = p;
        while (i >= 0 && r[i] == rep.stability[i] + caps[i]) r[i--] = 0;
        if (i < 0) break;
        ++r[i];
        for (int j = i + 1; j <= p; ++j) r[j] = rep.stability[j];
    }
    if (interpolate_numerical(values, caps, rep.stability) != rep.phi)
        throw consistency_error("interpolation route disagrees with the symbolic polynomial");
}

int run_dimpoly(const CommonOpts& opts) {
    SystemFile sys = load_system(opts, false);
    DimensionReport rep = dimension_polynomial(sys.ring, sys.polys, opts.max_rounds);
    if (opts.check_oracle) oracle_check_system(sys.ring, rep, opts.oracle_cap);
    if (opts.check_interpolation) interpolation_check_system(sys.ring, rep, opts.oracle_cap);
    std::ostringstream os;
    os << "system: " << opts.input << "\n";
    os << charset_block(sys.ring, rep.charset, false);
    os << polynomial_block("Phi", rep.phi, opts.format);
    os << polynomial_block("Card U1", rep.u1_part, opts.format);
    os << polynomial_block("Card U2", rep.u2_part, opts.format);
    os << to_string(rep.invariants);
    os << "stability offsets:";
    for (long long s : rep.stability) os << " " << s;
    os << "\n";
    if (opts.check_oracle) os << "oracle check passed\n";
    if (opts.check_interpolation) os << "interpolation check passed\n";
    write_out(opts, os.str());
    return 0;
}

int run_strength(const CommonOpts& opts) {
    SystemFile sys = load_system(opts, false);
    DimensionReport rep = dimension_polynomial(sys.ring, sys.polys, opts.max_rounds);
    if (opts.check_oracle) oracle_check_system(sys.ring, rep, opts.oracle_cap);
    auto grid = opts.grid_text.empty() ? default_grid(rep.stability)
                                       : parse_grid_text(opts.grid_text, sys.ring.p() + 1);
    std::ostringstream os;
    os << "system: " << opts.input << "\n";
    os << strength_report(sys.ring, rep, grid);
    if (opts.check_oracle) os << "oracle check passed\n";
    write_out(opts, os.str());
    return 0;
}

int run_gbdim(const CommonOpts& opts) {
    SystemFile sys = load_system(opts, false);
    ModulePresentation pres;
    if (sys.module_form) {
        pres.ring = sys.ring;
        pres.relations = sys.polys;
    } else {
        pres = kahler_module_of_linear_system(sys.ring, sys.polys);
    }
    std::vector<LinearPoly> basis = complete_module_basis(pres, opts.max_rounds);
    if (!is_groebner(pres.ring, basis, pres))
        throw consistency_error("completed basis failed Groebner verification");
    DimensionReport rep = gb_dimension_polynomial(pres.ring, basis);
    if (opts.check_oracle) oracle_check_system(pres.ring, rep, opts.oracle_cap);
    std::ostringstream os;
    os << "module: " << opts.input << "\n";
    os << "Groebner basis (" << basis.size() << " elements):\n";
    for (const auto& el : basis) {
        os << "  " << to_string(pres.ring, el) << "  [rho = " << to_string(pres.ring, rho_map(pres.ring, el))
           << "]\n";
        os << "    " << to_system_line(pres.ring, el, true) << "\n";
    }
    os << polynomial_block("Phi", rep.phi, opts.format);
    os << polynomial_block("Card U1", rep.u1_part, opts.format);
    os << polynomial_block("Card U2", rep.u2_part, opts.format);
    os << to_string(rep.invariants);
    if (opts.check_oracle) os << "oracle check passed\n";
    write_out(opts, os.str());
    return 0;
}

int run_oracle(const CommonOpts& opts) {
    SystemFile sys = load_system(opts, false);
    DimensionReport rep = dimension_polynomial(sys.ring, sys.polys, opts.max_rounds);
    const LeaderTable table = make_leader_table(sys.ring, rep.charset);
    auto grid = opts.grid_text.empty() ? default_grid(rep.stability, 1)
                                       : parse_grid_text(opts.grid_text, sys.ring.p() + 1);
    std::ostringstream os;
    for (int i = 0; i < sys.ring.p() + 1; ++i) os << "r" << i + 1 << ",";
    os << "count\n";
    std::vector<long long> r;
    for (auto& [lo, hi] : grid) r.push_back(lo);
    while (true) {
        const long long counted =
            count_reduced_terms(sys.ring, table, sys.ring.num_indets(), r, opts.oracle_cap);
        for (long long v : r) os << v << ",";
        os << counted << "\n";
        int i = sys.ring.p();
        while (i >= 0 && r[i] == grid[i].second) --i;
        if (i < 0) break;
        ++r[i];
        for (int j = i + 1; j <= sys.ring.p(); ++j) r[j] = grid[j].first;
    }
    write_out(opts, os.str());
    return 0;
}

int run_maximal(const CommonOpts& opts) {
    PointFile file = parse_points_file(opts.input);
    std::vector<MultiIndex> points;
    for (const auto& pt : file.points) points.push_back(pt);
    auto result = maximal_elements_lex_family(points);
    std::ostringstream os;
    for (const auto& e : result) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << "\n";
    }
    write_out(opts, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multivariate difference-differential dimension polynomials"};
    app.require_subcommand(1);

    CommonOpts setdim_opts, zsetdim_opts, charset_opts, dimpoly_opts, gbdim_opts, strength_opts,
        oracle_opts, maximal_opts;

    add_common(app.add_subcommand("setdim", "dimension polynomial omega_E of a point set in N^m"),
               setdim_opts);
    add_common(app.add_subcommand("zsetdim", "dimension polynomial phi_A of a point set in N^m x Z^n"),
               zsetdim_opts);
    add_common(app.add_subcommand("charset", "characteristic set of a linear system"), charset_opts);
    add_common(app.add_subcommand("dimpoly", "dimension polynomial of a linear system"), dimpoly_opts);
    add_common(app.add_subcommand("gbdim", "dimension polynomial via the free operator module"),
               gbdim_opts);
    add_common(app.add_subcommand("strength", "Einstein strength report of a linear system"),
               strength_opts);
    add_common(app.add_subcommand("oracle", "brute-force count CSV over a grid"), oracle_opts);
    add_common(app.add_subcommand("maximal", "lex-family maximal elements of a tuple set"),
               maximal_opts, false);

    try {
        app.parse(argc, argv);
        if (app.get_subcommand("setdim")->parsed()) return run_setdim(setdim_opts, false);
        if (app.get_subcommand("zsetdim")->parsed()) return run_setdim(zsetdim_opts, true);
        if (app.get_subcommand("charset")->parsed()) return run_charset(charset_opts);
        if (app.get_subcommand("dimpoly")->parsed()) return run_dimpoly(dimpoly_opts);
        if (app.get_subcommand("gbdim")->parsed()) return run_gbdim(gbdim_opts);
        if (app.get_subcommand("strength")->parsed()) return run_strength(strength_opts);
        if (app.get_subcommand("oracle")->parsed()) return run_oracle(oracle_opts);
        if (app.get_subcommand("maximal")->parsed()) return run_maximal(maximal_opts);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ddim::consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const ddim::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
