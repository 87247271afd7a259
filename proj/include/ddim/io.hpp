#pragma once

// Line-oriented input formats.
//
// System files:
//   derivations m
//   partition m1 ... mp
//   automorphisms n
//   indeterminates y1 ... ys
//   coefficients rational|symbolic
//   poly <mono> ; <mono> ; ...
// with <mono> ::= <coeff> d k1 ... km s l1 ... ln <indet|one> and
// <coeff> ::= p/q | sym <name> | p/q sym <name>.
//
// Module files replace `indeterminates` by `module e1 ... eq` and `poly`
// by `rel` (relations have no constant part).
//
// Point files: optional `derivations`/`partition`/`automorphisms` header,
// then one integer tuple per line.  `#` starts a comment anywhere.

#include "ddim/linpoly.hpp"
#include "ddim/numpoly.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ddim {

struct SystemFile {
    Ring ring;
    std::vector<LinearPoly> polys;
    bool module_form = false;  // parsed from `module` / `rel` stanzas
};

SystemFile parse_system(std::istream& in, const std::string& source_name = "<input>");
SystemFile parse_system_file(const std::string& path);

struct PointFile {
    std::optional<Partition> part;
    std::vector<std::vector<int>> points;
};

PointFile parse_points(std::istream& in, const std::string& source_name = "<input>");
PointFile parse_points_file(const std::string& path);

// Re-emits a polynomial in the system-file mono syntax.
std::string to_system_line(const Ring& ring, const LinearPoly& poly, bool module_form);

// Parses a canonical coefficient listing produced by canonical_listing().
BinomialForm parse_canonical_listing(std::istream& in, int nvars);

}  // namespace ddim
