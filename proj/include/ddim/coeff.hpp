#pragma once

// Coefficient domain for linear difference-differential polynomials.
//
// rational-constants: plain exact rationals; derivations act as zero,
// automorphisms as the identity.
//
// formal-symbols: exact-rational combinations of products of tokens
// lambda(name), one token per operator image of a named base symbol.
// Distinct token monomials are treated as algebraically independent (a
// field of generic coefficients), derivations act by the Leibniz rule on
// token products, automorphism shifts act multiplicatively.

#include "ddim/lambda.hpp"
#include "ddim/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace ddim {

enum class CoefficientModel { rational_constants, formal_symbols };

struct Token {
    LambdaMonomial op;
    std::string name;

    bool operator==(const Token&) const = default;
    bool operator<(const Token& other) const {
        if (name != other.name) return name < other.name;
        return op < other.op;
    }
};

using TokenMonomial = std::vector<Token>;  // kept sorted

class Coefficient {
public:
    Coefficient() = default;
    Coefficient(const Rational& r);  // implicit: rationals embed
    static Coefficient symbol(const std::string& name, int m, int n);

    bool is_zero() const { return parts_.empty(); }
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    Coefficient operator+(const Coefficient& other) const;
    Coefficient operator-(const Coefficient& other) const;
    Coefficient operator*(const Coefficient& other) const;
    Coefficient operator-() const;
    bool operator==(const Coefficient& other) const { return parts_ == other.parts_; }

    // Image under the automorphism power product with exponents `shift`.
    Coefficient shifted(const std::vector<int>& shift) const;
    // Image under the k-th derivation (Leibniz on token products; the
    // rational part dies).
    Coefficient derived(int k) const;

    const std::map<TokenMonomial, Rational>& parts() const { return parts_; }
    std::string to_string() const;

private:
    std::map<TokenMonomial, Rational> parts_;  // no zero entries
};

}  // namespace ddim
