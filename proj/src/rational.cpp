#include "ddim/rational.hpp"

namespace ddim {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw input_error("malformed rational '" + text + "'");
    }
}

Rational rational_factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

Rational rational_binomial(long long a, int k) {
    if (k < 0) throw input_error("negative binomial row");
    BigInt num = 1;
    for (int i = 0; i < k; ++i) num *= BigInt(a - i);
    return Rational(num) / rational_factorial(k);
}

}  // namespace ddim
