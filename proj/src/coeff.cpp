#include "ddim/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace ddim {

Coefficient::Coefficient(const Rational& r) {
    if (r != 0) parts_[TokenMonomial{}] = r;
}

Coefficient Coefficient::symbol(const std::string& name, int m, int n) {
    Coefficient c;
    c.parts_[TokenMonomial{Token{LambdaMonomial::identity(m, n), name}}] = Rational(1);
    return c;
}

bool Coefficient::is_rational() const {
    return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first.empty());
}

Rational Coefficient::rational_value() const {
    if (parts_.empty()) return Rational(0);
    if (!is_rational()) throw input_error("coefficient is not a rational constant");
    return parts_.begin()->second;
}

Coefficient Coefficient::operator+(const Coefficient& other) const {
    Coefficient out = *this;
    for (const auto& [mono, r] : other.parts_) {
        auto [it, inserted] = out.parts_.emplace(mono, r);
        if (!inserted) {
            it->second += r;
            if (it->second == 0) out.parts_.erase(it);
        }
    }
    return out;
}

Coefficient Coefficient::operator-(const Coefficient& other) const { return *this + (-other); }

Coefficient Coefficient::operator*(const Coefficient& other) const {
    Coefficient out;
    for (const auto& [ma, ra] : parts_) {
        for (const auto& [mb, rb] : other.parts_) {
            TokenMonomial mono;
            mono.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(mono));
            auto [it, inserted] = out.parts_.emplace(std::move(mono), ra * rb);
            if (!inserted) {
                it->second += ra * rb;
                if (it->second == 0) out.parts_.erase(it);
            }
        }
    }
    return out;
}

Coefficient Coefficient::operator-() const {
    Coefficient out = *this;
    for (auto& [mono, r] : out.parts_) r = -r;
    return out;
}

Coefficient Coefficient::shifted(const std::vector<int>& shift) const {
    if (std::all_of(shift.begin(), shift.end(), [](int l) { return l == 0; })) return *this;
    Coefficient out;
    for (const auto& [mono, r] : parts_) {
        TokenMonomial shifted = mono;
        for (auto& tok : shifted)
            for (size_t j = 0; j < shift.size(); ++j) tok.op.sigma[j] += shift[j];
        std::sort(shifted.begin(), shifted.end());
        out.parts_[std::move(shifted)] = r;
    }
    return out;
}

Coefficient Coefficient::derived(int k) const {
    Coefficient out;
    for (const auto& [mono, r] : parts_) {
        for (size_t pos = 0; pos < mono.size(); ++pos) {
            TokenMonomial derived = mono;
            derived[pos].op.delta[k] += 1;
            std::sort(derived.begin(), derived.end());
            auto [it, inserted] = out.parts_.emplace(std::move(derived), r);
            if (!inserted) {
                it->second += r;
                if (it->second == 0) out.parts_.erase(it);
            }
        }
    }
    return out;
}

std::string Coefficient::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, r] : parts_) {
        Rational mag = r < 0 ? Rational(-r) : r;
        if (first) {
            if (r < 0) os << "-";
            first = false;
        } else {
            os << (r < 0 ? " - " : " + ");
        }
        if (mono.empty()) {
            os << ddim::to_string(mag);
        } else {
            if (mag != 1) os << ddim::to_string(mag) << "*";
            for (size_t i = 0; i < mono.size(); ++i) {
                if (i) os << "*";
                if (mono[i].op.is_identity())
                    os << "(" << mono[i].name << ")";
                else
                    os << ddim::to_string(mono[i].op) << "(" << mono[i].name << ")";
            }
        }
    }
    return os.str();
}

}  // namespace ddim
