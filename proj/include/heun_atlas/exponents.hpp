#pragma once

#include <array>
#include <sstream>
#include <string>

#include "heun_atlas/rational.hpp"

namespace heun {

/// Rational-affine form c0 + ca*a + cb*b + cg*g in the free parameters a, b, g.
/// Local exponent differences are such forms; a form is "free" iff some
/// parameter coefficient is nonzero.
struct ExponentForm {
    Rat c0, ca, cb, cg;

    ExponentForm() = default;
    explicit ExponentForm(const Rat& constant) : c0(constant) {}
    static ExponentForm param(int which) {  // 0 -> a, 1 -> b, 2 -> g
        ExponentForm f;
        (which == 0 ? f.ca : which == 1 ? f.cb : f.cg) = 1;
        return f;
    }

    bool is_free() const { return ca != 0 || cb != 0 || cg != 0; }
    bool is_constant() const { return !is_free(); }

    Rat eval(const Rat& a, const Rat& b, const Rat& g) const { return c0 + ca * a + cb * b + cg * g; }

    friend ExponentForm operator*(long k, const ExponentForm& f) {
        ExponentForm r;
        r.c0 = k * f.c0;
        r.ca = k * f.ca;
        r.cb = k * f.cb;
        r.cg = k * f.cg;
        return r;
    }
    friend bool operator==(const ExponentForm& x, const ExponentForm& y) {
        return x.c0 == y.c0 && x.ca == y.ca && x.cb == y.cb && x.cg == y.cg;
    }
    /// display order: constants first, then a-, b-, g-forms by ascending coefficient
    friend bool operator<(const ExponentForm& x, const ExponentForm& y) {
        auto rank = [](const ExponentForm& f) { return f.ca != 0 ? 1 : f.cb != 0 ? 2 : f.cg != 0 ? 3 : 0; };
        if (rank(x) != rank(y)) return rank(x) < rank(y);
        if (x.ca != y.ca) return x.ca < y.ca;
        if (x.cb != y.cb) return x.cb < y.cb;
        if (x.cg != y.cg) return x.cg < y.cg;
        return x.c0 < y.c0;
    }
};

inline std::string exponent_str(const ExponentForm& f) {
    std::ostringstream os;
    bool some = false;
    auto term = [&](const Rat& c, const char* sym) {
        if (c == 0) return;
        if (some && c > 0) os << "+";
        if (c == -1) os << "-";
        else if (c != 1) os << rat_str(c);
        os << sym;
        some = true;
    };
    term(f.ca, "a");
    term(f.cb, "b");
    term(f.cg, "g");
    if (f.c0 != 0 || !some) {
        if (some && f.c0 > 0) os << "+";
        os << rat_str(f.c0);
    }
    return os.str();
}

/// "1/3", "2a", "a+1/2", "8a", "b", "3b" ...
inline ExponentForm parse_exponent(const std::string& s) {
    ExponentForm f;
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("bad exponent form: " + s);
        }
        size_t start = pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string term = s.substr(start, pos - start);
        if (term.empty()) throw std::invalid_argument("bad exponent form: " + s);
        char last = term.back();
        if (last == 'a' || last == 'b' || last == 'g') {
            std::string coef = term.substr(0, term.size() - 1);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            Rat c = coef.empty() ? rat(1) : parse_rat(coef);
            c *= sign;
            (last == 'a' ? f.ca : last == 'b' ? f.cb : f.cg) += c;
        } else {
            f.c0 += sign * parse_rat(term);
        }
        first = false;
    }
    return f;
}

}  // namespace heun
