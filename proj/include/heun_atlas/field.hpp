#pragma once

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

#include "heun_atlas/rational.hpp"

namespace heun {

/// Element of Q or of a quadratic extension Q(sqrt(d)), d squarefree and nonzero.
/// Stored as a + b*sqrt(d); d == 0 marks a plain rational (b must be 0 then).
/// The catalog syntax uses the basis w = (-1+sqrt(-3))/2 for d = -3 and i for d = -1.
class FieldElement {
  public:
    FieldElement() : d_(0) {}
    FieldElement(const Rat& a) : d_(0), a_(a) {}
    FieldElement(long a) : d_(0), a_(rat(a)) {}
    FieldElement(const Rat& a, const Rat& b, long d) : d_(b == 0 ? 0 : d), a_(a), b_(b) {
        if (b != 0 && d == 0) throw std::invalid_argument("sqrt coefficient without a field");
    }

    long field_d() const { return d_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }

    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("element is not rational");
        return a_;
    }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

    FieldElement operator-() const { return FieldElement(-a_, -b_, d_); }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        long d = join(x, y);
        return FieldElement(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        long d = join(x, y);
        Rat a = x.a_ * y.a_;
        if (d != 0) a += x.b_ * y.b_ * d;
        Rat b = x.a_ * y.b_ + x.b_ * y.a_;
        return FieldElement(a, b, d);
    }
    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (d_ == 0) return FieldElement(1 / a_);
        Rat n = a_ * a_ - b_ * b_ * d_;  // norm, nonzero since d is not a square
        return FieldElement(a_ / n, -b_ / n, d_);
    }
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inverse(); }

    FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
    FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
    FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
    FieldElement& operator/=(const FieldElement& y) { return *this = *this / y; }

    /// conjugate over Q
    FieldElement conj() const { return FieldElement(a_, -b_, d_); }

  private:
    static long join(const FieldElement& x, const FieldElement& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
        throw std::invalid_argument("mixed quadratic fields");
    }

    long d_;
    Rat a_, b_;
};

/// Formats in the catalog basis: "a+b*w" for d=-3 (w a primitive cube root of unity),
/// "a+b*i" for d=-1, plain rationals otherwise.
inline std::string elt_str(const FieldElement& e) {
    if (e.is_rational()) return rat_str(e.a());
    Rat p, q;
    char sym;
    if (e.field_d() == -3) {  // a + b*sqrt(-3) = (a+b) + 2b*w
        sym = 'w';
        q = 2 * e.b();
        p = e.a() + e.b();
    } else if (e.field_d() == -1) {
        sym = 'i';
        q = e.b();
        p = e.a();
    } else {
        return rat_str(e.a()) + "+" + rat_str(e.b()) + "*r" + std::to_string(e.field_d());
    }
    std::string out;
    if (p != 0 || q == 0) out += rat_str(p);
    if (q != 0) {
        if (!out.empty() && q > 0) out += "+";
        if (q == -1) out += "-";
        else if (q != 1) out += rat_str(q) + "*";
        out += sym;
    }
    return out;
}

/// Parses "p", "p/q", "a+b*w", "a-b*i", "w", "-i", ... (w-basis for d=-3).
inline FieldElement parse_elt(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty element literal");
    Rat p(0), q(0);
    long d = 0;
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("bad element literal: " + s);
        }
        size_t start = pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string term = s.substr(start, pos - start);
        if (term.empty()) throw std::invalid_argument("bad element literal: " + s);
        char last = term.back();
        if (last == 'w' || last == 'i') {
            d = (last == 'w') ? -3 : -1;
            std::string coef = term.substr(0, term.size() - 1);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            Rat c = coef.empty() ? rat(1) : parse_rat(coef);
            q += sign * c;
        } else {
            p += sign * parse_rat(term);
        }
        first = false;
    }
    if (d == 0) return FieldElement(p);
    if (d == -3) return FieldElement(p - q / 2, q / 2, -3);  // w = -1/2 + sqrt(-3)/2
    return FieldElement(p, q, -1);
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << elt_str(e); }

}  // namespace heun
