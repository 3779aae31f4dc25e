#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heun_atlas/field.hpp"

namespace heun {

/// Univariate polynomial over one field, coefficients ascending.
/// The zero polynomial has an empty coefficient vector; degree() returns
/// kZeroDegree for it and every degree comparison spells that case out.
class Poly {
  public:
    static constexpr int kZeroDegree = -0x40000000;  // -infinity stand-in

    Poly() = default;
    Poly(const FieldElement& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    Poly(long c) : Poly(FieldElement(c)) {}
    explicit Poly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<FieldElement>{FieldElement(0), FieldElement(1)}); }
    static Poly monomial(const FieldElement& c, int e) {
        std::vector<FieldElement> v(e + 1);
        v[e] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroDegree : int(coeffs_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(int i) const {
        return (i >= 0 && i < int(coeffs_.size())) ? coeffs_[i] : FieldElement(0);
    }
    const FieldElement& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    long field_d() const {
        for (const auto& c : coeffs_)
            if (!c.is_rational()) return c.field_d();
        return 0;
    }

    friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<FieldElement> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(int(i)) + q.coeff(int(i));
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly();
        std::vector<FieldElement> v(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (size_t i = 0; i < p.coeffs_.size(); ++i)
            for (size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const FieldElement& c, const Poly& p) { return Poly(c) * p; }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    /// quotient and remainder; divisor must be nonzero
    friend std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
        if (q.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly r = p, quo;
        FieldElement lc = q.leading().inverse();
        int dq = q.degree();
        while (!r.is_zero() && r.degree() >= dq) {
            FieldElement c = r.leading() * lc;
            int e = r.degree() - dq;
            quo += Poly::monomial(c, e);
            r -= Poly::monomial(c, e) * q;
        }
        return {quo, r};
    }
    friend Poly operator/(const Poly& p, const Poly& q) { return divmod(p, q).first; }
    friend Poly operator%(const Poly& p, const Poly& q) { return divmod(p, q).second; }

    bool divides(const Poly& p) const { return divmod(p, *this).second.is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        FieldElement inv = leading().inverse();
        for (auto& c : r.coeffs_) c = c * inv;
        return r;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<FieldElement> v(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = FieldElement(long(i)) * coeffs_[i];
        return Poly(std::move(v));
    }

    FieldElement eval(const FieldElement& z) const {
        FieldElement acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly acc(FieldElement(1)), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return acc;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<FieldElement> coeffs_;
};

/// Monic gcd; gcd(p, 0) = monic(p).
inline Poly poly_gcd(Poly p, Poly q) {
    while (!q.is_zero()) {
        Poly r = p % q;
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

/// Yun squarefree decomposition: p = lc * prod f_i^i with the f_i monic,
/// squarefree and pairwise coprime. Returns pairs (i, f_i), f_i nonconstant.
inline std::vector<std::pair<int, Poly>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
    std::vector<std::pair<int, Poly>> out;
    Poly f = p.monic();
    if (f.degree() <= 0) return out;
    Poly g = poly_gcd(f, f.derivative());
    Poly c = f / g;                      // product of distinct factors
    Poly d = f.derivative() / g - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        Poly fi = poly_gcd(c, d);
        if (fi.degree() > 0) out.emplace_back(i, fi);
        c = c / fi;
        d = d / fi - c.derivative();
        ++i;
    }
    return out;
}

/// Multiset of root multiplicities over the algebraic closure, reported as
/// (multiplicity, number of roots) pairs; no root finding involved.
inline std::vector<std::pair<int, int>> multiplicity_profile(const Poly& p) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [mult, f] : squarefree_decomposition(p)) out.emplace_back(mult, f.degree());
    return out;
}

/// Root multiplicities as a partition of deg(p), descending.
inline std::vector<int> root_partition(const Poly& p) {
    std::vector<int> parts;
    for (const auto& [mult, count] : multiplicity_profile(p))
        for (int i = 0; i < count; ++i) parts.push_back(mult);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

inline std::string poly_str(const Poly& p) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i <= std::max(p.degree(), 0); ++i) {
        if (i) os << ",";
        os << elt_str(p.coeff(i));
    }
    os << "]";
    return os.str();
}

/// "[c0,c1,...]" ascending, elements in the catalog syntax
inline Poly parse_poly(const std::string& s) {
    std::string t = s;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("bad polynomial literal: " + s);
    t = t.substr(1, t.size() - 2);
    std::vector<FieldElement> coeffs;
    std::string cur;
    std::istringstream is(t);
    while (std::getline(is, cur, ',')) coeffs.push_back(parse_elt(cur));
    return Poly(std::move(coeffs));
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << poly_str(p); }

}  // namespace heun
