#pragma once

#include <optional>
#include <utility>

#include "heun_atlas/poly.hpp"

namespace heun {

/// Reduced rational function: gcd(num, den) = 1, den monic and nonzero.
class RatFun {
  public:
    RatFun() : num_(0), den_(1) {}
    RatFun(Poly num, Poly den) { assign(std::move(num), std::move(den)); }
    explicit RatFun(Poly num) : num_(std::move(num)), den_(FieldElement(1)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    /// degree as a map P1 -> P1
    int map_degree() const { return std::max(num_.degree(), den_.degree()); }

    friend bool operator==(const RatFun& f, const RatFun& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }
    friend bool operator!=(const RatFun& f, const RatFun& g) { return !(f == g); }

    RatFun operator-() const { return RatFun(-num_, den_); }
    friend RatFun operator+(const RatFun& f, const RatFun& g) {
        return RatFun(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RatFun operator-(const RatFun& f, const RatFun& g) { return f + (-g); }
    friend RatFun operator*(const RatFun& f, const RatFun& g) {
        return RatFun(f.num_ * g.num_, f.den_ * g.den_);
    }
    friend RatFun operator/(const RatFun& f, const RatFun& g) {
        if (g.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFun(f.num_ * g.den_, f.den_ * g.num_);
    }

    /// nullopt at a pole
    std::optional<FieldElement> eval(const FieldElement& z) const {
        FieldElement d = den_.eval(z);
        if (d.is_zero()) return std::nullopt;
        return num_.eval(z) / d;
    }

    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// f(g(x)); the inner function must be nonconstant
    RatFun compose(const RatFun& g) const {
        if (g.is_constant()) throw std::invalid_argument("composition with a constant inner function");
        int n = std::max(num_.degree(), den_.degree());
        // homogenize: num(g) * gden^n and den(g) * gden^n share the gden powers
        std::vector<Poly> gn(n + 1), gd(n + 1);
        gn[0] = Poly(FieldElement(1));
        gd[0] = Poly(FieldElement(1));
        for (int i = 1; i <= n; ++i) {
            gn[i] = gn[i - 1] * g.num_;
            gd[i] = gd[i - 1] * g.den_;
        }
        Poly pn, pd;
        for (int i = 0; i <= n; ++i) {
            if (!num_.coeff(i).is_zero()) pn += num_.coeff(i) * gn[i] * gd[n - i];
            if (!den_.coeff(i).is_zero()) pd += den_.coeff(i) * gn[i] * gd[n - i];
        }
        return RatFun(pn, pd);
    }

  private:
    void assign(Poly num, Poly den) {
        if (den.is_zero()) throw std::domain_error("zero denominator");
        Poly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        FieldElement lc = den.leading().inverse();
        num_ = lc * num;
        den_ = lc * den;
    }

    Poly num_, den_;
};

}  // namespace heun
