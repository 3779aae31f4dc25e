#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "heun_atlas/belyi.hpp"

namespace heun {
namespace solver_detail {

/// sparse multivariate polynomial over Q, exponent vectors of fixed length
struct MPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rat> terms;

    static MPoly constant(int nvars, const Rat& c) {
        MPoly p{nvars, {}};
        if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
        return p;
    }
    static MPoly var(int nvars, int i) {
        MPoly p{nvars, {}};
        std::vector<int> e(nvars, 0);
        e[i] = 1;
        p.terms[e] = 1;
        return p;
    }
    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() ||
               (terms.size() == 1 && terms.begin()->first == std::vector<int>(nvars, 0));
    }
    int degree_in(int v) const {
        int d = 0;
        for (const auto& [e, c] : terms) d = std::max(d, e[v]);
        return d;
    }
    void add_term(std::vector<int> e, const Rat& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (c != 0) terms.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r{a.nvars, {}};
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::vector<int> e(a.nvars);
                for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    /// coefficient of v^k as a polynomial with the v-slot zeroed
    MPoly coeff_of(int v, int k) const {
        MPoly r{nvars, {}};
        for (const auto& [e, c] : terms)
            if (e[v] == k) {
                std::vector<int> f = e;
                f[v] = 0;
                r.add_term(std::move(f), c);
            }
        return r;
    }
    /// substitute variable v := value (field element), keeping Q coefficients
    /// only when the value is rational; general version returns evaluation
    /// into field-poly space handled by the caller
    MPoly substitute(int v, const Rat& value) const {
        MPoly r{nvars, {}};
        for (const auto& [e, c] : terms) {
            Rat scaled = c;
            for (int k = 0; k < e[v]; ++k) scaled *= value;
            std::vector<int> f = e;
            f[v] = 0;
            r.add_term(std::move(f), scaled);
        }
        return r;
    }
};

/// determinant by Laplace expansion with memoization on column masks;
/// Sylvester matrices here stay small (size <= 12)
inline MPoly determinant(const std::vector<std::vector<MPoly>>& m) {
    const int n = int(m.size());
    std::map<unsigned, MPoly> memo;  // column mask (selected = still available)
    std::function<MPoly(int, unsigned)> det = [&](int row, unsigned mask) -> MPoly {
        if (row == n) return MPoly::constant(m.empty() ? 0 : m[0][0].nvars, 1);
        auto it = memo.find(mask);
        if (it != memo.end() && row == n - __builtin_popcount(mask)) return it->second;
        MPoly acc{m[0][0].nvars, {}};
        int sign = 1;
        for (int col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            if (!m[row][col].is_zero()) {
                MPoly sub = det(row + 1, mask & ~(1u << col));
                MPoly term = m[row][col] * sub;
                if (sign < 0) term = MPoly::constant(term.nvars, -1) * term;
                acc = acc + term;
            }
            sign = -sign;
        }
        memo[mask] = acc;
        return acc;
    };
    return det(0, (1u << n) - 1);
}

/// resultant of p, q with respect to variable v (Sylvester determinant)
inline MPoly resultant(const MPoly& p, const MPoly& q, int v) {
    int dp = p.degree_in(v), dq = q.degree_in(v);
    int n = dp + dq;
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly::constant(p.nvars, 0)));
    for (int i = 0; i < dq; ++i)
        for (int k = 0; k <= dp; ++k) m[i][i + dp - k] = p.coeff_of(v, k);
    for (int i = 0; i < dp; ++i)
        for (int k = 0; k <= dq; ++k) m[dq + i][i + dq - k] = q.coeff_of(v, k);
    return determinant(m);
}

/// rational roots of a univariate (in variable v) MPoly with Q coefficients
inline std::vector<Rat> rational_roots(const MPoly& p, int v) {
    int d = p.degree_in(v);
    std::vector<Rat> coeffs(d + 1, 0);
    for (const auto& [e, c] : p.terms) coeffs[e[v]] = c;
    // clear denominators, strip x^k
    Int lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rat_den(c).get_mpz_t());
    std::vector<Int> ic;
    for (const auto& c : coeffs) ic.push_back(rat_num(c) * (lcm / rat_den(c)));
    int low = 0;
    while (low <= d && ic[low] == 0) ++low;
    std::vector<Rat> roots;
    if (low > d) return roots;  // zero polynomial: caller handles
    if (low > 0) roots.push_back(0);
    std::vector<Int> nz(ic.begin() + low, ic.end());
    auto divisors = [](Int n) {
        n = abs(n);
        std::vector<Int> out;
        for (Int i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                out.push_back(i);
                out.push_back(n / i);
            }
        return out;
    };
    if (nz.size() >= 2) {
        for (const Int& p0 : divisors(nz.front()))
            for (const Int& q0 : divisors(nz.back()))
                for (int s : {1, -1}) {
                    Rat cand(s * p0, q0);
                    cand.canonicalize();
                    Rat acc = 0;
                    for (auto it = nz.rbegin(); it != nz.rend(); ++it) acc = acc * cand + Rat(*it);
                    if (acc == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// quadratic-field roots of the rational-root-free part when it is quadratic:
/// returns (a, b, d) pairs for roots a +- b sqrt(d)
struct QuadRoot {
    Rat a, b;
    long d;
};
inline std::vector<QuadRoot> quadratic_lift(const MPoly& p, int v) {
    // divide out rational roots first
    std::vector<Rat> coeffs(p.degree_in(v) + 1, 0);
    for (const auto& [e, c] : p.terms) coeffs[e[v]] = c;
    std::vector<Rat> work = coeffs;
    for (const Rat& r : rational_roots(p, v)) {
        bool divided = true;
        while (divided) {  // deflate all occurrences
            std::vector<Rat> quot(work.size() - 1, 0);
            Rat carry = 0;
            for (int i = int(work.size()) - 1; i >= 1; --i) {
                carry = work[i] + carry * r;
                quot[i - 1] = carry;
            }
            Rat rem = work[0] + carry * r;
            if (rem == 0 && work.size() > 1) work = quot;
            else divided = false;
        }
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    if (work.size() != 3) return {};
    Rat A = work[2], B = work[1], C = work[0];
    Rat disc = B * B - 4 * A * C;
    if (disc == 0) return {};
    // squarefree part of the discriminant
    Int num = rat_num(disc) * rat_den(disc);  // disc = num/den^2 * ...: use num*den
    long d = 1;
    Int n = num;
    int sign = n < 0 ? -1 : 1;
    n = abs(n);
    Int square = 1;
    for (Int f = 2; f * f <= n; ++f)
        while (n % (f * f) == 0) {
            n /= f * f;
            square *= f;
        }
    if (!n.fits_slong_p()) return {};
    d = sign * n.get_si();
    if (d == 1) return {};  // perfect square: rational roots already covered
    // disc = d * (square / den)^2  with den the denominator of disc
    Rat root_scale = Rat(square, rat_den(disc));
    root_scale.canonicalize();
    Rat a = -B / (2 * A);
    Rat b = root_scale / (2 * A);
    return {{a, b, d}, {a, -b, d}};
}

/// Square root within Q or a single quadratic extension; ambient_d restricts
/// which extension is allowed (0 = any single extension of Q).
inline std::optional<FieldElement> field_sqrt(const FieldElement& v, long ambient_d) {
    auto rational_sqrt = [](const Rat& r) -> std::optional<Rat> {
        if (r < 0) return std::nullopt;
        Int n = rat_num(r), d = rat_den(r), sn, sd;
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
            return std::nullopt;
        mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
        Rat out(sn, sd);
        out.canonicalize();
        return out;
    };
    if (v.is_zero()) return FieldElement(0);
    if (v.is_rational()) {
        Rat r = v.a();
        Int num = rat_num(r) * rat_den(r);  // r = num / den^2 up to squares
        int sign = num < 0 ? -1 : 1;
        Int m = abs(num), square = 1;
        for (Int f = 2; f * f <= m; ++f)
            while (m % (f * f) == 0) {
                m /= f * f;
                square *= f;
            }
        if (!m.fits_slong_p()) return std::nullopt;
        long d0 = sign * m.get_si();
        Rat scale(square, rat_den(r));
        scale.canonicalize();
        if (d0 == 1) return FieldElement(scale);
        if (ambient_d != 0 && ambient_d != d0) return std::nullopt;
        return FieldElement(Rat(0), scale, d0);
    }
    // a + b sqrt(d) = (p + q sqrt(d))^2 needs p^2 = (a +- sqrt(a^2 - b^2 d))/2
    long d = v.field_d();
    if (ambient_d != 0 && ambient_d != d) return std::nullopt;
    Rat disc = v.a() * v.a() - v.b() * v.b() * d;
    auto s = rational_sqrt(disc);
    if (!s) return std::nullopt;
    for (int sgn : {1, -1}) {
        Rat z = (v.a() + sgn * *s) / 2;
        auto p = rational_sqrt(z);
        if (!p || *p == 0) continue;
        Rat q = v.b() / (2 * *p);
        FieldElement cand(*p, q, d);
        if (cand * cand == v) return cand;
    }
    return std::nullopt;
}

/// roots of a quadratic over the element field, extending Q at most once
inline std::vector<FieldElement> quadratic_roots(const FieldElement& A, const FieldElement& B,
                                                 const FieldElement& C, long ambient_d) {
    FieldElement disc = B * B - FieldElement(4) * A * C;
    auto s = field_sqrt(disc, ambient_d);
    if (!s) return {};
    FieldElement two_a = FieldElement(2) * A;
    std::vector<FieldElement> out = {(-B + *s) / two_a};
    if (!s->is_zero()) out.push_back((-B - *s) / two_a);
    return out;
}

}  // namespace solver_detail

struct BelyiSolution {
    RatFun map;
    std::string field;  // Q / Qw / Qi / Q(sqrt d)
};

/// Exact solver for Belyi maps of degree <= 6 with a given branching pattern.
/// Sets up phi = c x^{e0} prod F_m^m / prod H_m^m with the largest parts
/// pinned at x = 0, 1, infinity, imposes the coefficient identities of
/// phi - 1, eliminates unknowns by successive resultants over Q and lifts
/// quadratic eliminants when they appear. Every returned map passes
/// verification; Mobius-equivalent duplicates are merged.
class BelyiSolver {
  public:
    explicit BelyiSolver(const BranchingPattern& pattern) : pat_(pattern) {
        if (pattern.degree > 6) throw std::invalid_argument("solver limited to degree 6");
        if (hurwitz_defect(pattern) != 0) throw std::invalid_argument("pattern is not Belyi-saturated");
    }

    std::vector<BelyiSolution> solve() const;

  private:
    BranchingPattern pat_;
};

namespace solver_detail {

struct Ansatz {
    // groups[fiber] = list of (multiplicity, count of unknown roots)
    // pinned part per fiber: fiber 0 at x=0, fiber 1 at x=1, fiber 2 at infinity
    std::array<std::vector<std::pair<int, int>>, 3> groups;
    std::array<int, 3> pinned;  // multiplicities of the pinned parts
    int degree = 0;
    int nvars = 0;  // unknown root coordinates + the constant c (last variable)
};

inline Ansatz build_ansatz(const BranchingPattern& pat) {
    Ansatz a;
    a.degree = pat.degree;
    // order fibers: infinity gets the fiber with the overall largest part
    std::array<IntPartition, 3> fibers;
    for (int i = 0; i < 3; ++i) fibers[i] = pat.fibers[i].all_parts();
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return fibers[i] > fibers[j]; });
    // roles: order[0] -> infinity, order[1] -> 0, order[2] -> 1
    std::array<IntPartition, 3> role;  // 0: zero fiber, 1: one fiber, 2: pole fiber
    role[2] = fibers[order[0]];
    role[0] = fibers[order[1]];
    role[1] = fibers[order[2]];
    int vars = 0;
    for (int r = 0; r < 3; ++r) {
        a.pinned[r] = role[r].front();
        std::map<int, int> mult;
        for (size_t i = 1; i < role[r].size(); ++i) ++mult[role[r][i]];
        for (auto [m, cnt] : mult) {
            a.groups[r].push_back({m, cnt});
            vars += cnt;
        }
    }
    a.nvars = vars + 1;  // + the multiplicative constant
    return a;
}

}  // namespace solver_detail

inline std::vector<BelyiSolution> BelyiSolver::solve() const {
    using namespace solver_detail;
    Ansatz az = build_ansatz(pat_);
    const int n = az.nvars;
    const int D = az.degree;

    // assemble the polynomial identity c*N_A - Den - c*N_B = 0 coefficientwise.
    // Each block of equal-multiplicity unknown points is one monic polynomial
    // whose coefficients are the variables, so solutions stay in small fields
    // even when individual points are conjugate. The x-slot is an extra formal
    // variable at index n.
    const int x = n;
    MPoly X = MPoly::var(n + 1, x);
    int next_var = 0;
    auto group_poly = [&](int cnt) {
        MPoly g = MPoly::constant(n + 1, 1);
        for (int k = 0; k < cnt; ++k) g = g * X;  // x^cnt
        MPoly xpow = MPoly::constant(n + 1, 1);
        for (int j = 0; j < cnt; ++j) {
            g = g + MPoly::var(n + 1, next_var++) * xpow;
            xpow = xpow * X;
        }
        return g;  // x^cnt + v_{cnt-1} x^{cnt-1} + ... + v_0 laid out ascending
    };
    auto fiber_poly = [&](int role, const MPoly& pinned_factor) {
        MPoly p = pinned_factor;
        for (auto [m, cnt] : az.groups[role]) {
            MPoly g = group_poly(cnt);
            for (int k = 0; k < m; ++k) p = p * g;
        }
        return p;
    };
    MPoly pinA = MPoly::constant(n + 1, 1);
    for (int k = 0; k < az.pinned[0]; ++k) pinA = pinA * X;
    MPoly pinB = MPoly::constant(n + 1, 1);
    MPoly xm1 = X - MPoly::constant(n + 1, 1);
    for (int k = 0; k < az.pinned[1]; ++k) pinB = pinB * xm1;

    MPoly numA = fiber_poly(0, pinA);
    MPoly numB = fiber_poly(1, pinB);
    MPoly den = fiber_poly(2, MPoly::constant(n + 1, 1));
    MPoly c = MPoly::var(n + 1, n - 1);
    MPoly identity = c * numA - den - c * numB;

    std::vector<MPoly> system;
    for (int k = 0; k < D; ++k) {
        MPoly eq = identity.coeff_of(x, k);
        eq.nvars = n + 1;
        if (!eq.is_zero()) system.push_back(eq);
    }

    // eliminate / back-substitute over Q with a quadratic lift at the end
    struct Partial {
        std::vector<std::optional<FieldElement>> value;
        long field_d = 0;
    };
    std::vector<Partial> results;

    // substitution of field values into an MPoly, producing a univariate Poly in x
    auto substitute_all = [&](const MPoly& p, const std::vector<std::optional<FieldElement>>& vals,
                              int var) {
        std::map<int, FieldElement> coeffs;
        for (const auto& [e, coef] : p.terms) {
            FieldElement term{Rat(coef)};
            bool ok = true;
            int deg = 0;
            for (int i = 0; i < n && ok; ++i) {
                if (e[i] == 0) continue;
                if (i == var) {
                    deg += e[i];
                } else if (vals[i]) {
                    for (int k = 0; k < e[i]; ++k) term *= *vals[i];
                } else {
                    ok = false;
                }
            }
            deg += e[x];
            if (!ok) throw std::logic_error("substitution with unassigned variable");
            auto it = coeffs.find(deg);
            if (it == coeffs.end()) coeffs.emplace(deg, term);
            else it->second += term;
        }
        int maxdeg = 0;
        for (auto& [d2, v] : coeffs) maxdeg = std::max(maxdeg, d2);
        std::vector<FieldElement> vec(maxdeg + 1);
        for (auto& [d2, v] : coeffs) vec[d2] = v;
        return Poly(std::move(vec));
    };

    std::function<void(std::vector<MPoly>, std::vector<int>, Partial)> descend =
        [&](std::vector<MPoly> sys, std::vector<int> vars, Partial partial) {
            // drop zeros, bail on nonzero constants
            std::vector<MPoly> live;
            for (auto& p : sys) {
                if (p.is_zero()) continue;
                if (p.is_constant()) return;  // inconsistent
                live.push_back(std::move(p));
            }
            // split off monomial factors: v^k * q = 0 branches into v = 0 or q = 0,
            // which keeps later resultants from vanishing identically
            for (size_t pi = 0; pi < live.size(); ++pi) {
                for (int v = 0; v < n; ++v) {
                    if (partial.value[v]) continue;
                    int minexp = 1 << 20;
                    for (const auto& [e, coef] : live[pi].terms) minexp = std::min(minexp, e[v]);
                    if (minexp < 1 || live[pi].terms.empty()) continue;
                    MPoly stripped{live[pi].nvars, {}};
                    for (const auto& [e, coef] : live[pi].terms) {
                        std::vector<int> f = e;
                        f[v] -= minexp;
                        stripped.add_term(std::move(f), coef);
                    }
                    // branch v = 0: substitute and drop the satisfied equation
                    {
                        Partial next = partial;
                        next.value[v] = FieldElement(0);
                        std::vector<MPoly> sub;
                        for (size_t j = 0; j < live.size(); ++j) {
                            if (j == pi) continue;
                            sub.push_back(live[j].substitute(v, Rat(0)));
                        }
                        std::vector<int> rest;
                        for (int u : vars)
                            if (u != v) rest.push_back(u);
                        descend(sub, rest, next);
                    }
                    // branch q = 0
                    if (!stripped.is_constant()) {
                        std::vector<MPoly> strip_branch = live;
                        strip_branch[pi] = stripped;
                        descend(strip_branch, vars, partial);
                    }
                    return;
                }
            }
            if (vars.empty() || live.empty()) {
                if (live.empty() && vars.empty()) results.push_back(partial);
                return;
            }
            if (vars.size() == 1) {
                // common roots of the univariate remainder
                int v = vars[0];
                Poly g;
                bool first = true;
                for (const auto& p : live) {
                    Poly u = substitute_all(p, partial.value, v);
                    g = first ? u.monic() : poly_gcd(g, u);
                    first = false;
                }
                if (g.is_zero()) return;  // underdetermined: ignore (handled by verification)
                if (g.degree() == 0) return;
                // roots of g over the current field: linear factors + rational
                // candidates + quadratic lift over Q
                std::vector<FieldElement> roots;
                if (g.degree() == 1) {
                    roots.push_back(-g.coeff(0) / g.coeff(1));
                } else if (g.degree() == 2) {
                    roots = quadratic_roots(g.coeff(2), g.coeff(1), g.coeff(0), partial.field_d);
                } else {
                    bool all_rational = true;
                    for (const auto& cf : g.coeffs())
                        all_rational = all_rational && cf.is_rational();
                    if (all_rational) {
                        MPoly uni{1, {}};
                        for (int k = 0; k <= g.degree(); ++k)
                            if (!g.coeff(k).is_zero())
                                uni.add_term(std::vector<int>{k}, g.coeff(k).rational_value());
                        for (const Rat& r : rational_roots(uni, 0)) roots.emplace_back(r);
                        if (partial.field_d == 0)
                            for (const auto& qr : quadratic_lift(uni, 0))
                                roots.push_back(FieldElement(qr.a, qr.b, qr.d));
                    }
                }
                for (const auto& r : roots) {
                    Partial next = partial;
                    next.value[v] = r;
                    if (!r.is_rational()) next.field_d = r.field_d();
                    results.push_back(next);
                }
                return;
            }
            // pick the variable of minimal maximal degree, eliminate by resultants
            int best = vars[0], best_deg = 1 << 20;
            for (int v : vars) {
                int dmax = 0;
                for (const auto& p : live) dmax = std::max(dmax, p.degree_in(v));
                if (dmax > 0 && dmax < best_deg) {
                    best_deg = dmax;
                    best = v;
                }
            }
            int v = best;
            const MPoly* pivot = nullptr;
            int pivot_deg = 1 << 20;
            for (const auto& p : live) {
                int d2 = p.degree_in(v);
                if (d2 > 0 && d2 < pivot_deg) {
                    pivot_deg = d2;
                    pivot = &p;
                }
            }
            std::vector<MPoly> reduced;
            for (const auto& p : live) {
                if (&p == pivot) continue;
                if (p.degree_in(v) == 0) reduced.push_back(p);
                else {
                    MPoly r = resultant(*pivot, p, v);
                    if (!r.is_zero()) reduced.push_back(r);
                }
            }
            std::vector<int> rest;
            for (int u : vars)
                if (u != v) rest.push_back(u);
            // recursively solve the reduced system, then extend by v
            // solve the reduced system for the remaining variables, then extend by v
            std::vector<Partial> saved;
            std::swap(saved, results);
            descend(reduced, rest, partial);
            std::vector<Partial> sub_solutions;
            std::swap(sub_solutions, results);
            std::swap(results, saved);
            for (const auto& sol : sub_solutions) descend(live, {v}, sol);
        };

    Partial init;
    init.value.assign(size_t(n), std::nullopt);
    std::vector<int> vars;
    for (int i = 0; i < n; ++i) vars.push_back(i);
    descend(system, vars, init);

    // rebuild maps, verify, dedupe
    std::vector<BelyiSolution> out;
    std::vector<RatFun> kept;
    for (const auto& res : results) {
        std::vector<FieldElement> sol;
        bool complete = true;
        for (int i = 0; i < n; ++i) {
            if (!res.value[i]) complete = false;
            else sol.push_back(*res.value[i]);
        }
        if (!complete) continue;
        if (sol[n - 1].is_zero()) continue;  // c = 0 is degenerate
        auto build = [&](int role, const Poly& pinned_factor) {
            Poly p = pinned_factor;
            int idx = 0;
            for (int r = 0; r < role; ++r)
                for (auto [m, cnt] : az.groups[r]) idx += cnt;
            for (auto [m, cnt] : az.groups[role]) {
                std::vector<FieldElement> coeffs;
                for (int j = 0; j < cnt; ++j) coeffs.push_back(sol[idx++]);
                coeffs.emplace_back(1);
                p *= Poly(std::move(coeffs)).pow(unsigned(m));
            }
            return p;
        };
        Poly numA = build(0, Poly::x().pow(unsigned(az.pinned[0])));
        Poly den = build(2, Poly(FieldElement(1)));
        RatFun phi(Poly(sol[n - 1]) * numA, den);
        if (!verify_covering(phi, pat_).passed()) continue;
        bool dup = false;
        for (const auto& prev : kept)
            if (prev == phi) dup = true;
        if (dup) continue;
        kept.push_back(phi);
        long d = 0;
        for (const auto& cf : phi.num().coeffs())
            if (!cf.is_rational()) d = cf.field_d();
        for (const auto& cf : phi.den().coeffs())
            if (!cf.is_rational()) d = cf.field_d();
        std::string field = d == 0 ? "Q" : d == -3 ? "Qw" : d == -1 ? "Qi" : "Q(sqrt " + std::to_string(d) + ")";
        out.push_back({phi, field});
    }

    // merge Mobius-equivalent solutions: mu fixes the pinned multiplicity data,
    // so candidate images of (0, 1, infinity) are same-multiplicity points
    auto mobius_equivalent = [&](const RatFun& f, const RatFun& g) {
        // candidate images of 0 (mult az.pinned[0] zero of g), of 1, of infinity
        auto points_of = [&](const Poly& p, int mult) {
            std::vector<FieldElement> pts;
            for (const auto& [m, fac] : squarefree_decomposition(p)) {
                if (m != mult) continue;
                if (fac.degree() == 1) {
                    pts.push_back(-fac.coeff(0) / fac.coeff(1));
                } else if (fac.degree() == 2) {
                    long d = fac.field_d();
                    for (const auto& r : quadratic_roots(fac.coeff(2), fac.coeff(1), fac.coeff(0), d))
                        pts.push_back(r);
                }
            }
            return pts;
        };
        auto zeros = points_of(g.num(), az.pinned[0]);
        Poly ones = g.num() - g.den();
        auto one_pts = points_of(ones, az.pinned[1]);
        // normalized maps always carry the pinned pole at infinity itself
        std::vector<std::optional<FieldElement>> inf_pts = {std::nullopt};
        for (const auto& pt : points_of(g.den(), az.pinned[2])) inf_pts.push_back(pt);
        for (const auto& z : zeros)
            for (const auto& o : one_pts)
                for (const auto& i : inf_pts) {
                    // mobius with mu(0)=z, mu(1)=o, mu(inf)=i
                    Poly X1 = Poly::x();
                    RatFun mu;
                    if (!i) {
                        // mu(x) = z + (o - z) x
                        mu = RatFun(Poly(z) + Poly(o - z) * X1, Poly(FieldElement(1)));
                    } else {
                        // mu(x) = (i(o-z)x + z(*i - o)) / ((o-z)x + (i-o))
                        FieldElement A = *i * (o - z), B = z * (*i - o);
                        FieldElement C = (o - z), E = (*i - o);
                        Poly nump(std::vector<FieldElement>{B, A});
                        Poly denp(std::vector<FieldElement>{E, C});
                        if (denp.is_zero()) continue;
                        mu = RatFun(nump, denp);
                    }
                    if (mu.is_constant()) continue;
                    try {
                        if (g.compose(mu) == f) return true;
                    } catch (const std::exception&) {
                    }
                }
        return false;
    };
    std::vector<BelyiSolution> merged;
    for (const auto& s : out) {
        bool dup = false;
        for (const auto& prev : merged)
            if (mobius_equivalent(s.map, prev.map) || mobius_equivalent(prev.map, s.map)) dup = true;
        if (!dup) merged.push_back(s);
    }
    return merged;
}

/// pattern degree <= 6; empty result means no covering exists
inline std::vector<BelyiSolution> solve_belyi(const BranchingPattern& pattern) {
    return BelyiSolver(pattern).solve();
}

}  // namespace heun
