#pragma once

#include "walg/diffpoly.hpp"
#include "walg/lie_core.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace walg {

// Polynomial in lambda with DiffPoly coefficients.
class LambdaPoly {
public:
    using Coeffs = std::map<std::uint32_t, DiffPoly>;

    LambdaPoly() = default;
    LambdaPoly(const DiffPoly& p) { add(0, p); }

    static LambdaPoly lambda_power(std::uint32_t k, const DiffPoly& c = DiffPoly(1))
    {
        LambdaPoly q;
        q.add(k, c);
        return q;
    }

    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    DiffPoly coeff(std::uint32_t k) const
    {
        const auto it = coeffs_.find(k);
        return it == coeffs_.end() ? DiffPoly() : it->second;
    }

    std::uint32_t degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    void add(std::uint32_t k, const DiffPoly& p)
    {
        if (p.is_zero())
            return;
        auto [it, inserted] = coeffs_.try_emplace(k, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    // Coefficient-wise map, dropping zeros.
    template <typename Fn>
    LambdaPoly map_coeffs(Fn&& fn) const
    {
        LambdaPoly r;
        for (const auto& [k, c] : coeffs_)
            r.add(k, fn(c));
        return r;
    }

    LambdaPoly& operator+=(const LambdaPoly& o)
    {
        for (const auto& [k, c] : o.coeffs_)
            add(k, c);
        return *this;
    }
    LambdaPoly& operator-=(const LambdaPoly& o)
    {
        for (const auto& [k, c] : o.coeffs_)
            add(k, -c);
        return *this;
    }

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator-(const LambdaPoly& a)
    {
        return a.map_coeffs([](const DiffPoly& c) { return -c; });
    }
    friend LambdaPoly operator*(const LambdaPoly& a, const DiffPoly& p)
    {
        return a.map_coeffs([&](const DiffPoly& c) { return c * p; });
    }
    friend LambdaPoly operator*(const DiffPoly& p, const LambdaPoly& a) { return a * p; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b)
    {
        LambdaPoly r;
        for (const auto& [i, ci] : a.coeffs_)
            for (const auto& [j, cj] : b.coeffs_)
                r.add(i + j, ci * cj);
        return r;
    }
    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

private:
    Coeffs coeffs_;
};

// (lambda + d)^s applied to q, d acting on the coefficients.
inline LambdaPoly lambda_plus_d_power(const LambdaPoly& q, std::uint32_t s)
{
    LambdaPoly r;
    for (const auto& [n, c] : q.coeffs()) {
        DerivativeCache dc(c);
        for (std::uint32_t k = 0; k <= s; ++k)
            r.add(n + s - k, binomial(s, k) * dc[k]);
    }
    return r;
}

// sum_n q_n (lambda + d)^n p, d acting on p.
inline LambdaPoly shift_apply(const LambdaPoly& q, const DiffPoly& p)
{
    LambdaPoly r;
    DerivativeCache dp(p);
    for (const auto& [n, c] : q.coeffs())
        for (std::uint32_t k = 0; k <= n; ++k)
            r.add(n - k, binomial(n, k) * (c * dp[k]));
    return r;
}

// q(lambda) -> q(-lambda - d) = sum_n (-lambda - d)^n q_n.
inline LambdaPoly skew_substitute(const LambdaPoly& q)
{
    LambdaPoly r;
    for (const auto& [n, c] : q.coeffs()) {
        DerivativeCache dc(c);
        for (std::uint32_t k = 0; k <= n; ++k)
            r.add(n - k, Rational(sign_power(n)) * binomial(n, k) * dc[k]);
    }
    return r;
}

// {X_lambda Y} = [X, Y] + (X|Y) lambda on basis generators.
inline LambdaPoly bracket_base(const LieAlgebraSpec& spec, std::size_t x, std::size_t y)
{
    LambdaPoly r;
    r.add(0, DiffPoly::from_lie(spec.bracket_table.at(x).at(y)));
    r.add(1, DiffPoly(spec.form.at(x).at(y)));
    return r;
}

namespace detail {

inline Monomial without_one(const Monomial& m, std::size_t k)
{
    Monomial r = m;
    if (r[k].pow == 1)
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
    else
        r[k].pow -= 1;
    return r;
}

// {X_lambda P} for a der-0 generator X; linear(br, t) is the polynomial standing for br^{(t)}, br = [X, b].
template <typename LinearImage>
LambdaPoly bracket_generator_left(const LieAlgebraSpec& spec, std::size_t x, const DiffPoly& p,
                                  LinearImage&& linear)
{
    std::map<std::uint32_t, DiffPoly> out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            const DVar b = m[k].var;
            const Rational mult = c * m[k].pow;
            const Monomial rest = without_one(m, k);
            const LieElement& br = spec.bracket_table[x][b.gen];
            const std::uint32_t s = b.der;
            if (!br.is_zero()) {
                for (std::uint32_t t = 0; t <= s; ++t) {
                    const Rational ct = mult * binomial(s, t);
                    const DiffPoly img = linear(br, t);
                    auto& slot = out[s - t];
                    for (const auto& [mi, ci] : img.terms())
                        slot.add_term(monomial_product(rest, mi), ct * ci);
                }
            }
            const Rational form = spec.form[x][b.gen];
            if (form != 0)
                out[s + 1].add_term(rest, mult * form);
        }
    }
    LambdaPoly r;
    for (auto& [k, c] : out)
        r.add(k, c);
    return r;
}

}  // namespace detail

// {X^{(r)}_lambda P} = (-lambda)^r {X_lambda P}, expanded by Leibniz and sesquilinearity.
inline LambdaPoly bracket_var_left(const LieAlgebraSpec& spec, DVar v, const DiffPoly& p)
{
    const LambdaPoly base = detail::bracket_generator_left(
        spec, v.gen, p, [](const LieElement& br, std::uint32_t t) { return DiffPoly::from_lie(br, t); });
    if (v.der == 0)
        return base;
    LambdaPoly r;
    for (const auto& [k, c] : base.coeffs())
        r.add(k + v.der, Rational(sign_power(v.der)) * c);
    return r;
}

namespace detail {

inline LambdaPoly bracket_monomial(const LieAlgebraSpec& spec, const Monomial& m, const DiffPoly& b,
                                   std::map<Monomial, LambdaPoly>& memo)
{
    if (m.empty())
        return {};
    if (m.size() == 1 && m[0].pow == 1)
        return bracket_var_left(spec, m[0].var, b);
    if (const auto it = memo.find(m); it != memo.end())
        return it->second;
    // m = c * d with c the first variable.
    const DVar cvar = m[0].var;
    const Monomial d = without_one(m, 0);
    DiffPoly cpoly = DiffPoly::variable(cvar);
    DiffPoly dpoly;
    dpoly.add_term(d, 1);
    LambdaPoly r = shift_apply(bracket_var_left(spec, cvar, b), dpoly);
    r += shift_apply(bracket_monomial(spec, d, b, memo), cpoly);
    memo.emplace(m, r);
    return r;
}

}  // namespace detail

// General lambda-bracket {A_lambda B} on V(g).
inline LambdaPoly bracket(const LieAlgebraSpec& spec, const DiffPoly& a, const DiffPoly& b)
{
    std::map<Monomial, LambdaPoly> memo;
    LambdaPoly r;
    for (const auto& [m, c] : a.terms())
        r += detail::bracket_monomial(spec, m, b, memo).map_coeffs([&](const DiffPoly& q) { return c * q; });
    return r;
}

// rho applied to every coefficient of {X_lambda P}, for X in n_+ and P over V(p).
// P is fixed by rho, so only the linear images of [X, b]^{(t)} need projecting.
inline LambdaPoly rho_bracket(const LieAlgebraSpec& spec, std::size_t x, const DiffPoly& p)
{
    if (spec.part.at(x) != Part::plus)
        throw std::invalid_argument("rho_bracket: " + spec.name_of(x) + " is not in n_+");
    for (const auto& [m, c] : p.terms())
        for (const auto& f : m)
            if (spec.part[f.var.gen] == Part::plus)
                throw std::invalid_argument("rho_bracket: argument contains n_+ variable " + spec.name_of(f.var.gen));
    return detail::bracket_generator_left(
        spec, x, p,
        [&](const LieElement& br, std::uint32_t t) {
            DiffPoly img;
            for (const auto& [pos, c] : br.terms()) {
                const RhoImage ri = rho_gen(spec, pos);
                if (ri.projected)
                    img.add_term({Factor{DVar{static_cast<std::uint32_t>(*ri.projected), t}, 1}}, c);
                if (t == 0)
                    img.add_term({}, c * ri.shift);
            }
            return img;
        });
}

}  // namespace walg
