#pragma once

#include "walg/lie_core.hpp"
#include "walg/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace walg {

// X^{(der)} where X is the basis element at position gen.
struct DVar {
    std::uint32_t gen = 0;
    std::uint32_t der = 0;

    friend auto operator<=>(const DVar&, const DVar&) = default;
};

struct Factor {
    DVar var;
    std::uint32_t pow = 1;

    friend auto operator<=>(const Factor&, const Factor&) = default;
};

// Sorted by var, no repeated vars, no zero powers.
using Monomial = std::vector<Factor>;

inline Monomial monomial_product(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->var < j->var)
            r.push_back(*i++);
        else if (j->var < i->var)
            r.push_back(*j++);
        else {
            r.push_back({i->var, i->pow + j->pow});
            ++i;
            ++j;
        }
    }
    r.insert(r.end(), i, a.end());
    r.insert(r.end(), j, b.end());
    return r;
}

inline std::uint32_t monomial_degree(const Monomial& m)
{
    std::uint32_t d = 0;
    for (const auto& f : m)
        d += f.pow;
    return d;
}

class DiffPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    DiffPoly() = default;
    DiffPoly(const Rational& c) { add_term({}, c); }
    DiffPoly(long c) : DiffPoly(Rational(c)) {}

    static DiffPoly variable(DVar v, const Rational& c = 1)
    {
        DiffPoly p;
        p.add_term({Factor{v, 1}}, c);
        return p;
    }

    static DiffPoly variable(std::size_t gen, std::uint32_t der = 0, const Rational& c = 1)
    {
        return variable(DVar{static_cast<std::uint32_t>(gen), der}, c);
    }

    // Linear polynomial sum_p c_p X_p^{(der)}.
    static DiffPoly from_lie(const LieElement& x, std::uint32_t der = 0)
    {
        DiffPoly p;
        for (const auto& [pos, c] : x.terms())
            p.add_term({Factor{DVar{static_cast<std::uint32_t>(pos), der}, 1}}, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    Rational constant_coeff() const
    {
        const auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coeff(const Monomial& m) const
    {
        const auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add_term(Monomial&& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), c);
            return;
        }
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }

    // this += scale * a * b
    void add_product(const DiffPoly& a, const DiffPoly& b, const Rational& scale = 1)
    {
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                add_term(monomial_product(ma, mb), scale * ca * cb);
    }

    std::uint32_t max_der() const
    {
        std::uint32_t r = 0;
        for (const auto& [m, c] : terms_)
            for (const auto& f : m)
                r = std::max(r, f.var.der);
        return r;
    }

    // Terms of total polynomial degree k.
    DiffPoly homogeneous_part(std::uint32_t k) const
    {
        DiffPoly r;
        for (const auto& [m, c] : terms_)
            if (monomial_degree(m) == k)
                r.terms_.emplace(m, c);
        return r;
    }

    DiffPoly& operator+=(const DiffPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    DiffPoly& operator-=(const DiffPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    DiffPoly& operator*=(const Rational& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_)
            v *= c;
        return *this;
    }
    DiffPoly& operator*=(const DiffPoly& o)
    {
        DiffPoly r;
        r.add_product(*this, o);
        return *this = std::move(r);
    }

    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator-(DiffPoly a) { return a *= Rational(-1); }
    friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b)
    {
        DiffPoly r;
        r.add_product(a, b);
        return r;
    }
    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

private:
    Terms terms_;
};

// The derivation: X^{(r)} -> X^{(r+1)}, extended by Leibniz.
inline DiffPoly derive(const DiffPoly& p)
{
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            Monomial lowered = m;
            const Factor f = m[k];
            if (f.pow == 1)
                lowered.erase(lowered.begin() + static_cast<std::ptrdiff_t>(k));
            else
                lowered[k].pow -= 1;
            r.add_term(monomial_product(lowered, {Factor{DVar{f.var.gen, f.var.der + 1}, 1}}), c * f.pow);
        }
    }
    return r;
}

inline DiffPoly derive(const DiffPoly& p, unsigned k)
{
    DiffPoly r = p;
    for (unsigned s = 0; s < k && !r.is_zero(); ++s)
        r = derive(r);
    return r;
}

// Memoized derivatives of one polynomial.
class DerivativeCache {
public:
    explicit DerivativeCache(const DiffPoly& p) : cache_{p} {}

    const DiffPoly& operator[](std::size_t k)
    {
        while (cache_.size() <= k)
            cache_.push_back(derive(cache_.back()));
        return cache_[k];
    }

private:
    std::vector<DiffPoly> cache_;
};

inline DiffPoly partial(const DiffPoly& p, DVar v)
{
    DiffPoly r;
    for (const auto& [m, c] : p.terms())
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k].var != v)
                continue;
            Monomial lowered = m;
            if (m[k].pow == 1)
                lowered.erase(lowered.begin() + static_cast<std::ptrdiff_t>(k));
            else
                lowered[k].pow -= 1;
            r.add_term(std::move(lowered), c * m[k].pow);
        }
    return r;
}

// Applies the algebra homomorphism defined on variables by image(v).
inline DiffPoly substitute(const DiffPoly& p, const std::function<DiffPoly(DVar)>& image)
{
    std::map<DVar, std::vector<DiffPoly>> powers;  // powers[v][k] = image(v)^(k+1)
    auto power_of = [&](DVar v, std::uint32_t k) -> const DiffPoly& {
        auto& list = powers[v];
        if (list.empty())
            list.push_back(image(v));
        while (list.size() < k)
            list.push_back(list.back() * list.front());
        return list[k - 1];
    };
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        DiffPoly term(c);
        for (const auto& f : m) {
            term = term * power_of(f.var, f.pow);
            if (term.is_zero())
                break;
        }
        r += term;
    }
    return r;
}

// rho: V(g) -> V(p), X -> pi_p(X) + (f|X) on der-0 variables, pi_p(X)^{(r)} otherwise.
inline DiffPoly rho_variable(const LieAlgebraSpec& spec, DVar v)
{
    const RhoImage img = rho_gen(spec, v.gen);
    DiffPoly r;
    if (img.projected)
        r = DiffPoly::variable(DVar{static_cast<std::uint32_t>(*img.projected), v.der});
    if (v.der == 0)
        r += DiffPoly(img.shift);
    return r;
}

inline DiffPoly rho_hom(const LieAlgebraSpec& spec, const DiffPoly& p)
{
    return substitute(p, [&](DVar v) { return rho_variable(spec, v); });
}

// phi: V(p) -> V(h), kills n_- variables; rejects n_+ variables.
inline DiffPoly phi_hom(const LieAlgebraSpec& spec, const DiffPoly& p)
{
    return substitute(p, [&](DVar v) {
        switch (spec.part.at(v.gen)) {
        case Part::plus: throw std::invalid_argument("phi_hom: n_+ variable " + spec.name_of(v.gen));
        case Part::minus: return DiffPoly();
        case Part::cartan: return DiffPoly::variable(v);
        }
        return DiffPoly();
    });
}

}  // namespace walg
