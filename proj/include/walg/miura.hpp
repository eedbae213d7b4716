#pragma once

#include "walg/wgen.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace walg {

// Cartan elements x_1 .. x_m of the first half of the Miura product:
// E_11 .. E_nn for gl_n, F_11 .. F_nn for B, C, D and F~_11, F~_22, F~_33 for g_2.
inline std::vector<LieElement> miura_cartan(const LieAlgebraSpec& spec)
{
    if (spec.kind == Kind::G2) {
        const auto d = detail::g2_diagonal(spec);
        return {d.begin(), d.end()};
    }
    std::vector<LieElement> x;
    for (int i = 1; i <= spec.rank; ++i)
        x.push_back(element(spec, i, i));
    return x;
}

// The factors of the Miura product in order. Type D carries d^{-1} in the middle.
inline std::vector<OpSeries> miura_factors(const LieAlgebraSpec& spec, int depth = default_truncation)
{
    const auto x = miura_cartan(spec);
    std::vector<OpSeries> f;
    for (const auto& xi : x)
        f.push_back(detail::d_plus(xi, depth));
    if (spec.kind == Kind::A)
        return f;
    if (spec.kind == Kind::B || spec.kind == Kind::G2)
        f.push_back(OpSeries::d_power(1, depth));
    else if (spec.kind == Kind::D)
        f.push_back(OpSeries::d_power(-1, depth));
    for (auto it = x.rbegin(); it != x.rend(); ++it)
        f.push_back(detail::d_plus(-*it, depth));
    return f;
}

struct MiuraProduct {
    OpSeries op;
    std::map<int, DiffPoly> w;  // same indices as GeneratorSet::w
    std::optional<DiffPoly> y;  // y~_n, type D only
};

// Type D: the part of op below d^0 must equal (-1)^n y~ d^{-1} y~ down to the truncation floor.
inline std::optional<int> check_miura_tail(const MiuraProduct& m, int n)
{
    const int depth = m.op.depth();
    const OpSeries inv_y = OpSeries::d_power(-1, depth) * OpSeries::scalar(*m.y, depth);
    const OpSeries tail = Rational(n % 2 == 0 ? 1 : -1) * (*m.y * inv_y);
    const int floor = std::max(m.op.floor().value_or(-depth), tail.floor().value_or(-depth));
    for (int k = -1; k >= floor; --k)
        if (m.op.coeff(k) != tail.coeff(k))
            return k;
    return std::nullopt;
}

inline MiuraProduct miura_product(const LieAlgebraSpec& spec, int depth = default_truncation)
{
    if (depth < 1)
        throw std::invalid_argument("miura_product: truncation depth must be at least 1");
    MiuraProduct m;
    // the n factors left of d^{-1} raise the floor by n, so work n steps deeper
    const int inner = spec.kind == Kind::D ? depth + spec.rank : depth;
    OpSeries full = OpSeries::d_power(0, inner);
    for (const auto& f : miura_factors(spec, inner))
        full = full * f;
    m.op = OpSeries(depth);
    if (full.floor())
        m.op.raise_floor(std::max(*full.floor(), -depth));
    for (const auto& [k, c] : full.coeffs())
        m.op.add(k, c);
    const int order = operator_order(spec);
    for (int k = spec.kind == Kind::A ? 1 : 2; k <= order; ++k)
        m.w.emplace(k, m.op.coeff(order - k));
    if (spec.kind == Kind::D) {
        OpSeries half = OpSeries::d_power(0, depth);
        for (const auto& xi : miura_cartan(spec))
            half = half * detail::d_plus(xi, depth);
        m.y = constant_term(half);
        if (const auto bad = check_miura_tail(m, spec.rank))
            throw std::logic_error("miura_product: tail mismatch at d^" + std::to_string(*bad));
    }
    return m;
}

struct PhiAgreement {
    bool ok = true;
    std::vector<std::string> mismatches;  // labels such as "w3" or "y"
};

inline PhiAgreement phi_agreement(const LieAlgebraSpec& spec, const GeneratorSet& gs, int depth = default_truncation)
{
    const auto m = miura_product(spec, depth);
    PhiAgreement r;
    auto compare = [&](const std::string& label, const DiffPoly& w, const DiffPoly& wt) {
        if (phi_hom(spec, w) != wt) {
            r.ok = false;
            r.mismatches.push_back(label);
        }
    };
    for (const auto& [k, w] : gs.w) {
        const auto it = m.w.find(k);
        compare("w" + std::to_string(k), w, it == m.w.end() ? DiffPoly() : it->second);
    }
    for (const auto& [k, wt] : m.w)
        if (!gs.w.count(k) && !wt.is_zero()) {
            r.ok = false;
            r.mismatches.push_back("w" + std::to_string(k));
        }
    if (gs.y || m.y)
        compare("y", gs.y.value_or(DiffPoly()), m.y.value_or(DiffPoly()));
    return r;
}

// V_i = sum_r V_ir sum_k direction[k] d/dx_k^{(r)}, x_k running over the Cartan basis.
struct ScreeningOp {
    int index = 0;  // 0-based simple root
    Rational epsilon;
    std::vector<DiffPoly> coeffs;     // V_i0 .. V_iR
    std::vector<Rational> direction;  // alpha_i on the Cartan basis
    std::vector<std::size_t> cartan;  // Cartan basis positions
};

// V_i0 = 1, V_ip = -(1/eps_i) sum_{r<p} C(p-1, r) V_ir h_i^{(p-1-r)} with h_i the coroot.
inline std::vector<ScreeningOp> build_screenings(const LieAlgebraSpec& spec, int R)
{
    if (R < 0)
        throw std::invalid_argument("build_screenings: negative order");
    std::vector<ScreeningOp> out;
    for (std::size_t i = 0; i < spec.coroots.size(); ++i) {
        ScreeningOp s;
        s.index = static_cast<int>(i);
        s.epsilon = spec.epsilons[i];
        s.direction = spec.root_values[i];
        s.cartan = spec.cartan_basis;
        const DiffPoly h = DiffPoly::from_lie(spec.coroots[i]);
        DerivativeCache dh(h);
        s.coeffs.emplace_back(1);
        for (int p = 1; p <= R; ++p) {
            DiffPoly v;
            for (int r = 0; r < p; ++r)
                v.add_product(s.coeffs[static_cast<std::size_t>(r)], dh[static_cast<std::size_t>(p - 1 - r)],
                              binomial(p - 1, r));
            v *= -1 / s.epsilon;
            s.coeffs.push_back(std::move(v));
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline DiffPoly apply_screening(const ScreeningOp& s, const DiffPoly& q)
{
    std::uint32_t top = 0;
    for (const auto& [m, c] : q.terms())
        for (const auto& f : m) {
            if (std::find(s.cartan.begin(), s.cartan.end(), f.var.gen) == s.cartan.end())
                throw std::invalid_argument("apply_screening: non-Cartan variable");
            top = std::max(top, f.var.der);
        }
    if (!q.is_constant() && top >= s.coeffs.size())
        throw std::out_of_range("apply_screening: derivative order " + std::to_string(top) + " exceeds the screening order " +
                                std::to_string(s.coeffs.size() - 1));
    DiffPoly out;
    for (std::uint32_t r = 0; r <= top; ++r)
        for (std::size_t k = 0; k < s.cartan.size(); ++k) {
            if (s.direction[k] == 0)
                continue;
            const DiffPoly d = partial(q, DVar{static_cast<std::uint32_t>(s.cartan[k]), r});
            if (!d.is_zero())
                out.add_product(s.coeffs[r], d, s.direction[k]);
        }
    return out;
}

struct ScreeningResidual {
    int screening = 0;  // 0-based
    std::string label;
    DiffPoly residual;
};

// Applies every screening to every w~ (and y~); returns the nonzero results.
inline std::vector<ScreeningResidual> screening_sweep(const LieAlgebraSpec& spec, const MiuraProduct& m)
{
    std::vector<std::pair<std::string, const DiffPoly*>> targets;
    for (const auto& [k, w] : m.w)
        targets.emplace_back("w" + std::to_string(k), &w);
    if (m.y)
        targets.emplace_back("y", &*m.y);
    std::uint32_t R = 0;
    for (const auto& t : targets)
        R = std::max(R, t.second->max_der());
    std::vector<ScreeningResidual> bad;
    for (const auto& s : build_screenings(spec, static_cast<int>(R)))
        for (const auto& [label, p] : targets) {
            DiffPoly r = apply_screening(s, *p);
            if (!r.is_zero())
                bad.push_back({s.index, label, std::move(r)});
        }
    return bad;
}

struct GlSpecialElements {
    DiffPoly C;                    // E_11 + ... + E_nn
    DiffPoly P;                    // -1/2 sum E_ii^2 - sum (n-i) E_ii'
    std::vector<OpSeries> e_ops;   // (u+x_1)...(u+x_n) = sum_m e_m u^{n-m}, x_i = d + E_ii
    std::vector<DiffPoly> e;       // constant terms of e_ops
};

// The linear term of P is differentiated; derived = false gives -sum (n-i) E_ii instead.
inline GlSpecialElements special_elements_glN(const LieAlgebraSpec& spec, bool derived = true)
{
    if (spec.kind != Kind::A)
        throw std::invalid_argument("special_elements_glN: gl_n only");
    const int n = spec.rank;
    GlSpecialElements s;
    for (int i = 1; i <= n; ++i) {
        const auto pos = spec.index_of(GeneratorId::E(i, i));
        const DiffPoly e = DiffPoly::variable(pos);
        s.C += e;
        s.P += make_rational(-1, 2) * e * e;
        s.P -= Rational(n - i) * DiffPoly::variable(pos, derived ? 1 : 0);
    }
    // expand the product in u: coefficient of u^{n-m} is the sum over m-subsets of ordered x's
    std::vector<OpSeries> poly{OpSeries::d_power(0)};
    for (int i = 1; i <= n; ++i) {
        const OpSeries x = detail::d_plus(element(spec, i, i), default_truncation);
        std::vector<OpSeries> next(poly.size() + 1);
        for (std::size_t m = 0; m < poly.size(); ++m) {
            next[m] += poly[m];
            next[m + 1] += poly[m] * x;
        }
        poly = std::move(next);
    }
    s.e_ops = poly;
    for (const auto& op : poly)
        s.e.push_back(constant_term(op));
    return s;
}

// Ordered product of (1 + t c_k f_k)^{power_k} truncated at t^up_to, with power_k = +1 or -1.
namespace detail {

struct TFactor {
    OpSeries f;
    Rational c;
    int power;
};

inline std::vector<OpSeries> t_product(const std::vector<TFactor>& factors, int up_to, int depth)
{
    std::vector<OpSeries> acc(static_cast<std::size_t>(up_to) + 1, OpSeries(depth));
    acc[0] = OpSeries::d_power(0, depth);
    for (const auto& fac : factors) {
        // series of the factor: 1 + c f t, or sum_k (-c f)^k t^k
        std::vector<OpSeries> ser(static_cast<std::size_t>(up_to) + 1, OpSeries(depth));
        ser[0] = OpSeries::d_power(0, depth);
        for (int k = 1; k <= up_to; ++k) {
            if (fac.power == 1 && k > 1)
                break;
            const Rational sign = fac.power == 1 ? fac.c : -fac.c;
            ser[static_cast<std::size_t>(k)] = sign * (ser[static_cast<std::size_t>(k - 1)] * fac.f);
        }
        std::vector<OpSeries> next(static_cast<std::size_t>(up_to) + 1, OpSeries(depth));
        for (int a = 0; a <= up_to; ++a)
            for (int b = 0; a + b <= up_to; ++b)
                if (!acc[static_cast<std::size_t>(a)].is_zero() && !ser[static_cast<std::size_t>(b)].is_zero())
                    next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * ser[static_cast<std::size_t>(b)];
        acc = std::move(next);
    }
    return acc;
}

inline OpSeries phi_op(const LieAlgebraSpec& spec, const OpSeries& op)
{
    OpSeries r(op.depth());
    if (op.floor())
        r.raise_floor(*op.floor());
    for (const auto& [k, c] : op.coeffs())
        r.add(k, phi_hom(spec, c));
    return r;
}

}  // namespace detail

struct FamilyImageResult {
    bool ok = true;
    std::optional<int> failing_degree;
};

// Type D: phi(e(t)) = (1+t a_11)...(1+t a_nn)(1+t d)^{-1}(1+t a_n'n')...(1+t a_1'1'), a_ii = d + F_ii.
inline FamilyImageResult phi_e_family_check(const LieAlgebraSpec& spec, int up_to, int depth = default_truncation)
{
    if (spec.kind != Kind::D)
        throw std::invalid_argument("phi_e_family_check: type D only");
    const auto x = miura_cartan(spec);
    std::vector<detail::TFactor> factors;
    for (const auto& xi : x)
        factors.push_back({detail::d_plus(xi, depth), Rational(1), 1});
    factors.push_back({OpSeries::d_power(1, depth), Rational(1), -1});
    for (auto it = x.rbegin(); it != x.rend(); ++it)
        factors.push_back({detail::d_plus(-*it, depth), Rational(1), 1});
    const auto expected = detail::t_product(factors, up_to, depth);
    const auto e = e_family(spec, up_to, depth);
    for (int m = 0; m <= up_to; ++m)
        if (detail::phi_op(spec, e[static_cast<std::size_t>(m)]) != expected[static_cast<std::size_t>(m)])
            return {false, m};
    return {};
}

// Type D: phi(h_m) = 1/2 sum a_1'1'^{k_1'} ... a_n'n'^{k_n'} a_nn^{k_n} ... a_11^{k_1},
// the sum over tuples with k_n' = 0 plus the sum over tuples with k_n = 0.
inline std::vector<OpSeries> phi_h_formula(const LieAlgebraSpec& spec, int up_to, int depth = default_truncation)
{
    if (spec.kind != Kind::D)
        throw std::invalid_argument("phi_h_formula: type D only");
    const auto x = miura_cartan(spec);
    const int n = spec.rank;
    auto ordered = [&](bool drop_primed) {
        std::vector<detail::TFactor> f;
        for (int i = 0; i < n; ++i)
            if (!(drop_primed && i == n - 1))
                f.push_back({detail::d_plus(-x[static_cast<std::size_t>(i)], depth), Rational(-1), -1});
        for (int i = n - 1; i >= 0; --i)
            if (drop_primed || i != n - 1)
                f.push_back({detail::d_plus(x[static_cast<std::size_t>(i)], depth), Rational(-1), -1});
        return detail::t_product(f, up_to, depth);
    };
    const auto a = ordered(true), b = ordered(false);
    std::vector<OpSeries> out;
    for (int m = 0; m <= up_to; ++m)
        out.push_back(make_rational(1, 2) * (a[static_cast<std::size_t>(m)] + b[static_cast<std::size_t>(m)]));
    return out;
}

inline FamilyImageResult phi_h_family_check(const LieAlgebraSpec& spec, int up_to, int depth = default_truncation)
{
    const auto expected = phi_h_formula(spec, up_to, depth);
    const auto h = h_family(spec, up_to, depth);
    for (int m = 0; m <= up_to; ++m)
        if (detail::phi_op(spec, h[static_cast<std::size_t>(m)]) != expected[static_cast<std::size_t>(m)])
            return {false, m};
    return {};
}

}  // namespace walg
