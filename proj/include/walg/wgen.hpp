#pragma once

#include "walg/opalg.hpp"
#include "walg/pva.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace walg {

namespace detail {

inline OpSeries lie_op(const LieElement& x, int depth) { return OpSeries::scalar(DiffPoly::from_lie(x), depth); }

inline OpSeries d_plus(const LieElement& x, int depth) { return OpSeries::d_power(1, depth) + lie_op(x, depth); }

inline OpSeries constant_op(long c, int depth) { return OpSeries::scalar(DiffPoly(c), depth); }

// Matrix-type algebras: entry (i, j) = delta_ij d + X_ij for i >= j, superdiagonal 1 then -1.
inline OpMatrix classical_matrix(const LieAlgebraSpec& spec, int depth)
{
    const int size = spec.matrix_size;
    const int n = spec.rank;
    OpMatrix m(static_cast<std::size_t>(size), depth);
    for (int i = 1; i <= size; ++i) {
        for (int j = 1; j <= i; ++j) {
            const LieElement x = element(spec, i, j);
            m.at(i - 1, j - 1) = i == j ? d_plus(x, depth) : lie_op(x, depth);
        }
        if (i < size)
            m.at(i - 1, i) = constant_op(spec.kind == Kind::A || i <= n ? 1 : -1, depth);
    }
    return m;
}

// The Cartan entries F~_11, F~_22, F~_33 of the g_2 matrix.
inline std::array<LieElement, 3> g2_diagonal(const LieAlgebraSpec& spec)
{
    const LieElement ha = element(spec, G2Root::Ha), hb = element(spec, G2Root::Hb);
    return {-ha - make_rational(2, 3) * hb, -ha - make_rational(1, 3) * hb, -make_rational(1, 3) * hb};
}

inline OpMatrix g2_matrix(const LieAlgebraSpec& spec, int depth)
{
    auto g = [&](G2Root r) { return element(spec, r); };
    auto R = [](long p, long q = 1) { return make_rational(p, q); };
    const auto [f11, f22, f33] = g2_diagonal(spec);
    const LieElement yb = g(G2Root::Yb), ya = g(G2Root::Ya), yab = g(G2Root::Yab);
    const LieElement ya2b = g(G2Root::Ya2b), ya3b = g(G2Root::Ya3b), y2a3b = g(G2Root::Y2a3b);

    OpMatrix m(7, depth);
    auto set = [&](int r, int c, const LieElement& x) { m.at(r - 1, c - 1) = lie_op(x, depth); };
    m.at(0, 0) = d_plus(f11, depth);
    m.at(1, 1) = d_plus(f22, depth);
    m.at(2, 2) = d_plus(f33, depth);
    m.at(3, 3) = OpSeries::d_power(1, depth);
    m.at(4, 4) = d_plus(-f33, depth);
    m.at(5, 5) = d_plus(-f22, depth);
    m.at(6, 6) = d_plus(-f11, depth);
    for (int r = 0; r < 6; ++r)
        m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + 1)) = constant_op(r < 3 ? 1 : -1, depth);

    set(2, 1, R(1, 3) * yb);
    set(3, 1, R(1, 3) * yab);
    set(3, 2, ya);
    set(4, 1, R(2, 3) * ya2b);
    set(4, 2, R(-2, 3) * yab);
    set(4, 3, R(2, 3) * yb);
    set(5, 1, R(-2) * ya3b);
    set(5, 2, R(2, 3) * ya2b);
    set(5, 4, R(-2, 3) * yb);
    set(6, 1, R(2) * y2a3b);
    set(6, 3, R(-2, 3) * ya2b);
    set(6, 4, R(2, 3) * yab);
    set(6, 5, -ya);
    set(7, 2, R(-2) * y2a3b);
    set(7, 3, R(2) * ya3b);
    set(7, 4, R(-2, 3) * ya2b);
    set(7, 5, R(-1, 3) * yab);
    set(7, 6, R(-1, 3) * yb);
    return m;
}

// The (2n+1) x (2n+1) matrix for o_2n. Matrix row r (1-based) carries the o_2n
// index r for r <= n and r - 1 for r >= n + 2; row and column n + 1 hold d^{-1}.
inline OpMatrix d_type_matrix(const LieAlgebraSpec& spec, int depth)
{
    const int n = spec.rank;
    const int np = n + 1;
    const int size = 2 * n + 1;
    auto F = [&](int i, int j) { return element(spec, i, j); };
    OpMatrix m(static_cast<std::size_t>(size), depth);
    auto put = [&](int r, int c, const OpSeries& x) { m.at(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) = x; };

    for (int r = 1; r < n; ++r) {
        for (int c = 1; c <= r; ++c)
            put(r, c, r == c ? d_plus(F(r, c), depth) : lie_op(F(r, c), depth));
        put(r, r + 1, constant_op(1, depth));
    }
    for (int c = 1; c < n; ++c)
        put(n, c, lie_op(F(n, c) - F(np, c), depth));
    put(n, n, d_plus(F(n, n), depth));
    put(n, n + 2, Rational(-2) * OpSeries::d_power(1, depth));
    put(n + 1, n + 1, OpSeries::d_power(-1, depth));
    for (int r = n + 2; r <= size; ++r) {
        const int a = r - 1;
        for (int c = 1; c <= n; ++c)
            put(r, c, lie_op(F(a, c), depth));
        put(r, n + 2, r == n + 2 ? d_plus(F(np, np), depth) : lie_op(F(a, np) - F(a, n), depth));
        for (int c = n + 3; c <= r; ++c)
            put(r, c, r == c ? d_plus(F(a, c - 1), depth) : lie_op(F(a, c - 1), depth));
        if (r < size)
            put(r, r + 1, constant_op(-1, depth));
    }
    return m;
}

}  // namespace detail

inline OpMatrix build_matrix(const LieAlgebraSpec& spec, int depth = default_truncation)
{
    switch (spec.kind) {
    case Kind::G2: return detail::g2_matrix(spec, depth);
    case Kind::D: return detail::d_type_matrix(spec, depth);
    default: return detail::classical_matrix(spec, depth);
    }
}

// Order N of the principal operator: n, 2n+1, 2n, 2n-1 or 7.
inline int operator_order(const LieAlgebraSpec& spec)
{
    switch (spec.kind) {
    case Kind::A: return spec.rank;
    case Kind::B: return 2 * spec.rank + 1;
    case Kind::C: return 2 * spec.rank;
    case Kind::D: return 2 * spec.rank - 1;
    case Kind::G2: return 7;
    }
    return 0;
}

struct GeneratorSet {
    Kind kind = Kind::A;
    int rank = 0;
    std::map<int, DiffPoly> w;
    std::optional<DiffPoly> y;          // y_n, type D only
    std::vector<int> designated;        // indices into w
    bool y_designated = false;
    OpSeries op;                        // the determinant (pseudo-differential for D)
    std::vector<DiffPoly> y_coeffs;     // D_n = sum_i y_i d^{n-i}, type D only
    std::vector<DiffPoly> ybar_coeffs;  // Dbar_n = sum_i d^{n-i} ybar_i, type D only
};

struct DTypeMinors {
    std::vector<OpSeries> lead;   // D_0 .. D_n
    std::vector<OpSeries> trail;  // Dbar_0 .. Dbar_n
};

inline DTypeMinors d_type_minors(const LieAlgebraSpec& spec, const OpMatrix& m)
{
    const auto n = static_cast<std::size_t>(spec.rank);
    return {leading_minor_determinants(m.block(0, n)), trailing_minor_determinants(m.block(n + 1, n))};
}

// D = D_n d^{-1} Dbar_n + 2 sum_{j,k} (-1)^{n-j} D_{j-1} F_{k'j} Dbar_{k-1}.
inline OpSeries d_type_operator(const LieAlgebraSpec& spec, const DTypeMinors& minors, int depth)
{
    const int n = spec.rank;
    const int size = 2 * n;
    OpSeries d = minors.lead[static_cast<std::size_t>(n)] * OpSeries::d_power(-1, depth) *
                 minors.trail[static_cast<std::size_t>(n)];
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            const LieElement fkj = element(spec, size - k + 1, j);
            if (fkj.is_zero())
                continue;
            const OpSeries t = minors.lead[static_cast<std::size_t>(j - 1)] * detail::lie_op(fkj, depth) *
                               minors.trail[static_cast<std::size_t>(k - 1)];
            d += Rational(2 * sign_power(n - j)) * t;
        }
    return d;
}

// Coefficients at d^{-s-1}, s < depth, must be (-1)^{n+s} y_n y_n^{(s)}.
inline std::optional<int> check_d_tail(const GeneratorSet& gs)
{
    if (!gs.y)
        throw std::invalid_argument("check_d_tail: not a type D generator set");
    const int depth = gs.op.depth();
    if (gs.op.floor() && *gs.op.floor() > -depth)
        return *gs.op.floor();
    DerivativeCache dy(*gs.y);
    for (int s = 0; s < depth; ++s) {
        const DiffPoly expected = Rational(sign_power(gs.rank + s)) * (*gs.y * dy[static_cast<std::size_t>(s)]);
        if (!(gs.op.coeff(-s - 1) == expected))
            return -s - 1;
    }
    return std::nullopt;
}

// ybar_i = (-1)^i y_i; returns the first failing index.
inline std::optional<int> check_d_parity(const GeneratorSet& gs)
{
    for (std::size_t i = 0; i < gs.y_coeffs.size(); ++i)
        if (!(gs.ybar_coeffs.at(i) == Rational(sign_power(static_cast<long>(i))) * gs.y_coeffs[i]))
            return static_cast<int>(i);
    return std::nullopt;
}

inline GeneratorSet generators(const LieAlgebraSpec& spec, int depth = default_truncation)
{
    if (depth < 1)
        throw std::invalid_argument("truncation depth must be at least 1");
    GeneratorSet gs;
    gs.kind = spec.kind;
    gs.rank = spec.rank;
    const int order = operator_order(spec);
    const OpMatrix m = build_matrix(spec, depth);

    if (spec.kind == Kind::D) {
        const int n = spec.rank;
        const DTypeMinors minors = d_type_minors(spec, m);
        const OpSeries& dn = minors.lead[static_cast<std::size_t>(n)];
        for (int i = 0; i <= n; ++i)
            gs.y_coeffs.push_back(dn.coeff(n - i));
        gs.ybar_coeffs = right_coefficients(minors.trail[static_cast<std::size_t>(n)]);
        gs.y = constant_term(dn);
        gs.op = d_type_operator(spec, minors, depth);
    } else {
        gs.op = coldet(m);
    }

    if (gs.op.max_degree() != order || !(gs.op.coeff(order) == DiffPoly(1)))
        throw std::logic_error("generators: determinant is not monic of the expected order");
    const int first = spec.kind == Kind::A ? 1 : 2;
    if (first == 2 && !gs.op.coeff(order - 1).is_zero())
        throw std::logic_error("generators: nonzero w_1");
    for (int k = first; k <= order; ++k)
        gs.w[k] = gs.op.coeff(order - k);

    switch (spec.kind) {
    case Kind::A:
        for (int k = 1; k <= order; ++k)
            gs.designated.push_back(k);
        break;
    case Kind::B:
    case Kind::C:
        for (int j = 1; j <= spec.rank; ++j)
            gs.designated.push_back(2 * j);
        break;
    case Kind::D:
        for (int j = 1; j < spec.rank; ++j)
            gs.designated.push_back(2 * j);
        gs.y_designated = true;
        if (const auto bad = check_d_tail(gs))
            throw std::logic_error("generators: pseudo-differential tail mismatch at degree " + std::to_string(*bad));
        if (const auto bad = check_d_parity(gs))
            throw std::logic_error("generators: ybar_i != (-1)^i y_i at i = " + std::to_string(*bad));
        break;
    case Kind::G2: gs.designated = {2, 6}; break;
    }
    return gs;
}

struct MembershipEntry {
    std::size_t x = 0;  // basis position in n_+
    LambdaPoly value;
};

struct MembershipCertificate {
    bool member = true;
    std::vector<MembershipEntry> entries;  // every checked X; the last one is the witness on failure
};

inline MembershipCertificate verify_membership(const LieAlgebraSpec& spec, const DiffPoly& p)
{
    MembershipCertificate cert;
    for (std::size_t x = 0; x < spec.dim(); ++x) {
        if (spec.part[x] != Part::plus)
            continue;
        LambdaPoly value = rho_bracket(spec, x, p);
        const bool zero = value.is_zero();
        cert.entries.push_back({x, std::move(value)});
        if (!zero) {
            cert.member = false;
            break;
        }
    }
    return cert;
}

// Degree-1, derivative-order-0 part of P as an element of the Lie algebra.
inline LieElement linear_part(const DiffPoly& p)
{
    LieElement x;
    for (const auto& [m, c] : p.terms())
        if (m.size() == 1 && m[0].pow == 1 && m[0].var.der == 0)
            x.add(m[0].var.gen, c);
    return x;
}

inline std::optional<Rational> proportionality(const LieElement& x, const LieElement& v)
{
    if (v.is_zero() || x.is_zero())
        return std::nullopt;
    const auto& [pos, c] = *v.terms().begin();
    const Rational ratio = x.coeff(pos) / c;
    if (ratio == 0 || !(x == ratio * v))
        return std::nullopt;
    return ratio;
}

struct LeadingPart {
    std::string label;  // "w2", "y"
    LieElement linear;
    LieElement v;
    std::optional<Rational> ratio;
};

inline std::vector<LeadingPart> leading_part_check(const LieAlgebraSpec& spec, const GeneratorSet& gs)
{
    std::vector<LeadingPart> out;
    auto add = [&](const std::string& label, const DiffPoly& p, const LieElement& v) {
        LeadingPart lp{label, linear_part(p), v, std::nullopt};
        lp.ratio = proportionality(lp.linear, v);
        out.push_back(std::move(lp));
    };
    for (std::size_t j = 0; j < gs.designated.size(); ++j) {
        const int k = gs.designated[j];
        add("w" + std::to_string(k), gs.w.at(k), spec.f_power_basis.at(j));
    }
    if (gs.y_designated)
        add("y", *gs.y, spec.f_power_basis.at(gs.designated.size()));
    return out;
}

// e_m of det(1 + tA) by the last-row recurrence over leading blocks.
inline std::vector<OpSeries> e_recurrence(const OpMatrix& m, int up_to)
{
    detail::require_shape(m);
    const int size = static_cast<int>(m.size());
    const int depth = m.depth();
    auto idx = [](int k) { return static_cast<std::size_t>(k); };
    // e[k][d] for the leading k x k block
    std::vector<std::vector<OpSeries>> e(idx(size + 1), std::vector<OpSeries>(idx(up_to + 1), OpSeries(depth)));
    e[0][0] = OpSeries::d_power(0, depth);
    for (int k = 1; k <= size; ++k)
        for (int d = 0; d <= up_to; ++d) {
            OpSeries v = e[idx(k - 1)][idx(d)];
            if (d >= 1)
                v += e[idx(k - 1)][idx(d - 1)] * m.at(idx(k - 1), idx(k - 1));
            for (int l = 1; l <= k - 1 && l + 1 <= d; ++l) {
                const OpSeries t = e[idx(k - l - 1)][idx(d - l - 1)] * detail::modified_entry(m, idx(k - 1), idx(k - l - 1));
                if (l % 2 == 0)
                    v += t;
                else
                    v -= t;
            }
            e[idx(k)][idx(d)] = std::move(v);
        }
    return e[idx(size)];
}

namespace detail {

// Sums over chains (i_1, j_1) ... (i_s, j_s) of products a~_{i_1 j_1} ... a~_{i_s j_s}
// with i_k >= j_k, weighted by sum (i_k - j_k + 1). Elementary chains need
// i_k < j_{k+1} and carry (-1)^{i_k - j_k}; complete chains need i_k >= j_{k+1}.
inline std::vector<OpSeries> chain_sums(const OpMatrix& m, int up_to, bool elementary)
{
    require_shape(m);
    const int size = static_cast<int>(m.size());
    const int depth = m.depth();
    auto idx = [](int k) { return static_cast<std::size_t>(k); };
    std::vector<std::vector<OpSeries>> entry(idx(size), std::vector<OpSeries>(idx(size), OpSeries(depth)));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j <= i; ++j) {
            entry[idx(i)][idx(j)] = modified_entry(m, idx(i), idx(j));
            if (elementary && (i - j) % 2 != 0)
                entry[idx(i)][idx(j)] *= Rational(-1);
        }
    // chain[w][i]: chains of weight w ending in row i
    std::vector<std::vector<OpSeries>> chain(idx(up_to + 1), std::vector<OpSeries>(idx(size), OpSeries(depth)));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j <= i; ++j)
            if (i - j + 1 <= up_to)
                chain[idx(i - j + 1)][idx(i)] += entry[idx(i)][idx(j)];
    for (int w = 1; w <= up_to; ++w)
        for (int i = 0; i < size; ++i) {
            if (chain[idx(w)][idx(i)].is_zero())
                continue;
            const int jlo = elementary ? i + 1 : 0;
            const int jhi = elementary ? size - 1 : i;
            for (int j = jlo; j <= jhi; ++j)
                for (int i2 = j; i2 < size; ++i2) {
                    const int w2 = w + i2 - j + 1;
                    if (w2 > up_to)
                        break;
                    chain[idx(w2)][idx(i2)] += chain[idx(w)][idx(i)] * entry[idx(i2)][idx(j)];
                }
        }
    std::vector<OpSeries> out;
    out.push_back(OpSeries::d_power(0, depth));
    for (int w = 1; w <= up_to; ++w) {
        OpSeries total(depth);
        for (int i = 0; i < size; ++i)
            total += chain[idx(w)][idx(i)];
        out.push_back(std::move(total));
    }
    return out;
}

}  // namespace detail

inline std::vector<OpSeries> e_combinatorial(const OpMatrix& m, int up_to) { return detail::chain_sums(m, up_to, true); }

inline std::vector<OpSeries> h_combinatorial(const OpMatrix& m, int up_to) { return detail::chain_sums(m, up_to, false); }

// Coefficients of t^m in t^N D(d + 1/t): the d^j coefficient of e_m is c_{N-m+j} C(N-m+j, j).
inline std::vector<OpSeries> e_from_determinant(const OpSeries& det, int order, int up_to)
{
    std::vector<OpSeries> out;
    for (int mdeg = 0; mdeg <= up_to; ++mdeg) {
        const int lowest = order - mdeg;
        if (det.floor() && lowest < *det.floor())
            throw std::invalid_argument("e_from_determinant: degree exceeds the truncation depth");
        if (lowest < -det.depth())
            throw std::invalid_argument("e_from_determinant: degree exceeds the truncation depth");
        OpSeries e(det.depth());
        for (int j = 0; j <= mdeg; ++j) {
            const int k = lowest + j;
            const DiffPoly c = det.coeff(k);
            if (!c.is_zero())
                e.add(j, binomial(k, j) * c);
        }
        out.push_back(std::move(e));
    }
    return out;
}

// Highest degree for which the e/h families are exact: N, or 2n - 1 + K for type D.
inline int family_bound(const LieAlgebraSpec& spec, int depth = default_truncation)
{
    return operator_order(spec) + (spec.kind == Kind::D ? depth : 0);
}

inline std::vector<OpSeries> e_family(const LieAlgebraSpec& spec, int up_to, int depth = default_truncation)
{
    if (spec.kind == Kind::D)
        return e_from_determinant(generators(spec, depth).op, operator_order(spec), up_to);
    return e_recurrence(build_matrix(spec, depth), up_to);
}

// h(t) = e(-t)^{-1} solved from e(-t) h(t) = 1.
inline std::vector<OpSeries> h_from_e(const std::vector<OpSeries>& e, int up_to)
{
    const int depth = e.at(0).depth();
    std::vector<OpSeries> h;
    h.push_back(OpSeries::d_power(0, depth));
    for (int mdeg = 1; mdeg <= up_to; ++mdeg) {
        OpSeries v(depth);
        for (int k = 1; k <= mdeg && k < static_cast<int>(e.size()); ++k) {
            const OpSeries t = e[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(mdeg - k)];
            if (k % 2 == 0)
                v -= t;
            else
                v += t;
        }
        h.push_back(std::move(v));
    }
    return h;
}

inline std::vector<OpSeries> h_family(const LieAlgebraSpec& spec, int up_to, int depth = default_truncation)
{
    if (spec.kind == Kind::D)
        return h_from_e(e_family(spec, up_to, depth), up_to);
    return h_combinatorial(build_matrix(spec, depth), up_to);
}

struct MacMahonResult {
    bool ok = true;
    std::optional<int> failing_degree;
    OpSeries residual;
};

// sum_k (-1)^k h_{m-k} e_k = 0 for 1 <= m <= degree.
inline MacMahonResult macmahon_check(const std::vector<OpSeries>& h, const std::vector<OpSeries>& e, int degree)
{
    MacMahonResult r;
    for (int mdeg = 1; mdeg <= degree; ++mdeg) {
        OpSeries sum(e.at(0).depth());
        for (int k = 0; k <= mdeg; ++k) {
            if (k >= static_cast<int>(e.size()))
                break;
            const OpSeries t = h.at(static_cast<std::size_t>(mdeg - k)) * e[static_cast<std::size_t>(k)];
            if (k % 2 == 0)
                sum += t;
            else
                sum -= t;
        }
        if (!sum.is_zero()) {
            r.ok = false;
            r.failing_degree = mdeg;
            r.residual = std::move(sum);
            return r;
        }
    }
    return r;
}

inline MacMahonResult macmahon_check(const LieAlgebraSpec& spec, int degree, int depth = default_truncation)
{
    if (degree > family_bound(spec, depth))
        throw std::invalid_argument("macmahon_check: degree exceeds " + std::to_string(family_bound(spec, depth)));
    const auto e = e_family(spec, degree, depth);
    const auto h = spec.kind == Kind::D ? h_from_e(e, degree) : h_family(spec, degree, depth);
    return macmahon_check(h, e, degree);
}

// Constant terms h_{m0}, m = 1..up_to.
inline std::vector<DiffPoly> h_constants(const LieAlgebraSpec& spec, int up_to, int depth = default_truncation)
{
    std::vector<DiffPoly> out;
    const auto h = h_family(spec, up_to, depth);
    for (std::size_t m = 1; m < h.size(); ++m)
        out.push_back(constant_term(h[m]));
    return out;
}

}  // namespace walg
