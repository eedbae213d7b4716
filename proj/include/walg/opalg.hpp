#pragma once

#include "walg/diffpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace walg {

inline constexpr int default_truncation = 4;

// sum_k c_k d^k with coefficients written to the left of the powers of d.
// Degrees below -depth are never stored. When floor() is set, coefficients
// below it are unknown because a nonzero contribution was dropped. Sums and
// products keep the larger depth of their operands.
class OpSeries {
public:
    using Coeffs = std::map<int, DiffPoly>;

    explicit OpSeries(int depth = default_truncation) : depth_(depth)
    {
        if (depth < 0)
            throw std::invalid_argument("negative truncation depth");
    }

    static OpSeries d_power(int k, int depth = default_truncation) { return term(k, DiffPoly(1), depth); }

    static OpSeries scalar(const DiffPoly& c, int depth = default_truncation) { return term(0, c, depth); }

    static OpSeries term(int k, const DiffPoly& c, int depth = default_truncation)
    {
        OpSeries op(depth);
        op.add(k, c);
        return op;
    }

    const Coeffs& coeffs() const { return coeffs_; }
    int depth() const { return depth_; }
    std::optional<int> floor() const { return floor_; }
    bool truncated() const { return floor_.has_value(); }
    bool is_zero() const { return coeffs_.empty() && !floor_; }

    DiffPoly coeff(int k) const
    {
        const auto it = coeffs_.find(k);
        return it == coeffs_.end() ? DiffPoly() : it->second;
    }

    int max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    int min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

    bool is_differential() const { return !floor_ && (coeffs_.empty() || min_degree() >= 0); }

    void add(int k, const DiffPoly& c)
    {
        if (c.is_zero() || k < -depth_ || (floor_ && k < *floor_))
            return;
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    void raise_floor(int f)
    {
        f = std::max(f, -depth_);
        if (floor_ && *floor_ >= f)
            return;
        floor_ = f;
        coeffs_.erase(coeffs_.begin(), coeffs_.lower_bound(f));
    }

    OpSeries& operator+=(const OpSeries& o)
    {
        merge_floor(o);
        for (const auto& [k, c] : o.coeffs_)
            add(k, c);
        return *this;
    }
    OpSeries& operator-=(const OpSeries& o)
    {
        merge_floor(o);
        for (const auto& [k, c] : o.coeffs_)
            add(k, -c);
        return *this;
    }
    OpSeries& operator*=(const Rational& s)
    {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [k, c] : coeffs_)
            c *= s;
        return *this;
    }

    friend OpSeries operator+(OpSeries a, const OpSeries& b) { return a += b; }
    friend OpSeries operator-(OpSeries a, const OpSeries& b) { return a -= b; }
    friend OpSeries operator-(OpSeries a) { return a *= Rational(-1); }
    friend OpSeries operator*(const Rational& s, OpSeries a) { return a *= s; }

    // Multiplication by a function on the left is coefficient-wise.
    friend OpSeries operator*(const DiffPoly& g, const OpSeries& a)
    {
        OpSeries r(a.depth_);
        r.floor_ = a.floor_;
        for (const auto& [k, c] : a.coeffs_)
            r.add(k, g * c);
        return r;
    }

    friend bool operator==(const OpSeries& a, const OpSeries& b)
    {
        return a.coeffs_ == b.coeffs_ && a.floor_ == b.floor_;
    }

private:
    void merge_floor(const OpSeries& o)
    {
        depth_ = std::max(depth_, o.depth_);
        if (o.floor_)
            raise_floor(*o.floor_);
    }

    Coeffs coeffs_;
    int depth_ = default_truncation;
    std::optional<int> floor_;
};

// Product in the (pseudo-)differential operator algebra:
// d^i g = sum_s C(i, s) g^{(s)} d^{i-s}, for negative i as an infinite series cut at -depth.
inline OpSeries op_mul(const OpSeries& a, const OpSeries& b)
{
    const int depth = std::max(a.depth(), b.depth());
    const int keep = -depth;
    std::optional<int> floor;
    auto raise = [&](int f) { floor = floor ? std::max(*floor, f) : f; };
    if (a.floor() && !b.coeffs().empty())
        raise(*a.floor() + b.max_degree());
    if (b.floor() && !a.coeffs().empty())
        raise(*b.floor() + a.max_degree());

    std::map<int, DiffPoly> out;
    bool lost = false;
    for (const auto& [j, g] : b.coeffs()) {
        DerivativeCache dg(g);
        const bool constant = g.is_constant();
        for (const auto& [i, c] : a.coeffs()) {
            for (long s = 0;; ++s) {
                if (i >= 0 && s > i)
                    break;
                if (s > 0 && constant)
                    break;
                const int deg = i - static_cast<int>(s) + j;
                if (deg < keep) {
                    lost = true;
                    break;
                }
                out[deg].add_product(c, dg[static_cast<std::size_t>(s)], binomial(i, s));
            }
        }
    }
    if (lost)
        raise(keep);

    OpSeries r(depth);
    if (floor)
        r.raise_floor(*floor);
    for (const auto& [k, c] : out)
        r.add(k, c);
    return r;
}

inline OpSeries operator*(const OpSeries& a, const OpSeries& b) { return op_mul(a, b); }

// Coefficient of d^0, i.e. the operator applied to 1.
inline DiffPoly constant_term(const OpSeries& a)
{
    if (!a.is_differential())
        throw std::invalid_argument("constant_term: pseudo-differential operator");
    return a.coeff(0);
}

// Coefficients r_0..r_n with a = sum_i d^{n-i} r_i, n = max degree of a.
inline std::vector<DiffPoly> right_coefficients(const OpSeries& a)
{
    if (!a.is_differential())
        throw std::invalid_argument("right_coefficients: pseudo-differential operator");
    const int n = a.max_degree();
    std::vector<DiffPoly> r;
    for (int i = 0; i <= n; ++i) {
        DiffPoly v = a.coeff(n - i);
        for (int k = 0; k < i; ++k)
            v -= binomial(n - k, i - k) * derive(r[static_cast<std::size_t>(k)], static_cast<unsigned>(i - k));
        r.push_back(std::move(v));
    }
    return r;
}

// Square matrix of operators, 0-based.
class OpMatrix {
public:
    explicit OpMatrix(std::size_t n, int depth = default_truncation)
        : n_(n), depth_(depth), entries_(n * n, OpSeries(depth))
    {
    }

    std::size_t size() const { return n_; }
    int depth() const { return depth_; }
    OpSeries& at(std::size_t r, std::size_t c) { return entries_.at(r * n_ + c); }
    const OpSeries& at(std::size_t r, std::size_t c) const { return entries_.at(r * n_ + c); }

    bool zero_above_superdiagonal() const
    {
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = r + 2; c < n_; ++c)
                if (!at(r, c).is_zero())
                    return false;
        return true;
    }

    std::optional<Rational> superdiagonal_scalar(std::size_t r) const
    {
        const OpSeries& s = at(r, r + 1);
        if (s.truncated())
            return std::nullopt;
        if (s.coeffs().empty())
            return Rational(0);
        if (s.coeffs().size() != 1 || s.coeffs().begin()->first != 0 || !s.coeff(0).is_constant())
            return std::nullopt;
        return s.coeff(0).constant_coeff();
    }

    bool central_superdiagonal() const
    {
        for (std::size_t r = 0; r + 1 < n_; ++r)
            if (!superdiagonal_scalar(r))
                return false;
        return true;
    }

    bool all_differential() const
    {
        return std::all_of(entries_.begin(), entries_.end(), [](const OpSeries& e) { return e.is_differential(); });
    }

    bool has_determinant_shape() const
    {
        return zero_above_superdiagonal() && central_superdiagonal() && all_differential();
    }

    // Principal block on rows/cols first .. first+count-1.
    OpMatrix block(std::size_t first, std::size_t count) const
    {
        if (first + count > n_)
            throw std::out_of_range("OpMatrix::block");
        OpMatrix m(count, depth_);
        for (std::size_t r = 0; r < count; ++r)
            for (std::size_t c = 0; c < count; ++c)
                m.at(r, c) = at(first + r, first + c);
        return m;
    }

private:
    std::size_t n_;
    int depth_;
    std::vector<OpSeries> entries_;
};

namespace detail {

inline void require_shape(const OpMatrix& m)
{
    if (!m.zero_above_superdiagonal())
        throw std::invalid_argument("determinant: nonzero entry above the superdiagonal");
    if (!m.central_superdiagonal())
        throw std::invalid_argument("determinant: superdiagonal entry is not a constant");
    if (!m.all_differential())
        throw std::invalid_argument("determinant: pseudo-differential entry");
}

// a_ij times the superdiagonal scalars s_j ... s_{i-1} (0-based, i > j).
inline OpSeries modified_entry(const OpMatrix& m, std::size_t i, std::size_t j)
{
    Rational scale(1);
    for (std::size_t l = j; l < i; ++l)
        scale *= *m.superdiagonal_scalar(l);
    return scale * m.at(i, j);
}

}  // namespace detail

// D_0 .. D_n, determinants of the leading k x k blocks, by the last-row recurrence
// D_k = D_{k-1} a_kk + sum_{j<k} (-1)^{k+j} D_{j-1} a~_kj.
inline std::vector<OpSeries> leading_minor_determinants(const OpMatrix& m)
{
    detail::require_shape(m);
    const std::size_t n = m.size();
    std::vector<OpSeries> d;
    d.push_back(OpSeries::d_power(0, m.depth()));
    for (std::size_t k = 1; k <= n; ++k) {
        OpSeries dk = d[k - 1] * m.at(k - 1, k - 1);
        for (std::size_t j = 1; j < k; ++j) {
            const OpSeries t = d[j - 1] * detail::modified_entry(m, k - 1, j - 1);
            if ((k + j) % 2 == 0)
                dk += t;
            else
                dk -= t;
        }
        d.push_back(std::move(dk));
    }
    return d;
}

inline OpSeries coldet(const OpMatrix& m) { return leading_minor_determinants(m).back(); }

// Determinants of the trailing k x k blocks, k = 0..n.
inline std::vector<OpSeries> trailing_minor_determinants(const OpMatrix& m)
{
    detail::require_shape(m);
    std::vector<OpSeries> d;
    d.push_back(OpSeries::d_power(0, m.depth()));
    for (std::size_t k = 1; k <= m.size(); ++k)
        d.push_back(coldet(m.block(m.size() - k, k)));
    return d;
}

// det = D_p Dbar_{n-p} + sum_{j <= p < i} (-1)^{i+j} D_{j-1} a~_ij Dbar_{n-i} (1-based i, j).
inline OpSeries minor_expansion(const OpMatrix& m, std::size_t p)
{
    const std::size_t n = m.size();
    if (p > n)
        throw std::out_of_range("minor_expansion: p > n");
    const auto lead = leading_minor_determinants(m);
    const auto trail = trailing_minor_determinants(m);
    OpSeries r = lead[p] * trail[n - p];
    for (std::size_t j = 1; j <= p; ++j)
        for (std::size_t i = p + 1; i <= n; ++i) {
            const OpSeries t = lead[j - 1] * detail::modified_entry(m, i - 1, j - 1) * trail[n - i];
            if ((i + j) % 2 == 0)
                r += t;
            else
                r -= t;
        }
    return r;
}

}  // namespace walg
