#pragma once

#include "walg/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace walg {

// Dense square matrix over the rationals; used for defining representations.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    // Matrix unit with a 1 in 1-based position (i, j).
    static Matrix unit(std::size_t n, int i, int j)
    {
        Matrix m(n);
        m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
        return m;
    }

    std::size_t size() const { return n_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
    const std::vector<Rational>& entries() const { return data_; }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const Rational& c)
    {
        for (auto& x : data_)
            x *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        a.check_same(b);
        Matrix r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

    Rational trace() const
    {
        Rational t;
        for (std::size_t i = 0; i < n_; ++i)
            t += (*this)(i, i);
        return t;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

private:
    void check_same(const Matrix& o) const
    {
        if (o.n_ != n_)
            throw std::invalid_argument("matrix size mismatch");
    }

    std::size_t n_ = 0;
    std::vector<Rational> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// Coefficients c with sum_k c[k] * columns[k] == target, or nullopt when target
// is outside the span. Columns must be linearly independent.
inline std::optional<std::vector<Rational>> solve_combination(const std::vector<std::vector<Rational>>& columns,
                                                              const std::vector<Rational>& target)
{
    const std::size_t cols = columns.size();
    const std::size_t rows = target.size();
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            aug[r][c] = columns[c].at(r);
        aug[r][cols] = target[r];
    }

    std::vector<std::size_t> pivot_row(cols);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = row;
        while (p < rows && aug[p][c] == 0)
            ++p;
        if (p == rows)
            throw std::invalid_argument("solve_combination: dependent columns");
        std::swap(aug[p], aug[row]);
        const Rational inv = 1 / aug[row][c];
        for (std::size_t k = c; k <= cols; ++k)
            aug[row][k] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || aug[r][c] == 0)
                continue;
            const Rational factor = aug[r][c];
            for (std::size_t k = c; k <= cols; ++k)
                aug[r][k] -= factor * aug[row][k];
        }
        pivot_row[c] = row++;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (aug[r][cols] != 0)
            return std::nullopt;

    std::vector<Rational> result(cols);
    for (std::size_t c = 0; c < cols; ++c)
        result[c] = aug[pivot_row[c]][cols];
    return result;
}

}  // namespace walg
