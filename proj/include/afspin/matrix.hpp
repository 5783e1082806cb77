#pragma once

#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

#include "afspin/errors.hpp"

namespace afspin {

/// Dense square matrix over a ring T, row-major.
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(static_cast<int>(rows.size()))
    {
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n_)
                throw DimensionError("matrix literal is not square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        Matrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.n_)
                throw DimensionError("matrix rows are not square");
            for (int j = 0; j < m.n_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix identity(int n)
    {
        Matrix m(n);
        for (int i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d)
    {
        Matrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i)
            m(i, i) = d[i];
        return m;
    }

    int size() const { return n_; }
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y)
    {
        if (x.n_ != y.n_)
            throw DimensionError("matrix product of sizes " + std::to_string(x.n_) + " and " + std::to_string(y.n_));
        Matrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const T& xik = x(i, k);
                if (xik == T(0))
                    continue;
                for (int j = 0; j < x.n_; ++j)
                    r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y)
    {
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i)
            r.a_[i] += y.a_[i];
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }
    friend bool operator<(const Matrix& x, const Matrix& y) { return x.a_ < y.a_; }

    Matrix transpose() const
    {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const
    {
        T t(0);
        for (int i = 0; i < n_; ++i)
            t += (*this)(i, i);
        return t;
    }

    std::vector<T> column(int j) const
    {
        std::vector<T> c(n_);
        for (int i = 0; i < n_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    /// Determinant by cofactor expansion (sizes here never exceed 8).
    T det() const { return minor_det(std::vector<int>(), 0); }

    /// Inverse of a matrix whose determinant is a unit (+1 or -1), via the adjugate.
    Matrix unimodular_inverse() const
    {
        T d = det();
        if (!(d == T(1) || d == T(-1)))
            throw InvariantViolation("matrix is not unimodular");
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                T c = cofactor(i, j);
                r(j, i) = d == T(1) ? c : T(0) - c;
            }
        return r;
    }

    bool is_identity() const { return *this == identity(n_); }

    const std::vector<T>& data() const { return a_; }

    std::vector<std::vector<T>> rows() const
    {
        std::vector<std::vector<T>> out(n_, std::vector<T>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                out[i][j] = (*this)(i, j);
        return out;
    }

private:
    T minor_det(std::vector<int> used_cols, int row) const
    {
        if (row == n_)
            return T(1);
        T acc(0);
        int sign = 1;
        for (int j = 0; j < n_; ++j) {
            bool used = false;
            for (int u : used_cols)
                used = used || u == j;
            if (used)
                continue;
            if (!((*this)(row, j) == T(0))) {
                used_cols.push_back(j);
                T sub = (*this)(row, j) * minor_det(used_cols, row + 1);
                used_cols.pop_back();
                if (sign > 0)
                    acc += sub;
                else
                    acc -= sub;
            }
            sign = -sign;
        }
        return acc;
    }

    T cofactor(int i, int j) const
    {
        Matrix m(n_ - 1);
        for (int r = 0, rr = 0; r < n_; ++r) {
            if (r == i)
                continue;
            for (int c = 0, cc = 0; c < n_; ++c) {
                if (c == j)
                    continue;
                m(rr, cc++) = (*this)(r, c);
            }
            ++rr;
        }
        T d = n_ == 1 ? T(1) : m.det();
        return ((i + j) & 1) ? T(0) - d : d;
    }

    int n_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<long>;

/// Converts an integer matrix into a matrix over a field containing Z.
template <class S>
Matrix<S> to_field(const IntMatrix& m)
{
    Matrix<S> r(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            r(i, j) = S(m(i, j));
    return r;
}

template <class T>
std::string matrix_str(const Matrix<T>& m)
{
    std::string s = "[";
    for (int i = 0; i < m.size(); ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < m.size(); ++j) {
            if (j)
                s += ", ";
            if constexpr (std::is_arithmetic_v<T>)
                s += std::to_string(m(i, j));
            else
                s += m(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

} // namespace afspin
