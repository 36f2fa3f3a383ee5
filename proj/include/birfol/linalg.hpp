#pragma once

#include <optional>
#include <vector>

#include "birfol/scalar.hpp"

namespace birfol {

// Dense matrix over a Scalar field, row major.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = QuadNumber{1, 0};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return f_; }

    Scalar at(std::size_t i, std::size_t j) const { return Scalar(f_, a_[i * cols_ + j]); }
    void set(std::size_t i, std::size_t j, const Scalar& s) {
        require_same_field(f_, s.field());
        a_[i * cols_ + j] = s.value();
    }
    QuadNumber& raw(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const QuadNumber& raw(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    // Reduced row echelon form in place; pivots are chosen as the first
    // nonzero entry scanning columns left to right. Returns pivot columns.
    std::vector<std::size_t> row_reduce() {
        const FieldSpec& f = *f_;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && raw(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(raw(p, j), raw(r, j));
            QuadNumber inv = f.inverse(raw(r, c));
            for (std::size_t j = c; j < cols_; ++j) f.mul(raw(r, j), raw(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || raw(i, c).is_zero()) continue;
                QuadNumber k = raw(i, c);
                for (std::size_t j = c; j < cols_; ++j) {
                    if (raw(r, j).is_zero()) continue;
                    QuadNumber t;
                    f.mul(t, k, raw(r, j));
                    f.sub(raw(i, j), raw(i, j), t);
                }
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.row_reduce().size();
    }

    // Basis of the right kernel, one vector per free column.
    std::vector<std::vector<Scalar>> kernel() const {
        Matrix m = *this;
        auto pivots = m.row_reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Scalar>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Scalar> v(cols_, Scalar(f_));
            v[free] = Scalar(f_, 1);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        const std::size_t n = rows_;
        Matrix aug(f_, n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug.raw(i, j) = raw(i, j);
            aug.raw(i, n + i) = QuadNumber{1, 0};
        }
        auto pivots = aug.row_reduce();
        if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
        Matrix inv(f_, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv.raw(i, j) = aug.raw(i, n + j);
        return inv;
    }

    Scalar determinant() const {
        if (rows_ != cols_) throw Error(ErrorCode::invalid_argument, "determinant of a non-square matrix");
        Matrix m = *this;
        const FieldSpec& f = *f_;
        QuadNumber det{1, 0};
        const std::size_t n = rows_;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && m.raw(p, c).is_zero()) ++p;
            if (p == n) return Scalar(f_);
            if (p != c) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m.raw(p, j), m.raw(c, j));
                f.neg(det, det);
            }
            f.mul(det, det, m.raw(c, c));
            QuadNumber inv = f.inverse(m.raw(c, c));
            for (std::size_t i = c + 1; i < n; ++i) {
                if (m.raw(i, c).is_zero()) continue;
                QuadNumber k;
                f.mul(k, m.raw(i, c), inv);
                for (std::size_t j = c; j < n; ++j) {
                    QuadNumber t;
                    f.mul(t, k, m.raw(c, j));
                    f.sub(m.raw(i, j), m.raw(i, j), t);
                }
            }
        }
        return Scalar(f_, det);
    }

    // Some solution of this * x = b, if one exists.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const {
        Matrix aug(f_, rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.raw(i, j) = raw(i, j);
            aug.raw(i, cols_) = b.at(i).value();
        }
        auto pivots = aug.row_reduce();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<Scalar> x(cols_, Scalar(f_));
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
        return x;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<QuadNumber> a_;
};

}  // namespace birfol
