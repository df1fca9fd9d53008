#pragma once

#include "jackfock/param_scalar.hpp"
#include "jackfock/partitions.hpp"

#include <functional>
#include <map>
#include <vector>

namespace jackfock {

// Finitely supported map label -> coefficient. Zero coefficients are never
// stored. Iteration runs in descending label order, which for partitions is
// the enumerate_level order.
template <class Label>
class FockVector {
public:
    using Map = std::map<Label, ParamScalar, std::greater<Label>>;

    FockVector() = default;
    static FockVector basis(const Label& l, ParamScalar c = ParamScalar(1)) {
        FockVector v;
        v.add(l, std::move(c));
        return v;
    }

    void add(const Label& l, const ParamScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(l);
        if (it == terms_.end()) {
            terms_.emplace(l, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    void add(const FockVector& o, const ParamScalar& scale = ParamScalar(1)) {
        if (scale.is_zero()) return;
        for (const auto& [l, c] : o.terms_) add(l, scale.is_one() ? c : c * scale);
    }
    FockVector scaled(const ParamScalar& s) const {
        FockVector v;
        if (s.is_zero()) return v;
        for (const auto& [l, c] : terms_) v.terms_.emplace(l, c * s);
        return v;
    }
    // Coefficient-wise transform; zero results are dropped.
    template <class F>
    FockVector map_coefficients(F&& f) const {
        FockVector v;
        for (const auto& [l, c] : terms_) v.add(l, f(l, c));
        return v;
    }

    ParamScalar coefficient(const Label& l) const {
        auto it = terms_.find(l);
        return it == terms_.end() ? ParamScalar() : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }
    friend FockVector operator+(FockVector a, const FockVector& b) {
        a.add(b);
        return a;
    }
    friend FockVector operator-(FockVector a, const FockVector& b) {
        a.add(b, ParamScalar(-1));
        return a;
    }

private:
    Map terms_;
};

// Two-layer label.
struct BiPartition {
    Partition layer1;
    Partition layer2;
    auto operator<=>(const BiPartition&) const = default;
    bool operator==(const BiPartition&) const = default;
};

using PartitionVector = FockVector<Partition>;
using BiVector = FockVector<BiPartition>;

// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<ParamScalar>;
using RationalMatrix = Matrix<mpq_class>;

template <class A, class B>
auto matmul(const Matrix<A>& x, const Matrix<B>& y) {
    using R = decltype(std::declval<A>() * std::declval<B>());
    Matrix<R> z(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                if (y(k, j) == 0) continue;
                z(i, j) += x(i, k) * y(k, j);
            }
        }
    return z;
}

// Operator matrix together with the labels indexing its rows and columns.
template <class Label>
struct LabeledMatrix {
    std::vector<Label> row_basis;
    std::vector<Label> col_basis;
    ScalarMatrix entries;
};

}  // namespace jackfock
