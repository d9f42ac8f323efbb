#pragma once

#include "ajpoly/vlaurent.hpp"

#include <vector>

namespace ajpoly {

/// Reduced fraction of VLaurent values. The denominator has lowest exponent 0
/// and positive leading coefficient; numerator and denominator share no factor
/// beyond units +-v^k.
class VRatio {
public:
    VRatio() : num_(), den_(VLaurent::mono(0, 1)) {}
    VRatio(VLaurent n) : num_(std::move(n)), den_(VLaurent::mono(0, 1)) {}
    VRatio(VLaurent n, VLaurent d);

    const VLaurent& num() const { return num_; }
    const VLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    VRatio operator-() const;
    VRatio operator+(const VRatio& o) const;
    VRatio operator-(const VRatio& o) const;
    VRatio operator*(const VRatio& o) const;
    VRatio operator/(const VRatio& o) const;
    bool operator==(const VRatio& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void reduce();
    VLaurent num_, den_;
};

/// Dense matrix of VLaurent entries.
class ExactMatrix {
public:
    ExactMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw std::domain_error("matrix dimensions must be positive");
    }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    VLaurent& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const VLaurent& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

private:
    size_t rows_, cols_;
    std::vector<VLaurent> data_;
};

/// Basis of the right null space of M over Q(v), via fraction-free sparse
/// elimination with content stripping. M * k = 0 exactly for every column k.
std::vector<std::vector<VRatio>> exact_kernel(const ExactMatrix& M);

/// Sparse variant: rows given as (column, value) lists; ncols total columns.
std::vector<std::vector<VRatio>> exact_kernel_sparse(
    const std::vector<std::vector<std::pair<size_t, VLaurent>>>& rows, size_t ncols);

}  // namespace ajpoly
