#pragma once

#include "wps/integers.hpp"

#include <cstddef>
#include <vector>

namespace wps {

// A point of the lattice Z^rank (coordinates in the canonical basis).
using LatticeVector = std::vector<Int>;

// An element of the dual lattice (coordinates in the dual basis); it
// evaluates on lattice vectors via the integer dot product.
using LinearForm = std::vector<Int>;

Int dot(const LinearForm& form, const LatticeVector& v);

bool is_primitive(const LatticeVector& v);

// Dense integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<LatticeVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    LatticeVector row(std::size_t i) const;
    LatticeVector column(std::size_t j) const;

    // Matrix-vector product M x.
    LatticeVector apply(const LatticeVector& x) const;

    IntMatrix transposed() const;
    IntMatrix multiplied(const IntMatrix& other) const;

    bool operator==(const IntMatrix& other) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Column-style Hermite normal form A * U = H with U unimodular.  H is in
// column echelon form with strictly increasing pivot rows, positive pivots,
// and entries left of each pivot reduced into [0, pivot).  The elimination
// order is fixed, so the output is deterministic.
struct ColumnHermite {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

ColumnHermite column_hermite(const IntMatrix& a);

// Nonzero invariant factors d_1 | d_2 | ... of the matrix.
std::vector<Int> smith_invariant_factors(IntMatrix a);

std::size_t matrix_rank(const IntMatrix& a);

// |det| of a square matrix (product of invariant factors).
Int abs_det(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

// Basis of the saturated kernel lattice {x : M x = 0}, in a canonical
// (Hermite-reduced) form.  Empty kernel gives the empty list.
std::vector<LatticeVector> kernel_basis(const IntMatrix& m);

// For primitive u in Z^(n+1), an n x (n+1) matrix Q with Q u = 0 and trivial
// cokernel, presenting Z^(n+1) / Z u.  Deterministic.
// Throws std::invalid_argument("weight vector not primitive") otherwise.
IntMatrix quotient_basis(const LatticeVector& u);

}  // namespace wps
