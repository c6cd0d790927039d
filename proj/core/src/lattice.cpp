#include "wps/lattice.hpp"

#include <algorithm>

namespace wps {

Int dot(const LinearForm& form, const LatticeVector& v) {
    if (form.size() != v.size()) throw std::invalid_argument("dot: rank mismatch");
    Int s = 0;
    for (std::size_t k = 0; k < form.size(); ++k) s += form[k] * v[k];
    return s;
}

bool is_primitive(const LatticeVector& v) { return gcd_all(v) == 1; }

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("matrix rows must be rectangular");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticeVector>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("matrix columns must be rectangular");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
    LatticeVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

LatticeVector IntMatrix::column(std::size_t j) const {
    LatticeVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

LatticeVector IntMatrix::apply(const LatticeVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: rank mismatch");
    LatticeVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("multiply: shape mismatch");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
        }
    return p;
}

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_column(IntMatrix& m, std::size_t j) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

// col_a <- x*col_a + y*col_b, col_b <- -bv*col_a_old + av*col_b_old
// (the 2x2 unimodular transform produced by the extended gcd of the pivot
// row entries a, b with a*x + b*y = g, av = a/g, bv = b/g).
void gcd_column_op(IntMatrix& m, std::size_t ca, std::size_t cb, const Int& x, const Int& y,
                   const Int& av, const Int& bv) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int va = m(i, ca), vb = m(i, cb);
        m(i, ca) = x * va + y * vb;
        m(i, cb) = av * vb - bv * va;
    }
}

// col_b -= q * col_a
void shear_column(IntMatrix& m, std::size_t ca, std::size_t cb, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, cb) -= q * m(i, ca);
}

}  // namespace

ColumnHermite column_hermite(const IntMatrix& a) {
    ColumnHermite res;
    res.h = a;
    res.u = IntMatrix::identity(a.cols());
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t r = 0;
    for (std::size_t i = 0; i < a.rows() && r < a.cols(); ++i) {
        // Bring a nonzero entry of row i into column r.
        std::size_t piv = r;
        while (piv < a.cols() && h(i, piv) == 0) ++piv;
        if (piv == a.cols()) continue;
        swap_columns(h, r, piv);
        swap_columns(u, r, piv);
        // Clear the rest of row i with gcd transforms.
        for (std::size_t j = r + 1; j < a.cols(); ++j) {
            if (h(i, j) == 0) continue;
            Int x, y;
            Int av = h(i, r), bv = h(i, j);
            Int g = extended_gcd(av, bv, x, y);
            av /= g;
            bv /= g;
            gcd_column_op(h, r, j, x, y, av, bv);
            gcd_column_op(u, r, j, x, y, av, bv);
        }
        if (h(i, r) < 0) {
            negate_column(h, r);
            negate_column(u, r);
        }
        // Reduce entries left of the pivot into [0, pivot).
        for (std::size_t j = 0; j < r; ++j) {
            Int q = floor_div(h(i, j), h(i, r));
            shear_column(h, r, j, q);
            shear_column(u, r, j, q);
        }
        res.pivot_rows.push_back(i);
        ++r;
    }
    res.rank = r;
    return res;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void shear_row(IntMatrix& m, std::size_t ra, std::size_t rb, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(rb, j) -= q * m(ra, j);
}

void add_row(IntMatrix& m, std::size_t src, std::size_t dst) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += m(src, j);
}

}  // namespace

std::vector<Int> smith_invariant_factors(IntMatrix a) {
    std::vector<Int> factors;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Locate the nonzero entry of smallest absolute value in the
        // trailing submatrix (row-major tie break keeps this deterministic).
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& v = a(i, j);
                if (v == 0) continue;
                if (best == 0 || abs(v) < best) {
                    best = abs(v);
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        swap_rows(a, t, pi);
        swap_columns(a, t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int q = floor_div(a(i, t), a(t, t));
                shear_row(a, t, i, q);
                if (a(i, t) != 0) {
                    swap_rows(a, t, i);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int q = floor_div(a(t, j), a(t, t));
                shear_column(a, t, j, q);
                if (a(t, j) != 0) {
                    swap_columns(a, t, j);
                    again = true;
                }
            }
            if (!again) {
                // Pivot must divide the whole trailing block.
                for (std::size_t i = t + 1; i < rows && !again; ++i)
                    for (std::size_t j = t + 1; j < cols && !again; ++j)
                        if (a(i, j) % a(t, t) != 0) {
                            add_row(a, i, t);
                            again = true;
                        }
            }
        }
        if (a(t, t) < 0) {
            for (std::size_t j = t; j < cols; ++j) a(t, j) = -a(t, j);
        }
        factors.push_back(a(t, t));
        ++t;
    }
    return factors;
}

std::size_t matrix_rank(const IntMatrix& a) { return column_hermite(a).rank; }

Int abs_det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("abs_det: matrix not square");
    ColumnHermite ch = column_hermite(a);
    if (ch.rank < a.rows()) return 0;
    Int d = 1;
    for (std::size_t k = 0; k < a.rows(); ++k) d *= ch.h(ch.pivot_rows[k], k);
    return d;
}

bool is_unimodular(const IntMatrix& a) {
    return a.rows() == a.cols() && a.rows() > 0 && abs_det(a) == 1;
}

std::vector<LatticeVector> kernel_basis(const IntMatrix& m) {
    ColumnHermite ch = column_hermite(m);
    std::size_t k = m.cols() - ch.rank;
    if (k == 0) return {};
    // The trailing columns of U span the kernel lattice; U is unimodular, so
    // the span is already saturated.  Hermite-reduce them for a canonical
    // output basis.
    IntMatrix raw(m.cols(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) raw(i, j) = ch.u(i, ch.rank + j);
    ColumnHermite canon = column_hermite(raw);
    std::vector<LatticeVector> basis;
    basis.reserve(k);
    for (std::size_t j = 0; j < k; ++j) basis.push_back(canon.h.column(j));
    return basis;
}

IntMatrix quotient_basis(const LatticeVector& u) {
    if (u.empty() || gcd_all(u) != 1) throw std::invalid_argument("weight vector not primitive");
    const std::size_t n1 = u.size();
    IntMatrix row(1, n1);
    for (std::size_t j = 0; j < n1; ++j) row(0, j) = u[j];
    ColumnHermite ch = column_hermite(row);
    // u^T U = (1, 0, ..., 0), so the rows of U^T after the first kill u and
    // present the quotient lattice.
    IntMatrix q(n1 - 1, n1);
    for (std::size_t k = 0; k + 1 < n1; ++k)
        for (std::size_t j = 0; j < n1; ++j) q(k, j) = ch.u(j, k + 1);
    return q;
}

}  // namespace wps
