#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prym/errors.hpp"
#include "prym/scalar.hpp"

namespace prym {

/// Dense matrix over an exact scalar (Fp or Dual).  Plain row-major storage;
/// all algorithms are free functions below.
template <class T>
class Mat {
  public:
    Mat(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), d_(rows * cols, fill) {}

    static Mat identity(std::size_t n, const T& one) {
        Mat m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

  private:
    std::size_t r_, c_;
    std::vector<T> d_;
};

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r(a.rows(), b.cols(), zero_like(a(0, 0)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

template <class T>
Mat<T> transpose(const Mat<T>& a) {
    if (a.rows() == 0 || a.cols() == 0) return a;
    Mat<T> r(a.cols(), a.rows(), zero_like(a(0, 0)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

/// Reduced row echelon form in place; returns the pivot columns.  Pivots are
/// chosen as the topmost *unit* entry of the leftmost eligible column, so the
/// same code runs over F_p and over the dual ring.  Over the dual ring a
/// column whose remaining entries are nonzero but all non-units means the
/// matrix is not flat over the base; that raises NonGenericPivot.
template <class T>
std::vector<std::size_t> rref_in_place(Mat<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = m.rows();
        bool nonzero_seen = false;
        for (std::size_t i = row; i < m.rows(); ++i) {
            if (!m(i, col).is_zero()) nonzero_seen = true;
            if (m(i, col).is_unit()) {
                sel = i;
                break;
            }
        }
        if (sel == m.rows()) {
            if (nonzero_seen) throw NonGenericPivot("column " + std::to_string(col) + " has no unit pivot");
            continue;
        }
        m.swap_rows(row, sel);
        T ip = m(row, col).inv();
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * ip;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            T f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
std::size_t rank(Mat<T> m) {
    return rref_in_place(m).size();
}

/// Reduced-echelon kernel basis: one vector per free column (ascending), with
/// entry 1 at its free column and 0 at every other free column.
template <class T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m, const T& one) {
    const T zero = zero_like(one);
    std::vector<std::size_t> piv = rref_in_place(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_piv[fc]) continue;
        std::vector<T> v(m.cols(), zero);
        v[fc] = one;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = b; returns nullopt when inconsistent.  When the system is
/// underdetermined this returns the solution with all free coordinates zero.
template <class T>
std::optional<std::vector<T>> solve_linear(const Mat<T>& a, const std::vector<T>& b, const T& one) {
    const T zero = zero_like(one);
    Mat<T> aug(a.rows(), a.cols() + 1, zero);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> piv = rref_in_place(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    std::vector<T> x(a.cols(), zero);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
    return x;
}

/// Rank by a greedy column-space dimension count: reduce each column against
/// the basis collected so far, keep the survivors.  The kept vectors stay
/// mutually reduced (zero at every other vector's lead index), so one pass
/// suffices per column.  Independent route from rref_in_place, used to
/// cross-check every rank the certificates rely on.
template <class T>
std::size_t rank_by_column_greedy(const Mat<T>& m) {
    std::vector<std::vector<T>> basis;
    std::vector<std::size_t> lead;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::vector<T> v;
        v.reserve(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, col));
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (v[lead[k]].is_zero()) continue;
            T f = v[lead[k]];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - f * basis[k][i];
        }
        std::size_t l = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                l = i;
                break;
            }
        if (l == v.size()) continue;
        if (!v[l].is_unit()) throw NonGenericPivot("greedy column count hit a non-unit leader");
        T ip = v[l].inv();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] * ip;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k][l].is_zero()) continue;
            T f = basis[k][l];
            for (std::size_t i = 0; i < v.size(); ++i) basis[k][i] = basis[k][i] - f * v[i];
        }
        basis.push_back(std::move(v));
        lead.push_back(l);
    }
    return basis.size();
}

}  // namespace prym
