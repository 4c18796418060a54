#include "tatekit/scalar_mat.hpp"

namespace tatekit {

ScalarMat ScalarMat::identity(Ring ring, size_t n) {
    ScalarMat m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
    return m;
}

ScalarMat ScalarMat::operator+(const ScalarMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
    ScalarMat m(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + rhs.a_[k];
    return m;
}

ScalarMat ScalarMat::operator-(const ScalarMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
    ScalarMat m(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - rhs.a_[k];
    return m;
}

ScalarMat ScalarMat::operator*(const ScalarMat& rhs) const {
    if (cols_ != rhs.rows_) throw PreconditionError("matrix shape mismatch in product");
    ScalarMat m(ring_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                m.at(i, j) = m.at(i, j) + aik * b;
            }
        }
    return m;
}

ScalarMat ScalarMat::operator*(const Scalar& rhs) const {
    ScalarMat m(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * rhs;
    return m;
}

ScalarMat ScalarMat::transpose() const {
    ScalarMat m(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool ScalarMat::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(ring_, rows_);
}

Scalar ScalarMat::det() const {
    if (rows_ != cols_) throw PreconditionError("determinant of a non-square matrix");
    ScalarMat w = *this;
    size_t n = rows_;
    Scalar acc = Scalar::one(ring_);
    for (size_t col = 0; col < n; ++col) {
        // Pivot on a unit entry (required over the dual numbers).
        size_t piv = col;
        while (piv < n && !w.at(piv, col).is_unit()) ++piv;
        if (piv == n) {
            // No unit pivot. Over a field that means a zero column block.
            if (ring_.is_field()) return Scalar::zero(ring_);
            // Over k[e]/(e^2): the remaining column is e-torsion, det is the
            // product of an e-multiple, i.e. determined by expansion. Fall
            // back to Laplace on this column.
            Scalar d = Scalar::zero(ring_);
            for (size_t i = col; i < n; ++i) {
                if (w.at(i, col).is_zero()) continue;
                // Minor without row i / column col of the remaining block.
                ScalarMat minor(ring_, n - col - 1, n - col - 1);
                size_t mi = 0;
                for (size_t r = col; r < n; ++r) {
                    if (r == i) continue;
                    for (size_t c = col + 1; c < n; ++c) minor.at(mi, c - col - 1) = w.at(r, c);
                    ++mi;
                }
                Scalar term = w.at(i, col) * minor.det();
                if ((i - col) % 2) term = -term;
                d = d + term;
            }
            return acc * d;
        }
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
            acc = -acc;
        }
        Scalar inv = w.at(col, col).inverse();
        acc = acc * w.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            Scalar f = w.at(i, col) * inv;
            if (f.is_zero()) continue;
            for (size_t j = col; j < n; ++j) w.at(i, j) = w.at(i, j) - f * w.at(col, j);
        }
    }
    return acc;
}

ScalarMat ScalarMat::inverse() const {
    if (rows_ != cols_) throw PreconditionError("inverse of a non-square matrix");
    size_t n = rows_;
    ScalarMat w = *this;
    ScalarMat inv = identity(ring_, n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && !w.at(piv, col).is_unit()) ++piv;
        if (piv == n) throw PreconditionError("matrix not invertible over " + ring_.name());
        if (piv != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar s = w.at(col, col).inverse();
        for (size_t j = 0; j < n; ++j) {
            w.at(col, j) = w.at(col, j) * s;
            inv.at(col, j) = inv.at(col, j) * s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Scalar f = w.at(i, col);
            if (f.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - f * w.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string ScalarMat::to_string() const {
    std::string out;
    for (size_t i = 0; i < rows_; ++i) {
        if (i) out += "; ";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).to_string();
        }
    }
    return out;
}

Rref rref(const ScalarMat& m) {
    if (!m.ring().is_field()) throw PreconditionError("row reduction requires a field");
    ScalarMat w = m;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
        size_t piv = row;
        while (piv < w.rows() && w.at(piv, col).is_zero()) ++piv;
        if (piv == w.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < w.cols(); ++j) std::swap(w.at(piv, j), w.at(row, j));
        Scalar s = w.at(row, col).inverse();
        for (size_t j = 0; j < w.cols(); ++j) w.at(row, j) = w.at(row, j) * s;
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == row) continue;
            Scalar f = w.at(i, col);
            if (f.is_zero()) continue;
            for (size_t j = 0; j < w.cols(); ++j) w.at(i, j) = w.at(i, j) - f * w.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return Rref{std::move(w), std::move(pivots)};
}

size_t rank(const ScalarMat& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMat& m) {
    Rref r = rref(m);
    const Ring ring = m.ring();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(ring));
        v[free_col] = Scalar::one(ring);
        for (size_t row = 0; row < r.pivots.size(); ++row) v[r.pivots[row]] = -r.mat.at(row, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

ScalarMat row_space_basis(const ScalarMat& m) {
    Rref r = rref(m);
    ScalarMat out(m.ring(), r.pivots.size(), m.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = r.mat.at(i, j);
    return out;
}

bool rows_contained(const ScalarMat& sub, const ScalarMat& space) {
    if (sub.cols() != space.cols()) throw PreconditionError("ambient dimension mismatch");
    ScalarMat stacked(sub.ring(), sub.rows() + space.rows(), sub.cols());
    for (size_t i = 0; i < space.rows(); ++i)
        for (size_t j = 0; j < space.cols(); ++j) stacked.at(i, j) = space.at(i, j);
    for (size_t i = 0; i < sub.rows(); ++i)
        for (size_t j = 0; j < sub.cols(); ++j) stacked.at(space.rows() + i, j) = sub.at(i, j);
    return rank(stacked) == rank(space);
}

}  // namespace tatekit
