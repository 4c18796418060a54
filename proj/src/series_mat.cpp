#include "tatekit/series_mat.hpp"

namespace tatekit {

SeriesMat SeriesMat::identity(Ring ring, size_t n, int prec) {
    SeriesMat m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentSeries::constant(Scalar::one(ring), prec);
    return m;
}

SeriesMat SeriesMat::scalar_diag(const LaurentSeries& d, size_t n) {
    SeriesMat m(d.ring(), n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = d;
    return m;
}

SeriesMat SeriesMat::operator+(const SeriesMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
    SeriesMat m(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + rhs.a_[k];
    return m;
}

SeriesMat SeriesMat::operator-(const SeriesMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
    SeriesMat m(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - rhs.a_[k];
    return m;
}

SeriesMat SeriesMat::operator*(const SeriesMat& rhs) const {
    if (cols_ != rhs.rows_) throw PreconditionError("matrix shape mismatch in product");
    SeriesMat m(ring_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rhs.cols_; ++j) {
            LaurentSeries acc = at(i, 0) * rhs.at(0, j);
            for (size_t k = 1; k < cols_; ++k) acc = acc + at(i, k) * rhs.at(k, j);
            m.at(i, j) = std::move(acc);
        }
    return m;
}

SeriesMat SeriesMat::operator*(const LaurentSeries& rhs) const {
    SeriesMat m(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * rhs;
    return m;
}

SeriesMat SeriesMat::transpose() const {
    SeriesMat m(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

SeriesMat SeriesMat::truncated(int prec) const {
    SeriesMat m(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].truncated(prec);
    return m;
}

namespace {

LaurentSeries det_rec(const SeriesMat& m, std::vector<size_t>& cols, size_t row) {
    if (cols.size() == 1) return m.at(row, cols[0]);
    LaurentSeries acc = LaurentSeries::zero(m.ring());
    for (size_t k = 0; k < cols.size(); ++k) {
        size_t c = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        LaurentSeries term = m.at(row, c) * det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(k), c);
        acc = k % 2 ? acc - term : acc + term;
    }
    return acc;
}

}  // namespace

LaurentSeries SeriesMat::det() const {
    if (rows_ != cols_) throw PreconditionError("determinant of a non-square matrix");
    if (rows_ == 0) return LaurentSeries::constant(Scalar::one(ring_));
    std::vector<size_t> cols(cols_);
    for (size_t j = 0; j < cols_; ++j) cols[j] = j;
    return det_rec(*this, cols, 0);
}

SeriesMat SeriesMat::adjugate() const {
    if (rows_ != cols_) throw PreconditionError("adjugate of a non-square matrix");
    size_t n = rows_;
    if (n == 1) return identity(ring_, 1);
    SeriesMat adj(ring_, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            SeriesMat minor(ring_, n - 1, n - 1);
            size_t mi = 0;
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                size_t mj = 0;
                for (size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mi, mj++) = at(r, c);
                }
                ++mi;
            }
            LaurentSeries cof = minor.det();
            if ((i + j) % 2) cof = -cof;
            adj.at(j, i) = std::move(cof);  // adjugate is the transposed cofactor matrix
        }
    return adj;
}

SeriesMat SeriesMat::inverse(std::optional<int> target_prec) const {
    LaurentSeries d = det();
    LaurentSeries dinv = d.inverse(target_prec);
    return adjugate() * dinv;
}

std::string SeriesMat::to_string() const {
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

SeriesMat SeriesMat::parse(Ring ring, const std::string& text) {
    std::vector<std::vector<std::string>> cells;
    std::string row_acc;
    auto flush_row = [&](const std::string& row) {
        std::vector<std::string> entries;
        std::string cur;
        int depth = 0;
        for (char c : row) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                entries.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        entries.push_back(cur);
        cells.push_back(std::move(entries));
    };
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            flush_row(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    flush_row(cur);
    size_t rows = cells.size();
    size_t cols = cells[0].size();
    for (const auto& r : cells)
        if (r.size() != cols) throw ParseError("ragged matrix literal");
    SeriesMat m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = LaurentSeries::parse(ring, cells[i][j]);
    return m;
}

}  // namespace tatekit
