#include "cobordkit/intmat.hpp"

#include "cobordkit/errors.hpp"

#include "jsonutil.hpp"

#include <sstream>

namespace cobordkit {

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_columns(const std::vector<std::vector<Int>>& cols) {
    if (cols.empty()) throw DomainError("from_columns: no columns");
    const std::size_t rows = cols[0].size();
    for (const auto& c : cols)
        if (c.size() != rows) throw DomainError("from_columns: ragged column lengths");
    IntMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) throw DomainError("from_rows: no rows");
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw DomainError("from_rows: ragged row lengths");
    IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Int& IntMat::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw DomainError("IntMat::at out of range");
    return data_[i * cols_ + j];
}

const Int& IntMat::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DomainError("IntMat::at out of range");
    return data_[i * cols_ + j];
}

IntMat IntMat::operator*(const IntMat& other) const {
    if (cols_ != other.rows_) throw MismatchError("IntMat: size mismatch in product");
    IntMat r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) r.at(i, j) += v * other.at(k, j);
        }
    return r;
}

std::vector<Int> IntMat::column(std::size_t j) const {
    std::vector<Int> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw MismatchError("IntMat: vector length mismatch");
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

void IntMat::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += c * at(k, src);
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

Int IntMat::det() const {
    if (rows_ != cols_) throw DomainError("det: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return Int(1);

    // Bareiss: exact division at every step keeps entries integral.
    IntMat m(*this);
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return Int(0);
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::string IntMat::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j);
        }
        out << "]";
        out << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

nlohmann::ordered_json IntMat::to_json() const {
    njson rows = njson::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        njson row = njson::array();
        for (std::size_t j = 0; j < cols_; ++j) row.push_back(json_int(at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cobordkit
