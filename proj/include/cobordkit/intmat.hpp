#pragma once

#include "cobordkit/bigint.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace cobordkit {

// Dense matrix over Z with arbitrary-precision entries.
class IntMat {
public:
    IntMat(std::size_t rows, std::size_t cols); // zero-filled
    static IntMat identity(std::size_t n);
    static IntMat from_columns(const std::vector<std::vector<Int>>& cols);
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j);
    const Int& at(std::size_t i, std::size_t j) const;

    IntMat operator*(const IntMat& other) const;
    bool operator==(const IntMat&) const = default;

    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> apply(const std::vector<Int>& v) const; // M*v

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c); // row dst += c*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);

    Int det() const; // square matrices; Bareiss fraction-free elimination

    std::string to_string() const;
    nlohmann::ordered_json to_json() const; // array of row arrays

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> data_; // row-major
};

} // namespace cobordkit
