#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclocode/gf.hpp"

namespace cyclocode {

/// Dense row-major matrix over a FieldSpec.
class GfMatrix {
  public:
    GfMatrix() = default;
    GfMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static GfMatrix identity(const FieldSpec& field, std::size_t n);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    felem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    felem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    felem at(std::size_t r, std::size_t c) const;

    const felem* row(std::size_t r) const { return data_.data() + r * cols_; }
    felem* row(std::size_t r) { return data_.data() + r * cols_; }

    GfMatrix operator+(const GfMatrix& o) const;
    GfMatrix operator-(const GfMatrix& o) const;
    GfMatrix operator*(const GfMatrix& o) const;
    GfMatrix scaled(felem s) const;
    GfMatrix transpose() const;
    bool operator==(const GfMatrix& o) const;
    bool operator!=(const GfMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

    std::string to_text() const;

  private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<felem> data_;
};

/// Parses the text form: header line "field=<l> rows=<r> cols=<c>", then
/// rows*cols whitespace-separated element tokens. Throws std::invalid_argument
/// on malformed input.
GfMatrix matrix_from_text(const std::string& text);
GfMatrix matrix_from_stream(std::istream& in);

struct RrefResult {
    GfMatrix reduced;              // reduced row echelon form (zero rows kept)
    std::vector<std::size_t> pivots;  // pivot column per rank row, in elimination order
};

/// Gauss-Jordan over the field. `column_order`, when non-empty, is the
/// preference order in which pivot columns are tried; it must be a
/// permutation of 0..cols-1. Row echelon shape follows the given order.
RrefResult rref(const GfMatrix& m, const std::vector<std::size_t>& column_order = {});

std::size_t rank(const GfMatrix& m);

/// Basis of the right null space {x : m x = 0}, rows of the result.
GfMatrix null_space(const GfMatrix& m);

/// True when the row spaces coincide (compares canonical rref forms).
bool same_row_space(const GfMatrix& a, const GfMatrix& b);

}  // namespace cyclocode
