#include "cyclocode/matrix.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclocode {

namespace {

void require_same_field(const GfMatrix& a, const GfMatrix& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("field mismatch between matrices");
}

}  // namespace

GfMatrix GfMatrix::identity(const FieldSpec& field, std::size_t n) {
    GfMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

felem GfMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                                ") out of range");
    return data_[r * cols_ + c];
}

GfMatrix GfMatrix::operator+(const GfMatrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("dimension mismatch in matrix addition");
    GfMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

GfMatrix GfMatrix::operator-(const GfMatrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("dimension mismatch in matrix subtraction");
    GfMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

GfMatrix GfMatrix::operator*(const GfMatrix& o) const {
    require_same_field(*this, o);
    if (cols_ != o.rows_)
        throw std::invalid_argument("dimension mismatch in matrix product");
    GfMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            felem a = (*this)(i, k);
            if (a == 0) continue;
            const felem* orow = o.row(k);
            felem* rrow = r.row(i);
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (orow[j] != 0) rrow[j] = field_.add(rrow[j], field_.mul(a, orow[j]));
            }
        }
    }
    return r;
}

GfMatrix GfMatrix::scaled(felem s) const {
    GfMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(data_[i], s);
    return r;
}

GfMatrix GfMatrix::transpose() const {
    GfMatrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool GfMatrix::operator==(const GfMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool GfMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](felem v) { return v == 0; });
}

std::string GfMatrix::to_text() const {
    std::string out = "field=" + std::to_string(field_.order()) + " rows=" + std::to_string(rows_) +
                      " cols=" + std::to_string(cols_) + "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ' ';
            out += field_.file_token((*this)(i, j));
        }
        out += '\n';
    }
    return out;
}

GfMatrix matrix_from_stream(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("missing matrix header line");
    std::istringstream hs(header);
    std::string ftok, rtok, ctok;
    if (!(hs >> ftok >> rtok >> ctok))
        throw std::invalid_argument("malformed matrix header '" + header + "'");
    auto numeric_suffix = [](const std::string& tok, const char* prefix) -> std::size_t {
        std::string_view sv(tok);
        std::string_view pre(prefix);
        if (sv.substr(0, pre.size()) != pre)
            throw std::invalid_argument("malformed matrix header field '" + tok + "'");
        sv.remove_prefix(pre.size());
        if (sv.empty()) throw std::invalid_argument("malformed matrix header field '" + tok + "'");
        std::size_t v = 0;
        for (char c : sv) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("malformed matrix header field '" + tok + "'");
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        return v;
    };
    std::size_t order = numeric_suffix(ftok, "field=");
    std::size_t nrows = numeric_suffix(rtok, "rows=");
    std::size_t ncols = numeric_suffix(ctok, "cols=");

    FieldSpec field = make_field(static_cast<std::uint32_t>(order));
    GfMatrix m(field, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("matrix body ended early at row " + std::to_string(i));
            m(i, j) = field.parse_token(tok);
        }
    }
    std::string extra;
    if (in >> extra)
        throw std::invalid_argument("trailing token '" + extra + "' after matrix body");
    return m;
}

GfMatrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    return matrix_from_stream(in);
}

RrefResult rref(const GfMatrix& m, const std::vector<std::size_t>& column_order) {
    std::vector<std::size_t> order = column_order;
    if (order.empty()) {
        order.resize(m.cols());
        std::iota(order.begin(), order.end(), std::size_t{0});
    } else if (order.size() != m.cols()) {
        throw std::invalid_argument("column order must be a permutation of all columns");
    }

    const FieldSpec& f = m.field();
    RrefResult res{m, {}};
    GfMatrix& r = res.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col : order) {
        if (pivot_row == r.rows()) break;
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(pivot_row, j));
        felem scale = f.inv(r(pivot_row, col));
        if (scale != 1)
            for (std::size_t j = 0; j < r.cols(); ++j)
                r(pivot_row, j) = f.mul(r(pivot_row, j), scale);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row) continue;
            felem c = r(i, col);
            if (c == 0) continue;
            for (std::size_t j = 0; j < r.cols(); ++j)
                r(i, j) = f.sub(r(i, j), f.mul(c, r(pivot_row, j)));
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    return res;
}

std::size_t rank(const GfMatrix& m) { return rref(m).pivots.size(); }

GfMatrix null_space(const GfMatrix& m) {
    RrefResult rr = rref(m);
    const FieldSpec& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    GfMatrix basis(f, free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        basis(i, fc) = 1;
        for (std::size_t j = 0; j < rr.pivots.size(); ++j)
            basis(i, rr.pivots[j]) = f.neg(rr.reduced(j, fc));
    }
    return basis;
}

bool same_row_space(const GfMatrix& a, const GfMatrix& b) {
    if (a.field() != b.field() || a.cols() != b.cols()) return false;
    RrefResult ra = rref(a), rb = rref(b);
    if (ra.pivots.size() != rb.pivots.size()) return false;
    for (std::size_t i = 0; i < ra.pivots.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (ra.reduced(i, j) != rb.reduced(i, j)) return false;
    return true;
}

}  // namespace cyclocode
