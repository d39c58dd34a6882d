#include "signreg/matrix.hpp"

#include <sstream>

namespace signreg {

IndexSet::IndexSet(std::initializer_list<std::size_t> idx) : IndexSet(std::vector<std::size_t>(idx)) {}

IndexSet::IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {
    for (std::size_t k = 0; k < idx_.size(); ++k) {
        if (idx_[k] < 1) throw ShapeError("index sets are 1-based");
        if (k > 0 && idx_[k] <= idx_[k - 1]) throw ShapeError("index set must be strictly increasing");
    }
}

IndexSet IndexSet::contiguous(std::size_t first, std::size_t count) {
    std::vector<std::size_t> v(count);
    for (std::size_t k = 0; k < count; ++k) v[k] = first + k;
    return IndexSet(std::move(v));
}

bool IndexSet::is_contiguous() const {
    for (std::size_t k = 1; k < idx_.size(); ++k)
        if (idx_[k] != idx_[k - 1] + 1) return false;
    return true;
}

IndexSet IndexSet::without(std::size_t k) const {
    std::vector<std::size_t> v;
    v.reserve(idx_.size());
    for (std::size_t t = 0; t < idx_.size(); ++t)
        if (t != k) v.push_back(idx_[t]);
    return IndexSet(std::move(v));
}

std::string IndexSet::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < idx_.size(); ++k) os << (k ? "," : "") << idx_[k];
    os << '}';
    return os.str();
}

bool RatVector::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RatVector RatVector::negated() const {
    RatVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = -entries_[i];
    return out;
}

std::string RatVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
    os << ')';
    return os.str();
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be at least 1");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be at least 1");
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be at least 1");
    if (entries_.size() != rows * cols) throw ShapeError("entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

const Rational& RatMatrix::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw ShapeError("matrix index out of range");
    return (*this)(i - 1, j - 1);
}

RatVector RatMatrix::column(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RatMatrix operator-(const RatMatrix& a) {
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
    return out;
}

}  // namespace signreg
