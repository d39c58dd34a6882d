#pragma once

// Dense exact vectors and matrices, plus 1-based index selections.

#include "signreg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace signreg {

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Strictly increasing list of 1-based positions.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<std::size_t> idx);
    explicit IndexSet(std::vector<std::size_t> idx);

    // {first, first+1, ..., first+count-1}
    static IndexSet contiguous(std::size_t first, std::size_t count);
    static IndexSet range(std::size_t count) { return contiguous(1, count); }

    [[nodiscard]] std::size_t size() const { return idx_.size(); }
    [[nodiscard]] bool empty() const { return idx_.empty(); }
    [[nodiscard]] std::size_t operator[](std::size_t k) const { return idx_[k]; }
    [[nodiscard]] std::size_t back() const { return idx_.back(); }
    [[nodiscard]] const std::vector<std::size_t>& indices() const { return idx_; }
    [[nodiscard]] bool is_contiguous() const;
    [[nodiscard]] IndexSet without(std::size_t k) const;  // drops the k-th (0-based) element
    [[nodiscard]] std::string str() const;                 // "{1,3}"

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> idx_;
};

class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t dim) : entries_(dim) {}
    RatVector(std::initializer_list<Rational> entries) : entries_(entries) {}
    explicit RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    [[nodiscard]] std::size_t dim() const { return entries_.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] RatVector negated() const;
    [[nodiscard]] std::string str() const;  // "(1,-1/2)"

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const RatVector&, const RatVector&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RatVector& v) { return os << v.str(); }

private:
    std::vector<Rational> entries_;
};

/// Row-major dense matrix; shapes are at least 1x1 unless default constructed.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] std::size_t min_dim() const { return rows_ < cols_ ? rows_ : cols_; }

    // 0-based element access.
    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    // 1-based, bounds checked.
    [[nodiscard]] const Rational& at(std::size_t i, std::size_t j) const;

    [[nodiscard]] RatVector column(std::size_t j) const;  // 0-based
    [[nodiscard]] RatMatrix transposed() const;
    [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }
    [[nodiscard]] std::string str() const;  // "[[1,1],[1,2]]"

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << m.str(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a);

}  // namespace signreg
