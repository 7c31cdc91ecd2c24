#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace secant {

using Elem = std::uint32_t;

class PrimeField {
public:
    static constexpr std::uint32_t kMersenne31 = 2147483647u;

    explicit PrimeField(std::uint64_t p = kMersenne31);

    std::uint32_t p() const { return p_; }
    bool mersenne() const { return p_ == kMersenne31; }

    Elem reduce(std::uint64_t x) const {
        if (mersenne()) {
            x = (x & kMersenne31) + (x >> 31);
            x = (x & kMersenne31) + (x >> 31);
            return static_cast<Elem>(x >= kMersenne31 ? x - kMersenne31 : x);
        }
        return static_cast<Elem>(x % p_);
    }
    Elem add(Elem a, Elem b) const { return reduce(std::uint64_t(a) + b); }
    Elem sub(Elem a, Elem b) const { return reduce(std::uint64_t(a) + p_ - b); }
    Elem mul(Elem a, Elem b) const { return reduce(std::uint64_t(a) * b); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;
    Elem from_int(std::int64_t x) const;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    void append_row(std::span<const Elem> r);
    static DenseMatrix identity(std::size_t n);

    const std::vector<Elem>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

// Fraction-free Gaussian elimination, first nonzero pivot; OpenMP over the
// rows below each pivot.
std::size_t rank(const DenseMatrix& m, const PrimeField& F);
// Same elimination, strictly sequential. Reference for tests and benches.
std::size_t rank_serial(const DenseMatrix& m, const PrimeField& F);

DenseMatrix stack(const std::vector<DenseMatrix>& ms);

// Incrementally maintained echelon basis with normalized pivots. Rows are
// streamed in; reduction of an incoming row against the basis is split by
// column blocks across OpenMP threads.
class RowBasis {
public:
    RowBasis(std::size_t cols, const PrimeField& F);

    // Returns true when the row was independent of the current basis.
    bool add(std::vector<Elem> row);
    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }
    bool full() const { return rank() == cols_; }

private:
    std::size_t cols_;
    PrimeField F_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
    // at_pivot_[j][i] = rows_[j][pivots_[i]]
    std::vector<std::vector<Elem>> at_pivot_;
};

}  // namespace secant
