#include "secant/linalg.hpp"

#include <algorithm>
#include <string>

namespace secant {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p) {
    if (p > 0xffffffffull || !is_prime(p))
        throw std::invalid_argument("modulus must be a prime below 2^32: " + std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
}

Elem PrimeField::from_int(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

void DenseMatrix::append_row(std::span<const Elem> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw ShapeMismatch("append_row: column count differs");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseMatrix stack(const std::vector<DenseMatrix>& ms) {
    if (ms.empty()) throw ShapeMismatch("stack of no matrices");
    std::size_t cols = ms.front().cols();
    std::size_t rows = 0;
    for (const auto& m : ms) {
        if (m.cols() != cols) throw ShapeMismatch("stack: column counts differ");
        rows += m.rows();
    }
    DenseMatrix out(rows, cols);
    std::size_t r = 0;
    for (const auto& m : ms)
        for (std::size_t i = 0; i < m.rows(); ++i, ++r)
            std::copy(m.row(i).begin(), m.row(i).end(), out.row(r).begin());
    return out;
}

namespace {

// row_j <- piv * row_j - lead * row_p on columns [c, cols)
inline void eliminate_row(Elem* rj, const Elem* rp, std::size_t c, std::size_t cols, Elem piv,
                          const PrimeField& F) {
    Elem lead = rj[c];
    if (lead == 0) return;
    Elem nl = F.neg(lead);
    for (std::size_t x = c; x < cols; ++x)
        rj[x] = F.reduce(std::uint64_t(F.mul(piv, rj[x])) + std::uint64_t(nl) * rp[x]);
}

template <bool Parallel>
std::size_t fraction_free_rank(const DenseMatrix& m, const PrimeField& F) {
    std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    std::vector<Elem> a = m.data();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p * C + c] == 0) ++p;
        if (p == R) continue;
        if (p != r) std::swap_ranges(a.begin() + p * C, a.begin() + (p + 1) * C, a.begin() + r * C);
        const Elem* rp = a.data() + r * C;
        Elem piv = rp[c];
        std::int64_t lo = static_cast<std::int64_t>(r + 1), hi = static_cast<std::int64_t>(R);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if ((hi - lo) * static_cast<std::int64_t>(C - c) > 32768)
            for (std::int64_t j = lo; j < hi; ++j) eliminate_row(a.data() + j * C, rp, c, C, piv, F);
        } else {
            for (std::int64_t j = lo; j < hi; ++j) eliminate_row(a.data() + j * C, rp, c, C, piv, F);
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const DenseMatrix& m, const PrimeField& F) { return fraction_free_rank<true>(m, F); }

std::size_t rank_serial(const DenseMatrix& m, const PrimeField& F) {
    return fraction_free_rank<false>(m, F);
}

RowBasis::RowBasis(std::size_t cols, const PrimeField& F) : cols_(cols), F_(F) {}

bool RowBasis::add(std::vector<Elem> x) {
    if (x.size() != cols_) throw ShapeMismatch("RowBasis::add: wrong row length");
    if (full()) return false;
    const std::size_t r = pivots_.size();

    // Coefficients of x against the basis, read off the pivot columns only.
    std::vector<Elem> at(r), lambda(r);
    for (std::size_t i = 0; i < r; ++i) at[i] = x[pivots_[i]];
    for (std::size_t j = 0; j < r; ++j) {
        Elem l = at[j];
        lambda[j] = F_.neg(l);
        if (l == 0) continue;
        for (std::size_t i = j + 1; i < r; ++i)
            if (Elem b = at_pivot_[j][i]) at[i] = F_.sub(at[i], F_.mul(l, b));
    }

    constexpr std::int64_t kBlock = 4096;
    const std::int64_t nblocks = (static_cast<std::int64_t>(cols_) + kBlock - 1) / kBlock;
    const PrimeField F = F_;
#pragma omp parallel for schedule(static) if (nblocks > 1 && r > 0)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        std::size_t c0 = b * kBlock, c1 = std::min<std::size_t>(cols_, c0 + kBlock);
        for (std::size_t j = 0; j < r; ++j) {
            Elem nl = lambda[j];
            if (nl == 0) continue;
            const Elem* bj = rows_[j].data();
            for (std::size_t c = c0; c < c1; ++c) x[c] = F.reduce(std::uint64_t(x[c]) + std::uint64_t(nl) * bj[c]);
        }
    }

    std::size_t piv = 0;
    while (piv < cols_ && x[piv] == 0) ++piv;
    if (piv == cols_) return false;
    Elem s = F_.inv(x[piv]);
    for (std::size_t c = piv; c < cols_; ++c) x[c] = F_.mul(x[c], s);

    for (std::size_t j = 0; j < r; ++j) at_pivot_[j].push_back(rows_[j][piv]);
    std::vector<Elem> own(r + 1, 0);
    own[r] = 1;
    at_pivot_.push_back(std::move(own));
    pivots_.push_back(piv);
    rows_.push_back(std::move(x));
    return true;
}

}  // namespace secant
