#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "secant/linalg.hpp"

using namespace secant;

namespace {

DenseMatrix from(const std::vector<std::vector<oracle::i64>>& rows, std::size_t cols) {
    DenseMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<Elem>(rows[i][j]);
    return m;
}

std::size_t basis_rank(const DenseMatrix& m, const PrimeField& F) {
    RowBasis rb(m.cols(), F);
    for (std::size_t i = 0; i < m.rows(); ++i) rb.add(std::vector<Elem>(m.row(i).begin(), m.row(i).end()));
    return rb.rank();
}

// Random matrix whose rank is at most `r`: products of r-wide factors.
DenseMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t r, const PrimeField& F, std::mt19937_64& g) {
    std::uniform_int_distribution<std::uint32_t> uni(0, F.p() - 1);
    DenseMatrix a(rows, r), b(r, cols), m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < r; ++j) a.at(i, j) = uni(g);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) b.at(i, j) = uni(g);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Elem acc = 0;
            for (std::size_t t = 0; t < r; ++t) acc = F.add(acc, F.mul(a.at(i, t), b.at(t, j)));
            m.at(i, j) = acc;
        }
    return m;
}

}  // namespace

TEST_CASE("prime field") {
    PrimeField F;
    CHECK(F.p() == 2147483647u);
    CHECK(F.mul(F.inv(12345), 12345) == 1);
    CHECK(F.reduce(std::uint64_t(F.p()) * F.p()) == 0);
    CHECK(F.from_int(-1) == F.p() - 1);
    PrimeField G(101);
    CHECK(G.mul(G.inv(7), 7) == 1);
    CHECK(G.pow(3, 100) == 1);
    CHECK_THROWS(PrimeField(100));
    CHECK_THROWS(PrimeField(1));
    CHECK(is_prime(4294967291ull));
    CHECK(!is_prime(4294967297ull));
}

TEST_CASE("fixed ranks") {
    PrimeField F;
    CHECK(rank(DenseMatrix::identity(5), F) == 5);
    CHECK(rank(DenseMatrix(3, 7), F) == 0);
    CHECK(rank_serial(DenseMatrix(3, 7), F) == 0);
    CHECK(basis_rank(DenseMatrix::identity(5), F) == 5);
}

TEST_CASE("stack") {
    DenseMatrix a = DenseMatrix::identity(3);
    CHECK(stack({a}).data() == a.data());
    CHECK_THROWS_AS(stack({}), ShapeMismatch);
    CHECK_THROWS_AS(stack({DenseMatrix(2, 3), DenseMatrix(2, 4)}), ShapeMismatch);
    std::vector<DenseMatrix> blocks(45, DenseMatrix(5, 225));
    DenseMatrix s = stack(blocks);
    CHECK(s.rows() == 225);
    CHECK(s.cols() == 225);
}

TEST_CASE("agreement with minor expansion over GF(101)") {
    PrimeField F(101);
    std::mt19937_64 g(2024);
    std::uniform_int_distribution<int> small(0, 3), entry(0, 100), coin(0, 3);
    int checked = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::size_t rows = 1 + small(g), cols = 1 + small(g);
        std::vector<std::vector<oracle::i64>> m(rows, std::vector<oracle::i64>(cols));
        for (auto& r : m)
            for (auto& x : r) x = coin(g) == 0 ? 0 : entry(g);
        // sometimes copy a scaled row to force dependence
        if (rows > 1 && coin(g) == 0) {
            oracle::i64 c = entry(g);
            for (std::size_t j = 0; j < cols; ++j) m[rows - 1][j] = m[0][j] * c % 101;
        }
        DenseMatrix d = from(m, cols);
        std::size_t want = oracle::minor_rank(m, 101);
        REQUIRE(rank(d, F) == want);
        REQUIRE(rank_serial(d, F) == want);
        REQUIRE(basis_rank(d, F) == want);
        ++checked;
    }
    CHECK(checked == 3000);
}

TEST_CASE("rank properties") {
    PrimeField F;
    std::mt19937_64 g(99);
    std::uniform_int_distribution<std::uint32_t> uni(1, F.p() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 5 + trial % 17, cols = 3 + (trial * 7) % 23, r = 1 + trial % 9;
        DenseMatrix a = low_rank(rows, cols, r, F, g);
        DenseMatrix b = low_rank(rows + 2, cols, 1 + trial % 4, F, g);
        std::size_t ra = rank(a, F), rb = rank(b, F);
        CHECK(ra <= std::min(rows, cols));
        CHECK(ra == rank_serial(a, F));
        CHECK(ra == basis_rank(a, F));
        std::size_t rs = rank(stack({a, b}), F);
        CHECK(rs >= std::max(ra, rb));
        CHECK(rs <= ra + rb);

        // permute and rescale rows
        DenseMatrix p(rows, cols);
        std::vector<std::size_t> order(rows);
        for (std::size_t i = 0; i < rows; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), g);
        for (std::size_t i = 0; i < rows; ++i) {
            Elem c = uni(g);
            for (std::size_t j = 0; j < cols; ++j) p.at(i, j) = F.mul(c, a.at(order[i], j));
        }
        CHECK(rank(p, F) == ra);
    }
}

TEST_CASE("parallel and serial kernels agree above the threading threshold") {
    PrimeField F;
    std::mt19937_64 g(5);
    DenseMatrix m = low_rank(300, 260, 211, F, g);
    CHECK(rank(m, F) == 211);
    CHECK(rank_serial(m, F) == 211);
    CHECK(basis_rank(m, F) == 211);
}

TEST_CASE("row basis reports independence") {
    PrimeField F(101);
    RowBasis rb(3, F);
    CHECK(rb.add({1, 2, 3}));
    CHECK(!rb.add({2, 4, 6}));
    CHECK(rb.add({0, 1, 0}));
    CHECK(!rb.add({1, 3, 3}));
    CHECK(rb.add({0, 0, 5}));
    CHECK(rb.full());
    CHECK_THROWS(rb.add({1, 2}));
}
