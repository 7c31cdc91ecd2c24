#include "doctest.h"

#include "secant/combinatorics.hpp"

using namespace secant;

namespace {

Statement st(const char* s) { return parse_statement(s); }

// Every canonical T-statement in a small window.
std::vector<Statement> window(int kMax, int nMax, int aMax, int sMax) {
    std::vector<Statement> out;
    std::vector<std::pair<int, int>> kinds;
    for (int n = 1; n <= nMax; ++n)
        for (int a = 1; a <= aMax; ++a) kinds.emplace_back(n, a);
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!pick.empty())
            for (int s = 0; s <= sMax; ++s) {
                Statement x;
                for (int i : pick) {
                    x.fmt.n.push_back(kinds[i].first);
                    x.fmt.a.push_back(kinds[i].second);
                }
                x.s = s;
                out.push_back(x);
            }
        if (static_cast<int>(pick.size()) == kMax) return;
        for (std::size_t i = from; i < kinds.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("binomials") {
    CHECK(binom(5, 3) == 10);
    CHECK(binom(6, 4) == 15);
    CHECK(binom(7, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(60, 30) == BigInt("118264581564861424"));
    CHECK(binom(200, 100) == binom(199, 99) + binom(199, 100));
}

TEST_CASE("ambient dimension") {
    CHECK(ambient_dim({{2, 2}, {4, 4}}) == 225);
    CHECK(ambient_dim({{1, 1}, {2, 3}}) == 12);
    CHECK_THROWS_AS(ambient_dim({{3}, {0}}), InvalidStatement);
    CHECK_THROWS_AS(canonicalize(st("T(3;0;1)")), InvalidStatement);
}

TEST_CASE("expected value and abundancy") {
    CHECK(expected_value(st("T(2,2;4,4;45)")) == 225);
    CHECK(expected_value(st("S(2;4;3;6;0)")) == 15);
    CHECK(expected_value(st("T(3,1;2,2;0)")) == 0);
    CHECK(abundancy(st("T(2,2;4,4;45)")) == Abundancy::Equi);
    CHECK(abundancy(st("T(2,2;2,4;24)")) == Abundancy::Super);
    CHECK(abundancy(st("T(2,2;1,4;9)")) == Abundancy::Equi);
    CHECK(abundancy(st("T(1,1;3,3;5)")) == Abundancy::Sub);
    CHECK(is_sub(Abundancy::Equi));
    CHECK(is_super(Abundancy::Equi));
}

TEST_CASE("Horace parameters") {
    HoraceParams hp = horace_params(st("T(2,2;4,4;45)"));
    CHECK(hp.sPrime == 18);
    CHECK(hp.epsilon == 3);
    CHECK(hp.nR == 150);
    CHECK(hp.nT == 75);
    // (2,2;1,4;9) with the degree-4 factor in front.
    HoraceParams r = horace_params(st("T(2,2;4,1;9)"));
    CHECK(r.sPrime == 3);
    CHECK(r.epsilon == 3);
    // zero dividend: 2 points on P1 x P1 at (3,1), N_R = 6 = 2*3
    HoraceParams z = horace_params(st("T(1,1;3,1;2)"));
    CHECK(z.dividend == 0);
    CHECK(z.sPrime == 0);
    CHECK(z.epsilon == 0);
    CHECK_THROWS(horace_params(st("T(1,1;1,3;3)")));
    CHECK_THROWS_AS(horace_params(st("T(2,2;4,4;1)")), NegativeDividend);
}

TEST_CASE("s bounds") {
    CHECK(s_bounds({{1, 1}, {3, 3}}) == std::pair<BigInt, BigInt>(5, 6));
    CHECK(s_bounds({{2, 2}, {4, 4}}) == std::pair<BigInt, BigInt>(45, 45));
    CHECK(s_bounds({{1}, {1}}) == std::pair<BigInt, BigInt>(1, 1));
}

TEST_CASE("canonical form") {
    CHECK(canonicalize(st("S(0,2;1,4;3;0;6)")) == st("S(2;4;3;6;0)"));
    CHECK(canonicalize(st("T(2,1;4,1;7)")) == canonicalize(st("T(1,2;1,4;7)")));
    CHECK_THROWS_AS(canonicalize(st("S(1,2;2,2;1;0;1)")), InvalidStatement);
    // fiber points pin factor 1 in place
    Statement pinned = canonicalize(st("S(3,1;1,1;1;0;2)"));
    CHECK(pinned.fmt.n == std::vector<int>{3, 1});
}

TEST_CASE("unbalanced range") {
    auto r = unbalanced_range({{2, 3}, {1, 1}});
    REQUIRE(r);
    CHECK(r->first == 2);
    CHECK(r->second == 2);
    CHECK(!unbalanced_range({{1, 3}, {1, 1}}));
    CHECK(!unbalanced_range({{1, 1}, {1, 1}}));
}

TEST_CASE("parser") {
    Statement t = st("T(2,2;4,4;45)");
    CHECK(t.fmt.n == std::vector<int>{2, 2});
    CHECK(t.s == 45);
    CHECK(to_string(t) == "T(2,2;4,4;45)");
    CHECK(to_string(st("S(2;4;3;6;0)")) == "S(2;4;3;6;0)");
    CHECK(to_string(st(" T( 1 , 2 ; 3 , 4 ; 5 ) ")) == "T(1,2;3,4;5)");
    CHECK_THROWS_AS(st("T(1,2;3;5)"), ParseError);
    CHECK_THROWS_AS(st("X(1;1;1)"), ParseError);
    try {
        st("T(1,2;3,x;5)");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("properties over a window") {
    for (const Statement& x : window(3, 3, 4, 12)) {
        const Format& f = x.fmt;
        Statement c = canonicalize(x);
        CHECK(canonicalize(c) == c);
        CHECK(expected_value(c) == expected_value(x));
        Statement more = x;
        ++more.s;
        CHECK(expected_value(more) >= expected_value(x));
        Abundancy ab = abundancy(x);
        BigInt d = scheme_degree(x), N = ambient_dim(f);
        CHECK((ab == Abundancy::Equi) == (d <= N && d >= N));
        CHECK(is_sub(ab) == (d <= N));
        CHECK(is_super(ab) == (d >= N));
        if (f.a[0] >= 2) {
            HoraceParams hp;
            try {
                hp = horace_params(x);
            } catch (const NegativeDividend&) {
                continue;
            }
            CHECK(hp.nR + hp.nT == N);
            CHECK(BigInt(x.s) * (1 + f.sum_n()) - hp.nR == BigInt(hp.sPrime) * f.sum_n() + hp.epsilon);
            CHECK(hp.epsilon >= 0);
            CHECK(hp.epsilon < f.sum_n());
        }
    }
}

TEST_CASE("S statements are monotone in t and v") {
    Statement x = st("S(2,1;1,3;2;1;1)");
    Statement y = x;
    ++y.t;
    CHECK(expected_value(y) >= expected_value(x));
    y = x;
    ++y.v;
    CHECK(expected_value(y) >= expected_value(x));
}
