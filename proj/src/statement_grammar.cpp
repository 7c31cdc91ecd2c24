#include <cctype>
#include <charconv>
#include <sstream>

#include "secant/combinatorics.hpp"

namespace secant {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Statement run() {
        skip();
        if (at_end()) fail("empty statement");
        char head = s_[i_];
        if (head != 'T' && head != 'S') fail("expected 'T' or 'S'");
        ++i_;
        expect('(');
        Statement st;
        st.spelled_s = head == 'S';
        std::vector<std::int64_t> n = list();
        expect(';');
        std::vector<std::int64_t> a = list();
        if (n.size() != a.size()) fail("n and a have different lengths");
        expect(';');
        st.s = number();
        if (head == 'S') {
            expect(';');
            st.t = number();
            expect(';');
            st.v = number();
        }
        expect(')');
        skip();
        if (!at_end()) fail("trailing characters");
        for (auto x : n) st.fmt.n.push_back(narrow(x));
        for (auto x : a) st.fmt.a.push_back(narrow(x));
        return st;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    bool at_end() const { return i_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void expect(char c) {
        skip();
        if (at_end() || s_[i_] != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    std::int64_t number() {
        skip();
        std::int64_t x = 0;
        auto [p, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), x);
        if (ec == std::errc::result_out_of_range) fail("number out of range");
        if (ec != std::errc() || x < 0) fail("expected non-negative integer");
        i_ = p - s_.data();
        return x;
    }

    std::vector<std::int64_t> list() {
        std::vector<std::int64_t> out;
        skip();
        if (!at_end() && s_[i_] == ';') return out;
        out.push_back(number());
        for (;;) {
            skip();
            if (at_end() || s_[i_] != ',') break;
            ++i_;
            out.push_back(number());
        }
        return out;
    }

    int narrow(std::int64_t x) const {
        if (x > 1000000) throw ParseError("factor entry too large", i_);
        return static_cast<int>(x);
    }
};

void join(std::ostringstream& os, const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
}

}  // namespace

Statement parse_statement(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Format& fmt) {
    std::ostringstream os;
    os << '(';
    join(os, fmt.n);
    os << ';';
    join(os, fmt.a);
    os << ')';
    return os.str();
}

std::string to_string(const Statement& st) {
    std::ostringstream os;
    bool s_form = st.spelled_s || !st.is_t();
    os << (s_form ? 'S' : 'T') << '(';
    join(os, st.fmt.n);
    os << ';';
    join(os, st.fmt.a);
    os << ';' << st.s;
    if (s_form) os << ';' << st.t << ';' << st.v;
    os << ')';
    return os.str();
}

}  // namespace secant
