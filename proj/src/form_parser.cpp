// Recursive-descent parser for polynomial expressions in X, Y, Z.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := primary ('^' integer)?
//   primary := integer | X | Y | Z | '(' expr ')' | '-' factor
//
// Intermediate values need not be homogeneous; only the final result is
// checked. Division is allowed by nonzero constants only.

#include <cctype>
#include <map>

#include "plint/forms.hpp"

namespace plint {
namespace {

using Poly = std::map<Exponent, Rat>;

void add_into(Poly& acc, const Poly& p, int sign) {
    for (const auto& [e, c] : p) {
        Rat& slot = acc[e];
        if (sign > 0) {
            slot += c;
        } else {
            slot -= c;
        }
        if (slot == 0) acc.erase(e);
    }
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            Rat& slot = r[e];
            slot += ca * cb;
            if (slot == 0) r.erase(e);
        }
    return r;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::ParseError, "form \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Int(s_.substr(start, pos_ - start));
    }

    Poly expr() {
        Poly acc;
        int sign = 1;
        if (accept('-')) {
            sign = -1;
        } else {
            accept('+');
        }
        add_into(acc, term(), sign);
        for (;;) {
            if (accept('+')) {
                add_into(acc, term(), 1);
            } else if (accept('-')) {
                add_into(acc, term(), -1);
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = multiply(acc, factor());
            } else if (accept('/')) {
                Poly d = factor();
                if (d.size() != 1 || d.begin()->first != Exponent{0, 0, 0})
                    fail("division is only allowed by nonzero constants");
                Rat c = d.begin()->second;
                for (auto& [e, v] : acc) v /= c;
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = primary();
        if (accept('^')) {
            Int k = integer();
            if (k > 100000) fail("exponent too large");
            Poly r{{Exponent{0, 0, 0}, Rat(1)}};
            for (unsigned long i = 0; i < k.get_ui(); ++i) r = multiply(r, base);
            return r;
        }
        return base;
    }

    Poly primary() {
        skip_space();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            Poly p = factor();
            for (auto& [e, v] : p) v = -v;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rat v(integer());
            if (v == 0) return {};
            return {{Exponent{0, 0, 0}, v}};
        }
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (u == 'X' || u == 'Y' || u == 'Z') {
            ++pos_;
            Exponent e{0, 0, 0};
            e[static_cast<std::size_t>(u - 'X')] = 1;
            return {{e, Rat(1)}};
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(const std::string& text, int zero_degree) {
    Poly p = Parser(text).parse();
    if (p.empty()) return Form::zero(zero_degree);
    int degree = -1;
    Form::TermMap terms;
    for (const auto& [e, c] : p) {
        int d = e[0] + e[1] + e[2];
        if (degree < 0) degree = d;
        if (d != degree)
            throw Error(ErrorKind::DegreeMismatch, "expression \"" + text + "\" is not homogeneous");
        terms.emplace(e, c);
    }
    return Form::from_terms(degree, terms);
}

}  // namespace plint
