#include <cctype>
#include <limits>

#include "weightprop/errors.hpp"
#include "weightprop/polynomial.hpp"

namespace weightprop {

namespace {

// Recursive descent:
//   expr  := term (('+'|'-') term)*
//   term  := unary ('*' unary)*
//   unary := ('-'|'+') unary | power
//   power := atom ('^' uint)?
//   atom  := uint ('/' uint)? | ident | '(' expr ')'
class Parser {
public:
    Parser(const RingSpec& ring, const std::string& text) : ring_(ring), s_(text) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return p;
    }

private:
    const RingSpec& ring_;
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    bool at_digit() const { return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])); }

    std::string digits() {
        std::size_t b = i_;
        while (at_digit()) ++i_;
        return s_.substr(b, i_ - b);
    }

    Polynomial expr() {
        Polynomial p = term();
        while (true) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = unary();
        while (eat('*')) p = p * unary();
        return p;
    }

    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (!eat('^')) return base;
        skip();
        if (i_ < s_.size() && s_[i_] == '-') fail("negative exponent");
        if (!at_digit()) fail("expected exponent");
        std::size_t start = i_;
        std::string ds = digits();
        if (ds.size() > 9 || std::stoul(ds) > static_cast<unsigned long>(std::numeric_limits<std::int32_t>::max())) {
            i_ = start;
            fail("exponent too large");
        }
        unsigned long e = std::stoul(ds);
        if (base.size() == 1) {
            const auto& [m, c] = *base.terms().begin();
            std::vector<std::uint32_t> ex(m.exponents());
            for (auto& x : ex) x *= static_cast<std::uint32_t>(e);
            Rational ce;
            mpz_pow_ui(ce.get_num_mpz_t(), c.get_num_mpz_t(), e);
            mpz_pow_ui(ce.get_den_mpz_t(), c.get_den_mpz_t(), e);
            return Polynomial::term(Monomial(std::move(ex)), ce);
        }
        Polynomial r = Polynomial::constant(ring_.nvars(), 1);
        for (unsigned long k = 0; k < e; ++k) r = r * base;
        return r;
    }

    Polynomial atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                if (!at_digit()) fail("expected denominator");
                std::size_t dpos = i_;
                std::string den = digits();
                if (mpz_class(den) == 0) {
                    i_ = dpos;
                    fail("zero denominator");
                }
                num += "/" + den;
            }
            Rational q(num);
            q.canonicalize();
            return Polynomial::constant(ring_.nvars(), q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t b = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name = s_.substr(b, i_ - b);
            int idx = ring_.index_of(name);
            if (idx < 0) {
                i_ = b;
                fail("unknown identifier '" + name + "'");
            }
            return Polynomial::variable(ring_.nvars(), static_cast<std::size_t>(idx));
        }
        if (c == '(') {
            ++i_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const RingSpec& ring, const std::string& text) {
    return Parser(ring, text).run();
}

}  // namespace weightprop
