#include "gcv/parse.hpp"

#include <cctype>

namespace gcv {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : s_(text), vars_(vars), n_(static_cast<int>(vars.size())) {}

    MPoly run() {
        MPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    // expr := term (('+'|'-') term)*
    MPoly expr() {
        MPoly acc = term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    // term := factor ('*' factor)*
    MPoly term() {
        MPoly acc = unary();
        while (eat('*')) acc = acc * unary();
        return acc;
    }

    MPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    // power := atom ('^' uint)?
    MPoly power() {
        MPoly base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            unsigned long e = read_uint();
            if (e > 1u << 20) throw ParseError("exponent too large", at);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MPoly::constant(n_, Int(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            for (int i = 0; i < n_; ++i)
                if (vars_[i] == name) return MPoly::variable(n_, i);
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError("expected a number, variable, or '('", pos_);
    }

    unsigned long read_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected a nonnegative integer exponent", pos_);
        unsigned long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
            if (v > 10'000'000ul) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return v;
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    int n_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names) {
    return Parser(text, var_names).run();
}

} // namespace gcv
