#include "dquad/parser.hpp"

#include "dquad/errors.hpp"

#include <algorithm>
#include <cctype>

namespace dquad {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({k, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> names, const Domain& domain, MonomialOrder order)
        : tokens_(tokenize(text)), names_(names), domain_(domain), order_(order),
          nvars_(static_cast<int>(names.size())) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (peek().kind != Tok::End) unexpected();
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    [[noreturn]] void unexpected() const {
        const Token& t = peek();
        if (t.kind == Tok::End) throw ParseError("unexpected end of input", t.pos);
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Polynomial rhs = term();
            if (minus) acc -= rhs;
            else acc += rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token& op = next();
            std::size_t at = peek().pos;
            Polynomial rhs = unary();
            if (op.kind == Tok::Star) {
                acc = acc * rhs;
            } else {
                if (!rhs.is_constant() || rhs.is_zero())
                    throw ParseError("division is only allowed by a nonzero constant", at);
                acc = acc.scaled(rhs.lc().inverse());
            }
        }
        return acc;
    }

    Polynomial unary() {
        if (peek().kind == Tok::Minus) {
            next();
            return -unary();
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        while (peek().kind == Tok::Caret) {
            next();
            const Token& e = peek();
            if (e.kind != Tok::Number) throw ParseError("exponent must be a non-negative integer literal", e.pos);
            next();
            if (e.text.size() > 3 || std::stoi(e.text) > 255) throw ParseError("exponent too large", e.pos);
            base = base.pow(static_cast<unsigned>(std::stoi(e.text)));
        }
        Tok k = peek().kind;
        if (k == Tok::Number || k == Tok::Ident || k == Tok::LParen)
            throw ParseError("implicit multiplication is not allowed; use '*'", peek().pos);
        return base;
    }

    Polynomial primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                next();
                return Polynomial::constant(nvars_, domain_.parse(t.text), order_);
            }
            case Tok::Ident: {
                next();
                return Polynomial::variable(nvars_, lookup(t), domain_, order_);
            }
            case Tok::LParen: {
                next();
                Polynomial inner = expr();
                if (peek().kind != Tok::RParen) {
                    if (peek().kind == Tok::End) throw ParseError("missing ')'", peek().pos);
                    unexpected();
                }
                next();
                return inner;
            }
            default: unexpected();
        }
    }

    int lookup(const Token& t) const {
        auto it = std::find(names_.begin(), names_.end(), t.text);
        if (it == names_.end()) {
            std::string stripped;
            for (char c : t.text)
                if (c != '_') stripped += c;
            it = std::find(names_.begin(), names_.end(), stripped);
        }
        if (it == names_.end()) throw UnknownVariableError(t.text, t.pos);
        return static_cast<int>(it - names_.begin());
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::span<const std::string> names_;
    Domain domain_;
    MonomialOrder order_;
    int nvars_;
};

}  // namespace

std::vector<std::string> default_variable_names(int nvars) {
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back(default_variable_name(i));
    return names;
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names, const Domain& domain,
                            MonomialOrder order) {
    return Parser(text, names, domain, order).parse();
}

Form parse_form(std::string_view text, int nvars, const Domain& domain, std::optional<int> degree) {
    auto names = default_variable_names(nvars);
    Polynomial p = parse_polynomial(text, names, domain);
    auto ds = p.degrees();
    if (ds.size() > 1) throw InhomogeneousError(ds[0], ds[1]);
    return Form(std::move(p), degree);
}

}  // namespace dquad
