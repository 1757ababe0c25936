#include "calogero/expr.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "calogero/errors.hpp"

namespace calogero {

bool ExprAst::operator==(const ExprAst& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::sum:
            return signs == o.signs && children == o.children;
        case Kind::product:
            return children == o.children;
        case Kind::generator:
            return alpha == o.alpha && index == o.index;
        case Kind::group_word:
            return word == o.word;
        case Kind::scalar:
            return value == o.value;
        case Kind::coupling:
            return coupling_indexed == o.coupling_indexed &&
                   (!coupling_indexed || index == o.index);
    }
    return false;
}

namespace {

struct Token {
    enum class Kind {
        plus,
        minus,
        star,
        lparen,
        rparen,
        lbracket,
        rbracket,
        number,    // value
        gen,       // alpha, index
        simple,    // index
        word_intro,  // 'w'
        coupling,  // index, indexed
        end,
    };
    Kind kind = Kind::end;
    std::size_t begin = 0;
    std::size_t end = 0;
    Rational value = 0;
    unsigned alpha = 0;
    unsigned index = 0;
    bool indexed = false;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Token tok_;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_ = Token{};
        tok_.begin = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::end;
            tok_.end = pos_;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': single(Token::Kind::plus); return;
            case '-': single(Token::Kind::minus); return;
            case '*': single(Token::Kind::star); return;
            case '(': single(Token::Kind::lparen); return;
            case ')': single(Token::Kind::rparen); return;
            case '[': single(Token::Kind::lbracket); return;
            case ']': single(Token::Kind::rbracket); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            identifier();
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    void single(Token::Kind k) {
        tok_.kind = k;
        ++pos_;
        tok_.end = pos_;
    }

    std::size_t scan_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return start;
    }

    void number() {
        std::size_t start = scan_digits();
        std::string lexeme = text_.substr(start, pos_ - start);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("expected digits after '/'", pos_);
            std::size_t dstart = scan_digits();
            lexeme += "/" + text_.substr(dstart, pos_ - dstart);
        }
        tok_.kind = Token::Kind::number;
        tok_.value = parse_rational(lexeme);
        tok_.end = pos_;
    }

    unsigned index_after_underscore(std::size_t word_start) {
        // pos_ sits on '_'.
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected an index after '_'", pos_);
        std::size_t start = scan_digits();
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 9)
            throw SyntaxError("index too large", word_start);
        return static_cast<unsigned>(std::stoul(digits));
    }

    void identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            // Stop before '_' so the index scan controls its own diagnostics.
            if (text_[pos_] == '_') break;
            ++pos_;
        }
        std::string name = text_.substr(start, pos_ - start);
        bool has_index = pos_ < text_.size() && text_[pos_] == '_';
        if (name == "a0" || name == "a1") {
            if (!has_index) throw SyntaxError("expected '_' after '" + name + "'", pos_);
            tok_.kind = Token::Kind::gen;
            tok_.alpha = name == "a0" ? 0 : 1;
            tok_.index = index_after_underscore(start);
        } else if (name == "s") {
            if (!has_index) throw SyntaxError("expected '_' after 's'", pos_);
            tok_.kind = Token::Kind::simple;
            tok_.index = index_after_underscore(start);
        } else if (name == "nu") {
            tok_.kind = Token::Kind::coupling;
            if (has_index) {
                tok_.indexed = true;
                tok_.index = index_after_underscore(start);
            }
        } else if (name == "w" && !has_index) {
            tok_.kind = Token::Kind::word_intro;
        } else {
            throw SyntaxError("unknown symbol '" + name + "'", start);
        }
        tok_.end = pos_;
    }
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprAst parse() {
        ExprAst out = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw SyntaxError("unexpected trailing input", t.begin);
        return out;
    }

private:
    Lexer lex_;

    bool at_sign() const {
        return lex_.peek().kind == Token::Kind::plus || lex_.peek().kind == Token::Kind::minus;
    }

    ExprAst expr() {
        std::size_t begin = lex_.peek().begin;
        std::vector<ExprAst> children;
        std::vector<int> signs;
        int sign = 1;
        if (at_sign()) sign = lex_.take().kind == Token::Kind::minus ? -1 : 1;
        children.push_back(term());
        signs.push_back(sign);
        while (at_sign()) {
            signs.push_back(lex_.take().kind == Token::Kind::minus ? -1 : 1);
            children.push_back(term());
        }
        // A single unsigned term is just that term; '+x' normalizes to 'x'.
        if (children.size() == 1 && signs[0] > 0) return std::move(children.front());
        ExprAst out;
        out.kind = ExprAst::Kind::sum;
        out.begin = begin;
        out.end = children.back().end;
        out.children = std::move(children);
        out.signs = std::move(signs);
        return out;
    }

    ExprAst term() {
        std::vector<ExprAst> children;
        children.push_back(factor());
        while (lex_.peek().kind == Token::Kind::star) {
            lex_.take();
            children.push_back(factor());
        }
        if (children.size() == 1) return std::move(children.front());
        ExprAst out;
        out.kind = ExprAst::Kind::product;
        out.begin = children.front().begin;
        out.end = children.back().end;
        out.children = std::move(children);
        return out;
    }

    ExprAst factor() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::lparen: {
                lex_.take();
                ExprAst inner = expr();
                expect(Token::Kind::rparen, "expected ')'");
                return inner;
            }
            case Token::Kind::number: {
                Token n = lex_.take();
                ExprAst out;
                out.kind = ExprAst::Kind::scalar;
                out.value = n.value;
                out.begin = n.begin;
                out.end = n.end;
                return out;
            }
            case Token::Kind::gen: {
                Token g = lex_.take();
                ExprAst out;
                out.kind = ExprAst::Kind::generator;
                out.alpha = g.alpha;
                out.index = g.index;
                out.begin = g.begin;
                out.end = g.end;
                return out;
            }
            case Token::Kind::simple: {
                Token s = lex_.take();
                ExprAst out;
                out.kind = ExprAst::Kind::group_word;
                out.word = {s.index};
                out.begin = s.begin;
                out.end = s.end;
                return out;
            }
            case Token::Kind::coupling: {
                Token c = lex_.take();
                ExprAst out;
                out.kind = ExprAst::Kind::coupling;
                out.coupling_indexed = c.indexed;
                out.index = c.index;
                out.begin = c.begin;
                out.end = c.end;
                return out;
            }
            case Token::Kind::word_intro: {
                Token w = lex_.take();
                expect(Token::Kind::lbracket, "expected '[' after 'w'");
                ExprAst out;
                out.kind = ExprAst::Kind::group_word;
                out.begin = w.begin;
                while (lex_.peek().kind == Token::Kind::simple)
                    out.word.push_back(lex_.take().index);
                if (out.word.empty())
                    throw SyntaxError("expected at least one simple reflection in 'w[...]'",
                                      lex_.peek().begin);
                Token close = expect(Token::Kind::rbracket, "expected ']'");
                out.end = close.end;
                return out;
            }
            default:
                throw SyntaxError("expected an atom or '('", t.begin);
        }
    }

    Token expect(Token::Kind k, const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != k) throw SyntaxError(what, t.begin);
        return lex_.take();
    }
};

// Children of a sum need parentheses when they are sums themselves; children
// of a product also when they are products, so the reparse keeps the shape.
std::string print_child(const ExprAst& child, bool parent_is_product) {
    bool wrap = child.kind == ExprAst::Kind::sum ||
                (parent_is_product && child.kind == ExprAst::Kind::product);
    std::string s = pretty_print(child);
    return wrap ? "(" + s + ")" : s;
}

}  // namespace

ExprAst parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string pretty_print(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::sum: {
            std::string out;
            for (std::size_t i = 0; i < ast.children.size(); ++i) {
                if (i == 0)
                    out += ast.signs[i] < 0 ? "-" : "";
                else
                    out += ast.signs[i] < 0 ? " - " : " + ";
                out += print_child(ast.children[i], false);
            }
            return out;
        }
        case ExprAst::Kind::product: {
            std::string out;
            for (std::size_t i = 0; i < ast.children.size(); ++i) {
                if (i > 0) out += "*";
                out += print_child(ast.children[i], true);
            }
            return out;
        }
        case ExprAst::Kind::generator:
            return (ast.alpha == 0 ? "a0_" : "a1_") + std::to_string(ast.index);
        case ExprAst::Kind::group_word: {
            if (ast.word.size() == 1) return "s_" + std::to_string(ast.word[0]);
            std::string out = "w[";
            for (std::size_t i = 0; i < ast.word.size(); ++i) {
                if (i > 0) out += " ";
                out += "s_" + std::to_string(ast.word[i]);
            }
            return out + "]";
        }
        case ExprAst::Kind::scalar:
            return to_string(ast.value);
        case ExprAst::Kind::coupling:
            return ast.coupling_indexed ? "nu_" + std::to_string(ast.index) : "nu";
    }
    return "";
}

AlgebraElement to_element(const ExprAst& ast, const AlgebraContext& ctx) {
    switch (ast.kind) {
        case ExprAst::Kind::sum: {
            AlgebraElement out = ctx.zero();
            for (std::size_t i = 0; i < ast.children.size(); ++i) {
                AlgebraElement c = to_element(ast.children[i], ctx);
                if (ast.signs[i] < 0)
                    out -= c;
                else
                    out += c;
            }
            return out;
        }
        case ExprAst::Kind::product: {
            AlgebraElement out = to_element(ast.children.front(), ctx);
            for (std::size_t i = 1; i < ast.children.size(); ++i)
                out = multiply(out, to_element(ast.children[i], ctx));
            return out;
        }
        case ExprAst::Kind::generator: {
            if (ast.index < 1 || ast.index > ctx.dim())
                throw UnknownGenerator("generator index out of range: a" +
                                       std::to_string(ast.alpha) + "_" +
                                       std::to_string(ast.index));
            return ctx.generator(ast.alpha, ast.index - 1);
        }
        case ExprAst::Kind::group_word: {
            const GroupTable& gt = ctx.group();
            const RootSystem& rs = gt.root_system();
            unsigned id = gt.identity_id();
            for (unsigned k : ast.word) {
                if (k < 1 || k > rs.simple_roots.size())
                    throw UnknownGenerator("simple reflection index out of range: s_" +
                                           std::to_string(k));
                id = gt.product(id, gt.reflection_element(rs.simple_roots[k - 1]));
            }
            return ctx.group_element(id);
        }
        case ExprAst::Kind::scalar:
            return ctx.scalar(NuPoly(Cyclotomic(ast.value), ctx.nvars()));
        case ExprAst::Kind::coupling: {
            unsigned k = ast.coupling_indexed ? ast.index : 1;
            if (k < 1 || k > ctx.nvars())
                throw UnknownGenerator("coupling index out of range: " +
                                       (ast.coupling_indexed ? "nu_" + std::to_string(ast.index)
                                                             : std::string("nu")));
            return ctx.scalar(NuPoly::variable(k - 1, ctx.nvars()));
        }
    }
    return ctx.zero();
}

}  // namespace calogero
