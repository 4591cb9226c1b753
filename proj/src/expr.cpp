#include "exhaustion/expr.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <utility>

namespace exhaustion {

namespace {

enum class Func { sin, cos, tan, exp, ln, sqrt, abs };
enum class NamedConst { pi, e };

constexpr std::array<std::pair<std::string_view, Func>, 7> kFuncs{{
    {"sin", Func::sin},
    {"cos", Func::cos},
    {"tan", Func::tan},
    {"exp", Func::exp},
    {"ln", Func::ln},
    {"sqrt", Func::sqrt},
    {"abs", Func::abs},
}};

}  // namespace

struct ExprNode {
    enum class Kind { number, constant, variable, negate, binary, call };

    Kind kind;
    double number = 0.0;
    NamedConst cname = NamedConst::pi;
    char op = 0;
    Func fn = Func::sin;
    ExprPtr lhs;  // negate/call operand lives here
    ExprPtr rhs;
};

namespace {

ExprPtr make_number(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::number;
    n->number = v;
    return n;
}

ExprPtr make_constant(NamedConst c) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::constant;
    n->cname = c;
    return n;
}

ExprPtr make_variable() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::variable;
    return n;
}

ExprPtr make_negate(ExprPtr operand) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::negate;
    n->lhs = std::move(operand);
    return n;
}

ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::binary;
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

ExprPtr make_call(Func fn, ExprPtr arg) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::call;
    n->fn = fn;
    n->lhs = std::move(arg);
    return n;
}

struct Token {
    enum class Type { number, identifier, op, lparen, rparen, end };
    Type type = Type::end;
    double number = 0.0;
    std::string_view text;
    char op = 0;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        Token tok;
        tok.offset = pos_;
        if (pos_ >= text_.size()) {
            tok.type = Token::Type::end;
            return tok;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            // strtod needs a terminated buffer; copy the tail once.
            const std::string tail(text_.substr(pos_));
            char* endp = nullptr;
            tok.number = std::strtod(tail.c_str(), &endp);
            const std::size_t used = static_cast<std::size_t>(endp - tail.c_str());
            if (used == 0) throw ParseError("malformed number", pos_);
            tok.type = Token::Type::number;
            pos_ += used;
            return tok;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                    text_[end] == '_')) {
                ++end;
            }
            tok.type = Token::Type::identifier;
            tok.text = text_.substr(pos_, end - pos_);
            pos_ = end;
            return tok;
        }
        switch (c) {
            case '+': case '-': case '*': case '/': case '^':
                tok.type = Token::Type::op;
                tok.op = c;
                ++pos_;
                return tok;
            case '(':
                tok.type = Token::Type::lparen;
                ++pos_;
                return tok;
            case ')':
                tok.type = Token::Type::rparen;
                ++pos_;
                return tok;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    ExprPtr parse() {
        if (current_.type == Token::Type::end) {
            throw ParseError("empty expression", 0);
        }
        ExprPtr root = parse_sum();
        if (current_.type != Token::Type::end) {
            throw ParseError("unexpected trailing input", current_.offset);
        }
        return root;
    }

private:
    void advance() { current_ = lexer_.next(); }

    bool at_op(char op) const {
        return current_.type == Token::Type::op && current_.op == op;
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_product();
        while (at_op('+') || at_op('-')) {
            const char op = current_.op;
            advance();
            lhs = make_binary(op, std::move(lhs), parse_product());
        }
        return lhs;
    }

    ExprPtr parse_product() {
        ExprPtr lhs = parse_unary();
        while (at_op('*') || at_op('/')) {
            const char op = current_.op;
            advance();
            lhs = make_binary(op, std::move(lhs), parse_unary());
        }
        return lhs;
    }

    // Unary minus binds looser than ^, so -2^2 is -(2^2).
    ExprPtr parse_unary() {
        if (at_op('-')) {
            advance();
            return make_negate(parse_unary());
        }
        if (at_op('+')) {
            advance();
            return parse_unary();
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (at_op('^')) {
            advance();
            // Right-associative; the exponent may itself carry a sign.
            return make_binary('^', std::move(base), parse_unary());
        }
        return base;
    }

    ExprPtr parse_atom() {
        switch (current_.type) {
            case Token::Type::number: {
                const double v = current_.number;
                advance();
                return make_number(v);
            }
            case Token::Type::identifier: {
                const std::string_view name = current_.text;
                const std::size_t offset = current_.offset;
                advance();
                if (name == "x") return make_variable();
                if (name == "pi") return make_constant(NamedConst::pi);
                if (name == "e") return make_constant(NamedConst::e);
                for (const auto& [fname, fid] : kFuncs) {
                    if (name == fname) {
                        expect_lparen();
                        ExprPtr arg = parse_sum();
                        expect_rparen();
                        return make_call(fid, std::move(arg));
                    }
                }
                throw ParseError("unknown identifier '" + std::string(name) + "'",
                                 offset);
            }
            case Token::Type::lparen: {
                advance();
                ExprPtr inner = parse_sum();
                expect_rparen();
                return inner;
            }
            case Token::Type::end:
                throw ParseError("unexpected end of input", current_.offset);
            default:
                throw ParseError("unexpected token", current_.offset);
        }
    }

    void expect_lparen() {
        if (current_.type != Token::Type::lparen) {
            throw ParseError("expected '('", current_.offset);
        }
        advance();
    }

    void expect_rparen() {
        if (current_.type != Token::Type::rparen) {
            throw ParseError("expected ')'", current_.offset);
        }
        advance();
    }

    Lexer lexer_;
    Token current_;
};

double eval_node(const ExprNode& n, double x) {
    switch (n.kind) {
        case ExprNode::Kind::number:
            return n.number;
        case ExprNode::Kind::constant:
            return n.cname == NamedConst::pi ? std::acos(-1.0) : std::exp(1.0);
        case ExprNode::Kind::variable:
            return x;
        case ExprNode::Kind::negate:
            return -eval_node(*n.lhs, x);
        case ExprNode::Kind::binary: {
            const double a = eval_node(*n.lhs, x);
            const double b = eval_node(*n.rhs, x);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': return std::pow(a, b);
            }
            return std::numeric_limits<double>::quiet_NaN();
        }
        case ExprNode::Kind::call: {
            const double a = eval_node(*n.lhs, x);
            switch (n.fn) {
                case Func::sin: return std::sin(a);
                case Func::cos: return std::cos(a);
                case Func::tan: return std::tan(a);
                case Func::exp: return std::exp(a);
                case Func::ln: return std::log(a);
                case Func::sqrt: return std::sqrt(a);
                case Func::abs: return std::fabs(a);
            }
            return std::numeric_limits<double>::quiet_NaN();
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

// Binding strength for the printer; higher binds tighter.
int precedence(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::binary:
            if (n.op == '+' || n.op == '-') return 1;
            if (n.op == '*' || n.op == '/') return 2;
            return 4;  // ^
        case ExprNode::Kind::negate:
            return 3;
        default:
            return 5;
    }
}

void print_node(const ExprNode& n, std::string& out);

void print_child(const ExprNode& child, int min_prec, std::string& out) {
    if (precedence(child) < min_prec) {
        out += '(';
        print_node(child, out);
        out += ')';
    } else {
        print_node(child, out);
    }
}

void print_node(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case ExprNode::Kind::number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.number);
            out += buf;
            return;
        }
        case ExprNode::Kind::constant:
            out += (n.cname == NamedConst::pi) ? "pi" : "e";
            return;
        case ExprNode::Kind::variable:
            out += 'x';
            return;
        case ExprNode::Kind::negate:
            out += '-';
            print_child(*n.lhs, 3, out);
            return;
        case ExprNode::Kind::binary: {
            const int prec = precedence(n);
            if (n.op == '^') {
                // Left side must be atomic ((a^b)^c, (-a)^b need parens);
                // the right side accepts unary and chained powers.
                print_child(*n.lhs, 5, out);
                out += '^';
                print_child(*n.rhs, 3, out);
                return;
            }
            print_child(*n.lhs, prec, out);
            out += n.op;
            // Left-associative: an equal-precedence right child needs
            // parens to survive a round trip.
            print_child(*n.rhs, prec + 1, out);
            return;
        }
        case ExprNode::Kind::call: {
            switch (n.fn) {
                case Func::sin: out += "sin"; break;
                case Func::cos: out += "cos"; break;
                case Func::tan: out += "tan"; break;
                case Func::exp: out += "exp"; break;
                case Func::ln: out += "ln"; break;
                case Func::sqrt: out += "sqrt"; break;
                case Func::abs: out += "abs"; break;
            }
            out += '(';
            print_node(*n.lhs, out);
            out += ')';
            return;
        }
    }
}

bool nodes_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprNode::Kind::number:
            return a.number == b.number;
        case ExprNode::Kind::constant:
            return a.cname == b.cname;
        case ExprNode::Kind::variable:
            return true;
        case ExprNode::Kind::negate:
            return nodes_equal(*a.lhs, *b.lhs);
        case ExprNode::Kind::binary:
            return a.op == b.op && nodes_equal(*a.lhs, *b.lhs) &&
                   nodes_equal(*a.rhs, *b.rhs);
        case ExprNode::Kind::call:
            return a.fn == b.fn && nodes_equal(*a.lhs, *b.lhs);
    }
    return false;
}

}  // namespace

double ExprAst::eval(double x) const { return eval_node(*root, x); }

std::string ExprAst::to_string() const {
    std::string out;
    print_node(*root, out);
    return out;
}

bool ExprAst::structurally_equal(const ExprAst& other) const {
    return nodes_equal(*root, *other.root);
}

ExprAst parse_expression(std::string_view text) {
    Parser parser(text);
    return ExprAst{parser.parse()};
}

}  // namespace exhaustion
