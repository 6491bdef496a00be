#include <cctype>
#include <charconv>
#include <limits>
#include <string>
#include <vector>

#include "muig/cliquewidth.hpp"
#include "muig/error.hpp"

namespace muig {

namespace {

struct Token {
    enum Kind { Open, Close, Atom } kind;
    std::string_view text;
    std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(' || c == ')') {
            out.push_back({c == '(' ? Token::Open : Token::Close, text.substr(i, 1), line});
            ++i;
        } else {
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' &&
                   text[j] != ')')
                ++j;
            out.push_back({Token::Atom, text.substr(i, j - i), line});
            i = j;
        }
    }
    return out;
}

std::uint32_t parse_number(const Token& t) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v > std::numeric_limits<std::uint32_t>::max())
        throw ParseError("expected a nonnegative integer, got '" + std::string(t.text) + "'", t.line);
    return static_cast<std::uint32_t>(v);
}

} // namespace

std::string to_sexpr(const CwdExpression& expr) {
    if (expr.empty()) throw ValidationError("cannot serialize an empty expression");
    const auto& nodes = expr.nodes();
    std::string out;
    // Work stack of either a node to print or a literal suffix.
    struct Item {
        std::size_t node;
        const char* literal;
    };
    std::vector<Item> stack{{expr.root(), nullptr}};
    while (!stack.empty()) {
        const Item item = stack.back();
        stack.pop_back();
        if (item.literal) {
            out += item.literal;
            continue;
        }
        const ExprNode& n = nodes[item.node];
        switch (n.kind) {
        case ExprKind::Vertex:
            out += "(v " + std::to_string(n.a) + " " + std::to_string(n.vertex) + ")";
            break;
        case ExprKind::Union:
            out += "(union ";
            stack.push_back({0, ")"});
            stack.push_back({n.right, nullptr});
            stack.push_back({0, " "});
            stack.push_back({n.left, nullptr});
            break;
        case ExprKind::Relabel:
        case ExprKind::Connect:
            out += n.kind == ExprKind::Relabel ? "(relabel " : "(connect ";
            out += std::to_string(n.a) + " " + std::to_string(n.b) + " ";
            stack.push_back({0, ")"});
            stack.push_back({n.left, nullptr});
            break;
        }
    }
    out += "\n";
    return out;
}

CwdExpression parse_sexpr(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    struct Frame {
        ExprKind kind;
        std::size_t line;
        std::vector<std::uint32_t> numbers;
        std::vector<std::size_t> children;
    };
    CwdExpression expr;
    std::vector<Frame> stack;
    bool have_root = false;

    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const Token& tok = tokens[t];
        if (have_root) throw ParseError("trailing input after the expression", tok.line);
        if (tok.kind == Token::Open) {
            if (t + 1 >= tokens.size() || tokens[t + 1].kind != Token::Atom)
                throw ParseError("expected an operator after '('", tok.line);
            const std::string_view op = tokens[++t].text;
            ExprKind kind;
            if (op == "v") kind = ExprKind::Vertex;
            else if (op == "union") kind = ExprKind::Union;
            else if (op == "relabel") kind = ExprKind::Relabel;
            else if (op == "connect") kind = ExprKind::Connect;
            else throw ParseError("unknown operator '" + std::string(op) + "'", tok.line);
            stack.push_back({kind, tok.line, {}, {}});
        } else if (tok.kind == Token::Atom) {
            if (stack.empty()) throw ParseError("number outside of an expression", tok.line);
            Frame& f = stack.back();
            if (!f.children.empty() || f.kind == ExprKind::Union)
                throw ParseError("unexpected number '" + std::string(tok.text) + "'", tok.line);
            f.numbers.push_back(parse_number(tok));
        } else {
            if (stack.empty()) throw ParseError("unbalanced ')'", tok.line);
            Frame f = std::move(stack.back());
            stack.pop_back();
            std::size_t node = 0;
            switch (f.kind) {
            case ExprKind::Vertex:
                if (f.numbers.size() != 2 || !f.children.empty())
                    throw ParseError("(v <label> <id>) takes two numbers", f.line);
                node = expr.vertex(f.numbers[0], f.numbers[1]);
                break;
            case ExprKind::Union:
                if (f.children.size() != 2) throw ParseError("(union e e) takes two expressions", f.line);
                node = expr.unite(f.children[0], f.children[1]);
                break;
            case ExprKind::Relabel:
            case ExprKind::Connect:
                if (f.numbers.size() != 2 || f.children.size() != 1)
                    throw ParseError("relabel/connect take two labels and one expression", f.line);
                node = f.kind == ExprKind::Relabel ? expr.relabel(f.numbers[0], f.numbers[1], f.children[0])
                                                   : expr.connect(f.numbers[0], f.numbers[1], f.children[0]);
                break;
            }
            if (stack.empty()) {
                expr.set_root(node);
                have_root = true;
            } else {
                stack.back().children.push_back(node);
            }
        }
    }
    if (!stack.empty()) throw ParseError("unterminated expression", stack.back().line);
    if (!have_root) throw ParseError("no expression in input");
    return expr;
}

} // namespace muig
