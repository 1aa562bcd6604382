#include "jsrlab/radcal/expr.hpp"
#include "jsrlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jsrlab::radcal {

const std::vector<std::string>& atom_names() {
    static const std::vector<std::string> names = {
        "Rad", "Rcq", "Rhc", "Rhf", "Rsc", "Rbw", "Rsbw", "Rgcr", "Sa", "Sb",
    };
    return names;
}

ExprPtr make_atom(const std::string& name) {
    const auto& names = atom_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw ValidationError("unknown atom '" + name + "'");
    auto e = std::make_shared<Expr>();
    e->kind = NodeKind::Atom;
    e->atom = name;
    return e;
}

ExprPtr make_node(NodeKind kind, std::vector<ExprPtr> args) {
    std::size_t lo = 1, hi = args.size();
    switch (kind) {
    case NodeKind::Atom: throw ValidationError("make_node cannot build atoms");
    case NodeKind::Conv:
    case NodeKind::Comp: lo = hi = 2; break;
    case NodeKind::Cent:
    case NodeKind::StarClose:
    case NodeKind::CircClose: lo = hi = 1; break;
    default: lo = 1; hi = args.size() > 0 ? args.size() : 0; break;
    }
    if (args.size() < lo || args.size() != hi || args.empty())
        throw ValidationError("wrong arity for expression node");
    for (const auto& a : args)
        if (!a) throw ValidationError("null argument in expression node");
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    return e;
}

static int kind_rank(NodeKind k) { return static_cast<int>(k); }

int expr_cmp(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return 0;
    if (kind_rank(a->kind) != kind_rank(b->kind))
        return kind_rank(a->kind) < kind_rank(b->kind) ? -1 : 1;
    if (a->kind == NodeKind::Atom) return a->atom.compare(b->atom);
    std::size_t n = std::min(a->args.size(), b->args.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = expr_cmp(a->args[i], b->args[i]);
        if (c != 0) return c;
    }
    if (a->args.size() != b->args.size())
        return a->args.size() < b->args.size() ? -1 : 1;
    return 0;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return expr_cmp(a, b) == 0; }

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok {
    AtomName, Star, CompOp, JoinOp, MeetOp,
    Cent, StarClose, CircClose,
    LParen, RParen, LBrace, RBrace, Comma,
    FamH, FamB, End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos; // byte offset, 0-based
};

[[noreturn]] void fail_at(const std::string& msg, std::size_t pos) {
    throw ParseError(msg, "char " + std::to_string(pos + 1));
}

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto alnum = [&](std::size_t k) {
        return k < s.size() && std::isalnum(static_cast<unsigned char>(s[k]));
    };
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
        if (ch == '*') { out.push_back({Tok::Star, "*", i}); ++i; continue; }
        if (ch == '(') { out.push_back({Tok::LParen, "(", i}); ++i; continue; }
        if (ch == ')') { out.push_back({Tok::RParen, ")", i}); ++i; continue; }
        if (ch == '{') { out.push_back({Tok::LBrace, "{", i}); ++i; continue; }
        if (ch == '}') { out.push_back({Tok::RBrace, "}", i}); ++i; continue; }
        if (ch == ',') { out.push_back({Tok::Comma, ",", i}); ++i; continue; }
        if (ch == '^') {
            // immediate 'a' / '*' / 'o' makes a postfix; anything else is meet
            if (i + 1 < s.size() && s[i + 1] == '*') {
                out.push_back({Tok::StarClose, "^*", i}); i += 2; continue;
            }
            if (i + 1 < s.size() && s[i + 1] == 'a' && !alnum(i + 2)) {
                out.push_back({Tok::Cent, "^a", i}); i += 2; continue;
            }
            if (i + 1 < s.size() && s[i + 1] == 'o' && !alnum(i + 2)) {
                out.push_back({Tok::CircClose, "^o", i}); i += 2; continue;
            }
            out.push_back({Tok::MeetOp, "^", i}); ++i; continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = i;
            while (alnum(i)) ++i;
            std::string word = s.substr(start, i - start);
            if (word == "o") { out.push_back({Tok::CompOp, word, start}); continue; }
            if (word == "v") { out.push_back({Tok::JoinOp, word, start}); continue; }
            if (word == "H") { out.push_back({Tok::FamH, word, start}); continue; }
            if (word == "B") { out.push_back({Tok::FamB, word, start}); continue; }
            const auto& names = atom_names();
            if (std::find(names.begin(), names.end(), word) == names.end())
                fail_at("unknown name '" + word + "'", start);
            out.push_back({Tok::AtomName, word, start});
            continue;
        }
        fail_at(std::string("unexpected character '") + ch + "'", i);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

// ---------------------------------------------------------------- parser

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr run() {
        ExprPtr e = lattice();
        expect(Tok::End, "trailing input");
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token take() { return toks_[at_++]; }
    void expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail_at("expected " + what, peek().pos);
        ++at_;
    }

    // join / meet, left associative; an unbroken run of one operator collects
    // n-ary, while a parenthesized operand stays a single argument
    ExprPtr lattice() {
        ExprPtr cur = chain();
        while (peek().kind == Tok::JoinOp || peek().kind == Tok::MeetOp) {
            Tok run = peek().kind;
            NodeKind op = run == Tok::JoinOp ? NodeKind::Join : NodeKind::Meet;
            std::vector<ExprPtr> args{cur};
            while (peek().kind == run) {
                ++at_;
                args.push_back(chain());
            }
            cur = make_node(op, std::move(args));
        }
        return cur;
    }

    // convolution / superposition, left associative binary
    ExprPtr chain() {
        ExprPtr cur = postfix();
        while (peek().kind == Tok::Star || peek().kind == Tok::CompOp) {
            NodeKind op = peek().kind == Tok::Star ? NodeKind::Conv : NodeKind::Comp;
            ++at_;
            cur = make_node(op, {cur, postfix()});
        }
        return cur;
    }

    ExprPtr postfix() {
        ExprPtr cur = primary();
        for (;;) {
            switch (peek().kind) {
            case Tok::Cent: ++at_; cur = make_node(NodeKind::Cent, {cur}); break;
            case Tok::StarClose: ++at_; cur = make_node(NodeKind::StarClose, {cur}); break;
            case Tok::CircClose: ++at_; cur = make_node(NodeKind::CircClose, {cur}); break;
            default: return cur;
            }
        }
    }

    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::AtomName: return make_atom(take().text);
        case Tok::LParen: {
            ++at_;
            ExprPtr e = lattice();
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::FamH:
        case Tok::FamB: {
            NodeKind op = t.kind == Tok::FamH ? NodeKind::FamilyH : NodeKind::FamilyB;
            ++at_;
            expect(Tok::LBrace, "'{'");
            std::vector<ExprPtr> args;
            args.push_back(lattice());
            while (peek().kind == Tok::Comma) { ++at_; args.push_back(lattice()); }
            expect(Tok::RBrace, "'}'");
            return make_node(op, std::move(args));
        }
        default:
            fail_at("expected an operand", t.pos);
        }
    }
};

// ---------------------------------------------------------------- printer

int prec_of(NodeKind k) {
    switch (k) {
    case NodeKind::Join:
    case NodeKind::Meet: return 0;
    case NodeKind::Conv:
    case NodeKind::Comp: return 1;
    case NodeKind::Cent:
    case NodeKind::StarClose:
    case NodeKind::CircClose: return 2;
    default: return 3;
    }
}

void print_rec(std::ostream& os, const ExprPtr& e, int ctx_prec) {
    int p = prec_of(e->kind);
    bool paren = p <= ctx_prec && p < 3;
    if (paren) os << '(';
    switch (e->kind) {
    case NodeKind::Atom: os << e->atom; break;
    case NodeKind::Conv:
        print_rec(os, e->args[0], 1); os << " * "; print_rec(os, e->args[1], 1);
        break;
    case NodeKind::Comp:
        print_rec(os, e->args[0], 1); os << " o "; print_rec(os, e->args[1], 1);
        break;
    case NodeKind::Join:
    case NodeKind::Meet: {
        const char* sep = e->kind == NodeKind::Join ? " v " : " ^ ";
        for (std::size_t i = 0; i < e->args.size(); ++i) {
            if (i) os << sep;
            print_rec(os, e->args[i], 0);
        }
        break;
    }
    case NodeKind::Cent: print_rec(os, e->args[0], 2); os << "^a"; break;
    case NodeKind::StarClose: print_rec(os, e->args[0], 2); os << "^*"; break;
    case NodeKind::CircClose: print_rec(os, e->args[0], 2); os << "^o"; break;
    case NodeKind::FamilyH:
    case NodeKind::FamilyB: {
        os << (e->kind == NodeKind::FamilyH ? "H{" : "B{");
        for (std::size_t i = 0; i < e->args.size(); ++i) {
            if (i) os << ", ";
            print_rec(os, e->args[i], -1);
        }
        os << '}';
        break;
    }
    }
    if (paren) os << ')';
}

} // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(lex(text)).run(); }

std::string to_string(const ExprPtr& e) {
    if (!e) throw ValidationError("null expression");
    std::ostringstream os;
    print_rec(os, e, -1);
    return os.str();
}

} // namespace jsrlab::radcal
