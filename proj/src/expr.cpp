#include "finring/expr.hpp"

#include <cctype>
#include <optional>

#include "finring/analysis.hpp"
#include "finring/constructions.hpp"

namespace finring {

ParseError::ParseError(Kind kind, std::size_t offset, std::string message, std::vector<std::string> expected)
    : Error([&] {
          const char* k = kind == Kind::Lexical ? "lexical error" : kind == Kind::Syntax ? "syntax error" : "bound error";
          std::string m = std::string(k) + " at offset " + std::to_string(offset) + ": " + message;
          if (!expected.empty()) {
              m += " (expected ";
              for (std::size_t i = 0; i < expected.size(); ++i) m += (i ? " or " : "") + expected[i];
              m += ")";
          }
          return m;
      }()),
      kind_(kind),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

constexpr std::uint64_t kMaxInt = 1'000'000'000;

struct Token {
    enum class Type { Word, Cross, Int, Punct, End };
    Type type = Type::End;
    std::string text;
    std::uint64_t value = 0;
    std::size_t offset = 0;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isupper(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isupper(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Type::Word, std::string(s.substr(i, j - i)), 0, i});
            i = j;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            std::uint64_t v = 0;
            bool overflow = false;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                v = v * 10 + std::uint64_t(s[j] - '0');
                if (v > kMaxInt) overflow = true;
                ++j;
            }
            if (overflow) throw ParseError(ParseError::Kind::Bound, i, "integer too large");
            out.push_back({Token::Type::Int, std::string(s.substr(i, j - i)), v, i});
            i = j;
        } else if (c == 'x') {
            out.push_back({Token::Type::Cross, "x", 0, i});
            ++i;
        } else if (c == '(' || c == ')' || c == ',' || c == '/' || c == '[' || c == ']') {
            out.push_back({Token::Type::Punct, std::string(1, char(c)), 0, i});
            ++i;
        } else {
            throw ParseError(ParseError::Kind::Lexical, i, "unexpected character '" + std::string(1, char(c)) + "'");
        }
    }
    out.push_back({Token::Type::End, "end of input", 0, s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    RingExpr ring_top() {
        RingExpr e = expr();
        expect_end();
        return e;
    }
    GroupExpr group_top() {
        GroupExpr g = gexpr();
        expect_end();
        return g;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string found = t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(ParseError::Kind::Syntax, t.offset, "unexpected " + found, std::move(expected));
    }

    void expect_punct(char c) {
        if (peek().type != Token::Type::Punct || peek().text[0] != c) fail({"'" + std::string(1, c) + "'"});
        next();
    }
    void expect_end() {
        if (peek().type != Token::Type::End) fail({"end of input", "'x'"});
    }
    bool at_cross() const { return peek().type == Token::Type::Cross; }

    std::uint64_t integer(std::uint64_t min, const char* what) {
        if (peek().type != Token::Type::Int) fail({"integer"});
        const Token& t = next();
        if (t.value < min)
            throw ParseError(ParseError::Kind::Bound, t.offset,
                             std::string(what) + " must be at least " + std::to_string(min) + ", got " + t.text);
        return t.value;
    }

    std::vector<std::uint64_t> int_list() {
        expect_punct('[');
        std::vector<std::uint64_t> v{integer(0, "element index")};
        while (peek().type == Token::Type::Punct && peek().text == ",") {
            next();
            v.push_back(integer(0, "element index"));
        }
        expect_punct(']');
        return v;
    }

    RingExpr expr() {
        RingExpr left = term();
        if (!at_cross()) return left;
        next();
        return RingExpr::product(std::move(left), expr());
    }

    RingExpr term() {
        using K = RingExpr::Kind;
        const Token& t = peek();
        if (t.type == Token::Type::Punct && t.text == "(") {
            next();
            RingExpr e = expr();
            expect_punct(')');
            return e;
        }
        if (t.type != Token::Type::Word)
            fail({"Z", "GF", "M", "UT", "TE", "BT", "NIL", "POLYQ", "GR", "MODJ", "CORNER", "QUOT", "'('"});
        const std::string word = next().text;

        if (word == "Z") {
            expect_punct('/');
            return RingExpr::zmod(integer(2, "Z/n modulus"));
        }
        if (word == "GF") {
            expect_punct('(');
            const Token& pt = peek();
            std::uint64_t p = integer(2, "GF characteristic");
            // GF(q) with a prime power q is shorthand for GF(p, k).
            if (peek().type == Token::Type::Punct && peek().text == ")") {
                next();
                std::uint64_t base = 2;
                while (base * base <= p && p % base != 0) ++base;
                if (p % base != 0) base = p;
                std::uint64_t k = 0, q = p;
                while (q % base == 0) q /= base, ++k;
                if (q != 1)
                    throw ParseError(ParseError::Kind::Bound, pt.offset, "GF order must be a prime power, got " + pt.text);
                return RingExpr::gf(base, k);
            }
            if (!is_prime(p)) throw ParseError(ParseError::Kind::Bound, pt.offset, "GF characteristic must be prime");
            expect_punct(',');
            std::uint64_t k = integer(1, "GF degree");
            expect_punct(')');
            return RingExpr::gf(p, k);
        }
        if (word == "M" || word == "UT") {
            expect_punct('(');
            std::uint64_t m = word == "M" ? integer(1, "matrix size") : integer(2, "triangular size");
            expect_punct(',');
            RingExpr e = expr();
            expect_punct(')');
            return RingExpr::unary(word == "M" ? K::Matrix : K::UpperTri, std::move(e), {m});
        }
        if (word == "TE" || word == "BT" || word == "MODJ") {
            expect_punct('(');
            RingExpr e = expr();
            expect_punct(')');
            return RingExpr::unary(word == "TE" ? K::TE : word == "BT" ? K::BT : K::ModJ, std::move(e));
        }
        if (word == "NIL" || word == "CORNER") {
            expect_punct('(');
            RingExpr e = expr();
            expect_punct(',');
            std::uint64_t v = word == "NIL" ? integer(1, "nilpotency exponent") : integer(0, "element index");
            expect_punct(')');
            return RingExpr::unary(word == "NIL" ? K::Nil : K::Corner, std::move(e), {v});
        }
        if (word == "POLYQ" || word == "QUOT") {
            expect_punct('(');
            RingExpr e = expr();
            expect_punct(',');
            const std::size_t at = peek().offset;
            auto list = int_list();
            if (word == "POLYQ" && list.size() < 2)
                throw ParseError(ParseError::Kind::Bound, at, "POLYQ modulus must have degree at least 1");
            expect_punct(')');
            return RingExpr::unary(word == "POLYQ" ? K::PolyQ : K::Quot, std::move(e), std::move(list));
        }
        if (word == "GR") {
            expect_punct('(');
            RingExpr e = expr();
            expect_punct(',');
            GroupExpr g = gexpr();
            expect_punct(')');
            return RingExpr::group_ring(std::move(e), std::move(g));
        }
        throw ParseError(ParseError::Kind::Syntax, t.offset, "unknown ring keyword '" + word + "'",
                         {"Z", "GF", "M", "UT", "TE", "BT", "NIL", "POLYQ", "GR", "MODJ", "CORNER", "QUOT"});
    }

    GroupExpr gexpr() {
        GroupExpr left = gterm();
        if (!at_cross()) return left;
        next();
        return GroupExpr::product(std::move(left), gexpr());
    }

    GroupExpr gterm() {
        const Token& t = peek();
        if (t.type == Token::Type::Punct && t.text == "(") {
            next();
            GroupExpr g = gexpr();
            expect_punct(')');
            return g;
        }
        if (t.type != Token::Type::Word) fail({"C", "S3", "D4", "Q8", "'('"});
        const Token word = next();
        if (word.text == "C") return GroupExpr::cyclic(integer(1, "cyclic group order"));
        using K = GroupExpr::Kind;
        std::optional<std::pair<std::uint64_t, K>> named;
        if (word.text == "S") named = {3, K::S3};
        if (word.text == "D") named = {4, K::D4};
        if (word.text == "Q") named = {8, K::Q8};
        if (!named) throw ParseError(ParseError::Kind::Syntax, word.offset, "unknown group '" + word.text + "'",
                                     {"C", "S3", "D4", "Q8"});
        const Token& nt = peek();
        if (nt.type != Token::Type::Int || nt.value != named->first)
            throw ParseError(ParseError::Kind::Syntax, nt.offset, "unknown group",
                             {"'" + word.text + std::to_string(named->first) + "'"});
        next();
        return GroupExpr::named(named->second);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::string join_ints(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

Elem to_elem(std::uint64_t v, const FiniteRing& r) {
    if (v >= r.order())
        throw ArgumentError("element index " + std::to_string(v) + " out of range for " + r.label() + " (order " +
                            std::to_string(r.order()) + ")");
    return Elem(v);
}

} // namespace

RingExpr parse_ring(std::string_view text) { return Parser(text).ring_top(); }
GroupExpr parse_group(std::string_view text) { return Parser(text).group_top(); }

std::string format(const GroupExpr& g) {
    using K = GroupExpr::Kind;
    switch (g.kind) {
    case K::Cyclic: return "C" + std::to_string(g.n);
    case K::S3: return "S3";
    case K::D4: return "D4";
    case K::Q8: return "Q8";
    case K::Product: {
        const auto& a = g.children.at(0);
        std::string left = format(a);
        if (a.kind == K::Product) left = "(" + left + ")";
        return left + " x " + format(g.children.at(1));
    }
    }
    return "?";
}

std::string format(const RingExpr& e) {
    using K = RingExpr::Kind;
    auto child = [&]() { return format(e.children.at(0)); };
    switch (e.kind) {
    case K::Zmod: return "Z/" + std::to_string(e.ints.at(0));
    case K::GF: return "GF(" + std::to_string(e.ints.at(0)) + ", " + std::to_string(e.ints.at(1)) + ")";
    case K::Product: {
        std::string left = child();
        if (e.children.at(0).kind == K::Product) left = "(" + left + ")";
        return left + " x " + format(e.children.at(1));
    }
    case K::Matrix: return "M(" + std::to_string(e.ints.at(0)) + ", " + child() + ")";
    case K::UpperTri: return "UT(" + std::to_string(e.ints.at(0)) + ", " + child() + ")";
    case K::TE: return "TE(" + child() + ")";
    case K::BT: return "BT(" + child() + ")";
    case K::Nil: return "NIL(" + child() + ", " + std::to_string(e.ints.at(0)) + ")";
    case K::PolyQ: return "POLYQ(" + child() + ", [" + join_ints(e.ints) + "])";
    case K::GroupRing: return "GR(" + child() + ", " + format(e.group.at(0)) + ")";
    case K::ModJ: return "MODJ(" + child() + ")";
    case K::Corner: return "CORNER(" + child() + ", " + std::to_string(e.ints.at(0)) + ")";
    case K::Quot: return "QUOT(" + child() + ", [" + join_ints(e.ints) + "])";
    }
    return "?";
}

GroupTable evaluate(const GroupExpr& g, const Limits& limits) {
    using K = GroupExpr::Kind;
    switch (g.kind) {
    case K::Cyclic: return cyclic(g.n, limits);
    case K::S3: return symmetric3();
    case K::D4: return dihedral4();
    case K::Q8: return quaternion8();
    case K::Product: {
        auto a = evaluate(g.children.at(0), limits);
        auto b = evaluate(g.children.at(1), limits);
        return group_product(a, b, limits);
    }
    }
    throw ArgumentError("unknown group expression");
}

FiniteRing evaluate(const RingExpr& e, const Limits& limits) {
    using K = RingExpr::Kind;
    std::vector<FiniteRing> kids;
    for (const auto& c : e.children) kids.push_back(evaluate(c, limits));
    const std::string label = format(e);
    try {
        FiniteRing r = [&]() -> FiniteRing {
            switch (e.kind) {
            case K::Zmod: return zmod(e.ints.at(0), limits);
            case K::GF: return gf(e.ints.at(0), e.ints.at(1), limits);
            case K::Product: return product(kids.at(0), kids.at(1), limits);
            case K::Matrix: return matrix_ring(e.ints.at(0), kids.at(0), limits);
            case K::UpperTri: return upper_triangular(e.ints.at(0), kids.at(0), limits);
            case K::TE: return trivial_extension(kids.at(0), limits);
            case K::BT: return bt(kids.at(0), limits);
            case K::Nil: return nil_extension(kids.at(0), e.ints.at(0), limits);
            case K::PolyQ: {
                std::vector<Elem> f;
                for (auto v : e.ints) f.push_back(to_elem(v, kids.at(0)));
                return poly_quotient(kids.at(0), f, limits);
            }
            case K::GroupRing: return group_ring(kids.at(0), evaluate(e.group.at(0), limits), limits);
            case K::ModJ: {
                Analysis a(kids.at(0));
                return quotient(kids.at(0), a.jacobson(), limits).ring;
            }
            case K::Corner: return corner(kids.at(0), to_elem(e.ints.at(0), kids.at(0)), limits).ring;
            case K::Quot: {
                std::vector<Elem> gens;
                for (auto v : e.ints) gens.push_back(to_elem(v, kids.at(0)));
                return quotient(kids.at(0), ideal_closure(kids.at(0), gens), limits).ring;
            }
            }
            throw ArgumentError("unknown ring expression");
        }();
        return r.relabeled(label);
    } catch (const LimitError& err) {
        throw LimitError(std::string(err.what()) + " [in " + label + "]");
    }
}

FiniteRing build_ring(std::string_view text, const Limits& limits) { return evaluate(parse_ring(text), limits); }

} // namespace finring
