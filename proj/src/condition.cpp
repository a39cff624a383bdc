#include <cctype>
#include <functional>

#include "ovalis/catalog.hpp"

namespace ovalis {

using Vars = std::map<std::string, long>;
using Value = std::vector<long>;

struct Condition::Node {
    std::function<bool(const Vars&)> fn;
};

namespace {

struct Tok {
    enum Kind { Num, Ident, Sym, End } kind;
    std::string text;
    long num = 0;
    size_t pos = 0;
};

std::vector<Tok> tokenize(const std::string& s) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Num, s.substr(start, i - start), std::stol(s.substr(start, i - start)), start});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), 0, start});
        } else {
            std::string two = s.substr(i, 2);
            if (two == "!=" || two == "<=" || two == ">=" || two == "=>") {
                out.push_back({Tok::Sym, two, 0, start});
                i += 2;
            } else if (std::string("=<>+-(),{}").find(c) != std::string::npos) {
                out.push_back({Tok::Sym, std::string(1, c), 0, start});
                ++i;
            } else {
                throw CatalogError("condition: unexpected '" + std::string(1, c) + "' at position " + std::to_string(i));
            }
        }
    }
    out.push_back({Tok::End, "", 0, s.size()});
    return out;
}

using Expr = std::function<Value(const Vars&)>;
using Pred = std::function<bool(const Vars&)>;

long scalar(const Value& v) {
    if (v.size() != 1) throw CatalogError("condition: tuple used as a number");
    return v[0];
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

    Pred condition() {
        Pred p = implication();
        if (peek().kind != Tok::End) fail("trailing input");
        return p;
    }

    Expr expression() {
        Expr e = sum();
        if (peek().kind != Tok::End) fail("trailing input");
        return e;
    }

private:
    std::vector<Tok> toks_;
    size_t at_ = 0;

    const Tok& peek() const { return toks_[at_]; }
    bool is(const std::string& t) const { return peek().kind != Tok::Num && peek().text == t; }
    bool accept(const std::string& t) {
        if (!is(t)) return false;
        ++at_;
        return true;
    }
    void expect(const std::string& t) {
        if (!accept(t)) fail("expected '" + t + "'");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw CatalogError("condition: " + what + " at position " + std::to_string(peek().pos));
    }

    Pred implication() {
        Pred lhs = disjunction();
        if (!accept("=>")) return lhs;
        Pred rhs = implication();
        return [lhs, rhs](const Vars& v) { return !lhs(v) || rhs(v); };
    }

    Pred disjunction() {
        Pred p = conjunction();
        while (accept("or")) {
            Pred q = conjunction();
            p = [p, q](const Vars& v) { return p(v) || q(v); };
        }
        return p;
    }

    Pred conjunction() {
        Pred p = comparison();
        while (accept("and")) {
            Pred q = comparison();
            p = [p, q](const Vars& v) { return p(v) && q(v); };
        }
        return p;
    }

    Pred comparison() {
        Expr lhs = sum();
        bool negate = accept("not");
        if (accept("in")) {
            expect("{");
            std::vector<Expr> members{sum()};
            while (accept(",")) members.push_back(sum());
            expect("}");
            return [lhs, members, negate](const Vars& v) {
                Value x = lhs(v);
                bool hit = false;
                for (const auto& m : members) hit = hit || m(v) == x;
                return hit != negate;
            };
        }
        if (negate) fail("expected 'in' after 'not'");
        std::string op = peek().text;
        if (peek().kind != Tok::Sym || (op != "=" && op != "!=" && op != "<" && op != ">" && op != "<=" && op != ">="))
            fail("expected a comparison");
        ++at_;
        Expr rhs = sum();
        return [lhs, rhs, op](const Vars& v) {
            Value a = lhs(v), b = rhs(v);
            if (op == "=") return a == b;
            if (op == "!=") return a != b;
            long x = scalar(a), y = scalar(b);
            if (op == "<") return x < y;
            if (op == ">") return x > y;
            if (op == "<=") return x <= y;
            return x >= y;
        };
    }

    Expr sum() {
        Expr e = term();
        while (is("+") || is("-")) {
            bool plus = toks_[at_++].text == "+";
            Expr f = term();
            e = [e, f, plus](const Vars& v) { return Value{scalar(e(v)) + (plus ? 1 : -1) * scalar(f(v))}; };
        }
        return e;
    }

    Expr term() {
        Expr e = primary();
        while (accept("mod")) {
            Expr m = primary();
            e = [e, m](const Vars& v) {
                long x = scalar(e(v)), y = scalar(m(v));
                if (y <= 0) throw CatalogError("condition: modulus must be positive");
                return Value{((x % y) + y) % y};
            };
        }
        return e;
    }

    Expr primary() {
        const Tok t = peek();
        if (t.kind == Tok::Num) {
            ++at_;
            long n = t.num;
            return [n](const Vars&) { return Value{n}; };
        }
        if (t.kind == Tok::Ident && t.text != "mod" && t.text != "and" && t.text != "or" && t.text != "in" &&
            t.text != "not") {
            ++at_;
            std::string name = t.text;
            return [name](const Vars& v) {
                auto it = v.find(name);
                if (it == v.end()) throw CatalogError("condition: unknown variable '" + name + "'");
                return Value{it->second};
            };
        }
        if (accept("-")) {
            Expr e = primary();
            return [e](const Vars& v) { return Value{-scalar(e(v))}; };
        }
        if (accept("(")) {
            std::vector<Expr> parts{sum()};
            while (accept(",")) parts.push_back(sum());
            expect(")");
            if (parts.size() == 1) return parts[0];
            return [parts](const Vars& v) {
                Value out;
                for (const auto& p : parts) out.push_back(scalar(p(v)));
                return out;
            };
        }
        fail("expected a number, variable or '('");
    }
};

}  // namespace

Condition Condition::parse(const std::string& text) {
    Condition c;
    c.text_ = text;
    bool blank = true;
    for (char ch : text) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (blank) return c;
    Parser p(text);
    c.root_ = std::make_shared<const Node>(Node{p.condition()});
    return c;
}

bool Condition::eval(const Vars& vars) const { return !root_ || root_->fn(vars); }

long eval_expression(const std::string& text, const Vars& vars) {
    Parser p(text);
    return scalar(p.expression()(vars));
}

}  // namespace ovalis
