#include <cctype>

#include "ovalis/scheme.hpp"

namespace ovalis {

namespace {

struct Sym {
    char c;
    size_t pos;
};

std::vector<Sym> normalize(const std::string& text) {
    std::vector<Sym> out;
    for (size_t i = 0; i < text.size();) {
        unsigned char c = text[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == 0xE2 && i + 2 < text.size()) {
            std::string u = text.substr(i, 3);
            char alias = 0;
            if (u == "\xE2\x8A\x94") alias = '+';
            else if (u == "\xE2\x9F\xA8") alias = '<';
            else if (u == "\xE2\x9F\xA9") alias = '>';
            if (alias) {
                out.push_back({alias, i});
                i += 3;
                continue;
            }
        }
        out.push_back({static_cast<char>(c), i});
        ++i;
    }
    return out;
}

class Parser {
public:
    Parser(std::vector<Sym> syms, size_t end_pos) : s_(std::move(syms)), end_(end_pos) {}

    char peek() const { return i_ < s_.size() ? s_[i_].c : '\0'; }
    size_t pos() const { return i_ < s_.size() ? s_[i_].pos : end_; }
    bool done() const { return i_ >= s_.size(); }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos()); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    int integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 100000) fail("integer too large");
            ++i_;
        }
        return static_cast<int>(v);
    }

    // "0" or a forest
    Forest part() {
        if (peek() == '0') {
            size_t save = i_;
            ++i_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) return {};
            i_ = save;
        }
        return forest();
    }

    Forest forest() {
        Forest f = term();
        while (peek() == '+') {
            ++i_;
            Forest g = term();
            f.insert(f.end(), g.begin(), g.end());
        }
        return f;
    }

    Forest term() {
        char c = peek();
        if (c == 'J') fail("pseudo-line not allowed here");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t at = pos();
            int m = integer();
            if (m < 1) throw ParseError("oval count must be positive", at);
            return Forest(m);
        }
        if (c == '<') {
            ++i_;
            if (peek() == '0') fail("empty interior '<0>'");
            Forest inner = forest();
            if (inner.empty()) fail("empty interior");
            expect('>');
            return Forest{Oval{std::move(inner)}};
        }
        if (c == 'N') {
            ++i_;
            expect('(');
            int h = integer();
            expect(',');
            Forest body = part();
            expect(')');
            for (int j = 0; j < h; ++j) {
                if (body.empty())
                    body = Forest{Oval{}};
                else
                    body = Forest{Oval{std::move(body)}};
            }
            return body;
        }
        if (done()) fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    std::vector<Forest> parts() {
        std::vector<Forest> out;
        out.push_back(part());
        while (peek() == ':') {
            ++i_;
            out.push_back(part());
        }
        return out;
    }

    void rp2(Scheme& s) {
        if (peek() == 'J') {
            ++i_;
            s.pseudo_lines = 1;
            if (peek() == '+') {
                ++i_;
                if (peek() == 'J') fail("more than one pseudo-line");
                s.rp2 = forest();
            }
            if (peek() == 'J' || peek() == '+') fail("more than one pseudo-line");
            return;
        }
        s.rp2 = part();
        if (peek() == '+') {
            ++i_;
            if (peek() == 'J') fail("pseudo-line must come first");
            fail("unexpected '+'");
        }
    }

    size_t i_ = 0;

private:
    std::vector<Sym> s_;
    size_t end_;
};

size_t count_char(const std::vector<Sym>& syms, char c) {
    size_t n = 0;
    for (const auto& s : syms) n += s.c == c;
    return n;
}

}  // namespace

Scheme parse_scheme(const std::string& text) {
    auto syms = normalize(text);
    Parser p(syms, text.size());
    Scheme s;
    size_t bars = count_char(syms, '|');
    size_t js = count_char(syms, 'J');
    if (bars > 1) {
        size_t seen = 0;
        for (const auto& x : syms)
            if (x.c == '|' && ++seen == 2) throw ParseError("more than one '|'", x.pos);
    }
    if (bars == 0) {
        if (js) {
            for (const auto& x : syms)
                if (x.c == 'J') throw ParseError("pseudo-line in a DP2 scheme", x.pos);
        }
        s.surface = Surface::DP2;
        s.spheres = p.parts();
    } else {
        if (js > 1) {
            size_t seen = 0;
            for (const auto& x : syms)
                if (x.c == 'J' && ++seen == 2) throw ParseError("more than one pseudo-line", x.pos);
        }
        s.surface = Surface::DP1;
        p.rp2(s);
        p.expect('|');
        if (!p.done()) s.spheres = p.parts();
    }
    if (!p.done()) p.fail(std::string("unexpected '") + p.peek() + "'");
    return s;
}

Scheme parse_scheme(const std::string& text, Surface expected) {
    Scheme s = parse_scheme(text);
    if (s.surface != expected) {
        if (expected == Surface::DP2) throw ParseError("pseudo-line part in a DP2 scheme", 0);
        s.surface = Surface::DP1;
    }
    return s;
}

Forest parse_forest(const std::string& text) {
    auto syms = normalize(text);
    Parser p(syms, text.size());
    Forest f = p.part();
    if (!p.done()) p.fail(std::string("unexpected '") + p.peek() + "'");
    return f;
}

RefinedScheme parse_refined(const std::string& text) {
    Scheme s = parse_scheme(text, Surface::DP1);
    if (s.k() != 4) throw ParseError("refined scheme needs four spheres", 0);
    return refine(s);
}

}  // namespace ovalis
