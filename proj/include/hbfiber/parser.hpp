#ifndef HBFIBER_PARSER_HPP
#define HBFIBER_PARSER_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace hbf {

[[noreturn]] inline void syntax_error(int line, int col, const std::string& msg) {
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << msg;
    throw error("SyntaxError", os.str());
}

// structural part of an ideal file: field, variables, generator expressions
struct IdealFileText {
    FieldDesc field;
    std::vector<std::string> vars;
    std::vector<std::string> gen_exprs;
    std::vector<int> gen_lines;
};

inline IdealFileText parse_ideal_file_text(const std::string& text) {
    IdealFileText out;
    bool have_field = false, have_ring = false, in_gens = false;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (!in_gens) {
            if (word == "field") {
                std::string spec;
                if (!(ls >> spec)) syntax_error(lineno, 1, "field directive needs an argument");
                if (spec == "rational") {
                    out.field = FieldDesc::rational();
                } else {
                    try {
                        unsigned long p = std::stoul(spec);
                        if (p >= (1ul << 31)) syntax_error(lineno, 1, "prime must be < 2^31");
                        out.field = FieldDesc::prime(static_cast<std::uint32_t>(p));
                    } catch (const error&) {
                        throw;
                    } catch (...) {
                        syntax_error(lineno, 1, "bad field spec '" + spec + "'");
                    }
                }
                have_field = true;
            } else if (word == "ring") {
                std::string v;
                while (ls >> v) {
                    if (v.size() >= 2 && v[0] == 'y' &&
                        v.find_first_not_of("0123456789", 1) == std::string::npos)
                        syntax_error(lineno, 1, "variable name '" + v +
                                                    "' is reserved for image computations");
                    out.vars.push_back(v);
                }
                if (out.vars.empty()) syntax_error(lineno, 1, "ring directive needs variables");
                have_ring = true;
            } else if (word == "gens") {
                if (!have_field || !have_ring)
                    syntax_error(lineno, 1, "gens must follow field and ring directives");
                in_gens = true;
            } else {
                syntax_error(lineno, 1, "unexpected directive '" + word + "'");
            }
        } else {
            std::string expr = line;
            // trim
            auto a = expr.find_first_not_of(" \t\r");
            auto b = expr.find_last_not_of(" \t\r");
            if (a == std::string::npos) continue;
            out.gen_exprs.push_back(expr.substr(a, b - a + 1));
            out.gen_lines.push_back(lineno);
        }
    }
    if (!in_gens) syntax_error(lineno, 1, "missing gens section");
    if (out.gen_exprs.empty()) syntax_error(lineno, 1, "no generators given");
    return out;
}

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | atom ('^' natural)?
// atom   := integer | variable | '(' expr ')'
template <class K>
class ExprParser {
public:
    ExprParser(const std::string& src, const RingPtr<K>& ring, int line)
        : src_(src), ring_(ring), line_(line) {}

    Polynomial<K> parse() {
        Polynomial<K> p = expr();
        skip_ws();
        if (pos_ != src_.size()) err("trailing input");
        return p;
    }

private:
    Polynomial<K> expr() {
        Polynomial<K> p = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') { ++pos_; p = p + term(); }
            else if (peek() == '-') { ++pos_; p = p - term(); }
            else return p;
        }
    }
    Polynomial<K> term() {
        Polynomial<K> p = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') { ++pos_; p = p * factor(); }
            else return p;
        }
    }
    Polynomial<K> factor() {
        skip_ws();
        if (peek() == '-') { ++pos_; return -factor(); }
        Polynomial<K> p = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(peek())) err("expected natural number after '^'");
            long e = 0;
            while (std::isdigit(peek())) e = e * 10 + (src_[pos_++] - '0');
            Polynomial<K> acc = Polynomial<K>::constant(ring_, ring_->one());
            for (long i = 0; i < e; ++i) acc = acc * p;
            return acc;
        }
        return p;
    }
    Polynomial<K> atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<K> p = expr();
            skip_ws();
            if (peek() != ')') err("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(c)) {
            std::int64_t n = 0;
            while (std::isdigit(peek())) n = n * 10 + (src_[pos_++] - '0');
            return Polynomial<K>::constant(ring_, ring_->make(n));
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t start = pos_;
            while (std::isalnum(peek()) || peek() == '_') ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < ring_->vars.size(); ++i)
                if (ring_->vars[i] == name) return Polynomial<K>::variable(ring_, i);
            throw error("UnknownVariable",
                        "line " + std::to_string(line_) + ", column " +
                            std::to_string(start + 1) + ": unknown variable '" + name + "'");
        }
        err(c == '\0' ? "unexpected end of expression"
                      : std::string("unexpected character '") + c + "'");
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }
    [[noreturn]] void err(const std::string& msg) const {
        syntax_error(line_, static_cast<int>(pos_) + 1, msg);
    }

    const std::string& src_;
    RingPtr<K> ring_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class K>
Polynomial<K> parse_polynomial(const std::string& src, const RingPtr<K>& ring, int line = 1) {
    return detail::ExprParser<K>(src, ring, line).parse();
}

template <class K>
struct IdealFile {
    IdealFileText text;
    RingPtr<K> ring;
    Ideal<K> ideal;
    int degree = 0;  // common generator degree
};

// Parse, then validate that the generators are homogeneous of one degree.
template <class K>
IdealFile<K> parse_ideal_file(const std::string& text) {
    IdealFile<K> out;
    out.text = parse_ideal_file_text(text);
    out.ring = make_ring<K>(out.text.field, out.text.vars);
    std::vector<Polynomial<K>> gens;
    int d = -1;
    for (std::size_t i = 0; i < out.text.gen_exprs.size(); ++i) {
        Polynomial<K> f =
            parse_polynomial<K>(out.text.gen_exprs[i], out.ring, out.text.gen_lines[i]);
        if (f.is_zero())
            fail("NotEquigenerated", "line " + std::to_string(out.text.gen_lines[i]) +
                                         ": zero generator");
        auto hd = homogeneous_degree(f);
        if (!hd)
            fail("NotEquigenerated", "line " + std::to_string(out.text.gen_lines[i]) +
                                         ": generator is not homogeneous");
        if (d < 0) d = *hd;
        else if (*hd != d)
            fail("NotEquigenerated", "generators have mixed degrees " + std::to_string(d) +
                                         " and " + std::to_string(*hd));
        gens.push_back(std::move(f));
    }
    out.degree = d;
    out.ideal = Ideal<K>(out.ring, std::move(gens));
    return out;
}

}  // namespace hbf

#endif
