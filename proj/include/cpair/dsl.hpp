#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cpair/divisor.hpp"
#include "cpair/geometry.hpp"

namespace cpair::dsl {

// ---------------------------------------------------------------- lexer

struct Token {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0;
    int col = 0;

    bool is(const std::string& s) const { return text == s && kind != Kind::End; }
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg) const {
        throw ParseError(current_.line, current_.col, msg);
    }

private:
    void advance() {
        skip_space_and_comments();
        current_.line = line_;
        current_.col = col_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            current_.text.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_' ||
                    text_[pos_] == '-')) {
                // '-' continues an identifier only when followed by a letter
                // or digit and not forming '->'
                if (text_[pos_] == '-' &&
                    (pos_ + 1 >= text_.size() || text_[pos_ + 1] == '>' ||
                     (!std::isalnum((unsigned char)text_[pos_ + 1]) && text_[pos_ + 1] != '_')))
                    break;
                s += take();
            }
            current_ = {Token::Kind::Ident, s, current_.line, current_.col};
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
                s += take();
            current_ = {Token::Kind::Number, s, current_.line, current_.col};
            return;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            take();
            take();
            current_ = {Token::Kind::Punct, "->", current_.line, current_.col};
            return;
        }
        current_ = {Token::Kind::Punct, std::string(1, take()), current_.line, current_.col};
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    take();
            } else if (std::isspace((unsigned char)c)) {
                take();
            } else {
                break;
            }
        }
    }

    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    std::string text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

// ------------------------------------------------------------- document

/// A coefficient entry of a pair block: either a rational coefficient or
/// an explicit multiplicity (m=K / m=inf).
struct PairEntry {
    bool by_multiplicity = false;
    Rational coefficient;      // when !by_multiplicity
    ExtRational multiplicity;  // when by_multiplicity
    bool is_coord = false;
    int axis = 0;              // when is_coord
    std::string prime_name;    // when !is_coord
    int line = 0;
};

struct ChartDecl {
    std::string name;
    int dim = 1;
};

struct PairDecl {
    std::string name;
    std::string chart;  // empty for abstract pairs
    std::vector<PairEntry> entries;
};

struct MonomialDecl {
    std::string name;
    std::string source_chart;
    std::string target_chart;
    std::vector<std::vector<Int>> matrix;
};

struct MorphismDecl {
    struct Row {
        std::string target_prime;
        std::vector<std::pair<Int, std::string>> terms;
    };
    std::string name;
    std::string source_label;
    std::string target_label;
    std::vector<Row> rows;
    std::vector<std::string> exceptional;
    std::optional<std::vector<std::pair<Rational, std::string>>> k_source;
    std::optional<std::vector<std::pair<Rational, std::string>>> k_target;
    bool image_outside_boundary = false;
};

struct CheckDecl {
    std::string kind;
    std::vector<std::string> args;  // verbatim tokens after the kind
    int line = 0;
};

using Decl = std::variant<ChartDecl, PairDecl, MonomialDecl, MorphismDecl, CheckDecl>;

struct Document {
    std::vector<Decl> decls;
};

// --------------------------------------------------------------- parser

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Document parse() {
        Document doc;
        while (lex_.peek().kind != Token::Kind::End) {
            const Token& t = lex_.peek();
            if (t.is("chart"))
                doc.decls.push_back(parse_chart());
            else if (t.is("pair"))
                doc.decls.push_back(parse_pair());
            else if (t.is("monomial"))
                doc.decls.push_back(parse_monomial());
            else if (t.is("morphism"))
                doc.decls.push_back(parse_morphism());
            else if (t.is("check"))
                doc.decls.push_back(parse_check());
            else
                lex_.error("expected a declaration (chart, pair, monomial, morphism, check), got '" +
                           t.text + "'");
        }
        return doc;
    }

private:
    Token expect_ident(const std::string& what) {
        if (lex_.peek().kind != Token::Kind::Ident)
            lex_.error("expected " + what + ", got '" + lex_.peek().text + "'");
        return lex_.next();
    }

    Token expect(const std::string& text) {
        if (!lex_.peek().is(text))
            lex_.error("expected '" + text + "', got '" + lex_.peek().text + "'");
        return lex_.next();
    }

    Int expect_integer() {
        bool neg = false;
        if (lex_.peek().is("-")) {
            lex_.next();
            neg = true;
        }
        if (lex_.peek().kind != Token::Kind::Number)
            lex_.error("expected an integer, got '" + lex_.peek().text + "'");
        Int v(lex_.next().text);
        return neg ? -v : v;
    }

    /// integer or p/q, with optional sign
    Rational expect_rational() {
        Int num = expect_integer();
        if (lex_.peek().is("/")) {
            lex_.next();
            Int den = expect_integer();
            return Rational(num, den);
        }
        return Rational(num);
    }

    ChartDecl parse_chart() {
        expect("chart");
        ChartDecl d;
        d.name = expect_ident("chart name").text;
        expect("dim");
        Int dim = expect_integer();
        if (dim < 1 || dim > 64)
            lex_.error("chart dimension out of range");
        d.dim = (int)dim;
        return d;
    }

    PairDecl parse_pair() {
        expect("pair");
        PairDecl d;
        d.name = expect_ident("pair name").text;
        if (lex_.peek().is("on")) {
            lex_.next();
            d.chart = expect_ident("chart name").text;
        }
        expect("{");
        while (!lex_.peek().is("}")) {
            PairEntry e;
            e.line = lex_.peek().line;
            if (lex_.peek().is("(")) {
                lex_.next();
                e.coefficient = expect_rational();
                expect(")");
            } else if (lex_.peek().is("m")) {
                lex_.next();
                expect("=");
                e.by_multiplicity = true;
                if (lex_.peek().is("inf")) {
                    lex_.next();
                    e.multiplicity = ExtRational::infinity();
                } else {
                    e.multiplicity = ExtRational(Rational(expect_integer()));
                }
            } else {
                lex_.error("expected a coefficient '(p/q)' or multiplicity 'm=K'");
            }
            if (lex_.peek().is("coord")) {
                lex_.next();
                e.is_coord = true;
                e.axis = (int)expect_integer();
            } else {
                e.prime_name = expect_ident("prime name").text;
            }
            d.entries.push_back(std::move(e));
            if (lex_.peek().is(";"))
                lex_.next();
        }
        expect("}");
        return d;
    }

    MonomialDecl parse_monomial() {
        expect("monomial");
        MonomialDecl d;
        d.name = expect_ident("monomial name").text;
        expect(":");
        d.source_chart = expect_ident("source chart").text;
        expect("->");
        d.target_chart = expect_ident("target chart").text;
        expect("matrix");
        expect("[");
        while (true) {
            expect("[");
            std::vector<Int> row;
            while (!lex_.peek().is("]")) {
                row.push_back(expect_integer());
                if (lex_.peek().is(","))
                    lex_.next();
            }
            expect("]");
            d.matrix.push_back(std::move(row));
            if (lex_.peek().is(","))
                lex_.next();
            if (lex_.peek().is("]"))
                break;
        }
        expect("]");
        return d;
    }

    std::vector<std::pair<Rational, std::string>> parse_divisor_expr() {
        std::vector<std::pair<Rational, std::string>> terms;
        // '0' denotes the zero divisor
        if (lex_.peek().kind == Token::Kind::Number && lex_.peek().text == "0") {
            lex_.next();
            return terms;
        }
        while (true) {
            Rational c;
            if (lex_.peek().is("(")) {
                lex_.next();
                c = expect_rational();
                expect(")");
            } else {
                c = expect_rational();
            }
            expect("*");
            terms.emplace_back(c, expect_ident("prime name").text);
            if (lex_.peek().is("+"))
                lex_.next();
            else
                break;
        }
        return terms;
    }

    MorphismDecl parse_morphism() {
        expect("morphism");
        MorphismDecl d;
        d.name = expect_ident("morphism name").text;
        expect(":");
        d.source_label = expect_ident("source label").text;
        expect("->");
        d.target_label = expect_ident("target label").text;
        expect("{");
        while (!lex_.peek().is("}")) {
            if (lex_.peek().is("pullback")) {
                lex_.next();
                MorphismDecl::Row row;
                row.target_prime = expect_ident("target prime").text;
                expect("=");
                while (true) {
                    Int mult = expect_integer();
                    expect("*");
                    row.terms.emplace_back(mult, expect_ident("source prime").text);
                    if (lex_.peek().is("+"))
                        lex_.next();
                    else
                        break;
                }
                d.rows.push_back(std::move(row));
            } else if (lex_.peek().is("exceptional")) {
                lex_.next();
                while (lex_.peek().kind == Token::Kind::Ident && !is_keyword(lex_.peek().text))
                    d.exceptional.push_back(lex_.next().text);
            } else if (lex_.peek().is("K_source")) {
                lex_.next();
                expect("=");
                d.k_source = parse_divisor_expr();
            } else if (lex_.peek().is("K_target")) {
                lex_.next();
                expect("=");
                d.k_target = parse_divisor_expr();
            } else if (lex_.peek().is("image_outside_boundary")) {
                lex_.next();
                d.image_outside_boundary = true;
            } else {
                lex_.error("expected pullback, exceptional, K_source, K_target or "
                           "image_outside_boundary");
            }
            if (lex_.peek().is(";"))
                lex_.next();
        }
        expect("}");
        return d;
    }

    static bool is_keyword(const std::string& s) {
        return s == "pullback" || s == "exceptional" || s == "K_source" || s == "K_target" ||
               s == "image_outside_boundary";
    }

    CheckDecl parse_check() {
        Token kw = expect("check");
        CheckDecl d;
        d.line = kw.line;
        d.kind = expect_ident("check kind").text;
        // consume raw tokens until the next declaration keyword or EOF
        while (lex_.peek().kind != Token::Kind::End) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::Ident &&
                (t.text == "chart" || t.text == "pair" || t.text == "monomial" ||
                 t.text == "morphism" || t.text == "check"))
                break;
            d.args.push_back(lex_.next().text);
        }
        return d;
    }

    Lexer lex_;
};

inline Document parse(const std::string& text) { return Parser(text).parse(); }

// ------------------------------------------------------------ serializer

/// Canonical reprint.  parse ∘ serialize ∘ parse = parse.
inline std::string serialize(const Document& doc) {
    std::ostringstream os;
    for (const Decl& decl : doc.decls) {
        if (const auto* c = std::get_if<ChartDecl>(&decl)) {
            os << "chart " << c->name << " dim " << c->dim << "\n";
        } else if (const auto* p = std::get_if<PairDecl>(&decl)) {
            os << "pair " << p->name;
            if (!p->chart.empty())
                os << " on " << p->chart;
            os << " {";
            for (size_t i = 0; i < p->entries.size(); ++i) {
                const PairEntry& e = p->entries[i];
                os << (i ? " ; " : " ");
                if (e.by_multiplicity)
                    os << "m=" << e.multiplicity.str();
                else
                    os << "(" << e.coefficient.str() << ")";
                if (e.is_coord)
                    os << " coord " << e.axis;
                else
                    os << " " << e.prime_name;
            }
            os << " }\n";
        } else if (const auto* m = std::get_if<MonomialDecl>(&decl)) {
            os << "monomial " << m->name << " : " << m->source_chart << " -> " << m->target_chart
               << " matrix [";
            for (size_t i = 0; i < m->matrix.size(); ++i) {
                os << (i ? ",[" : "[");
                for (size_t j = 0; j < m->matrix[i].size(); ++j)
                    os << (j ? "," : "") << m->matrix[i][j];
                os << "]";
            }
            os << "]\n";
        } else if (const auto* f = std::get_if<MorphismDecl>(&decl)) {
            os << "morphism " << f->name << " : " << f->source_label << " -> " << f->target_label
               << " {\n";
            for (const auto& row : f->rows) {
                os << "  pullback " << row.target_prime << " = ";
                for (size_t i = 0; i < row.terms.size(); ++i)
                    os << (i ? " + " : "") << row.terms[i].first << "*" << row.terms[i].second;
                os << " ;\n";
            }
            if (!f->exceptional.empty()) {
                os << "  exceptional";
                for (const auto& e : f->exceptional)
                    os << " " << e;
                os << " ;\n";
            }
            auto put_k = [&os](const char* key, const auto& terms) {
                os << "  " << key << " = ";
                if (terms.empty())
                    os << "0";
                for (size_t i = 0; i < terms.size(); ++i)
                    os << (i ? " + " : "") << "(" << terms[i].first.str() << ")*"
                       << terms[i].second;
                os << " ;\n";
            };
            if (f->k_source)
                put_k("K_source", *f->k_source);
            if (f->k_target)
                put_k("K_target", *f->k_target);
            if (f->image_outside_boundary)
                os << "  image_outside_boundary ;\n";
            os << "}\n";
        } else if (const auto* ck = std::get_if<CheckDecl>(&decl)) {
            os << "check " << ck->kind;
            for (const auto& a : ck->args)
                os << " " << a;
            os << "\n";
        }
    }
    return os.str();
}

/// Structural equality of documents, used by the round-trip property.
inline bool equivalent(const Document& a, const Document& b) {
    return serialize(a) == serialize(b);
}

} // namespace cpair::dsl
