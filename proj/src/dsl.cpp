#include "flatlab/dsl.hpp"

#include <cctype>

namespace flatlab {

std::string Diagnostic::render() const {
    std::string out = "error at " + std::to_string(line) + ":" + std::to_string(col) + ": " +
                      message;
    if (!expected.empty()) {
        out += " (expected ";
        for (size_t i = 0; i < expected.size(); ++i) {
            if (i) out += ", ";
            out += expected[i];
        }
        out += ")";
    }
    return out;
}

namespace {

constexpr size_t kMaxExponent = 9999;
constexpr size_t kMaxTerms = 20000;
constexpr size_t kMaxWork = 200000;
constexpr size_t kMaxRank = 4096;
constexpr int64_t kMaxDegreeShift = 1000000;
constexpr size_t kMaxNesting = 64;

struct Token {
    enum class Type {
        Ident,
        Int,
        LBracket,
        RBracket,
        LParen,
        RParen,
        Comma,
        Eq,
        Slash,
        Caret,
        Star,
        Plus,
        Minus,
        DotDot,
        Newline,
        End,
    };
    Type type;
    std::string text;
    size_t line, col;
};

const char* token_name(Token::Type t) {
    switch (t) {
        case Token::Type::Ident: return "identifier";
        case Token::Type::Int: return "integer";
        case Token::Type::LBracket: return "'['";
        case Token::Type::RBracket: return "']'";
        case Token::Type::LParen: return "'('";
        case Token::Type::RParen: return "')'";
        case Token::Type::Comma: return "','";
        case Token::Type::Eq: return "'='";
        case Token::Type::Slash: return "'/'";
        case Token::Type::Caret: return "'^'";
        case Token::Type::Star: return "'*'";
        case Token::Type::Plus: return "'+'";
        case Token::Type::Minus: return "'-'";
        case Token::Type::DotDot: return "'..'";
        case Token::Type::Newline: return "end of line";
        case Token::Type::End: return "end of input";
    }
    return "?";
}

struct ParseAbort {
    Diagnostic diag;
};

[[noreturn]] void fail(size_t line, size_t col, std::string msg,
                       std::vector<std::string> expected = {}) {
    throw ParseAbort{Diagnostic{line, col, std::move(msg), std::move(expected)}};
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    size_t line = 1, col = 1;
    size_t depth = 0;
    size_t i = 0;
    auto push = [&](Token::Type t, std::string s, size_t l, size_t c) {
        out.push_back({t, std::move(s), l, c});
    };
    while (i < text.size()) {
        char ch = text[i];
        size_t l = line, c = col;
        auto advance = [&](size_t k) {
            for (size_t j = 0; j < k; ++j) {
                if (text[i + j] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            i += k;
        };
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (ch == '\n') {
            if (depth == 0 && !out.empty() && out.back().type != Token::Type::Newline)
                push(Token::Type::Newline, "\n", l, c);
            advance(1);
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            advance(1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_' || text[j] == '\''))
                ++j;
            push(Token::Type::Ident, std::string(text.substr(i, j - i)), l, c);
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            push(Token::Type::Int, std::string(text.substr(i, j - i)), l, c);
            advance(j - i);
            continue;
        }
        switch (ch) {
            case '[':
                if (++depth > kMaxNesting) fail(l, c, "brackets nested too deeply");
                push(Token::Type::LBracket, "[", l, c);
                break;
            case ']':
                if (depth > 0) --depth;
                push(Token::Type::RBracket, "]", l, c);
                break;
            case '(':
                if (++depth > kMaxNesting) fail(l, c, "brackets nested too deeply");
                push(Token::Type::LParen, "(", l, c);
                break;
            case ')':
                if (depth > 0) --depth;
                push(Token::Type::RParen, ")", l, c);
                break;
            case ',': push(Token::Type::Comma, ",", l, c); break;
            case '=': push(Token::Type::Eq, "=", l, c); break;
            case '/': push(Token::Type::Slash, "/", l, c); break;
            case '^': push(Token::Type::Caret, "^", l, c); break;
            case '*': push(Token::Type::Star, "*", l, c); break;
            case '+': push(Token::Type::Plus, "+", l, c); break;
            case '-': push(Token::Type::Minus, "-", l, c); break;
            case '.':
                if (i + 1 < text.size() && text[i + 1] == '.') {
                    push(Token::Type::DotDot, "..", l, c);
                    advance(1);
                    break;
                }
                fail(l, c, "stray '.'");
            default:
                fail(l, c, "unexpected character (byte " +
                               std::to_string(static_cast<unsigned char>(ch)) + ")");
        }
        advance(1);
    }
    if (!out.empty() && out.back().type != Token::Type::Newline)
        out.push_back({Token::Type::Newline, "\n", line, col});
    out.push_back({Token::Type::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& get() {
        const Token& t = toks_[pos_];
        if (t.type != Token::Type::End) ++pos_;
        return t;
    }
    bool accept(Token::Type t) {
        if (peek().type != t) return false;
        get();
        return true;
    }
    const Token& expect(Token::Type t, const char* context) {
        if (peek().type != t)
            fail(peek().line, peek().col,
                 std::string("unexpected ") + token_name(peek().type) +
                     (peek().text.empty() || peek().type == Token::Type::Newline
                          ? std::string()
                          : " '" + peek().text + "'") +
                     " in " + context,
                 {token_name(t)});
        return get();
    }
    std::string expect_ident(const char* context) {
        return expect(Token::Type::Ident, context).text;
    }
    void expect_keyword(const char* word, const char* context) {
        const Token& t = peek();
        if (t.type != Token::Type::Ident || t.text != word)
            fail(t.line, t.col,
                 std::string("unexpected ") + token_name(t.type) + " in " + context,
                 {std::string("'") + word + "'"});
        get();
    }

    // ---- polynomial expressions ----

    Polynomial parse_expr(const RingPtr& ring) {
        Polynomial acc = parse_term(ring);
        while (true) {
            if (accept(Token::Type::Plus)) {
                acc = checked(acc + parse_term(ring));
            } else if (accept(Token::Type::Minus)) {
                acc = checked(acc - parse_term(ring));
            } else {
                return acc;
            }
        }
    }

private:
    Polynomial mul_checked(const Polynomial& a, const Polynomial& b) {
        spend(a.nterms() * b.nterms() + 1);
        return checked(a * b);
    }

    Polynomial parse_term(const RingPtr& ring) {
        Polynomial acc = parse_factor(ring);
        while (true) {
            if (accept(Token::Type::Star)) {
                acc = mul_checked(acc, parse_factor(ring));
            } else if (peek().type == Token::Type::Slash) {
                // Division by a constant. The ring declaration's '/' sits
                // between ']' and '(' and never reaches expression context.
                const Token& slash = get();
                Polynomial d = parse_factor(ring);
                if (d.is_zero()) fail(slash.line, slash.col, "division by zero");
                if (d.nterms() != 1 || !d.leading_term().mono.is_one())
                    fail(slash.line, slash.col, "division only by nonzero constants");
                acc = acc.scaled(d.leading_term().coeff.inverse());
            } else if (peek().type == Token::Type::Ident || peek().type == Token::Type::Int ||
                       peek().type == Token::Type::LParen) {
                acc = mul_checked(acc, parse_factor(ring)); // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor(const RingPtr& ring) {
        bool neg = false;
        while (true) {
            if (accept(Token::Type::Minus)) {
                neg = !neg;
            } else if (accept(Token::Type::Plus)) {
            } else {
                break;
            }
        }
        Polynomial base = parse_primary(ring);
        if (accept(Token::Type::Caret)) {
            const Token& e = expect(Token::Type::Int, "exponent");
            size_t exp = parse_bounded(e, kMaxExponent, "exponent");
            if (base.nterms() == 1) {
                // monomial powers are a single exponent bump
                spend(exp / 64 + 1);
                const auto& t = base.leading_term();
                std::vector<uint32_t> exps = t.mono.exponents();
                for (auto& v : exps) {
                    uint64_t big = uint64_t(v) * exp;
                    if (big > kMaxExponent) fail(e.line, e.col, "exponent out of range");
                    v = static_cast<uint32_t>(big);
                }
                mpz_class c;
                mpz_pow_ui(c.get_mpz_t(), t.coeff.value().get_num().get_mpz_t(),
                           static_cast<unsigned long>(exp));
                mpz_class den;
                mpz_pow_ui(den.get_mpz_t(), t.coeff.value().get_den().get_mpz_t(),
                           static_cast<unsigned long>(exp));
                base = Polynomial::term(ring, Monomial(exps),
                                        Scalar::from_fraction(ring->field, c, den));
            } else {
                Polynomial pow = Polynomial::constant(ring, 1);
                for (size_t k = 0; k < exp; ++k) pow = mul_checked(pow, base);
                base = std::move(pow);
            }
        }
        return neg ? -base : base;
    }

    // Work budget: every expression-level operation spends term-products, so
    // hostile inputs abort in bounded time instead of grinding.
    void spend(size_t cost) {
        work_ += cost;
        if (work_ > kMaxWork)
            fail(peek().line, peek().col, "expression too large");
    }

    Polynomial parse_primary(const RingPtr& ring) {
        const Token& t = peek();
        if (t.type == Token::Type::Int) {
            get();
            return Polynomial::constant(ring, Scalar::from_mpz(ring->field, mpz_class(t.text)));
        }
        if (t.type == Token::Type::Ident) {
            get();
            auto idx = ring->var_index(t.text);
            if (!idx) fail(t.line, t.col, "unknown variable '" + t.text + "'");
            return Polynomial::variable(ring, *idx);
        }
        if (t.type == Token::Type::LParen) {
            get();
            Polynomial inner = parse_expr(ring);
            expect(Token::Type::RParen, "parenthesized expression");
            return inner;
        }
        fail(t.line, t.col, std::string("unexpected ") + token_name(t.type) + " in expression",
             {"integer", "identifier", "'('"});
    }

    Polynomial checked(Polynomial p) {
        if (p.nterms() > kMaxTerms)
            fail(peek().line, peek().col, "expression too large");
        return p;
    }

    size_t work_ = 0;

public:
    size_t parse_bounded(const Token& t, size_t bound, const char* what) {
        if (t.text.size() > 12) fail(t.line, t.col, std::string(what) + " out of range");
        size_t v = std::stoull(t.text);
        if (v > bound) fail(t.line, t.col, std::string(what) + " out of range");
        return v;
    }

    int64_t parse_signed(const char* context) {
        bool neg = accept(Token::Type::Minus);
        const Token& t = expect(Token::Type::Int, context);
        if (t.text.size() > 9) fail(t.line, t.col, "integer out of range");
        int64_t v = std::stol(t.text);
        if (v > kMaxDegreeShift) fail(t.line, t.col, "integer out of range");
        return neg ? -v : v;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

std::vector<std::string> parse_name_list(Parser& p, const char* context) {
    std::vector<std::string> names;
    if (p.peek().type == Token::Type::Ident) {
        names.push_back(p.expect_ident(context));
        while (p.accept(Token::Type::Comma)) names.push_back(p.expect_ident(context));
    }
    return names;
}

std::vector<Polynomial> parse_poly_list_until(Parser& p, const RingPtr& ring,
                                              Token::Type closer, const char* context) {
    std::vector<Polynomial> polys;
    if (p.peek().type != closer) {
        polys.push_back(p.parse_expr(ring));
        while (p.accept(Token::Type::Comma)) polys.push_back(p.parse_expr(ring));
    }
    p.expect(closer, context);
    return polys;
}

std::vector<std::vector<Polynomial>> parse_columns(Parser& p, const RingPtr& ring, size_t rank,
                                                   const char* context) {
    std::vector<std::vector<Polynomial>> cols;
    p.expect(Token::Type::LBracket, context);
    while (p.peek().type != Token::Type::RBracket) {
        const Token& open = p.peek();
        p.expect(Token::Type::LBracket, "relation column");
        auto col = parse_poly_list_until(p, ring, Token::Type::RBracket, "relation column");
        if (col.size() != rank)
            fail(open.line, open.col,
                 "relation column has " + std::to_string(col.size()) + " entries, expected " +
                     std::to_string(rank));
        cols.push_back(std::move(col));
        if (!p.accept(Token::Type::Comma)) break;
    }
    p.expect(Token::Type::RBracket, context);
    return cols;
}

} // namespace

ParseResult parse_problem(std::string_view text) {
    try {
        Parser p(text);
        ProblemFile pf;
        pf.source_text = std::string(text);
        bool field_given = false;
        bool ring_given = false;
        bool mode_given = false;
        bool window_given = false;

        while (p.peek().type != Token::Type::End) {
            if (p.accept(Token::Type::Newline)) continue;
            const Token& head = p.peek();
            if (head.type != Token::Type::Ident)
                fail(head.line, head.col,
                     std::string("unexpected ") + token_name(head.type) +
                         " at start of statement",
                     {"'field'", "'ring'", "'module'", "'graded'", "'option'"});

            if (head.text == "field") {
                p.get();
                if (field_given) fail(head.line, head.col, "duplicate field declaration");
                if (ring_given)
                    fail(head.line, head.col, "field must be declared before the ring");
                const Token& f = p.peek();
                std::string which = p.expect_ident("field declaration");
                if (which == "Q") {
                    pf.field = FieldSpec{0};
                } else if (which == "Fp") {
                    const Token& prime = p.expect(Token::Type::Int, "field declaration");
                    size_t v = p.parse_bounded(prime, (size_t(1) << 31) - 1, "prime");
                    if (!is_prime_u32(static_cast<uint32_t>(v)))
                        fail(prime.line, prime.col, prime.text + " is not prime");
                    pf.field = FieldSpec{static_cast<uint32_t>(v)};
                } else {
                    fail(f.line, f.col, "unknown field '" + which + "'", {"'Q'", "'Fp <prime>'"});
                }
                field_given = true;
            } else if (head.text == "ring") {
                p.get();
                if (ring_given) fail(head.line, head.col, "duplicate ring declaration");
                pf.ring_decl.name = p.expect_ident("ring declaration");
                p.expect(Token::Type::Eq, "ring declaration");
                p.expect_keyword("k", "ring declaration");
                p.expect(Token::Type::LBracket, "ring declaration");
                pf.ring_decl.vars = parse_name_list(p, "ring variables");
                p.expect(Token::Type::RBracket, "ring declaration");
                p.expect(Token::Type::Slash, "ring declaration");
                p.expect(Token::Type::LParen, "defining ideal");
                pf.affine_ring =
                    Ring::make(pf.field, pf.ring_decl.vars, MonomialOrder::degrevlex());
                pf.ring_decl.jgens =
                    parse_poly_list_until(p, pf.affine_ring, Token::Type::RParen, "defining ideal");
                for (const auto& g : pf.ring_decl.jgens)
                    if (!g.constant_term().is_zero())
                        fail(head.line, head.col,
                             "defining ideal generator '" + g.to_string() +
                                 "' has a constant term: quotient is not local at the origin");
                ring_given = true;
            } else if (head.text == "module") {
                p.get();
                if (!ring_given) fail(head.line, head.col, "module declared before ring");
                if (pf.module_decl) fail(head.line, head.col, "duplicate module declaration");
                ModuleDecl md;
                md.name = p.expect_ident("module declaration");
                p.expect_keyword("over", "module declaration");
                const Token& rn = p.peek();
                std::string ring_name = p.expect_ident("module declaration");
                if (ring_name != pf.ring_decl.name)
                    fail(rn.line, rn.col, "unknown ring '" + ring_name + "'");
                p.expect_keyword("generators", "module declaration");
                md.rank = p.parse_bounded(p.expect(Token::Type::Int, "generator count"), kMaxRank,
                                          "generator count");
                p.expect_keyword("relations", "module declaration");
                md.columns = parse_columns(p, pf.affine_ring, md.rank, "relations");
                pf.module_decl = std::move(md);
            } else if (head.text == "graded") {
                p.get();
                if (!ring_given) fail(head.line, head.col, "graded module declared before ring");
                if (pf.graded_decl) fail(head.line, head.col, "duplicate graded declaration");
                GradedDecl gd;
                gd.name = p.expect_ident("graded declaration");
                p.expect_keyword("over", "graded declaration");
                const Token& rn = p.peek();
                std::string ring_name = p.expect_ident("graded declaration");
                if (ring_name != pf.ring_decl.name)
                    fail(rn.line, rn.col, "unknown ring '" + ring_name + "'");
                p.expect_keyword("xvars", "graded declaration");
                p.expect(Token::Type::LBracket, "x-variables");
                gd.xvars = parse_name_list(p, "x-variables");
                p.expect(Token::Type::RBracket, "x-variables");
                if (gd.xvars.empty())
                    fail(rn.line, rn.col, "graded module needs at least one x-variable");
                p.expect_keyword("degrees", "graded declaration");
                p.expect(Token::Type::LBracket, "generator degrees");
                if (p.peek().type != Token::Type::RBracket) {
                    gd.degrees.push_back(p.parse_signed("generator degree"));
                    while (p.accept(Token::Type::Comma))
                        gd.degrees.push_back(p.parse_signed("generator degree"));
                }
                p.expect(Token::Type::RBracket, "generator degrees");
                std::vector<std::string> names = pf.ring_decl.vars;
                names.insert(names.end(), gd.xvars.begin(), gd.xvars.end());
                pf.graded_ring = Ring::make(pf.field, std::move(names),
                                            MonomialOrder::block(pf.ring_decl.vars.size()));
                p.expect_keyword("relations", "graded declaration");
                gd.columns = parse_columns(p, pf.graded_ring, gd.degrees.size(), "relations");
                // x-homogeneity relative to the generator degrees
                for (const auto& col : gd.columns) {
                    std::optional<int64_t> coldeg;
                    for (size_t i = 0; i < col.size(); ++i)
                        for (const auto& t : col[i].terms()) {
                            int64_t internal =
                                static_cast<int64_t>(pf.graded_ring->xdeg(t.mono)) +
                                gd.degrees[i];
                            if (!coldeg) coldeg = internal;
                            if (*coldeg != internal)
                                fail(head.line, head.col,
                                     "relation column is not x-homogeneous relative to the "
                                     "generator degrees");
                        }
                }
                pf.graded_decl = std::move(gd);
            } else if (head.text == "option") {
                p.get();
                std::string which = p.expect_ident("option");
                p.expect(Token::Type::Eq, "option");
                if (which == "mode") {
                    if (mode_given) fail(head.line, head.col, "duplicate mode option");
                    const Token& m = p.peek();
                    std::string kind = p.expect_ident("mode option");
                    if (kind == "powers") {
                        p.expect(Token::Type::Minus, "mode option");
                        p.expect_keyword("only", "mode option");
                        pf.options.mode = AnalysisMode::powers_only();
                    } else if (kind == "enum") {
                        size_t c = p.parse_bounded(p.expect(Token::Type::Int, "mode option"),
                                                   1000000, "colength bound");
                        pf.options.mode = AnalysisMode::enumeration(c);
                    } else if (kind == "truncated") {
                        size_t nmax = p.parse_bounded(p.expect(Token::Type::Int, "mode option"),
                                                      1000000, "order bound");
                        pf.options.mode = AnalysisMode::truncated(nmax);
                    } else {
                        fail(m.line, m.col, "unknown mode '" + kind + "'",
                             {"'powers-only'", "'enum <c>'", "'truncated <N>'"});
                    }
                    pf.options.mode_given = true;
                    mode_given = true;
                } else if (which == "window") {
                    if (window_given) fail(head.line, head.col, "duplicate window option");
                    DegreeWindow w;
                    w.lo = p.parse_signed("window");
                    p.expect(Token::Type::DotDot, "window");
                    w.hi = p.parse_signed("window");
                    if (w.hi < w.lo) fail(head.line, head.col, "empty window");
                    pf.options.window = w;
                    window_given = true;
                } else {
                    fail(head.line, head.col, "unknown option '" + which + "'",
                         {"'mode'", "'window'"});
                }
            } else {
                fail(head.line, head.col, "unknown statement '" + head.text + "'",
                     {"'field'", "'ring'", "'module'", "'graded'", "'option'"});
            }
            if (p.peek().type != Token::Type::End) p.expect(Token::Type::Newline, "statement");
        }

        if (!ring_given) {
            fail(1, 1, "missing ring declaration");
        }
        return ParseResult{std::move(pf), std::nullopt};
    } catch (const ParseAbort& a) {
        return ParseResult{std::nullopt, a.diag};
    } catch (const Error& e) {
        return ParseResult{std::nullopt, Diagnostic{0, 0, e.what(), {}}};
    }
}

std::string print_problem(const ProblemFile& pf) {
    std::string out;
    out += "field " + (pf.field.is_rational()
                           ? std::string("Q")
                           : "Fp " + std::to_string(pf.field.characteristic)) +
           "\n";
    out += "ring " + pf.ring_decl.name + " = k[";
    for (size_t i = 0; i < pf.ring_decl.vars.size(); ++i) {
        if (i) out += ", ";
        out += pf.ring_decl.vars[i];
    }
    out += "] / (";
    for (size_t i = 0; i < pf.ring_decl.jgens.size(); ++i) {
        if (i) out += ", ";
        out += pf.ring_decl.jgens[i].to_string();
    }
    out += ")\n";

    auto print_columns = [](const std::vector<std::vector<Polynomial>>& cols) {
        std::string s = "[";
        for (size_t j = 0; j < cols.size(); ++j) {
            if (j) s += ",";
            s += " [";
            for (size_t i = 0; i < cols[j].size(); ++i) {
                if (i) s += ", ";
                s += cols[j][i].to_string();
            }
            s += "]";
        }
        s += cols.empty() ? "]" : " ]";
        return s;
    };

    if (pf.module_decl) {
        const auto& md = *pf.module_decl;
        out += "module " + md.name + " over " + pf.ring_decl.name + " generators " +
               std::to_string(md.rank) + " relations " + print_columns(md.columns) + "\n";
    }
    if (pf.graded_decl) {
        const auto& gd = *pf.graded_decl;
        out += "graded " + gd.name + " over " + pf.ring_decl.name + " xvars [";
        for (size_t i = 0; i < gd.xvars.size(); ++i) {
            if (i) out += ", ";
            out += gd.xvars[i];
        }
        out += "] degrees [";
        for (size_t i = 0; i < gd.degrees.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(gd.degrees[i]);
        }
        out += "] relations " + print_columns(gd.columns) + "\n";
    }
    if (pf.options.mode_given) {
        out += "option mode = ";
        switch (pf.options.mode.kind) {
            case AnalysisMode::Kind::PowersOnly: out += "powers-only"; break;
            case AnalysisMode::Kind::Enumeration:
                out += "enum " + std::to_string(pf.options.mode.limit);
                break;
            case AnalysisMode::Kind::Truncated:
                out += "truncated " + std::to_string(pf.options.mode.limit);
                break;
        }
        out += "\n";
    }
    if (pf.options.window)
        out += "option window = " + std::to_string(pf.options.window->lo) + ".." +
               std::to_string(pf.options.window->hi) + "\n";
    return out;
}

bool ProblemFile::same_abstract_form(const ProblemFile& o) const {
    auto cols_eq = [](const std::vector<std::vector<Polynomial>>& a,
                      const std::vector<std::vector<Polynomial>>& b) {
        if (a.size() != b.size()) return false;
        for (size_t j = 0; j < a.size(); ++j) {
            if (a[j].size() != b[j].size()) return false;
            for (size_t i = 0; i < a[j].size(); ++i)
                if (!(a[j][i] == b[j][i])) return false;
        }
        return true;
    };
    if (field != o.field) return false;
    if (ring_decl.name != o.ring_decl.name || ring_decl.vars != o.ring_decl.vars) return false;
    if (ring_decl.jgens.size() != o.ring_decl.jgens.size()) return false;
    for (size_t i = 0; i < ring_decl.jgens.size(); ++i)
        if (!(ring_decl.jgens[i] == o.ring_decl.jgens[i])) return false;
    if (module_decl.has_value() != o.module_decl.has_value()) return false;
    if (module_decl) {
        if (module_decl->name != o.module_decl->name ||
            module_decl->rank != o.module_decl->rank ||
            !cols_eq(module_decl->columns, o.module_decl->columns))
            return false;
    }
    if (graded_decl.has_value() != o.graded_decl.has_value()) return false;
    if (graded_decl) {
        if (graded_decl->name != o.graded_decl->name ||
            graded_decl->xvars != o.graded_decl->xvars ||
            graded_decl->degrees != o.graded_decl->degrees ||
            !cols_eq(graded_decl->columns, o.graded_decl->columns))
            return false;
    }
    if (options.mode_given != o.options.mode_given) return false;
    if (options.mode_given && (options.mode.kind != o.options.mode.kind ||
                               options.mode.limit != o.options.mode.limit))
        return false;
    if (options.window.has_value() != o.options.window.has_value()) return false;
    if (options.window && (options.window->lo != o.options.window->lo ||
                           options.window->hi != o.options.window->hi))
        return false;
    return true;
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    try {
        Parser p(text);
        Polynomial out = p.parse_expr(ring);
        while (p.accept(Token::Type::Newline)) {
        }
        if (p.peek().type != Token::Type::End)
            fail(p.peek().line, p.peek().col, "trailing input after expression");
        return out;
    } catch (const ParseAbort& a) {
        throw Error(Errc::InvalidArgument, a.diag.render());
    }
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text) {
    try {
        Parser p(text);
        std::vector<Polynomial> out;
        out.push_back(p.parse_expr(ring));
        while (p.accept(Token::Type::Comma)) out.push_back(p.parse_expr(ring));
        while (p.accept(Token::Type::Newline)) {
        }
        if (p.peek().type != Token::Type::End)
            fail(p.peek().line, p.peek().col, "trailing input after expression list");
        return out;
    } catch (const ParseAbort& a) {
        throw Error(Errc::InvalidArgument, a.diag.render());
    }
}

} // namespace flatlab
