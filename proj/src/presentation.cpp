#include "lynpbw/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lynpbw {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    int line = 0;  // 0 means "no line context"

    [[noreturn]] void fail(const std::string& what) const {
        if (line > 0) raise(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
        raise(Errc::SyntaxError, what);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (pos == start) fail("expected a name");
        return s.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start || (s[start] == '-' && pos == start + 1)) fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }
    long uinteger() {
        long v = integer();
        if (v < 0) fail("expected a nonnegative integer");
        return v;
    }
    // the text of a balanced (...) group, consumed including the parens
    std::string paren_group() {
        expect('(');
        std::size_t start = pos;
        int depth = 1;
        while (pos < s.size() && depth > 0) {
            if (s[pos] == '(') ++depth;
            if (s[pos] == ')') --depth;
            ++pos;
        }
        if (depth != 0) fail("unbalanced parentheses");
        return s.substr(start, pos - start - 1);
    }
};

// one summand: signed product of scalar factors and letters
Polynomial parse_poly_term(Lexer& lx, const Context& ctx, const Scalar& sign) {
    const Alphabet& a = *ctx.alphabet;
    Scalar coef = sign;
    Word w;
    bool more = true;
    while (more) {
        char c = lx.peek();
        if (std::isdigit((unsigned char)c)) {
            mpz_class num(std::to_string(lx.uinteger()));
            mpq_class q(num);
            if (lx.eat('/')) q = mpq_class(num, mpz_class(std::to_string(lx.uinteger())));
            q.canonicalize();
            coef = coef * Scalar::of_mpq(ctx.field, q);
        } else if (c == '(') {
            coef = coef * Scalar::parse(ctx.field, lx.paren_group());
        } else if (std::isalpha((unsigned char)c) || c == '_') {
            std::string name = lx.ident();
            long e = 1;
            if (lx.eat('^')) e = lx.uinteger();
            int letter = a.letter_index(name);
            if (letter >= 0) {
                for (long k = 0; k < e; ++k) w.push_back(letter);
            } else if (name == "z" && ctx.field->kind() == FieldKind::Cyclotomic) {
                coef = coef * Scalar::zeta(ctx.field).pow(e);
            } else {
                lx.fail("unknown name '" + name + "'");
            }
        } else {
            lx.fail("expected a factor");
        }
        more = lx.eat('*');
    }
    return Polynomial::monomial(ctx, w, coef);
}

Polynomial parse_poly_at(Lexer& lx, const Context& ctx) {
    Polynomial f(ctx);
    bool first = true;
    for (;;) {
        if (lx.done()) {
            if (first) lx.fail("empty expression");
            break;
        }
        Scalar sign = Scalar::one(ctx.field);
        if (lx.eat('-')) sign = -sign;
        else if (!lx.eat('+') && !first) break;
        f += parse_poly_term(lx, ctx, sign);
        first = false;
    }
    return f;
}

} // namespace

Polynomial parse_poly(const Context& ctx, const std::string& text) {
    Lexer lx{text};
    Polynomial f = parse_poly_at(lx, ctx);
    if (!lx.done()) lx.fail("trailing input after expression");
    return f;
}

TensorPolynomial parse_tensor(const Context& ctx, const std::string& text) {
    Lexer lx{text};
    TensorPolynomial t(ctx);
    bool first = true;
    for (;;) {
        if (lx.done()) {
            if (first) lx.fail("empty tensor expression");
            break;
        }
        Scalar coef = Scalar::one(ctx.field);
        if (lx.eat('-')) coef = -coef;
        else if (!lx.eat('+') && !first) lx.fail("expected '+' or '-'");
        // scalar prefix factors, then (left)ox(right)
        std::string left;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit((unsigned char)c)) {
                mpz_class num(std::to_string(lx.uinteger()));
                mpq_class q(num);
                if (lx.eat('/')) q = mpq_class(num, mpz_class(std::to_string(lx.uinteger())));
                q.canonicalize();
                coef = coef * Scalar::of_mpq(ctx.field, q);
                lx.eat('*');
            } else if (c == '(') {
                std::string group = lx.paren_group();
                if (lx.eat_word("ox")) {
                    left = group;
                    break;
                }
                coef = coef * Scalar::parse(ctx.field, group);
                lx.eat('*');
            } else {
                lx.fail("expected a tensor term");
            }
        }
        std::string right = lx.paren_group();
        t += TensorPolynomial::tensor(parse_poly(ctx, left), parse_poly(ctx, right)).scale(coef);
        first = false;
    }
    return t;
}

Comultiplication Presentation::comultiplication() const {
    std::vector<TensorPolynomial> images;
    Scalar one = Scalar::one(ctx.field);
    for (int x = 0; x < ctx.alphabet->size(); ++x) {
        auto it = comult.find(x);
        if (it != comult.end())
            images.push_back(it->second);
        else
            images.push_back(TensorPolynomial::simple(ctx, {}, {x}, one) +
                             TensorPolynomial::simple(ctx, {x}, {}, one));
    }
    return Comultiplication::make(ctx, std::move(images), chi);
}

bool Presentation::same(const Presentation& other) const {
    if (!ctx.field->same(*other.ctx.field)) return false;
    if (ctx.alphabet->names != other.ctx.alphabet->names) return false;
    if (ctx.alphabet->degrees != other.ctx.alphabet->degrees) return false;
    if (!chi.same(other.chi)) return false;
    if (relations != other.relations) return false;
    if (comult.size() != other.comult.size()) return false;
    for (const auto& [x, img] : comult) {
        auto it = other.comult.find(x);
        if (it == other.comult.end() || !(it->second == img)) return false;
    }
    return max_degree == other.max_degree;
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    FieldPtr field;
    int dim = -1;
    auto alphabet = std::make_shared<Alphabet>();
    bool have_chi = false, have_max = false;
    std::vector<std::pair<int, std::string>> relation_lines;  // parsed after letters settle
    std::vector<std::pair<int, std::string>> comult_lines;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string stripped = raw.substr(0, raw.find('#'));
        Lexer lx{stripped, 0, lineno};
        if (lx.done()) continue;
        std::string key = lx.ident();
        if (key == "field") {
            if (field) lx.fail("field given twice");
            std::string kind = lx.ident();
            if (kind == "rationals") {
                field = Field::rationals();
            } else if (kind == "Fp") {
                if (!lx.eat_word("p=")) lx.fail("expected p=<prime>");
                field = Field::prime_field((unsigned long)lx.uinteger());
            } else if (kind == "cyclotomic") {
                if (!lx.eat_word("n=")) lx.fail("expected n=<int>");
                field = Field::cyclotomic((unsigned long)lx.uinteger());
            } else {
                lx.fail("unknown field '" + kind + "'");
            }
        } else if (key == "grading") {
            if (!lx.eat_word("dim=")) lx.fail("expected dim=<int>");
            dim = (int)lx.uinteger();
            if (dim < 1) raise(Errc::ValidationError, "grading dimension must be positive");
        } else if (key == "letter") {
            if (dim < 0) lx.fail("grading must come before letters");
            std::string name = lx.ident();
            if (alphabet->letter_index(name) >= 0)
                raise(Errc::ValidationError, "duplicate letter '" + name + "'");
            if (!lx.eat_word("degree=")) lx.fail("expected degree=(...)");
            lx.expect('(');
            Degree d;
            do d.push_back(lx.uinteger());
            while (lx.eat(','));
            lx.expect(')');
            if ((int)d.size() != dim) raise(Errc::ValidationError, "degree length != grading dim");
            alphabet->names.push_back(name);
            alphabet->degrees.push_back(d);
        } else if (key == "bicharacter") {
            if (!field || alphabet->names.empty()) lx.fail("bicharacter needs field and letters");
            if (have_chi) lx.fail("bicharacter given twice");
            if (lx.eat_word("trivial")) {
                p.chi = Bicharacter::trivial(field, dim);
            } else {
                if (!lx.eat_word("rows=")) lx.fail("expected trivial or rows=[[..],..]");
                lx.expect('[');
                std::vector<Scalar> entries;
                int rows = 0;
                do {
                    lx.expect('[');
                    int cols = 0;
                    do {
                        std::size_t start = lx.pos;
                        while (lx.pos < lx.s.size() && lx.s[lx.pos] != ',' && lx.s[lx.pos] != ']')
                            ++lx.pos;
                        entries.push_back(
                            Scalar::parse(field, lx.s.substr(start, lx.pos - start)));
                        ++cols;
                    } while (lx.eat(','));
                    lx.expect(']');
                    if (cols != dim) raise(Errc::ValidationError, "bicharacter row length != dim");
                    ++rows;
                } while (lx.eat(','));
                lx.expect(']');
                if (rows != dim) raise(Errc::ValidationError, "bicharacter row count != dim");
                p.chi = Bicharacter(field, dim, std::move(entries));
            }
            have_chi = true;
        } else if (key == "relation") {
            relation_lines.emplace_back(lineno, stripped.substr(lx.pos));
        } else if (key == "comult") {
            comult_lines.emplace_back(lineno, stripped.substr(lx.pos));
        } else if (key == "max_degree") {
            p.max_degree = lx.uinteger();
            have_max = true;
        } else {
            lx.fail("unknown key '" + key + "'");
        }
        if (key != "relation" && key != "comult" && !lx.done()) lx.fail("trailing input");
    }

    if (!field) raise(Errc::SyntaxError, "missing field");
    if (dim < 0) raise(Errc::SyntaxError, "missing grading");
    if (alphabet->names.empty()) raise(Errc::SyntaxError, "no letters");
    if (!have_max) raise(Errc::SyntaxError, "missing max_degree");
    alphabet->validate();
    for (const Degree& d : alphabet->degrees)
        if (total_degree(d) <= 0)
            raise(Errc::ValidationError, "each letter needs a positive degree");
    p.ctx = Context{field, alphabet};
    if (!have_chi) p.chi = Bicharacter::trivial(field, dim);

    for (const auto& [ln, expr] : relation_lines) {
        Polynomial f;
        try {
            f = parse_poly(p.ctx, expr);
        } catch (const Error& e) {
            if (e.code() != Errc::SyntaxError) throw;
            raise(Errc::SyntaxError, "line " + std::to_string(ln) + ": " + e.what());
        }
        if (f.is_zero()) raise(Errc::ValidationError, "zero relation");
        if (!f.is_homogeneous()) raise(Errc::ValidationError, "inhomogeneous relation");
        if (total_degree(f.homogeneous_degree()) > p.max_degree)
            raise(Errc::ValidationError, "relation degree exceeds max_degree");
        p.relations.push_back(f);
    }
    for (const auto& [ln, rest] : comult_lines) {
        Lexer lx{rest, 0, ln};
        std::string name = lx.ident();
        int letter = alphabet->letter_index(name);
        if (letter < 0) lx.fail("unknown letter '" + name + "'");
        lx.expect('=');
        p.comult[letter] = parse_tensor(p.ctx, rest.substr(lx.pos));
    }
    p.comultiplication();  // validates the counit/degree shape of the images
    return p;
}

std::string print_presentation(const Presentation& p) {
    std::ostringstream out;
    const Field& f = *p.ctx.field;
    switch (f.kind()) {
        case FieldKind::Rationals: out << "field rationals\n"; break;
        case FieldKind::PrimeField: out << "field Fp p=" << f.prime() << "\n"; break;
        case FieldKind::Cyclotomic: out << "field cyclotomic n=" << f.cyclotomic_index() << "\n"; break;
    }
    const Alphabet& a = *p.ctx.alphabet;
    out << "grading dim=" << a.grading_dim() << "\n";
    for (int i = 0; i < a.size(); ++i) {
        out << "letter " << a.names[(std::size_t)i] << " degree=(";
        for (int j = 0; j < a.grading_dim(); ++j) {
            if (j) out << ",";
            out << a.degrees[(std::size_t)i][(std::size_t)j];
        }
        out << ")\n";
    }
    if (p.chi.is_trivial()) {
        out << "bicharacter trivial\n";
    } else {
        out << "bicharacter rows=[";
        for (int i = 0; i < a.grading_dim(); ++i) {
            if (i) out << ", ";
            out << "[";
            for (int j = 0; j < a.grading_dim(); ++j) {
                if (j) out << ", ";
                out << p.chi.q(i, j).str();
            }
            out << "]";
        }
        out << "]\n";
    }
    for (const Polynomial& r : p.relations) out << "relation " << r.str() << "\n";
    for (const auto& [x, img] : p.comult)
        out << "comult " << a.names[(std::size_t)x] << " = " << img.str() << "\n";
    out << "max_degree " << p.max_degree << "\n";
    return out.str();
}

} // namespace lynpbw
