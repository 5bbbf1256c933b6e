#include "lynpbw/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace lynpbw {

bool Context::same(const Context& other) const {
    if (!field || !other.field || !alphabet || !other.alphabet) return false;
    if (!field->same(*other.field)) return false;
    if (alphabet == other.alphabet) return true;
    return alphabet->names == other.alphabet->names && alphabet->degrees == other.alphabet->degrees;
}

void Context::check_same(const Context& other) const {
    if (!field || !other.field || !field->same(*other.field))
        raise(Errc::FieldMismatch, "polynomial contexts use different fields");
    if (!same(other)) raise(Errc::AlphabetMismatch, "polynomial contexts use different alphabets");
}

// ---- Polynomial ----

Polynomial Polynomial::monomial(const Context& ctx, const Word& w, const Scalar& c) {
    Polynomial f(ctx);
    if (!c.is_zero()) f.terms_.emplace_back(w, c);
    return f;
}

Polynomial Polynomial::unit(const Context& ctx) {
    return monomial(ctx, Word{}, Scalar::one(ctx.field));
}

Scalar Polynomial::coeff(const Word& w) const {
    for (const auto& [word, c] : terms_)
        if (word == w) return c;
    return Scalar::zero(ctx_.field);
}

void Polynomial::insert_term(const Word& w, const Scalar& c) {
    for (auto& [word, coef] : terms_) {
        if (word == w) {
            coef += c;
            return;
        }
    }
    terms_.emplace_back(w, c);
}

void Polynomial::normalize() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const auto& t) { return t.second.is_zero(); }),
                 terms_.end());
    const Alphabet& a = *ctx_.alphabet;
    std::sort(terms_.begin(), terms_.end(),
              [&a](const auto& s, const auto& t) { return glex_less(a, t.first, s.first); });
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    ctx_.check_same(g.ctx_);
    Polynomial r = *this;
    for (const auto& [w, c] : g.terms_) r.insert_term(w, c);
    r.normalize();
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::scale(const Scalar& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [w, coef] : r.terms_) coef = coef * c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    ctx_.check_same(g.ctx_);
    Polynomial r(ctx_);
    for (const auto& [u, cu] : terms_) {
        for (const auto& [v, cv] : g.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.insert_term(w, cu * cv);
        }
    }
    r.normalize();
    return r;
}

std::pair<Word, Scalar> Polynomial::leading() const {
    if (terms_.empty()) raise(Errc::ZeroPolynomial, "leading word of zero");
    return terms_.front();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    Degree d = word_degree(*ctx_.alphabet, terms_.front().first);
    for (const auto& [w, c] : terms_)
        if (word_degree(*ctx_.alphabet, w) != d) return false;
    return true;
}

Degree Polynomial::homogeneous_degree() const {
    if (terms_.empty()) raise(Errc::ZeroPolynomial, "degree of zero polynomial");
    if (!is_homogeneous()) raise(Errc::Inhomogeneous, "polynomial is not homogeneous");
    return word_degree(*ctx_.alphabet, terms_.front().first);
}

bool Polynomial::operator==(const Polynomial& g) const {
    ctx_.check_same(g.ctx_);
    return terms_ == g.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) {
                out << "-";
                cs = cs.substr(1);
            }
            first = false;
        } else {
            out << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool needs_paren = cs.find_first_of("+-") != std::string::npos &&
                           cs.find_first_of("+-") != 0;
        std::string word = word_str(*ctx_.alphabet, w);
        if (w.empty()) {
            if (needs_paren) out << "(" << cs << ")";
            else out << cs;
        } else if (cs == "1") {
            out << word;
        } else {
            if (needs_paren) out << "(" << cs << ")";
            else out << cs;
            out << "*" << word;
        }
    }
    return out.str();
}

// ---- TensorPolynomial ----

TensorPolynomial TensorPolynomial::simple(const Context& ctx, const Word& u, const Word& v,
                                          const Scalar& c) {
    TensorPolynomial t(ctx);
    if (!c.is_zero()) t.terms_.push_back({{u, v}, c});
    return t;
}

TensorPolynomial TensorPolynomial::unit(const Context& ctx) {
    return simple(ctx, Word{}, Word{}, Scalar::one(ctx.field));
}

TensorPolynomial TensorPolynomial::tensor(const Polynomial& f, const Polynomial& g) {
    f.ctx().check_same(g.ctx());
    TensorPolynomial t(f.ctx());
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms()) t.terms_.push_back({{u, v}, cu * cv});
    t.normalize();
    return t;
}

void TensorPolynomial::insert_term(const Word& u, const Word& v, const Scalar& c) {
    for (auto& [key, coef] : terms_) {
        if (key.first == u && key.second == v) {
            coef += c;
            return;
        }
    }
    terms_.push_back({{u, v}, c});
}

void TensorPolynomial::normalize() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const auto& t) { return t.second.is_zero(); }),
                 terms_.end());
    const Alphabet& a = *ctx_.alphabet;
    std::sort(terms_.begin(), terms_.end(), [&a](const auto& s, const auto& t) {
        Cmp c = compare_glex(a, t.first.first, s.first.first);
        if (c == Cmp::Less) return true;
        if (c == Cmp::Greater) return false;
        return glex_less(a, t.first.second, s.first.second);
    });
}

TensorPolynomial TensorPolynomial::operator+(const TensorPolynomial& t) const {
    ctx_.check_same(t.ctx_);
    TensorPolynomial r = *this;
    for (const auto& [key, c] : t.terms_) r.insert_term(key.first, key.second, c);
    r.normalize();
    return r;
}

TensorPolynomial TensorPolynomial::operator-() const {
    TensorPolynomial r = *this;
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

TensorPolynomial TensorPolynomial::operator-(const TensorPolynomial& t) const {
    return *this + (-t);
}

TensorPolynomial TensorPolynomial::scale(const Scalar& c) const {
    TensorPolynomial r(ctx_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [key, coef] : r.terms_) coef = coef * c;
    return r;
}

bool TensorPolynomial::operator==(const TensorPolynomial& t) const {
    ctx_.check_same(t.ctx_);
    return terms_ == t.terms_;
}

bool TensorPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const Alphabet& a = *ctx_.alphabet;
    Degree d = add_degree(word_degree(a, terms_.front().first.first),
                          word_degree(a, terms_.front().first.second));
    for (const auto& [key, c] : terms_)
        if (add_degree(word_degree(a, key.first), word_degree(a, key.second)) != d) return false;
    return true;
}

Degree TensorPolynomial::homogeneous_degree() const {
    if (terms_.empty()) raise(Errc::ZeroPolynomial, "degree of zero tensor");
    if (!is_homogeneous()) raise(Errc::Inhomogeneous, "tensor is not homogeneous");
    const Alphabet& a = *ctx_.alphabet;
    return add_degree(word_degree(a, terms_.front().first.first),
                      word_degree(a, terms_.front().first.second));
}

std::string TensorPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) {
                out << "-";
                cs = cs.substr(1);
            }
            first = false;
        } else {
            out << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool plain = cs.find_first_of("+-*") == std::string::npos;
        if (cs != "1") {
            if (plain) out << cs << "*";
            else out << "(" << cs << ")*";
        }
        out << "(" << word_str(*ctx_.alphabet, key.first) << ")ox("
            << word_str(*ctx_.alphabet, key.second) << ")";
    }
    return out.str();
}

} // namespace lynpbw
