#include "lynpbw/coalg.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lynpbw/linalg.hpp"

namespace lynpbw {

namespace {

std::vector<Scalar> coeff_row(const Polynomial& f, const std::vector<Word>& cols,
                              const FieldPtr& field) {
    std::vector<Scalar> row(cols.size(), Scalar::zero(field));
    for (const auto& [w, c] : f.terms()) {
        auto it = std::find(cols.begin(), cols.end(), w);
        if (it == cols.end()) raise(Errc::ValidationError, "normal form outside the word basis");
        row[(std::size_t)(it - cols.begin())] = c;
    }
    return row;
}

Word word_power(const Word& u, long n) {
    Word w;
    for (long k = 0; k < n; ++k) w.insert(w.end(), u.begin(), u.end());
    return w;
}

} // namespace

Comultiplication Comultiplication::standard(const Context& ctx, const Bicharacter& chi) {
    std::vector<TensorPolynomial> images;
    Scalar one = Scalar::one(ctx.field);
    for (int i = 0; i < ctx.alphabet->size(); ++i)
        images.push_back(TensorPolynomial::simple(ctx, {}, {i}, one) +
                         TensorPolynomial::simple(ctx, {i}, {}, one));
    return make(ctx, std::move(images), chi);
}

Comultiplication Comultiplication::make(const Context& ctx, std::vector<TensorPolynomial> images,
                                        const Bicharacter& chi) {
    const Alphabet& a = *ctx.alphabet;
    if ((int)images.size() != a.size())
        raise(Errc::ValidationError, "need one image per letter");
    Comultiplication c;
    c.ctx_ = ctx;
    c.chi_ = chi;
    c.left_ = c.right_ = true;
    for (int x = 0; x < a.size(); ++x) {
        const TensorPolynomial& img = images[(std::size_t)x];
        Degree dx = a.degrees[(std::size_t)x];
        bool unit_left = false, unit_right = false;
        for (const auto& [key, coef] : img.terms()) {
            const auto& [l, r] = key;
            if (add_degree(word_degree(a, l), word_degree(a, r)) != dx)
                raise(Errc::DegreeMismatch, "letter image is not homogeneous of the letter degree");
            if (l.empty()) {
                if (r != Word{x} || !coef.is_one())
                    raise(Errc::CounitViolation, "image must contain 1(x)x with coefficient 1");
                unit_right = true;
            } else if (r.empty()) {
                if (l != Word{x} || !coef.is_one())
                    raise(Errc::CounitViolation, "image must contain x(x)1 with coefficient 1");
                unit_left = true;
            } else {
                for (int y : l)
                    if (y >= x) c.left_ = false;
                for (int y : r)
                    if (y >= x) c.right_ = false;
            }
        }
        if (!unit_left || !unit_right)
            raise(Errc::CounitViolation, "image misses a unit term");
    }
    c.images_ = std::move(images);
    return c;
}

TensorPolynomial Comultiplication::apply(const Polynomial& f) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& memo_ = cache_->memo;
    // word images are built once and cached; the extension is linear
    std::function<const TensorPolynomial&(const Word&)> of_word =
        [&](const Word& w) -> const TensorPolynomial& {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        TensorPolynomial t(ctx_);
        if (w.empty()) {
            t = TensorPolynomial::unit(ctx_);
        } else {
            Word rest(w.begin() + 1, w.end());
            t = tensor_mul(images_[(std::size_t)w[0]], of_word(rest), chi_);
        }
        return memo_.emplace(w, std::move(t)).first->second;
    };
    TensorPolynomial out(ctx_);
    for (const auto& [w, c] : f.terms()) out += of_word(w).scale(c);
    return out;
}

bool biideal_check(const Comultiplication& c, const GroebnerBasis& gb) {
    for (const Polynomial& g : gb.elements()) {
        TensorPolynomial reduced(gb.ctx());
        TensorPolynomial image = c.apply(g);
        for (const auto& [key, coef] : image.terms()) {
            Polynomial l = gb.normal_form(
                Polynomial::monomial(gb.ctx(), key.first, Scalar::one(gb.ctx().field)));
            Polynomial r = gb.normal_form(
                Polynomial::monomial(gb.ctx(), key.second, Scalar::one(gb.ctx().field)));
            reduced += TensorPolynomial::tensor(l, r).scale(coef);
        }
        if (!reduced.is_zero()) return false;
    }
    return true;
}

bool coproduct_formula_check(const Comultiplication& c, const Word& w, const Word& u, long n,
                             BracketMode mode, Side side) {
    const Context& ctx = c.ctx();
    const Alphabet& a = *ctx.alphabet;
    if (!is_lyndon(u)) raise(Errc::PreconditionViolated, "u must be Lyndon");
    for (const Word& atom : lyndon_decompose(w))
        if (!lex_less(atom, u))
            raise(Errc::PreconditionViolated, "atoms of w must be below u");
    if (side == Side::Left ? !c.left_bounded() : !c.right_bounded())
        raise(Errc::PreconditionViolated, "comultiplication unbounded on the chosen side");

    Bracketer br(ctx, c.chi(), mode);
    Word wun = w;
    for (long k = 0; k < n; ++k) wun.insert(wun.end(), u.begin(), u.end());

    Scalar q = c.chi().eval(word_degree(a, u), word_degree(a, u));
    Scalar tau_wu = c.chi().eval(word_degree(a, w), word_degree(a, u));

    TensorPolynomial sum(ctx);
    for (long i = 0; i <= n; ++i) {
        Scalar coef = qbinom(n, i, q);
        if (side == Side::Left) {
            coef = coef * tau_wu.pow(i);
            Word tail = word_power(u, n - i);
            Word right = w;
            right.insert(right.end(), tail.begin(), tail.end());
            sum += TensorPolynomial::tensor(br.bracket(word_power(u, i)), br.bracket(right))
                       .scale(coef);
        } else {
            Word tail = word_power(u, i);
            Word left = w;
            left.insert(left.end(), tail.begin(), tail.end());
            sum += TensorPolynomial::tensor(br.bracket(left), br.bracket(word_power(u, n - i)))
                       .scale(coef);
        }
    }
    if (!w.empty()) {
        if (side == Side::Left)
            sum += TensorPolynomial::tensor(br.bracket(wun), Polynomial::unit(ctx));
        else
            sum += TensorPolynomial::tensor(Polynomial::unit(ctx), br.bracket(wun));
    }
    TensorPolynomial rem = c.apply(br.bracket(wun)) - sum;

    // the confined leg must expand over brackets of words m u^i with m a
    // nonempty word whose atoms are all below u
    auto shape_ok = [&](const Word& s) {
        std::vector<Word> atoms = lyndon_decompose(s);
        while (!atoms.empty() && atoms.back() == u) atoms.pop_back();
        if (atoms.empty()) return false;
        for (const Word& atom : atoms)
            if (!lex_less(atom, u)) return false;
        return true;
    };
    std::map<Word, Polynomial> groups;  // keyed by the free leg's word
    for (const auto& [key, coef] : rem.terms()) {
        const Word& free_leg = side == Side::Left ? key.second : key.first;
        const Word& conf_leg = side == Side::Left ? key.first : key.second;
        if (free_leg.empty()) return false;  // the free leg must be positive
        auto it = groups.find(free_leg);
        if (it == groups.end()) it = groups.emplace(free_leg, Polynomial(ctx)).first;
        it->second += Polynomial::monomial(ctx, conf_leg, coef);
    }
    for (auto& [leg, poly] : groups)
        for (const auto& [word, coef] : br.basis_solve(poly))
            if (!shape_ok(word)) return false;
    return true;
}

CheckReport coideal_check(const PBWData& p, const Comultiplication& c, int xi, Side side) {
    CheckReport rep;
    const Context& ctx = p.gb.ctx();
    std::vector<std::size_t> all_xi;
    if (xi < 0)
        for (std::size_t i = 0; i < p.generators.size(); ++i) all_xi.push_back(i);
    else
        all_xi.push_back((std::size_t)xi);

    std::vector<Degree> degrees;
    {
        std::set<Degree> seen;
        for (const Word& w : enumerate_words(*ctx.alphabet, WordMode::AllWords, p.D))
            seen.insert(word_degree(*ctx.alphabet, w));
        degrees.assign(seen.begin(), seen.end());
    }

    for (std::size_t top : all_xi) {
        std::vector<std::size_t> sub(top + 1);
        for (std::size_t i = 0; i <= top; ++i) sub[i] = i;
        // span of the subalgebra's normal forms, per degree
        std::map<Degree, Echelon> spans;
        std::map<Degree, std::vector<Word>> columns;
        for (const Degree& d : degrees) {
            columns.emplace(d, p.gb.irreducible_words_of_degree(IrrMode::All, d));
            Echelon ech(ctx.field, columns.at(d).size());
            for (const PBWMonomial& m : pbw_monomials_of_degree(p, d, sub))
                ech.add(coeff_row(p.gb.normal_form(pbw_monomial_element(p, m)), columns.at(d),
                                  ctx.field));
            spans.emplace(d, std::move(ech));
        }
        for (const Degree& gamma : degrees) {
            for (const PBWMonomial& m : pbw_monomials_of_degree(p, gamma, sub)) {
                Polynomial f = p.gb.normal_form(pbw_monomial_element(p, m));
                std::map<Word, Polynomial> groups;  // keyed by the free leg
                TensorPolynomial image = c.apply(f);
                for (const auto& [key, coef] : image.terms()) {
                    Polynomial l = p.gb.normal_form(Polynomial::monomial(
                        ctx, key.first, Scalar::one(ctx.field)));
                    Polynomial r = p.gb.normal_form(Polynomial::monomial(
                        ctx, key.second, Scalar::one(ctx.field)));
                    // the confined leg is the right one for a left coideal
                    const Polynomial& free_p = side == Side::Left ? l : r;
                    const Polynomial& conf_p = side == Side::Left ? r : l;
                    for (const auto& [fw, fc] : free_p.terms()) {
                        auto it = groups.find(fw);
                        if (it == groups.end()) it = groups.emplace(fw, Polynomial(ctx)).first;
                        it->second += conf_p.scale(coef * fc);
                    }
                }
                for (const auto& [leg, poly] : groups) {
                    if (poly.is_zero()) continue;
                    Degree d = poly.homogeneous_degree();
                    if (!spans.at(d).contains(coeff_row(poly, columns.at(d), ctx.field))) {
                        rep.pass = false;
                        rep.notes.push_back(
                            "coideal violation below z[" +
                            word_str(*ctx.alphabet, p.generators[top].u) + "] at monomial " +
                            pbw_monomial_str(p, m));
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace lynpbw
