#include "lynpbw/braiding.hpp"

namespace lynpbw {

Bicharacter::Bicharacter(FieldPtr field, int theta, std::vector<Scalar> entries)
    : field_(std::move(field)), theta_(theta), entries_(std::move(entries)) {
    if ((int)entries_.size() != theta_ * theta_)
        raise(Errc::ValidationError, "bicharacter matrix must be theta x theta");
    for (const auto& e : entries_) {
        if (!e.field()->same(*field_)) raise(Errc::FieldMismatch, "bicharacter entry field");
        if (e.is_zero()) raise(Errc::ValidationError, "bicharacter entries must be nonzero");
    }
}

Bicharacter Bicharacter::trivial(const FieldPtr& field, int theta) {
    return Bicharacter(field, theta,
                       std::vector<Scalar>((std::size_t)theta * theta, Scalar::one(field)));
}

Scalar Bicharacter::eval(const Degree& alpha, const Degree& beta) const {
    Scalar r = Scalar::one(field_);
    for (int i = 0; i < theta_; ++i) {
        if (alpha[i] == 0) continue;
        for (int j = 0; j < theta_; ++j) {
            if (beta[j] == 0) continue;
            r = r * q(i, j).pow(alpha[i] * beta[j]);
        }
    }
    return r;
}

bool Bicharacter::is_trivial() const {
    for (const auto& e : entries_)
        if (!e.is_one()) return false;
    return true;
}

bool Bicharacter::chi_squared_trivial() const {
    Scalar one = Scalar::one(field_);
    for (int i = 0; i < theta_; ++i) {
        if (q(i, i) * q(i, i) != one) return false;
        for (int j = i + 1; j < theta_; ++j)
            if (q(i, j) * q(j, i) != one) return false;
    }
    return true;
}

bool Bicharacter::same(const Bicharacter& other) const {
    if (theta_ != other.theta_ || !field_->same(*other.field_)) return false;
    return entries_ == other.entries_;
}

Scalar rho_scalar(const Bicharacter& chi, BracketMode mode, const Degree& a, const Degree& b) {
    // the inverse braiding also swaps its arguments: tau^{-1}(u (x) v) moves
    // v leftwards past u at the cost of chi(deg v, deg u)^{-1}
    return mode == BracketMode::Tau ? chi.eval(a, b) : chi.eval(b, a).inverse();
}

Scalar qint(long n, const Scalar& q) {
    Scalar r = Scalar::zero(q.field());
    for (long i = 0; i < n; ++i) r += q.pow(i);
    return r;
}

Scalar qbinom(long n, long i, const Scalar& q) {
    if (i < 0 || i > n) raise(Errc::IndexOutOfRange, "qbinom needs 0 <= i <= n");
    std::vector<Scalar> row(1, Scalar::one(q.field()));  // row for n = 0
    for (long m = 1; m <= n; ++m) {
        std::vector<Scalar> next(m + 1, Scalar::one(q.field()));
        for (long k = 1; k < m; ++k) next[k] = row[k - 1] + q.pow(k) * row[k];
        row = std::move(next);
    }
    return row[i];
}

Polynomial braided_commutator(const Polynomial& f, const Polynomial& g, const Bicharacter& chi,
                              BracketMode mode) {
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ctx().field ? f.ctx() : g.ctx());
    Scalar r = rho_scalar(chi, mode, f.homogeneous_degree(), g.homogeneous_degree());
    return f * g - (g * f).scale(r);
}

TensorPolynomial tensor_mul(const TensorPolynomial& s, const TensorPolynomial& t,
                            const Bicharacter& chi) {
    s.ctx().check_same(t.ctx());
    const Alphabet& a = *s.ctx().alphabet;
    // accumulate via a map to keep the term count manageable
    std::map<std::pair<Word, Word>, Scalar> acc;
    for (const auto& [k1, c1] : s.terms()) {
        Degree dv1 = word_degree(a, k1.second);
        for (const auto& [k2, c2] : t.terms()) {
            Scalar c = c1 * c2 * chi.eval(dv1, word_degree(a, k2.first));
            Word u = k1.first;
            u.insert(u.end(), k2.first.begin(), k2.first.end());
            Word v = k1.second;
            v.insert(v.end(), k2.second.begin(), k2.second.end());
            auto key = std::make_pair(std::move(u), std::move(v));
            auto it = acc.find(key);
            if (it == acc.end()) acc.emplace(std::move(key), c);
            else it->second += c;
        }
    }
    TensorPolynomial r(s.ctx());
    for (const auto& [key, c] : acc)
        if (!c.is_zero()) r += TensorPolynomial::simple(s.ctx(), key.first, key.second, c);
    return r;
}

Bracketer::Bracketer(Context ctx, Bicharacter chi, BracketMode mode)
    : ctx_(std::move(ctx)), chi_(std::move(chi)), mode_(mode) {}

const Polynomial& Bracketer::bracket_impl(const Word& u) {
    auto it = memo_.find(u);
    if (it != memo_.end()) return it->second;
    Polynomial result(ctx_);
    if (u.size() <= 1) {
        result = Polynomial::monomial(ctx_, u, Scalar::one(ctx_.field));
    } else if (is_lyndon(u)) {
        auto [l, r] = shirshov(u);
        Polynomial bl = bracket_impl(l);
        Polynomial br = bracket_impl(r);
        result = braided_commutator(bl, br, chi_, mode_);
    } else {
        result = Polynomial::unit(ctx_);
        for (const Word& atom : lyndon_decompose(u)) result = result * bracket_impl(atom);
    }
    return memo_.emplace(u, std::move(result)).first->second;
}

Polynomial Bracketer::bracket(const Word& u) {
    std::lock_guard<std::mutex> lock(mu_);
    return bracket_impl(u);
}

std::vector<std::pair<Word, Scalar>> Bracketer::basis_solve(const Polynomial& f) {
    if (!f.is_homogeneous()) raise(Errc::Inhomogeneous, "bracket_basis_solve needs homogeneous input");
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<std::pair<Word, Scalar>> coeffs;
    Polynomial rem = f;
    while (!rem.is_zero()) {
        auto [w, c] = rem.leading();
        coeffs.emplace_back(w, c);
        rem -= bracket_impl(w).scale(c);
    }
    return coeffs;
}

} // namespace lynpbw
