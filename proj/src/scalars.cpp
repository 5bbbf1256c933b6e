#include "lynpbw/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lynpbw {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- dense univariate polynomials over Q (helpers for Q(zeta_n)) ----

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// a = q * b + r with deg r < deg b; b nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, mpq_class(0));
    const mpq_class& lead = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        mpq_class c = r.back() / lead;
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    trim(q);
}

// g = s*a + t*b via extended Euclid; only s is reported.
QPoly poly_xgcd(QPoly a, QPoly b, QPoly& s_out) {
    QPoly s0{mpq_class(1)}, s1;
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        QPoly s2 = s0;
        QPoly qs1 = mul(q, s1);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), mpq_class(0));
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        a = b;
        b = r;
        s0 = s1;
        s1 = s2;
    }
    s_out = s0;
    return a;
}

const QPoly& cyclotomic_poly(unsigned long n) {
    static std::map<unsigned long, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // t^n - 1 divided by Phi_d for every proper divisor d of n.
    QPoly p(n + 1, mpq_class(0));
    p[0] = -1;
    p[n] = 1;
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto dit = cache.find(d);
        if (dit == cache.end()) {
            // fill recursively (divisors of d are divisors of n, so this bottoms out)
            QPoly pd(d + 1, mpq_class(0));
            pd[0] = -1;
            pd[d] = 1;
            for (unsigned long e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                QPoly q, r;
                divmod(pd, cache.at(e), q, r);
                pd = q;
            }
            dit = cache.emplace(d, pd).first;
        }
        QPoly q, r;
        divmod(p, dit->second, q, r);
        p = q;
    }
    return cache.emplace(n, p).first->second;
}

unsigned long mod_ui(const mpq_class& v, unsigned long p) {
    if (mpz_fdiv_ui(v.get_den_mpz_t(), p) == 0)
        raise(Errc::DivisionByZero, "denominator vanishes mod p");
    unsigned long num = mpz_fdiv_ui(v.get_num_mpz_t(), p);
    unsigned long den = mpz_fdiv_ui(v.get_den_mpz_t(), p);
    // invert den mod p by Fermat (p prime, p fits in a machine word)
    auto mulmod = [p](unsigned long a, unsigned long b) {
        return (unsigned long)((unsigned __int128)a * b % p);
    };
    unsigned long inv = 1, base = den % p, e = p - 2;
    while (e) {
        if (e & 1) inv = mulmod(inv, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    return mulmod(num, inv);
}

} // namespace

// ---- Field ----

Field::Field(FieldKind kind, unsigned long p, unsigned long n) : kind_(kind), p_(p), n_(n) {
    if (kind_ == FieldKind::PrimeField && !is_prime(p_))
        raise(Errc::ValidationError, "prime_field modulus " + std::to_string(p_) + " is not prime");
    if (kind_ == FieldKind::Cyclotomic) {
        if (n_ < 1) raise(Errc::ValidationError, "cyclotomic index must be >= 1");
        phi_ = cyclotomic_poly(n_);
    }
}

FieldPtr Field::rationals() {
    static FieldPtr f(new Field(FieldKind::Rationals, 0, 0));
    return f;
}

FieldPtr Field::prime_field(unsigned long p) { return FieldPtr(new Field(FieldKind::PrimeField, p, 0)); }

FieldPtr Field::cyclotomic(unsigned long n) { return FieldPtr(new Field(FieldKind::Cyclotomic, 0, n)); }

std::size_t Field::ext_degree() const {
    return kind_ == FieldKind::Cyclotomic ? phi_.size() - 1 : 1;
}

bool Field::same(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && n_ == other.n_;
}

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::Rationals: return "rationals";
        case FieldKind::PrimeField: return "Fp p=" + std::to_string(p_);
        case FieldKind::Cyclotomic: return "cyclotomic n=" + std::to_string(n_);
    }
    return "?";
}

// ---- Scalar ----

Scalar::Scalar() : field_(Field::rationals()), rat_(0) {}

Scalar Scalar::zero(const FieldPtr& f) {
    Scalar s;
    s.field_ = f;
    s.rat_ = 0;
    s.res_ = 0;
    if (f->kind() == FieldKind::Cyclotomic) s.cyc_.assign(f->ext_degree(), mpq_class(0));
    return s;
}

Scalar Scalar::one(const FieldPtr& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldPtr& f, long v) { return of_mpq(f, mpq_class(v)); }

Scalar Scalar::of_mpq(const FieldPtr& f, const mpq_class& v) {
    Scalar s = zero(f);
    switch (f->kind()) {
        case FieldKind::Rationals: s.rat_ = v; s.rat_.canonicalize(); break;
        case FieldKind::PrimeField: s.res_ = mod_ui(v, f->prime()); break;
        case FieldKind::Cyclotomic: s.cyc_[0] = v; s.cyc_[0].canonicalize(); break;
    }
    return s;
}

Scalar Scalar::zeta(const FieldPtr& f) {
    if (f->kind() != FieldKind::Cyclotomic)
        raise(Errc::ValidationError, "zeta only exists in a cyclotomic field");
    Scalar s = zero(f);
    if (f->ext_degree() >= 2) {
        s.cyc_[1] = 1;
    } else {
        // phi(n) = 1 happens for n in {1, 2}: zeta is 1 or -1
        s.cyc_[0] = (f->cyclotomic_index() == 2) ? -1 : 1;
    }
    return s;
}

void Scalar::check_same(const Scalar& b) const {
    if (!field_->same(*b.field_))
        raise(Errc::FieldMismatch, field_->name() + " vs " + b.field_->name());
}

void Scalar::reduce_cyclotomic() {
    const auto& phi = field_->modulus();
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = cyc_.size(); i-- > deg;) {
        if (cyc_[i] == 0) continue;
        mpq_class c = cyc_[i];
        cyc_[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) cyc_[i - deg + j] -= c * phi[j];
    }
    cyc_.resize(deg, mpq_class(0));
    for (auto& c : cyc_) c.canonicalize();
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return rat_ == 0;
        case FieldKind::PrimeField: return res_ == 0;
        case FieldKind::Cyclotomic:
            return std::all_of(cyc_.begin(), cyc_.end(), [](const mpq_class& c) { return c == 0; });
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator+(const Scalar& b) const {
    check_same(b);
    Scalar r = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals: r.rat_ += b.rat_; break;
        case FieldKind::PrimeField: r.res_ = (r.res_ + b.res_) % field_->prime(); break;
        case FieldKind::Cyclotomic:
            for (std::size_t i = 0; i < r.cyc_.size(); ++i) r.cyc_[i] += b.cyc_[i];
            break;
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals: r.rat_ = -r.rat_; break;
        case FieldKind::PrimeField: r.res_ = r.res_ ? field_->prime() - r.res_ : 0; break;
        case FieldKind::Cyclotomic:
            for (auto& c : r.cyc_) c = -c;
            break;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& b) const { return *this + (-b); }

Scalar Scalar::operator*(const Scalar& b) const {
    check_same(b);
    Scalar r = zero(field_);
    switch (field_->kind()) {
        case FieldKind::Rationals: r.rat_ = rat_ * b.rat_; break;
        case FieldKind::PrimeField:
            r.res_ = (unsigned long)((unsigned __int128)res_ * b.res_ % field_->prime());
            break;
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> prod(2 * cyc_.size(), mpq_class(0));
            for (std::size_t i = 0; i < cyc_.size(); ++i) {
                if (cyc_[i] == 0) continue;
                for (std::size_t j = 0; j < b.cyc_.size(); ++j) prod[i + j] += cyc_[i] * b.cyc_[j];
            }
            r.cyc_ = std::move(prod);
            r.reduce_cyclotomic();
            break;
        }
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero");
    Scalar r = zero(field_);
    switch (field_->kind()) {
        case FieldKind::Rationals: r.rat_ = 1 / rat_; break;
        case FieldKind::PrimeField: {
            Scalar base = *this;
            r = one(field_);
            unsigned long e = field_->prime() - 2;
            while (e) {
                if (e & 1) r = r * base;
                base = base * base;
                e >>= 1;
            }
            break;
        }
        case FieldKind::Cyclotomic: {
            QPoly a = cyc_;
            trim(a);
            QPoly s;
            QPoly g = poly_xgcd(a, field_->modulus(), s);
            // phi is irreducible over Q, so g is a nonzero constant
            mpq_class c = g[0];
            r.cyc_.assign(std::max(s.size(), field_->ext_degree()), mpq_class(0));
            for (std::size_t i = 0; i < s.size(); ++i) r.cyc_[i] = s[i] / c;
            r.reduce_cyclotomic();
            break;
        }
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& b) const { return *this * b.inverse(); }

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r = one(field_);
    Scalar base = *this;
    unsigned long e = (unsigned long)k;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& b) const {
    check_same(b);
    switch (field_->kind()) {
        case FieldKind::Rationals: return rat_ == b.rat_;
        case FieldKind::PrimeField: return res_ == b.res_;
        case FieldKind::Cyclotomic: return cyc_ == b.cyc_;
    }
    return false;
}

std::string Scalar::str() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return rat_.get_str();
        case FieldKind::PrimeField: return std::to_string(res_);
        case FieldKind::Cyclotomic: {
            std::ostringstream out;
            bool first = true;
            for (std::size_t i = cyc_.size(); i-- > 0;) {
                const mpq_class& c = cyc_[i];
                if (c == 0) continue;
                mpq_class a = abs(c);
                if (first) {
                    if (c < 0) out << "-";
                    first = false;
                } else {
                    out << (c < 0 ? " - " : " + ");
                }
                if (i == 0) {
                    out << a.get_str();
                } else {
                    if (a != 1) out << a.get_str() << "*";
                    out << "z";
                    if (i > 1) out << "^" << i;
                }
            }
            if (first) return "0";
            return out.str();
        }
    }
    return "?";
}

namespace {

struct ScalarLexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    mpz_class read_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (start == pos) raise(Errc::SyntaxError, "expected digits in scalar literal at offset " + std::to_string(pos));
        return mpz_class(text.substr(start, pos - start));
    }
};

} // namespace

Scalar Scalar::parse(const FieldPtr& f, const std::string& text) {
    ScalarLexer lx{text};
    Scalar value = zero(f);
    bool first = true;
    for (;;) {
        lx.skip_ws();
        if (lx.pos >= lx.text.size()) {
            if (first) raise(Errc::SyntaxError, "empty scalar literal");
            break;
        }
        int sign = 1;
        if (lx.eat('-')) sign = -1;
        else if (lx.eat('+')) sign = 1;
        else if (!first) raise(Errc::SyntaxError, "expected '+' or '-' in scalar literal");
        // one term: product of factors
        Scalar term = one(f);
        bool more = true;
        while (more) {
            char c = lx.peek();
            if (std::isdigit((unsigned char)c)) {
                mpz_class num = lx.read_uint();
                mpq_class q(num);
                if (lx.eat('/')) q = mpq_class(num, lx.read_uint());
                q.canonicalize();
                term = term * of_mpq(f, q);
            } else if (c == 'z') {
                ++lx.pos;
                long e = 1;
                if (lx.eat('^')) e = lx.read_uint().get_si();
                term = term * zeta(f).pow(e);
            } else {
                raise(Errc::SyntaxError, "unexpected character in scalar literal: " + std::string(1, c));
            }
            more = lx.eat('*');
        }
        if (sign < 0) term = -term;
        value = value + term;
        first = false;
    }
    return value;
}

RootOrder root_of_unity_order(const Scalar& a, unsigned long bound) {
    if (a.is_zero()) raise(Errc::ZeroScalar, "root_of_unity_order of zero");
    if (bound < 1) raise(Errc::PreconditionViolated, "bound must be >= 1");
    const FieldPtr& f = a.field();
    unsigned long limit = 2;
    switch (f->kind()) {
        case FieldKind::Rationals: limit = 2; break;
        case FieldKind::PrimeField: limit = f->prime() - 1 > 0 ? f->prime() - 1 : 1; break;
        case FieldKind::Cyclotomic: limit = std::lcm<unsigned long>(2, f->cyclotomic_index()); break;
    }
    std::vector<unsigned long> divisors;
    for (unsigned long d = 1; d <= limit; ++d)
        if (limit % d == 0) divisors.push_back(d);
    Scalar unit = Scalar::one(f);
    for (unsigned long d : divisors) {
        if (d > bound) break;
        if (a.pow((long)d) == unit) return RootOrder{true, d, bound};
    }
    return RootOrder{false, 0, bound};
}

} // namespace lynpbw
