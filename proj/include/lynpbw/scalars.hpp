#ifndef LYNPBW_SCALARS_HPP
#define LYNPBW_SCALARS_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "lynpbw/errors.hpp"

namespace lynpbw {

enum class FieldKind { Rationals, PrimeField, Cyclotomic };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// One of Q, F_p (p prime), or Q(zeta_n) = Q[t]/Phi_n(t).
class Field {
public:
    static FieldPtr rationals();
    static FieldPtr prime_field(unsigned long p);
    static FieldPtr cyclotomic(unsigned long n);

    FieldKind kind() const { return kind_; }
    unsigned long prime() const { return p_; }
    unsigned long cyclotomic_index() const { return n_; }
    // Minimal polynomial of zeta_n, monic, coefficients low-to-high.
    const std::vector<mpq_class>& modulus() const { return phi_; }
    std::size_t ext_degree() const;
    unsigned long characteristic() const { return kind_ == FieldKind::PrimeField ? p_ : 0; }
    bool same(const Field& other) const;
    std::string name() const;

private:
    Field(FieldKind kind, unsigned long p, unsigned long n);

    FieldKind kind_;
    unsigned long p_;
    unsigned long n_;
    std::vector<mpq_class> phi_;
};

class Scalar {
public:
    Scalar();  // zero of Q; containers need a default

    static Scalar zero(const FieldPtr& f);
    static Scalar one(const FieldPtr& f);
    static Scalar of_int(const FieldPtr& f, long v);
    static Scalar of_mpq(const FieldPtr& f, const mpq_class& v);
    static Scalar zeta(const FieldPtr& f);  // the class of t in Q(zeta_n)

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& b) const;
    Scalar operator-(const Scalar& b) const;
    Scalar operator*(const Scalar& b) const;
    Scalar operator/(const Scalar& b) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inverse() const;
    Scalar pow(long k) const;

    bool operator==(const Scalar& b) const;
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    std::string str() const;
    static Scalar parse(const FieldPtr& f, const std::string& text);

private:
    void check_same(const Scalar& b) const;
    void reduce_cyclotomic();

    FieldPtr field_;
    mpq_class rat_;               // Rationals
    unsigned long res_ = 0;       // PrimeField, in [0, p)
    std::vector<mpq_class> cyc_;  // Cyclotomic, size ext_degree, low-to-high
};

struct RootOrder {
    bool is_root = false;
    unsigned long order = 0;  // valid when is_root
    unsigned long bound = 0;  // echoed search bound
};

// Smallest m <= bound with a^m = 1.  The search is restricted to orders that
// can occur in the field at all: {1,2} over Q, divisors of p-1 over F_p,
// divisors of lcm(2,n) over Q(zeta_n).
RootOrder root_of_unity_order(const Scalar& a, unsigned long bound);

bool is_prime(unsigned long n);

} // namespace lynpbw

#endif
