#ifndef LYNPBW_BRAIDING_HPP
#define LYNPBW_BRAIDING_HPP

#include <map>
#include <mutex>

#include "lynpbw/freealg.hpp"

namespace lynpbw {

// Gamma-bicharacter given by a theta x theta matrix of nonzero scalars:
// chi(alpha, beta) = prod Q_ij^(alpha_i beta_j).
class Bicharacter {
public:
    Bicharacter() = default;
    Bicharacter(FieldPtr field, int theta, std::vector<Scalar> entries);
    static Bicharacter trivial(const FieldPtr& field, int theta);

    const FieldPtr& field() const { return field_; }
    int dim() const { return theta_; }
    const Scalar& q(int i, int j) const { return entries_[(std::size_t)i * theta_ + j]; }

    Scalar eval(const Degree& alpha, const Degree& beta) const;
    bool is_trivial() const;
    // Syntactic test for chi^2 = trivial: Q_ij Q_ji = 1 and Q_ii^2 = 1.
    bool chi_squared_trivial() const;
    bool same(const Bicharacter& other) const;

private:
    FieldPtr field_;
    int theta_ = 0;
    std::vector<Scalar> entries_;  // row-major
};

// rho = tau picks chi, rho = tau^{-1} picks chi^{-1}.
enum class BracketMode { Tau, TauInverse };

Scalar rho_scalar(const Bicharacter& chi, BracketMode mode, const Degree& a, const Degree& b);

// Gaussian binomial via the division-free q-Pascal recurrence
// C(n,i)_q = C(n-1,i-1)_q + q^i C(n-1,i)_q (valid even when some (r)_q = 0).
Scalar qbinom(long n, long i, const Scalar& q);

// (n)_q = 1 + q + ... + q^{n-1}
Scalar qint(long n, const Scalar& q);

// f g - rho(deg f, deg g) g f; f, g homogeneous.
Polynomial braided_commutator(const Polynomial& f, const Polynomial& g, const Bicharacter& chi,
                              BracketMode mode);

// (u1 (x) v1)(u2 (x) v2) = chi(deg v1, deg u2) (u1u2 (x) v1v2), bilinearly.
TensorPolynomial tensor_mul(const TensorPolynomial& s, const TensorPolynomial& t,
                            const Bicharacter& chi);

// Recursive bracketing along Shirshov factorizations, with a memo table.
class Bracketer {
public:
    Bracketer(Context ctx, Bicharacter chi, BracketMode mode);

    // [u]: the letter itself, the commutator of the Shirshov parts when u is
    // Lyndon, and the product of atom brackets otherwise.
    Polynomial bracket(const Word& u);

    // Unique coefficients c_w with f = sum c_w [w], by leading-term peeling
    // (the bracket family is unitriangular within each multidegree).
    std::vector<std::pair<Word, Scalar>> basis_solve(const Polynomial& f);

    const Context& ctx() const { return ctx_; }
    const Bicharacter& chi() const { return chi_; }
    BracketMode mode() const { return mode_; }

private:
    const Polynomial& bracket_impl(const Word& u);

    Context ctx_;
    Bicharacter chi_;
    BracketMode mode_;
    std::map<Word, Polynomial> memo_;
    std::mutex mu_;
};

} // namespace lynpbw

#endif
