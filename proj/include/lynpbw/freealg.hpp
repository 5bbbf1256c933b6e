#ifndef LYNPBW_FREEALG_HPP
#define LYNPBW_FREEALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lynpbw/scalars.hpp"
#include "lynpbw/words.hpp"

namespace lynpbw {

// Shared coefficient field + graded alphabet for polynomials.
struct Context {
    FieldPtr field;
    AlphabetPtr alphabet;

    bool same(const Context& other) const;
    void check_same(const Context& other) const;
};

// Element of the free algebra; terms sorted descending by glex so the leading
// word is terms().front().
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Context ctx) : ctx_(std::move(ctx)) {}
    static Polynomial monomial(const Context& ctx, const Word& w, const Scalar& c);
    static Polynomial unit(const Context& ctx);

    const Context& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<Word, Scalar>>& terms() const { return terms_; }
    Scalar coeff(const Word& w) const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial scale(const Scalar& c) const;
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

    // glex-largest word and its coefficient.
    std::pair<Word, Scalar> leading() const;

    bool is_homogeneous() const;
    // Degree when homogeneous and nonzero; error otherwise.
    Degree homogeneous_degree() const;

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    std::string str() const;

private:
    friend class TensorPolynomial;
    void insert_term(const Word& w, const Scalar& c);  // accumulate, no sort
    void normalize();                                  // sort desc glex, drop zeros

    Context ctx_;
    std::vector<std::pair<Word, Scalar>> terms_;
};

// Element of the braided tensor square; terms keyed by word pairs, sorted
// descending by (glex left, glex right).
class TensorPolynomial {
public:
    TensorPolynomial() = default;
    explicit TensorPolynomial(Context ctx) : ctx_(std::move(ctx)) {}
    static TensorPolynomial simple(const Context& ctx, const Word& u, const Word& v,
                                   const Scalar& c);
    static TensorPolynomial unit(const Context& ctx);  // 1 (x) 1
    // f (x) g expanded bilinearly
    static TensorPolynomial tensor(const Polynomial& f, const Polynomial& g);

    const Context& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<std::pair<Word, Word>, Scalar>>& terms() const { return terms_; }

    TensorPolynomial operator+(const TensorPolynomial& t) const;
    TensorPolynomial operator-(const TensorPolynomial& t) const;
    TensorPolynomial operator-() const;
    TensorPolynomial scale(const Scalar& c) const;
    TensorPolynomial& operator+=(const TensorPolynomial& t) { return *this = *this + t; }
    TensorPolynomial& operator-=(const TensorPolynomial& t) { return *this = *this - t; }

    bool operator==(const TensorPolynomial& t) const;
    bool operator!=(const TensorPolynomial& t) const { return !(*this == t); }

    bool is_homogeneous() const;  // every term's summed bidegree equal
    Degree homogeneous_degree() const;

    std::string str() const;

private:
    friend TensorPolynomial tensor_mul_impl(const TensorPolynomial&, const TensorPolynomial&,
                                            const class Bicharacter&);
    void insert_term(const Word& u, const Word& v, const Scalar& c);
    void normalize();

    Context ctx_;
    std::vector<std::pair<std::pair<Word, Word>, Scalar>> terms_;
};

} // namespace lynpbw

#endif
