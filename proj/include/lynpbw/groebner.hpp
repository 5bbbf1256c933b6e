#ifndef LYNPBW_GROEBNER_HPP
#define LYNPBW_GROEBNER_HPP

#include "lynpbw/freealg.hpp"

namespace lynpbw {

enum class IrrMode { All, Lyndon, Restricted };

struct HeightResult {
    bool finite = false;
    long value = 0;  // the height when finite; otherwise "at least" this power
                     // escapes the degree bound
    bool operator==(const HeightResult&) const = default;
};

// Reduced, monic, homogeneous basis certified complete up to total degree D:
// every overlap S-polynomial of total degree <= D reduces to zero.
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    // Truncated completion.  Deterministic: S-polynomials are processed per
    // total-degree layer in ascending glex order of the overlap word, with
    // interreduction after every layer.
    static GroebnerBasis complete(const Context& ctx, std::vector<Polynomial> relations, long D);

    const Context& ctx() const { return ctx_; }
    const std::vector<Polynomial>& elements() const { return elems_; }
    const std::vector<Polynomial>& input_relations() const { return relations_; }
    long bound() const { return D_; }
    bool reduced() const { return true; }

    // The unique irreducible representative of f + I (leftmost-factor
    // rewriting, leading terms first).
    Polynomial normal_form(const Polynomial& f) const;

    // Leading words of the reduced basis = minimal reducible words up to D.
    std::vector<Word> obstructions() const;

    bool word_reducible(const Word& w) const;

    // All / Lyndon / restricted words, ascending glex.
    std::vector<Word> irreducible_words(IrrMode mode, long total_bound) const;
    std::vector<Word> irreducible_words_of_degree(IrrMode mode, const Degree& gamma) const;

    // Least n with u^n reducible, if visible within the bound.
    HeightResult height(const Word& u) const;

private:
    bool restricted_ok(const Word& w) const;

    Context ctx_;
    std::vector<Polynomial> elems_;      // monic, interreduced, ascending glex leads
    std::vector<Polynomial> relations_;  // the monic input generators
    long D_ = 0;
};

// Rank of the ideal component span{w g w' : deg = gamma} inside the word
// basis, computed from the given generators only (independent of completion).
std::size_t ideal_rank_oracle(const Context& ctx, const std::vector<Polynomial>& gens,
                              const Degree& gamma);

// Quotient dimension oracle at degree gamma: #words - ideal rank.
std::size_t quotient_dim_oracle(const Context& ctx, const std::vector<Polynomial>& gens,
                                const Degree& gamma);

struct SubalgebraResult {
    Context sub_ctx;         // alphabet restricted to the first j letters
    GroebnerBasis candidate; // basis elements supported in <Y>, over sub_ctx
    bool verified = false;   // rank oracle agreed at every degree <= D
};

// Y must be the initial segment {x_1, ..., x_j} of the letter order.
SubalgebraResult intersect_subalgebra(const GroebnerBasis& gb, const std::vector<int>& letters);

} // namespace lynpbw

#endif
