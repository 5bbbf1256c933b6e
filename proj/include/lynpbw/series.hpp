#ifndef LYNPBW_SERIES_HPP
#define LYNPBW_SERIES_HPP

#include <map>

#include "lynpbw/pbw.hpp"

namespace lynpbw {

// theta-variate power series with integer coefficients, truncated beyond
// total degree D
struct TruncatedSeries {
    int theta = 0;
    long D = 0;
    std::map<Degree, long> coeffs;

    static TruncatedSeries one(int theta, long D);
    // 1 / (1 - t^d) = 1 + t^d + t^{2d} + ...
    static TruncatedSeries geometric(const Degree& d, long D);

    long coeff(const Degree& gamma) const;
    TruncatedSeries mul(const TruncatedSeries& other) const;
    // collapsed to total degree: entry n sums all coefficients with |gamma|=n
    std::vector<long> total_coeffs() const;
};

// every obstruction up to the bound is Lyndon
bool is_lyndon_ideal(const GroebnerBasis& gb);

// relaxed gate for the series operations: obstructions Lyndon or powers of
// Lyndon words, so one-letter truncations are admitted and their product
// formula mismatch is surfaced rather than masked
bool is_lyndon_power_ideal(const GroebnerBasis& gb);

struct HilbertReport {
    TruncatedSeries series;  // product over the generators
    long dprime = 0;         // degrees <= dprime were compared against counts
    bool all_match = true;
    std::vector<std::string> notes;
};

// Product formula prod_u 1/(1 - t^{deg u}) compared per degree with the
// irreducible-word counts up to the conservative horizon D'.
HilbertReport hilbert_series(const PBWData& p);

struct GKReport {
    bool exact = false;
    std::size_t value = 0;  // #generators when exact, else a lower bound
    std::vector<std::string> notes;
};

GKReport gk_report(const PBWData& p);

// Members of A_n(V) with total degree <= D.  A_0 = {1}, A_1 = X\V,
// A_2 = V\X; for n >= 3 the unique-decomposition search.
std::vector<Word> ambiguities(const Alphabet& a, const std::vector<Word>& V, long n, long D);

// U = Psi(V): Lyndon words without factors in V.  Verifies the emptiness
// bound, the decreasing-product shape of A_n, and the adjacency lower bound.
CheckReport chain_properties_check(const Alphabet& a, const std::vector<Word>& V, long D);

struct HomologyReport {
    std::size_t bound = 0;  // min{#N, #(O\X)+1}
    bool exact = false;     // N exhausted within the truncation
    std::size_t gldim = 0;  // #N, meaningful when exact
    Degree gorenstein;      // sum of the generator degrees
    bool fibonacci_checked = false;
    bool fibonacci_ok = false;
    std::vector<std::string> notes;
};

HomologyReport homology_bounds(const PBWData& p);

} // namespace lynpbw

#endif
