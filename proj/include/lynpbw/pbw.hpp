#ifndef LYNPBW_PBW_HPP
#define LYNPBW_PBW_HPP

#include "lynpbw/braiding.hpp"
#include "lynpbw/groebner.hpp"

namespace lynpbw {

struct PBWGenerator {
    Word u;              // irreducible Lyndon word
    Polynomial z;        // normal_form(bracket(u)), leading word u, monic
    Degree degree;
    HeightResult height;
};

// Generators are the irreducible Lyndon words up to the basis bound, ascending
// by the pseudo-lexicographic order.
struct PBWData {
    GroebnerBasis gb;
    Bicharacter chi = Bicharacter::trivial(Field::rationals(), 1);
    BracketMode mode = BracketMode::Tau;
    std::vector<PBWGenerator> generators;
    long D = 0;
};

PBWData pbw_data(const GroebnerBasis& gb, const Bicharacter& chi, BracketMode mode);

// exponent list [(generator index, r)] with indices ascending lex and, for
// finite heights, 0 < r < h
using PBWMonomial = std::vector<std::pair<std::size_t, long>>;

Degree pbw_monomial_degree(const PBWData& p, const PBWMonomial& m);
// product of the z's taken ascending by the given position of each generator
Polynomial pbw_monomial_element(const PBWData& p, const PBWMonomial& m);
std::string pbw_monomial_str(const PBWData& p, const PBWMonomial& m);

// All admissible monomials of multidegree gamma, factors ordered by `order`
// (a permutation of generator indices; position in `order` = position in the
// product).  Deterministic enumeration.
std::vector<PBWMonomial> pbw_monomials_of_degree(const PBWData& p, const Degree& gamma,
                                                 const std::vector<std::size_t>& order);

// lex order plus `extra` seeded pseudo-random shuffles
std::vector<std::vector<std::size_t>> default_orders(const PBWData& p, int extra,
                                                     unsigned long seed);

struct DegreeVerdict {
    Degree gamma;
    std::size_t monomials = 0;
    std::size_t dimension = 0;
    bool pass = false;
};

struct PBWReport {
    bool pass = false;
    // one verdict list per order, ascending degree
    std::vector<std::vector<DegreeVerdict>> per_order;
};

// Per degree <= D and per order: the admissible monomials' normal forms form
// a square invertible matrix over the irreducible-word basis.
PBWReport verify_pbw_basis(const PBWData& p, const std::vector<std::vector<std::size_t>>& orders);

// Unique expansion of f + I over the lex-ordered PBW monomial basis.
// Raises BasisNotVerified when a needed degree matrix is singular.
std::vector<std::pair<PBWMonomial, Scalar>> to_pbw_normal_form(const Polynomial& f,
                                                               const PBWData& p);

struct CheckReport {
    bool pass = true;
    std::vector<std::string> notes;  // violations and skipped items
};

// z_xi^h and [z_xi, z_eta] expand over generators strictly below xi.
CheckReport filtration_check(const PBWData& p);

// For finite height n: (n)_q = 0 at q = chi(deg u, deg u), with the exact
// order law (char 0: order = n; char p: order = n / p^s).
CheckReport root_of_unity_check(const PBWData& p);

struct OreStep {
    std::size_t gen;  // index into p.generators
    // derivation values delta(z_j) = z_i z_j - z_j z_i for each earlier j
    std::vector<std::pair<std::size_t, std::vector<std::pair<PBWMonomial, Scalar>>>> delta;
};

struct OreTower {
    std::vector<OreStep> steps;
    std::vector<std::string> notes;  // pairs skipped for exceeding the bound
};

// Iterated Ore extensions of derivation type; requires a trivial bicharacter
// and no finite heights.
OreTower ore_tower(const PBWData& p);

// Free two-sided module basis of A = k<Y2>/J2 over B = k<Y1>/J1 indexed by
// monomials in Xi = N_{J2} \ <Y1>.  Y1, Y2 are initial-segment sizes.
CheckReport relative_pbw(const GroebnerBasis& gb, int y1, int y2, const Bicharacter& chi,
                         BracketMode mode);

} // namespace lynpbw

#endif
