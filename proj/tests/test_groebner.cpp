#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lynpbw/braiding.hpp"
#include "lynpbw/groebner.hpp"
#include "lynpbw/linalg.hpp"

using namespace lynpbw;

namespace {

Context make_ctx(int m) {
    auto a = std::make_shared<Alphabet>();
    for (int i = 0; i < m; ++i) {
        a->names.push_back(std::string(1, (char)('a' + i)));
        std::vector<long> d(m, 0);
        d[i] = 1;
        a->degrees.push_back(d);
    }
    a->validate();
    return Context{Field::rationals(), a};
}

Polynomial mono(const Context& c, const Word& w, long num = 1, long den = 1) {
    return Polynomial::monomial(c, w, Scalar::of_mpq(c.field, mpq_class(num, den)));
}

// quantum plane: ba = 2 ab, i.e. ba - 2 ab = 0
GroebnerBasis quantum_plane(const Context& c, long D) {
    return GroebnerBasis::complete(c, {mono(c, {1, 0}) - mono(c, {0, 1}, 2)}, D);
}

// Serre-type pair: baa - 5/2 aba + aab, bba - 5/2 bab + abb
GroebnerBasis a2_serre(const Context& c, long D) {
    Polynomial r1 = mono(c, {1, 0, 0}) - mono(c, {0, 1, 0}, 5, 2) + mono(c, {0, 0, 1});
    Polynomial r2 = mono(c, {1, 1, 0}) - mono(c, {1, 0, 1}, 5, 2) + mono(c, {0, 1, 1});
    return GroebnerBasis::complete(c, {r1, r2}, D);
}

} // namespace

TEST_CASE("single binomial relation is already a basis") {
    Context c = make_ctx(2);
    GroebnerBasis gb = quantum_plane(c, 8);
    REQUIRE(gb.elements().size() == 1);
    CHECK(gb.obstructions() == std::vector<Word>{{1, 0}});
    CHECK(gb.normal_form(mono(c, {1, 0})) == mono(c, {0, 1}, 2));
    // nf(bba) = 4 abb
    CHECK(gb.normal_form(mono(c, {1, 1, 0})) == mono(c, {0, 1, 1}, 4));
    // the quotient has dimension d+1 in total degree d
    for (long d = 0; d <= 6; ++d) {
        long count = 0;
        for (const Word& w : gb.irreducible_words(IrrMode::All, d))
            if ((long)w.size() == d) ++count;
        CHECK(count == d + 1);
    }
}

TEST_CASE("input validation") {
    Context c = make_ctx(2);
    Polynomial inhom = mono(c, {0}) + mono(c, {0, 1});
    CHECK_THROWS_AS(GroebnerBasis::complete(c, {inhom}, 6), Error);
    CHECK_THROWS_AS(GroebnerBasis::complete(c, {mono(c, {0, 0, 0})}, 2), Error);
    // zero relations are skipped
    GroebnerBasis gb = GroebnerBasis::complete(c, {Polynomial(c)}, 4);
    CHECK(gb.elements().empty());
    CHECK_THROWS_AS(gb.normal_form(mono(c, {0, 0, 0, 0, 0})), Error);
    CHECK_THROWS_AS((void)gb.irreducible_words(IrrMode::All, 5), Error);
}

TEST_CASE("monomial relation x^2") {
    Context c = make_ctx(1);
    GroebnerBasis gb = GroebnerBasis::complete(c, {mono(c, {0, 0})}, 6);
    CHECK(gb.obstructions() == std::vector<Word>{{0, 0}});
    CHECK(gb.irreducible_words(IrrMode::All, 6) == std::vector<Word>{{}, {0}});
    CHECK(gb.height({0}) == HeightResult{true, 2});
    // restricted words for x^3 include the empty word and powers below 3
    GroebnerBasis gb3 = GroebnerBasis::complete(c, {mono(c, {0, 0, 0})}, 6);
    CHECK(gb3.irreducible_words(IrrMode::Restricted, 6) ==
          std::vector<Word>{{}, {0}, {0, 0}});
    CHECK(gb3.height({0}) == HeightResult{true, 3});
}

TEST_CASE("serre pair completion") {
    Context c = make_ctx(2);
    GroebnerBasis gb = a2_serre(c, 8);
    // the two leading words close under overlaps with no new obstructions
    CHECK(gb.obstructions() == std::vector<Word>{{1, 0, 0}, {1, 1, 0}});
    // nf is idempotent and kills the generators
    for (const Polynomial& r : gb.input_relations()) CHECK(gb.normal_form(r).is_zero());
    // dimensions of the quotient in total degree 0..6
    std::vector<long> expect = {1, 2, 4, 6, 9, 12, 16};
    for (long d = 0; d < (long)expect.size(); ++d) {
        long count = 0;
        for (const Word& w : gb.irreducible_words(IrrMode::All, d))
            if ((long)w.size() == d) ++count;
        CHECK(count == expect[d]);
    }
    // Lyndon irreducibles up to degree 3
    CHECK(gb.irreducible_words(IrrMode::Lyndon, 3) ==
          std::vector<Word>{{0}, {1}, {1, 0}});
}

TEST_CASE("rank oracle agrees with completion on every multidegree") {
    Context c2 = make_ctx(2);
    std::vector<std::pair<GroebnerBasis, std::vector<Polynomial>>> cases;
    cases.emplace_back(quantum_plane(c2, 5),
                       std::vector<Polynomial>{mono(c2, {1, 0}) - mono(c2, {0, 1}, 2)});
    {
        Polynomial r1 = mono(c2, {1, 0, 0}) - mono(c2, {0, 1, 0}, 5, 2) + mono(c2, {0, 0, 1});
        Polynomial r2 = mono(c2, {1, 1, 0}) - mono(c2, {1, 0, 1}, 5, 2) + mono(c2, {0, 1, 1});
        cases.emplace_back(a2_serre(c2, 5), std::vector<Polynomial>{r1, r2});
    }
    for (const auto& [gb, gens] : cases) {
        for (long i = 0; i <= 5; ++i) {
            for (long j = 0; i + j <= 5; ++j) {
                Degree gamma{i, j};
                std::size_t dim = quotient_dim_oracle(c2, gens, gamma);
                CHECK(dim == gb.irreducible_words_of_degree(IrrMode::All, gamma).size());
            }
        }
    }
}

TEST_CASE("normal form respects the ideal on random products") {
    Context c = make_ctx(2);
    GroebnerBasis gb = a2_serre(c, 7);
    std::mt19937_64 rng(4242);
    auto random_word = [&](int len) {
        Word w;
        for (int i = 0; i < len; ++i) w.push_back((int)(rng() % 2));
        return w;
    };
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial& g = gb.input_relations()[rng() % 2];
        int budget = 7 - 3;
        int ll = (int)(rng() % (budget + 1));
        int rl = budget - ll - (int)(rng() % (budget - ll + 1));
        Polynomial m = mono(c, random_word(ll)) * g * mono(c, random_word(rl));
        CHECK(gb.normal_form(m).is_zero());
        // nf(f + m) = nf(f) and nf is idempotent
        Polynomial f = mono(c, random_word((int)m.leading().first.size()), (long)(rng() % 5) + 1);
        Polynomial nf = gb.normal_form(f + m);
        CHECK(nf == gb.normal_form(f));
        CHECK(gb.normal_form(nf) == nf);
    }
}

TEST_CASE("bracketed irreducible Lyndon monomials span the quotient") {
    // in each multidegree the normal forms of decreasing products of bracketed
    // irreducible Lyndon words are linearly independent and count the quotient
    // dimension
    Context c = make_ctx(2);
    GroebnerBasis gb = a2_serre(c, 5);
    Bicharacter chi = Bicharacter::trivial(c.field, 2);
    Bracketer br(c, chi, BracketMode::Tau);
    for (long i = 0; i <= 5; ++i) {
        for (long j = 0; i + j <= 5 && j <= 5; ++j) {
            Degree gamma{i, j};
            if (total_degree(gamma) == 0) continue;
            std::vector<Word> cols;
            for (const Word& w : enumerate_words(*c.alphabet, WordMode::AllWords,
                                                 total_degree(gamma)))
                if (word_degree(*c.alphabet, w) == gamma) cols.push_back(w);
            Echelon ech(c.field, cols.size());
            std::size_t indep = 0;
            // restricted irreducible words are exactly the products of
            // irreducible Lyndon words in nonincreasing lex order here
            for (const Word& w : gb.irreducible_words_of_degree(IrrMode::All, gamma)) {
                Polynomial prod = Polynomial::unit(c);
                for (const Word& atom : lyndon_decompose(w)) prod = prod * br.bracket(atom);
                Polynomial nf = gb.normal_form(prod);
                std::vector<Scalar> row(cols.size(), Scalar::zero(c.field));
                for (const auto& [word, coef] : nf.terms()) {
                    auto it = std::find(cols.begin(), cols.end(), word);
                    REQUIRE(it != cols.end());
                    row[(std::size_t)(it - cols.begin())] = coef;
                }
                if (ech.add(std::move(row))) ++indep;
            }
            CHECK(indep == gb.irreducible_words_of_degree(IrrMode::All, gamma).size());
        }
    }
}

TEST_CASE("heights") {
    Context c = make_ctx(2);
    GroebnerBasis gb = a2_serre(c, 8);
    CHECK_THROWS_AS(gb.height({0, 1}), Error);  // ab is not Lyndon here
    // the obstructions themselves are Lyndon and reducible at the first power
    CHECK(gb.height({1, 0, 0}) == HeightResult{true, 1});
    // a, b, ba all have unbounded height as far as degree 8 can see
    CHECK(gb.height({0}) == HeightResult{false, 9});
    CHECK(gb.height({1}) == HeightResult{false, 9});
    CHECK(gb.height({1, 0}) == HeightResult{false, 5});
    // (ba)^2 = baba contains no obstruction factor
    CHECK(!gb.word_reducible({1, 0, 1, 0}));
}

TEST_CASE("subalgebra intersection") {
    Context c = make_ctx(2);
    GroebnerBasis gb = a2_serre(c, 6);
    SUBCASE("proper initial segment") {
        SubalgebraResult res = intersect_subalgebra(gb, {0});
        CHECK(res.verified);
        // no relation lives on the letter a alone
        CHECK(res.candidate.elements().empty());
    }
    SUBCASE("full alphabet") {
        SubalgebraResult res = intersect_subalgebra(gb, {0, 1});
        CHECK(res.verified);
        CHECK(res.candidate.elements().size() == gb.elements().size());
    }
    SUBCASE("empty segment") {
        SubalgebraResult res = intersect_subalgebra(gb, {});
        CHECK(res.verified);
    }
    SUBCASE("non initial segment rejected") {
        CHECK_THROWS_AS(intersect_subalgebra(gb, {1}), Error);
    }
    SUBCASE("relation inside the subalgebra") {
        // add a relation on a alone: a^2 = 0
        Context c1 = make_ctx(2);
        Polynomial r1 = mono(c1, {0, 0});
        Polynomial r2 = mono(c1, {1, 0}) - mono(c1, {0, 1}, 2);
        GroebnerBasis g2 = GroebnerBasis::complete(c1, {r1, r2}, 6);
        SubalgebraResult res = intersect_subalgebra(g2, {0});
        CHECK(res.verified);
        REQUIRE(res.candidate.elements().size() == 1);
        CHECK(res.candidate.elements()[0].leading().first == Word{0, 0});
    }
}
