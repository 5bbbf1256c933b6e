#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lynpbw/pbw.hpp"

using namespace lynpbw;

namespace {

Context make_ctx(const FieldPtr& field, int m) {
    auto a = std::make_shared<Alphabet>();
    for (int i = 0; i < m; ++i) {
        a->names.push_back(std::string(1, (char)('a' + i)));
        std::vector<long> d(m, 0);
        d[i] = 1;
        a->degrees.push_back(d);
    }
    a->validate();
    return Context{field, a};
}

Polynomial mono(const Context& c, const Word& w, long num = 1, long den = 1) {
    return Polynomial::monomial(c, w, Scalar::of_mpq(c.field, mpq_class(num, den)));
}

Scalar q(const FieldPtr& f, long num, long den = 1) {
    return Scalar::of_mpq(f, mpq_class(num, den));
}

// ba = 2 ab with the matching bicharacter
PBWData quantum_plane(long D) {
    Context c = make_ctx(Field::rationals(), 2);
    GroebnerBasis gb =
        GroebnerBasis::complete(c, {mono(c, {1, 0}) - mono(c, {0, 1}, 2)}, D);
    Bicharacter chi(c.field, 2, {q(c.field, 1), q(c.field, 1, 2), q(c.field, 2), q(c.field, 1)});
    return pbw_data(gb, chi, BracketMode::Tau);
}

// Serre pair at q = 2: Q = [[4, 1/2], [1/2, 4]]
PBWData a2_serre(long D) {
    Context c = make_ctx(Field::rationals(), 2);
    Polynomial r1 = mono(c, {1, 0, 0}) - mono(c, {0, 1, 0}, 5, 2) + mono(c, {0, 0, 1});
    Polynomial r2 = mono(c, {1, 1, 0}) - mono(c, {1, 0, 1}, 5, 2) + mono(c, {0, 1, 1});
    GroebnerBasis gb = GroebnerBasis::complete(c, {r1, r2}, D);
    Bicharacter chi(c.field, 2, {q(c.field, 4), q(c.field, 1, 2), q(c.field, 1, 2), q(c.field, 4)});
    return pbw_data(gb, chi, BracketMode::Tau);
}

// trivial braiding, relations baa - 2aba + aab, bba - 2bab + abb
PBWData heisenberg(long D) {
    Context c = make_ctx(Field::rationals(), 2);
    Polynomial r1 = mono(c, {1, 0, 0}) - mono(c, {0, 1, 0}, 2) + mono(c, {0, 0, 1});
    Polynomial r2 = mono(c, {1, 1, 0}) - mono(c, {1, 0, 1}, 2) + mono(c, {0, 1, 1});
    GroebnerBasis gb = GroebnerBasis::complete(c, {r1, r2}, D);
    return pbw_data(gb, Bicharacter::trivial(c.field, 2), BracketMode::Tau);
}

// one letter, relation x^l, braiding q
PBWData one_letter(const FieldPtr& f, const Scalar& qq, long l, long D) {
    Context c = make_ctx(f, 1);
    GroebnerBasis gb = GroebnerBasis::complete(c, {mono(c, Word((std::size_t)l, 0))}, D);
    return pbw_data(gb, Bicharacter(f, 1, {qq}), BracketMode::Tau);
}

} // namespace

TEST_CASE("generator extraction") {
    PBWData qp = quantum_plane(8);
    REQUIRE(qp.generators.size() == 2);
    CHECK(qp.generators[0].u == Word{0});
    CHECK(qp.generators[1].u == Word{1});
    CHECK(!qp.generators[0].height.finite);
    CHECK(qp.generators[0].height.value == 9);

    PBWData a2 = a2_serre(8);
    REQUIRE(a2.generators.size() == 3);
    CHECK(a2.generators[0].u == Word{0});
    CHECK(a2.generators[1].u == Word{1, 0});
    CHECK(a2.generators[2].u == Word{1});
    // z_{ba} = ba - Q_21 ab
    Context c = a2.gb.ctx();
    CHECK(a2.generators[1].z == mono(c, {1, 0}) - mono(c, {0, 1}, 1, 2));
    for (const auto& g : a2.generators) CHECK(!g.height.finite);

    auto f = Field::cyclotomic(3);
    PBWData x3 = one_letter(f, Scalar::zeta(f), 3, 9);
    REQUIRE(x3.generators.size() == 1);
    CHECK(x3.generators[0].height == HeightResult{true, 3});
}

TEST_CASE("basis verification across orders") {
    PBWData qp = quantum_plane(8);
    PBWReport rep = verify_pbw_basis(qp, default_orders(qp, 2, 7));
    CHECK(rep.pass);
    REQUIRE(rep.per_order.size() == 3);
    // in total degree n the a^i b^j monomials number n + 1
    std::map<long, std::size_t> per_total;
    for (const DegreeVerdict& v : rep.per_order[0]) per_total[total_degree(v.gamma)] += v.monomials;
    for (long n = 0; n <= 8; ++n) CHECK(per_total[n] == (std::size_t)n + 1);

    auto f = Field::cyclotomic(3);
    PBWData x3 = one_letter(f, Scalar::zeta(f), 3, 9);
    PBWReport r3 = verify_pbw_basis(x3, default_orders(x3, 0, 1));
    CHECK(r3.pass);
    std::size_t dims = 0;
    for (const DegreeVerdict& v : r3.per_order[0]) dims += v.dimension;
    CHECK(dims == 3);  // 1, x, x^2

    PBWData a2 = a2_serre(6);
    PBWReport r2 = verify_pbw_basis(a2, default_orders(a2, 2, 11));
    CHECK(r2.pass);
    std::map<long, std::size_t> a2dims;
    for (const DegreeVerdict& v : r2.per_order[0]) a2dims[total_degree(v.gamma)] += v.dimension;
    std::vector<std::size_t> expect = {1, 2, 4, 6, 9, 12, 16};
    for (long n = 0; n <= 6; ++n) CHECK(a2dims[n] == expect[(std::size_t)n]);
}

TEST_CASE("pbw normal form") {
    PBWData qp = quantum_plane(8);
    Context c = qp.gb.ctx();
    // ba = 2 ab = 2 z_a z_b
    auto exp = to_pbw_normal_form(mono(c, {1, 0}), qp);
    REQUIRE(exp.size() == 1);
    CHECK(exp[0].first == PBWMonomial{{0, 1}, {1, 1}});
    CHECK(exp[0].second == q(c.field, 2));
    // a generator round-trips
    auto round = to_pbw_normal_form(qp.generators[1].z, qp);
    REQUIRE(round.size() == 1);
    CHECK(round[0].first == PBWMonomial{{1, 1}});
    CHECK(round[0].second.is_one());

    PBWData a2 = a2_serre(8);
    Context c2 = a2.gb.ctx();
    // z_b z_a = Q_21 z_a z_b + z_{ba}
    Polynomial f = a2.generators[2].z * a2.generators[0].z;
    auto e2 = to_pbw_normal_form(f, a2);
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].first == PBWMonomial{{1, 1}});
    CHECK(e2[0].second.is_one());
    CHECK(e2[1].first == PBWMonomial{{0, 1}, {2, 1}});
    CHECK(e2[1].second == q(c2.field, 1, 2));
}

TEST_CASE("leading word of nondecreasing products") {
    PBWData a2 = a2_serre(8);
    const Alphabet& al = *a2.gb.ctx().alphabet;
    std::vector<PBWMonomial> cases = {
        {{0, 2}, {1, 1}}, {{0, 1}, {2, 2}}, {{1, 2}}, {{0, 1}, {1, 1}, {2, 1}}};
    for (const PBWMonomial& m : cases) {
        Word concat;
        for (const auto& [g, r] : m)
            for (long k = 0; k < r; ++k)
                concat.insert(concat.end(), a2.generators[g].u.begin(), a2.generators[g].u.end());
        if (a2.gb.word_reducible(concat)) continue;
        Polynomial f = a2.gb.normal_form(pbw_monomial_element(a2, m));
        CHECK(f.leading().first == concat);
        CHECK(f.leading().second.is_one());
        (void)al;
    }
}

TEST_CASE("filtration confinement") {
    auto f3 = Field::cyclotomic(3);
    PBWData x3 = one_letter(f3, Scalar::zeta(f3), 3, 9);
    CHECK(filtration_check(x3).pass);  // z^3 reduces to zero

    PBWData a2 = a2_serre(8);
    CHECK(filtration_check(a2).pass);

    PBWData h = heisenberg(6);
    CHECK(filtration_check(h).pass);
    // [z_b, z_a] = z_{ba} exactly
    Polynomial c = h.generators[2].z * h.generators[0].z -
                   h.generators[0].z * h.generators[2].z;
    auto e = to_pbw_normal_form(c, h);
    REQUIRE(e.size() == 1);
    CHECK(e[0].first == PBWMonomial{{1, 1}});
    CHECK(e[0].second.is_one());
    // [z_b, z_{ba}] = 0
    Polynomial c2 = h.generators[2].z * h.generators[1].z -
                    h.generators[1].z * h.generators[2].z;
    CHECK(to_pbw_normal_form(c2, h).empty());
}

TEST_CASE("root of unity check") {
    auto f3 = Field::cyclotomic(3);
    PBWData x3 = one_letter(f3, Scalar::zeta(f3), 3, 9);
    CHECK(root_of_unity_check(x3).pass);

    auto f5 = Field::cyclotomic(5);
    PBWData x5 = one_letter(f5, Scalar::zeta(f5), 5, 10);
    CHECK(root_of_unity_check(x5).pass);

    // x^3 at q = 2 over the rationals: (3)_2 = 7, hypotheses fail
    auto Q = Field::rationals();
    PBWData bad = one_letter(Q, Scalar::of_int(Q, 2), 3, 9);
    CheckReport rep = root_of_unity_check(bad);
    CHECK(!rep.pass);
    REQUIRE(rep.notes.size() == 1);

    // x^p over F_p with trivial braiding: order 1 = p/p
    auto F5 = Field::prime_field(5);
    PBWData xp = one_letter(F5, Scalar::one(F5), 5, 10);
    CHECK(root_of_unity_check(xp).pass);
}

TEST_CASE("ore towers") {
    PBWData h = heisenberg(6);
    CHECK(verify_pbw_basis(h, default_orders(h, 0, 1)).pass);
    OreTower t = ore_tower(h);
    REQUIRE(t.steps.size() == 3);
    // generators a < ba < b; delta_{ba}(z_a) = 0
    CHECK(t.steps[1].delta.size() == 1);
    CHECK(t.steps[1].delta[0].second.empty());
    // delta_b(z_a) = z_{ba}, delta_b(z_{ba}) = 0
    REQUIRE(t.steps[2].delta.size() == 2);
    REQUIRE(t.steps[2].delta[0].second.size() == 1);
    CHECK(t.steps[2].delta[0].second[0].first == PBWMonomial{{1, 1}});
    CHECK(t.steps[2].delta[0].second[0].second.is_one());
    CHECK(t.steps[2].delta[1].second.empty());

    // free algebra on one letter: tower of length one, no deltas
    Context c1 = make_ctx(Field::rationals(), 1);
    GroebnerBasis free1 = GroebnerBasis::complete(c1, {}, 5);
    PBWData p1 = pbw_data(free1, Bicharacter::trivial(c1.field, 1), BracketMode::Tau);
    OreTower t1 = ore_tower(p1);
    CHECK(t1.steps.size() == 1);
    CHECK(t1.steps[0].delta.empty());

    // commutative plane: all deltas vanish
    Context c2 = make_ctx(Field::rationals(), 2);
    GroebnerBasis comm =
        GroebnerBasis::complete(c2, {mono(c2, {1, 0}) - mono(c2, {0, 1})}, 6);
    PBWData pc = pbw_data(comm, Bicharacter::trivial(c2.field, 2), BracketMode::Tau);
    for (const OreStep& s : ore_tower(pc).steps)
        for (const auto& [j, table] : s.delta) CHECK(table.empty());

    // preconditions
    CHECK_THROWS_AS(ore_tower(quantum_plane(6)), Error);
    auto f3 = Field::cyclotomic(3);
    CHECK_THROWS_AS(ore_tower(one_letter(f3, Scalar::one(f3), 3, 9)), Error);
}

TEST_CASE("relative pbw") {
    PBWData h = heisenberg(6);
    Bicharacter triv = Bicharacter::trivial(h.gb.ctx().field, 2);
    SUBCASE("over the a-subalgebra") {
        CheckReport rep = relative_pbw(h.gb, 1, 2, triv, BracketMode::Tau);
        CHECK(rep.pass);
        REQUIRE(!rep.notes.empty());
        CHECK(rep.notes[0] == "Xi = {b*a, b}");
    }
    SUBCASE("Y1 equals Y2") {
        CheckReport rep = relative_pbw(h.gb, 2, 2, triv, BracketMode::Tau);
        CHECK(rep.pass);
        CHECK(rep.notes[0] == "Xi = {}");
    }
    SUBCASE("over the scalars") {
        PBWData qp = quantum_plane(6);
        CheckReport rep = relative_pbw(qp.gb, 0, 2, qp.chi, BracketMode::Tau);
        CHECK(rep.pass);
        CHECK(rep.notes[0] == "Xi = {a, b}");
    }
    SUBCASE("bad segments") {
        CHECK_THROWS_AS(relative_pbw(h.gb, 2, 1, triv, BracketMode::Tau), Error);
        CHECK_THROWS_AS(relative_pbw(h.gb, 0, 3, triv, BracketMode::Tau), Error);
    }
}
