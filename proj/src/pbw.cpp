#include "lynpbw/pbw.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "lynpbw/linalg.hpp"

namespace lynpbw {

namespace {

bool fits(const Degree& d, const Degree& gamma) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > gamma[i]) return false;
    return true;
}

Degree sub_degree(const Degree& a, const Degree& b) {
    Degree r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// all exponent sequences over the given factor order with monomial degree
// componentwise <= gamma, exponents below finite heights
void enumerate_monomials(const std::vector<PBWGenerator>& gens,
                         const std::vector<std::size_t>& order, const Degree& gamma,
                         std::size_t pos, Degree acc, PBWMonomial& cur,
                         std::vector<PBWMonomial>& out) {
    if (pos == order.size()) {
        out.push_back(cur);
        return;
    }
    std::size_t g = order[pos];
    const Degree& d = gens[g].degree;
    enumerate_monomials(gens, order, gamma, pos + 1, acc, cur, out);
    Degree next = acc;
    for (long r = 1;; ++r) {
        if (gens[g].height.finite && r >= gens[g].height.value) break;
        next = add_degree(next, d);
        if (!fits(next, gamma)) break;
        cur.emplace_back(g, r);
        enumerate_monomials(gens, order, gamma, pos + 1, next, cur, out);
        cur.pop_back();
    }
}

std::vector<PBWMonomial> monomials_upto(const std::vector<PBWGenerator>& gens,
                                        const std::vector<std::size_t>& order,
                                        const Degree& gamma) {
    std::vector<PBWMonomial> out;
    PBWMonomial cur;
    Degree acc(gamma.size(), 0);
    enumerate_monomials(gens, order, gamma, 0, acc, cur, out);
    return out;
}

struct DegreeLess {
    bool operator()(const Degree& a, const Degree& b) const { return gamma_compare(a, b) < 0; }
};

std::vector<Degree> all_degrees(const Context& ctx, long D) {
    std::set<Degree, DegreeLess> seen;
    for (const Word& w : enumerate_words(*ctx.alphabet, WordMode::AllWords, D))
        seen.insert(word_degree(*ctx.alphabet, w));
    return {seen.begin(), seen.end()};
}

std::vector<Scalar> coeff_row(const Polynomial& f, const std::vector<Word>& cols,
                              const FieldPtr& field) {
    std::vector<Scalar> row(cols.size(), Scalar::zero(field));
    for (const auto& [w, c] : f.terms()) {
        auto it = std::find(cols.begin(), cols.end(), w);
        if (it == cols.end()) raise(Errc::ValidationError, "normal form outside the word basis");
        row[(std::size_t)(it - cols.begin())] = c;
    }
    return row;
}

} // namespace

PBWData pbw_data(const GroebnerBasis& gb, const Bicharacter& chi, BracketMode mode) {
    PBWData p;
    p.gb = gb;
    p.chi = chi;
    p.mode = mode;
    p.D = gb.bound();
    Bracketer br(gb.ctx(), chi, mode);
    std::vector<Word> lyndon = gb.irreducible_words(IrrMode::Lyndon, p.D);
    std::sort(lyndon.begin(), lyndon.end(), lex_less);
    for (const Word& u : lyndon) {
        PBWGenerator g;
        g.u = u;
        g.z = gb.normal_form(br.bracket(u));
        g.degree = word_degree(*gb.ctx().alphabet, u);
        g.height = gb.height(u);
        p.generators.push_back(std::move(g));
    }
    return p;
}

Degree pbw_monomial_degree(const PBWData& p, const PBWMonomial& m) {
    Degree d((std::size_t)p.gb.ctx().alphabet->grading_dim(), 0);
    for (const auto& [g, r] : m)
        for (long k = 0; k < r; ++k) d = add_degree(d, p.generators[g].degree);
    return d;
}

Polynomial pbw_monomial_element(const PBWData& p, const PBWMonomial& m) {
    Polynomial f = Polynomial::unit(p.gb.ctx());
    for (const auto& [g, r] : m)
        for (long k = 0; k < r; ++k) f = f * p.generators[g].z;
    return f;
}

std::string pbw_monomial_str(const PBWData& p, const PBWMonomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, r] : m) {
        if (!first) os << "*";
        first = false;
        os << "z[" << word_str(*p.gb.ctx().alphabet, p.generators[g].u) << "]";
        if (r > 1) os << "^" << r;
    }
    return os.str();
}

std::vector<PBWMonomial> pbw_monomials_of_degree(const PBWData& p, const Degree& gamma,
                                                 const std::vector<std::size_t>& order) {
    std::vector<PBWMonomial> out;
    for (PBWMonomial& m : monomials_upto(p.generators, order, gamma))
        if (pbw_monomial_degree(p, m) == gamma) out.push_back(std::move(m));
    return out;
}

std::vector<std::vector<std::size_t>> default_orders(const PBWData& p, int extra,
                                                     unsigned long seed) {
    std::vector<std::size_t> lex(p.generators.size());
    for (std::size_t i = 0; i < lex.size(); ++i) lex[i] = i;
    std::vector<std::vector<std::size_t>> orders{lex};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < extra; ++k) {
        std::vector<std::size_t> o = lex;
        std::shuffle(o.begin(), o.end(), rng);
        orders.push_back(std::move(o));
    }
    return orders;
}

PBWReport verify_pbw_basis(const PBWData& p,
                           const std::vector<std::vector<std::size_t>>& orders) {
    if (orders.empty()) raise(Errc::PreconditionViolated, "need at least one order");
    PBWReport rep;
    rep.pass = true;
    std::vector<Degree> degrees = all_degrees(p.gb.ctx(), p.D);
    for (const auto& order : orders) {
        std::vector<DegreeVerdict> verdicts;
        for (const Degree& gamma : degrees) {
            DegreeVerdict v;
            v.gamma = gamma;
            std::vector<Word> cols = p.gb.irreducible_words_of_degree(IrrMode::All, gamma);
            std::vector<PBWMonomial> monos = pbw_monomials_of_degree(p, gamma, order);
            v.monomials = monos.size();
            v.dimension = cols.size();
            if (monos.size() != cols.size()) {
                v.pass = false;
            } else {
                Echelon ech(p.gb.ctx().field, cols.size());
                std::size_t rank = 0;
                for (const PBWMonomial& m : monos) {
                    Polynomial nf = p.gb.normal_form(pbw_monomial_element(p, m));
                    if (ech.add(coeff_row(nf, cols, p.gb.ctx().field))) ++rank;
                }
                v.pass = rank == cols.size();
            }
            if (!v.pass) rep.pass = false;
            verdicts.push_back(std::move(v));
        }
        rep.per_order.push_back(std::move(verdicts));
    }
    return rep;
}

std::vector<std::pair<PBWMonomial, Scalar>> to_pbw_normal_form(const Polynomial& f,
                                                               const PBWData& p) {
    std::vector<std::pair<PBWMonomial, Scalar>> out;
    if (f.is_zero()) return out;
    Polynomial nf = p.gb.normal_form(f);
    if (nf.is_zero()) return out;
    // split into homogeneous components, ascending degree
    std::map<Degree, Polynomial, DegreeLess> comps;
    for (const auto& [w, c] : nf.terms()) {
        Degree d = word_degree(*p.gb.ctx().alphabet, w);
        auto it = comps.find(d);
        if (it == comps.end()) it = comps.emplace(d, Polynomial(p.gb.ctx())).first;
        it->second += Polynomial::monomial(p.gb.ctx(), w, c);
    }
    std::vector<std::size_t> lex(p.generators.size());
    for (std::size_t i = 0; i < lex.size(); ++i) lex[i] = i;
    for (const auto& [gamma, comp] : comps) {
        std::vector<Word> cols = p.gb.irreducible_words_of_degree(IrrMode::All, gamma);
        std::vector<PBWMonomial> monos = pbw_monomials_of_degree(p, gamma, lex);
        if (monos.size() != cols.size())
            raise(Errc::BasisNotVerified, "PBW matrix not square at the needed degree");
        // rows indexed by irreducible words, columns by monomials
        std::vector<std::vector<Scalar>> A(
            cols.size(), std::vector<Scalar>(monos.size(), Scalar::zero(p.gb.ctx().field)));
        for (std::size_t j = 0; j < monos.size(); ++j) {
            Polynomial m = p.gb.normal_form(pbw_monomial_element(p, monos[j]));
            std::vector<Scalar> col = coeff_row(m, cols, p.gb.ctx().field);
            for (std::size_t i = 0; i < cols.size(); ++i) A[i][j] = col[i];
        }
        if (!is_invertible(p.gb.ctx().field, A))
            raise(Errc::BasisNotVerified, "PBW matrix singular at the needed degree");
        std::vector<Scalar> b = coeff_row(comp, cols, p.gb.ctx().field);
        std::vector<Scalar> x;
        if (!linear_solve(p.gb.ctx().field, A, b, x))
            raise(Errc::BasisNotVerified, "PBW solve failed at the needed degree");
        for (std::size_t j = 0; j < monos.size(); ++j)
            if (!x[j].is_zero()) out.emplace_back(monos[j], x[j]);
    }
    return out;
}

CheckReport filtration_check(const PBWData& p) {
    CheckReport rep;
    const auto& gens = p.generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto confined_below = [&](const std::vector<std::pair<PBWMonomial, Scalar>>& exp) {
            for (const auto& [m, c] : exp)
                for (const auto& [g, r] : m)
                    if (g >= i) return false;
            return true;
        };
        if (gens[i].height.finite) {
            Polynomial f = Polynomial::unit(p.gb.ctx());
            for (long k = 0; k < gens[i].height.value; ++k) f = f * gens[i].z;
            if (!confined_below(to_pbw_normal_form(f, p))) {
                rep.pass = false;
                rep.notes.push_back("power of z[" + word_str(*p.gb.ctx().alphabet, gens[i].u) +
                                    "] escapes the lower filtration step");
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            Degree d = add_degree(gens[i].degree, gens[j].degree);
            if (total_degree(d) > p.D) continue;
            Polynomial c = braided_commutator(gens[i].z, gens[j].z, p.chi, p.mode);
            if (!confined_below(to_pbw_normal_form(c, p))) {
                rep.pass = false;
                rep.notes.push_back("commutator [z[" + word_str(*p.gb.ctx().alphabet, gens[i].u) +
                                    "], z[" + word_str(*p.gb.ctx().alphabet, gens[j].u) +
                                    "]] escapes the lower filtration step");
            }
        }
    }
    return rep;
}

CheckReport root_of_unity_check(const PBWData& p) {
    CheckReport rep;
    unsigned long ch = p.gb.ctx().field->characteristic();
    for (const PBWGenerator& g : p.generators) {
        if (!g.height.finite) continue;
        long n = g.height.value;
        Scalar q = p.chi.eval(g.degree, g.degree);
        std::string name = word_str(*p.gb.ctx().alphabet, g.u);
        if (!qint(n, q).is_zero()) {
            rep.pass = false;
            rep.notes.push_back("(" + std::to_string(n) + ")_q nonzero for " + name);
            continue;
        }
        RootOrder ro = root_of_unity_order(q, (unsigned long)n);
        if (ch == 0) {
            if (!ro.is_root || (long)ro.order != n) {
                rep.pass = false;
                rep.notes.push_back("order of q differs from the height of " + name);
            }
        } else {
            bool ok = false;
            if (ro.is_root && n % (long)ro.order == 0) {
                long rest = n / (long)ro.order;
                while (rest % (long)ch == 0) rest /= (long)ch;
                ok = rest == 1;
            }
            if (!ok) {
                rep.pass = false;
                rep.notes.push_back("order of q is not height/p^s for " + name);
            }
        }
    }
    return rep;
}

OreTower ore_tower(const PBWData& p) {
    if (!p.chi.is_trivial())
        raise(Errc::NontrivialBicharacter, "Ore tower needs a trivial bicharacter");
    for (const PBWGenerator& g : p.generators)
        if (g.height.finite)
            raise(Errc::FiniteHeightPresent, "Ore tower needs all heights unbounded");
    OreTower tower;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        OreStep step;
        step.gen = i;
        for (std::size_t j = 0; j < i; ++j) {
            Degree d = add_degree(p.generators[i].degree, p.generators[j].degree);
            if (total_degree(d) > p.D) {
                tower.notes.push_back("skipped delta pair beyond the degree bound");
                continue;
            }
            Polynomial c = p.generators[i].z * p.generators[j].z -
                           p.generators[j].z * p.generators[i].z;
            step.delta.emplace_back(j, to_pbw_normal_form(c, p));
        }
        tower.steps.push_back(std::move(step));
    }
    return tower;
}

CheckReport relative_pbw(const GroebnerBasis& gb, int y1, int y2, const Bicharacter& chi,
                         BracketMode mode) {
    CheckReport rep;
    const Alphabet& full = *gb.ctx().alphabet;
    if (y1 < 0 || y1 > y2 || y2 > full.size())
        raise(Errc::NotClosed, "need initial segments Y1 within Y2 within X");
    std::vector<int> ly2(y2), ly1(y1);
    for (int i = 0; i < y2; ++i) ly2[i] = i;
    for (int i = 0; i < y1; ++i) ly1[i] = i;
    SubalgebraResult s2 = intersect_subalgebra(gb, ly2);
    if (!s2.verified) raise(Errc::SubalgebraNotVerified, "Y2 subalgebra check failed");
    const GroebnerBasis& gb2 = y2 == full.size() ? gb : s2.candidate;
    const Context& ctx2 = gb2.ctx();
    SubalgebraResult s1 = intersect_subalgebra(gb2, ly1);
    if (!s1.verified) raise(Errc::SubalgebraNotVerified, "Y1 subalgebra check failed");

    // Xi: irreducible Lyndon words of A involving a letter outside Y1
    Bracketer br(ctx2, chi, mode);
    std::vector<PBWGenerator> xi;
    {
        std::vector<Word> lyndon = gb2.irreducible_words(IrrMode::Lyndon, gb2.bound());
        std::sort(lyndon.begin(), lyndon.end(), lex_less);
        for (const Word& u : lyndon) {
            bool outside = false;
            for (int x : u)
                if (x >= y1) outside = true;
            if (!outside) continue;
            PBWGenerator g;
            g.u = u;
            g.z = gb2.normal_form(br.bracket(u));
            g.degree = word_degree(*ctx2.alphabet, u);
            g.height = gb2.height(u);
            xi.push_back(std::move(g));
        }
    }
    {
        std::string names = "Xi = {";
        for (std::size_t i = 0; i < xi.size(); ++i)
            names += (i ? ", " : "") + word_str(*ctx2.alphabet, xi[i].u);
        rep.notes.push_back(names + "}");
    }

    auto dim_B = [&](const Degree& delta) -> std::size_t {
        if (y1 == 0) return total_degree(delta) == 0 ? 1 : 0;
        if (total_degree(delta) == 0) return 1;
        for (std::size_t i = 0; i < delta.size(); ++i)
            if (delta[i] < 0) return 0;
        return s1.candidate.irreducible_words_of_degree(IrrMode::All, delta).size();
    };
    auto b_words = [&](const Degree& delta) -> std::vector<Word> {
        if (total_degree(delta) == 0) return {Word{}};
        if (y1 == 0) return {};
        return s1.candidate.irreducible_words_of_degree(IrrMode::All, delta);
    };

    std::vector<std::size_t> order(xi.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (const Degree& gamma : all_degrees(ctx2, gb2.bound())) {
        std::vector<Word> cols = gb2.irreducible_words_of_degree(IrrMode::All, gamma);
        std::size_t dimA = cols.size();
        std::vector<PBWMonomial> monos;
        {
            PBWMonomial cur;
            Degree acc(gamma.size(), 0);
            enumerate_monomials(xi, order, gamma, 0, acc, cur, monos);
        }
        std::size_t counted = 0;
        Echelon left(ctx2.field, cols.size()), right(ctx2.field, cols.size());
        for (const PBWMonomial& m : monos) {
            Degree dm((std::size_t)ctx2.alphabet->grading_dim(), 0);
            Polynomial zm = Polynomial::unit(ctx2);
            for (const auto& [g, r] : m)
                for (long k = 0; k < r; ++k) {
                    dm = add_degree(dm, xi[g].degree);
                    zm = zm * xi[g].z;
                }
            Degree delta = sub_degree(gamma, dm);
            counted += dim_B(delta);
            for (const Word& b : b_words(delta)) {
                Polynomial bp = Polynomial::monomial(ctx2, b, Scalar::one(ctx2.field));
                left.add(coeff_row(gb2.normal_form(bp * zm), cols, ctx2.field));
                right.add(coeff_row(gb2.normal_form(zm * bp), cols, ctx2.field));
            }
        }
        bool ok = counted == dimA && left.rank() == dimA && right.rank() == dimA;
        if (!ok) {
            rep.pass = false;
            std::ostringstream os;
            os << "freeness fails at degree (";
            for (std::size_t i = 0; i < gamma.size(); ++i) os << (i ? "," : "") << gamma[i];
            os << "): counted " << counted << ", dim " << dimA << ", ranks " << left.rank()
               << "/" << right.rank();
            rep.notes.push_back(os.str());
        }
    }
    return rep;
}

} // namespace lynpbw
