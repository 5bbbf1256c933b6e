// End-to-end acceptance checks; prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "lynpbw/commands.hpp"
#include "lynpbw/series.hpp"

using namespace lynpbw;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double budget_ms,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = Clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (ms > budget_ms) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(), ms,
                detail.empty() ? "" : " -- ", detail.c_str());
}

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

// ---- reference implementations straight from the definitions ----

// proper prefixes are larger; otherwise first difference decides
bool lex_less_ref(const Word& u, const Word& v) {
    std::size_t i = 0;
    while (i < u.size() && i < v.size() && u[i] == v[i]) ++i;
    if (i == v.size()) return v.size() < u.size();  // v is a prefix of u
    if (i == u.size()) return false;                // u is a prefix of v
    return u[i] < v[i];
}

bool is_lyndon_ref(const Word& u) {
    if (u.empty()) return false;
    for (std::size_t k = 1; k < u.size(); ++k)
        if (!lex_less_ref(Word(u.begin() + (long)k, u.end()), u)) return false;
    return true;
}

std::pair<Word, Word> shirshov_ref(const Word& u) {
    Word best;
    for (std::size_t k = 1; k < u.size(); ++k) {
        Word s(u.begin() + (long)k, u.end());
        if (best.empty() || lex_less_ref(best, s)) best = s;
    }
    return {Word(u.begin(), u.end() - (long)best.size()), best};
}

// every factorization into nondecreasing Lyndon parts
void all_factorizations_ref(const Word& u, std::vector<Word>& cur,
                            std::vector<std::vector<Word>>& out) {
    if (u.empty()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t len = 1; len <= u.size(); ++len) {
        Word head(u.begin(), u.begin() + (long)len);
        if (!is_lyndon_ref(head)) continue;
        if (!cur.empty() && lex_less_ref(head, cur.back())) continue;
        cur.push_back(head);
        all_factorizations_ref(Word(u.begin() + (long)len, u.end()), cur, out);
        cur.pop_back();
    }
}

std::vector<Word> words_of_length(int letters, std::size_t len) {
    std::vector<Word> out = {{}};
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (int x = 0; x < letters; ++x) {
                Word e = w;
                e.push_back(x);
                next.push_back(e);
            }
        out = std::move(next);
    }
    return out;
}

Presentation load(const std::string& name) {
    std::ifstream in(std::string(LYNPBW_CORPUS_DIR) + "/" + name + ".pres");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string run_cli(const std::string& args, const std::string& outfile) {
    std::string cmd = std::string(LYNPBW_CLI_BIN) + " " + args + " > " + outfile + " 2>&1";
    std::system(cmd.c_str());
    std::ifstream in(outfile);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PBWData build(const Presentation& pres, long D) {
    return pbw_data(GroebnerBasis::complete(pres.ctx, pres.relations, D), pres.chi,
                    BracketMode::Tau);
}

} // namespace

int main() {
    criterion(1, "worked factorization example", 1.0, [](std::string&) {
        // letters a < b; the example word is b b a b a
        auto [l, r] = shirshov({1, 1, 0, 1, 0});
        return l == Word{1, 1, 0} && r == Word{1, 0};
    });

    criterion(2, "word engine agrees with definition-level search", 30000.0, [](std::string& why) {
        for (auto [letters, maxlen] : {std::pair<int, std::size_t>{2, 10}, {3, 7}}) {
            for (std::size_t len = 1; len <= maxlen; ++len) {
                for (const Word& u : words_of_length(letters, len)) {
                    if (is_lyndon(u) != is_lyndon_ref(u)) {
                        why = "is_lyndon mismatch";
                        return false;
                    }
                    if (u.size() >= 2 && is_lyndon(u) && shirshov(u) != shirshov_ref(u)) {
                        why = "shirshov mismatch";
                        return false;
                    }
                    std::vector<std::vector<Word>> all;
                    std::vector<Word> cur;
                    all_factorizations_ref(u, cur, all);
                    if (all.size() != 1 || lyndon_decompose(u) != all[0]) {
                        why = "decomposition mismatch";
                        return false;
                    }
                }
            }
        }
        return true;
    });

    criterion(3, "two-letter q-plane invariants", 10000.0, [](std::string& why) {
        Presentation pres = load("quantum_plane");
        PBWData p = build(pres, 10);
        if (p.gb.elements().size() != 1 ||
            p.gb.elements()[0] != mono(pres.ctx, {1, 0}) - mono(pres.ctx, {0, 1}, 2)) {
            why = "unexpected basis";
            return false;
        }
        std::vector<Word> irr = p.gb.irreducible_words(IrrMode::All, 10);
        std::vector<std::size_t> dims(11, 0);
        for (const Word& w : irr) ++dims[(std::size_t)w.size()];
        for (std::size_t n = 0; n <= 10; ++n)
            if (dims[n] != n + 1) {
                why = "dimension sequence";
                return false;
            }
        HilbertReport h = hilbert_series(p);
        if (!h.all_match) {
            why = "series mismatch";
            return false;
        }
        GKReport gk = gk_report(p);
        HomologyReport hb = homology_bounds(p);
        if (!gk.exact || gk.value != 2 || hb.bound != 2) {
            why = "growth/homology";
            return false;
        }
        if (!biideal_check(Comultiplication::standard(pres.ctx, pres.chi), p.gb)) {
            why = "biideal";
            return false;
        }
        if (!verify_pbw_basis(p, default_orders(p, 2, 5)).pass) {
            why = "basis verification";
            return false;
        }
        return true;
    });

    criterion(4, "rank-two Serre invariants", 60000.0, [](std::string& why) {
        Presentation pres = load("a2_serre_q2");
        PBWData p = build(pres, 7);
        std::vector<Word> obs = p.gb.obstructions();
        if (obs != std::vector<Word>{{1, 0, 0}, {1, 1, 0}}) {
            why = "obstructions";
            return false;
        }
        if (p.generators.size() != 3 || p.generators[0].u != Word{0} ||
            p.generators[1].u != Word{1, 0} || p.generators[2].u != Word{1}) {
            why = "generators";
            return false;
        }
        std::vector<std::size_t> dims(7, 0);
        for (const Word& w : p.gb.irreducible_words(IrrMode::All, 6)) ++dims[w.size()];
        std::vector<std::size_t> expect = {1, 2, 4, 6, 9, 12, 16};
        if (dims != expect) {
            why = "dimension sequence";
            return false;
        }
        const Alphabet& a = *pres.ctx.alphabet;
        if (ambiguities(a, obs, 3, 7) != std::vector<Word>{{1, 1, 0, 0}} ||
            !ambiguities(a, obs, 4, 7).empty()) {
            why = "chain sets";
            return false;
        }
        HomologyReport hb = homology_bounds(p);
        if (hb.bound != 3 || !hb.fibonacci_checked || !hb.fibonacci_ok ||
            total_degree(hb.gorenstein) != 4) {
            why = "homology bound / degree chain";
            return false;
        }
        return true;
    });

    criterion(5, "rank one at roots of unity", 5000.0, [](std::string& why) {
        for (long l : {3L, 5L}) {
            Presentation pres = load(l == 3 ? "x3_zeta3" : "x5_zeta5");
            PBWData p = build(pres, pres.max_degree);
            if (p.generators.size() != 1 || !(p.generators[0].height == HeightResult{true, l})) {
                why = "height";
                return false;
            }
            if ((long)p.gb.irreducible_words(IrrMode::All, pres.max_degree).size() != l) {
                why = "quotient dimension";
                return false;
            }
            if (!biideal_check(Comultiplication::standard(pres.ctx, pres.chi), p.gb)) {
                why = "biideal";
                return false;
            }
            CheckReport roots = root_of_unity_check(p);
            if (!roots.pass) {
                why = "root order";
                return false;
            }
        }
        Presentation neg = load("x3_q2_negative");
        PBWData pn = build(neg, neg.max_degree);
        if (biideal_check(Comultiplication::standard(neg.ctx, neg.chi), pn.gb)) {
            why = "negative control biideal";
            return false;
        }
        CheckReport bad = root_of_unity_check(pn);
        Scalar two = Scalar::of_int(neg.ctx.field, 2);
        if (bad.pass || bad.notes.empty() || qint(3, two) != Scalar::of_int(neg.ctx.field, 7)) {
            why = "negative control root order";
            return false;
        }
        return true;
    });

    criterion(6, "prime characteristic branch", 5000.0, [](std::string& why) {
        for (unsigned long prime : {2UL, 3UL}) {
            Context c = make_ctx(Field::prime_field(prime), 1);
            GroebnerBasis gb =
                GroebnerBasis::complete(c, {mono(c, Word((std::size_t)prime, 0))}, 2 * (long)prime);
            PBWData p = pbw_data(gb, Bicharacter::trivial(c.field, 1), BracketMode::Tau);
            if (!(p.generators[0].height == HeightResult{true, (long)prime})) {
                why = "height";
                return false;
            }
            CheckReport roots = root_of_unity_check(p);
            if (!roots.pass) {
                why = "char-p order law";
                return false;
            }
        }
        return true;
    });

    criterion(7, "enveloping-algebra tower", 30000.0, [](std::string& why) {
        Presentation pres = load("heisenberg");
        PBWData p = build(pres, 6);
        if (p.generators.size() != 3) {
            why = "generators";
            return false;
        }
        for (const PBWGenerator& g : p.generators)
            if (g.height.finite) {
                why = "height should be unknown";
                return false;
            }
        const Polynomial &za = p.generators[0].z, &zba = p.generators[1].z,
                         &zb = p.generators[2].z;
        auto comm = [&](const Polynomial& f, const Polynomial& g) {
            return p.gb.normal_form(f * g - g * f);
        };
        if (comm(zb, za) != p.gb.normal_form(zba) || !comm(zb, zba).is_zero() ||
            !comm(zba, za).is_zero()) {
            why = "commutator table";
            return false;
        }
        if (!filtration_check(p).pass) {
            why = "filtration";
            return false;
        }
        OreTower tower = ore_tower(p);
        if (tower.steps.size() != 3) {
            why = "tower length";
            return false;
        }
        // delta_b(z_a) = z_ba, delta_b(z_ba) = 0, delta_ba(z_a) = 0
        const auto& top = tower.steps[2].delta;
        bool table = tower.steps[1].delta.size() == 1 && tower.steps[1].delta[0].second.empty() &&
                     top.size() == 2 &&
                     top[0].second ==
                         std::vector<std::pair<PBWMonomial, Scalar>>{
                             {{{1, 1}}, Scalar::one(pres.ctx.field)}} &&
                     top[1].second.empty();
        if (!table) {
            why = "derivation table";
            return false;
        }
        CheckReport rel = relative_pbw(p.gb, 1, 2, pres.chi, BracketMode::Tau);
        bool xi_named = false;
        for (const std::string& n : rel.notes)
            if (n == "Xi = {b*a, b}") xi_named = true;
        if (!rel.pass || !xi_named) {
            why = "relative basis over the first letter";
            return false;
        }
        Comultiplication d = Comultiplication::standard(pres.ctx, pres.chi);
        if (!coideal_check(p, d, 1, Side::Left).pass) {
            why = "coideal at the middle generator";
            return false;
        }
        return true;
    });

    criterion(8, "coproduct formula sweep", 60000.0, [](std::string& why) {
        auto F = Field::rationals();
        Context c = make_ctx(F, 2);
        Bicharacter chi(F, 2,
                        {Scalar::of_int(F, 2), Scalar::of_int(F, 3), Scalar::of_int(F, 5),
                         Scalar::of_int(F, 7)});
        Comultiplication d = Comultiplication::standard(c, chi);
        std::vector<Word> all = enumerate_words(*c.alphabet, WordMode::AllWords, 5);
        for (const Word& u : all) {
            if (u.empty() || !is_lyndon(u)) continue;
            for (const Word& w : all) {
                bool admissible = true;
                for (const Word& atom : lyndon_decompose(w))
                    if (!lex_less(atom, u)) admissible = false;
                if (!admissible) continue;
                for (long n = 0; (long)(w.size() + (std::size_t)n * u.size()) <= 5; ++n) {
                    if (!coproduct_formula_check(d, w, u, n, BracketMode::TauInverse, Side::Left) ||
                        !coproduct_formula_check(d, w, u, n, BracketMode::Tau, Side::Right)) {
                        why = "failure at w=" + word_str(*c.alphabet, w) +
                              " u=" + word_str(*c.alphabet, u) + " n=" + std::to_string(n);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    criterion(9, "restricted words match irreducible words", 30000.0, [](std::string& why) {
        for (const char* name :
             {"quantum_plane", "a2_serre_q2", "x3_zeta3", "x5_zeta5", "heisenberg", "free2"}) {
            Presentation pres = load(name);
            long D = std::min(pres.max_degree, 8L);
            PBWData p = build(pres, D);
            if (!biideal_check(pres.comultiplication(), p.gb)) {
                why = std::string(name) + ": biideal expected to pass";
                return false;
            }
            if (p.gb.irreducible_words(IrrMode::Restricted, D) !=
                p.gb.irreducible_words(IrrMode::All, D)) {
                why = std::string(name) + ": word sets differ";
                return false;
            }
        }
        return true;
    });

    criterion(10, "byte-identical reports", 600000.0, [](std::string& why) {
        for (const char* name : {"quantum_plane", "a2_serre_q2", "x3_zeta3", "x5_zeta5",
                                 "x3_q2_negative", "heisenberg", "free2"}) {
            std::string file = std::string(LYNPBW_CORPUS_DIR) + "/" + name + ".pres";
            std::string base = "report-all " + file + " --machine";
            std::string r1 = run_cli(base, "acc_run1.txt");
            std::string r2 = run_cli(base, "acc_run2.txt");
            std::string r4 = run_cli(base + " --threads 4", "acc_run4.txt");
            if (r1.empty() || r1 != r2 || r1 != r4) {
                why = std::string(name) + ": outputs differ";
                return false;
            }
        }
        std::remove("acc_run1.txt");
        std::remove("acc_run2.txt");
        std::remove("acc_run4.txt");
        return true;
    });

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
