#include "lynpbw/series.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace lynpbw {

namespace {

std::string degree_str(const Degree& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

bool is_factor(const Word& f, const Word& w) {
    return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

bool has_factor_in(const Word& w, const std::vector<Word>& V) {
    for (const Word& v : V)
        if (v.size() <= w.size() && is_factor(v, w)) return true;
    return false;
}

void check_antichain(const std::vector<Word>& V) {
    for (const Word& v : V)
        if (v.empty()) raise(Errc::ValidationError, "the empty word cannot be a member");
    for (const Word& u : V)
        for (const Word& v : V)
            if (u != v && is_factor(u, v))
                raise(Errc::NotAntichain, "one member is a proper factor of another");
}

// Greedy ambiguity decomposition: each part after the first is the shortest
// extension that creates a factor from V.  Returns the part count, or 0 when
// w admits no decomposition.
std::size_t decompose_parts(const Word& w, const std::vector<Word>& V) {
    if (w.empty()) return 0;
    Word cur = {w[0]};
    if (has_factor_in(cur, V)) return 0;
    std::size_t parts = 1, pos = 1;
    while (pos < w.size()) {
        std::size_t take = 0;
        for (std::size_t t = 1; pos + t <= w.size(); ++t) {
            Word joined = cur;
            joined.insert(joined.end(), w.begin() + pos, w.begin() + pos + t);
            if (has_factor_in(joined, V)) {
                take = t;
                break;
            }
        }
        if (take == 0) return 0;
        Word next(w.begin() + pos, w.begin() + pos + take);
        if (has_factor_in(next, V)) return 0;
        cur = std::move(next);
        pos += take;
        ++parts;
    }
    return parts;
}

// Conservative certificate that no irreducible Lyndon word exists above the
// truncation: every Lyndon word within one obstruction-degree of the bound is
// already reducible, so any higher Lyndon word would contain one.
bool generators_exhausted(const GroebnerBasis& gb) {
    const Alphabet& a = *gb.ctx().alphabet;
    long margin = 1;
    for (const Word& o : gb.obstructions())
        margin = std::max(margin, total_degree(word_degree(a, o)));
    for (const Word& w : enumerate_words(a, WordMode::LyndonWords, gb.bound()))
        if (total_degree(word_degree(a, w)) > gb.bound() - margin && !gb.word_reducible(w))
            return false;
    return true;
}

std::vector<long> fib(std::size_t upto) {
    std::vector<long> f = {1, 1};
    while (f.size() <= upto) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
}

} // namespace

TruncatedSeries TruncatedSeries::one(int theta, long D) {
    TruncatedSeries s;
    s.theta = theta;
    s.D = D;
    s.coeffs[Degree((std::size_t)theta, 0)] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(const Degree& d, long D) {
    if (total_degree(d) <= 0) raise(Errc::ValidationError, "geometric series needs a positive degree");
    TruncatedSeries s;
    s.theta = (int)d.size();
    s.D = D;
    Degree cur((std::size_t)s.theta, 0);
    while (total_degree(cur) <= D) {
        s.coeffs[cur] = 1;
        cur = add_degree(cur, d);
    }
    return s;
}

long TruncatedSeries::coeff(const Degree& gamma) const {
    auto it = coeffs.find(gamma);
    return it == coeffs.end() ? 0 : it->second;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
    if (theta != other.theta) raise(Errc::ValidationError, "series variable counts differ");
    TruncatedSeries r;
    r.theta = theta;
    r.D = std::min(D, other.D);
    for (const auto& [d1, c1] : coeffs) {
        for (const auto& [d2, c2] : other.coeffs) {
            Degree d = add_degree(d1, d2);
            if (total_degree(d) > r.D) continue;
            r.coeffs[d] += c1 * c2;
        }
    }
    return r;
}

std::vector<long> TruncatedSeries::total_coeffs() const {
    std::vector<long> out((std::size_t)D + 1, 0);
    for (const auto& [d, c] : coeffs) out[(std::size_t)total_degree(d)] += c;
    return out;
}

bool is_lyndon_ideal(const GroebnerBasis& gb) {
    for (const Word& o : gb.obstructions())
        if (!is_lyndon(o)) return false;
    return true;
}

bool is_lyndon_power_ideal(const GroebnerBasis& gb) {
    for (const Word& o : gb.obstructions()) {
        std::vector<Word> atoms = lyndon_decompose(o);
        for (const Word& atom : atoms)
            if (atom != atoms[0]) return false;
    }
    return true;
}

HilbertReport hilbert_series(const PBWData& p) {
    if (!is_lyndon_power_ideal(p.gb))
        raise(Errc::NotLyndonIdeal, "obstructions are not powers of Lyndon words");
    const Alphabet& a = *p.gb.ctx().alphabet;
    int theta = a.grading_dim();

    HilbertReport rep;
    rep.series = TruncatedSeries::one(theta, p.D);
    long maxgen = 0;
    for (const PBWGenerator& g : p.generators) {
        rep.series = rep.series.mul(TruncatedSeries::geometric(g.degree, p.D));
        maxgen = std::max(maxgen, total_degree(g.degree));
    }
    rep.dprime = p.D - maxgen;

    std::set<Degree> degrees;
    degrees.insert(Degree((std::size_t)theta, 0));
    for (const Word& w : enumerate_words(a, WordMode::AllWords, rep.dprime))
        degrees.insert(word_degree(a, w));
    for (const Degree& gamma : degrees) {
        long predicted = rep.series.coeff(gamma);
        long counted = (long)p.gb.irreducible_words_of_degree(IrrMode::All, gamma).size();
        if (predicted != counted) {
            rep.all_match = false;
            rep.notes.push_back("degree " + degree_str(gamma) + ": product gives " +
                                std::to_string(predicted) + ", dimension is " +
                                std::to_string(counted));
        }
    }
    return rep;
}

GKReport gk_report(const PBWData& p) {
    GKReport rep;
    bool lyndon = is_lyndon_ideal(p.gb);
    bool exhausted = generators_exhausted(p.gb);
    if (lyndon && exhausted) {
        rep.exact = true;
        rep.value = p.generators.size();
        rep.notes.push_back("generator set certified complete within the bound");
    } else {
        rep.exact = false;
        std::size_t unknown = 0;
        for (const PBWGenerator& g : p.generators)
            if (!g.height.finite) ++unknown;
        rep.value = unknown;
        if (!lyndon) rep.notes.push_back("not a Lyndon ideal; reporting a lower bound");
        if (!exhausted)
            rep.notes.push_back("generators may continue past the bound; reporting a lower bound");
    }
    return rep;
}

std::vector<Word> ambiguities(const Alphabet& a, const std::vector<Word>& V, long n, long D) {
    if (n < 0) raise(Errc::IndexOutOfRange, "need n >= 0");
    check_antichain(V);
    std::vector<Word> out;
    if (n == 0) {
        out.push_back({});
    } else if (n == 1) {
        for (int x = 0; x < a.size(); ++x) {
            Word w = {x};
            if (std::find(V.begin(), V.end(), w) == V.end() &&
                total_degree(word_degree(a, w)) <= D)
                out.push_back(w);
        }
    } else if (n == 2) {
        for (const Word& v : V)
            if (v.size() >= 2 && total_degree(word_degree(a, v)) <= D) out.push_back(v);
        std::sort(out.begin(), out.end(),
                  [&](const Word& u, const Word& v) { return glex_less(a, u, v); });
    } else {
        for (const Word& w : enumerate_words(a, WordMode::AllWords, D))
            if (decompose_parts(w, V) == (std::size_t)n) out.push_back(w);
    }
    return out;
}

CheckReport chain_properties_check(const Alphabet& a, const std::vector<Word>& V, long D) {
    for (const Word& v : V)
        if (!is_lyndon(v)) raise(Errc::NotAllLyndon, "members must be Lyndon words");
    check_antichain(V);
    CheckReport rep;

    // U, sorted descending by the pseudo-lexicographic order
    std::vector<Word> U;
    for (const Word& u : enumerate_words(a, WordMode::LyndonWords, D))
        if (!has_factor_in(u, V)) U.push_back(u);
    std::sort(U.begin(), U.end(), [](const Word& u, const Word& v) { return lex_less(v, u); });

    std::size_t nmax = 1;
    for (const Word& v : V)
        if (v.size() >= 2) ++nmax;

    // (1) no ambiguities beyond the member count
    for (std::size_t n = nmax + 1; n <= nmax + 2; ++n)
        for (const Word& w : ambiguities(a, V, (long)n, D)) {
            rep.pass = false;
            rep.notes.push_back("chain set " + std::to_string(n) + " should be empty, contains " +
                                word_str(a, w));
        }

    // (2) every ambiguity factors into a strictly decreasing product over U
    std::function<bool(const Word&, std::size_t, std::size_t)> split =
        [&](const Word& w, std::size_t parts, std::size_t min_rank) -> bool {
        // min_rank: position in the descending list below which parts must come
        if (parts == 0) return w.empty();
        if (w.empty()) return false;
        for (std::size_t r = min_rank; r < U.size(); ++r) {
            const Word& u = U[r];
            if (u.size() > w.size()) continue;
            if (!std::equal(u.begin(), u.end(), w.begin())) continue;
            if (split(Word(w.begin() + (long)u.size(), w.end()), parts - 1, r + 1)) return true;
        }
        return false;
    };
    for (std::size_t n = 1; n <= nmax; ++n)
        for (const Word& w : ambiguities(a, V, (long)n, D))
            if (!split(w, n, 0)) {
                rep.pass = false;
                rep.notes.push_back("no decreasing factorization over U for " + word_str(a, w));
            }

    // (3) consecutive runs in U concatenate to ambiguities
    for (std::size_t n = 2; n <= nmax; ++n) {
        for (std::size_t i = 0; i + n <= U.size(); ++i) {
            Word w;
            for (std::size_t k = 0; k < n; ++k) w.insert(w.end(), U[i + k].begin(), U[i + k].end());
            if (total_degree(word_degree(a, w)) > D) continue;
            if (decompose_parts(w, V) != n) {
                rep.pass = false;
                rep.notes.push_back("consecutive chain product " + word_str(a, w) +
                                    " is not an ambiguity of length " + std::to_string(n));
            }
        }
    }
    return rep;
}

HomologyReport homology_bounds(const PBWData& p) {
    if (!is_lyndon_power_ideal(p.gb))
        raise(Errc::NotLyndonIdeal, "obstructions are not powers of Lyndon words");
    const Alphabet& a = *p.gb.ctx().alphabet;
    HomologyReport rep;

    std::size_t big_obstructions = 0;
    for (const Word& o : p.gb.obstructions())
        if (o.size() >= 2) ++big_obstructions;
    rep.bound = std::min(p.generators.size(), big_obstructions + 1);
    rep.exact = generators_exhausted(p.gb);
    rep.gldim = p.generators.size();

    rep.gorenstein = Degree((std::size_t)a.grading_dim(), 0);
    bool finite_heights = false;
    for (const PBWGenerator& g : p.generators) {
        rep.gorenstein = add_degree(rep.gorenstein, g.degree);
        if (g.height.finite) finite_heights = true;
    }
    if (!rep.exact)
        rep.notes.push_back("generators may continue past the bound; values are lower estimates");
    if (finite_heights)
        rep.notes.push_back(
            "finite heights present; the polynomial-type conclusions need not apply");

    bool length_graded = a.size() == 2;
    for (const Degree& d : a.degrees)
        if (total_degree(d) != 1) length_graded = false;
    if (length_graded && rep.exact) {
        rep.fibonacci_checked = true;
        long nn = 2;
        long d = (long)p.generators.size();
        long l = total_degree(rep.gorenstein);
        std::vector<long> F = fib((std::size_t)(d - nn + 3));
        long top = F[(std::size_t)(d - nn + 3)] + nn - 3;
        rep.fibonacci_ok = nn <= d && d <= l && l <= top;
        rep.notes.push_back("degree chain " + std::to_string(nn) + " <= " + std::to_string(d) +
                            " <= " + std::to_string(l) + " <= " + std::to_string(top));
        if (!rep.fibonacci_ok) rep.notes.push_back("degree chain violated");
    }
    return rep;
}

} // namespace lynpbw
