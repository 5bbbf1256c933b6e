#include "lynpbw/groebner.hpp"

#include <algorithm>
#include <map>

#include "lynpbw/linalg.hpp"

namespace lynpbw {

namespace {

// leftmost occurrence of pattern p in w, or -1
int find_factor(const Word& w, const Word& p) {
    if (p.empty() || p.size() > w.size()) return -1;
    for (std::size_t i = 0; i + p.size() <= w.size(); ++i)
        if (std::equal(p.begin(), p.end(), w.begin() + i)) return (int)i;
    return -1;
}

Polynomial make_monic(const Polynomial& f) {
    return f.scale(f.leading().second.inverse());
}

// full reduction of f against the (monic) basis, leading terms first
Polynomial reduce_against(const Polynomial& f, const std::vector<Polynomial>& basis,
                          const Context& ctx) {
    Polynomial result(ctx);
    Polynomial work = f;
    while (!work.is_zero()) {
        auto [w, c] = work.leading();
        const Polynomial* used = nullptr;
        int pos = -1;
        for (const Polynomial& g : basis) {
            int p = find_factor(w, g.leading().first);
            if (p >= 0) {
                used = &g;
                pos = p;
                break;
            }
        }
        Polynomial head = Polynomial::monomial(ctx, w, c);
        if (!used) {
            result += head;
            work -= head;
        } else {
            const Word& lw = used->leading().first;
            Word left(w.begin(), w.begin() + pos);
            Word right(w.begin() + pos + (long)lw.size(), w.end());
            work -= (Polynomial::monomial(ctx, left, c) * (*used) *
                     Polynomial::monomial(ctx, right, Scalar::one(ctx.field)));
        }
    }
    return result;
}

void sort_by_lead(const Context& ctx, std::vector<Polynomial>& elems) {
    std::sort(elems.begin(), elems.end(), [&ctx](const Polynomial& f, const Polynomial& g) {
        return glex_less(*ctx.alphabet, f.leading().first, g.leading().first);
    });
}

// interreduce to a reduced basis: no lead divides another lead, all tails
// irreducible
void interreduce(const Context& ctx, std::vector<Polynomial>& elems) {
    bool stable = false;
    while (!stable) {
        stable = true;
        sort_by_lead(ctx, elems);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (j != i) others.push_back(elems[j]);
            Polynomial r = reduce_against(elems[i], others, ctx);
            if (r == elems[i]) continue;
            stable = false;
            if (r.is_zero()) elems.erase(elems.begin() + i);
            else elems[i] = make_monic(r);
            break;
        }
    }
    sort_by_lead(ctx, elems);
}

struct OverlapRec {
    Word overlap;
    std::size_t i, j;
    std::size_t k;  // overlap length
};

} // namespace

GroebnerBasis GroebnerBasis::complete(const Context& ctx, std::vector<Polynomial> relations,
                                      long D) {
    GroebnerBasis gb;
    gb.ctx_ = ctx;
    gb.D_ = D;
    for (const Polynomial& r : relations) {
        if (r.is_zero()) continue;
        if (!r.is_homogeneous())
            raise(Errc::InhomogeneousRelation, "relation is not homogeneous: " + r.str());
        if (total_degree(r.homogeneous_degree()) > D)
            raise(Errc::DegreeOverBound, "relation degree exceeds the bound: " + r.str());
        gb.relations_.push_back(make_monic(r));
    }
    std::vector<Polynomial>& elems = gb.elems_;
    {
        std::vector<Polynomial> queue = gb.relations_;
        sort_by_lead(ctx, queue);
        for (const Polynomial& r : queue) {
            Polynomial nf = reduce_against(r, elems, ctx);
            if (!nf.is_zero()) elems.push_back(make_monic(nf));
        }
    }

    for (;;) {
        interreduce(ctx, elems);
        // all proper overlaps w1 = l s, w2 = s r (s nonempty, neither word a
        // factor of the other) with overlap word of total degree <= D
        std::vector<OverlapRec> recs;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const Word& w1 = elems[i].leading().first;
            for (std::size_t j = 0; j < elems.size(); ++j) {
                const Word& w2 = elems[j].leading().first;
                for (std::size_t k = 1; k < w1.size() && k < w2.size(); ++k) {
                    if (!std::equal(w2.begin(), w2.begin() + (long)k, w1.end() - (long)k))
                        continue;
                    Word overlap = w1;
                    overlap.insert(overlap.end(), w2.begin() + (long)k, w2.end());
                    if (total_degree(word_degree(*ctx.alphabet, overlap)) > D) continue;
                    recs.push_back({std::move(overlap), i, j, k});
                }
            }
        }
        std::sort(recs.begin(), recs.end(), [&ctx](const OverlapRec& a, const OverlapRec& b) {
            Cmp c = compare_glex(*ctx.alphabet, a.overlap, b.overlap);
            if (c == Cmp::Less) return true;
            if (c == Cmp::Greater) return false;
            return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
        });
        bool added = false;
        std::size_t fixed = elems.size();  // records refer to these entries only
        for (const OverlapRec& rec : recs) {
            const Polynomial& g1 = elems[rec.i];
            const Polynomial& g2 = elems[rec.j];
            const Word& w1 = g1.leading().first;
            const Word& w2 = g2.leading().first;
            Word right(w2.begin() + (long)rec.k, w2.end());
            Word left(w1.begin(), w1.end() - (long)rec.k);
            Scalar one = Scalar::one(ctx.field);
            Polynomial s = g1 * Polynomial::monomial(ctx, right, one) -
                           Polynomial::monomial(ctx, left, one) * g2;
            Polynomial nf = reduce_against(s, elems, ctx);
            if (!nf.is_zero()) {
                elems.push_back(make_monic(nf));
                added = true;
            }
        }
        (void)fixed;
        if (!added) break;
    }
    return gb;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    for (const auto& [w, c] : f.terms())
        if (total_degree(word_degree(*ctx_.alphabet, w)) > D_)
            raise(Errc::DegreeOverBound, "normal_form input exceeds the certified bound");
    return reduce_against(f, elems_, ctx_);
}

std::vector<Word> GroebnerBasis::obstructions() const {
    std::vector<Word> obs;
    for (const Polynomial& g : elems_) obs.push_back(g.leading().first);
    return obs;
}

bool GroebnerBasis::word_reducible(const Word& w) const {
    for (const Polynomial& g : elems_)
        if (find_factor(w, g.leading().first) >= 0) return true;
    return false;
}

bool GroebnerBasis::restricted_ok(const Word& w) const {
    auto atoms = lyndon_decompose(w);
    std::size_t i = 0;
    while (i < atoms.size()) {
        std::size_t j = i;
        Word power;
        while (j < atoms.size() && atoms[j] == atoms[i]) {
            power.insert(power.end(), atoms[j].begin(), atoms[j].end());
            ++j;
        }
        if (word_reducible(power)) return false;
        i = j;
    }
    return true;
}

std::vector<Word> GroebnerBasis::irreducible_words(IrrMode mode, long total_bound) const {
    if (total_bound > D_) raise(Errc::DegreeOverBound, "requested bound exceeds D");
    std::vector<Word> out;
    for (const Word& w : enumerate_words(*ctx_.alphabet, WordMode::AllWords, total_bound)) {
        switch (mode) {
            case IrrMode::All:
                if (!word_reducible(w)) out.push_back(w);
                break;
            case IrrMode::Lyndon:
                if (is_lyndon(w) && !word_reducible(w)) out.push_back(w);
                break;
            case IrrMode::Restricted:
                if (restricted_ok(w)) out.push_back(w);
                break;
        }
    }
    return out;
}

std::vector<Word> GroebnerBasis::irreducible_words_of_degree(IrrMode mode,
                                                             const Degree& gamma) const {
    if (total_degree(gamma) > D_) raise(Errc::DegreeOverBound, "requested degree exceeds D");
    std::vector<Word> out;
    for (const Word& w : irreducible_words(mode, total_degree(gamma)))
        if (word_degree(*ctx_.alphabet, w) == gamma) out.push_back(w);
    return out;
}

HeightResult GroebnerBasis::height(const Word& u) const {
    if (!is_lyndon(u)) raise(Errc::NotLyndon, "height is defined for Lyndon words");
    long base = total_degree(word_degree(*ctx_.alphabet, u));
    Word power;
    for (long k = 1;; ++k) {
        if (k * base > D_) return HeightResult{false, k};
        power.insert(power.end(), u.begin(), u.end());
        if (word_reducible(power)) return HeightResult{true, k};
    }
}

std::size_t ideal_rank_oracle(const Context& ctx, const std::vector<Polynomial>& gens,
                              const Degree& gamma) {
    const Alphabet& a = *ctx.alphabet;
    long total = total_degree(gamma);
    std::vector<Word> cols;
    for (const Word& w : enumerate_words(a, WordMode::AllWords, total))
        if (word_degree(a, w) == gamma) cols.push_back(w);
    std::map<Word, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

    std::vector<Word> frames = enumerate_words(a, WordMode::AllWords, total);
    Echelon ech(ctx.field, cols.size());
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        Degree dg = g.homogeneous_degree();
        for (const Word& l : frames) {
            Degree dl = word_degree(a, l);
            bool fits = true;
            for (std::size_t t = 0; t < dl.size(); ++t)
                if (dl[t] + dg[t] > gamma[t]) fits = false;
            if (!fits) continue;
            for (const Word& r : frames) {
                Degree d = add_degree(add_degree(dl, dg), word_degree(a, r));
                if (d != gamma) continue;
                std::vector<Scalar> row(cols.size(), Scalar::zero(ctx.field));
                for (const auto& [w, c] : g.terms()) {
                    Word full = l;
                    full.insert(full.end(), w.begin(), w.end());
                    full.insert(full.end(), r.begin(), r.end());
                    row[col_of.at(full)] += c;
                }
                ech.add(std::move(row));
            }
        }
    }
    return ech.rank();
}

std::size_t quotient_dim_oracle(const Context& ctx, const std::vector<Polynomial>& gens,
                                const Degree& gamma) {
    const Alphabet& a = *ctx.alphabet;
    std::size_t nwords = 0;
    for (const Word& w : enumerate_words(a, WordMode::AllWords, total_degree(gamma)))
        if (word_degree(a, w) == gamma) ++nwords;
    return nwords - ideal_rank_oracle(ctx, gens, gamma);
}

SubalgebraResult intersect_subalgebra(const GroebnerBasis& gb, const std::vector<int>& letters) {
    const Context& ctx = gb.ctx();
    const Alphabet& a = *ctx.alphabet;
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i] != (int)i)
            raise(Errc::NotClosed, "subalphabet must be an initial segment of the letter order");
    if ((int)letters.size() > a.size()) raise(Errc::NotClosed, "subalphabet larger than alphabet");
    int j = (int)letters.size();

    SubalgebraResult res;
    auto sub = std::make_shared<Alphabet>();
    sub->names.assign(a.names.begin(), a.names.begin() + j);
    sub->degrees.assign(a.degrees.begin(), a.degrees.begin() + j);
    res.sub_ctx = Context{ctx.field, sub};

    std::vector<Polynomial> cand;
    if (j > 0) {
        sub->validate();
        for (const Polynomial& g : gb.elements()) {
            bool inside = true;
            for (const auto& [w, c] : g.terms())
                for (int x : w)
                    if (x >= j) inside = false;
            if (!inside) continue;
            Polynomial h(res.sub_ctx);
            for (const auto& [w, c] : g.terms()) h += Polynomial::monomial(res.sub_ctx, w, c);
            cand.push_back(h);
        }
        res.candidate = GroebnerBasis::complete(res.sub_ctx, cand, gb.bound());
    }

    // rank verification per degree: dim (I cap k<Y>)_gamma from the full
    // algebra vs the candidate ideal's dimension over Y
    res.verified = true;
    if (j == 0) {
        res.verified = gb.elements().empty() || true;  // J = 0 and I cap k = 0
        // the intersection with the scalars is zero for any proper homogeneous
        // ideal; nothing to check
        return res;
    }
    std::vector<Word> ywords = enumerate_words(*sub, WordMode::AllWords, gb.bound());
    std::vector<Degree> degrees;
    for (const Word& w : ywords) {
        Degree d = word_degree(*sub, w);
        if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) degrees.push_back(d);
    }
    const Alphabet& full = a;
    for (const Degree& gamma : degrees) {
        if (total_degree(gamma) == 0) continue;
        long total = total_degree(gamma);
        // columns: words of degree gamma over X, non-Y-supported first
        std::vector<Word> nonY, inY;
        for (const Word& w : enumerate_words(full, WordMode::AllWords, total)) {
            if (word_degree(full, w) != gamma) continue;
            bool y = true;
            for (int x : w)
                if (x >= j) y = false;
            (y ? inY : nonY).push_back(w);
        }
        std::vector<Word> cols = nonY;
        cols.insert(cols.end(), inY.begin(), inY.end());
        std::map<Word, std::size_t> col_of;
        for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

        Echelon full_rank(ctx.field, cols.size());
        Echelon proj_rank(ctx.field, nonY.size());
        std::vector<Word> frames = enumerate_words(full, WordMode::AllWords, total);
        for (const Polynomial& g : gb.elements()) {
            Degree dg = g.homogeneous_degree();
            for (const Word& l : frames) {
                for (const Word& r : frames) {
                    Degree d = add_degree(add_degree(word_degree(full, l), dg),
                                          word_degree(full, r));
                    if (d != gamma) continue;
                    std::vector<Scalar> row(cols.size(), Scalar::zero(ctx.field));
                    for (const auto& [w, c] : g.terms()) {
                        Word fullw = l;
                        fullw.insert(fullw.end(), w.begin(), w.end());
                        fullw.insert(fullw.end(), r.begin(), r.end());
                        row[col_of.at(fullw)] += c;
                    }
                    std::vector<Scalar> head(row.begin(), row.begin() + (long)nonY.size());
                    full_rank.add(std::move(row));
                    proj_rank.add(std::move(head));
                }
            }
        }
        std::size_t dim_int = full_rank.rank() - proj_rank.rank();
        std::size_t dim_cand = ideal_rank_oracle(res.sub_ctx, cand, gamma);
        if (dim_int != dim_cand) res.verified = false;
    }
    return res;
}

} // namespace lynpbw
