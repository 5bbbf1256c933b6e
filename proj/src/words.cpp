#include "lynpbw/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lynpbw {

void Alphabet::validate() const {
    if (names.empty()) raise(Errc::ValidationError, "alphabet must have at least one letter");
    if (degrees.size() != names.size())
        raise(Errc::ValidationError, "letter/degree count mismatch");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) raise(Errc::ValidationError, "empty letter name");
        if (!seen.insert(n).second) raise(Errc::ValidationError, "duplicate letter name: " + n);
    }
    int theta = grading_dim();
    if (theta < 1) raise(Errc::ValidationError, "grading dimension must be >= 1");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if ((int)degrees[i].size() != theta)
            raise(Errc::ValidationError, "degree vector size mismatch for letter " + names[i]);
        long tot = 0;
        for (long c : degrees[i]) {
            if (c < 0) raise(Errc::ValidationError, "negative degree entry for letter " + names[i]);
            tot += c;
        }
        if (tot == 0) raise(Errc::ValidationError, "letter " + names[i] + " has zero degree");
    }
}

int Alphabet::letter_index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return (int)i;
    return -1;
}

Degree word_degree(const Alphabet& a, const Word& w) {
    Degree d(a.grading_dim(), 0);
    for (int x : w)
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += a.degrees[x][i];
    return d;
}

long total_degree(const Degree& d) { return std::accumulate(d.begin(), d.end(), 0L); }

Degree add_degree(const Degree& a, const Degree& b) {
    Degree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Cmp compare_prec(const Word& u, const Word& v) {
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] < v[i]) return Cmp::Less;
        if (u[i] > v[i]) return Cmp::Greater;
    }
    if (u.size() == v.size()) return Cmp::Equal;
    return Cmp::Incomparable;  // proper prefix pair
}

Cmp compare_lex(const Word& u, const Word& v) {
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] < v[i]) return Cmp::Less;
        if (u[i] > v[i]) return Cmp::Greater;
    }
    if (u.size() == v.size()) return Cmp::Equal;
    // a proper prefix is larger than its extensions
    return u.size() < v.size() ? Cmp::Greater : Cmp::Less;
}

bool lex_less(const Word& u, const Word& v) { return compare_lex(u, v) == Cmp::Less; }

int gamma_compare(const Degree& a, const Degree& b) {
    long ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta < tb ? -1 : 1;
    // Equal totals: first differing component decides, larger entry earlier
    // means smaller degree.  This keeps e_1 < e_2 < ... < e_theta, matching
    // the letter order under unit degrees, and is translation-invariant.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

Cmp compare_glex(const Alphabet& a, const Word& u, const Word& v) {
    int c = gamma_compare(word_degree(a, u), word_degree(a, v));
    if (c != 0) return c < 0 ? Cmp::Less : Cmp::Greater;
    // equal multidegree: distinct words are never prefix-related, so prec decides
    return compare_prec(u, v);
}

bool glex_less(const Alphabet& a, const Word& u, const Word& v) {
    return compare_glex(a, u, v) == Cmp::Less;
}

bool is_lyndon(const Word& u) {
    if (u.empty()) return false;
    for (std::size_t i = 1; i < u.size(); ++i) {
        Word suffix(u.begin() + i, u.end());
        if (compare_lex(u, suffix) != Cmp::Greater) return false;
    }
    return true;
}

std::pair<Word, Word> shirshov(const Word& u) {
    if (u.size() < 2) raise(Errc::TooShort, "shirshov needs |u| >= 2");
    std::size_t best = 1;
    for (std::size_t i = 2; i < u.size(); ++i) {
        Word cur(u.begin() + i, u.end());
        Word b(u.begin() + best, u.end());
        if (compare_lex(cur, b) == Cmp::Greater) best = i;
    }
    return {Word(u.begin(), u.begin() + best), Word(u.begin() + best, u.end())};
}

std::vector<Word> lyndon_decompose(const Word& u) {
    // greedy longest Lyndon prefix; yields the nondecreasing factorization
    std::vector<Word> atoms;
    std::size_t pos = 0;
    while (pos < u.size()) {
        std::size_t best = 1;
        for (std::size_t len = 2; pos + len <= u.size(); ++len) {
            Word cand(u.begin() + pos, u.begin() + pos + len);
            if (is_lyndon(cand)) best = len;
        }
        atoms.emplace_back(u.begin() + pos, u.begin() + pos + best);
        pos += best;
    }
    return atoms;
}

namespace {

void extend(const Alphabet& a, Word& cur, long cur_total, long bound, std::vector<Word>& out) {
    out.push_back(cur);
    for (int x = 0; x < a.size(); ++x) {
        long t = cur_total + total_degree(a.degrees[x]);
        if (t > bound) continue;
        cur.push_back(x);
        extend(a, cur, t, bound, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Word> enumerate_words(const Alphabet& a, WordMode mode, long max_total_degree) {
    if (max_total_degree < 0) raise(Errc::PreconditionViolated, "negative degree bound");
    std::vector<Word> all;
    Word cur;
    extend(a, cur, 0, max_total_degree, all);
    if (mode == WordMode::LyndonWords) {
        std::vector<Word> lyndon;
        for (auto& w : all)
            if (is_lyndon(w)) lyndon.push_back(std::move(w));
        all = std::move(lyndon);
    }
    std::sort(all.begin(), all.end(),
              [&a](const Word& u, const Word& v) { return glex_less(a, u, v); });
    return all;
}

std::string word_str(const Alphabet& a, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) out << "*";
        out << a.names[w[i]];
        if (j - i > 1) out << "^" << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

} // namespace lynpbw
