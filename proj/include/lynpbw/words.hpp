#ifndef LYNPBW_WORDS_HPP
#define LYNPBW_WORDS_HPP

#include <memory>
#include <string>
#include <vector>

#include "lynpbw/errors.hpp"

namespace lynpbw {

// Letters are indexed 0..m-1 and ordered by index.  Each letter carries a
// nonzero degree vector in N^theta.
struct Alphabet {
    std::vector<std::string> names;
    std::vector<std::vector<long>> degrees;  // m rows, theta columns

    int size() const { return (int)names.size(); }
    int grading_dim() const { return degrees.empty() ? 0 : (int)degrees[0].size(); }
    void validate() const;
    int letter_index(const std::string& name) const;  // -1 when absent
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;
using Word = std::vector<int>;     // letter indices
using Degree = std::vector<long>;  // element of N^theta

Degree word_degree(const Alphabet& a, const Word& w);
long total_degree(const Degree& d);
Degree add_degree(const Degree& a, const Degree& b);

enum class Cmp { Less, Greater, Equal, Incomparable };

// u < v iff u = r x s, v = r y t with letters x < y; a prefix pair is
// incomparable.
Cmp compare_prec(const Word& u, const Word& v);

// Pseudo-lexicographic total order: u < v iff v is a proper prefix of u, or
// u precedes v letterwise after the common prefix.
Cmp compare_lex(const Word& u, const Word& v);
bool lex_less(const Word& u, const Word& v);

// Admissible well order on N^theta: total degree first, ties left-to-right.
int gamma_compare(const Degree& a, const Degree& b);  // -1, 0, +1

// Graded order: gamma_compare of degrees, ties by prec (equal-degree distinct
// words are always prec-comparable).
Cmp compare_glex(const Alphabet& a, const Word& u, const Word& v);
bool glex_less(const Alphabet& a, const Word& u, const Word& v);

// Nonempty and strictly lex-greater than every proper nonempty suffix.
bool is_lyndon(const Word& u);

// Split u = uL uR with uR the lex-largest proper suffix.
std::pair<Word, Word> shirshov(const Word& u);

// The unique lex-nondecreasing factorization into Lyndon words.
std::vector<Word> lyndon_decompose(const Word& u);

enum class WordMode { AllWords, LyndonWords };

// All words (resp. Lyndon words) with total degree <= bound, ascending glex.
std::vector<Word> enumerate_words(const Alphabet& a, WordMode mode, long max_total_degree);

std::string word_str(const Alphabet& a, const Word& w);

} // namespace lynpbw

#endif
