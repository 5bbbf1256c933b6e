#ifndef LYNPBW_COALG_HPP
#define LYNPBW_COALG_HPP

#include <map>
#include <mutex>

#include "lynpbw/pbw.hpp"

namespace lynpbw {

enum class Side { Left, Right };

// Algebra map into the braided tensor square, given per-letter images of
// counit shape 1(x)x + x(x)1 + (positive (x) positive).
class Comultiplication {
public:
    // standard images 1(x)x + x(x)1
    static Comultiplication standard(const Context& ctx, const Bicharacter& chi);
    // validated custom images; boundedness flags are computed
    static Comultiplication make(const Context& ctx, std::vector<TensorPolynomial> images,
                                 const Bicharacter& chi);

    const Context& ctx() const { return ctx_; }
    const Bicharacter& chi() const { return chi_; }
    const TensorPolynomial& image(int letter) const { return images_[(std::size_t)letter]; }
    // every cross term's left (resp. right) word uses only smaller letters
    bool left_bounded() const { return left_; }
    bool right_bounded() const { return right_; }

    TensorPolynomial apply(const Polynomial& f) const;

private:
    Comultiplication() = default;

    Context ctx_;
    Bicharacter chi_ = Bicharacter::trivial(Field::rationals(), 1);
    std::vector<TensorPolynomial> images_;
    bool left_ = false, right_ = false;

    struct Cache {
        std::map<Word, TensorPolynomial> memo;
        std::mutex mu;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Delta(g) has both tensor legs reducing to zero for every basis element,
// i.e. the ideal is a biideal of the free algebra.
bool biideal_check(const Comultiplication& c, const GroebnerBasis& gb);

// Verifies the closed expansion of Delta(bracket(w u^n)): the displayed
// q-binomial terms plus a remainder whose confined leg lies in the bracket
// span of words m u^i with m nonempty and all Lyndon atoms below u.
bool coproduct_formula_check(const Comultiplication& c, const Word& w, const Word& u, long n,
                             BracketMode mode, Side side);

// The subalgebra generated by the PBW generators up to xi is a one-sided
// coideal of the quotient.  xi = -1 checks every generator.
CheckReport coideal_check(const PBWData& p, const Comultiplication& c, int xi, Side side);

} // namespace lynpbw

#endif
