#pragma once

#include <map>
#include <vector>

#include "moduli/rational.hpp"
#include "moduli/trees.hpp"

namespace moduli {

// Which family of moduli spaces an operad element lives over.
//   complex_kind   : arity n, spanned by trees with n+1 leaves (n = 1 is the
//                    scalar line).
//   real_kind      : bigraded (k,l) with k >= 1 real inputs and l pair
//                    inputs, spanned by trees with k+1 real points and l
//                    pairs ((k,l) = (1,0) is the scalar line).
//   conjugate_kind : arity k, spanned by trees with no real points and k+1
//                    conjugate pairs; a right module over the complex family.
enum class Flavor { complex_kind, real_kind, conjugate_kind };

// Formal finite linear combination of boundary strata (canonical trees) of a
// fixed flavor and arity, with exact rational coefficients. Carrier of
// operad elements; immutable trees make all operations pure.
class StrataSum {
public:
    static StrataSum complex_zero(int arity);
    static StrataSum complex_scalar(const Rational& r);  // arity 1
    static StrataSum real_zero(int k, int l);            // k >= 1, k + l >= 2
    static StrataSum real_scalar(const Rational& r);     // (k,l) = (1,0)
    static StrataSum conjugate_zero(int arity);          // arity >= 1
    static StrataSum of_tree(const ComplexStableTree& t, const Rational& c = 1);
    static StrataSum of_tree(const RealStableTree& t, const Rational& c = 1);

    Flavor flavor() const { return flavor_; }
    // Operadic arity: n for complex and conjugate; k + l for real.
    int arity() const;
    int real_k() const;
    int real_l() const;
    // Pair slots come first: slots 1..pair_slots() accept complex inputs.
    int pair_slots() const;

    bool is_scalar_line() const;  // complex arity 1 or real (1,0)
    const Rational& scalar() const;

    bool is_zero() const;
    const std::map<ComplexStableTree, Rational>& complex_terms() const { return cterms_; }
    const std::map<RealStableTree, Rational>& real_terms() const { return rterms_; }

    void add_tree(const ComplexStableTree& t, const Rational& c);
    void add_tree(const RealStableTree& t, const Rational& c);

    StrataSum& operator+=(const StrataSum& o);
    StrataSum operator+(const StrataSum& o) const;
    StrataSum operator*(const Rational& c) const;
    bool operator==(const StrataSum& o) const;

private:
    StrataSum() = default;
    void check_same_shape(const StrataSum& o) const;

    Flavor flavor_ = Flavor::complex_kind;
    int arity_ = 1;      // complex/conjugate arity; real: k + l
    int k_ = 0, l_ = 0;  // real flavor only
    Rational scalar_{0};
    std::map<ComplexStableTree, Rational> cterms_;
    std::map<RealStableTree, Rational> rterms_;
};

// x composed with y at input slot i, extended bilinearly from the gluings:
// complex inputs fill pair slots (and all complex slots), real inputs fill
// real slots; the scalar lines act by scalar multiplication.
StrataSum partial_compose(const StrataSum& x, int i, const StrataSum& y);

// Simultaneous composition: x with one element per input slot, evaluated as
// the iterated partial compositions from the last slot down to the first.
// Complex x takes arity(x) complex inputs; real x takes either l complex
// inputs (pair slots) or k real inputs (real slots); conjugate x takes
// arity(x) complex inputs.
StrataSum full_compose(const StrataSum& x, const std::vector<StrataSum>& ys);

// Slot-kind composition helpers used by full_compose and the bicolored
// wrapper; `pair_index` / `real_index` count within the slots of that kind.
StrataSum compose_at_pair_slot(const StrataSum& x, int pair_index, const StrataSum& y);
StrataSum compose_at_real_slot(const StrataSum& x, int real_index, const StrataSum& y);

}  // namespace moduli
