#pragma once

#include <optional>

#include "moduli/operads.hpp"

namespace moduli {

// Input/output colors of the two-colored structure combining the complex
// operad with the bigraded real family.
enum class Color { plus, real };

std::string color_name(Color c);

// An element of the combined arity-n space: either a complex element of
// arity n or a real element with k + l = n. Pair inputs are the `plus` slots
// and come first; the auxiliary grade (0 on complex elements) is additive
// under composition.
class BicoloredElement {
public:
    explicit BicoloredElement(StrataSum value);

    static BicoloredElement unit(Color c);  // 1 on the matching scalar line

    const StrataSum& value() const { return value_; }
    int arity() const;       // |x|
    int arity_plus() const;  // |x|_+ : number of plus inputs
    Color out() const;
    Color in_slot(int i) const;
    int grade() const;

    bool operator==(const BicoloredElement& o) const { return value_ == o.value_; }

private:
    StrataSum value_;
};

// Composition at slot i, defined when in_slot(x, i) == out(y); lands in
// arity |x| + |y| - 1 and preserves the auxiliary grade sum.
BicoloredElement circ(const BicoloredElement& x, int i, const BicoloredElement& y);

// Identity checks report three-valued verdicts: an identity whose sides are
// not both defined is `undefined`, which is distinct from a failure.
enum class CheckResult { holds, fails, undefined };

std::string check_result_name(CheckResult r);

// x o_i (y o_j z)  ==  (x o_i y) o_{j+i-1} z        when out(y) == out(z)
//                      (x o_i y) o_{j+|x|_+} z      otherwise
CheckResult check_114a(const BicoloredElement& x, const BicoloredElement& y,
                       const BicoloredElement& z, int i, int j);

// (x o_i y) o_{j+|y|-1} z  ==  (x o_j z) o_i y          when out(y) == +
//                              (x o_j z) o_{i+|z|_+} y  when out(y) == real
// for i < j.
CheckResult check_114b(const BicoloredElement& x, const BicoloredElement& y,
                       const BicoloredElement& z, int i, int j);

// Unit laws: composing the color-matched unit into slot i of x, and x into
// the unit matching out(x), both return x.
CheckResult check_units(const BicoloredElement& x, int i);

}  // namespace moduli
