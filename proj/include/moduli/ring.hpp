#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "moduli/labels.hpp"
#include "moduli/rational.hpp"

namespace moduli {

enum class Field { rational, gf2 };

std::string field_name(Field f);

// One ring generator: a boundary class indexed by a 2-block partition.
// Degree is the real codimension (2 for complex divisors, 1 for the
// mod-2 real hypersurfaces).
struct GeneratorInfo {
    std::string token;  // printable form, e.g. "D{1,2|3,4}"
    int degree;
    Partition2 partition;
};

// The generator universe a ring element lives in. Elements of different
// universes never mix.
struct RingContext {
    Field field = Field::rational;
    int ground = 0;          // partitions are over [ground]
    std::string prefix;      // generator token prefix, "D" or "RD"
    std::vector<GeneratorInfo> gens;

    int gen_count() const { return static_cast<int>(gens.size()); }
    // All presentations here have a single generator degree; enforced on use.
    int uniform_degree() const;
    // Generator id of a partition, or -1.
    int find(const Partition2& p) const;
    int find_token(const std::string& token) const;
};

using RingContextPtr = std::shared_ptr<const RingContext>;

RingContextPtr make_ring_context(Field field, int ground, std::string prefix,
                                 std::vector<GeneratorInfo> gens);

bool same_context(const RingContextPtr& a, const RingContextPtr& b);

// Commutative monomial: sorted multiset of generator ids.
using Monomial = std::vector<int>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& d, const Monomial& m);
Monomial monomial_quotient(const Monomial& m, const Monomial& d);  // m / d
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool monomials_coprime(const Monomial& a, const Monomial& b);

// Degree-reverse-lexicographic order (degree first, then smaller exponent at
// the highest differing generator wins). Used as std::map "less".
struct DegRevLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial in the generators of one RingContext with exact
// coefficients; over GF(2) every stored coefficient is 1.
class RingElement {
public:
    explicit RingElement(RingContextPtr ctx);
    static RingElement constant(RingContextPtr ctx, const Rational& c);
    static RingElement generator(RingContextPtr ctx, int gen_id);
    static RingElement term(RingContextPtr ctx, Monomial m, const Rational& c);

    const RingContextPtr& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Monomial, Rational, DegRevLexLess>& terms() const { return terms_; }

    // Real degree of a monomial / of the whole element (max over terms; -1
    // for zero). is_homogeneous covers the zero element.
    int monomial_degree(const Monomial& m) const;
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Rational& c);

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator*(const Rational& c) const;
    bool operator==(const RingElement& o) const;

    // Leading term under degrevlex; element must be nonzero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    // Grammar form: `c * G1 * G2` terms joined by `+`/`-`, leading term first.
    std::string str() const;

private:
    RingContextPtr ctx_;
    std::map<Monomial, Rational, DegRevLexLess> terms_;
};

}  // namespace moduli
