#pragma once

#include <mutex>
#include <set>
#include <vector>

#include "moduli/ring.hpp"

namespace moduli {

// A graded ring presentation: generators (in the context) modulo
// homogeneous relations, served up to socle_bound (real degree).
struct Presentation {
    RingContextPtr ctx;
    std::vector<RingElement> relations;
    int socle_bound = 0;
};

// Quotient ring with canonical normal forms. The Groebner completion is
// degree-truncated and grows lazily: queries at degree d first process
// every S-pair whose lcm lives in degree <= d, which is enough for exact
// normal forms and graded dimensions up to d.
//
// Completion runs under an internal lock; after the needed degree is built
// all queries are read-only and safe to run concurrently.
class QuotientRing {
public:
    explicit QuotientRing(Presentation p);

    const Presentation& presentation() const { return pres_; }
    const RingContextPtr& context() const { return pres_.ctx; }
    int socle_bound() const { return pres_.socle_bound; }

    // Canonical representative modulo the relation ideal. Idempotent,
    // linear, and zero exactly on ideal members (within the socle bound).
    RingElement normal_form(const RingElement& a) const;

    // Dimensions of the graded pieces in real degrees 0..dmax.
    std::vector<long> hilbert_function(int dmax) const;

private:
    struct Pair {
        int i, j;
        Monomial lcm;
    };

    void ensure_complete_locked(int count_degree) const;
    RingElement reduce_by_basis(RingElement f) const;
    int count_degree_of(int real_degree) const;  // -1 when no monomials there

    Presentation pres_;
    int gen_degree_ = 1;  // uniform real degree of the generators

    mutable std::mutex mu_;
    mutable std::vector<RingElement> basis_;             // monic
    mutable std::multimap<int, Pair> queue_;             // key: lcm count degree
    mutable std::set<std::pair<int, int>> considered_;
    mutable int completed_count_ = -1;
};

}  // namespace moduli
