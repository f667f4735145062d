#pragma once

#include "moduli/macaulay.hpp"
#include "moduli/quotient.hpp"
#include "moduli/trees.hpp"

namespace moduli {

// All 2-block partitions of [n] with both blocks of size >= 2, in canonical
// order. These index the boundary divisors.
std::vector<Partition2> divisor_partitions(int n);

// Even cohomology of the space of stable n-marked rational curves: boundary
// divisor generators D{J|K} in degree 2, modulo (i) vanishing products of
// disjoint divisors and (ii) the pulled-back 4-point relations equating, for
// every 4-element subset, the three ways of splitting it.
Presentation keel_presentation_raw(int n, Field field);
QuotientRing keel_presentation(int n, Field field = Field::rational);

// Mod-2 cohomology of the real locus with real marked points only: the same
// combinatorics with degree-1 generators RD{J|K} over GF(2).
Presentation krasnov_presentation_raw(int k);
QuotientRing krasnov_presentation(int k);

// Sum of the generators whose restriction to the 4-element subset S equals
// `split` (a partition of S into two 2-element blocks). Divisors dominating
// the 4-point space contribute nothing.
RingElement pullback_boundary(const RingContextPtr& ctx, const LabelVec& s,
                              const Partition2& split);

// Degree-1 class of the real 4-point locus pulled back along the map
// remembering marked points a,b,c,d: the sum of the RD generators
// restricting to {a,b}|{c,d}. Lives in the GF(2) ring on k labels.
RingElement omega_class(const RingContextPtr& ctx, int a, int b, int c, int d);

// Product of the boundary generators of all edges of the stratum's dual
// graph; the edgeless tree maps to 1.
RingElement strata_class(const RingContextPtr& ctx, const ComplexStableTree& t);

// Real moduli are orientable exactly when there are no real marked points
// or the dimension is small: k = 0 or k + 2l <= 4. False on (k,l) pairs
// with no underlying space.
bool is_orientable_space(int k, int l);

// Index data of the real boundary submanifolds. `RE` indexes hypersurfaces
// whose two components are exchanged by the involution, `RH` those preserved
// by it (with real/pair parts split between the sides in the general case),
// and `RD2`/`RDgen` the codimension-2 three-component loci for k = 0 and
// k >= 1 respectively.
enum class RealIndexKind { RE, RH, RD2, RDgen };

struct RealSubmanifoldIndex {
    RealIndexKind kind = RealIndexKind::RE;
    LabelVec pair_block_j;  // pair labels on the J side
    LabelVec pair_block_k;  // pair labels on the K side
    LabelVec real_block_j;  // real labels on the J side (RH, k >= 1)
    LabelVec real_block_k;
    LabelVec middle;        // the I part of a three-component index
};

// Validity of the index over the space with k real points and l pairs.
// Returns false on malformed data instead of throwing.
bool validate_real_index(const RealSubmanifoldIndex& idx, int k, int l);

}  // namespace moduli
