#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moduli/errors.hpp"

namespace moduli {

// A set of marked-point labels, sorted ascending, no repeats.
using LabelVec = std::vector<int>;

LabelVec full_label_set(int n);  // {1, ..., n}

// An unordered 2-block partition {J, K} of a ground label set.
// Canonical storage: the block containing the smallest ground label comes
// first, so equal partitions compare equal syntactically. In divisor mode
// both blocks must have at least two elements.
class Partition2 {
public:
    // Partition of [n] = {1..n} into `block` and its complement.
    static Partition2 make(int n, LabelVec block, bool divisor_mode = true);

    // Partition of an arbitrary ground set (used for 4-point restrictions).
    static Partition2 make_over(LabelVec ground, LabelVec block, bool divisor_mode = true);

    const LabelVec& ground() const { return ground_; }
    int ground_size() const { return static_cast<int>(ground_.size()); }
    const LabelVec& first() const { return first_; }
    const LabelVec& second() const { return second_; }

    // The block containing `label` / the opposite block.
    const LabelVec& side_of(int label) const;
    const LabelVec& side_opposite(int label) const;
    bool same_side(int a, int b) const;

    // Textual form `{1,2|3,4,5}`, blocks in canonical order.
    std::string str() const;

    auto operator<=>(const Partition2&) const = default;

private:
    LabelVec ground_;
    LabelVec first_;
    LabelVec second_;
};

// True iff at least one of the four pairwise block intersections is empty;
// equivalently the two boundary divisors intersect. Requires equal grounds.
bool compatible(const Partition2& p, const Partition2& q);

// Intersection with a 4-element subset S of the ground set; defined when
// both intersections keep at least two labels, otherwise nullopt.
std::optional<Partition2> restrict_to(const Partition2& p, const LabelVec& s);

// Total injective relabeling with one explicitly omitted source label
// (the marked point consumed by a node-identifying gluing).
class LabelMap {
public:
    LabelMap(int source_arity, int target_arity);

    void map_to(int from, int to);

    // nullopt exactly at the omitted (node) label.
    std::optional<int> image(int from) const;
    int source_arity() const { return source_; }
    int target_arity() const { return target_; }

    // Images of all mapped source labels, ascending.
    LabelVec image_set() const;
    // Pointwise image of a label set; throws if it meets the omitted label.
    LabelVec apply(const LabelVec& labels) const;

private:
    int source_;
    int target_;
    std::vector<int> to_;  // index from-1; 0 = omitted
};

// Relabeling maps of the gluing that identifies input slot i of a
// (k+1)-marked curve with the last marked point of an (l+1)-marked curve.
// First factor: labels below i are kept, i is consumed, labels above i are
// shifted up by l-1. Second factor: labels 1..l are shifted up by i-1 and
// l+1 is consumed. The two images partition [k+l].
std::pair<LabelMap, LabelMap> glue_label_maps(int k, int l, int i);

}  // namespace moduli
