#include "moduli/labels.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>

namespace moduli {

namespace {

bool is_sorted_set(const LabelVec& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

LabelVec intersect(const LabelVec& a, const LabelVec& b) {
    LabelVec out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void print_block(std::ostringstream& os, const LabelVec& block) {
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) os << ',';
        os << block[i];
    }
}

}  // namespace

LabelVec full_label_set(int n) {
    if (n < 1) throw DomainError("label set size must be positive");
    LabelVec v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

Partition2 Partition2::make(int n, LabelVec block, bool divisor_mode) {
    return make_over(full_label_set(n), std::move(block), divisor_mode);
}

Partition2 Partition2::make_over(LabelVec ground, LabelVec block, bool divisor_mode) {
    std::sort(ground.begin(), ground.end());
    std::sort(block.begin(), block.end());
    if (ground.empty() || !is_sorted_set(ground))
        throw DomainError("partition ground must be a nonempty label set");
    if (!is_sorted_set(block)) throw DomainError("partition block has repeated labels");
    if (!std::includes(ground.begin(), ground.end(), block.begin(), block.end()))
        throw DomainError("partition block contains labels outside the ground set");
    LabelVec other;
    std::set_difference(ground.begin(), ground.end(), block.begin(), block.end(),
                        std::back_inserter(other));
    if (divisor_mode && (block.size() < 2 || other.size() < 2))
        throw DomainError("divisor partition needs both blocks of size >= 2, got " +
                          std::to_string(block.size()) + "|" + std::to_string(other.size()));
    Partition2 p;
    const bool block_first = !block.empty() && block.front() == ground.front();
    p.ground_ = std::move(ground);
    if (block_first) {
        p.first_ = std::move(block);
        p.second_ = std::move(other);
    } else {
        p.first_ = std::move(other);
        p.second_ = std::move(block);
    }
    return p;
}

const LabelVec& Partition2::side_of(int label) const {
    if (std::binary_search(first_.begin(), first_.end(), label)) return first_;
    if (std::binary_search(second_.begin(), second_.end(), label)) return second_;
    throw DomainError("label " + std::to_string(label) + " not in partition ground");
}

const LabelVec& Partition2::side_opposite(int label) const {
    const LabelVec& own = side_of(label);
    return &own == &first_ ? second_ : first_;
}

bool Partition2::same_side(int a, int b) const { return &side_of(a) == &side_of(b); }

std::string Partition2::str() const {
    std::ostringstream os;
    os << '{';
    print_block(os, first_);
    os << '|';
    print_block(os, second_);
    os << '}';
    return os.str();
}

bool compatible(const Partition2& p, const Partition2& q) {
    if (p.ground() != q.ground())
        throw DomainError("partitions live over different ground sets");
    return intersect(p.first(), q.first()).empty() || intersect(p.first(), q.second()).empty() ||
           intersect(p.second(), q.first()).empty() || intersect(p.second(), q.second()).empty();
}

std::optional<Partition2> restrict_to(const Partition2& p, const LabelVec& s) {
    LabelVec sub = s;
    std::sort(sub.begin(), sub.end());
    if (sub.size() != 4 || !is_sorted_set(sub))
        throw DomainError("restriction subset must have exactly 4 distinct labels");
    if (!std::includes(p.ground().begin(), p.ground().end(), sub.begin(), sub.end()))
        throw DomainError("restriction subset not contained in the ground set");
    LabelVec a = intersect(p.first(), sub);
    if (a.size() < 2 || a.size() > 2) return std::nullopt;
    return Partition2::make_over(sub, std::move(a), true);
}

LabelMap::LabelMap(int source_arity, int target_arity)
    : source_(source_arity), target_(target_arity), to_(static_cast<std::size_t>(source_arity), 0) {
    if (source_arity < 1 || target_arity < 1) throw DomainError("label map arity must be positive");
}

void LabelMap::map_to(int from, int to) {
    if (from < 1 || from > source_) throw DomainError("label map source out of range");
    if (to < 1 || to > target_) throw DomainError("label map target out of range");
    for (int j = 1; j <= source_; ++j)
        if (j != from && to_[static_cast<std::size_t>(j - 1)] == to)
            throw DomainError("label map must be injective");
    to_[static_cast<std::size_t>(from - 1)] = to;
}

std::optional<int> LabelMap::image(int from) const {
    if (from < 1 || from > source_) throw DomainError("label map source out of range");
    int to = to_[static_cast<std::size_t>(from - 1)];
    if (to == 0) return std::nullopt;
    return to;
}

LabelVec LabelMap::image_set() const {
    LabelVec out;
    for (int v : to_)
        if (v != 0) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

LabelVec LabelMap::apply(const LabelVec& labels) const {
    LabelVec out;
    out.reserve(labels.size());
    for (int l : labels) {
        auto im = image(l);
        if (!im) throw DomainError("label map applied to the omitted label");
        out.push_back(*im);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<LabelMap, LabelMap> glue_label_maps(int k, int l, int i) {
    if (k < 2 || l < 2) throw DomainError("gluing needs both operad arities >= 2");
    if (i < 1 || i > k) throw DomainError("gluing slot " + std::to_string(i) +
                                          " out of range [1," + std::to_string(k) + "]");
    LabelMap f(k + 1, k + l);
    for (int j = 1; j <= k + 1; ++j) {
        if (j == i) continue;
        f.map_to(j, j < i ? j : j + l - 1);
    }
    LabelMap g(l + 1, k + l);
    for (int j = 1; j <= l; ++j) g.map_to(j, j + i - 1);
    return {std::move(f), std::move(g)};
}

}  // namespace moduli
