#include "moduli/presentations.hpp"

#include <algorithm>

namespace moduli {

namespace {

bool is_partition_of(const LabelVec& a, const LabelVec& b, int n) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    auto feed = [&](const LabelVec& v) {
        for (int x : v) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
            seen[static_cast<std::size_t>(x)] = 1;
        }
        return true;
    };
    if (!feed(a) || !feed(b)) return false;
    return static_cast<int>(a.size() + b.size()) == n;
}

bool is_partition_of3(const LabelVec& a, const LabelVec& b, const LabelVec& c, int n) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    auto feed = [&](const LabelVec& v) {
        for (int x : v) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
            seen[static_cast<std::size_t>(x)] = 1;
        }
        return true;
    };
    if (!feed(a) || !feed(b) || !feed(c)) return false;
    return static_cast<int>(a.size() + b.size() + c.size()) == n;
}

RingContextPtr boundary_context(int n, Field field, const std::string& prefix, int degree) {
    std::vector<GeneratorInfo> gens;
    for (auto& p : divisor_partitions(n))
        gens.push_back({prefix + p.str(), degree, std::move(p)});
    return make_ring_context(field, n, prefix, std::move(gens));
}

Presentation boundary_presentation(int n, Field field, const std::string& prefix, int degree) {
    if (n < 3) throw DomainError("the moduli space needs at least 3 marked points");
    Presentation pres;
    pres.ctx = boundary_context(n, field, prefix, degree);
    pres.socle_bound = degree * (n - 3);
    const auto& ctx = pres.ctx;

    // vanishing products of disjoint boundary divisors
    for (int i = 0; i < ctx->gen_count(); ++i)
        for (int j = i + 1; j < ctx->gen_count(); ++j)
            if (!compatible(ctx->gens[static_cast<std::size_t>(i)].partition,
                            ctx->gens[static_cast<std::size_t>(j)].partition))
                pres.relations.push_back(RingElement::term(ctx, Monomial{i, j}, 1));

    // per 4-element subset, the three pullback classes agree
    LabelVec subset(4);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    subset = {a, b, c, d};
                    RingElement ab_cd =
                        pullback_boundary(ctx, subset, Partition2::make_over(subset, {a, b}));
                    RingElement ac_bd =
                        pullback_boundary(ctx, subset, Partition2::make_over(subset, {a, c}));
                    RingElement ad_bc =
                        pullback_boundary(ctx, subset, Partition2::make_over(subset, {a, d}));
                    RingElement r1 = ab_cd - ac_bd;
                    RingElement r2 = ac_bd - ad_bc;
                    if (!r1.is_zero()) pres.relations.push_back(std::move(r1));
                    if (!r2.is_zero()) pres.relations.push_back(std::move(r2));
                }
    return pres;
}

}  // namespace

std::vector<Partition2> divisor_partitions(int n) {
    if (n < 1) throw DomainError("label set size must be positive");
    std::vector<Partition2> out;
    // enumerate blocks containing label 1 so each unordered pair shows once
    const int rest = n - 1;
    for (unsigned mask = 0; mask < (1u << rest); ++mask) {
        LabelVec block{1};
        for (int j = 0; j < rest; ++j)
            if (mask & (1u << j)) block.push_back(j + 2);
        if (static_cast<int>(block.size()) < 2 || static_cast<int>(block.size()) > n - 2) continue;
        out.push_back(Partition2::make(n, std::move(block), true));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Presentation keel_presentation_raw(int n, Field field) {
    return boundary_presentation(n, field, "D", 2);
}

QuotientRing keel_presentation(int n, Field field) {
    return QuotientRing(keel_presentation_raw(n, field));
}

Presentation krasnov_presentation_raw(int k) {
    return boundary_presentation(k, Field::gf2, "RD", 1);
}

QuotientRing krasnov_presentation(int k) { return QuotientRing(krasnov_presentation_raw(k)); }

RingElement pullback_boundary(const RingContextPtr& ctx, const LabelVec& s,
                              const Partition2& split) {
    LabelVec sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (split.ground() != sorted)
        throw DomainError("split partition must live on the chosen 4-element subset");
    RingElement sum(ctx);
    for (int i = 0; i < ctx->gen_count(); ++i) {
        auto r = restrict_to(ctx->gens[static_cast<std::size_t>(i)].partition, sorted);
        if (r && *r == split) sum.add_term(Monomial{i}, 1);
    }
    return sum;
}

RingElement omega_class(const RingContextPtr& ctx, int a, int b, int c, int d) {
    LabelVec s{a, b, c, d};
    std::sort(s.begin(), s.end());
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) throw DomainError("the four labels must be distinct");
    if (s.front() < 1 || s.back() > ctx->ground)
        throw DomainError("label outside the marked-point range");
    return pullback_boundary(ctx, s, Partition2::make_over(s, {a, b}));
}

RingElement strata_class(const RingContextPtr& ctx, const ComplexStableTree& t) {
    if (t.leaf_count() != ctx->ground)
        throw DomainError("tree labels do not match the ring's marked points");
    Monomial m;
    for (const auto& p : edge_partitions(t)) {
        int id = ctx->find(p);
        if (id < 0) throw DomainError("edge partition " + p.str() + " is not a ring generator");
        m.push_back(id);
    }
    std::sort(m.begin(), m.end());
    return RingElement::term(ctx, std::move(m), 1);
}

bool is_orientable_space(int k, int l) {
    if (k < 0 || l < 0 || k + 2 * l < 3) return false;
    return k == 0 || k + 2 * l <= 4;
}

bool validate_real_index(const RealSubmanifoldIndex& idx, int k, int l) {
    if (k < 0 || l < 0 || k + 2 * l < 3) return false;
    switch (idx.kind) {
        case RealIndexKind::RE:
            // two components exchanged by the involution; only exists without
            // real marked points, and any split of the pairs is stable
            return k == 0 && idx.middle.empty() && idx.real_block_j.empty() &&
                   idx.real_block_k.empty() &&
                   is_partition_of(idx.pair_block_j, idx.pair_block_k, l);
        case RealIndexKind::RH: {
            if (!idx.middle.empty()) return false;
            if (!is_partition_of(idx.pair_block_j, idx.pair_block_k, l)) return false;
            if (k == 0 && (!idx.real_block_j.empty() || !idx.real_block_k.empty())) return false;
            if (k > 0 && !is_partition_of(idx.real_block_j, idx.real_block_k, k)) return false;
            // each fixed component must be stable with its node
            auto weight = [](const LabelVec& reals, const LabelVec& pairs) {
                return static_cast<int>(reals.size()) + 2 * static_cast<int>(pairs.size());
            };
            return weight(idx.real_block_j, idx.pair_block_j) >= 2 &&
                   weight(idx.real_block_k, idx.pair_block_k) >= 2;
        }
        case RealIndexKind::RD2:
            return k == 0 && idx.real_block_j.empty() && idx.real_block_k.empty() &&
                   is_partition_of3(idx.middle, idx.pair_block_j, idx.pair_block_k, l) &&
                   !idx.middle.empty() &&
                   idx.pair_block_j.size() + idx.pair_block_k.size() >= 2;
        case RealIndexKind::RDgen:
            // with real points the middle component is stable even when empty
            return k >= 1 && idx.real_block_j.empty() && idx.real_block_k.empty() &&
                   is_partition_of3(idx.middle, idx.pair_block_j, idx.pair_block_k, l) &&
                   idx.pair_block_j.size() + idx.pair_block_k.size() >= 2;
    }
    return false;
}

}  // namespace moduli
