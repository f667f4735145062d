#include "moduli/quotient.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace moduli {

namespace {

RingElement make_monic(RingElement f) {
    if (f.is_zero()) return f;
    Rational inv = 1 / f.leading_coefficient();
    return f * inv;
}

}  // namespace

QuotientRing::QuotientRing(Presentation p) : pres_(std::move(p)) {
    if (!pres_.ctx) throw DomainError("presentation needs a ring context");
    if (pres_.ctx->gen_count() > 0) gen_degree_ = pres_.ctx->uniform_degree();
    for (const auto& r : pres_.relations) {
        if (!same_context(r.context(), pres_.ctx))
            throw DomainError("relation from a different generator universe");
        if (!r.is_homogeneous()) throw DomainError("relations must be homogeneous");
    }
    for (const auto& r : pres_.relations) {
        if (r.is_zero()) continue;
        basis_.push_back(make_monic(r));
    }
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(basis_.size()); ++j) {
            Monomial lcm = monomial_lcm(basis_[static_cast<std::size_t>(i)].leading_monomial(),
                                        basis_[static_cast<std::size_t>(j)].leading_monomial());
            queue_.emplace(static_cast<int>(lcm.size()), Pair{i, j, std::move(lcm)});
        }
    completed_count_ = 0;
}

int QuotientRing::count_degree_of(int real_degree) const {
    if (real_degree < 0) return -1;
    if (real_degree == 0) return 0;
    if (pres_.ctx->gen_count() == 0) return -1;
    if (real_degree % gen_degree_ != 0) return -1;
    return real_degree / gen_degree_;
}

RingElement QuotientRing::reduce_by_basis(RingElement f) const {
    RingElement remainder(pres_.ctx);
    while (!f.is_zero()) {
        const Monomial& lead = f.leading_monomial();
        const Rational lc = f.leading_coefficient();
        bool reduced = false;
        for (const auto& g : basis_) {
            if (!monomial_divides(g.leading_monomial(), lead)) continue;
            Monomial q = monomial_quotient(lead, g.leading_monomial());
            f -= g * RingElement::term(pres_.ctx, std::move(q), lc);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lead, lc);
            f.add_term(lead, -lc);
        }
    }
    return remainder;
}

void QuotientRing::ensure_complete_locked(int count_degree) const {
    if (completed_count_ >= count_degree) return;
    while (!queue_.empty() && queue_.begin()->first <= count_degree) {
        auto node = queue_.begin();
        Pair pr = node->second;
        queue_.erase(node);
        considered_.insert({pr.i, pr.j});
        const RingElement& fi = basis_[static_cast<std::size_t>(pr.i)];
        const RingElement& fj = basis_[static_cast<std::size_t>(pr.j)];
        // product criterion
        if (monomials_coprime(fi.leading_monomial(), fj.leading_monomial())) continue;
        // chain criterion
        bool chained = false;
        for (int t = 0; t < static_cast<int>(basis_.size()) && !chained; ++t) {
            if (t == pr.i || t == pr.j) continue;
            if (!monomial_divides(basis_[static_cast<std::size_t>(t)].leading_monomial(), pr.lcm))
                continue;
            auto key1 = std::minmax(pr.i, t);
            auto key2 = std::minmax(pr.j, t);
            if (considered_.count({key1.first, key1.second}) &&
                considered_.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        RingElement s =
            fi * RingElement::term(pres_.ctx, monomial_quotient(pr.lcm, fi.leading_monomial()), 1);
        s -= fj * RingElement::term(pres_.ctx, monomial_quotient(pr.lcm, fj.leading_monomial()), 1);
        RingElement r = reduce_by_basis(std::move(s));
        if (r.is_zero()) continue;
        r = make_monic(std::move(r));
        int idx = static_cast<int>(basis_.size());
        for (int t = 0; t < idx; ++t) {
            Monomial lcm = monomial_lcm(basis_[static_cast<std::size_t>(t)].leading_monomial(),
                                        r.leading_monomial());
            queue_.emplace(static_cast<int>(lcm.size()), Pair{t, idx, std::move(lcm)});
        }
        basis_.push_back(std::move(r));
    }
    completed_count_ = count_degree;
}

RingElement QuotientRing::normal_form(const RingElement& a) const {
    if (!same_context(a.context(), pres_.ctx))
        throw DomainError("element from a different generator universe");
    int d = a.degree();
    if (d > pres_.socle_bound)
        throw DomainError("degree " + std::to_string(d) + " exceeds the configured bound " +
                          std::to_string(pres_.socle_bound));
    if (a.is_zero()) return a;
    int count = 0;
    for (const auto& [m, c] : a.terms()) count = std::max(count, static_cast<int>(m.size()));
    std::lock_guard<std::mutex> lock(mu_);
    ensure_complete_locked(count);
    return reduce_by_basis(a);
}

std::vector<long> QuotientRing::hilbert_function(int dmax) const {
    if (dmax < 0) throw DomainError("hilbert_function needs a nonnegative degree");
    if (dmax > pres_.socle_bound)
        throw DomainError("degree " + std::to_string(dmax) + " exceeds the configured bound " +
                          std::to_string(pres_.socle_bound));
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<long> dims(static_cast<std::size_t>(dmax) + 1, 0);
    for (int d = 0; d <= dmax; ++d) {
        int c = count_degree_of(d);
        if (c < 0) {
            dims[static_cast<std::size_t>(d)] = 0;
            continue;
        }
        ensure_complete_locked(c);
        // count monomials of this degree avoiding every basis leading term
        long count = 0;
        const int n = pres_.ctx->gen_count();
        Monomial current;
        std::function<void(int, int)> walk = [&](int min_gen, int remaining) {
            if (remaining == 0) {
                for (const auto& g : basis_)
                    if (monomial_divides(g.leading_monomial(), current)) return;
                ++count;
                return;
            }
            for (int g = min_gen; g < n; ++g) {
                current.push_back(g);
                walk(g, remaining - 1);
                current.pop_back();
            }
        };
        walk(0, c);
        dims[static_cast<std::size_t>(d)] = count;
    }
    return dims;
}

}  // namespace moduli
