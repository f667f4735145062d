#include "moduli/macaulay.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace moduli {

namespace {

// Everything below is deliberately self-contained: plain lexicographic
// monomial bookkeeping and a hand-rolled elimination, so the oracle and the
// Buchberger engine cannot share a bug.

std::vector<Monomial> monomials_of_count(int gens, int count) {
    std::vector<Monomial> out;
    Monomial current;
    std::function<void(int, int)> walk = [&](int min_gen, int remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int g = min_gen; g < gens; ++g) {
            current.push_back(g);
            walk(g, remaining - 1);
            current.pop_back();
        }
    };
    walk(0, count);
    return out;
}

Monomial merge_sorted(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Sparse integer row, entries sorted by column.
using IntRow = std::vector<std::pair<int, Integer>>;

void normalize_content(IntRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (sgn(row.front().second) < 0) g = -g;
    if (g != 0 && g != 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- row * pivot_lead - pivot * row_entry, dropping the pivot column.
IntRow eliminate(const IntRow& row, const IntRow& pivot, const Integer& row_entry) {
    const Integer& pivot_lead = pivot.front().second;
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, Integer(row[i].second * pivot_lead));
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, Integer(-pivot[j].second * row_entry));
            ++j;
        } else {
            Integer v = row[i].second * pivot_lead - pivot[j].second * row_entry;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    normalize_content(out);
    return out;
}

long rank_rational(std::vector<IntRow> rows) {
    std::map<int, IntRow> pivots;  // leading column -> normalized row
    long rank = 0;
    for (auto& row : rows) {
        normalize_content(row);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                pivots.emplace(row.front().first, std::move(row));
                ++rank;
                break;
            }
            row = eliminate(row, it->second, row.front().second);
        }
    }
    return rank;
}

// GF(2) rows: sorted lists of set columns; elimination is symmetric difference.
using BitRow = std::vector<int>;

BitRow xor_rows(const BitRow& a, const BitRow& b) {
    BitRow out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

long rank_gf2(std::vector<BitRow> rows) {
    std::map<int, BitRow> pivots;
    long rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front());
            if (it == pivots.end()) {
                pivots.emplace(row.front(), std::move(row));
                ++rank;
                break;
            }
            row = xor_rows(row, it->second);
        }
    }
    return rank;
}

}  // namespace

MacaulayReport macaulay_rank(const Presentation& p, int real_degree) {
    if (real_degree < 0) throw DomainError("macaulay_rank needs a nonnegative degree");
    MacaulayReport rep;
    if (real_degree == 0) {
        rep.monomials = 1;
        rep.rank = 0;
        rep.dimension = 1;  // constants; relations are positively graded
        return rep;
    }
    if (p.ctx->gen_count() == 0) return rep;  // nothing above degree 0
    const int gd = p.ctx->uniform_degree();
    if (real_degree % gd != 0) return rep;
    const int count = real_degree / gd;

    auto cols = monomials_of_count(p.ctx->gen_count(), count);
    std::map<Monomial, int> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], static_cast<int>(i));
    rep.monomials = static_cast<long>(cols.size());

    const bool over_gf2 = p.ctx->field == Field::gf2;
    std::vector<IntRow> qrows;
    std::vector<BitRow> brows;
    for (const auto& rel : p.relations) {
        if (rel.is_zero()) continue;
        const int rel_count = static_cast<int>(rel.leading_monomial().size());
        if (rel_count > count) continue;
        // integral coefficients: scale by the lcm of the denominators
        Integer den_lcm = 1;
        for (const auto& [m, c] : rel.terms())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& mult : monomials_of_count(p.ctx->gen_count(), count - rel_count)) {
            if (over_gf2) {
                BitRow row;
                for (const auto& [m, c] : rel.terms())
                    row.push_back(col_index.at(merge_sorted(m, mult)));
                std::sort(row.begin(), row.end());
                brows.push_back(std::move(row));
            } else {
                IntRow row;
                for (const auto& [m, c] : rel.terms()) {
                    Rational scaled = c * Rational(den_lcm);
                    scaled.canonicalize();
                    row.emplace_back(col_index.at(merge_sorted(m, mult)), scaled.get_num());
                }
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                qrows.push_back(std::move(row));
            }
        }
    }
    rep.rank = over_gf2 ? rank_gf2(std::move(brows)) : rank_rational(std::move(qrows));
    rep.dimension = rep.monomials - rep.rank;
    return rep;
}

long macaulay_dimension(const Presentation& p, int real_degree) {
    return macaulay_rank(p, real_degree).dimension;
}

}  // namespace moduli
