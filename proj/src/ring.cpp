#include "moduli/ring.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace moduli {

std::string field_name(Field f) { return f == Field::rational ? "q" : "gf2"; }

int RingContext::uniform_degree() const {
    if (gens.empty()) throw DomainError("ring has no generators");
    int d = gens.front().degree;
    for (const auto& g : gens)
        if (g.degree != d) throw DomainError("ring mixes generator degrees");
    return d;
}

int RingContext::find(const Partition2& p) const {
    for (int i = 0; i < gen_count(); ++i)
        if (gens[static_cast<std::size_t>(i)].partition == p) return i;
    return -1;
}

int RingContext::find_token(const std::string& token) const {
    for (int i = 0; i < gen_count(); ++i)
        if (gens[static_cast<std::size_t>(i)].token == token) return i;
    return -1;
}

RingContextPtr make_ring_context(Field field, int ground, std::string prefix,
                                 std::vector<GeneratorInfo> gens) {
    auto ctx = std::make_shared<RingContext>();
    ctx->field = field;
    ctx->ground = ground;
    ctx->prefix = std::move(prefix);
    ctx->gens = std::move(gens);
    return ctx;
}

bool same_context(const RingContextPtr& a, const RingContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->field != b->field || a->ground != b->ground || a->prefix != b->prefix ||
        a->gens.size() != b->gens.size())
        return false;
    for (std::size_t i = 0; i < a->gens.size(); ++i)
        if (a->gens[i].token != b->gens[i].token || a->gens[i].degree != b->gens[i].degree)
            return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
    std::size_t i = 0;
    for (int g : d) {
        while (i < m.size() && m[i] < g) ++i;
        if (i == m.size() || m[i] != g) return false;
        ++i;
    }
    return true;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
    Monomial out;
    out.reserve(m.size() - d.size());
    std::size_t i = 0;
    for (int g : m) {
        if (i < d.size() && d[i] == g) {
            ++i;
            continue;
        }
        out.push_back(g);
    }
    if (i != d.size()) throw DomainError("monomial quotient by a non-divisor");
    return out;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j] < a[i]) {
            out.push_back(b[j++]);
        } else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

bool monomials_coprime(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else return false;
    }
    return true;
}

bool DegRevLexLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    // Equal total degree: compare exponents from the highest generator down;
    // at the first difference the monomial with the larger exponent is the
    // smaller one (reverse-lexicographic tiebreak).
    auto ia = a.rbegin(), ib = b.rbegin();
    while (ia != a.rend() && ib != b.rend()) {
        if (*ia != *ib) return *ia > *ib;
        // same generator: count multiplicities
        int g = *ia;
        int ca = 0, cb = 0;
        while (ia != a.rend() && *ia == g) { ++ca; ++ia; }
        while (ib != b.rend() && *ib == g) { ++cb; ++ib; }
        if (ca != cb) return ca > cb;
    }
    return false;  // equal
}

RingElement::RingElement(RingContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw DomainError("ring element needs a context");
}

RingElement RingElement::constant(RingContextPtr ctx, const Rational& c) {
    RingElement e(std::move(ctx));
    e.add_term({}, c);
    return e;
}

RingElement RingElement::generator(RingContextPtr ctx, int gen_id) {
    if (gen_id < 0 || gen_id >= ctx->gen_count()) throw DomainError("generator id out of range");
    RingElement e(std::move(ctx));
    e.add_term({gen_id}, 1);
    return e;
}

RingElement RingElement::term(RingContextPtr ctx, Monomial m, const Rational& c) {
    std::sort(m.begin(), m.end());
    for (int g : m)
        if (g < 0 || g >= ctx->gen_count()) throw DomainError("generator id out of range");
    RingElement e(std::move(ctx));
    e.add_term(m, c);
    return e;
}

int RingElement::monomial_degree(const Monomial& m) const {
    int d = 0;
    for (int g : m) d += ctx_->gens[static_cast<std::size_t>(g)].degree;
    return d;
}

int RingElement::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

bool RingElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) != d) return false;
    return true;
}

void RingElement::add_term(const Monomial& m, const Rational& c) {
    Rational v = ctx_->field == Field::gf2 ? gf2_reduce(c) : c;
    if (v == 0) return;
    auto [it, fresh] = terms_.emplace(m, v);
    if (!fresh) {
        it->second += v;
        if (ctx_->field == Field::gf2) it->second = gf2_reduce(it->second);
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement RingElement::operator-() const {
    RingElement out(ctx_);
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    if (!same_context(ctx_, o.ctx_)) throw DomainError("ring elements from different universes");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    if (!same_context(ctx_, o.ctx_)) throw DomainError("ring elements from different universes");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement out = *this;
    out += o;
    return out;
}

RingElement RingElement::operator-(const RingElement& o) const {
    RingElement out = *this;
    out -= o;
    return out;
}

RingElement RingElement::operator*(const RingElement& o) const {
    if (!same_context(ctx_, o.ctx_)) throw DomainError("ring elements from different universes");
    RingElement out(ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
    return out;
}

RingElement RingElement::operator*(const Rational& c) const {
    RingElement out(ctx_);
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

bool RingElement::operator==(const RingElement& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

const Monomial& RingElement::leading_monomial() const {
    if (terms_.empty()) throw DomainError("zero element has no leading term");
    return terms_.rbegin()->first;
}

const Rational& RingElement::leading_coefficient() const {
    if (terms_.empty()) throw DomainError("zero element has no leading term");
    return terms_.rbegin()->second;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool wrote_coeff = false;
        if (m.empty() || mag != 1) {
            os << mag.get_str();
            wrote_coeff = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (wrote_coeff || i) os << " * ";
            os << ctx_->gens[static_cast<std::size_t>(m[i])].token;
        }
    }
    return os.str();
}

}  // namespace moduli
