#include "moduli/operads.hpp"

#include <string>

namespace moduli {

namespace {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::complex_kind: return "complex";
        case Flavor::real_kind: return "real";
        case Flavor::conjugate_kind: return "conjugate";
    }
    return "?";
}

}  // namespace

StrataSum StrataSum::complex_zero(int arity) {
    if (arity < 1) throw DomainError("operad arity must be positive");
    StrataSum s;
    s.flavor_ = Flavor::complex_kind;
    s.arity_ = arity;
    return s;
}

StrataSum StrataSum::complex_scalar(const Rational& r) {
    StrataSum s = complex_zero(1);
    s.scalar_ = r;
    return s;
}

StrataSum StrataSum::real_zero(int k, int l) {
    if (k < 1 || l < 0) throw DomainError("real flavor needs k >= 1 and l >= 0");
    if (k + l < 2 && !(k == 1 && l == 0))
        throw DomainError("real flavor needs k + l >= 2 or the scalar line (1,0)");
    StrataSum s;
    s.flavor_ = Flavor::real_kind;
    s.arity_ = k + l;
    s.k_ = k;
    s.l_ = l;
    return s;
}

StrataSum StrataSum::real_scalar(const Rational& r) {
    StrataSum s = real_zero(1, 0);
    s.scalar_ = r;
    return s;
}

StrataSum StrataSum::conjugate_zero(int arity) {
    if (arity < 1) throw DomainError("operad arity must be positive");
    StrataSum s;
    s.flavor_ = Flavor::conjugate_kind;
    s.arity_ = arity;
    return s;
}

StrataSum StrataSum::of_tree(const ComplexStableTree& t, const Rational& c) {
    StrataSum s = complex_zero(t.leaf_count() - 1);
    s.add_tree(t, c);
    return s;
}

StrataSum StrataSum::of_tree(const RealStableTree& t, const Rational& c) {
    const int r = t.real_count();
    const int p = t.pair_count();
    StrataSum s;
    if (r == 0) {
        s = conjugate_zero(p - 1);
    } else if (r >= 2) {
        s = real_zero(r - 1, p);
    } else {
        throw DomainError("a curve with exactly one real marked point has no operad slot");
    }
    s.add_tree(t, c);
    return s;
}

int StrataSum::arity() const { return arity_; }

int StrataSum::real_k() const {
    if (flavor_ != Flavor::real_kind) throw DomainError("not a real-flavor element");
    return k_;
}

int StrataSum::real_l() const {
    if (flavor_ != Flavor::real_kind) throw DomainError("not a real-flavor element");
    return l_;
}

int StrataSum::pair_slots() const {
    switch (flavor_) {
        case Flavor::complex_kind: return arity_;
        case Flavor::real_kind: return l_;
        case Flavor::conjugate_kind: return arity_;
    }
    return 0;
}

bool StrataSum::is_scalar_line() const {
    return (flavor_ == Flavor::complex_kind && arity_ == 1) ||
           (flavor_ == Flavor::real_kind && k_ == 1 && l_ == 0);
}

const Rational& StrataSum::scalar() const {
    if (!is_scalar_line()) throw DomainError("element is not on a scalar line");
    return scalar_;
}

bool StrataSum::is_zero() const {
    if (is_scalar_line()) return scalar_ == 0;
    return cterms_.empty() && rterms_.empty();
}

void StrataSum::add_tree(const ComplexStableTree& t, const Rational& c) {
    if (flavor_ != Flavor::complex_kind || is_scalar_line())
        throw DomainError("tree does not match the element's flavor");
    if (t.leaf_count() != arity_ + 1)
        throw DomainError("tree arity mismatch: expected " + std::to_string(arity_ + 1) +
                          " leaves, got " + std::to_string(t.leaf_count()));
    if (c == 0) return;
    auto [it, fresh] = cterms_.emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) cterms_.erase(it);
    }
}

void StrataSum::add_tree(const RealStableTree& t, const Rational& c) {
    if (flavor_ == Flavor::complex_kind)
        throw DomainError("tree does not match the element's flavor");
    const int expect_real = flavor_ == Flavor::real_kind ? k_ + 1 : 0;
    const int expect_pairs = flavor_ == Flavor::real_kind ? l_ : arity_ + 1;
    if (is_scalar_line() || t.real_count() != expect_real || t.pair_count() != expect_pairs)
        throw DomainError("tree does not match the element's bigrading");
    if (c == 0) return;
    auto [it, fresh] = rterms_.emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) rterms_.erase(it);
    }
}

void StrataSum::check_same_shape(const StrataSum& o) const {
    bool ok = flavor_ == o.flavor_ && arity_ == o.arity_ && k_ == o.k_ && l_ == o.l_;
    if (!ok)
        throw DomainError("cannot combine " + flavor_name(flavor_) + " arity " +
                          std::to_string(arity_) + " with " + flavor_name(o.flavor_) +
                          " arity " + std::to_string(o.arity_));
}

StrataSum& StrataSum::operator+=(const StrataSum& o) {
    check_same_shape(o);
    if (is_scalar_line()) {
        scalar_ += o.scalar_;
        return *this;
    }
    for (const auto& [t, c] : o.cterms_) add_tree(t, c);
    for (const auto& [t, c] : o.rterms_) add_tree(t, c);
    return *this;
}

StrataSum StrataSum::operator+(const StrataSum& o) const {
    StrataSum out = *this;
    out += o;
    return out;
}

StrataSum StrataSum::operator*(const Rational& c) const {
    StrataSum out = *this;
    if (out.is_scalar_line()) {
        out.scalar_ *= c;
        return out;
    }
    if (c == 0) {
        out.cterms_.clear();
        out.rterms_.clear();
        return out;
    }
    for (auto& [t, v] : out.cterms_) v *= c;
    for (auto& [t, v] : out.rterms_) v *= c;
    return out;
}

bool StrataSum::operator==(const StrataSum& o) const {
    return flavor_ == o.flavor_ && arity_ == o.arity_ && k_ == o.k_ && l_ == o.l_ &&
           scalar_ == o.scalar_ && cterms_ == o.cterms_ && rterms_ == o.rterms_;
}

namespace {

StrataSum compose_complex(const StrataSum& x, int i, const StrataSum& y) {
    if (y.flavor() != Flavor::complex_kind)
        throw DomainError("a complex input slot needs a complex element");
    if (i < 1 || i > x.arity()) throw DomainError("slot out of range");
    if (x.is_scalar_line()) return y * x.scalar();
    if (y.is_scalar_line()) return x * y.scalar();
    StrataSum out = StrataSum::complex_zero(x.arity() + y.arity() - 1);
    for (const auto& [tx, cx] : x.complex_terms())
        for (const auto& [ty, cy] : y.complex_terms())
            out.add_tree(glue_complex(tx, i, ty), cx * cy);
    return out;
}

}  // namespace

StrataSum compose_at_pair_slot(const StrataSum& x, int pair_index, const StrataSum& y) {
    if (x.flavor() == Flavor::complex_kind)
        throw DomainError("complex elements have no pair slots");
    if (y.flavor() != Flavor::complex_kind)
        throw DomainError("a pair slot needs a complex element");
    if (pair_index < 1 || pair_index > x.pair_slots())
        throw DomainError("pair slot " + std::to_string(pair_index) + " out of range [1," +
                          std::to_string(x.pair_slots()) + "]");
    if (y.is_scalar_line()) return x * y.scalar();

    StrataSum out = x.flavor() == Flavor::real_kind
                        ? StrataSum::real_zero(x.real_k(), x.real_l() + y.arity() - 1)
                        : StrataSum::conjugate_zero(x.arity() + y.arity() - 1);
    for (const auto& [tx, cx] : x.real_terms())
        for (const auto& [ty, cy] : y.complex_terms())
            out.add_tree(glue_real_complex(tx, pair_index, ty), cx * cy);
    return out;
}

StrataSum compose_at_real_slot(const StrataSum& x, int real_index, const StrataSum& y) {
    if (x.flavor() != Flavor::real_kind)
        throw DomainError("only real-flavor elements have real slots");
    if (y.flavor() != Flavor::real_kind)
        throw DomainError("a real slot needs a real element");
    if (real_index < 1 || real_index > x.real_k())
        throw DomainError("real slot " + std::to_string(real_index) + " out of range [1," +
                          std::to_string(x.real_k()) + "]");
    if (y.is_scalar_line()) return x * y.scalar();
    if (x.is_scalar_line()) return y * x.scalar();

    StrataSum out =
        StrataSum::real_zero(x.real_k() + y.real_k() - 1, x.real_l() + y.real_l());
    for (const auto& [tx, cx] : x.real_terms())
        for (const auto& [ty, cy] : y.real_terms())
            out.add_tree(glue_real_real(tx, real_index, ty), cx * cy);
    return out;
}

StrataSum partial_compose(const StrataSum& x, int i, const StrataSum& y) {
    switch (x.flavor()) {
        case Flavor::complex_kind:
            return compose_complex(x, i, y);
        case Flavor::real_kind:
            if (i < 1 || i > x.arity()) throw DomainError("slot out of range");
            if (i <= x.real_l()) return compose_at_pair_slot(x, i, y);
            return compose_at_real_slot(x, i - x.real_l(), y);
        case Flavor::conjugate_kind:
            return compose_at_pair_slot(x, i, y);
    }
    throw DomainError("unreachable flavor");
}

StrataSum full_compose(const StrataSum& x, const std::vector<StrataSum>& ys) {
    const auto all_of_flavor = [&](Flavor f) {
        for (const auto& y : ys)
            if (y.flavor() != f) return false;
        return true;
    };

    if (x.flavor() == Flavor::complex_kind || x.flavor() == Flavor::conjugate_kind) {
        if (static_cast<int>(ys.size()) != x.arity())
            throw DomainError("full composition needs one input per slot");
        if (!all_of_flavor(Flavor::complex_kind))
            throw DomainError("these slots take complex inputs");
        StrataSum z = x;
        for (int j = x.arity(); j >= 1; --j)
            z = partial_compose(z, j, ys[static_cast<std::size_t>(j - 1)]);
        return z;
    }

    // real flavor: either all pair slots or all real slots
    if (static_cast<int>(ys.size()) == x.real_l() && all_of_flavor(Flavor::complex_kind)) {
        StrataSum z = x;
        for (int j = x.real_l(); j >= 1; --j)
            z = compose_at_pair_slot(z, j, ys[static_cast<std::size_t>(j - 1)]);
        return z;
    }
    if (static_cast<int>(ys.size()) == x.real_k() && all_of_flavor(Flavor::real_kind)) {
        StrataSum z = x;
        for (int j = x.real_k(); j >= 1; --j)
            z = compose_at_real_slot(z, j, ys[static_cast<std::size_t>(j - 1)]);
        return z;
    }
    throw DomainError(
        "full composition over a real element needs l complex inputs or k real inputs");
}

}  // namespace moduli
