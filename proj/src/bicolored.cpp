#include "moduli/bicolored.hpp"

namespace moduli {

std::string color_name(Color c) { return c == Color::plus ? "+" : "R"; }

std::string check_result_name(CheckResult r) {
    switch (r) {
        case CheckResult::holds: return "holds";
        case CheckResult::fails: return "fails";
        case CheckResult::undefined: return "undefined";
    }
    return "?";
}

BicoloredElement::BicoloredElement(StrataSum value) : value_(std::move(value)) {
    if (value_.flavor() == Flavor::conjugate_kind)
        throw DomainError("conjugate-pair elements are not part of the two-colored structure");
}

BicoloredElement BicoloredElement::unit(Color c) {
    return BicoloredElement(c == Color::plus ? StrataSum::complex_scalar(1)
                                             : StrataSum::real_scalar(1));
}

int BicoloredElement::arity() const { return value_.arity(); }

int BicoloredElement::arity_plus() const {
    return value_.flavor() == Flavor::complex_kind ? value_.arity() : value_.real_l();
}

Color BicoloredElement::out() const {
    return value_.flavor() == Flavor::complex_kind ? Color::plus : Color::real;
}

Color BicoloredElement::in_slot(int i) const {
    if (i < 1 || i > arity()) throw DomainError("slot out of range");
    return i <= arity_plus() ? Color::plus : Color::real;
}

int BicoloredElement::grade() const {
    return value_.flavor() == Flavor::complex_kind ? 0 : value_.real_k() - 1;
}

BicoloredElement circ(const BicoloredElement& x, int i, const BicoloredElement& y) {
    if (i < 1 || i > x.arity())
        throw DomainError("slot " + std::to_string(i) + " out of range [1," +
                          std::to_string(x.arity()) + "]");
    if (x.in_slot(i) != y.out())
        throw DomainError("color mismatch: slot " + std::to_string(i) + " of the first element is " +
                          color_name(x.in_slot(i)) + " but the second element outputs " +
                          color_name(y.out()));
    return BicoloredElement(partial_compose(x.value(), i, y.value()));
}

namespace {

std::optional<BicoloredElement> try_circ(const BicoloredElement& x, int i,
                                         const BicoloredElement& y) {
    if (i < 1 || i > x.arity()) return std::nullopt;
    if (x.in_slot(i) != y.out()) return std::nullopt;
    return circ(x, i, y);
}

CheckResult compare(const std::optional<BicoloredElement>& lhs,
                    const std::optional<BicoloredElement>& rhs) {
    if (!lhs || !rhs) return CheckResult::undefined;
    return *lhs == *rhs ? CheckResult::holds : CheckResult::fails;
}

}  // namespace

CheckResult check_114a(const BicoloredElement& x, const BicoloredElement& y,
                       const BicoloredElement& z, int i, int j) {
    if (i < 1 || i > x.arity() || j < 1 || j > y.arity()) return CheckResult::undefined;
    std::optional<BicoloredElement> lhs;
    if (auto inner = try_circ(y, j, z)) lhs = try_circ(x, i, *inner);
    std::optional<BicoloredElement> rhs;
    if (auto outer = try_circ(x, i, y)) {
        int slot = y.out() == z.out() ? j + i - 1 : j + x.arity_plus();
        rhs = try_circ(*outer, slot, z);
    }
    return compare(lhs, rhs);
}

CheckResult check_114b(const BicoloredElement& x, const BicoloredElement& y,
                       const BicoloredElement& z, int i, int j) {
    if (!(1 <= i && i < j && j <= x.arity())) return CheckResult::undefined;
    std::optional<BicoloredElement> lhs;
    if (auto first = try_circ(x, i, y)) lhs = try_circ(*first, j + y.arity() - 1, z);
    std::optional<BicoloredElement> rhs;
    if (auto first = try_circ(x, j, z)) {
        int slot = y.out() == Color::plus ? i : i + z.arity_plus();
        rhs = try_circ(*first, slot, y);
    }
    return compare(lhs, rhs);
}

CheckResult check_units(const BicoloredElement& x, int i) {
    auto right = try_circ(x, i, BicoloredElement::unit(x.in_slot(i)));
    auto left = try_circ(BicoloredElement::unit(x.out()), 1, x);
    if (!right || !left) return CheckResult::undefined;
    return (*right == x && *left == x) ? CheckResult::holds : CheckResult::fails;
}

}  // namespace moduli
