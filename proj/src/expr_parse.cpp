#include "moduli/expr_parse.hpp"

#include <cctype>

namespace moduli {

namespace {

class Scanner {
public:
    Scanner(const std::string& text, RingContextPtr ctx) : text_(text), ctx_(std::move(ctx)) {}

    RingElement parse() {
        RingElement out(ctx_);
        skip_ws();
        bool negative = eat('-');
        skip_ws();
        out += parse_term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+', '-', or end of expression");
            ++pos_;
            skip_ws();
            out += parse_term(op == '-');
        }
        return out;
    }

private:
    RingElement parse_term(bool negative) {
        Rational coeff = negative ? -1 : 1;
        Monomial mono;
        parse_factor(coeff, mono);
        for (;;) {
            skip_ws();
            if (!eat('*')) break;
            skip_ws();
            parse_factor(coeff, mono);
        }
        return RingElement::term(ctx_, std::move(mono), coeff);
    }

    void parse_factor(Rational& coeff, Monomial& mono) {
        if (at_end()) fail("expected a coefficient or a generator");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_rational();
            return;
        }
        mono.push_back(parse_generator());
    }

    Rational parse_rational() {
        std::string num = parse_digits("coefficient");
        if (eat('/')) {
            std::string den = parse_digits("denominator");
            if (Rational(den) == 0) fail("zero denominator");
            Rational r(num + "/" + den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    std::string parse_digits(const char* what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(take());
        return out;
    }

    int parse_generator() {
        const int start = pos_;
        for (char c : ctx_->prefix) {
            if (at_end() || peek() != c) {
                pos_ = start;
                fail("expected generator token '" + ctx_->prefix + "{...}'");
            }
            ++pos_;
        }
        expect('{');
        LabelVec first = parse_labels();
        expect('|');
        LabelVec second = parse_labels();
        expect('}');
        Partition2 p = [&] {
            try {
                LabelVec all = first;
                all.insert(all.end(), second.begin(), second.end());
                std::sort(all.begin(), all.end());
                if (all != full_label_set(ctx_->ground))
                    throw DomainError("blocks must partition the marked points 1.." +
                                      std::to_string(ctx_->ground));
                return Partition2::make(ctx_->ground, first, true);
            } catch (const DomainError& e) {
                pos_ = start;
                fail(e.what());
                throw;  // unreachable
            }
        }();
        int id = ctx_->find(p);
        if (id < 0) {
            pos_ = start;
            fail("unknown generator " + ctx_->prefix + p.str());
        }
        return id;
    }

    LabelVec parse_labels() {
        LabelVec out;
        out.push_back(parse_label());
        while (eat(',')) out.push_back(parse_label());
        return out;
    }

    int parse_label() {
        skip_ws();
        std::string d = parse_digits("label");
        skip_ws();
        return std::stoi(d);
    }

    void expect(char c) {
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool eat(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= static_cast<int>(text_.size()); }
    char peek() const { return text_[static_cast<std::size_t>(pos_)]; }
    char take() { return text_[static_cast<std::size_t>(pos_++)]; }

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (int i = 0; i < pos_ && i < static_cast<int>(text_.size()); ++i) {
            if (text_[static_cast<std::size_t>(i)] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    const std::string& text_;
    RingContextPtr ctx_;
    int pos_ = 0;
};

}  // namespace

RingElement parse_ring_expression(const std::string& text, const RingContextPtr& ctx) {
    if (!ctx) throw DomainError("parser needs a generator universe");
    Scanner s(text, ctx);
    return s.parse();
}

}  // namespace moduli
