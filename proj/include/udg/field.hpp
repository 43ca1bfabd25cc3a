#pragma once

/// Scalars of the fields this library works over: Q and real quadratic
/// extensions Q[sqrt(m)] with m square-free, m >= 2.
///
/// A Quadratic is the exact pair a + b*sqrt(m); since 1 and sqrt(m) are
/// linearly independent over Q, equality is componentwise and every sign
/// question reduces to rational sign analysis. Scalars of different m are
/// never mixed: combining them throws ("field mismatch") instead of
/// silently extending to a composite field.
///
/// Textual syntax (used by every file format):
///   p          e.g.  7, -3
///   p/q        e.g.  3/5, -1/2
///   a+c*sqrt(m), with a and c in the forms above, e.g. 1/2+1/2*sqrt(3),
///   0+1*sqrt(2), 1/2-1/2*sqrt(3)

#include "udg/errors.hpp"
#include "udg/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace udg {

class Quadratic {
    Rational a_;
    Rational b_;
    std::uint64_t m_;

public:
    static void validate_tag(std::uint64_t m) {
        // Remember the last tag seen; arithmetic keeps reusing one m.
        thread_local std::uint64_t last_ok = 0;
        if (m == last_ok) return;
        if (m < 2 || !is_square_free(m))
            throw std::domain_error("field tag must be a square-free integer >= 2");
        last_ok = m;
    }

    Quadratic(Rational a, Rational b, std::uint64_t m)
        : a_(std::move(a)), b_(std::move(b)), m_(m) {
        validate_tag(m);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    std::uint64_t tag() const { return m_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign of a + b*sqrt(m), decided by comparing a^2 against
    /// b^2*m when a and b disagree in sign. Never touches floating point.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Signs differ; |a| vs |b|*sqrt(m) decides. Equality is impossible
        // because sqrt(m) is irrational.
        Rational lhs = a_ * a_;
        Rational rhs = b_ * b_ * Rational(BigInt(m_));
        return lhs > rhs ? sa : sb;
    }

    Quadratic operator-() const { return Quadratic(-a_, -b_, m_); }

    Quadratic operator+(const Quadratic& rhs) const {
        require_same_tag(rhs);
        return Quadratic(a_ + rhs.a_, b_ + rhs.b_, m_);
    }
    Quadratic operator-(const Quadratic& rhs) const {
        require_same_tag(rhs);
        return Quadratic(a_ - rhs.a_, b_ - rhs.b_, m_);
    }
    Quadratic operator*(const Quadratic& rhs) const {
        require_same_tag(rhs);
        Rational m{BigInt(m_)};
        return Quadratic(a_ * rhs.a_ + b_ * rhs.b_ * m, a_ * rhs.b_ + b_ * rhs.a_, m_);
    }

    bool operator==(const Quadratic& rhs) const {
        require_same_tag(rhs);
        return a_ == rhs.a_ && b_ == rhs.b_;
    }

    void require_same_tag(const Quadratic& rhs) const {
        if (m_ != rhs.m_) throw std::domain_error("field mismatch");
    }

    std::string to_string() const {
        std::string s = a_.to_string();
        s += b_.is_negative() ? '-' : '+';
        s += udg::abs(b_).to_string();
        s += "*sqrt(";
        s += std::to_string(m_);
        s += ')';
        return s;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Quadratic& q) {
    return os << q.to_string();
}

/// A scalar of the working field: either a plain rational or an element
/// of one quadratic extension. Mixed arithmetic promotes the rational
/// side into the quadratic field; two quadratics must share the tag.
class FieldValue {
    std::variant<Rational, Quadratic> v_;

public:
    FieldValue() : v_(Rational()) {}
    FieldValue(Rational r) : v_(std::move(r)) {}
    FieldValue(Quadratic q) : v_(std::move(q)) {}
    FieldValue(long long n) : v_(Rational(n)) {}

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }

    const Rational& rational() const {
        if (!is_rational()) throw std::domain_error("field mismatch");
        return std::get<Rational>(v_);
    }
    const Quadratic& quadratic() const {
        if (is_rational()) throw std::domain_error("field mismatch");
        return std::get<Quadratic>(v_);
    }

    /// Tag of the quadratic field, or 0 for plain rationals.
    std::uint64_t tag() const { return is_rational() ? 0 : quadratic().tag(); }

    /// This value viewed inside Q[sqrt(m)].
    Quadratic promoted(std::uint64_t m) const {
        if (is_rational()) return Quadratic(rational(), Rational(0), m);
        if (quadratic().tag() != m) throw std::domain_error("field mismatch");
        return quadratic();
    }

    bool is_zero() const {
        return is_rational() ? rational().is_zero() : quadratic().is_zero();
    }

    int sign() const { return is_rational() ? rational().sign() : quadratic().sign(); }

    FieldValue operator-() const {
        if (is_rational()) return FieldValue(-rational());
        return FieldValue(-quadratic());
    }

    FieldValue operator+(const FieldValue& rhs) const { return combine(rhs, '+'); }
    FieldValue operator-(const FieldValue& rhs) const { return combine(rhs, '-'); }
    FieldValue operator*(const FieldValue& rhs) const { return combine(rhs, '*'); }

    bool operator==(const FieldValue& rhs) const {
        if (is_rational() && rhs.is_rational()) return rational() == rhs.rational();
        std::uint64_t m = is_rational() ? rhs.tag() : tag();
        return promoted(m) == rhs.promoted(m);
    }

    std::string to_string() const {
        return is_rational() ? rational().to_string() : quadratic().to_string();
    }

private:
    FieldValue combine(const FieldValue& rhs, char op) const {
        if (is_rational() && rhs.is_rational()) {
            const Rational& a = rational();
            const Rational& b = rhs.rational();
            switch (op) {
                case '+': return FieldValue(a + b);
                case '-': return FieldValue(a - b);
                default: return FieldValue(a * b);
            }
        }
        std::uint64_t m = is_rational() ? rhs.tag() : tag();
        Quadratic a = promoted(m);
        Quadratic b = rhs.promoted(m);
        switch (op) {
            case '+': return FieldValue(a + b);
            case '-': return FieldValue(a - b);
            default: return FieldValue(a * b);
        }
    }
};

/// Exact three-way comparison. Values must live in one field (rationals
/// promote); quadratics with different tags are incomparable.
inline int compare(const FieldValue& lhs, const FieldValue& rhs) {
    if (lhs.is_rational() && rhs.is_rational()) {
        auto c = lhs.rational() <=> rhs.rational();
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    return (lhs - rhs).sign();
}

inline std::ostream& operator<<(std::ostream& os, const FieldValue& v) {
    return os << v.to_string();
}

namespace detail {

struct ScalarCursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 0, pos + 1);
    }

    BigInt digits() {
        if (done() || peek() < '0' || peek() > '9') fail("expected digits");
        BigInt n = 0;
        while (!done() && peek() >= '0' && peek() <= '9') {
            n = n * 10 + (peek() - '0');
            ++pos;
        }
        return n;
    }

    Rational rational() {
        int sign = 1;
        if (!done() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos;
        }
        BigInt num = digits();
        BigInt den = 1;
        if (!done() && peek() == '/') {
            ++pos;
            std::size_t den_pos = pos;
            den = digits();
            if (den == 0) throw ParseError("division by zero", 0, den_pos + 1);
        }
        return Rational(sign < 0 ? BigInt(-num) : num, den);
    }

    bool literal(std::string_view word) {
        if (text.substr(pos, word.size()) != word) return false;
        pos += word.size();
        return true;
    }
};

}  // namespace detail

/// Parse one scalar in the canonical syntax. The whole string must be
/// consumed; no whitespace is allowed inside a scalar.
inline FieldValue parse_scalar(std::string_view text) {
    detail::ScalarCursor cur{text};
    if (cur.done()) cur.fail("empty scalar");
    Rational a = cur.rational();
    if (cur.done()) return FieldValue(a);
    char sep = cur.peek();
    if (sep != '+' && sep != '-') cur.fail("unexpected character in scalar");
    ++cur.pos;
    Rational b = cur.rational();
    if (sep == '-') b = -b;
    if (!cur.literal("*sqrt(")) cur.fail("expected '*sqrt('");
    std::size_t m_pos = cur.pos;
    BigInt m_big = cur.digits();
    if (!cur.literal(")")) cur.fail("expected ')'");
    if (!cur.done()) cur.fail("unexpected trailing characters in scalar");
    if (m_big < 2 || m_big > BigInt(UINT64_MAX))
        throw ParseError("field tag must be a square-free integer >= 2", 0, m_pos + 1);
    std::uint64_t m = static_cast<std::uint64_t>(m_big);
    if (!is_square_free(m))
        throw ParseError("field tag must be a square-free integer >= 2", 0, m_pos + 1);
    return FieldValue(Quadratic(a, b, m));
}

}  // namespace udg
