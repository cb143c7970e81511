#pragma once

// Exact scalars over Q and over cyclotomic fields Q(zeta_n).
//
// A cyclotomic element is stored in the power basis 1, z, ..., z^(phi(n)-1)
// reduced modulo the n-th cyclotomic polynomial. Rational elements are the
// degree-one case of the same representation.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fatpoints {

class FieldMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class ScalarParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

using ZPoly = std::vector<mpz_class>; // coefficients, low degree first
using QPoly = std::vector<mpq_class>;

inline void trim(QPoly &p) {
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

inline long degree(const QPoly &p) { return static_cast<long>(p.size()) - 1; }

// Exact division of integer polynomials by a monic divisor.
inline ZPoly exact_div_monic(ZPoly num, const ZPoly &den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size())
        throw std::logic_error("exact_div_monic: divisor degree too large");
    ZPoly q(num.size() - dn);
    for (std::size_t k = num.size(); k-- > dn;) {
        const mpz_class t = num[k];
        q[k - dn] = t;
        if (t == 0)
            continue;
        for (std::size_t i = 0; i <= dn; ++i)
            num[k - dn + i] -= t * den[i];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0)
            throw std::logic_error("exact_div_monic: nonzero remainder");
    return q;
}

// Phi_n via (z^n - 1) / prod_{d | n, d < n} Phi_d.
inline ZPoly cyclotomic_polynomial(unsigned n) {
    ZPoly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            num = exact_div_monic(std::move(num), cyclotomic_polynomial(d));
    return num;
}

inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly &b) {
    if (b.empty())
        throw DivisionByZero("polynomial division by zero");
    QPoly q;
    trim(a);
    if (a.size() < b.size())
        return {q, a};
    q.assign(a.size() - b.size() + 1, mpq_class(0));
    const mpq_class &lead = b.back();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (sgn(a[k]) == 0)
            continue;
        mpq_class t = a[k] / lead;
        q[k - (b.size() - 1)] = t;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[k - (b.size() - 1) + i] -= t * b[i];
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline QPoly mul(const QPoly &a, const QPoly &b) {
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline QPoly sub(QPoly a, const QPoly &b) {
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

} // namespace detail

class Field {
  public:
    enum class Kind { rational, cyclotomic };

    Field(Kind kind, unsigned conductor) : kind_(kind), conductor_(conductor) {
        if (conductor == 0)
            throw std::invalid_argument("field conductor must be positive");
        if (kind == Kind::rational && conductor != 1)
            throw std::invalid_argument("rational field takes no conductor");
        modulus_ = kind == Kind::rational ? detail::ZPoly{0, 1}
                                          : detail::cyclotomic_polynomial(conductor);
        const std::size_t deg = degree();
        // Precompute z^(deg + k) mod Phi_n for the overflow of a product.
        detail::ZPoly cur(modulus_.begin(), modulus_.end() - 1);
        for (auto &c : cur)
            c = -c;
        for (std::size_t k = 0; k + 1 < deg; ++k) {
            overflow_.push_back(cur);
            // multiply by z and reduce
            detail::ZPoly next(deg);
            const mpz_class top = cur[deg - 1];
            for (std::size_t i = deg - 1; i > 0; --i)
                next[i] = cur[i - 1];
            next[0] = 0;
            for (std::size_t i = 0; i < deg; ++i)
                next[i] -= top * modulus_[i];
            cur = std::move(next);
        }
    }

    Kind kind() const noexcept { return kind_; }
    unsigned conductor() const noexcept { return conductor_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    const detail::ZPoly &modulus() const noexcept { return modulus_; }
    const std::vector<detail::ZPoly> &overflow() const noexcept { return overflow_; }

    // Q, Q(zeta_1) and Q(zeta_2) share one representation.
    bool compatible(const Field &other) const noexcept {
        if (degree() == 1 && other.degree() == 1)
            return true;
        return kind_ == other.kind_ && conductor_ == other.conductor_;
    }

    std::string describe() const {
        if (kind_ == Kind::rational)
            return "Q";
        return "Q(zeta_" + std::to_string(conductor_) + ")";
    }

  private:
    Kind kind_;
    unsigned conductor_;
    detail::ZPoly modulus_;
    std::vector<detail::ZPoly> overflow_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(Field::Kind kind, unsigned n = 1) {
    if (kind == Field::Kind::cyclotomic && n == 0)
        throw std::invalid_argument("cyclotomic field requires n >= 1");
    return std::make_shared<const Field>(kind, n);
}

inline FieldPtr rational_field() {
    static const FieldPtr q = make_field(Field::Kind::rational, 1);
    return q;
}

inline FieldPtr cyclotomic_field(unsigned n) { return make_field(Field::Kind::cyclotomic, n); }

inline void require_compatible(const Field &a, const Field &b) {
    if (&a != &b && !a.compatible(b))
        throw FieldMismatch("mixed-field operation: " + a.describe() + " vs " + b.describe());
}

class Scalar {
  public:
    Scalar() : Scalar(rational_field()) {}

    explicit Scalar(FieldPtr field) : field_(std::move(field)), c_(field_->degree()) {}

    Scalar(FieldPtr field, long value) : Scalar(std::move(field)) { c_[0] = value; }

    Scalar(FieldPtr field, mpq_class value) : Scalar(std::move(field)) {
        value.canonicalize();
        c_[0] = std::move(value);
    }

    // Any-length coefficient vector in powers of z; reduced modulo Phi_n.
    static Scalar from_coefficients(FieldPtr field, std::vector<mpq_class> coeffs) {
        Scalar s(std::move(field));
        s.assign_reduced(std::move(coeffs));
        return s;
    }

    const FieldPtr &field() const noexcept { return field_; }
    const std::vector<mpq_class> &coefficients() const noexcept { return c_; }

    bool is_zero() const noexcept {
        for (const auto &c : c_)
            if (sgn(c) != 0)
                return false;
        return true;
    }

    bool is_rational() const noexcept {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0)
                return false;
        return true;
    }

    bool is_one() const noexcept { return is_rational() && c_[0] == 1; }

    const mpq_class &constant_term() const noexcept { return c_[0]; }

    Scalar operator-() const {
        Scalar r(*this);
        for (auto &c : r.c_)
            c = -c;
        return r;
    }

    Scalar &operator+=(const Scalar &o) {
        require_compatible(*field_, *o.field_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }

    Scalar &operator-=(const Scalar &o) {
        require_compatible(*field_, *o.field_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }

    Scalar &operator*=(const Scalar &o) {
        require_compatible(*field_, *o.field_);
        const std::size_t deg = c_.size();
        if (deg == 1) {
            c_[0] *= o.c_[0];
            return *this;
        }
        std::vector<mpq_class> prod(2 * deg - 1);
        for (std::size_t i = 0; i < deg; ++i) {
            if (sgn(c_[i]) == 0)
                continue;
            for (std::size_t j = 0; j < deg; ++j)
                if (sgn(o.c_[j]) != 0)
                    prod[i + j] += c_[i] * o.c_[j];
        }
        const auto &over = field_->overflow();
        for (std::size_t k = deg; k < prod.size(); ++k) {
            if (sgn(prod[k]) == 0)
                continue;
            const auto &row = over[k - deg];
            for (std::size_t i = 0; i < deg; ++i)
                if (row[i] != 0)
                    prod[i] += prod[k] * row[i];
        }
        prod.resize(deg);
        c_ = std::move(prod);
        return *this;
    }

    Scalar &operator/=(const Scalar &o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero())
            throw DivisionByZero("inverse of zero");
        if (c_.size() == 1) {
            Scalar r(field_);
            r.c_[0] = 1 / c_[0];
            return r;
        }
        // Extended Euclid against Phi_n: find s with s * a = 1 mod Phi_n.
        detail::QPoly r0(field_->modulus().begin(), field_->modulus().end());
        detail::QPoly r1(c_.begin(), c_.end());
        detail::trim(r1);
        detail::QPoly s0, s1{mpq_class(1)};
        while (detail::degree(r1) > 0) {
            auto [q, rem] = detail::divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            detail::QPoly s2 = detail::sub(s0, detail::mul(q, s1));
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty())
            throw std::logic_error("cyclotomic modulus is not coprime to element");
        const mpq_class c = r1[0];
        for (auto &x : s1)
            x /= c;
        Scalar result(field_);
        result.assign_reduced(std::move(s1));
        return result;
    }

    Scalar pow(unsigned long e) const {
        Scalar result(field_, 1), base(*this);
        while (e) {
            if (e & 1U)
                result *= base;
            e >>= 1U;
            if (e)
                base *= base;
        }
        return result;
    }

    friend bool operator==(const Scalar &a, const Scalar &b) {
        require_compatible(*a.field_, *b.field_);
        return a.c_ == b.c_;
    }

    // Total order on representations (not a field order); used for canonical sorting.
    std::strong_ordering canonical_compare(const Scalar &o) const {
        for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) {
            const int c = cmp(c_[i], o.c_[i]);
            if (c != 0)
                return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return c_.size() <=> o.c_.size();
    }

    // lcm of coefficient denominators: multiplying by it lands in Z[zeta].
    mpz_class denominator_lcm() const {
        mpz_class l = 1;
        for (const auto &c : c_)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        return l;
    }

    std::string to_string() const {
        if (c_.size() == 1)
            return c_[0].get_str();
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const mpq_class &c = c_[k];
            if (sgn(c) == 0)
                continue;
            const bool neg = sgn(c) < 0;
            const mpq_class mag = abs(c);
            if (!out.empty())
                out += neg ? "-" : "+";
            else if (neg)
                out += "-";
            if (k == 0) {
                out += mag.get_str();
                continue;
            }
            if (mag != 1)
                out += mag.get_str() + "*";
            out += "z";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

    static Scalar parse(const FieldPtr &field, std::string_view text);

  private:
    void assign_reduced(std::vector<mpq_class> coeffs) {
        const std::size_t deg = field_->degree();
        const auto &mod = field_->modulus();
        for (std::size_t k = coeffs.size(); k-- > deg;) {
            if (sgn(coeffs[k]) == 0)
                continue;
            const mpq_class t = coeffs[k];
            for (std::size_t i = 0; i <= deg; ++i)
                coeffs[k - deg + i] -= t * mod[i];
        }
        coeffs.resize(deg);
        c_ = std::move(coeffs);
    }

    FieldPtr field_;
    std::vector<mpq_class> c_;
};

// The class of z: a primitive n-th root of unity.
inline Scalar primitive_root(const FieldPtr &field) {
    if (field->kind() != Field::Kind::cyclotomic)
        throw std::invalid_argument("primitive_root requires a cyclotomic field");
    std::vector<mpq_class> z(2);
    z[1] = 1;
    return Scalar::from_coefficients(field, std::move(z));
}

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

class ScalarParser {
  public:
    ScalarParser(const FieldPtr &field, std::string_view text) : field_(field), s_(text) {}

    Scalar run() {
        if (field_->kind() == Field::Kind::rational)
            return rational_only();
        skip_ws();
        if (pos_ == s_.size())
            fail("empty scalar");
        std::vector<mpq_class> acc;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == s_.size())
                break;
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coef, power] = term();
            if (acc.size() <= power)
                acc.resize(power + 1);
            acc[power] += sign * coef;
        }
        return Scalar::from_coefficients(field_, std::move(acc));
    }

  private:
    Scalar rational_only() {
        std::size_t p = 0;
        if (p < s_.size() && s_[p] == '-')
            ++p;
        const std::size_t digits_start = p;
        while (p < s_.size() && is_digit(s_[p]))
            ++p;
        if (p == digits_start)
            fail("expected digits");
        if (p < s_.size() && s_[p] == '/') {
            ++p;
            const std::size_t den_start = p;
            while (p < s_.size() && is_digit(s_[p]))
                ++p;
            if (p == den_start)
                fail("expected denominator digits");
        }
        if (p != s_.size())
            fail("unexpected character");
        return Scalar(field_, make_rational(s_));
    }

    mpq_class make_rational(std::string_view text) {
        const std::string str(text);
        const auto slash = str.find('/');
        mpz_class num(str.substr(0, slash));
        mpz_class den = 1;
        if (slash != std::string::npos) {
            den = mpz_class(str.substr(slash + 1));
            if (den == 0)
                fail("zero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    std::pair<mpq_class, std::size_t> term() {
        mpq_class coef(1);
        bool have_coef = false;
        if (pos_ < s_.size() && is_digit(s_[pos_])) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && is_digit(s_[pos_]))
                ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                const std::size_t den_start = pos_;
                while (pos_ < s_.size() && is_digit(s_[pos_]))
                    ++pos_;
                if (pos_ == den_start)
                    fail("expected denominator digits");
            }
            coef = make_rational(s_.substr(start, pos_ - start));
            have_coef = true;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
            } else {
                return {coef, 0};
            }
        }
        if (pos_ >= s_.size() || s_[pos_] != 'z')
            fail(have_coef ? "expected 'z' after '*'" : "expected number or 'z'");
        ++pos_;
        skip_ws();
        std::size_t power = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && is_digit(s_[pos_]))
                ++pos_;
            if (pos_ == start)
                fail("expected exponent");
            power = std::stoul(std::string(s_.substr(start, pos_ - start)));
            // z^n = 1 keeps exponents bounded before reduction
            power %= field_->conductor();
        }
        return {coef, power};
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw ScalarParseError("cannot parse scalar \"" + std::string(s_) + "\" over " +
                               field_->describe() + ": " + what);
    }

    const FieldPtr &field_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Scalar Scalar::parse(const FieldPtr &field, std::string_view text) {
    return detail::ScalarParser(field, text).run();
}

inline std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

} // namespace fatpoints
