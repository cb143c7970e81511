#pragma once

// Dense homogeneous forms in x, y, z.
//
// Coefficients are indexed by the degree-d monomials in graded-lex order with
// x > y > z: x^d, x^(d-1)y, x^(d-1)z, x^(d-2)y^2, ... This order is part of the
// output contract (nullspace vectors and report files use it).

#include "field.hpp"
#include "param_poly.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints {

struct Monomial {
    unsigned x = 0, y = 0, z = 0;
    unsigned degree() const noexcept { return x + y + z; }
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

enum class Variable { x, y, z };

inline std::size_t monomial_count(unsigned d) { return (std::size_t{d} + 1) * (d + 2) / 2; }

inline std::vector<Monomial> monomial_basis(unsigned d) {
    std::vector<Monomial> out;
    out.reserve(monomial_count(d));
    for (unsigned a = d + 1; a-- > 0;)
        for (unsigned b = d - a + 1; b-- > 0;)
            out.push_back({a, b, d - a - b});
    return out;
}

inline std::size_t monomial_index(const Monomial &m) {
    const std::size_t k = m.y + m.z; // d - x
    return k * (k + 1) / 2 + (k - m.y);
}

inline unsigned exponent(const Monomial &m, Variable v) {
    switch (v) {
    case Variable::x: return m.x;
    case Variable::y: return m.y;
    case Variable::z: return m.z;
    }
    return 0;
}

template <class C> class Form {
  public:
    Form(FieldPtr field, unsigned degree)
        : field_(std::move(field)), degree_(degree), coeffs_(monomial_count(degree), C(field_, 0)) {}

    Form(FieldPtr field, unsigned degree, std::vector<C> coeffs)
        : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != monomial_count(degree_))
            throw std::invalid_argument("form coefficient vector has wrong length");
    }

    // a*x + b*y + c*z
    static Form linear(const FieldPtr &field, C a, C b, C c) {
        return Form(field, 1, {std::move(a), std::move(b), std::move(c)});
    }

    static Form monomial(const FieldPtr &field, const Monomial &m, C coef) {
        Form f(field, m.degree());
        f.coeffs_[monomial_index(m)] = std::move(coef);
        return f;
    }

    const FieldPtr &field() const noexcept { return field_; }
    unsigned degree() const noexcept { return degree_; }
    const std::vector<C> &coefficients() const noexcept { return coeffs_; }
    const C &coefficient(const Monomial &m) const { return coeffs_.at(monomial_index(m)); }
    C &coefficient(const Monomial &m) { return coeffs_.at(monomial_index(m)); }

    bool is_zero() const {
        for (const auto &c : coeffs_)
            if (!c.is_zero())
                return false;
        return true;
    }

    // Formal partial derivative; a constant differentiates to the zero constant.
    Form derivative(Variable v) const {
        if (degree_ == 0)
            return Form(field_, 0);
        Form out(field_, degree_ - 1);
        const auto mons = monomial_basis(degree_);
        for (std::size_t i = 0; i < mons.size(); ++i) {
            const Monomial &m = mons[i];
            const unsigned e = exponent(m, v);
            if (e == 0 || coeffs_[i].is_zero())
                continue;
            Monomial lowered = m;
            switch (v) {
            case Variable::x: --lowered.x; break;
            case Variable::y: --lowered.y; break;
            case Variable::z: --lowered.z; break;
            }
            out.coeffs_[monomial_index(lowered)] = coeffs_[i] * C(field_, static_cast<long>(e));
        }
        return out;
    }

    Form &operator+=(const Form &o) {
        check_same_degree(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    Form &operator-=(const Form &o) {
        check_same_degree(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    friend Form operator+(Form a, const Form &b) { return a += b; }
    friend Form operator-(Form a, const Form &b) { return a -= b; }

    friend Form operator*(const Form &f, const Form &g) {
        Form out(f.field_, f.degree_ + g.degree_);
        const auto mf = monomial_basis(f.degree_);
        const auto mg = monomial_basis(g.degree_);
        for (std::size_t i = 0; i < mf.size(); ++i) {
            if (f.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < mg.size(); ++j) {
                if (g.coeffs_[j].is_zero())
                    continue;
                const Monomial m{mf[i].x + mg[j].x, mf[i].y + mg[j].y, mf[i].z + mg[j].z};
                out.coeffs_[monomial_index(m)] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return out;
    }

    Form scaled(const C &s) const {
        Form out(*this);
        for (auto &c : out.coeffs_)
            c = c * s;
        return out;
    }

    friend bool operator==(const Form &a, const Form &b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

  private:
    void check_same_degree(const Form &o) const {
        if (o.degree_ != degree_)
            throw std::invalid_argument("form degree mismatch");
    }

    FieldPtr field_;
    unsigned degree_;
    std::vector<C> coeffs_;
};

template <class C> using Point3 = std::array<C, 3>;

template <class C> C evaluate(const Form<C> &f, const Point3<C> &p) {
    const unsigned d = f.degree();
    std::array<std::vector<C>, 3> powers;
    for (std::size_t v = 0; v < 3; ++v) {
        powers[v].reserve(d + 1);
        powers[v].push_back(C(f.field(), 1));
        for (unsigned k = 1; k <= d; ++k)
            powers[v].push_back(powers[v].back() * p[v]);
    }
    C acc(f.field(), 0);
    const auto mons = monomial_basis(d);
    for (std::size_t i = 0; i < mons.size(); ++i) {
        const C &c = f.coefficients()[i];
        if (c.is_zero())
            continue;
        acc += c * powers[0][mons[i].x] * powers[1][mons[i].y] * powers[2][mons[i].z];
    }
    return acc;
}

template <class C> Form<C> product(std::span<const Form<C>> forms, const FieldPtr &field) {
    Form<C> acc(field, 0);
    acc.coefficient(Monomial{}) = C(field, 1);
    for (const auto &f : forms)
        acc = acc * f;
    return acc;
}

template <class C> Form<C> product(std::initializer_list<Form<C>> forms) {
    if (forms.size() == 0)
        throw std::invalid_argument("product of no forms needs a field");
    std::vector<Form<C>> v(forms);
    return product<C>(std::span<const Form<C>>(v), v.front().field());
}

// Form with Scalar coefficients lifted to constant parameter polynomials.
inline Form<ParamPoly> lift(const Form<Scalar> &f) {
    std::vector<ParamPoly> c;
    c.reserve(f.coefficients().size());
    for (const auto &s : f.coefficients())
        c.emplace_back(s);
    return Form<ParamPoly>(f.field(), f.degree(), std::move(c));
}

// Specialise every parameter-polynomial coefficient at (a, b).
inline Form<Scalar> specialize(const Form<ParamPoly> &f, const Scalar &a, const Scalar &b) {
    std::vector<Scalar> c;
    c.reserve(f.coefficients().size());
    for (const auto &p : f.coefficients())
        c.push_back(p.evaluate(a, b));
    return Form<Scalar>(f.field(), f.degree(), std::move(c));
}

inline std::string to_string(const Form<Scalar> &f) {
    std::string out;
    const auto mons = monomial_basis(f.degree());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        const Scalar &c = f.coefficients()[i];
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + c.to_string() + ")";
        const auto put = [&](char v, unsigned e) {
            if (e == 0)
                return;
            out += std::string("*") + v;
            if (e > 1)
                out += "^" + std::to_string(e);
        };
        put('x', mons[i].x);
        put('y', mons[i].y);
        put('z', mons[i].z);
    }
    return out.empty() ? "0" : out;
}

} // namespace fatpoints
