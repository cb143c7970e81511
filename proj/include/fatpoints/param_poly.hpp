#pragma once

// Dense bivariate polynomials in the parameters (a, b) over a Scalar field.
// Used for symbolic certificates where a general point is [a, b, 1].

#include "field.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace fatpoints {

class ParamPoly {
  public:
    ParamPoly() : ParamPoly(rational_field()) {}
    explicit ParamPoly(FieldPtr field) : field_(std::move(field)) {}
    ParamPoly(FieldPtr field, long value) : ParamPoly(Scalar(std::move(field), value)) {}
    explicit ParamPoly(const Scalar &constant) : field_(constant.field()) {
        if (!constant.is_zero()) {
            c_.push_back(constant);
        }
    }

    static ParamPoly var_a(const FieldPtr &f) { return monomial(Scalar(f, 1), 1, 0); }
    static ParamPoly var_b(const FieldPtr &f) { return monomial(Scalar(f, 1), 0, 1); }

    static ParamPoly monomial(const Scalar &coef, std::size_t i, std::size_t j) {
        ParamPoly p(coef.field());
        if (coef.is_zero())
            return p;
        p.da_ = i;
        p.db_ = j;
        p.c_.assign((i + 1) * (j + 1), Scalar(coef.field()));
        p.at(i, j) = coef;
        return p;
    }

    const FieldPtr &field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }

    // -1 for the zero polynomial
    long degree_a() const noexcept { return is_zero() ? -1 : static_cast<long>(da_); }
    long degree_b() const noexcept { return is_zero() ? -1 : static_cast<long>(db_); }
    long total_degree() const {
        long best = -1;
        for (std::size_t i = 0; i <= da_ && !is_zero(); ++i)
            for (std::size_t j = 0; j <= db_; ++j)
                if (!at(i, j).is_zero())
                    best = std::max(best, static_cast<long>(i + j));
        return best;
    }

    Scalar coefficient(std::size_t i, std::size_t j) const {
        if (is_zero() || i > da_ || j > db_)
            return Scalar(field_);
        return at(i, j);
    }

    ParamPoly operator-() const {
        ParamPoly r(*this);
        for (auto &c : r.c_)
            c = -c;
        return r;
    }

    ParamPoly &operator+=(const ParamPoly &o) { return accumulate(o, false); }
    ParamPoly &operator-=(const ParamPoly &o) { return accumulate(o, true); }

    ParamPoly &operator*=(const ParamPoly &o) {
        *this = *this * o;
        return *this;
    }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly &b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly &b) { return a -= b; }

    friend ParamPoly operator*(const ParamPoly &a, const ParamPoly &b) {
        require_compatible(*a.field_, *b.field_);
        ParamPoly r(a.field_);
        if (a.is_zero() || b.is_zero())
            return r;
        r.da_ = a.da_ + b.da_;
        r.db_ = a.db_ + b.db_;
        r.c_.assign((r.da_ + 1) * (r.db_ + 1), Scalar(a.field_));
        for (std::size_t i = 0; i <= a.da_; ++i)
            for (std::size_t j = 0; j <= a.db_; ++j) {
                const Scalar &x = a.at(i, j);
                if (x.is_zero())
                    continue;
                for (std::size_t k = 0; k <= b.da_; ++k)
                    for (std::size_t l = 0; l <= b.db_; ++l) {
                        const Scalar &y = b.at(k, l);
                        if (!y.is_zero())
                            r.at(i + k, j + l) += x * y;
                    }
            }
        r.normalize();
        return r;
    }

    friend ParamPoly operator*(ParamPoly a, const Scalar &s) {
        for (auto &c : a.c_)
            c *= s;
        a.normalize();
        return a;
    }

    friend bool operator==(const ParamPoly &a, const ParamPoly &b) { return (a - b).is_zero(); }

    Scalar evaluate(const Scalar &a, const Scalar &b) const {
        Scalar result(field_);
        for (std::size_t i = da_ + 1; i-- > 0 && !is_zero();) {
            Scalar inner(field_);
            for (std::size_t j = db_ + 1; j-- > 0;)
                inner = inner * b + at(i, j);
            result = result * a + inner;
        }
        return result;
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = 0; i <= da_; ++i)
            for (std::size_t j = 0; j <= db_; ++j) {
                const Scalar &c = at(i, j);
                if (c.is_zero())
                    continue;
                if (!out.empty())
                    out += " + ";
                out += "(" + c.to_string() + ")";
                if (i)
                    out += "*a^" + std::to_string(i);
                if (j)
                    out += "*b^" + std::to_string(j);
            }
        return out;
    }

  private:
    Scalar &at(std::size_t i, std::size_t j) { return c_[i * (db_ + 1) + j]; }
    const Scalar &at(std::size_t i, std::size_t j) const { return c_[i * (db_ + 1) + j]; }

    ParamPoly &accumulate(const ParamPoly &o, bool subtract) {
        require_compatible(*field_, *o.field_);
        if (o.is_zero())
            return *this;
        if (is_zero()) {
            *this = subtract ? -o : o;
            return *this;
        }
        if (o.da_ > da_ || o.db_ > db_)
            reshape(std::max(da_, o.da_), std::max(db_, o.db_));
        for (std::size_t i = 0; i <= o.da_; ++i)
            for (std::size_t j = 0; j <= o.db_; ++j) {
                if (subtract)
                    at(i, j) -= o.at(i, j);
                else
                    at(i, j) += o.at(i, j);
            }
        normalize();
        return *this;
    }

    void reshape(std::size_t da, std::size_t db) {
        std::vector<Scalar> next((da + 1) * (db + 1), Scalar(field_));
        for (std::size_t i = 0; i <= std::min(da, da_); ++i)
            for (std::size_t j = 0; j <= std::min(db, db_); ++j)
                next[i * (db + 1) + j] = std::move(at(i, j));
        da_ = da;
        db_ = db;
        c_ = std::move(next);
    }

    // Shrink the bounding box to the true degrees; zero becomes the empty vector.
    void normalize() {
        if (c_.empty())
            return;
        long max_i = -1, max_j = -1;
        for (std::size_t i = 0; i <= da_; ++i)
            for (std::size_t j = 0; j <= db_; ++j)
                if (!at(i, j).is_zero()) {
                    max_i = std::max(max_i, static_cast<long>(i));
                    max_j = std::max(max_j, static_cast<long>(j));
                }
        if (max_i < 0) {
            c_.clear();
            da_ = db_ = 0;
            return;
        }
        if (static_cast<std::size_t>(max_i) != da_ || static_cast<std::size_t>(max_j) != db_)
            reshape(static_cast<std::size_t>(max_i), static_cast<std::size_t>(max_j));
    }

    FieldPtr field_;
    std::size_t da_ = 0, db_ = 0;
    std::vector<Scalar> c_;
};

} // namespace fatpoints
