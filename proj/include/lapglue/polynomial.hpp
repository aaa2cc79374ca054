#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lapglue/bigint.hpp"
#include "lapglue/error.hpp"

namespace lapglue {

// Univariate polynomial with exact integer coefficients, ascending by power.
// Canonical form: no trailing zero coefficient; the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return IntPoly{Int(1)}; }
    static IntPoly constant(Int v) { return IntPoly{std::move(v)}; }

    // c * lambda^k
    static IntPoly monomial(Int c, int k) {
        std::vector<Int> v(static_cast<size_t>(k) + 1);
        v[k] = std::move(c);
        return IntPoly(std::move(v));
    }

    // (-lambda)^k = (-1)^k lambda^k
    static IntPoly neg_lambda_pow(int k) { return monomial(k % 2 ? Int(-1) : Int(1), k); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Int>& coefficients() const { return c_; }

    Int coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
        return c_[k];
    }
    const Int& leading() const { return c_.back(); } // precondition: !is_zero()

    bool operator==(const IntPoly&) const = default;

    IntPoly operator+(const IntPoly& rhs) const {
        std::vector<Int> out(std::max(c_.size(), rhs.c_.size()));
        for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
        return IntPoly(std::move(out));
    }

    IntPoly operator-(const IntPoly& rhs) const {
        std::vector<Int> out(std::max(c_.size(), rhs.c_.size()));
        for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) - rhs.coeff(static_cast<int>(i));
        return IntPoly(std::move(out));
    }

    IntPoly operator-() const {
        std::vector<Int> out(c_);
        for (auto& v : out) v = -v;
        return IntPoly(std::move(out));
    }

    IntPoly operator*(const IntPoly& rhs) const {
        if (is_zero() || rhs.is_zero()) return IntPoly{};
        std::vector<Int> out(c_.size() + rhs.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
        }
        return IntPoly(std::move(out));
    }

    IntPoly operator*(const Int& s) const {
        std::vector<Int> out(c_);
        for (auto& v : out) v *= s;
        return IntPoly(std::move(out));
    }

    // lambda^k * p
    IntPoly shifted_up(int k) const {
        if (is_zero()) return IntPoly{};
        std::vector<Int> out(c_.size() + k);
        for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
        return IntPoly(std::move(out));
    }

    Int evaluate(const Int& x) const {
        Int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double evaluate(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s = "[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].str();
        }
        return s + "]";
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

struct PolyDivResult {
    IntPoly quotient;
    IntPoly remainder;
};

// Long division over the integers. Every leading-term quotient must divide
// exactly (always true here: charpoly divisors have leading coefficient +-1);
// a non-exact step throws inexact_division.
inline PolyDivResult divided_by(const IntPoly& num, const IntPoly& den) {
    require(!den.is_zero(), errc::inexact_division, "division by zero polynomial");
    IntPoly r = num;
    std::vector<Int> q(r.degree() >= den.degree() ? r.degree() - den.degree() + 1 : 0);
    while (!r.is_zero() && r.degree() >= den.degree()) {
        const int shift = r.degree() - den.degree();
        require(r.leading() % den.leading() == 0, errc::inexact_division,
                "leading coefficient does not divide exactly");
        Int f = r.leading() / den.leading();
        q[shift] = f;
        r = r - (den * f).shifted_up(shift);
    }
    return {IntPoly(std::move(q)), std::move(r)};
}

} // namespace lapglue
