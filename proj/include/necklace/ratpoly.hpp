#pragma once

/**
 * @file ratpoly.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * coeffs()[i] is the coefficient of x^i. The zero polynomial has no
 * coefficients, and every constructor trims trailing zeros, so two equal
 * polynomials always have identical coefficient vectors.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "necklace/exact.hpp"

namespace necklace {

class RatPoly {
  public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit RatPoly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    static RatPoly constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

    /// c * x^k
    static RatPoly monomial(std::size_t k, const Rational& c = 1) {
        std::vector<Rational> cs(k + 1);
        cs[k] = c;
        return RatPoly(std::move(cs));
    }

    static RatPoly x() { return monomial(1); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    RatPoly& operator+=(const RatPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    RatPoly& operator-=(const RatPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }

    friend RatPoly operator-(RatPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return RatPoly(std::move(out));
    }

    RatPoly scaled(const Rational& s) const {
        if (s == 0) return {};
        RatPoly out = *this;
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

    /// Human-readable form, highest degree first: "1/2*x^2 - 1/2*x".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool unit = mag == 1;
            if (!unit || k == 0) os << mag.get_str();
            if (k > 0) {
                if (!unit) os << "*";
                os << "x";
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// [m]_x = 1 + x + ... + x^{m-1}; the zero polynomial for m = 0.
inline RatPoly q_integer(std::size_t m) {
    return RatPoly(std::vector<Rational>(m, Rational(1)));
}

}  // namespace necklace
