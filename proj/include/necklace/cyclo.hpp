#pragma once

/**
 * @file cyclo.hpp
 * @brief Elements of Q(zeta_p) for a prime p.
 *
 * Stored in the power basis 1, z, ..., z^{p-2} of Q[x]/Phi_p(x). Products are
 * computed modulo x^p - 1 first (a cyclic convolution of length p) and the
 * z^{p-1} coordinate is then eliminated with z^{p-1} = -(1 + z + ... + z^{p-2}).
 * Every value is fully reduced, so equality is coordinatewise.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "necklace/digits.hpp"
#include "necklace/exact.hpp"

namespace necklace {

class CycloElem {
  public:
    /// Zero of Q(zeta_p).
    explicit CycloElem(std::uint64_t p) : p_(p), coords_(p >= 2 ? p - 1 : 0) {
        if (!is_prime(p)) throw InputError("cyclotomic order must be prime, got " + std::to_string(p));
    }

    CycloElem(std::uint64_t p, std::vector<Rational> coords) : CycloElem(p) {
        if (coords.size() != p - 1) {
            throw InputError("expected " + std::to_string(p - 1) + " coordinates for Q(zeta_" + std::to_string(p) + ")");
        }
        coords_ = std::move(coords);
    }

    static CycloElem constant(std::uint64_t p, const Rational& c) {
        CycloElem out(p);
        out.coords_[0] = c;
        return out;
    }

    static CycloElem one(std::uint64_t p) { return constant(p, 1); }

    /// zeta_p^k for any integer k.
    static CycloElem zeta_power(std::uint64_t p, std::int64_t k) {
        CycloElem out(p);
        std::int64_t r = k % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        out.add_power(static_cast<std::size_t>(r), Rational(1));
        return out;
    }

    static CycloElem zeta(std::uint64_t p) { return zeta_power(p, 1); }

    std::uint64_t prime() const { return p_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_) {
            if (c != 0) return false;
        }
        return true;
    }

    /// True when the element lies in Q; its value is then coords()[0].
    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i) {
            if (coords_[i] != 0) return false;
        }
        return true;
    }

    bool operator==(const CycloElem& o) const { return p_ == o.p_ && coords_ == o.coords_; }

    CycloElem& operator+=(const CycloElem& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }

    CycloElem& operator-=(const CycloElem& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }

    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }

    friend CycloElem operator-(CycloElem a) {
        for (auto& c : a.coords_) c = -c;
        return a;
    }

    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        a.check_same(b);
        const std::size_t p = a.p_;
        std::vector<Rational> cyc(p);
        for (std::size_t i = 0; i + 1 < p; ++i) {
            if (a.coords_[i] == 0) continue;
            for (std::size_t j = 0; j + 1 < p; ++j) {
                if (b.coords_[j] == 0) continue;
                cyc[(i + j) % p] += a.coords_[i] * b.coords_[j];
            }
        }
        CycloElem out(a.p_);
        for (std::size_t k = 0; k < p; ++k) out.add_power(k, cyc[k]);
        return out;
    }

    CycloElem scaled(const Rational& s) const {
        CycloElem out = *this;
        for (auto& c : out.coords_) c *= s;
        return out;
    }

    /// "zeta:p[c0, c1, ...]"
    std::string to_string() const {
        std::string s = "zeta:" + std::to_string(p_) + "[";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ", ";
            s += coords_[i].get_str();
        }
        return s + "]";
    }

  private:
    /// Adds c * zeta^k for 0 <= k < p, reducing zeta^{p-1}.
    void add_power(std::size_t k, const Rational& c) {
        if (c == 0) return;
        if (k + 1 < p_) {
            coords_[k] += c;
        } else {
            for (auto& x : coords_) x -= c;
        }
    }

    void check_same(const CycloElem& o) const {
        if (p_ != o.p_) {
            throw InputError("cyclotomic prime mismatch: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
        }
    }

    std::uint64_t p_;
    std::vector<Rational> coords_;
};

/// [r]_{zeta_p} = 1 + zeta + ... + zeta^{r-1} for a residue 0 <= r < p.
inline CycloElem q_integer_at_residue(std::uint64_t residue, std::uint64_t p) {
    if (residue >= p) throw InputError("residue must be below the prime");
    CycloElem out(p);
    for (std::uint64_t k = 0; k < residue; ++k) out += CycloElem::zeta_power(p, static_cast<std::int64_t>(k));
    return out;
}

/// [m]_{zeta_p} from the base-p digits of m. Only m mod p, the lowest digit,
/// matters since [p]_{zeta_p} = 0.
inline CycloElem q_integer_at_root(const DigitVector& m, std::uint64_t p) {
    if (!is_prime(p)) throw InputError("q_integer_at_root needs a prime, got " + std::to_string(p));
    if (m.base() != p) throw InputError("digit base does not match the prime");
    return q_integer_at_residue(m[0], p);
}

}  // namespace necklace
