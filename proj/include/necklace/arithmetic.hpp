#pragma once

/**
 * @file arithmetic.hpp
 * @brief Balanced base-b expansions, Lucas's theorem, p-complementarity and
 * the coefficients of Q(t) = sum_d [C(d+n, n)]_{zeta_p} t^d.
 *
 * A balanced base-b expansion writes n as b^{k_{2m}} - b^{k_{2m-1}} + ... - b^{k_0}
 * with strictly increasing exponents and an even number of terms. It exists
 * iff every base-b digit of n is 0 or b-1, and is then unique: expand each
 * (b-1) b^k as b^{k+1} - b^k and cancel.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "necklace/cyclo.hpp"
#include "necklace/digits.hpp"
#include "necklace/errors.hpp"
#include "necklace/exact.hpp"
#include "necklace/series.hpp"

namespace necklace {

struct BalancedTerm {
    std::uint64_t exponent;
    int sign;  // +1 or -1

    bool operator==(const BalancedTerm&) const = default;
};

class BalancedExpansion {
  public:
    BalancedExpansion(std::uint64_t base, std::vector<BalancedTerm> terms) : base_(base), terms_(std::move(terms)) {}

    std::uint64_t base() const { return base_; }

    /// Terms by increasing exponent; signs alternate starting with -1.
    const std::vector<BalancedTerm>& terms() const { return terms_; }

    /// Coefficient b_k of base^k: -1, 0 or +1.
    int coefficient(std::uint64_t k) const {
        for (const auto& t : terms_) {
            if (t.exponent == k) return t.sign;
        }
        return 0;
    }

    BigInteger value() const {
        BigInteger v = 0;
        for (const auto& t : terms_) {
            BigInteger pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), base_, t.exponent);
            v += t.sign * pw;
        }
        return v;
    }

    /// "+2^4 -2^2 +2^1 -2^0", highest power first.
    std::string to_string() const {
        std::ostringstream os;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (it != terms_.rbegin()) os << ' ';
            os << (it->sign > 0 ? '+' : '-') << base_ << '^' << it->exponent;
        }
        return os.str();
    }

    bool operator==(const BalancedExpansion&) const = default;

  private:
    std::uint64_t base_;
    std::vector<BalancedTerm> terms_;
};

/// The balanced base-b expansion of n, or nullopt when some digit of n is
/// neither 0 nor b-1 (and for n = 0, which has no positive expansion).
inline std::optional<BalancedExpansion> balanced_expansion(const BigInteger& n, std::uint64_t base) {
    if (base < 2) throw InputError("balanced expansion base must be at least 2");
    if (n < 1) return std::nullopt;
    const DigitVector digits = to_digits(n, base);
    // coeff[k] collects +1 at k+1 and -1 at k for each digit b-1 at position k.
    std::vector<int> coeff(digits.size() + 1, 0);
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] == 0) continue;
        if (digits[k] != base - 1) return std::nullopt;
        coeff[k + 1] += 1;
        coeff[k] -= 1;
    }
    std::vector<BalancedTerm> terms;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        if (coeff[k] != 0) terms.push_back({k, coeff[k]});
    }
    return BalancedExpansion(base, std::move(terms));
}

/// Coefficient of base^k in the balanced expansion of n; DomainError when n
/// has none.
inline int balanced_coefficient(const BigInteger& n, std::uint64_t base, std::uint64_t k) {
    auto expansion = balanced_expansion(n, base);
    if (!expansion) {
        throw DomainError(n.get_str() + " has no balanced base-" + std::to_string(base) + " expansion");
    }
    return expansion->coefficient(k);
}

/// C(m, k) mod p from base-p digits via Lucas's theorem.
inline std::uint64_t binom_mod_p(const DigitVector& m, const DigitVector& k, std::uint64_t p) {
    if (!is_prime(p)) throw InputError("binom_mod_p needs a prime modulus, got " + std::to_string(p));
    if (m.base() != p || k.base() != p) throw InputError("digit vectors must be in base p");
    std::uint64_t acc = 1;
    const std::size_t len = std::max(m.size(), k.size());
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint64_t a = m[i];
        const std::uint64_t b = k[i];
        if (b > a) return 0;
        // digits are < p, so the small binomial fits easily
        acc = (acc * BigInteger(binomial(a, b) % static_cast<unsigned long>(p)).get_ui()) % p;
        if (acc == 0) return 0;
    }
    return acc;
}

/// True iff no position carries a nonzero base-p digit in both d and n.
inline bool p_complementary(const BigInteger& d, const BigInteger& n, std::uint64_t p) {
    const DigitVector dd = to_digits(d, p);
    const DigitVector nd = to_digits(n, p);
    const std::size_t len = std::min(dd.size(), nd.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (dd[i] != 0 && nd[i] != 0) return false;
    }
    return true;
}

/// Coefficient of t^d in Q(t) = sum_d [C(d+n, n)]_{zeta_p} t^d for n with a
/// balanced base-p expansion. The value is 1 iff d is p-complementary to n.
inline int q_series_coefficient(const BigInteger& d, const BigInteger& n, std::uint64_t p) {
    if (!is_prime(p)) throw InputError("q_series_coefficient needs a prime, got " + std::to_string(p));
    if (d < 0 || n < 0) throw InputError("q_series_coefficient needs nonnegative arguments");
    if (!balanced_expansion(n, p)) {
        throw DomainError(n.get_str() + " has no balanced base-" + std::to_string(p) + " expansion");
    }
    const std::uint64_t r = binom_mod_p(to_digits(d + n, p), to_digits(n, p), p);
    const CycloElem value = q_integer_at_residue(r, p);
    if (value.is_zero()) return 0;
    if (value == CycloElem::one(p)) return 1;
    throw VerificationError("[C(d+n, n)]_zeta is neither 0 nor 1 for balanced n");
}

struct QProductReport {
    bool pass = true;
    std::size_t order = 0;
    /// First degree where the sides differ, when !pass.
    std::optional<std::size_t> first_mismatch;
    std::vector<BigInteger> lhs;  // (1 - t) Q(t)
    std::vector<BigInteger> rhs;  // prod_k (1/(1 - t^{p^k}))^{b_k}
};

/// Checks (1 - t) Q(t) = prod_k (1/(1 - t^{p^k}))^{b_k} through t^D.
///
/// The left side evaluates [C(d+n, n)]_{zeta_p} from the exact binomial, with
/// no use of Lucas or complementarity; the right side only uses the balanced
/// coefficients b_k of n.
inline QProductReport q_product_check(const BigInteger& n, std::uint64_t p, std::size_t order) {
    if (!is_prime(p)) throw InputError("q_product_check needs a prime, got " + std::to_string(p));
    auto expansion = balanced_expansion(n, p);
    if (!expansion) throw DomainError(n.get_str() + " has no balanced base-" + std::to_string(p) + " expansion");

    std::vector<CycloElem> q;
    q.reserve(order + 1);
    for (std::size_t d = 0; d <= order; ++d) {
        const BigInteger c = binomial(BigInteger(n + static_cast<unsigned long>(d)), n.get_ui());
        q.push_back(q_integer_at_root(to_digits(c, p), p));
    }

    QProductReport report;
    report.order = order;
    for (std::size_t d = 0; d <= order; ++d) {
        CycloElem v = q[d];
        if (d > 0) v -= q[d - 1];
        if (!v.is_rational() || v.coords()[0].get_den() != 1) {
            report.pass = false;
            report.first_mismatch = report.first_mismatch.value_or(d);
            report.lhs.push_back(0);
            continue;
        }
        report.lhs.push_back(v.coords()[0].get_num());
    }

    EulerExponents<Rational> exps;
    for (const auto& term : expansion->terms()) {
        BigInteger pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, term.exponent);
        if (pw > static_cast<unsigned long>(order)) continue;
        exps.emplace(pw.get_ui(), Rational(term.sign));
    }
    const auto product = euler_product(exps, order, Rational(0));
    for (std::size_t d = 0; d <= order; ++d) {
        report.rhs.push_back(product[d].get_num());
        if (product[d].get_den() != 1 || report.rhs[d] != report.lhs[d]) {
            report.pass = false;
            if (!report.first_mismatch || *report.first_mismatch > d) report.first_mismatch = d;
        }
    }
    return report;
}

}  // namespace necklace
