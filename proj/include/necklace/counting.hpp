#pragma once

/**
 * @file counting.hpp
 * @brief P_{d,n}(x), M_{d,n}(x) and their values.
 *
 * P_{d,n}(x) = [C(n+d, n)]_x - [C(n+d-1, n)]_x counts monic total degree d
 * polynomials in n variables, and the higher necklace polynomials M_{j,n}(x)
 * are the Euler exponents of sum_d P_{d,n}(x) t^d. Factorization commutes
 * with any ring map, so a value M_{d,n}(c) is obtained by specializing each
 * P_{e,n} at c first and factoring over the smaller ring. At roots of unity
 * (including -1 = zeta_2) only C(n+e, n) mod p is needed, which Lucas's
 * theorem supplies from digit lists.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "necklace/arithmetic.hpp"
#include "necklace/cyclo.hpp"
#include "necklace/errors.hpp"
#include "necklace/exact.hpp"
#include "necklace/ratpoly.hpp"
#include "necklace/ring.hpp"
#include "necklace/series.hpp"

namespace necklace {

struct CountingParams {
    std::uint64_t d = 0;  // total degree
    std::uint64_t n = 1;  // number of variables

    CountingParams(std::uint64_t degree, std::uint64_t variables) : d(degree), n(variables) {
        if (n < 1) throw InputError("number of variables must be at least 1");
    }
};

/// Caps that turn combinatorial blowups into a ResourceError.
struct Guardrails {
    /// Largest polynomial length C(n+d, n) materialized symbolically or used
    /// as an exponent at a general integer point.
    BigInteger degree_cap = 100000;
    /// Largest number of polynomials the finite field oracle may touch.
    BigInteger work_cap = 10000000;
};

/// C(n+d, n), the number of monomials of total degree at most d.
inline BigInteger monomial_count(std::uint64_t d, std::uint64_t n) { return binomial(n + d, n); }

/// C(n+d-1, n), the number of monomials of total degree below d.
inline BigInteger lower_monomial_count(std::uint64_t d, std::uint64_t n) {
    return d == 0 ? BigInteger(0) : binomial(n + d - 1, n);
}

namespace detail {

inline void check_degree(std::uint64_t d, std::uint64_t n, const Guardrails& guard) {
    const BigInteger len = monomial_count(d, n);
    if (len > guard.degree_cap) {
        throw ResourceError("P_{" + std::to_string(d) + "," + std::to_string(n) + "} needs polynomials of length C(n+d, n) = " +
                            len.get_str() + ", above the degree cap " + guard.degree_cap.get_str());
    }
}

inline void check_order(std::size_t order, const Guardrails& guard) {
    if (BigInteger(static_cast<unsigned long>(order)) > guard.degree_cap) {
        throw ResourceError("series order " + std::to_string(order) + " above the degree cap " + guard.degree_cap.get_str());
    }
}

/// C(n+e, n) mod p and C(n+e-1, n) mod p via Lucas.
inline std::pair<std::uint64_t, std::uint64_t> monomial_counts_mod(std::uint64_t e, std::uint64_t n, std::uint64_t p) {
    const DigitVector nd = to_digits(BigInteger(static_cast<unsigned long>(n)), p);
    const std::uint64_t hi = binom_mod_p(to_digits(BigInteger(static_cast<unsigned long>(n + e)), p), nd, p);
    const std::uint64_t lo =
        e == 0 ? 0 : binom_mod_p(to_digits(BigInteger(static_cast<unsigned long>(n + e - 1)), p), nd, p);
    return {hi, lo};
}

/// (c^m - 1)/(c - 1) for c != 1.
inline BigInteger q_integer_value(const BigInteger& c, std::uint64_t m) {
    BigInteger pw;
    mpz_pow_ui(pw.get_mpz_t(), c.get_mpz_t(), m);
    return BigInteger((pw - 1) / (c - 1));
}

}  // namespace detail

/// P_{d,n}(x) = x^{C(n+d-1,n)} + ... + x^{C(n+d,n)-1}.
inline RatPoly poly_count_polynomial(const CountingParams& params, const Guardrails& guard = {}) {
    detail::check_degree(params.d, params.n, guard);
    const std::size_t hi = monomial_count(params.d, params.n).get_ui();
    const std::size_t lo = lower_monomial_count(params.d, params.n).get_ui();
    std::vector<Rational> cs(hi);
    for (std::size_t k = lo; k < hi; ++k) cs[k] = 1;
    return RatPoly(std::move(cs));
}

/// P_{d,n}(c) at an integer. c in {-1, 0, 1} never touches big powers.
inline BigInteger poly_count_value(const CountingParams& params, const BigInteger& c, const Guardrails& guard = {}) {
    const std::uint64_t d = params.d;
    const std::uint64_t n = params.n;
    if (c == 1) return BigInteger(monomial_count(d, n) - lower_monomial_count(d, n));
    if (c == -1) {
        // [m]_{-1} = m mod 2
        auto [hi, lo] = detail::monomial_counts_mod(d, n, 2);
        return BigInteger(static_cast<long>(hi) - static_cast<long>(lo));
    }
    if (c == 0) {
        // [m]_0 = 1 for m >= 1; C(n+d, n) >= 1 always, C(n+d-1, n) >= 1 iff d >= 1
        return d == 0 ? 1 : 0;
    }
    detail::check_degree(d, n, guard);
    const std::uint64_t hi = monomial_count(d, n).get_ui();
    const std::uint64_t lo = lower_monomial_count(d, n).get_ui();
    return BigInteger(detail::q_integer_value(c, hi) - detail::q_integer_value(c, lo));
}

/// P_{d,n}(zeta_p), from C(n+d, n) mod p and C(n+d-1, n) mod p only.
inline CycloElem poly_count_at_root(const CountingParams& params, std::uint64_t p) {
    if (!is_prime(p)) throw InputError("root of unity order must be prime, got " + std::to_string(p));
    auto [hi, lo] = detail::monomial_counts_mod(params.d, params.n, p);
    return q_integer_at_residue(hi, p) - q_integer_at_residue(lo, p);
}

/// M_{1,n}, ..., M_{D,n} in one carrier, from a single factorization pass.
template <BinomialRing R>
class NecklaceTable {
  public:
    NecklaceTable(std::uint64_t n, std::vector<R> values, std::string provenance)
        : n_(n), values_(std::move(values)), provenance_(std::move(provenance)) {}

    std::uint64_t n() const { return n_; }
    std::size_t max_degree() const { return values_.size(); }
    const std::string& provenance() const { return provenance_; }

    /// M_{d,n} for 1 <= d <= max_degree().
    const R& at(std::size_t d) const {
        if (d < 1 || d > values_.size()) {
            throw InputError("degree " + std::to_string(d) + " outside table range 1.." + std::to_string(values_.size()));
        }
        return values_[d - 1];
    }

    const std::vector<R>& values() const { return values_; }

  private:
    std::uint64_t n_;
    std::vector<R> values_;
    std::string provenance_;
};

namespace detail {

template <BinomialRing R>
NecklaceTable<R> factor_counts(std::uint64_t n, std::vector<R> counts, std::string provenance) {
    const std::size_t order = counts.size() - 1;
    auto exps = euler_factorize(TruncatedSeries<R>(std::move(counts)), order);
    std::vector<R> values;
    values.reserve(order);
    for (auto& [j, bj] : exps) values.push_back(std::move(bj));
    return NecklaceTable<R>(n, std::move(values), std::move(provenance));
}

}  // namespace detail

/// sum_{e <= D} P_{e,n}(x) t^e over Q[x].
inline TruncatedSeries<RatPoly> poly_count_series(std::uint64_t n, std::size_t order, const Guardrails& guard = {}) {
    detail::check_degree(order, n, guard);
    std::vector<RatPoly> counts;
    counts.reserve(order + 1);
    for (std::size_t e = 0; e <= order; ++e) counts.push_back(poly_count_polynomial({e, n}, guard));
    return TruncatedSeries<RatPoly>(std::move(counts));
}

inline NecklaceTable<RatPoly> necklace_table_symbolic(std::uint64_t n, std::size_t max_degree, const Guardrails& guard = {}) {
    if (n < 1) throw InputError("number of variables must be at least 1");
    auto series = poly_count_series(n, max_degree, guard);
    return detail::factor_counts(n, std::vector<RatPoly>(series.coeffs()), "symbolic");
}

/// M_{1..D, n}(c) over Q by specialize-then-factor.
inline NecklaceTable<Rational> necklace_table_at(std::uint64_t n, std::size_t max_degree, const BigInteger& c,
                                                 const Guardrails& guard = {}) {
    if (n < 1) throw InputError("number of variables must be at least 1");
    detail::check_order(max_degree, guard);
    std::vector<Rational> counts;
    counts.reserve(max_degree + 1);
    for (std::size_t e = 0; e <= max_degree; ++e) counts.emplace_back(poly_count_value({e, n}, c, guard));
    return detail::factor_counts(n, std::move(counts), "specialized-at:" + c.get_str());
}

/// M_{1..D, n}(zeta_p) over Q(zeta_p) by specialize-then-factor.
inline NecklaceTable<CycloElem> necklace_table_cyclo(std::uint64_t n, std::size_t max_degree, std::uint64_t p,
                                                     const Guardrails& guard = {}) {
    if (n < 1) throw InputError("number of variables must be at least 1");
    detail::check_order(max_degree, guard);
    std::vector<CycloElem> counts;
    counts.reserve(max_degree + 1);
    for (std::size_t e = 0; e <= max_degree; ++e) counts.push_back(poly_count_at_root({e, n}, p));
    return detail::factor_counts(n, std::move(counts), "specialized-at:zeta:" + std::to_string(p));
}

/// M_{d,n}(x). M_{0,n} is taken to be the constant 1 (the empty product).
inline RatPoly necklace_polynomial(const CountingParams& params, const Guardrails& guard = {}) {
    if (params.d == 0) return RatPoly::constant(1);
    return necklace_table_symbolic(params.n, params.d, guard).at(params.d);
}

inline Rational necklace_value(const CountingParams& params, const BigInteger& at, const Guardrails& guard = {}) {
    if (params.d == 0) return 1;
    return necklace_table_at(params.n, params.d, at, guard).at(params.d);
}

inline CycloElem necklace_value_cyclo(const CountingParams& params, std::uint64_t p, const Guardrails& guard = {}) {
    if (params.d == 0) return CycloElem::one(p);
    return necklace_table_cyclo(params.n, params.d, p, guard).at(params.d);
}

struct IdentityReport {
    bool pass = true;
    std::uint64_t n = 1;
    std::size_t order = 0;
    std::optional<std::size_t> first_mismatch;
    /// Both sides at the first mismatch, when there is one.
    std::optional<std::pair<RatPoly, RatPoly>> mismatch;
};

/// sum_{d <= D} P_{d,n}(x) t^d == prod_{j <= D} (1/(1 - t^j))^{M_{j,n}(x)},
/// coefficientwise in Q[x].
inline IdentityReport identity_check(std::uint64_t n, std::size_t order, const Guardrails& guard = {}) {
    const auto lhs = poly_count_series(n, order, guard);
    const auto table = detail::factor_counts(n, std::vector<RatPoly>(lhs.coeffs()), "symbolic");
    EulerExponents<RatPoly> exps;
    for (std::size_t j = 1; j <= order; ++j) exps.emplace(j, table.at(j));
    const auto rhs = euler_product(exps, order, RatPoly::constant(1));

    IdentityReport report;
    report.n = n;
    report.order = order;
    for (std::size_t d = 0; d <= order; ++d) {
        if (!(lhs[d] == rhs[d])) {
            report.pass = false;
            report.first_mismatch = d;
            report.mismatch.emplace(lhs[d], rhs[d]);
            break;
        }
    }
    return report;
}

}  // namespace necklace
