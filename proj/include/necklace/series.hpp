#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series over a binomial ring and Euler products.
 *
 * Every unital series a(t) = 1 + a_1 t + a_2 t^2 + ... over a binomial ring R
 * factors uniquely as
 *
 *     a(t) = prod_{j >= 1} (1 / (1 - t^j))^{b_j},
 *
 * where (1/(1 - t^j))^b = sum_m multichoose(b, m) t^{jm}. euler_factorize()
 * recovers b_1..b_D by peeling one factor at a time: after the factors for
 * i < j have been divided out, the coefficient of t^j is exactly b_j.
 * The partition-sum form a_d = sum_{lambda |- d} prod_j multichoose(b_j, m_j)
 * is provided by enumerate_partitions()/partition_weight() and serves as an
 * independent check in the tests.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "necklace/errors.hpp"
#include "necklace/ring.hpp"

namespace necklace {

template <BinomialRing R>
class TruncatedSeries {
  public:
    /// Coefficients of t^0 .. t^D; must be non-empty.
    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw InputError("a truncated series needs at least the constant coefficient");
    }

    /// The constant series 1 truncated at order D.
    static TruncatedSeries unit(const R& like, std::size_t order) {
        std::vector<R> cs(order + 1, ring_zero(like));
        cs[0] = ring_one(like);
        return TruncatedSeries(std::move(cs));
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& operator[](std::size_t i) const { return coeffs_.at(i); }

    TruncatedSeries truncated(std::size_t order) const {
        if (order > this->order()) throw InputError("cannot extend a truncated series");
        return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

  private:
    std::vector<R> coeffs_;
};

/// Cauchy product, truncated to the smaller of the two orders.
template <BinomialRing R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<R> out(order + 1, ring_zero(a[0]));
    for (std::size_t i = 0; i <= order; ++i) {
        if (ring_is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (ring_is_zero(b[j])) continue;
            out[i + j] = R(out[i + j] + R(a[i] * b[j]));
        }
    }
    return TruncatedSeries<R>(std::move(out));
}

/// (1 / (1 - t^j))^a = sum_m multichoose(a, m) t^{jm}, truncated at order D.
template <BinomialRing R>
TruncatedSeries<R> geometric_pow(std::size_t j, const R& a, std::size_t order) {
    if (j == 0) throw InputError("geometric_pow needs j >= 1");
    std::vector<R> cs(order + 1, ring_zero(a));
    // multichoose(a, m) = multichoose(a, m-1) * (a + m - 1) / m
    R term = ring_one(a);
    for (std::size_t m = 0; m * j <= order; ++m) {
        if (m > 0) {
            term = R(term * R(a + ring_constant(a, Rational(static_cast<unsigned long>(m - 1)))));
            term = ring_traits<R>::scale(term, Rational(1) / Rational(static_cast<unsigned long>(m)));
        }
        cs[m * j] = term;
        if (ring_is_zero(term)) break;
    }
    return TruncatedSeries<R>(std::move(cs));
}

namespace detail {

/// s * (1/(1 - t^j))^a without materializing the dense factor.
template <BinomialRing R>
TruncatedSeries<R> mul_geometric(const TruncatedSeries<R>& s, std::size_t j, const R& a) {
    const std::size_t order = s.order();
    if (ring_is_zero(a)) return s;
    auto g = geometric_pow(j, a, order);
    std::vector<R> out(order + 1, ring_zero(s[0]));
    for (std::size_t m = 0; m * j <= order; ++m) {
        const R& gm = g[m * j];
        if (ring_is_zero(gm)) continue;
        for (std::size_t k = 0; k + m * j <= order; ++k) {
            if (ring_is_zero(s[k])) continue;
            out[k + m * j] = R(out[k + m * j] + R(gm * s[k]));
        }
    }
    return TruncatedSeries<R>(std::move(out));
}

}  // namespace detail

/// Exponents b_j of an Euler product, keyed by j >= 1. Absent keys are zero.
template <BinomialRing R>
using EulerExponents = std::map<std::size_t, R>;

/// prod_{j=1}^{D} (1/(1 - t^j))^{b_j}, truncated at order D. `like` fixes the
/// carrier (only its prime matters for CycloElem).
template <BinomialRing R>
TruncatedSeries<R> euler_product(const EulerExponents<R>& b, std::size_t order, const R& like) {
    auto acc = TruncatedSeries<R>::unit(like, order);
    for (const auto& [j, bj] : b) {
        if (j == 0) throw InputError("Euler product exponents are indexed from j = 1");
        if (j > order) break;
        acc = detail::mul_geometric(acc, j, bj);
    }
    return acc;
}

/// The unique b_1..b_D with euler_product(b, D) = a through order D.
template <BinomialRing R>
EulerExponents<R> euler_factorize(const TruncatedSeries<R>& a, std::size_t order) {
    if (a.order() < order) {
        throw InputError("series known to order " + std::to_string(a.order()) + ", factorization asked for order " +
                         std::to_string(order));
    }
    if (!(a[0] == ring_one(a[0]))) throw InputError("Euler factorization needs constant coefficient 1");
    auto work = a.truncated(order);
    EulerExponents<R> b;
    for (std::size_t j = 1; j <= order; ++j) {
        R bj = work[j];
        work = detail::mul_geometric(work, j, R(-bj));
        b.emplace(j, std::move(bj));
    }
    return b;
}

/// An integer partition as part-size multiplicities j -> m_j (all m_j >= 1).
struct Partition {
    std::map<std::uint64_t, std::uint64_t> multiplicities;

    std::uint64_t size() const {
        std::uint64_t d = 0;
        for (const auto& [j, m] : multiplicities) d += j * m;
        return d;
    }

    /// Parts in non-increasing order.
    std::vector<std::uint64_t> parts() const {
        std::vector<std::uint64_t> out;
        for (auto it = multiplicities.rbegin(); it != multiplicities.rend(); ++it) {
            out.insert(out.end(), it->second, it->first);
        }
        return out;
    }

    bool operator==(const Partition&) const = default;
};

/// All partitions of d, largest first part first, then lexicographically
/// decreasing: 4, 3+1, 2+2, 2+1+1, 1+1+1+1.
inline std::vector<Partition> enumerate_partitions(std::uint64_t d) {
    std::vector<Partition> out;
    std::vector<std::uint64_t> parts;
    // Depth-first over non-increasing part sequences.
    auto rec = [&](auto&& self, std::uint64_t remaining, std::uint64_t max_part) -> void {
        if (remaining == 0) {
            Partition p;
            for (auto part : parts) ++p.multiplicities[part];
            out.push_back(std::move(p));
            return;
        }
        for (std::uint64_t part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

/// b_lambda = prod_j multichoose(b_j, m_j(lambda)).
template <BinomialRing R>
R partition_weight(const EulerExponents<R>& b, const Partition& lambda, const R& like) {
    R acc = ring_one(like);
    for (const auto& [j, m] : lambda.multiplicities) {
        auto it = b.find(j);
        if (it == b.end()) throw InputError("no exponent b_" + std::to_string(j) + " for partition part " + std::to_string(j));
        acc = R(acc * multichoose(it->second, m));
    }
    return acc;
}

}  // namespace necklace
