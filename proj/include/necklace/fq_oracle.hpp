#pragma once

/**
 * @file fq_oracle.hpp
 * @brief Brute-force enumeration over small prime fields.
 *
 * Monic means "leading coefficient 1" under graded lex order (total degree
 * first, then lex with x1 > x2 > ... > xn). The order is multiplicative, so
 * products of monics are monic and every K^x-orbit of a total degree d
 * polynomial has exactly one monic representative.
 *
 * Irreducibles are counted with a product sieve: every reducible monic of
 * degree d is f*g with f, g monic and 1 <= deg f <= d/2, so
 * |Irr| = |Poly| - |{f*g}|. The product set is deduplicated exactly.
 */

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "necklace/counting.hpp"
#include "necklace/errors.hpp"
#include "necklace/exact.hpp"

namespace necklace {

class PrimeField {
  public:
    explicit PrimeField(std::uint32_t q) : q_(q) {
        if (q != 2 && q != 3 && q != 5 && q != 7) {
            throw InputError("prime field order must be one of 2, 3, 5, 7; got " + std::to_string(q));
        }
        inv_.assign(q, 0);
        for (std::uint32_t a = 1; a < q; ++a) {
            for (std::uint32_t b = 1; b < q; ++b) {
                if (mul(a, b) == 1) inv_[a] = b;
            }
        }
    }

    std::uint32_t order() const { return q_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % q_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + q_ - b) % q_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % q_; }
    std::uint32_t neg(std::uint32_t a) const { return (q_ - a) % q_; }

    std::uint32_t inv(std::uint32_t a) const {
        if (a % q_ == 0) throw InputError("zero has no inverse");
        return inv_[a % q_];
    }

    bool operator==(const PrimeField& o) const { return q_ == o.q_; }

  private:
    std::uint32_t q_;
    std::vector<std::uint32_t> inv_;
};

struct Monomial {
    std::vector<std::uint32_t> exponents;

    std::uint32_t total_degree() const {
        std::uint32_t s = 0;
        for (auto e : exponents) s += e;
        return s;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.exponents.size() != b.exponents.size()) throw InputError("monomials in different variable counts");
        Monomial out = a;
        for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
        return out;
    }

    bool operator==(const Monomial&) const = default;
};

/// Graded lex: true when a > b.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(), a.exponents.end());
}

/// All monomials in n variables of total degree <= d, graded lex descending.
inline std::vector<Monomial> monomials_up_to(std::uint32_t d, std::uint32_t n) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(n, 0);
    for (std::uint32_t deg = d + 1; deg-- > 0;) {
        // Lex-descending exponent vectors with sum deg.
        auto rec = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
            if (i + 1 == n) {
                e[i] = remaining;
                out.push_back({e});
                return;
            }
            for (std::uint32_t k = remaining + 1; k-- > 0;) {
                e[i] = k;
                self(self, i + 1, remaining - k);
            }
        };
        rec(rec, 0, deg);
    }
    return out;
}

/// Multivariate polynomial over F_q with terms in graded lex descending
/// order and no zero coefficients.
class FqMPoly {
  public:
    using Term = std::pair<Monomial, std::uint32_t>;

    FqMPoly(std::uint32_t n, const PrimeField& field) : n_(n), q_(field.order()) {}

    FqMPoly(std::uint32_t n, const PrimeField& field, std::vector<Term> terms) : FqMPoly(n, field) {
        for (auto& [m, c] : terms) {
            if (m.exponents.size() != n) throw InputError("monomial has the wrong number of variables");
            c %= q_;
        }
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
        for (auto& t : terms) {
            if (!terms_.empty() && terms_.back().first == t.first) {
                terms_.back().second = (terms_.back().second + t.second) % q_;
                if (terms_.back().second == 0) terms_.pop_back();
            } else if (t.second != 0) {
                terms_.push_back(std::move(t));
            }
        }
    }

    static FqMPoly one(std::uint32_t n, const PrimeField& field) {
        return FqMPoly(n, field, {{Monomial{std::vector<std::uint32_t>(n, 0)}, 1}});
    }

    std::uint32_t variables() const { return n_; }
    std::uint32_t field_order() const { return q_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monic() const { return !terms_.empty() && terms_.front().second == 1; }

    std::uint32_t total_degree() const {
        if (terms_.empty()) throw InputError("the zero polynomial has no degree");
        return terms_.front().first.total_degree();
    }

    bool operator==(const FqMPoly&) const = default;

    /// Canonical text: "c*x1^e1x2^e2...xn^en" per term, joined by '+', in
    /// graded lex descending order. Exponents are always written, zeros too.
    std::string serialize() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t t = 0; t < terms_.size(); ++t) {
            if (t) s += '+';
            s += std::to_string(terms_[t].second) + "*";
            const auto& e = terms_[t].first.exponents;
            for (std::size_t i = 0; i < e.size(); ++i) s += "x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
        }
        return s;
    }

  private:
    std::uint32_t n_;
    std::uint32_t q_;
    std::vector<Term> terms_;
};

inline FqMPoly mpoly_mul(const FqMPoly& f, const FqMPoly& g) {
    if (f.variables() != g.variables() || f.field_order() != g.field_order()) {
        throw InputError("mpoly_mul: operands live in different polynomial rings");
    }
    const PrimeField field(f.field_order());
    std::vector<FqMPoly::Term> raw;
    raw.reserve(f.terms().size() * g.terms().size());
    for (const auto& [ma, ca] : f.terms()) {
        for (const auto& [mb, cb] : g.terms()) raw.emplace_back(ma * mb, field.mul(ca, cb));
    }
    return FqMPoly(f.variables(), field, std::move(raw));
}

namespace detail {

/// Dense coefficient vectors over monomials_up_to(d, n), used by the sieve.
class DenseBasis {
  public:
    DenseBasis(std::uint32_t d, std::uint32_t n) : d_(d), n_(n), monomials_(monomials_up_to(d, n)) {
        for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i].exponents, i);
        top_count_ = 0;
        while (top_count_ < monomials_.size() && monomials_[top_count_].total_degree() == d) ++top_count_;
    }

    std::uint32_t degree() const { return d_; }
    std::size_t size() const { return monomials_.size(); }
    /// Number of monomials of total degree exactly d (they come first).
    std::size_t top_count() const { return top_count_; }
    const Monomial& monomial(std::size_t i) const { return monomials_[i]; }

    std::size_t index_of(const Monomial& m) const { return index_.at(m.exponents); }

    FqMPoly to_poly(const std::vector<std::uint8_t>& coeffs, const PrimeField& field) const {
        std::vector<FqMPoly::Term> terms;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] != 0) terms.emplace_back(monomials_[i], coeffs[i]);
        }
        return FqMPoly(n_, field, std::move(terms));
    }

    /// Visits every monic of total degree exactly d as a dense vector, in
    /// order of decreasing leading monomial, then odometer order on the rest.
    void for_each_monic(std::uint32_t q, const std::function<void(const std::vector<std::uint8_t>&)>& visit) const {
        std::vector<std::uint8_t> c(monomials_.size(), 0);
        for (std::size_t lead = 0; lead < top_count_; ++lead) {
            std::fill(c.begin(), c.end(), 0);
            c[lead] = 1;
            bool wrapped = false;
            while (!wrapped) {
                visit(c);
                wrapped = true;
                for (std::size_t i = c.size(); i > lead + 1;) {
                    --i;
                    if (++c[i] < q) {
                        wrapped = false;
                        break;
                    }
                    c[i] = 0;
                }
            }
        }
    }

  private:
    std::uint32_t d_;
    std::uint32_t n_;
    std::vector<Monomial> monomials_;
    std::map<std::vector<std::uint32_t>, std::size_t> index_;
    std::size_t top_count_ = 0;
};

inline void check_work(const BigInteger& predicted, const Guardrails& guard, const std::string& what) {
    if (predicted > guard.work_cap) {
        throw ResourceError(what + " would touch " + predicted.get_str() + " polynomials, above the work cap " +
                            guard.work_cap.get_str());
    }
}

}  // namespace detail

/// Streams every monic polynomial of total degree exactly d in n variables
/// over the field, each once, in a fixed order. Returns the count.
inline std::uint64_t enumerate_monic(std::uint32_t d, std::uint32_t n, const PrimeField& field,
                                     const std::function<void(const FqMPoly&)>& visit, const Guardrails& guard = {}) {
    if (n < 1) throw InputError("number of variables must be at least 1");
    detail::check_work(poly_count_value({d, n}, field.order(), guard), guard, "enumerate_monic");
    const detail::DenseBasis basis(d, n);
    std::uint64_t count = 0;
    basis.for_each_monic(field.order(), [&](const std::vector<std::uint8_t>& c) {
        ++count;
        if (visit) visit(basis.to_poly(c, field));
    });
    return count;
}

inline std::vector<FqMPoly> list_monic(std::uint32_t d, std::uint32_t n, const PrimeField& field, const Guardrails& guard = {}) {
    std::vector<FqMPoly> out;
    enumerate_monic(d, n, field, [&](const FqMPoly& f) { out.push_back(f); }, guard);
    return out;
}

/// Counts only; skips building FqMPoly values.
inline std::uint64_t count_monic(std::uint32_t d, std::uint32_t n, const PrimeField& field, const Guardrails& guard = {}) {
    if (n < 1) throw InputError("number of variables must be at least 1");
    detail::check_work(poly_count_value({d, n}, field.order(), guard), guard, "count_monic");
    std::uint64_t count = 0;
    detail::DenseBasis(d, n).for_each_monic(field.order(), [&](const std::vector<std::uint8_t>&) { ++count; });
    return count;
}

/// |Irr_{d,n}(F_q)| by the product sieve. `workers` splits the left factors
/// across threads; the result does not depend on it.
inline std::uint64_t count_irreducible(std::uint32_t d, std::uint32_t n, const PrimeField& field, const Guardrails& guard = {},
                                       unsigned workers = 1) {
    if (n < 1) throw InputError("number of variables must be at least 1");
    const std::uint32_t q = field.order();
    BigInteger predicted = poly_count_value({d, n}, q, guard);
    for (std::uint32_t i = 1; i <= d / 2; ++i) {
        predicted += poly_count_value({i, n}, q, guard) * poly_count_value({d - i, n}, q, guard);
    }
    detail::check_work(predicted, guard, "count_irreducible");
    if (d == 0) return 0;  // the constant 1 is a unit, not irreducible

    const detail::DenseBasis target(d, n);
    std::vector<detail::DenseBasis> bases;
    for (std::uint32_t k = 0; k < d; ++k) bases.emplace_back(k, n);

    std::unordered_set<std::string> reducible;
    workers = std::max(1u, workers);
    for (std::uint32_t i = 1; i <= d / 2; ++i) {
        const auto& left_basis = bases[i];
        const auto& right_basis = bases[d - i];
        // index_product[a][b] = position of monomial(a) * monomial(b) in target
        std::vector<std::vector<std::size_t>> index_product(left_basis.size(), std::vector<std::size_t>(right_basis.size()));
        for (std::size_t a = 0; a < left_basis.size(); ++a) {
            for (std::size_t b = 0; b < right_basis.size(); ++b) {
                index_product[a][b] = target.index_of(left_basis.monomial(a) * right_basis.monomial(b));
            }
        }
        std::vector<std::vector<std::uint8_t>> lefts;
        std::vector<std::vector<std::uint8_t>> rights;
        left_basis.for_each_monic(q, [&](const std::vector<std::uint8_t>& c) { lefts.push_back(c); });
        right_basis.for_each_monic(q, [&](const std::vector<std::uint8_t>& c) { rights.push_back(c); });

        auto sweep = [&](std::size_t begin, std::size_t step, std::unordered_set<std::string>& out) {
            std::string prod(target.size(), '\0');
            for (std::size_t li = begin; li < lefts.size(); li += step) {
                const auto& f = lefts[li];
                for (const auto& g : rights) {
                    std::fill(prod.begin(), prod.end(), '\0');
                    for (std::size_t a = 0; a < f.size(); ++a) {
                        if (f[a] == 0) continue;
                        for (std::size_t b = 0; b < g.size(); ++b) {
                            if (g[b] == 0) continue;
                            auto& slot = prod[index_product[a][b]];
                            slot = static_cast<char>((static_cast<std::uint32_t>(slot) + f[a] * g[b]) % q);
                        }
                    }
                    out.insert(prod);
                }
            }
        };

        if (workers == 1) {
            sweep(0, 1, reducible);
        } else {
            std::vector<std::unordered_set<std::string>> partial(workers);
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(sweep, w, workers, std::ref(partial[w]));
            for (auto& t : pool) t.join();
            for (auto& s : partial) reducible.merge(s);
        }
    }
    const BigInteger total = poly_count_value({d, n}, q, guard);
    return total.get_ui() - reducible.size();
}

struct GridCell {
    std::uint32_t d;
    std::uint32_t n;
    std::uint32_t q;
};

struct CellReport {
    GridCell cell;
    std::uint64_t enumerated = 0;
    BigInteger predicted_total;  // P_{d,n}(q)
    std::uint64_t irreducible = 0;
    Rational necklace;  // M_{d,n}(q)
    bool total_pass = false;
    bool irreducible_pass = false;
    double seconds = 0.0;

    bool pass() const { return total_pass && irreducible_pass; }
};

/// Compares enumeration counts with P_{d,n}(q) and sieve counts with
/// M_{d,n}(q) for each cell.
inline std::vector<CellReport> verify_grid(const std::vector<GridCell>& grid, const Guardrails& guard = {}, unsigned workers = 1) {
    std::vector<CellReport> out;
    for (const auto& cell : grid) {
        const auto start = std::chrono::steady_clock::now();
        const PrimeField field(cell.q);
        CellReport r;
        r.cell = cell;
        r.enumerated = count_monic(cell.d, cell.n, field, guard);
        r.predicted_total = poly_count_value({cell.d, cell.n}, cell.q, guard);
        r.irreducible = count_irreducible(cell.d, cell.n, field, guard, workers);
        r.necklace = necklace_value({cell.d, cell.n}, cell.q, guard);
        r.total_pass = BigInteger(static_cast<unsigned long>(r.enumerated)) == r.predicted_total;
        r.irreducible_pass = Rational(BigInteger(static_cast<unsigned long>(r.irreducible))) == r.necklace;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace necklace
