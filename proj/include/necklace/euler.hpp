#pragma once

/**
 * @file euler.hpp
 * @brief Compactly supported Euler characteristics of Irr_{d,n} and Poly_{d,n}
 * over R and C.
 *
 * chi_c is additive, multiplicative, and sends Sym^m X to multichoose(chi_c(X), m),
 * so it behaves like a point count with chi_c(R) = -1 and chi_c(C) = 1. That
 * makes chi_c(Irr_{d,n}(K)) = M_{d,n}(chi_c(K)). Over R there is also a closed
 * form through the balanced binary expansion of n; euler_table() always runs
 * both and insists they agree.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "necklace/arithmetic.hpp"
#include "necklace/counting.hpp"
#include "necklace/errors.hpp"
#include "necklace/exact.hpp"

namespace necklace {

enum class BaseField { Real, Complex };

/// chi_c(R) = -1, chi_c(C) = 1.
constexpr int chi_c_of(BaseField field) { return field == BaseField::Real ? -1 : 1; }

inline std::string to_string(BaseField field) { return field == BaseField::Real ? "real" : "complex"; }

inline BaseField parse_base_field(const std::string& s) {
    if (s == "real") return BaseField::Real;
    if (s == "complex") return BaseField::Complex;
    throw InputError("field must be 'real' or 'complex', got '" + s + "'");
}

namespace detail {

inline BigInteger integral(const Rational& v, const char* what) {
    if (v.get_den() != 1) throw VerificationError(std::string(what) + " is not an integer: " + v.get_str());
    return v.get_num();
}

}  // namespace detail

/// chi_c(Irr_{d,n}(K)) = M_{d,n}(chi_c(K)), by specialize-then-factor.
inline BigInteger chi_irr(const CountingParams& params, BaseField field) {
    return detail::integral(necklace_value(params, chi_c_of(field)), "chi_c(Irr)");
}

/// chi_c(Irr_{d,n}(R)) from the balanced binary expansion of n: b_k when
/// d = 2^k, 0 otherwise.
inline int chi_irr_real_closed(const CountingParams& params) {
    const std::uint64_t d = params.d;
    if (d == 0 || (d & (d - 1)) != 0) return 0;
    std::uint64_t k = 0;
    while ((std::uint64_t{1} << k) != d) ++k;
    return balanced_coefficient(BigInteger(static_cast<unsigned long>(params.n)), 2, k);
}

/// chi_c(Poly_{d,n}(K)) = P_{d,n}(chi_c(K)).
inline BigInteger chi_poly(const CountingParams& params, BaseField field) {
    if (field == BaseField::Complex) {
        // P_{d,n}(1) = C(n+d-1, d)
        return binomial(params.n + params.d - 1, params.d);
    }
    return poly_count_value(params, -1);
}

struct EulerRow {
    std::uint64_t d;
    BigInteger chi;                  // specialization path
    std::optional<BigInteger> closed;  // balanced expansion path (real only)
};

struct EulerTable {
    std::uint64_t n;
    BaseField field;
    std::vector<EulerRow> rows;  // d = 1 .. d_max

    /// "specialized" for complex, "specialized+closed-form" for real.
    std::string method() const { return field == BaseField::Real ? "specialized+closed-form" : "specialized"; }
};

/// chi_c(Irr_{d,n}(K)) for 1 <= d <= d_max. A disagreement between the two
/// real paths raises VerificationError.
inline EulerTable euler_table(std::uint64_t n, std::uint64_t d_max, BaseField field) {
    if (n < 1) throw InputError("number of variables must be at least 1");
    EulerTable table{n, field, {}};
    if (d_max == 0) return table;
    const auto values = necklace_table_at(n, d_max, chi_c_of(field));
    for (std::uint64_t d = 1; d <= d_max; ++d) {
        EulerRow row{d, detail::integral(values.at(d), "chi_c(Irr)"), std::nullopt};
        if (field == BaseField::Real) {
            row.closed = chi_irr_real_closed({d, n});
            if (*row.closed != row.chi) {
                throw VerificationError("chi_c(Irr_{" + std::to_string(d) + "," + std::to_string(n) +
                                        "}(R)): specialization gives " + row.chi.get_str() + ", balanced expansion gives " +
                                        row.closed->get_str());
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace necklace
