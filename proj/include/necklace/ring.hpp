#pragma once

/**
 * @file ring.hpp
 * @brief Carriers for binomial-ring computations.
 *
 * A carrier is a Q-algebra: Rational, RatPoly, or CycloElem. Each carrier
 * specializes ring_traits with the constants and the rational scaling that
 * generic code needs. Constants are built "like" an existing value because a
 * CycloElem's unit depends on its prime.
 */

#include <concepts>
#include <cstdint>

#include "necklace/cyclo.hpp"
#include "necklace/exact.hpp"
#include "necklace/ratpoly.hpp"

namespace necklace {

template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero(const Rational&) { return 0; }
    static Rational one(const Rational&) { return 1; }
    static Rational constant(const Rational&, const Rational& c) { return c; }
    static Rational scale(const Rational& a, const Rational& s) { return a * s; }
    static bool is_zero(const Rational& a) { return a == 0; }
};

template <>
struct ring_traits<RatPoly> {
    static RatPoly zero(const RatPoly&) { return {}; }
    static RatPoly one(const RatPoly&) { return RatPoly::constant(1); }
    static RatPoly constant(const RatPoly&, const Rational& c) { return RatPoly::constant(c); }
    static RatPoly scale(const RatPoly& a, const Rational& s) { return a.scaled(s); }
    static bool is_zero(const RatPoly& a) { return a.is_zero(); }
};

template <>
struct ring_traits<CycloElem> {
    static CycloElem zero(const CycloElem& like) { return CycloElem(like.prime()); }
    static CycloElem one(const CycloElem& like) { return CycloElem::one(like.prime()); }
    static CycloElem constant(const CycloElem& like, const Rational& c) { return CycloElem::constant(like.prime(), c); }
    static CycloElem scale(const CycloElem& a, const Rational& s) { return a.scaled(s); }
    static bool is_zero(const CycloElem& a) { return a.is_zero(); }
};

template <class R>
concept BinomialRing = requires(const R& a, const R& b, const Rational& s) {
    { R(a + b) } -> std::same_as<R>;
    { R(a - b) } -> std::same_as<R>;
    { R(-a) } -> std::same_as<R>;
    { R(a * b) } -> std::same_as<R>;
    { a == b } -> std::convertible_to<bool>;
    { ring_traits<R>::zero(a) } -> std::same_as<R>;
    { ring_traits<R>::one(a) } -> std::same_as<R>;
    { ring_traits<R>::constant(a, s) } -> std::same_as<R>;
    { ring_traits<R>::scale(a, s) } -> std::same_as<R>;
    { ring_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
};

template <BinomialRing R>
R ring_one(const R& like) { return ring_traits<R>::one(like); }

template <BinomialRing R>
R ring_zero(const R& like) { return ring_traits<R>::zero(like); }

template <BinomialRing R>
R ring_constant(const R& like, const Rational& c) { return ring_traits<R>::constant(like, c); }

template <BinomialRing R>
bool ring_is_zero(const R& a) { return ring_traits<R>::is_zero(a); }

/// Multiset coefficient a(a+1)...(a+m-1)/m!, computed in the carrier.
template <BinomialRing R>
R multichoose(const R& a, std::uint64_t m) {
    R acc = ring_one(a);
    for (std::uint64_t i = 0; i < m; ++i) {
        acc = R(acc * R(a + ring_constant(a, Rational(static_cast<unsigned long>(i)))));
    }
    return ring_traits<R>::scale(acc, Rational(1) / Rational(factorial(m)));
}

/// Horner evaluation of f at a carrier value.
template <BinomialRing R>
R ratpoly_eval(const RatPoly& f, const R& at) {
    R acc = ring_zero(at);
    const auto& cs = f.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = R(R(acc * at) + ring_constant(at, *it));
    }
    return acc;
}

}  // namespace necklace
