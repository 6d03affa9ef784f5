#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "necklace/exact.hpp"

namespace necklace {

/// Base-b digits, least significant first, no trailing (high) zeros.
/// Zero is the empty digit list.
class DigitVector {
  public:
    DigitVector(std::uint64_t base, std::vector<std::uint64_t> digits) : base_(base), digits_(std::move(digits)) {
        if (base_ < 2) throw InputError("digit base must be at least 2");
        for (auto d : digits_) {
            if (d >= base_) throw InputError("digit out of range for base " + std::to_string(base_));
        }
        while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
    }

    std::uint64_t base() const { return base_; }
    const std::vector<std::uint64_t>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool is_zero() const { return digits_.empty(); }

    /// Digit at position i, zero past the end.
    std::uint64_t operator[](std::size_t i) const { return i < digits_.size() ? digits_[i] : 0; }

    BigInteger value() const {
        BigInteger v = 0;
        for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
            v *= static_cast<unsigned long>(base_);
            v += static_cast<unsigned long>(*it);
        }
        return v;
    }

    bool operator==(const DigitVector&) const = default;

  private:
    std::uint64_t base_;
    std::vector<std::uint64_t> digits_;
};

inline DigitVector to_digits(const BigInteger& n, std::uint64_t base) {
    if (base < 2) throw InputError("digit base must be at least 2");
    if (n < 0) throw InputError("to_digits needs a nonnegative integer");
    std::vector<std::uint64_t> out;
    BigInteger rest = n;
    BigInteger r;
    while (rest != 0) {
        r = rest % static_cast<unsigned long>(base);
        out.push_back(r.get_ui());
        rest /= static_cast<unsigned long>(base);
    }
    return DigitVector(base, std::move(out));
}

}  // namespace necklace
