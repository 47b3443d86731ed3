#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace prg {

// Minimal unsigned big integer: just enough for exact combinatorial counts
// (products of ~25 word-sized factors, exact division by small integers).
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(uint64_t v) : limbs_{v} {}

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

    bool fits_u64() const { return limbs_.size() == 1; }
    uint64_t as_u64() const {
        if (!fits_u64()) fail(Errc::invalid_parameter, "BigUint does not fit in 64 bits");
        return limbs_[0];
    }

    void mul_u64(uint64_t f) {
        if (f == 0) {
            limbs_.assign(1, 0);
            return;
        }
        uint64_t carry = 0;
        for (auto& limb : limbs_) {
            __uint128_t p = static_cast<__uint128_t>(limb) * f + carry;
            limb = static_cast<uint64_t>(p);
            carry = static_cast<uint64_t>(p >> 64);
        }
        if (carry) limbs_.push_back(carry);
    }

    // Exact division; remainder must be zero for the callers in this project
    // (falling-factorial / factorial quotients), asserted.
    void div_exact_u64(uint64_t d) {
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            __uint128_t cur = (static_cast<__uint128_t>(rem) << 64) | limbs_[i];
            limbs_[i] = static_cast<uint64_t>(cur / d);
            rem = static_cast<uint64_t>(cur % d);
        }
        trim();
        if (rem != 0) fail(Errc::invalid_parameter, "BigUint division was not exact");
    }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }

    // Natural log, accurate to double precision (top two limbs + exponent).
    double log_e() const {
        if (is_zero()) fail(Errc::invalid_parameter, "log of zero");
        size_t top = limbs_.size() - 1;
        double hi = static_cast<double>(limbs_[top]);
        double lo = top > 0 ? static_cast<double>(limbs_[top - 1]) : 0.0;
        double mant = hi + lo * 0x1.0p-64;
        constexpr double ln2 = 0.69314718055994530942;
        return std::log(mant) + static_cast<double>(top) * 64.0 * ln2;
    }

    std::string to_string() const {
        std::vector<uint64_t> tmp = limbs_;
        std::string out;
        auto all_zero = [&] {
            return std::all_of(tmp.begin(), tmp.end(), [](uint64_t w) { return w == 0; });
        };
        if (all_zero()) return "0";
        while (!all_zero()) {
            uint64_t rem = 0;
            for (size_t i = tmp.size(); i-- > 0;) {
                __uint128_t cur = (static_cast<__uint128_t>(rem) << 64) | tmp[i];
                tmp[i] = static_cast<uint64_t>(cur / 10);
                rem = static_cast<uint64_t>(cur % 10);
            }
            out.push_back(static_cast<char>('0' + rem));
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    static BigUint binomial(uint64_t n, uint64_t k) {
        if (k > n) return BigUint(0);
        if (k > n - k) k = n - k;
        BigUint r(1);
        for (uint64_t i = 1; i <= k; ++i) {
            r.mul_u64(n - k + i);
            r.div_exact_u64(i);
        }
        return r;
    }

private:
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<uint64_t> limbs_; // little-endian base 2^64
};

} // namespace prg
