#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "pp/errors.hpp"

namespace pp {

// Nonnegative duration in milliseconds, stored as an exact rational so timing
// comparisons in tests are exact. Construction from a double snaps to
// microsecond resolution, which is exact for every value used in configs.
class Duration {
public:
    Duration() : num_(0), den_(1) {}

    static Duration from_ms(std::int64_t ms) { return Duration(ms, 1); }

    static Duration from_ms(double ms) {
        if (!(ms >= 0.0) || !std::isfinite(ms))
            throw InputError("duration must be a finite nonnegative value");
        return Duration(static_cast<std::int64_t>(std::llround(ms * 1e6)), 1000000);
    }

    static Duration ratio(std::int64_t num, std::int64_t den) { return Duration(num, den); }

    double ms() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Duration operator+(const Duration& o) const {
        return Duration(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Duration& operator+=(const Duration& o) { return *this = *this + o; }

    Duration operator*(std::int64_t k) const { return Duration(num_ * k, den_); }

    bool operator==(const Duration& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Duration& o) const { return !(*this == o); }
    bool operator<(const Duration& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Duration& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Duration& o) const { return o < *this; }
    bool operator>=(const Duration& o) const { return o <= *this; }

private:
    Duration(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw InputError("duration denominator must be nonzero");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ < 0) throw InputError("duration must be nonnegative");
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace pp
