#pragma once

#include <cstdint>

#include "frobdim/errors.hpp"

namespace frobdim {

bool is_prime(std::int64_t n);

// Arithmetic in F_p for a prime 2 <= p < 2^31. Element values live in [0, p);
// products of two elements fit in int64 without overflow.
class PrimeField {
public:
    explicit PrimeField(std::int64_t p);

    std::int64_t p() const { return p_; }

    std::int64_t normalize(std::int64_t a) const {
        a %= p_;
        return a < 0 ? a + p_ : a;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a - b;
        return s < 0 ? s + p_ : s;
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
    std::int64_t inv(std::int64_t a) const;
    std::int64_t pow(std::int64_t a, std::int64_t k) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::int64_t p_;
};

}  // namespace frobdim
