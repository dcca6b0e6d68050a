#pragma once

#include <cstdint>
#include <vector>

#include "frobdim/errors.hpp"

namespace frobdim {

enum class OrderKind { DegRevLex, Lex };

// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps);

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i, std::int32_t k = 1);

    std::size_t nvars() const { return e_.size(); }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }
    std::int64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    const std::vector<std::int32_t>& exponents() const { return e_; }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::int32_t> e_;
    std::int64_t deg_ = 0;
};

Monomial mul(const Monomial& a, const Monomial& b);
// a divides b
bool divides(const Monomial& a, const Monomial& b);
// b / a, requires divisibility
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
// scale every exponent by k (Frobenius support)
Monomial power(const Monomial& a, std::int64_t k);

// -1 / 0 / +1 for a < b / a == b / a > b under the given order.
int cmp(OrderKind order, const Monomial& a, const Monomial& b);

}  // namespace frobdim
