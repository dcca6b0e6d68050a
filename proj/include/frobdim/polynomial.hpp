#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "frobdim/field.hpp"
#include "frobdim/monomial.hpp"

namespace frobdim {

constexpr std::int64_t kDefaultDegreeCap = 1 << 16;

// Ambient polynomial ring F_p[x_1..x_n] with a monomial order and a total
// degree cap. Shared immutably by every value built over it.
class PolyRing {
public:
    PolyRing(std::int64_t p, std::vector<std::string> vars,
             OrderKind order = OrderKind::DegRevLex,
             std::int64_t degree_cap = kDefaultDegreeCap);

    const PrimeField& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    OrderKind order() const { return order_; }
    std::int64_t degree_cap() const { return degree_cap_; }

    // index of a declared variable name, or npos
    std::size_t var_index(std::string_view name) const;

    bool compatible(const PolyRing& o) const {
        return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
    }
    void check_degree(std::int64_t d) const {
        if (d > degree_cap_)
            throw LimitError("total degree " + std::to_string(d) +
                             " exceeds degree cap " + std::to_string(degree_cap_));
    }

private:
    PrimeField field_;
    std::vector<std::string> vars_;
    OrderKind order_;
    std::int64_t degree_cap_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::int64_t p, std::vector<std::string> vars,
                  OrderKind order = OrderKind::DegRevLex,
                  std::int64_t degree_cap = kDefaultDegreeCap);

struct Term {
    std::int64_t c;  // in [1, p)
    Monomial m;
};

// Sparse polynomial in canonical form: nonzero coefficients, distinct
// monomials, terms strictly descending under the ring's order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    // normalizes: merges duplicates, drops zeros, sorts
    static Polynomial make(RingPtr ring, std::vector<Term> terms);
    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
    static Polynomial variable(RingPtr ring, std::size_t i);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Term& lt() const;            // leading term
    const Monomial& lm() const { return lt().m; }
    std::int64_t lc() const { return lt().c; }

    // total degree of the leading term (= of the polynomial when homogeneous);
    // -1 for the zero polynomial
    std::int64_t degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    // nonzero scalar
    bool is_unit_constant() const { return terms_.size() == 1 && terms_[0].m.is_one(); }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial mul_term(const Polynomial& a, std::int64_t c, const Monomial& m);
Polynomial scale(const Polynomial& a, std::int64_t c);
Polynomial negate(const Polynomial& a);
Polynomial monic(const Polynomial& a);
Polynomial pow(const Polynomial& a, std::int64_t k);

// f^e-image of g: every exponent vector scales by p^e, coefficients are fixed
// (c^{p^e} = c in F_p). Equals g^{p^e}.
Polynomial frobenius_power(const Polynomial& g, int e);
// least integer value p^e (checked against the degree cap)
std::int64_t prime_power(const PrimeField& f, int e, std::int64_t cap);

// Text grammar: terms joined by '+'/'-'; a term is [coeff*]var[^exp][*var[^exp]]...
// or a bare integer. Whitespace insignificant. Example: "x^2*y + 2*y^3".
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);
std::string to_string(const Polynomial& p);

}  // namespace frobdim
