#pragma once

#include <cstdint>
#include <vector>

#include "frobdim/polynomial.hpp"

namespace frobdim {

struct ModTerm {
    std::int64_t c;
    Monomial m;
    std::int32_t comp;
};

// Position-over-term comparison: lower component wins, ties broken by the
// ring's monomial order. This is the order every engine computation uses;
// its elimination property (any term in an earlier component beats any term
// in a later one) is what the syzygy construction relies on.
int cmp_pot(OrderKind order, const ModTerm& a, const ModTerm& b);

// Shift-aware (Schreyer-style) variant: compares by monomial degree plus the
// component's shift first, then falls back to position-over-term.
int cmp_shifted(OrderKind order, const std::vector<std::int64_t>& shifts,
                const ModTerm& a, const ModTerm& b);

// Element of a free module S^rank, canonical form mirrors Polynomial:
// nonzero coefficients, distinct (monomial, component) pairs, terms strictly
// descending under position-over-term.
class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(RingPtr ring, std::int32_t rank)
        : ring_(std::move(ring)), rank_(rank) {}

    static ModuleElement make(RingPtr ring, std::int32_t rank, std::vector<ModTerm> terms);
    static ModuleElement zero(RingPtr ring, std::int32_t rank) {
        return ModuleElement(std::move(ring), rank);
    }
    // e_comp
    static ModuleElement unit(RingPtr ring, std::int32_t rank, std::int32_t comp);
    static ModuleElement poly_times_unit(const Polynomial& p, std::int32_t rank, std::int32_t comp);

    const RingPtr& ring() const { return ring_; }
    std::int32_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<ModTerm>& terms() const { return terms_; }

    const ModTerm& lt() const;

    // component projection as a polynomial
    Polynomial component(std::int32_t comp) const;
    std::vector<Polynomial> to_columns() const;  // all rank components

    // keep components [0, keep), dropping the rest
    ModuleElement truncate_components(std::int32_t keep) const;
    // shift all components up by `offset` into a module of rank `new_rank`
    ModuleElement embed(std::int32_t new_rank, std::int32_t offset) const;

    bool operator==(const ModuleElement& o) const;
    bool operator!=(const ModuleElement& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::int32_t rank_ = 0;
    std::vector<ModTerm> terms_;
};

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
ModuleElement mul_term(const ModuleElement& a, std::int64_t c, const Monomial& m);
ModuleElement mul(const Polynomial& p, const ModuleElement& a);
ModuleElement scale(const ModuleElement& a, std::int64_t c);
ModuleElement negate(const ModuleElement& a);
ModuleElement monic(const ModuleElement& a);

// element from explicit column entries (rank = entries.size())
ModuleElement from_column(const RingPtr& ring, const std::vector<Polynomial>& entries);

// true when every term of the element is homogeneous of one common degree
// with respect to the shifts (degree of term = |monomial| + shifts[comp]);
// zero elements are homogeneous. On success stores that degree in *deg.
bool is_homogeneous(const ModuleElement& v, const std::vector<std::int64_t>& shifts,
                    std::int64_t* deg = nullptr);

std::string to_string(const ModuleElement& v);

}  // namespace frobdim
