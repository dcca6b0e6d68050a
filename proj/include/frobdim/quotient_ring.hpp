#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "frobdim/groebner.hpp"

namespace frobdim {

// Write-once slot: the first computed value wins; any recomputation must
// agree or it is an internal-consistency failure.
template <typename T>
class CachedValue {
public:
    bool has() const { return v_.has_value(); }
    const T& get() const { return *v_; }
    const T& put(const T& v) const {
        if (v_) {
            if (*v_ != v) throw InternalError("cached invariant recomputation disagreed");
            return *v_;
        }
        v_ = v;
        return *v_;
    }

private:
    mutable std::optional<T> v_;
};

// Standard graded quotient R = F_p[x_1..x_n]/I at its graded maximal ideal,
// with the reduced Gröbner basis of I and lazily cached numerical invariants.
class QuotientRing {
public:
    QuotientRing(RingPtr ambient, std::vector<Polynomial> ideal_gens,
                 const BuchbergerOptions& opts = {});

    const RingPtr& ambient() const { return ambient_; }
    const std::vector<Polynomial>& ideal_gens() const { return ideal_; }
    const GroebnerBasis& ideal_gb() const { return gb_; }
    const BuchbergerOptions& options() const { return opts_; }
    std::size_t nvars() const { return ambient_->nvars(); }
    std::int64_t p() const { return ambient_->field().p(); }

    bool is_polynomial_ring() const { return gb_.gens.empty(); }
    bool is_zero_ring() const;  // 1 in I

    // normal form modulo I (entrywise for module elements)
    Polynomial nf(const Polynomial& f) const;
    ModuleElement nf(const ModuleElement& v) const;
    bool in_ideal(const Polynomial& f) const { return nf(f).is_zero(); }

    // the columns g*e_j for g in gens(I), j in [0, rank): the relations every
    // computation over R appends when lifted to the ambient ring
    std::vector<ModuleElement> relation_columns(std::int32_t rank) const;

    // invariant cache (filled by the invariants layer)
    const CachedValue<int>& dim_cache() const { return dim_; }
    const CachedValue<int>& depth_cache() const { return depth_; }
    const CachedValue<std::int64_t>& multiplicity_cache() const { return mult_; }
    const CachedValue<bool>& regular_cache() const { return regular_; }

private:
    RingPtr ambient_;
    std::vector<Polynomial> ideal_;
    GroebnerBasis gb_;
    BuchbergerOptions opts_;
    CachedValue<int> dim_;
    CachedValue<int> depth_;
    CachedValue<std::int64_t> mult_;
    CachedValue<bool> regular_;
};

using QRingPtr = std::shared_ptr<const QuotientRing>;

QRingPtr make_quotient(RingPtr ambient, std::vector<Polynomial> ideal_gens,
                       const BuchbergerOptions& opts = {});

}  // namespace frobdim
