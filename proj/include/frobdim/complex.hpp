#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobdim/presentation.hpp"

namespace frobdim {

// Bounded complex of graded free R-modules, homologically indexed: the
// differential d_i maps F_i to F_{i-1}. Spots live in [lo, hi]; d_i is stored
// for lo < i <= hi. Construction verifies d_i . d_{i+1} = 0 modulo the ideal
// and that every entry is homogeneous.
class FreeComplex {
public:
    FreeComplex() = default;
    FreeComplex(QRingPtr ring, int lo, std::vector<std::int32_t> ranks,
                std::vector<std::vector<std::int64_t>> shifts,
                std::vector<PolyMatrix> diffs, bool check = true);

    const QRingPtr& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    bool empty() const { return ranks_.empty(); }

    std::int32_t rank(int i) const;
    const std::vector<std::int64_t>& shifts(int i) const;
    // d_i : F_i -> F_{i-1}; nullptr when either side is out of range
    const PolyMatrix* diff(int i) const;

    // entrywise d.d = 0 mod I; throws InternalError on failure
    void check_dd() const;

    static FreeComplex zero(QRingPtr ring) { return FreeComplex(std::move(ring), 0, {}, {}, {}); }
    static FreeComplex single(QRingPtr ring, int degree, std::int32_t rank,
                              std::vector<std::int64_t> shifts);

private:
    QRingPtr ring_;
    int lo_ = 0;
    std::vector<std::int32_t> ranks_;
    std::vector<std::vector<std::int64_t>> shifts_;
    std::vector<PolyMatrix> diffs_;  // diffs_[k] = d_{lo+k+1}
    static const std::vector<std::int64_t> kNoShifts;
};

// Bounded complex of finitely presented modules. Differentials are given on
// the free covers and must be compatible: d(relations) lands in relations and
// d.d = 0 modulo relations.
class PresentedComplex {
public:
    PresentedComplex() = default;
    PresentedComplex(int lo, std::vector<ModulePresentation> terms,
                     std::vector<PolyMatrix> diffs, bool check = true);

    const QRingPtr& ring() const { return terms_.at(0).ring; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
    bool empty() const { return terms_.empty(); }

    const ModulePresentation* term(int i) const;
    const PolyMatrix* diff(int i) const;

    bool all_terms_free() const;
    // valid only when all_terms_free(): reinterpret as a FreeComplex
    FreeComplex as_free_complex() const;

    static PresentedComplex from_module(ModulePresentation M, int degree = 0);
    static PresentedComplex from_free_complex(const FreeComplex& C);

private:
    int lo_ = 0;
    std::vector<ModulePresentation> terms_;
    std::vector<PolyMatrix> diffs_;  // diffs_[k] = d_{lo+k+1} on covers
};

// Koszul complex K(y; R) on homogeneous ring elements: rank C(|y|, i) in
// homological degree i, basis indexed by i-subsets in lexicographic order,
// generator shifts sum the degrees of the chosen elements.
FreeComplex koszul_complex(const std::vector<Polynomial>& y, const QRingPtr& ring);

// K(y; M): the Koszul complex with coefficients in a presented module.
PresentedComplex koszul_complex(const std::vector<Polynomial>& y,
                                const ModulePresentation& M);

// Tensor product of complexes of frees over R, with the usual sign
// (d(a @ b) = da @ b + (-1)^{|a|} a @ db).
FreeComplex tensor(const FreeComplex& A, const FreeComplex& B);

// Entrywise Frobenius power on differentials, shifts scaled by p^e; the
// result is re-verified to be a complex.
FreeComplex frobenius_functor(const FreeComplex& C, int e);

}  // namespace frobdim
