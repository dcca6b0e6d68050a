#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobdim/matrix.hpp"
#include "frobdim/quotient_ring.hpp"

namespace frobdim {

// Finitely presented graded R-module: coker of relations: R^a -> R^b where
// R^b = (+) R(-shifts[j]). Every relation column is homogeneous with respect
// to the shifts.
struct ModulePresentation {
    QRingPtr ring;
    std::int32_t rank = 0;
    std::vector<std::int64_t> shifts;
    PolyMatrix relations;  // rank rows, any number of columns

    static ModulePresentation free_module(QRingPtr ring, std::int32_t rank,
                                          std::vector<std::int64_t> shifts = {});
    // R/(gens) as a cyclic module
    static ModulePresentation cyclic(QRingPtr ring, const std::vector<Polynomial>& gens);
    // the residue field k = R/m
    static ModulePresentation residue_field(QRingPtr ring);

    bool is_free_presentation() const { return relations.cols() == 0; }
};

// throws InputError on shape mismatch or non-homogeneous columns
void validate(const ModulePresentation& M);

// relation columns of M lifted over S: module relations plus I*e_j
std::vector<ModuleElement> lifted_relations(const ModulePresentation& M);

bool is_zero(const ModulePresentation& M);

// Minimal presentation: cancel unit (degree-0) entries of the relations
// matrix by row/column operations, deterministic lowest-row-then-column scan.
// `old_gens_in_new[j]` expresses original generator j in the new generators.
struct MinimalPresentation {
    ModulePresentation pres;
    std::vector<ModuleElement> old_gens_in_new;
};
MinimalPresentation minimalize(const ModulePresentation& M);

// drop relation columns that reduce to zero against the others + I, and
// normalize entries modulo I; canonical column order
ModulePresentation tidy(const ModulePresentation& M);

std::string describe(const ModulePresentation& M);

}  // namespace frobdim
