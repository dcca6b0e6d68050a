#pragma once

#include <optional>

#include "frobdim/complex.hpp"

namespace frobdim {

// Homology presented as a module: generators are the kernel generators at the
// spot, relations express boundaries plus coefficient relations.
struct HomologyModule {
    ModulePresentation pres;
    bool zero = false;
    bool finite_length = false;
    std::int64_t k_dimension = -1;  // total F_p-dimension when finite_length
};

HomologyModule homology(const FreeComplex& C, int i);
HomologyModule homology(const PresentedComplex& C, int i);

// cheap zero test that skips building the presentation
bool homology_is_zero(const FreeComplex& C, int i);
bool homology_is_zero(const PresentedComplex& C, int i);

// largest i with H_i != 0, or nullopt when all homology vanishes
std::optional<int> sup_homology(const FreeComplex& C);
std::optional<int> sup_homology(const PresentedComplex& C);

}  // namespace frobdim
