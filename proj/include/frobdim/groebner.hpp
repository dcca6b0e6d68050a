#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobdim/module_element.hpp"

namespace frobdim {

struct BuchbergerOptions {
    std::size_t max_basis = 4096;  // LimitError past this many basis elements
};

// Counters for the resource block of reports. Deterministic for a fixed input.
struct EngineStats {
    std::uint64_t buchberger_calls = 0;
    std::uint64_t spairs_considered = 0;
    std::uint64_t spairs_reduced = 0;
    std::uint64_t max_basis_size = 0;
    void reset() { *this = EngineStats{}; }
};
EngineStats& engine_stats();

// Reduced Gröbner basis of a submodule of S^rank under position-over-term.
// Reduced bases are canonical: generators are monic, no term of any generator
// is divisible by another generator's leading term, and the sequence is
// sorted by leading term descending.
struct GroebnerBasis {
    RingPtr ring;
    std::int32_t rank = 0;
    std::vector<ModuleElement> gens;
    bool reduced = false;
};

GroebnerBasis buchberger(std::vector<ModuleElement> gens,
                         const BuchbergerOptions& opts = {});

// Remainder of full division: no term of the result is divisible by any
// leading term of B. Unique (hence F_p-linear) when B is a Gröbner basis.
ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& B);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& B);

bool reduces_to_zero(const ModuleElement& v, const GroebnerBasis& B);

// Finitely generated submodule of S^rank with its cached basis.
struct SubmoduleData {
    RingPtr ring;
    std::int32_t rank = 0;
    std::vector<ModuleElement> gens;
    GroebnerBasis basis;
};

SubmoduleData make_submodule(RingPtr ring, std::int32_t rank,
                             std::vector<ModuleElement> gens,
                             const BuchbergerOptions& opts = {});

// true iff the two submodules of the same free module coincide (mutual
// reduction to zero).
bool submodule_equal(const SubmoduleData& U, const SubmoduleData& V);

// Generators h in S^a with  sum_j h_j * cols[j]  in  span(rels).
// This is the kernel of S^a -> S^b/span(rels) sending e_j to cols[j],
// computed by eliminating the leading block of the graph submodule
// { (cols[j], e_j) } + { (rel, 0) }.
std::vector<ModuleElement> syzygies_mod(const std::vector<ModuleElement>& cols,
                                        const std::vector<ModuleElement>& rels,
                                        const BuchbergerOptions& opts = {});

// Membership and expression relative to span(gens) + span(rels).
bool in_span_mod(const ModuleElement& v, const std::vector<ModuleElement>& gens,
                 const std::vector<ModuleElement>& rels,
                 const BuchbergerOptions& opts = {});

// h in S^{#gens} with  v - sum_j h_j * gens[j]  in  span(rels);
// throws InternalError when v is not in the span.
ModuleElement express_mod(const ModuleElement& v, const std::vector<ModuleElement>& gens,
                          const std::vector<ModuleElement>& rels,
                          const BuchbergerOptions& opts = {});

}  // namespace frobdim
