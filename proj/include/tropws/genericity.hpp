#pragma once

#include "tropws/classes.hpp"
#include "tropws/oracle.hpp"
#include "tropws/projection.hpp"

namespace trop {

struct GenericityReport {
    bool ok = true;
    std::vector<std::string> witnesses;
};

// Injective on a dense subset: no cone span meets ker p, and no two cone
// images overlap in full dimension.
GenericityReport is_immersed(const ProjectionMap& p, const TropicalCycle& K);

// Interior fibers of at most the generic dimension:
// dim(span(sigma) cap ker p) <= k - r for every top cone. Errors when
// k < r and K is nonzero (the generic fiber dimension is undefined).
GenericityReport is_submersed(const ProjectionMap& p, const TropicalCycle& K);

enum class GenMode { submerse, immerse, evade };

struct GenRequest {
    TropicalCycle cycle;
    GenMode mode;
};

struct GenConfig {
    int search_bound = 5000;  // candidate kernel vectors per step
    int enum_offset = 0;      // skip this many candidates (perturbs the search)
};

// Deterministic generic-projection search: kernel vectors enumerated by
// increasing max-coordinate with lexicographic tie-break, one at a time,
// each step re-checked against the projected complexes.
ProjectionMap find_generic_projection(const std::vector<GenRequest>& requests, int r,
                                      const GenConfig& cfg = {});

// The four-step driver for surfaces in the 3-torus: computes the tropical
// grading Trop_2, Trop_1, Trop_0 of U from Trop U and an external
// tropicalization oracle for critical loci of projections.
TropGrading compute_classes_surface3(const TropicalCycle& trop_u,
                                     const OracleSpec& oracle,
                                     const GenConfig& cfg = {});

}  // namespace trop
