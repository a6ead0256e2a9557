#pragma once

#include "tropws/cone.hpp"

namespace trop {

// A polyhedral fan given by a list of cones (usually the maximal ones).
struct Fan {
    int n = 0;
    std::vector<Cone> cones;
};

// Pairwise intersections must be faces of both sides.
bool is_fan(const Fan& f, std::string* why = nullptr);

// All nonempty pairwise intersections, deduplicated.
Fan common_refinement(const Fan& f1, const Fan& f2);

// Deduplicated face closure of every listed cone.
std::vector<Cone> face_closure(const Fan& f);

// Union of maximal cones is all of R^n (every dim n-1 face of a full
// dimensional cone is shared by exactly two of them).
bool is_complete(const Fan& f);

// Unimodular: generators extend to a Z-basis and the cone is simplicial.
bool is_smooth_cone(const Cone& c);
bool is_smooth(const Fan& f, std::string* offender = nullptr);

// Every cone of `coarse` is the union of the cones of `fine` inside it.
bool refines(const Fan& fine, const Fan& coarse);

}  // namespace trop
