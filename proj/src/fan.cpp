#include "tropws/fan.hpp"

#include <map>
#include <set>

namespace trop {

bool is_fan(const Fan& f, std::string* why) {
    for (size_t i = 0; i < f.cones.size(); ++i)
        for (size_t j = i + 1; j < f.cones.size(); ++j) {
            Cone I = intersect_cones(f.cones[i], f.cones[j]);
            if (!is_face_of(I, f.cones[i]) || !is_face_of(I, f.cones[j])) {
                if (why)
                    *why = "cones " + std::to_string(i) + " and " + std::to_string(j) +
                           " do not meet in a common face";
                return false;
            }
        }
    return true;
}

Fan common_refinement(const Fan& f1, const Fan& f2) {
    if (f1.n != f2.n) throw input_error("common_refinement: ambient rank mismatch");
    Fan out;
    out.n = f1.n;
    std::set<std::string> seen;
    for (const Cone& a : f1.cones)
        for (const Cone& b : f2.cones) {
            Cone c = intersect_cones(a, b);
            if (seen.insert(c.key()).second) out.cones.push_back(std::move(c));
        }
    return out;
}

std::vector<Cone> face_closure(const Fan& f) {
    std::map<std::string, Cone> seen;
    for (const Cone& c : f.cones)
        for (Cone& g : face_closure_of(c)) seen.emplace(g.key(), std::move(g));
    std::vector<Cone> out;
    for (auto& [k, c] : seen) out.push_back(std::move(c));
    return out;
}

bool is_complete(const Fan& f) {
    std::vector<const Cone*> tops;
    for (const Cone& c : f.cones)
        if (c.dim == f.n) tops.push_back(&c);
    if (tops.empty()) return false;
    std::map<std::string, int> facet_count;
    for (const Cone* c : tops)
        for (const Cone& g : cone_facets(*c)) ++facet_count[g.key()];
    for (const auto& [k, cnt] : facet_count)
        if (cnt != 2) return false;
    return true;
}

bool is_smooth_cone(const Cone& c) {
    std::vector<IVec> gens = c.rays;
    gens.insert(gens.end(), c.lin.begin(), c.lin.end());
    if (int(gens.size()) != c.dim) return false;
    if (gens.empty()) return true;
    SnfResult s = smith_normal_form(IMat::from_rows(gens, c.n));
    if (int(s.divisors.size()) != c.dim) return false;
    for (const Int& d : s.divisors)
        if (d != 1) return false;
    return true;
}

bool is_smooth(const Fan& f, std::string* offender) {
    for (const Cone& c : f.cones)
        if (!is_smooth_cone(c)) {
            if (offender) *offender = c.key();
            return false;
        }
    return true;
}

bool refines(const Fan& fine, const Fan& coarse) {
    if (fine.n != coarse.n) return false;
    std::vector<Cone> cells = face_closure(fine);
    for (const Cone& c : coarse.cones) {
        if (c.dim == 0) continue;  // the origin needs no covering
        // cones of `fine` inside c with the same dimension must tile c
        std::vector<const Cone*> pieces;
        for (const Cone& s : cells)
            if (s.dim == c.dim && cone_contains_cone(c, s)) pieces.push_back(&s);
        if (pieces.empty()) return false;
        // every facet of a piece lies on the boundary of c (count 1) or is
        // shared by exactly two pieces
        std::map<std::string, int> count;
        std::map<std::string, Cone> reps;
        for (const Cone* p : pieces)
            for (Cone& g : cone_facets(*p)) {
                std::string k = g.key();
                ++count[k];
                reps.emplace(k, std::move(g));
            }
        for (const auto& [k, cnt] : count) {
            if (cnt == 2) continue;
            const Cone& g = reps.at(k);
            bool on_boundary = false;
            for (const IVec& a : c.ineqs) {
                bool tight = true;
                for (const IVec& r : g.rays)
                    if (dot(a, r) != 0) { tight = false; break; }
                if (tight)
                    for (const IVec& l : g.lin)
                        if (dot(a, l) != 0) { tight = false; break; }
                if (tight) { on_boundary = true; break; }
            }
            if (!(cnt == 1 && on_boundary)) return false;
        }
    }
    return true;
}

}  // namespace trop
