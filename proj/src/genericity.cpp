#include "tropws/genericity.hpp"

#include <set>

namespace trop {

GenericityReport is_immersed(const ProjectionMap& p, const TropicalCycle& K) {
    if (p.n != K.n) throw input_error("is_immersed: ambient rank mismatch");
    GenericityReport rep;
    if (K.is_zero()) return rep;
    int k = K.k;
    std::vector<Cone> images;
    for (const WCone& wc : K.cones) {
        // (a) ker p misses the span of every top cone
        IMat span = span_lattice(wc.cone);
        int sd = span.rows();
        for (int i = 0; i < p.kernel.rows(); ++i) span.append_row(p.kernel.row(i));
        if (rank_of(span) != sd + p.kernel.rows()) {
            rep.ok = false;
            rep.witnesses.push_back("kernel meets span of cone " + wc.cone.key());
        }
        images.push_back(cone_image(p.matrix, wc.cone));
    }
    // (b) no two distinct cones have overlapping full-dimensional images
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j) {
            Cone meet = intersect_cones(images[i], images[j]);
            if (meet.dim >= k) {
                rep.ok = false;
                rep.witnesses.push_back("images of cones " + K.cones[i].cone.key() +
                                        " and " + K.cones[j].cone.key() +
                                        " overlap in dimension " +
                                        std::to_string(meet.dim));
            }
        }
    return rep;
}

GenericityReport is_submersed(const ProjectionMap& p, const TropicalCycle& K) {
    if (p.n != K.n) throw input_error("is_submersed: ambient rank mismatch");
    GenericityReport rep;
    if (K.is_zero()) return rep;
    if (K.k < p.r)
        throw input_error("is_submersed: cycle dimension below projection rank");
    int slack = K.k - p.r;
    for (const WCone& wc : K.cones) {
        IMat span = span_lattice(wc.cone);
        int sd = span.rows();
        for (int i = 0; i < p.kernel.rows(); ++i) span.append_row(p.kernel.row(i));
        int meet_dim = sd + p.kernel.rows() - rank_of(span);
        if (meet_dim > slack) {
            rep.ok = false;
            rep.witnesses.push_back("fiber dimension " + std::to_string(meet_dim) +
                                    " over cone " + wc.cone.key());
        }
    }
    return rep;
}

namespace {

struct StepState {
    std::vector<Cone> cones;
    GenMode mode;
    int k;  // original pure dimension
};

bool step_ok(const StepState& st, const ProjectionMap& q, int cur_n) {
    switch (st.mode) {
        case GenMode::submerse: {
            // drop a dimension only where the span is already everything
            for (const Cone& c : st.cones) {
                if (c.dim == cur_n) continue;
                IMat span = span_lattice(c);
                int sd = span.rows();
                for (int i = 0; i < q.kernel.rows(); ++i)
                    span.append_row(q.kernel.row(i));
                if (rank_of(span) != sd + 1) return false;
            }
            return true;
        }
        case GenMode::immerse: {
            std::vector<WCone> wc;
            for (const Cone& c : st.cones) wc.push_back({c, 1});
            TropicalCycle cyc{cur_n, st.k, std::move(wc)};
            return is_immersed(q, cyc).ok;
        }
        case GenMode::evade: {
            // the kernel line must meet every cone only at the origin
            IVec w = q.kernel.row(0);
            for (const Cone& c : st.cones)
                if (cone_contains(c, w) || cone_contains(c, neg(w))) return false;
            return true;
        }
    }
    return false;
}

}  // namespace

ProjectionMap find_generic_projection(const std::vector<GenRequest>& requests, int r,
                                      const GenConfig& cfg) {
    if (requests.empty()) throw input_error("find_generic_projection: no requests");
    int n = requests[0].cycle.n;
    for (const GenRequest& rq : requests) {
        if (rq.cycle.n != n)
            throw input_error("find_generic_projection: ambient rank mismatch");
        if (rq.cycle.is_zero()) continue;
        if (rq.mode == GenMode::immerse && rq.cycle.k > r)
            throw input_error("find_generic_projection: immersion needs dim K <= r");
        if (rq.mode == GenMode::submerse && rq.cycle.k < r)
            throw input_error("find_generic_projection: submersion needs dim K >= r");
    }
    if (r < 0 || r > n) throw input_error("find_generic_projection: bad rank");

    std::vector<StepState> state;
    for (const GenRequest& rq : requests) {
        StepState st;
        st.mode = rq.mode;
        st.k = rq.cycle.k;
        std::set<std::string> seen;
        for (const WCone& wc : rq.cycle.cones)
            if (seen.insert(wc.cone.key()).second) st.cones.push_back(wc.cone);
        state.push_back(std::move(st));
    }
    std::vector<IVec> chosen;  // kernel vectors in the original space
    int cur_n = n;
    IMat compose = IMat::identity(n);
    for (int step = 0; step < n - r; ++step) {
        bool found = false;
        std::string last_fail = "no candidate tried";
        for (int idx = 0; idx < cfg.search_bound && !found; ++idx) {
            IVec w = enumerated_vector(n, cfg.enum_offset + idx);
            {
                IMat m = IMat::from_rows(chosen, n);
                m.append_row(w);
                if (rank_of(m) != int(chosen.size()) + 1) continue;
            }
            IVec wbar = compose.apply(w);
            if (is_zero(wbar)) continue;
            ProjectionMap q = projection_from_kernel({wbar}, cur_n);
            bool ok = true;
            for (size_t s = 0; s < state.size() && ok; ++s) {
                if (!step_ok(state[s], q, cur_n)) {
                    ok = false;
                    last_fail = "request " + std::to_string(s) + " (mode " +
                                std::to_string(int(state[s].mode)) + ")";
                }
            }
            if (!ok) continue;
            chosen.push_back(w);
            for (StepState& st : state) {
                std::set<std::string> seen;
                std::vector<Cone> next;
                for (const Cone& c : st.cones) {
                    Cone img = cone_image(q.matrix, c);
                    if (seen.insert(img.key()).second) next.push_back(std::move(img));
                }
                st.cones = std::move(next);
            }
            compose = q.matrix.mul(compose);
            --cur_n;
            found = true;
        }
        if (!found)
            throw input_error(
                "find_generic_projection: search bound exhausted; last failing "
                "constraint: " +
                last_fail);
    }
    ProjectionMap p = chosen.empty()
                          ? make_projection(IMat::identity(n))
                          : projection_from_kernel(chosen, n);
    // post-hoc verification of the requested predicates
    for (const GenRequest& rq : requests) {
        if (rq.cycle.is_zero()) continue;
        bool ok = true;
        switch (rq.mode) {
            case GenMode::submerse: ok = is_submersed(p, rq.cycle).ok; break;
            case GenMode::immerse: ok = is_immersed(p, rq.cycle).ok; break;
            case GenMode::evade: {
                Cone kc = make_cone(n, {}, p.kernel.row_list());
                for (const WCone& wc : rq.cycle.cones)
                    if (intersect_cones(kc, wc.cone).dim != 0) { ok = false; break; }
                break;
            }
        }
        if (!ok)
            throw input_error("find_generic_projection: stepwise search produced a "
                              "map failing its predicate");
    }
    return p;
}

namespace {

TropicalCycle validated_response(const OracleSpec& oracle, const IMat& proj,
                                 const TropicalCycle& trop_u, int expect_dim) {
    TropicalCycle resp = oracle_query(oracle, proj, trop_u);
    if (resp.n != trop_u.n)
        throw oracle_error("oracle response has wrong ambient rank");
    if (!resp.is_zero() && resp.k != expect_dim)
        throw oracle_error("oracle response has dimension " + std::to_string(resp.k) +
                           ", expected " + std::to_string(expect_dim));
    if (!is_balanced(resp).balanced)
        throw oracle_error("oracle response is not balanced");
    return canonicalize(resp);
}

}  // namespace

TropGrading compute_classes_surface3(const TropicalCycle& trop_u,
                                     const OracleSpec& oracle, const GenConfig& cfg) {
    if (trop_u.n != 3 || trop_u.k != 2)
        throw input_error("compute_classes_surface3: need a 2-cycle in R^3");
    if (!is_balanced(trop_u).balanced)
        throw input_error("compute_classes_surface3: Trop U is not balanced");
    TropicalCycle trop2 = canonicalize(trop_u);

    // (ii) rank-2 projection whose kernel line misses |Trop_2|
    ProjectionMap p2 = find_generic_projection({{trop2, GenMode::submerse}}, 2, cfg);
    TropicalCycle resp2 = validated_response(oracle, p2.matrix, trop2, 1);
    // K = |Trop_2| cap p^{-1} p |response|, kept as a set-theoretic complex
    std::vector<WCone> kcones;
    std::set<std::string> seen;
    for (const WCone& su : trop2.cones)
        for (const WCone& cu : resp2.cones) {
            Cone pre = cone_preimage(p2.matrix, cone_image(p2.matrix, cu.cone));
            Cone cell = intersect_cones(su.cone, pre);
            if (cell.dim == 1 && seen.insert(cell.key()).second)
                kcones.push_back({cell, 1});
        }
    TropicalCycle K{3, 1, std::move(kcones)};

    // (iii) immerse K, submerse Trop_2; the response is Trop_1
    ProjectionMap p2b = find_generic_projection(
        {{K, GenMode::immerse}, {trop2, GenMode::submerse}}, 2, cfg);
    TropicalCycle trop1 = validated_response(oracle, p2b.matrix, trop2, 1);

    // (iv) rank-1 projection: kernel plane meets |Trop_2| in dim <= 1 and
    // |Trop_1| only at the origin; the response is Trop_0
    ProjectionMap p1 = find_generic_projection(
        {{trop2, GenMode::submerse}, {trop1, GenMode::evade}}, 1, cfg);
    TropicalCycle trop0 = validated_response(oracle, p1.matrix, trop2, 0);

    for (const TropicalCycle* c : {&trop1, &trop0})
        for (const WCone& wc : c->cones)
            if (wc.weight <= 0)
                throw oracle_error("oracle produced a nonpositive class weight");

    TropGrading g;
    g.n = 3;
    g.dim_U = 2;
    g.set_piece(2, trop2);
    g.set_piece(1, trop1);
    g.set_piece(0, trop0);
    return g;
}

}  // namespace trop
