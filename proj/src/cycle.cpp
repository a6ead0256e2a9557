#include "tropws/cycle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

#include "tropws/parallel.hpp"

namespace trop {

namespace {
std::atomic<int> g_retry_budget{64};
}

int stable_retry_budget() { return g_retry_budget.load(); }
void set_stable_retry_budget(int budget) { g_retry_budget.store(budget); }

Int TropicalCycle::total_weight() const {
    Int t = 0;
    for (const WCone& wc : cones) t += wc.weight;
    return t;
}

TropicalCycle zero_cycle(int n, int k) { return TropicalCycle{n, k, {}}; }

TropicalCycle torus_cycle(int n) {
    return TropicalCycle{n, n, {{full_space(n), 1}}};
}

TropicalCycle make_cycle(int n, int k, std::vector<WCone> cones) {
    for (const WCone& wc : cones) {
        if (wc.cone.n != n) throw input_error("make_cycle: ambient rank mismatch");
        if (wc.cone.dim != k)
            throw input_error("make_cycle: cone of dimension " +
                              std::to_string(wc.cone.dim) + " in a " +
                              std::to_string(k) + "-cycle");
    }
    return TropicalCycle{n, k, std::move(cones)};
}

namespace {

IVec sign_normalized(const IVec& v) {
    for (const Int& x : v) {
        if (x > 0) return v;
        if (x < 0) return neg(v);
    }
    return v;
}

// all facet and equation hyperplanes occurring in the cone list
std::vector<IVec> arrangement_normals(const std::vector<WCone>& cones) {
    std::set<std::string> seen;
    std::vector<IVec> out;
    auto push = [&](const IVec& h) {
        IVec s = sign_normalized(h);
        if (is_zero(s)) return;
        if (seen.insert(vec_str(s)).second) out.push_back(s);
    };
    for (const WCone& wc : cones) {
        for (const IVec& a : wc.cone.ineqs) push(a);
        for (const IVec& e : wc.cone.eqs) push(e);
    }
    return out;
}

std::string span_key_of(const Cone& c) {
    IMat s = span_lattice(c);
    std::string k;
    for (int i = 0; i < s.rows(); ++i) k += "[" + vec_str(s.row(i)) + "]";
    return k;
}

// split a cone into the closed cells of the arrangement it meets full-dim
std::vector<Cone> arrangement_cells(const Cone& c, const std::vector<IVec>& normals) {
    std::vector<Cone> cur{c};
    for (const IVec& h : normals) {
        std::vector<Cone> next;
        for (Cone& piece : cur) {
            bool pos = false, neg_side = false;
            for (const IVec& r : piece.rays) {
                int s = sgn(dot(h, r));
                if (s > 0) pos = true;
                if (s < 0) neg_side = true;
            }
            for (const IVec& l : piece.lin)
                if (dot(h, l) != 0) { pos = true; neg_side = true; }
            if (pos && neg_side) {
                auto [cp, cm] = split_cone(piece, h);
                if (cp.dim == c.dim) next.push_back(std::move(cp));
                if (cm.dim == c.dim) next.push_back(std::move(cm));
            } else {
                next.push_back(std::move(piece));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

struct CellMap {
    std::map<std::string, size_t> index;
    std::vector<Cone> cells;
    std::vector<Int> weights;
    void accumulate(Cone c, const Int& w) {
        std::string k = c.key();
        auto it = index.find(k);
        if (it == index.end()) {
            index.emplace(std::move(k), cells.size());
            cells.push_back(std::move(c));
            weights.push_back(w);
        } else {
            weights[it->second] += w;
        }
    }
};

// full arrangement refinement of the weighted cones (the expensive fallback
// used when the collection is not facially compatible)
CellMap fanify_global(const std::vector<WCone>& cones) {
    std::vector<IVec> normals = arrangement_normals(cones);
    std::vector<std::vector<Cone>> per(cones.size());
    parallel_for(cones.size(), [&](size_t i) {
        per[i] = arrangement_cells(cones[i].cone, normals);
    });
    CellMap out;
    for (size_t i = 0; i < cones.size(); ++i)
        for (Cone& cell : per[i]) out.accumulate(std::move(cell), cones[i].weight);
    return out;
}

// refinement within groups of cones sharing a linear span; overlaps across
// different spans are lower-dimensional and carry no weight
CellMap fanify_by_span(const std::vector<WCone>& cones) {
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < cones.size(); ++i)
        groups[span_key_of(cones[i].cone)].push_back(i);
    CellMap out;
    for (auto& [sk, idx] : groups) {
        if (idx.size() == 1) {
            out.accumulate(cones[idx[0]].cone, cones[idx[0]].weight);
            continue;
        }
        std::vector<WCone> group;
        for (size_t i : idx) group.push_back(cones[i]);
        std::vector<IVec> normals = arrangement_normals(group);
        std::vector<std::vector<Cone>> per(group.size());
        parallel_for(group.size(), [&](size_t i) {
            per[i] = arrangement_cells(group[i].cone, normals);
        });
        for (size_t i = 0; i < group.size(); ++i)
            for (Cone& cell : per[i]) out.accumulate(std::move(cell), group[i].weight);
    }
    return out;
}

// merge cells with equal weight whose union is again a cone
void merge_cells(int n, std::vector<WCone>& cells) {
    // group by linear span
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < cells.size(); ++i)
        groups[span_key_of(cells[i].cone)].push_back(i);
    std::vector<bool> dead(cells.size(), false);
    std::vector<WCone> fresh;
    for (auto& [sk, idx] : groups) {
        // whole-span collapse: equal weights and no uncovered facet
        if (idx.size() >= 2) {
            bool same_w = true;
            for (size_t i : idx)
                if (cells[i].weight != cells[idx[0]].weight) { same_w = false; break; }
            if (same_w) {
                std::map<std::string, int> fc;
                for (size_t i : idx)
                    for (const Cone& g : cone_facets(cells[i].cone)) ++fc[g.key()];
                bool closed = true;
                for (auto& [k, cnt] : fc)
                    if (cnt != 2) { closed = false; break; }
                if (closed) {
                    IMat span = span_lattice(cells[idx[0]].cone);
                    Cone whole = make_cone(n, {}, span.row_list());
                    fresh.push_back({std::move(whole), cells[idx[0]].weight});
                    for (size_t i : idx) dead[i] = true;
                    continue;
                }
            }
        }
        // pairwise merges across shared facets
        std::vector<WCone> live;
        for (size_t i : idx) live.push_back(cells[i]);
        for (size_t i : idx) dead[i] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < live.size() && !changed; ++i)
                for (size_t j = i + 1; j < live.size() && !changed; ++j) {
                    if (live[i].weight != live[j].weight) continue;
                    Cone u = cone_sum(live[i].cone, live[j].cone);
                    if (u.dim != live[i].cone.dim) continue;
                    // valid merge: some facet hyperplane of i splits the hull
                    // back into exactly the two pieces
                    for (const IVec& h : live[i].cone.ineqs) {
                        auto [up, um] = split_cone(u, h);
                        bool ok = (up == live[i].cone && um == live[j].cone) ||
                                  (um == live[i].cone && up == live[j].cone);
                        if (ok) {
                            Int w = live[i].weight;
                            live.erase(live.begin() + j);
                            live.erase(live.begin() + i);
                            live.push_back({std::move(u), w});
                            changed = true;
                            break;
                        }
                    }
                }
        }
        for (WCone& wc : live) fresh.push_back(std::move(wc));
    }
    std::vector<WCone> out;
    for (size_t i = 0; i < cells.size(); ++i)
        if (!dead[i]) out.push_back(std::move(cells[i]));
    for (WCone& wc : fresh) out.push_back(std::move(wc));
    std::sort(out.begin(), out.end(), [](const WCone& a, const WCone& b) {
        return a.cone.key() < b.cone.key();
    });
    cells = std::move(out);
}

}  // namespace

TropicalCycle canonicalize(const TropicalCycle& C) {
    std::vector<WCone> live;
    for (const WCone& wc : C.cones)
        if (wc.weight != 0) live.push_back(wc);
    if (live.empty()) return zero_cycle(C.n, C.k);
    CellMap cm = fanify_by_span(live);
    std::vector<WCone> cells;
    for (size_t i = 0; i < cm.cells.size(); ++i)
        if (cm.weights[i] != 0) cells.push_back({cm.cells[i], cm.weights[i]});
    if (cells.empty()) return zero_cycle(C.n, C.k);
    merge_cells(C.n, cells);
    return TropicalCycle{C.n, C.k, std::move(cells)};
}

bool cycle_equal(const TropicalCycle& a, const TropicalCycle& b) {
    if (a.n != b.n) return false;
    TropicalCycle ca = canonicalize(a), cb = canonicalize(b);
    if (ca.is_zero() || cb.is_zero()) return ca.is_zero() && cb.is_zero();
    if (ca.k != cb.k) return false;
    return canonicalize(add(ca, scale(cb, -1))).is_zero();
}

TropicalCycle add(const TropicalCycle& a, const TropicalCycle& b) {
    if (a.n != b.n) throw input_error("add: ambient rank mismatch");
    if (a.is_zero()) return canonicalize(b);
    if (b.is_zero()) return canonicalize(a);
    if (a.k != b.k) throw input_error("add: dimension mismatch");
    std::vector<WCone> cones = a.cones;
    cones.insert(cones.end(), b.cones.begin(), b.cones.end());
    return canonicalize(TropicalCycle{a.n, a.k, std::move(cones)});
}

TropicalCycle scale(const TropicalCycle& C, const Int& c) {
    if (c == 0) return zero_cycle(C.n, C.k);
    TropicalCycle out = C;
    for (WCone& wc : out.cones) wc.weight *= c;
    return out;
}

TropicalCycle cross_product(const TropicalCycle& a, const TropicalCycle& b) {
    int n = a.n + b.n;
    if (a.is_zero() || b.is_zero()) return zero_cycle(n, a.k + b.k);
    auto pad_left = [&](const IVec& v) {
        IVec r(n);
        for (int i = 0; i < a.n; ++i) r[i] = v[i];
        return r;
    };
    auto pad_right = [&](const IVec& v) {
        IVec r(n);
        for (int i = 0; i < b.n; ++i) r[a.n + i] = v[i];
        return r;
    };
    std::vector<WCone> cones;
    for (const WCone& x : a.cones)
        for (const WCone& y : b.cones) {
            std::vector<IVec> rays, lin;
            for (const IVec& r : x.cone.rays) rays.push_back(pad_left(r));
            for (const IVec& r : y.cone.rays) rays.push_back(pad_right(r));
            for (const IVec& l : x.cone.lin) lin.push_back(pad_left(l));
            for (const IVec& l : y.cone.lin) lin.push_back(pad_right(l));
            cones.push_back({make_cone(n, rays, lin), x.weight * y.weight});
        }
    return make_cycle(n, a.k + b.k, std::move(cones));
}

// moment-curve displacement candidates (1, h, h^2, ...): lying on a fixed
// integer hyperplane forces a polynomial in h to vanish, so all large h are
// generic for any finite fan pair
IVec displacement_candidate(int n, long index) {
    Int h = index + 2;
    IVec v(n);
    Int p = 1;
    for (int i = 0; i < n; ++i) {
        v[i] = p;
        p *= h;
    }
    return v;
}

IVec enumerated_vector(int n, long index) {
    long seen = 0;
    for (long height = 1;; ++height) {
        // vectors with max |coordinate| exactly `height`, lexicographic
        std::vector<long> v(n, -height);
        while (true) {
            long mx = 0;
            for (long x : v) mx = std::max(mx, std::labs(x));
            if (mx == height) {
                if (seen == index) {
                    IVec out(n);
                    for (int i = 0; i < n; ++i) out[i] = v[i];
                    return out;
                }
                ++seen;
            }
            int i = n - 1;
            while (i >= 0 && v[i] == height) v[i--] = -height;
            if (i < 0) break;
            ++v[i];
        }
    }
}

IVec find_displacement(const TropicalCycle& a, const TropicalCycle& b,
                       int budget, int enum_offset) {
    int n = a.n;
    std::vector<Cone> fa, fb;
    {
        Fan tmp{n, {}};
        for (const WCone& wc : a.cones) tmp.cones.push_back(wc.cone);
        fa = face_closure(tmp);
        tmp.cones.clear();
        for (const WCone& wc : b.cones) tmp.cones.push_back(wc.cone);
        fb = face_closure(tmp);
    }
    // Minkowski differences sigma - tau for every face pair, computed once
    size_t pairs = fa.size() * fb.size();
    std::vector<HRepLite> diff(pairs);
    parallel_for(pairs, [&](size_t t) {
        const Cone& s = fa[t / fb.size()];
        const Cone& u = fb[t % fb.size()];
        std::vector<IVec> rays = s.rays;
        for (const IVec& r : u.rays) rays.push_back(neg(r));
        std::vector<IVec> lin = s.lin;
        lin.insert(lin.end(), u.lin.begin(), u.lin.end());
        diff[t] = hrep_of_gens(n, rays, lin);
    });
    for (int c = 0; c < budget; ++c) {
        IVec v = displacement_candidate(n, enum_offset + c);
        bool ok = true;
        for (const HRepLite& d : diff) {
            if (!hrep_contains(d, v)) continue;
            if (!hrep_interior(d, n, v)) {
                ok = false;
                break;
            }
        }
        if (ok) return v;
    }
    throw input_error("stable_intersection: no generic displacement within budget " +
                      std::to_string(budget));
}

TropicalCycle stable_intersection(const TropicalCycle& a, const TropicalCycle& b,
                                  int enum_offset) {
    if (a.n != b.n) throw input_error("stable_intersection: ambient rank mismatch");
    int n = a.n;
    int m = a.k + b.k - n;
    if (m < 0 || a.is_zero() || b.is_zero()) return zero_cycle(n, std::max(m, 0));
    IVec v = find_displacement(a, b, stable_retry_budget(), enum_offset);

    struct PairData {
        Cone cell;
        bool contributes = false;
        Int mult;  // w_sigma * w_tau * [N : N_sigma + N_tau]
        std::vector<Cone> skeleton;
    };
    size_t na = a.cones.size(), nb = b.cones.size();
    std::vector<PairData> pd(na * nb);
    std::atomic<bool> bad{false};
    parallel_for(na * nb, [&](size_t t) {
        const WCone& s = a.cones[t / nb];
        const WCone& u = b.cones[t % nb];
        PairData& out = pd[t];
        out.cell = intersect_cones(s.cone, u.cone);
        std::vector<IVec> drays = s.cone.rays;
        for (const IVec& r : u.cone.rays) drays.push_back(neg(r));
        std::vector<IVec> dlin = s.cone.lin;
        dlin.insert(dlin.end(), u.cone.lin.begin(), u.cone.lin.end());
        HRepLite d = hrep_of_gens(n, drays, dlin);
        if (hrep_contains(d, v)) {
            IMat ns = span_lattice(s.cone);
            IMat nu = span_lattice(u.cone);
            for (int i = 0; i < nu.rows(); ++i) ns.append_row(nu.row(i));
            SnfResult snf = smith_normal_form(ns);
            if (int(snf.divisors.size()) != n) {
                bad.store(true);
                return;
            }
            Int idx = 1;
            for (const Int& dd : snf.divisors) idx *= dd;
            out.contributes = true;
            out.mult = s.weight * u.weight * idx;
        }
        // faces of the pair intersection of the expected dimension
        if (out.cell.dim >= m) {
            for (const Cone& f : face_closure_of(out.cell))
                if (f.dim == m) out.skeleton.push_back(f);
        }
    });
    if (bad.load())
        throw input_error("stable_intersection: non-transverse contributing pair");

    // deterministic accumulation in pair order
    std::map<std::string, Cone> gamma;
    for (const PairData& p : pd)
        for (const Cone& f : p.skeleton) gamma.emplace(f.key(), f);
    std::vector<WCone> cones;
    for (const auto& [key, g] : gamma) {
        Int w = 0;
        for (const PairData& p : pd)
            if (p.contributes && cone_contains_cone(p.cell, g)) w += p.mult;
        if (w != 0) cones.push_back({g, w});
    }
    return canonicalize(make_cycle(n, m, std::move(cones)));
}

Int intersection_number(const TropicalCycle& a, const TropicalCycle& b) {
    if (a.n != b.n) throw input_error("intersection_number: ambient rank mismatch");
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.k + b.k != a.n)
        throw input_error("intersection_number: dimensions are not complementary");
    return stable_intersection(a, b).total_weight();
}

namespace {

void require_epimorphism(const IMat& p) {
    SnfResult s = smith_normal_form(p);
    if (int(s.divisors.size()) != p.rows())
        throw input_error("projection is not surjective (rank drop)");
    for (const Int& d : s.divisors)
        if (d != 1) throw input_error("projection is not surjective onto the lattice");
}

}  // namespace

TropicalCycle pushforward(const IMat& p, const TropicalCycle& C) {
    if (p.cols() != C.n) throw input_error("pushforward: ambient rank mismatch");
    require_epimorphism(p);
    int r = p.rows();
    int k = std::min(C.k, r);
    std::vector<WCone> cones(C.cones.size());
    std::vector<bool> keep(C.cones.size(), false);
    parallel_for(C.cones.size(), [&](size_t i) {
        const WCone& wc = C.cones[i];
        Cone img = cone_image(p, wc.cone);
        if (img.dim != C.k) return;  // collapsing cones contribute zero
        Int idx = image_lattice_index(p, span_lattice(wc.cone));
        cones[i] = {std::move(img), wc.weight * idx};
        keep[i] = true;
    });
    std::vector<WCone> out;
    for (size_t i = 0; i < cones.size(); ++i)
        if (keep[i]) out.push_back(std::move(cones[i]));
    if (out.empty()) return zero_cycle(r, k);
    return canonicalize(make_cycle(r, C.k, std::move(out)));
}

TropicalCycle pullback(const IMat& p, const TropicalCycle& C) {
    if (p.rows() != C.n) throw input_error("pullback: target rank mismatch");
    require_epimorphism(p);
    int n = p.cols(), r = p.rows();
    int k = C.k + n - r;
    if (C.is_zero()) return zero_cycle(n, k);
    std::vector<WCone> cones;
    for (const WCone& wc : C.cones)
        cones.push_back({cone_preimage(p, wc.cone), wc.weight});
    return canonicalize(make_cycle(n, k, std::move(cones)));
}

namespace {

// intersection of the row spans of two saturated bases
IMat subspace_meet(const IMat& A, const IMat& B, int n) {
    IMat ka = kernel_basis(A.rows() ? A : IMat(0, n));
    IMat kb = kernel_basis(B.rows() ? B : IMat(0, n));
    for (int i = 0; i < kb.rows(); ++i) ka.append_row(kb.row(i));
    return kernel_basis(ka);
}

}  // namespace

IMat lineality_space(const TropicalCycle& C) {
    TropicalCycle c = canonicalize(C);
    if (c.is_zero()) return IMat::identity(C.n);
    IMat cand1(0, C.n);
    {
        bool first = true;
        for (const WCone& wc : c.cones) {
            IMat l = IMat::from_rows(wc.cone.lin, C.n);
            IMat sat = row_saturation(l);
            cand1 = first ? sat : subspace_meet(cand1, sat, C.n);
            first = false;
        }
    }
    IMat cand2(0, C.n);
    {
        bool first = true;
        for (const WCone& wc : c.cones) {
            IMat sp = span_lattice(wc.cone);
            cand2 = first ? sp : subspace_meet(cand2, sp, C.n);
            first = false;
        }
    }
    if (cand2.rows() > cand1.rows()) {
        // verify C + cand2 = C
        Cone lc = make_cone(C.n, {}, cand2.row_list());
        std::vector<WCone> shifted;
        for (const WCone& wc : c.cones) shifted.push_back({cone_sum(wc.cone, lc), wc.weight});
        TropicalCycle cs{C.n, C.k, std::move(shifted)};
        bool pure = true;
        for (const WCone& wc : cs.cones)
            if (wc.cone.dim != C.k) { pure = false; break; }
        if (pure && cycle_equal(cs, c)) return row_saturation(cand2);
    }
    return row_saturation(cand1);
}

namespace {

struct Wall {
    std::vector<IVec> gens;  // rays then lineality basis of the facet
    IMat span;               // saturated span lattice
    Cone as_cone() const;
    int n = 0;
};

Cone Wall::as_cone() const { return make_cone(n, gens, {}); }

// balancing of one wall against the cell list; returns false on a
// non-complex overlap (caller must refine and retry)
bool wall_balance(const std::vector<WCone>& cells, int n, int k, const Wall& tau,
                  bool& balanced_out) {
    Quotient q = quotient_by(tau.span, n);
    IVec sum(n);
    for (const WCone& wc : cells) {
        const Cone& c = wc.cone;
        bool inside = true;
        for (const IVec& g : tau.gens)
            if (!cone_contains(c, g)) {
                inside = false;
                break;
            }
        if (!inside) {
            // partial overlap in dimension k-1 means the list is not a complex
            IMat both = tau.span;
            IMat cs = span_lattice(c);
            for (int i = 0; i < cs.rows(); ++i) both.append_row(cs.row(i));
            int meet = tau.span.rows() + cs.rows() - rank_of(both);
            if (meet >= k - 1) {
                Cone I = intersect_cones(tau.as_cone(), c);
                if (I.dim == k - 1) return false;
            }
            continue;
        }
        // one-sided only if the wall lies in a facet hyperplane of c;
        // otherwise c covers both sides and contributes zero
        bool tight = false;
        for (const IVec& a : c.ineqs) {
            bool all0 = true;
            for (const IVec& g : tau.gens)
                if (dot(a, g) != 0) {
                    all0 = false;
                    break;
                }
            if (all0) {
                tight = true;
                break;
            }
        }
        if (!tight) continue;
        IVec rho0;
        for (const IVec& r : c.rays) {
            IVec im = q.proj.apply(r);
            if (is_zero(im)) continue;
            IVec prim = primitive_part(im).first;
            if (rho0.empty())
                rho0 = prim;
            else if (rho0 != prim)
                return false;  // not one ray direction: refine
        }
        if (rho0.empty()) continue;
        IVec lifted(n);
        for (int j = 0; j < q.lift.rows(); ++j)
            for (int col = 0; col < n; ++col) lifted[col] += rho0[j] * q.lift.at(j, col);
        for (int col = 0; col < n; ++col) sum[col] += wc.weight * lifted[col];
    }
    if (is_zero(sum)) {
        balanced_out = true;
        return true;
    }
    IMat test = tau.span;
    test.append_row(sum);
    balanced_out = rank_of(test) == tau.span.rows();
    return true;
}

// facet walls of every cell, deduplicated, light representation
std::vector<Wall> collect_walls(const std::vector<WCone>& cells, int n) {
    std::map<std::string, Wall> walls;
    std::vector<std::vector<Wall>> per(cells.size());
    parallel_for(cells.size(), [&](size_t i) {
        const Cone& c = cells[i].cone;
        for (const IVec& a : c.ineqs) {
            std::vector<IVec> eqs = c.eqs;
            eqs.push_back(a);
            VRepLite v = vrep_of_hrep(n, c.ineqs, eqs);
            Wall w;
            w.n = n;
            w.gens = v.rays;
            for (const IVec& l : v.lin) {
                w.gens.push_back(l);
                w.gens.push_back(neg(l));
            }
            std::vector<IVec> all = v.rays;
            all.insert(all.end(), v.lin.begin(), v.lin.end());
            w.span = row_saturation(IMat::from_rows(all, n));
            if (w.span.rows() != c.dim - 1) continue;  // not a facet
            per[i].push_back(std::move(w));
        }
    });
    for (auto& list : per)
        for (Wall& w : list) {
            std::string key;
            for (const IVec& g : w.gens) key += "[" + vec_str(g) + "]";
            walls.emplace(std::move(key), std::move(w));
        }
    std::vector<Wall> out;
    for (auto& [k, w] : walls) out.push_back(std::move(w));
    return out;
}

}  // namespace

BalanceReport is_balanced(const TropicalCycle& C) {
    for (const WCone& wc : C.cones)
        if (wc.cone.dim != C.k)
            throw input_error("is_balanced: mixed dimensions in cycle");
    BalanceReport rep;
    if (C.is_zero() || C.k == 0) return rep;
    std::vector<WCone> cells;
    {
        CellMap cm = fanify_by_span([&] {
            std::vector<WCone> live;
            for (const WCone& wc : C.cones)
                if (wc.weight != 0) live.push_back(wc);
            return live;
        }());
        for (size_t i = 0; i < cm.cells.size(); ++i)
            if (cm.weights[i] != 0) cells.push_back({cm.cells[i], cm.weights[i]});
    }
    if (cells.empty()) return rep;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Wall> walls = collect_walls(cells, C.n);
        std::vector<char> fail(walls.size(), 0);
        std::atomic<bool> incompatible{false};
        parallel_for(walls.size(), [&](size_t wi) {
            bool ok = false;
            if (!wall_balance(cells, C.n, C.k, walls[wi], ok))
                incompatible.store(true);
            else if (!ok)
                fail[wi] = 1;
        });
        if (incompatible.load()) {
            if (attempt == 1)
                throw input_error("is_balanced: cells do not form a complex");
            // refine into cells of the full arrangement and retry
            CellMap cm = fanify_global(cells);
            cells.clear();
            for (size_t i = 0; i < cm.cells.size(); ++i)
                if (cm.weights[i] != 0) cells.push_back({cm.cells[i], cm.weights[i]});
            continue;
        }
        for (size_t i = 0; i < walls.size(); ++i)
            if (fail[i]) {
                rep.balanced = false;
                rep.failing_cells.push_back(walls[i].as_cone());
            }
        return rep;
    }
    return rep;
}

}  // namespace trop
