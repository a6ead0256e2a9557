#include "tropws/semistable.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

namespace {

Int det2(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// cyclic order starting in the closed upper half plane at (1,0)
bool angle_less(const IVec& a, const IVec& b) {
    auto half = [](const IVec& v) {
        if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
        return 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return det2(a, b) > 0;
}

// solve det(v, x) = 1 for primitive v
IVec unimodular_partner(const IVec& v) {
    // a*y - b*x = 1 with v = (a, b)
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v[0].get_mpz_t(),
               v[1].get_mpz_t());
    if (g != 1) throw input_error("unimodular_partner: vector is not primitive");
    // a*s + b*t = 1  ->  choose x = -t, y = s
    return IVec{-t, s};
}

}  // namespace

WssReport check_weakly_semistable(const Fan& sigma, const Fan& sigma_prime,
                                  const IMat& p) {
    if (p.rows() != sigma_prime.n || p.cols() != sigma.n)
        throw input_error("check_weakly_semistable: projection shape mismatch");
    if (sigma_prime.n > 2)
        throw input_error("check_weakly_semistable: unsupported for target rank > 2");
    for (const Fan* f : {&sigma, &sigma_prime}) {
        std::string bad;
        if (!is_smooth(*f, &bad))
            throw input_error("check_weakly_semistable: non-smooth cone " + bad);
        for (const Cone& c : f->cones)
            if (!c.pointed())
                throw input_error("check_weakly_semistable: cone with lineality " +
                                  c.key());
        if (!is_complete(*f))
            throw input_error("check_weakly_semistable: fan is not complete");
    }
    std::set<std::string> target;
    for (const Cone& c : face_closure(sigma_prime)) target.insert(c.key());
    WssReport rep;
    for (const Cone& c : face_closure(sigma)) {
        Cone img = cone_image(p, c);
        if (!target.count(img.key())) {
            rep.ok = false;
            rep.witness = "image of cone " + c.key() + " is not a cone of the target";
            return rep;
        }
        // lattice surjectivity: smooth pointed cones are generated by their
        // rays over Z>=0, so each primitive target ray must be hit exactly
        for (const IVec& w : img.rays) {
            bool hit = false;
            for (const IVec& u : c.rays)
                if (p.apply(u) == w) {
                    hit = true;
                    break;
                }
            if (!hit) {
                rep.ok = false;
                rep.witness = "lattice points of " + img.key() +
                              " are not all hit from cone " + c.key();
                return rep;
            }
        }
    }
    return rep;
}

namespace {

IVec ladder_ray(const IVec& v, long j) { return IVec{v[0], v[1], Int(j)}; }

Cone cone3(const IVec& a, const IVec& b, const IVec& c) {
    return make_cone(3, {a, b, c}, {});
}

}  // namespace

SemistablePair build_semistable_3to2(const Fan& S) {
    if (S.n != 3) throw input_error("build_semistable_3to2: fan must live in R^3");
    IMat p(2, 3);
    p.at(0, 0) = 1;
    p.at(1, 1) = 1;
    std::vector<Cone> closure = face_closure(S);

    // smooth complete refinement of the projected 1-skeleton
    std::map<std::string, IVec> ray_set;
    auto add_ray2 = [&](const IVec& r) {
        if (is_zero(r)) return;
        IVec pr = primitive_part(r).first;
        ray_set.emplace(vec_str(pr), pr);
    };
    add_ray2(IVec{1, 0});
    add_ray2(IVec{0, 1});
    add_ray2(IVec{-1, 0});
    add_ray2(IVec{0, -1});
    for (const Cone& c : closure)
        if (c.dim == 1 && c.pointed()) add_ray2(p.apply(c.rays[0]));
    std::vector<IVec> vs;
    for (auto& [k, v] : ray_set) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), angle_less);
    for (size_t i = 0; i < vs.size();) {
        const IVec& v = vs[i];
        const IVec& w = vs[(i + 1) % vs.size()];
        Int d = det2(v, w);
        if (d <= 0) throw input_error("build_semistable_3to2: degenerate ray order");
        if (d == 1) {
            ++i;
            continue;
        }
        // insert the ray adjacent to v on the w side with det(v,u) = 1
        IVec x0 = unimodular_partner(v);
        Int num = -det2(x0, w);
        Int kk = fdiv(num + d - 1, d);  // ceil(num / d)
        IVec u = add(x0, scaled(v, kk));
        vs.insert(vs.begin() + i + 1, u);
    }
    Fan sigma_prime;
    sigma_prime.n = 2;
    for (size_t i = 0; i < vs.size(); ++i)
        sigma_prime.cones.push_back(
            make_cone(2, {vs[i], vs[(i + 1) % vs.size()]}, {}));

    // S_1: rays of (2-skeleton of S) cap p^{-1}(1-skeleton of sigma_prime)
    std::vector<Cone> strips;
    for (const IVec& v : vs) {
        IVec lift{v[0], v[1], 0};
        strips.push_back(make_cone(3, {lift}, {IVec{0, 0, 1}}));
    }
    std::map<std::string, IVec> s1;
    for (const Cone& c : closure) {
        if (c.dim < 1 || c.dim > 2) continue;
        for (const Cone& strip : strips) {
            Cone I = intersect_cones(c, strip);
            if (I.dim == 1) {
                if (!I.rays.empty())
                    s1.emplace(vec_str(I.rays[0]), I.rays[0]);
                else {  // the vertical line
                    s1.emplace("0 0 1", IVec{0, 0, 1});
                    s1.emplace("0 0 -1", IVec{0, 0, -1});
                }
            } else if (I.dim == 2) {
                for (const Cone& f : cone_facets(I))
                    if (!f.rays.empty()) s1.emplace(vec_str(f.rays[0]), f.rays[0]);
            }
        }
    }

    // dilation m = lcm of gcd(x, y) over the nonvertical rays of S_1
    Int m = 1;
    for (auto& [key, r] : s1) {
        Int g = gcd(r[0], r[1]);
        if (g != 0) m = lcm(m, g);
    }

    // ladder columns: j-values of the dilated S_1 rays over each base ray
    std::vector<LadderColumn> profile(vs.size());
    std::map<std::string, size_t> vindex;
    for (size_t i = 0; i < vs.size(); ++i) {
        profile[i].v = vs[i];
        vindex[vec_str(vs[i])] = i;
    }
    for (auto& [key, r] : s1) {
        if (r[0] == 0 && r[1] == 0) continue;  // poles are always present
        IVec dil{r[0], r[1], m * r[2]};
        IVec prim = primitive_part(dil).first;
        IVec base{prim[0], prim[1]};
        auto it = vindex.find(vec_str(base));
        if (it == vindex.end())
            throw input_error("build_semistable_3to2: dilated ray off the base fan");
        long j = to_long(prim[2]);
        profile[it->second].a = std::min(profile[it->second].a, j);
        profile[it->second].b = std::max(profile[it->second].b, j);
    }

    // mandatory rungs: slices of the dilated 2-skeleton across each slab
    IMat dm = IMat::identity(3);
    dm.at(2, 2) = m;
    std::vector<Cone> walls;
    for (const Cone& c : closure)
        if (c.dim == 2) walls.push_back(cone_image(dm, c));
    Fan sigma;
    sigma.n = 3;
    IVec upole{0, 0, 1}, dpole{0, 0, -1};
    for (size_t i = 0; i < vs.size(); ++i) {
        size_t i2 = (i + 1) % vs.size();
        const LadderColumn& L = profile[i];
        const LadderColumn& R = profile[i2];
        Cone slab = cone_preimage(p, sigma_prime.cones[i]);
        std::vector<std::pair<long, long>> rungs;
        for (const Cone& w : walls) {
            Cone I = intersect_cones(w, slab);
            if (I.dim != 2 || I.rays.size() != 2) continue;
            long jl = 0, jr = 0;
            bool okl = false, okr = false;
            for (const IVec& r : I.rays) {
                IVec base = p.apply(r);
                if (is_zero(base)) continue;
                IVec bp = primitive_part(base).first;
                if (bp == L.v) { jl = to_long(r[2]); okl = true; }
                if (bp == R.v) { jr = to_long(r[2]); okr = true; }
            }
            if (okl && okr) rungs.push_back({jl, jr});
        }
        rungs.push_back({L.a, R.a});
        rungs.push_back({L.b, R.b});
        std::sort(rungs.begin(), rungs.end());
        rungs.erase(std::unique(rungs.begin(), rungs.end()), rungs.end());
        for (size_t t = 0; t + 1 < rungs.size(); ++t)
            if (rungs[t].second > rungs[t + 1].second)
                throw input_error("build_semistable_3to2: crossing wall slices");
        // staircase between consecutive rungs
        for (size_t t = 0; t + 1 < rungs.size(); ++t) {
            auto [j1, k1] = rungs[t];
            auto [j2, k2] = rungs[t + 1];
            for (long j = j1; j < j2; ++j)
                sigma.cones.push_back(cone3(ladder_ray(L.v, j), ladder_ray(L.v, j + 1),
                                            ladder_ray(R.v, k1)));
            for (long k = k1; k < k2; ++k)
                sigma.cones.push_back(cone3(ladder_ray(L.v, j2), ladder_ray(R.v, k),
                                            ladder_ray(R.v, k + 1)));
        }
        sigma.cones.push_back(
            cone3(ladder_ray(L.v, L.a), ladder_ray(R.v, R.a), dpole));
        sigma.cones.push_back(
            cone3(ladder_ray(L.v, L.b), ladder_ray(R.v, R.b), upole));
    }

    SemistablePair out;
    out.sigma = std::move(sigma);
    out.sigma_prime = std::move(sigma_prime);
    out.p = p;
    out.profile = std::move(profile);
    out.dilation = m;
    WssReport rep = check_weakly_semistable(out.sigma, out.sigma_prime, out.p);
    if (!rep.ok)
        throw input_error("build_semistable_3to2: construction failed the checker: " +
                          rep.witness);
    return out;
}

TropicalCycle tripod_cycle(const SemistablePair& pair, const Tripod& t) {
    if (t.col < 0 || t.col >= int(pair.profile.size()))
        throw input_error("tripod_cycle: column out of range");
    const LadderColumn& col = pair.profile[t.col];
    if (t.j < col.a || t.j > col.b)
        throw input_error("tripod_cycle: center outside the column range");
    if (t.w <= 0) throw input_error("tripod_cycle: weight must be positive");
    bool low_in = t.j - 1 >= col.a;
    bool high_in = t.j + 1 <= col.b;
    IVec low = low_in ? ladder_ray(col.v, t.j - 1) : IVec{0, 0, -1};
    IVec high = high_in ? ladder_ray(col.v, t.j + 1) : IVec{0, 0, 1};
    std::vector<WCone> cones;
    cones.push_back({ray_cone(low), t.w});
    cones.push_back({ray_cone(high), t.w});
    Int center = low_in && high_in ? -2 * t.w : (low_in || high_in ? -t.w : Int(0));
    if (center != 0) cones.push_back({ray_cone(ladder_ray(col.v, t.j)), center});
    return make_cycle(3, 1, std::move(cones));
}

TripodWitness tripod_positivity_witness(const SemistablePair& pair,
                                        const std::vector<TripodTerm>& combo) {
    bool nonzero = false;
    for (const TripodTerm& t : combo)
        if (t.coeff != 0) nonzero = true;
    if (!nonzero) throw input_error("tripod_positivity_witness: trivial combination");
    Int pole_plus = 0, pole_minus = 0;
    std::map<std::pair<int, long>, Int> w;
    for (const TripodTerm& t : combo) {
        if (t.col < 0 || t.col >= int(pair.profile.size()))
            throw input_error("tripod_positivity_witness: column out of range");
        const LadderColumn& col = pair.profile[t.col];
        if (t.j < col.a || t.j > col.b)
            throw input_error("tripod_positivity_witness: center out of range");
        bool low_in = t.j - 1 >= col.a;
        bool high_in = t.j + 1 <= col.b;
        if (low_in)
            w[{t.col, t.j - 1}] += t.coeff;
        else
            pole_minus += t.coeff;
        if (high_in)
            w[{t.col, t.j + 1}] += t.coeff;
        else
            pole_plus += t.coeff;
        if (low_in && high_in)
            w[{t.col, t.j}] -= 2 * t.coeff;
        else if (low_in || high_in)
            w[{t.col, t.j}] -= t.coeff;
    }
    TripodWitness out;
    if (pole_plus > 0) {
        out.found = true;
        out.is_pole = true;
        out.ray1 = IVec{0, 0, 1};
        return out;
    }
    if (pole_minus > 0) {
        out.found = true;
        out.is_pole = true;
        out.ray1 = IVec{0, 0, -1};
        return out;
    }
    for (int col = 0; col < int(pair.profile.size()); ++col) {
        std::vector<long> pos;
        for (const auto& [key, weight] : w)
            if (key.first == col && weight > 0) pos.push_back(key.second);
        if (pos.size() >= 2) {
            out.found = true;
            out.ray1 = ladder_ray(pair.profile[col].v, pos[0]);
            out.ray2 = ladder_ray(pair.profile[col].v, pos[1]);
            return out;
        }
    }
    return out;  // found = false: would contradict the tripod lemma
}

IsotopyReport isotopy_report(const TropicalCycle& c_bullet, const TropicalCycle& c_0,
                             const ProjectionMap& p) {
    if (c_bullet.n != c_0.n || c_bullet.k != c_0.k)
        throw input_error("isotopy_report: cycles must share (n, k)");
    IsotopyReport rep;
    rep.pushforwards_equal = cycle_equal(pushforward(p.matrix, c_bullet),
                                         pushforward(p.matrix, c_0));
    rep.immersed = is_immersed(p, c_bullet).ok;
    rep.hypotheses_met = rep.pushforwards_equal && rep.immersed;
    rep.conclusion_holds = cycle_equal(c_bullet, c_0);
    rep.inconsistent = rep.hypotheses_met && !rep.conclusion_holds;
    return rep;
}

bool boundary_decomposition_check(const TropicalCycle& c_bullet,
                                  const TropicalCycle& c_0,
                                  const std::vector<TropicalCycle>& boundary) {
    if (c_bullet.n != c_0.n || c_bullet.k != c_0.k)
        throw input_error("boundary_decomposition_check: cycles must share (n, k)");
    TropicalCycle sum = c_0;
    for (const TropicalCycle& z : boundary) sum = add(sum, z);
    return cycle_equal(c_bullet, sum);
}

}  // namespace trop
