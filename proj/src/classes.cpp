#include "tropws/classes.hpp"

namespace trop {

TropicalCycle TropicalClass::piece(int j) const {
    auto it = pieces.find(j);
    if (it != pieces.end()) return it->second;
    return zero_cycle(n, n - j);
}

void TropicalClass::set_piece(int j, TropicalCycle c) {
    if (j < 0 || j > n) throw input_error("class piece: codimension out of range");
    if (!c.is_zero() && c.k != n - j)
        throw input_error("class piece: cycle dimension does not match codimension");
    if (c.is_zero())
        pieces.erase(j);
    else
        pieces[j] = std::move(c);
}

bool TropicalClass::is_zero() const {
    for (const auto& [j, c] : pieces)
        if (!c.is_zero()) return false;
    return true;
}

TropicalCycle TropGrading::piece(int d) const {
    auto it = pieces.find(d);
    if (it != pieces.end()) return it->second;
    return zero_cycle(n, d);
}

void TropGrading::set_piece(int d, TropicalCycle c) {
    if (d < 0 || d > n) throw input_error("grading piece: dimension out of range");
    if (!c.is_zero() && c.k != d)
        throw input_error("grading piece: cycle dimension mismatch");
    if (c.is_zero())
        pieces.erase(d);
    else
        pieces[d] = std::move(c);
}

TropicalClass torus_class(int n) {
    TropicalClass a;
    a.n = n;
    a.dim_U = n;
    a.set_piece(0, torus_cycle(n));
    return a;
}

TropicalClass class_mul(const TropicalClass& a, const TropicalClass& b) {
    if (a.n != b.n) throw input_error("class_mul: ambient rank mismatch");
    TropicalClass out;
    out.n = a.n;
    if (a.dim_U && b.dim_U) out.dim_U = *a.dim_U + *b.dim_U - a.n;
    for (int k = 0; k <= a.n; ++k) {
        TropicalCycle acc = zero_cycle(a.n, a.n - k);
        for (const auto& [i, ca] : a.pieces) {
            int j = k - i;
            auto it = b.pieces.find(j);
            if (it == b.pieces.end()) continue;
            acc = add(acc, stable_intersection(ca, it->second));
        }
        out.set_piece(k, acc);
    }
    return out;
}

TropicalClass class_cross(const TropicalClass& a, const TropicalClass& b) {
    TropicalClass out;
    out.n = a.n + b.n;
    if (a.dim_U && b.dim_U) out.dim_U = *a.dim_U + *b.dim_U;
    for (const auto& [i, ca] : a.pieces)
        for (const auto& [j, cb] : b.pieces) {
            TropicalCycle prod = cross_product(ca, cb);
            TropicalCycle prev = out.piece(i + j);
            out.set_piece(i + j, prev.is_zero() ? prod : add(prev, prod));
        }
    return out;
}

TropicalClass class_pushforward(const ProjectionMap& p, const TropicalClass& a) {
    if (p.n != a.n) throw input_error("class_pushforward: ambient rank mismatch");
    TropicalClass out;
    out.n = p.r;
    for (const auto& [j, c] : a.pieces) {
        int d = a.n - j;  // dimension of the piece
        if (d > p.r) continue;  // fibers collapse, pushforward is zero
        TropicalCycle img = pushforward(p.matrix, c);
        if (img.is_zero()) continue;
        int jt = p.r - d;
        TropicalCycle prev = out.piece(jt);
        out.set_piece(jt, prev.is_zero() ? img : add(prev, img));
    }
    return out;
}

TropGrading grading_convert(const TropicalClass& a) {
    if (!a.dim_U) throw input_error("grading_convert: dim_U not declared");
    TropGrading g;
    g.n = a.n;
    g.dim_U = *a.dim_U;
    for (const auto& [j, c] : a.pieces) {
        int d = a.n - j;
        int s = (g.dim_U - d) & 1 ? -1 : 1;
        g.set_piece(d, scale(c, s));
    }
    return g;
}

TropicalClass grading_convert_back(const TropGrading& g) {
    TropicalClass a;
    a.n = g.n;
    a.dim_U = g.dim_U;
    for (const auto& [d, c] : g.pieces) {
        int s = (g.dim_U - d) & 1 ? -1 : 1;
        a.set_piece(g.n - d, scale(c, s));
    }
    return a;
}

TropicalClass complete_intersection_class(const LatticePolytope& A, int k, int n) {
    if (A.empty()) throw input_error("complete_intersection_class: empty support");
    if (k < 1 || k > n) throw input_error("complete_intersection_class: need 1 <= k <= n");
    TropicalCycle T = trop_of_polytope(A);
    TropicalClass out;
    out.n = n;
    out.dim_U = n - k;
    // (T/(1+T))^k: piece at codim j is (-1)^{j-k} binom(j-1, j-k) T^j
    TropicalCycle power = T;  // T^1
    for (int j = 1; j <= n; ++j) {
        if (j > 1) power = stable_intersection(power, T);
        if (j < k || power.is_zero()) continue;
        Int coef = binomial(j - 1, j - k);
        if ((j - k) & 1) coef = -coef;
        out.set_piece(j, scale(power, coef));
        if (power.is_zero()) break;
    }
    return out;
}

TropicalClass hypersurface_class(const LatticePolytope& A, int n) {
    return complete_intersection_class(A, 1, n);
}

Int euler_characteristic(const TropicalClass& a) {
    return a.piece(a.n).total_weight();
}

TropicalCycle euler_discriminant_fan(const TropicalClass& a, const ProjectionMap& m) {
    if (m.n != a.n) throw input_error("euler_discriminant_fan: ambient rank mismatch");
    int k = m.r - 1;
    if (k < 0 || k > a.n) throw input_error("euler_discriminant_fan: bad target rank");
    return pushforward(m.matrix, a.piece(k));
}

TropicalClass singular_combine(const TropicalClass& s_class,
                               const TropGrading& trop_primes, int dim_U) {
    int n = s_class.n;
    if (trop_primes.n != n + 1)
        throw input_error("singular_combine: grading must live in rank n+1");
    // coordinate projection forgetting the last coordinate
    IMat p(n, n + 1);
    for (int i = 0; i < n; ++i) p.at(i, i) = 1;
    TropicalClass out;
    out.n = n;
    out.dim_U = dim_U;
    // sign (-1)^{dim U + k - n}: the class bridge applied to the smooth
    // graph lift, so that the combined class restricts to the plain sign
    // conversion when the singular part is empty
    for (int k = 0; k <= n; ++k) {
        TropicalCycle term = pushforward(p, trop_primes.piece(n - k));
        if ((dim_U + k - n) & 1) term = scale(term, -1);
        TropicalCycle total = add(s_class.piece(k), term);
        out.set_piece(k, total);
    }
    return out;
}

TropGrading intersection_class(const TropicalClass& a, const TropicalClass& b) {
    if (a.n != b.n) throw input_error("intersection_class: ambient rank mismatch");
    if (!a.dim_U || !b.dim_U)
        throw input_error("intersection_class: both classes need dim_U");
    TropicalClass prod = class_mul(a, b);
    return grading_convert(prod);
}

int invariance_rank(const TropGrading& g) {
    for (int k = 0; k <= g.n; ++k) {
        auto it = g.pieces.find(k);
        if (it != g.pieces.end() && !it->second.is_zero()) return k;
    }
    return g.n;
}

AdmissibilityReport admissibility_check(const MonomialSupport& A, const TropGrading& g) {
    if (A.n != g.n) throw input_error("admissibility_check: ambient rank mismatch");
    std::vector<IVec> pts = A.points;
    pts.push_back(IVec(A.n));  // adjoin the origin
    LatticePolytope P0 = make_polytope(A.n, pts);
    AdmissibilityReport rep;
    IVec origin(A.n);
    for (const FaceData& fd : face_normal_data(P0)) {
        if (!polytope_contains(fd.face_vertices, origin)) continue;
        TropicalCycle piece = g.piece(fd.face_dim);
        for (const WCone& wc : piece.cones) {
            Cone meet = intersect_cones(fd.normal_cone, wc.cone);
            if (meet.dim > 0) {
                IVec witness = meet.rays.empty()
                                   ? (meet.lin.empty() ? IVec(A.n) : meet.lin[0])
                                   : meet.rays[0];
                rep.admissible = false;
                rep.violations.push_back({fd.face_vertices, witness});
            }
        }
    }
    return rep;
}

Int critical_count(const MonomialSupport& A, const TropGrading& g) {
    AdmissibilityReport rep = admissibility_check(A, g);
    if (!rep.admissible) throw inadmissible_error(std::move(rep));
    LatticePolytope convA = make_polytope(A.n, A.points);
    TropicalCycle tropA = trop_of_polytope(convA);
    Int count = g.piece(0).total_weight();
    TropicalCycle power = torus_cycle(A.n);
    for (int k = 1; k <= g.dim_U; ++k) {
        power = stable_intersection(power, tropA);
        if (power.is_zero()) break;
        TropicalCycle piece = g.piece(k);
        if (piece.is_zero()) continue;
        count += intersection_number(power, piece);
    }
    return count;
}

TropicalCycle csm_fan(const TropGrading& g, int k) {
    int s = (g.dim_U - k) & 1 ? -1 : 1;
    return scale(g.piece(k), s);
}

}  // namespace trop
