#include "tropws/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace trop {

namespace {

IVec primitive_or_zero(const IVec& v) {
    Int g = content(v);
    if (g == 0) return v;
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

using Bits = std::vector<std::uint64_t>;

Bits bits_make(size_t m) { return Bits((m + 63) / 64, 0); }
void bits_set(Bits& b, size_t i) { b[i / 64] |= (std::uint64_t(1) << (i % 64)); }
Bits bits_and(const Bits& a, const Bits& b) {
    Bits r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}
bool bits_subset(const Bits& a, const Bits& b) {  // a subset of b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

struct PointedRay {
    IVec v;
    Bits active;
};

// Motzkin-Burger double description for a pointed cone: the constraint list
// has full rank d. Returns the extreme rays.
std::vector<IVec> dd_pointed(int d, const std::vector<IVec>& cons) {
    size_t m = cons.size();
    // initial simplicial subset of d independent constraints
    std::vector<size_t> base;
    {
        IMat acc(0, d);
        int r = 0;
        for (size_t i = 0; i < m && r < d; ++i) {
            acc.append_row(cons[i]);
            int nr = rank_of(acc);
            if (nr > r) {
                base.push_back(i);
                r = nr;
            } else {
                acc = IMat::from_rows([&] {
                    std::vector<IVec> keep;
                    for (size_t k : base) keep.push_back(cons[k]);
                    return keep;
                }(), d);
            }
        }
        if (r < d) throw input_error("dd_pointed: constraints not full rank");
    }
    IMat B(0, d);
    for (size_t i : base) B.append_row(cons[i]);
    Int dB = det(B);
    // adjugate columns give the dual basis rays of {B x >= 0}
    std::vector<PointedRay> rays;
    for (int i = 0; i < d; ++i) {
        IVec r(d);
        for (int j = 0; j < d; ++j) {
            // cofactor expansion: adj(B)[j][i] = (-1)^{i+j} minor(i,j)
            IMat sub(d - 1, d - 1);
            for (int a = 0, aa = 0; a < d; ++a) {
                if (a == i) continue;
                for (int b = 0, bb = 0; b < d; ++b) {
                    if (b == j) continue;
                    sub.at(aa, bb) = B.at(a, b);
                    ++bb;
                }
                ++aa;
            }
            Int mi = (d >= 2) ? det(sub) : Int(1);
            if ((i + j) & 1) mi = -mi;
            r[j] = mi;
        }
        if (sgn(dB) < 0) r = neg(r);
        PointedRay pr{primitive_or_zero(r), bits_make(m)};
        for (size_t k = 0; k < base.size(); ++k)
            if (base[k] != base[i]) bits_set(pr.active, base[k]);
        rays.push_back(std::move(pr));
    }
    std::vector<bool> processed(m, false);
    for (size_t i : base) processed[i] = true;
    for (size_t ci = 0; ci < m; ++ci) {
        if (processed[ci]) continue;
        processed[ci] = true;
        const IVec& a = cons[ci];
        std::vector<int> plus, zero, minus;
        std::vector<Int> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            int s = sgn(val[i]);
            if (s > 0)
                plus.push_back(int(i));
            else if (s < 0)
                minus.push_back(int(i));
            else
                zero.push_back(int(i));
        }
        if (minus.empty()) {
            for (int i : zero) bits_set(rays[i].active, ci);
            continue;
        }
        std::vector<PointedRay> next;
        for (int i : plus) next.push_back(rays[i]);
        for (int i : zero) {
            bits_set(rays[i].active, ci);
            next.push_back(rays[i]);
        }
        for (int p : plus)
            for (int q : minus) {
                Bits t = bits_and(rays[p].active, rays[q].active);
                bool adjacent = true;
                for (size_t r = 0; r < rays.size(); ++r) {
                    if (int(r) == p || int(r) == q) continue;
                    if (bits_subset(t, rays[r].active)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                IVec w = sub(scaled(rays[q].v, val[p]), scaled(rays[p].v, val[q]));
                PointedRay nr{primitive_or_zero(w), t};
                bits_set(nr.active, ci);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
    }
    std::vector<IVec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    return out;
}

struct VRep {
    std::vector<IVec> rays;
    std::vector<IVec> lin;
};

// Generators of {x : eqs x = 0, ineqs x >= 0}. Rays come out as canonical
// representatives modulo the lineality space.
VRep dd_generators(int n, const std::vector<IVec>& ineqs,
                   const std::vector<IVec>& eqs) {
    IMat E = IMat::from_rows(eqs, n);
    IMat K = kernel_basis(E);  // d x n
    int d = K.rows();
    VRep out;
    if (d == 0) return out;
    std::vector<IVec> cons;
    for (const IVec& a : ineqs) {
        IVec ap = K.apply(a);  // constraint in K-coordinates
        if (!is_zero(ap)) cons.push_back(primitive_or_zero(ap));
    }
    IMat L = kernel_basis(IMat::from_rows(cons, d));  // lineality, K-coords
    Quotient q = quotient_by(L, d);
    int dp = q.proj.rows();
    std::vector<IVec> prays;
    if (dp > 0) {
        std::vector<IVec> qcons;
        for (const IVec& a : cons) {
            IVec aq = q.lift.apply(a);
            if (!is_zero(aq)) qcons.push_back(primitive_or_zero(aq));
        }
        if (qcons.empty()) {
            // cannot happen: quotient killed all constraints means full lineality
            throw input_error("dd_generators: internal inconsistency");
        }
        prays = dd_pointed(dp, qcons);
    }
    // map back: quotient coords -> K-coords -> ambient
    for (const IVec& r : prays) {
        IVec in_k(d);
        for (int j = 0; j < dp; ++j)
            for (int c = 0; c < d; ++c) in_k[c] += r[j] * q.lift.at(j, c);
        IVec amb(n);
        for (int c = 0; c < d; ++c)
            for (int j = 0; j < n; ++j) amb[j] += in_k[c] * K.at(c, j);
        out.rays.push_back(primitive_or_zero(amb));
    }
    // lineality back to ambient, saturated HNF basis
    std::vector<IVec> lin_amb;
    for (int i = 0; i < L.rows(); ++i) {
        IVec l = L.row(i);
        IVec amb(n);
        for (int c = 0; c < d; ++c)
            for (int j = 0; j < n; ++j) amb[j] += l[c] * K.at(c, j);
        lin_amb.push_back(amb);
    }
    if (!lin_amb.empty()) {
        HnfResult h = hermite_normal_form(IMat::from_rows(lin_amb, n));
        for (int i = 0; i < h.rank; ++i) out.lin.push_back(h.H.row(i));
    }
    std::sort(out.rays.begin(), out.rays.end(),
              [](const IVec& a, const IVec& b) { return lex_cmp(a, b) < 0; });
    return out;
}

Cone assemble(int n, VRep v, VRep dual) {
    Cone c;
    c.n = n;
    c.rays = std::move(v.rays);
    c.lin = std::move(v.lin);
    c.ineqs = std::move(dual.rays);
    c.eqs = std::move(dual.lin);
    std::vector<IVec> gens = c.rays;
    gens.insert(gens.end(), c.lin.begin(), c.lin.end());
    c.dim = gens.empty() ? 0 : rank_of_rows(gens, n);
    return c;
}

}  // namespace

std::string Cone::key() const {
    std::ostringstream os;
    os << n << "|L";
    for (const IVec& l : lin) os << '[' << vec_str(l) << ']';
    os << "|R";
    for (const IVec& r : rays) os << '[' << vec_str(r) << ']';
    return os.str();
}

Cone make_cone(int n, const std::vector<IVec>& ray_gens,
               const std::vector<IVec>& lin_gens) {
    // double description round trip gives the canonical minimal form
    VRep dual = dd_generators(n, ray_gens, lin_gens);
    VRep primal = dd_generators(n, dual.rays, dual.lin);
    return assemble(n, std::move(primal), std::move(dual));
}

Cone cone_from_hrep(int n, const std::vector<IVec>& ineqs,
                    const std::vector<IVec>& eqs) {
    VRep primal = dd_generators(n, ineqs, eqs);
    VRep dual = dd_generators(n, primal.rays, primal.lin);
    return assemble(n, std::move(primal), std::move(dual));
}

VRepLite vrep_of_hrep(int n, const std::vector<IVec>& ineqs,
                      const std::vector<IVec>& eqs) {
    VRep v = dd_generators(n, ineqs, eqs);
    return {std::move(v.rays), std::move(v.lin)};
}

HRepLite hrep_of_gens(int n, const std::vector<IVec>& rays,
                      const std::vector<IVec>& lin) {
    VRep dual = dd_generators(n, rays, lin);
    HRepLite h;
    h.ineqs = std::move(dual.rays);
    h.eqs = std::move(dual.lin);
    h.dim = n - int(h.eqs.size());
    return h;
}

bool hrep_contains(const HRepLite& h, const IVec& x) {
    for (const IVec& e : h.eqs)
        if (dot(e, x) != 0) return false;
    for (const IVec& a : h.ineqs)
        if (dot(a, x) < 0) return false;
    return true;
}

bool hrep_interior(const HRepLite& h, int n, const IVec& x) {
    if (h.dim != n) return false;
    for (const IVec& a : h.ineqs)
        if (dot(a, x) <= 0) return false;
    return true;
}

Cone full_space(int n) { return make_cone(n, {}, IMat::identity(n).row_list()); }

Cone origin_cone(int n) { return make_cone(n, {}, {}); }

Cone ray_cone(const IVec& generator) {
    return make_cone(int(generator.size()), {generator}, {});
}

bool cone_contains(const Cone& C, const IVec& x) {
    for (const IVec& e : C.eqs)
        if (dot(e, x) != 0) return false;
    for (const IVec& a : C.ineqs)
        if (dot(a, x) < 0) return false;
    return true;
}

bool cone_contains_cone(const Cone& C, const Cone& D) {
    for (const IVec& r : D.rays)
        if (!cone_contains(C, r)) return false;
    for (const IVec& l : D.lin)
        if (!cone_contains(C, l) || !cone_contains(C, neg(l))) return false;
    return true;
}

bool in_relative_interior(const Cone& C, const IVec& x) {
    for (const IVec& e : C.eqs)
        if (dot(e, x) != 0) return false;
    for (const IVec& a : C.ineqs)
        if (dot(a, x) <= 0) return false;
    return true;
}

Cone intersect_cones(const Cone& C, const Cone& D) {
    if (C.n != D.n) throw input_error("intersect_cones: ambient rank mismatch");
    std::vector<IVec> ineqs = C.ineqs;
    ineqs.insert(ineqs.end(), D.ineqs.begin(), D.ineqs.end());
    std::vector<IVec> eqs = C.eqs;
    eqs.insert(eqs.end(), D.eqs.begin(), D.eqs.end());
    return cone_from_hrep(C.n, ineqs, eqs);
}

Cone cone_sum(const Cone& A, const Cone& B) {
    if (A.n != B.n) throw input_error("cone_sum: ambient rank mismatch");
    std::vector<IVec> rays = A.rays;
    rays.insert(rays.end(), B.rays.begin(), B.rays.end());
    std::vector<IVec> lin = A.lin;
    lin.insert(lin.end(), B.lin.begin(), B.lin.end());
    return make_cone(A.n, rays, lin);
}

Cone cone_neg(const Cone& A) {
    std::vector<IVec> rays;
    for (const IVec& r : A.rays) rays.push_back(neg(r));
    return make_cone(A.n, rays, A.lin);
}

std::vector<Cone> cone_facets(const Cone& C) {
    std::vector<Cone> out;
    for (const IVec& a : C.ineqs) {
        std::vector<IVec> eqs = C.eqs;
        eqs.push_back(a);
        Cone f = cone_from_hrep(C.n, C.ineqs, eqs);
        if (f.dim == C.dim - 1) out.push_back(std::move(f));
    }
    return out;
}

std::vector<Cone> face_closure_of(const Cone& C) {
    std::map<std::string, Cone> seen;
    std::vector<Cone> queue{C};
    seen[C.key()] = C;
    while (!queue.empty()) {
        Cone cur = queue.back();
        queue.pop_back();
        for (Cone& f : cone_facets(cur)) {
            std::string k = f.key();
            if (seen.count(k)) continue;
            seen[k] = f;
            queue.push_back(std::move(f));
        }
    }
    std::vector<Cone> out;
    for (auto& [k, c] : seen) out.push_back(std::move(c));
    return out;
}

bool is_face_of(const Cone& F, const Cone& C) {
    if (!cone_contains_cone(C, F)) return false;
    // the face cut out by the inequalities of C tight on F must be F itself
    std::vector<IVec> eqs = C.eqs;
    for (const IVec& a : C.ineqs) {
        bool tight = true;
        for (const IVec& r : F.rays)
            if (dot(a, r) != 0) {
                tight = false;
                break;
            }
        if (tight)
            for (const IVec& l : F.lin)
                if (dot(a, l) != 0) {
                    tight = false;
                    break;
                }
        if (tight) eqs.push_back(a);
    }
    return cone_from_hrep(C.n, C.ineqs, eqs) == F;
}

Cone cone_image(const IMat& M, const Cone& C) {
    std::vector<IVec> rays, lin;
    for (const IVec& r : C.rays) rays.push_back(M.apply(r));
    for (const IVec& l : C.lin) lin.push_back(M.apply(l));
    return make_cone(M.rows(), rays, lin);
}

Cone cone_preimage(const IMat& M, const Cone& C) {
    if (M.rows() != C.n) throw input_error("cone_preimage: rank mismatch");
    IMat Mt = M.transpose();
    std::vector<IVec> ineqs, eqs;
    for (const IVec& a : C.ineqs) ineqs.push_back(Mt.apply(a));
    for (const IVec& e : C.eqs) eqs.push_back(Mt.apply(e));
    return cone_from_hrep(M.cols(), ineqs, eqs);
}

std::pair<Cone, Cone> split_cone(const Cone& C, const IVec& h) {
    std::vector<IVec> ip = C.ineqs, im = C.ineqs;
    ip.push_back(h);
    im.push_back(neg(h));
    return {cone_from_hrep(C.n, ip, C.eqs), cone_from_hrep(C.n, im, C.eqs)};
}

IMat span_lattice(const Cone& C) {
    std::vector<IVec> gens = C.rays;
    gens.insert(gens.end(), C.lin.begin(), C.lin.end());
    return row_saturation(IMat::from_rows(gens, C.n));
}

}  // namespace trop
