#include "tropws/projection.hpp"

namespace trop {

ProjectionMap make_projection(const IMat& m) {
    SnfResult s = smith_normal_form(m);
    if (int(s.divisors.size()) != m.rows())
        throw input_error("projection: matrix has dependent rows");
    for (const Int& d : s.divisors)
        if (d != 1)
            throw input_error("projection: image lattice is a proper sublattice");
    ProjectionMap p;
    p.matrix = m;
    p.kernel = kernel_basis(m);
    p.r = m.rows();
    p.n = m.cols();
    return p;
}

ProjectionMap projection_from_kernel(const std::vector<IVec>& ker_gens, int n) {
    IMat sat = row_saturation(IMat::from_rows(ker_gens, n));
    Quotient q = quotient_by(sat, n);
    return make_projection(q.proj);
}

}  // namespace trop
