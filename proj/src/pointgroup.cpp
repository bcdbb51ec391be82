#include "cyclo/pointgroup.hpp"

namespace cyclo {

CycloElem apply_point_op(const CycloElem& x, const PointOp& op) {
    const FieldPtr& f = x.field();
    CycloElem y = op.reflection ? conjugate(x) : x;
    return y * root_of_unity(f, op.j);
}

PointOp compose_ops(const FieldPtr& f, const PointOp& a, const PointOp& b) {
    // (a o b)(x) = a(b(x)); conjugation flips the sign of b's exponent.
    const int N = f->point_group_order_half;
    int j = a.reflection ? a.j - b.j : a.j + b.j;
    j %= N;
    if (j < 0) j += N;
    return PointOp{a.reflection != b.reflection, j};
}

std::vector<PointOp> all_point_ops(const FieldPtr& f) {
    std::vector<PointOp> ops;
    const int N = f->point_group_order_half;
    ops.reserve(2 * N);
    for (int j = 0; j < N; ++j) ops.push_back({false, j});
    for (int j = 0; j < N; ++j) ops.push_back({true, j});
    return ops;
}

}  // namespace cyclo
