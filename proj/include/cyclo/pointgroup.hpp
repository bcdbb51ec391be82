#pragma once

#include <string>
#include <vector>

#include "cyclo/element.hpp"

namespace cyclo {

/// One element of D_N acting on the module: x -> omega^j * x (rotation) or
/// x -> omega^j * conj(x) (reflection), omega = exp(2*pi*i/N).
struct PointOp {
    bool reflection = false;
    int j = 0;  // exponent of omega, in [0, N)
};

CycloElem apply_point_op(const CycloElem& x, const PointOp& op);
PointOp compose_ops(const FieldPtr& f, const PointOp& a, const PointOp& b);
std::vector<PointOp> all_point_ops(const FieldPtr& f);

enum class HKind { G, Gprime };

inline const char* h_kind_name(HKind h) { return h == HKind::G ? "G" : "G'"; }

/// The point-group part P_n of K = T_(q) x| P_n, as a subgroup of D_N.
struct PointGroupDescriptor {
    int rotation_order = 1;            // size of the rotation subgroup
    bool reflection_present = false;
    std::vector<int> reflection_axes;  // omega exponents j of the member reflections

    int order() const { return reflection_present ? 2 * rotation_order : rotation_order; }
    std::string kind() const {
        return (reflection_present ? "D" : "C") + std::to_string(rotation_order);
    }
    bool trivial() const { return rotation_order == 1 && !reflection_present; }

    friend bool operator==(const PointGroupDescriptor& a, const PointGroupDescriptor& b) {
        return a.rotation_order == b.rotation_order &&
               a.reflection_present == b.reflection_present &&
               a.reflection_axes == b.reflection_axes;
    }
};

}  // namespace cyclo
