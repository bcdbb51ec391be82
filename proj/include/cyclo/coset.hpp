#pragma once

#include <optional>
#include <span>

#include "cyclo/ideal.hpp"
#include "cyclo/pointgroup.hpp"

namespace cyclo {

/// Dense integer matrix, row-major.  Sizes here are at most 24x24; exactness
/// matters, speed does not.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMat identity(int d);
    IntMat mul(const IntMat& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;
    Int det() const;  // by fraction-free elimination on a copy
};

/// U * M * V = diag(d1, ..., dphi) with d1 | d2 | ... and U, V unimodular.
struct SmithForm {
    IntMat U, Uinv, V;
    std::vector<Int> diag;
};

SmithForm smith_normal_form(const IntMat& m);

/// Smith-normal-form labelling of the cosets of (q) in the module, realised
/// as the sublattice of Z^phi spanned by the columns q*xi^i.  This is the
/// independent oracle: everything here works by direct coset computation,
/// never through the norm/divisibility layer it is used to check.
class CosetTable {
  public:
    explicit CosetTable(const CycloElem& q);

    const FieldPtr& field() const { return field_; }
    const CycloElem& generator() const { return gen_; }
    const IntMat& mult_matrix() const { return mult_; }
    const SmithForm& smith() const { return snf_; }
    const Int& index() const { return index_; }

    Int label(const std::vector<Int>& coeffs) const;
    Int label(const CycloElem& x) const;
    /// Canonical representative of the coset with the given label.
    std::vector<Int> representative(const Int& lab) const;

  private:
    FieldPtr field_;
    CycloElem gen_;
    IntMat mult_;
    SmithForm snf_;
    Int index_;
};

/// The permutation of coset labels induced by a point operation, when the
/// operation maps cosets to cosets; absence otherwise.  Well-definedness is
/// established by checking the operation on the lattice basis and re-checked
/// on a second, randomly shifted representative set.
std::optional<std::vector<long>> verify_colour_action(const CosetTable& table,
                                                      const PointOp& op);

/// G iff conjugation induces a permutation (rotations always do).
HKind brute_force_H(const CosetTable& table);

/// All point operations inducing the identity permutation.
PointGroupDescriptor brute_force_K(const CosetTable& table);

/// pi_(h o g) = pi_h o pi_g on the sampled operations; every sampled
/// operation must admit a permutation.
bool homomorphism_spot_check(const CosetTable& table, std::span<const PointOp> ops);

}  // namespace cyclo
