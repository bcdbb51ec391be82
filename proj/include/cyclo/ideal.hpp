#pragma once

#include <optional>

#include "cyclo/element.hpp"

namespace cyclo {

/// Algebraic norm: product of all Galois conjugates.  Always a rational
/// integer; for nonzero a it is positive (the field is totally imaginary)
/// and equals the index [M_n : (a)].
Int norm(const CycloElem& a);

bool is_unit(const CycloElem& a);

/// Precomputed divisibility tester for one nonzero divisor q.  Holding the
/// cofactor prod_{k != 1} sigma_k(q) makes repeated membership tests cheap;
/// b lies in (q) iff every coefficient of b * cofactor is divisible by the
/// norm.
class MembershipTester {
  public:
    explicit MembershipTester(const CycloElem& q);

    const Int& norm_abs() const { return norm_abs_; }
    bool contains(const CycloElem& b) const;
    std::optional<CycloElem> quotient(const CycloElem& b) const;

  private:
    CycloElem cofactor_;
    Int norm_signed_;
    Int norm_abs_;
};

/// Exact quotient b/a when b lies in (a); a must be nonzero.
std::optional<CycloElem> divides(const CycloElem& a, const CycloElem& b);

/// (a) == (b), i.e. each generator divides the other.
bool ideal_equal(const CycloElem& a, const CycloElem& b);

/// (q) == (conj q); equivalently q = unit * real * product of ramified
/// factors.  Balanced generators are exactly the perfect colourings.
bool is_balanced(const CycloElem& q);

/// 1 - xi_n^(n/p^t) where p^t is the largest power of p dividing n: the
/// generator whose powers exhaust the ramified part of (p).
CycloElem ramified_generator(const FieldPtr& f, long p);

/// Lexicographically least coefficient vector among the 2n unit multiples
/// +-xi^k * q; the deterministic representative used in atlases and caches.
CycloElem canonical_associate(const CycloElem& q);

/// A principal ideal with its cached index.
struct IdealSpec {
    CycloElem generator;
    Int norm_abs;

    explicit IdealSpec(CycloElem g);
};

}  // namespace cyclo
