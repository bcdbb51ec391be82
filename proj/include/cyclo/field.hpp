#pragma once

#include <gmpxx.h>

#include <array>
#include <memory>
#include <vector>

namespace cyclo {

using Int = mpz_class;

/// Precomputed data for one ring Z[xi_n].  Immutable after construction and
/// safe to share read-only across threads; every operation in the library is
/// a pure function over these values.
struct FieldContext {
    int n = 0;
    int euler_phi = 0;
    std::vector<Int> cyclo_poly;        // n-th cyclotomic polynomial, monic, degree euler_phi
    std::vector<int> galois_exponents;  // ascending list of k in [1,n) with gcd(k,n)=1
    int point_group_order_half = 0;     // N = lcm(2,n); the point group of the module is D_N
    bool class_number_one = false;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// The 29 module indices whose ring of cyclotomic integers is a PID.
/// Indices n = 2 (mod 4) are excluded by the uniqueness convention
/// M_n = M_2n for odd n.
extern const std::array<int, 29> kClassNumberOneIndices;

bool is_class_number_one_index(int n);

int euler_phi_of(int n);

/// Builds the context for Z[xi_n].  Rejects n < 3 and n = 2 (mod 4) with a
/// hint naming the admissible index.  Arithmetic works for any valid n;
/// colouring-level operations additionally require class_number_one.
FieldPtr build_field(int n);

}  // namespace cyclo
