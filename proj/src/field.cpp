#include "cyclo/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclo {

const std::array<int, 29> kClassNumberOneIndices = {
    3,  4,  5,  7,  8,  9,  11, 12, 13, 15, 16, 17, 19, 20, 21,
    24, 25, 27, 28, 32, 33, 35, 36, 40, 44, 45, 48, 60, 84};

bool is_class_number_one_index(int n) {
    return std::find(kClassNumberOneIndices.begin(), kClassNumberOneIndices.end(), n) !=
           kClassNumberOneIndices.end();
}

int euler_phi_of(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// x^d - 1 as a coefficient vector.
std::vector<Int> power_minus_one(int d) {
    std::vector<Int> v(d + 1, 0);
    v[0] = -1;
    v[d] = 1;
    return v;
}

// Exact division of integer polynomials; the divisor must be monic and the
// remainder must vanish.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd) throw std::logic_error("divide_exact: degree underflow");
    std::vector<Int> quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        Int c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

std::vector<Int> cyclotomic_poly(int n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built recursively.
    if (n == 1) {
        return {-1, 1};
    }
    std::vector<Int> num = power_minus_one(n);
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = divide_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

}  // namespace

FieldPtr build_field(int n) {
    if (n < 3) {
        throw std::invalid_argument(
            "n = " + std::to_string(n) +
            " is not a planar module index; the smallest admissible index is n = 3");
    }
    if (n % 4 == 2) {
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " is excluded by the uniqueness convention M_n = M_2n "
                                    "for odd n; use n = " +
                                    std::to_string(n / 2));
    }
    auto f = std::make_shared<FieldContext>();
    f->n = n;
    f->euler_phi = euler_phi_of(n);
    f->cyclo_poly = cyclotomic_poly(n);
    f->galois_exponents.reserve(f->euler_phi);
    for (int k = 1; k < n; ++k) {
        if (std::gcd(k, n) == 1) f->galois_exponents.push_back(k);
    }
    f->point_group_order_half = std::lcm(2, n);
    f->class_number_one = is_class_number_one_index(n);

    if (static_cast<int>(f->galois_exponents.size()) != f->euler_phi ||
        static_cast<int>(f->cyclo_poly.size()) != f->euler_phi + 1 ||
        f->cyclo_poly.back() != 1) {
        throw std::logic_error("build_field: inconsistent context");
    }
    return f;
}

}  // namespace cyclo
