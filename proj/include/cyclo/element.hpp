#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/field.hpp"

namespace cyclo {

/// Exact cyclotomic integer in the power basis 1, xi, ..., xi^(phi-1).
/// Coefficient vectors are always fully reduced modulo the cyclotomic
/// polynomial, so equality is a plain vector comparison.
class CycloElem {
  public:
    CycloElem() = default;
    CycloElem(FieldPtr field, std::vector<Int> reduced_coeffs);

    static CycloElem zero(const FieldPtr& f);
    static CycloElem one(const FieldPtr& f);
    static CycloElem constant(const FieldPtr& f, Int value);

    const FieldPtr& field() const { return field_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const;  // no term above the constant

    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& rhs);
    CycloElem& operator-=(const CycloElem& rhs);
    CycloElem& operator*=(const CycloElem& rhs);

    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
    friend bool operator==(const CycloElem& a, const CycloElem& b);
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  private:
    FieldPtr field_;
    std::vector<Int> coeffs_;
};

/// Canonical representative of an integer polynomial modulo the cyclotomic
/// polynomial (exact remainder; the divisor is monic).
CycloElem reduce(const FieldPtr& f, std::vector<Int> poly);

/// sigma_k : xi -> xi^k.  Requires gcd(k, n) = 1.
CycloElem galois(const CycloElem& a, long k);

/// Complex conjugation xi -> xi^(-1), i.e. sigma_(n-1).
CycloElem conjugate(const CycloElem& a);

/// xi^(j mod n) in the power basis.
CycloElem root_power(const FieldPtr& f, long j);

/// omega^j where omega = exp(2*pi*i/N), N = lcm(2,n).  For even n this is
/// xi^j; for odd n the 2n-th roots of unity lie in the ring as -xi^((n+1)/2).
CycloElem root_of_unity(const FieldPtr& f, long j);

CycloElem elem_power(const CycloElem& a, unsigned long e);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

/// Parses the element grammar used by the CLI and the cache files: signed
/// integer-coefficient polynomial in `x` (denoting xi_n), terms `c`, `x`,
/// `c*x^k`, `x^k` joined by `+`/`-`, whitespace ignored, exponents reduced
/// mod n on parse.  Throws ParseError with the offending position.
CycloElem parse_element(const FieldPtr& f, std::string_view text);

/// Canonical output: ascending powers, zero terms omitted, "0" for zero.
/// parse_element(format_element(a)) == a.
std::string format_element(const CycloElem& a);

}  // namespace cyclo
