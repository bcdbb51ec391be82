#include "cyclo/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo {

Int norm(const CycloElem& a) {
    if (a.is_zero()) return 0;
    const FieldPtr& f = a.field();
    CycloElem acc = CycloElem::one(f);
    for (int k : f->galois_exponents) acc *= galois(a, k);
    if (!acc.is_rational())
        throw std::logic_error("norm: conjugate product is not rational");
    Int v = acc.coeffs()[0];
    // phi(n) is even for n >= 3, so nonzero norms are positive.
    if (v <= 0) throw std::logic_error("norm: nonpositive value for nonzero element");
    return v;
}

bool is_unit(const CycloElem& a) {
    if (a.is_zero()) return false;
    return norm(a) == 1;
}

MembershipTester::MembershipTester(const CycloElem& q) {
    if (q.is_zero()) throw std::invalid_argument("zero generator");
    const FieldPtr& f = q.field();
    CycloElem cof = CycloElem::one(f);
    for (int k : f->galois_exponents) {
        if (k == 1) continue;
        cof *= galois(q, k);
    }
    CycloElem full = cof * q;
    if (!full.is_rational()) throw std::logic_error("norm cofactor product not rational");
    cofactor_ = std::move(cof);
    norm_signed_ = full.coeffs()[0];
    norm_abs_ = abs(norm_signed_);
}

bool MembershipTester::contains(const CycloElem& b) const {
    CycloElem num = b * cofactor_;
    for (const Int& c : num.coeffs()) {
        if (!mpz_divisible_p(c.get_mpz_t(), norm_signed_.get_mpz_t())) return false;
    }
    return true;
}

std::optional<CycloElem> MembershipTester::quotient(const CycloElem& b) const {
    CycloElem num = b * cofactor_;
    std::vector<Int> out(num.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Int& c = num.coeffs()[i];
        if (!mpz_divisible_p(c.get_mpz_t(), norm_signed_.get_mpz_t())) return std::nullopt;
        out[i] = c / norm_signed_;
    }
    return CycloElem(b.field(), std::move(out));
}

std::optional<CycloElem> divides(const CycloElem& a, const CycloElem& b) {
    return MembershipTester(a).quotient(b);
}

bool ideal_equal(const CycloElem& a, const CycloElem& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("zero generator");
    return MembershipTester(a).contains(b) && MembershipTester(b).contains(a);
}

bool is_balanced(const CycloElem& q) {
    if (q.is_zero()) throw std::invalid_argument("zero generator");
    return ideal_equal(q, conjugate(q));
}

CycloElem ramified_generator(const FieldPtr& f, long p) {
    if (p < 2 || f->n % p != 0)
        throw std::invalid_argument("p = " + std::to_string(p) + " does not divide n = " +
                                    std::to_string(f->n));
    long pt = 1;
    long n = f->n;
    while (n % p == 0) {
        pt *= p;
        n /= p;
    }
    return CycloElem::one(f) - root_power(f, f->n / pt);
}

CycloElem canonical_associate(const CycloElem& q) {
    const FieldPtr& f = q.field();
    CycloElem best = q;
    auto consider = [&best](const CycloElem& c) {
        if (std::lexicographical_compare(c.coeffs().begin(), c.coeffs().end(),
                                         best.coeffs().begin(), best.coeffs().end()))
            best = c;
    };
    CycloElem cur = q;
    for (int k = 0; k < f->n; ++k) {
        if (k > 0) cur *= root_power(f, 1);
        consider(cur);
        consider(-cur);
    }
    return best;
}

IdealSpec::IdealSpec(CycloElem g) : generator(std::move(g)), norm_abs(norm(generator)) {
    if (generator.is_zero()) throw std::invalid_argument("zero generator");
}

}  // namespace cyclo
