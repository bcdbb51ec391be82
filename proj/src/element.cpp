#include "cyclo/element.hpp"

#include <cctype>
#include <numeric>
#include <utility>

namespace cyclo {

namespace {

void require_same_field(const CycloElem& a, const CycloElem& b) {
    if (!a.field() || !b.field() || a.field()->n != b.field()->n)
        throw std::invalid_argument("elements belong to different modules");
}

}  // namespace

CycloElem::CycloElem(FieldPtr field, std::vector<Int> reduced_coeffs)
    : field_(std::move(field)), coeffs_(std::move(reduced_coeffs)) {
    if (!field_ || static_cast<int>(coeffs_.size()) != field_->euler_phi)
        throw std::invalid_argument("coefficient vector does not match the module rank");
}

CycloElem CycloElem::zero(const FieldPtr& f) {
    return CycloElem(f, std::vector<Int>(f->euler_phi, 0));
}

CycloElem CycloElem::one(const FieldPtr& f) { return constant(f, 1); }

CycloElem CycloElem::constant(const FieldPtr& f, Int value) {
    std::vector<Int> c(f->euler_phi, 0);
    c[0] = std::move(value);
    return CycloElem(f, std::move(c));
}

bool CycloElem::is_zero() const {
    for (const Int& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycloElem CycloElem::operator-() const {
    CycloElem r = *this;
    for (Int& c : r.coeffs_) c = -c;
    return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& rhs) {
    require_same_field(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& rhs) {
    require_same_field(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& rhs) {
    require_same_field(*this, rhs);
    const std::size_t na = coeffs_.size(), nb = rhs.coeffs_.size();
    std::vector<Int> prod(na + nb - 1, 0);
    for (std::size_t i = 0; i < na; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    *this = reduce(field_, std::move(prod));
    return *this;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    require_same_field(a, b);
    return a.coeffs_ == b.coeffs_;
}

CycloElem reduce(const FieldPtr& f, std::vector<Int> poly) {
    const int phi = f->euler_phi;
    const std::vector<Int>& mod = f->cyclo_poly;
    for (int i = static_cast<int>(poly.size()) - 1; i >= phi; --i) {
        if (poly[i] == 0) continue;
        Int c = poly[i];
        for (int j = 0; j <= phi; ++j) poly[i - phi + j] -= c * mod[j];
    }
    poly.resize(phi, 0);
    return CycloElem(f, std::move(poly));
}

CycloElem galois(const CycloElem& a, long k) {
    const FieldPtr& f = a.field();
    const long n = f->n;
    k %= n;
    if (k < 0) k += n;
    if (std::gcd(k, n) != 1)
        throw std::invalid_argument("galois exponent " + std::to_string(k) +
                                    " is not coprime to n = " + std::to_string(n));
    std::vector<Int> out(n, 0);
    for (int i = 0; i < f->euler_phi; ++i) {
        if (a.coeffs()[i] == 0) continue;
        out[(static_cast<long>(i) * k) % n] += a.coeffs()[i];
    }
    return reduce(f, std::move(out));
}

CycloElem conjugate(const CycloElem& a) { return galois(a, a.field()->n - 1); }

CycloElem root_power(const FieldPtr& f, long j) {
    const long n = f->n;
    j %= n;
    if (j < 0) j += n;
    std::vector<Int> v(j + 1, 0);
    v[j] = 1;
    return reduce(f, std::move(v));
}

CycloElem root_of_unity(const FieldPtr& f, long j) {
    const long N = f->point_group_order_half;
    j %= N;
    if (j < 0) j += N;
    if (f->n % 2 == 0) return root_power(f, j);
    // omega = exp(pi*i/n) = -xi^((n+1)/2)
    CycloElem r = root_power(f, j * ((f->n + 1) / 2));
    return (j % 2 == 0) ? r : -r;
}

CycloElem elem_power(const CycloElem& a, unsigned long e) {
    CycloElem acc = CycloElem::one(a.field());
    CycloElem base = a;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

struct Parser {
    const FieldPtr& f;
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }

    Int read_integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected a digit", i);
        return Int(std::string(s.substr(start, i - start)));
    }

    // One term: [int] [* ] [x [^ int]]
    void read_term(std::vector<Int>& acc, bool negate) {
        Int coeff = 1;
        bool saw_coeff = false;
        skip_ws();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = read_integer();
            saw_coeff = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            if (!saw_coeff) throw ParseError("'*' without a coefficient", i);
            ++i;
            skip_ws();
            if (i >= s.size() || s[i] != 'x') throw ParseError("expected 'x' after '*'", i);
        }
        long exponent = 0;
        skip_ws();
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exponent = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                Int e = read_integer();
                exponent = mpz_class(e % f->n).get_si();
            }
        } else if (!saw_coeff) {
            throw ParseError("expected a term", i);
        }
        if (negate) coeff = -coeff;
        acc[exponent] += coeff;
    }
};

}  // namespace

CycloElem parse_element(const FieldPtr& f, std::string_view text) {
    Parser p{f, text};
    std::vector<Int> acc(f->n, 0);
    if (p.eof()) throw ParseError("empty input", 0);
    bool negate = false;
    if (p.peek() == '+' || p.peek() == '-') {
        negate = (p.peek() == '-');
        ++p.i;
    }
    p.read_term(acc, negate);
    while (!p.eof()) {
        char c = p.peek();
        if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", p.i);
        ++p.i;
        p.read_term(acc, c == '-');
    }
    return reduce(f, std::move(acc));
}

std::string format_element(const CycloElem& a) {
    std::string out;
    for (int i = 0; i < a.field()->euler_phi; ++i) {
        const Int& c = a.coeffs()[i];
        if (c == 0) continue;
        Int abs_c = abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += (c < 0) ? '-' : '+';
        }
        if (i == 0) {
            out += abs_c.get_str();
        } else {
            if (abs_c != 1) {
                out += abs_c.get_str();
                out += '*';
            }
            out += 'x';
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace cyclo
