#include "cyclo/coset.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cyclo {

IntMat IntMat::identity(int d) {
    IntMat m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& rhs) const {
    if (cols != rhs.rows) throw std::logic_error("matrix shape mismatch");
    IntMat out(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::logic_error("vector size mismatch");
    std::vector<Int> out(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

Int IntMat::det() const {
    // Bareiss fraction-free elimination.
    if (rows != cols) throw std::logic_error("det of non-square matrix");
    IntMat m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < rows - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < rows; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < cols; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < rows; ++i)
            for (int j = k + 1; j < cols; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(rows - 1, rows - 1) : -m.at(rows - 1, rows - 1);
}

namespace {

struct SnfWorker {
    IntMat a, u, uinv, v;
    int dim;

    explicit SnfWorker(const IntMat& m)
        : a(m),
          u(IntMat::identity(m.rows)),
          uinv(IntMat::identity(m.rows)),
          v(IntMat::identity(m.cols)),
          dim(m.rows) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < dim; ++c) {
            std::swap(a.at(i, c), a.at(j, c));
            std::swap(u.at(i, c), u.at(j, c));
            std::swap(uinv.at(c, i), uinv.at(c, j));
        }
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < dim; ++r) {
            std::swap(a.at(r, i), a.at(r, j));
            std::swap(v.at(r, i), v.at(r, j));
        }
    }
    // row_i -= f * row_t
    void add_row(int i, int t, const Int& f) {
        if (f == 0) return;
        for (int c = 0; c < dim; ++c) {
            a.at(i, c) -= f * a.at(t, c);
            u.at(i, c) -= f * u.at(t, c);
        }
        for (int r = 0; r < dim; ++r) uinv.at(r, t) += f * uinv.at(r, i);
    }
    // col_j -= f * col_t
    void add_col(int j, int t, const Int& f) {
        if (f == 0) return;
        for (int r = 0; r < dim; ++r) {
            a.at(r, j) -= f * a.at(r, t);
            v.at(r, j) -= f * v.at(r, t);
        }
    }
    void negate_row(int i) {
        for (int c = 0; c < dim; ++c) {
            a.at(i, c) = -a.at(i, c);
            u.at(i, c) = -u.at(i, c);
            uinv.at(c, i) = -uinv.at(c, i);
        }
    }

    // Smallest nonzero |entry| in the trailing submatrix.
    bool find_pivot(int t, int& pi, int& pj) {
        bool found = false;
        Int best;
        for (int i = t; i < dim; ++i)
            for (int j = t; j < dim; ++j) {
                if (a.at(i, j) == 0) continue;
                Int m = abs(a.at(i, j));
                if (!found || m < best) {
                    best = m;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    void run() {
        for (int t = 0; t < dim; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj))
                throw std::invalid_argument("singular multiplication matrix");
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < dim; ++i) {
                    if (a.at(i, t) == 0) continue;
                    Int f;
                    mpz_fdiv_q(f.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                    add_row(i, t, f);
                    if (a.at(i, t) != 0) {
                        swap_rows(t, i);
                        clean = false;
                    }
                }
                for (int j = t + 1; j < dim; ++j) {
                    if (a.at(t, j) == 0) continue;
                    Int f;
                    mpz_fdiv_q(f.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                    add_col(j, t, f);
                    if (a.at(t, j) != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
                if (!clean) continue;
                // Pivot must divide the trailing block for the diagonal chain.
                bool divisible = true;
                for (int i = t + 1; i < dim && divisible; ++i)
                    for (int j = t + 1; j < dim && divisible; ++j)
                        if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(t, t).get_mpz_t())) {
                            add_row(t, i, Int(-1));  // row_t += row_i
                            divisible = false;
                        }
                if (divisible) break;
            }
            if (a.at(t, t) < 0) negate_row(t);
        }
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("smith_normal_form: square input only");
    SnfWorker w(m);
    w.run();
    SmithForm out;
    out.U = std::move(w.u);
    out.Uinv = std::move(w.uinv);
    out.V = std::move(w.v);
    out.diag.resize(m.rows);
    for (int i = 0; i < m.rows; ++i) out.diag[i] = w.a.at(i, i);
    return out;
}

CosetTable::CosetTable(const CycloElem& q) : field_(q.field()), gen_(q) {
    if (q.is_zero()) throw std::invalid_argument("zero generator");
    const int phi = field_->euler_phi;
    mult_ = IntMat(phi, phi);
    for (int i = 0; i < phi; ++i) {
        CycloElem col = q * root_power(field_, i);
        for (int r = 0; r < phi; ++r) mult_.at(r, i) = col.coeffs()[r];
    }
    snf_ = smith_normal_form(mult_);
    index_ = 1;
    for (const Int& d : snf_.diag) index_ *= d;
}

Int CosetTable::label(const std::vector<Int>& coeffs) const {
    std::vector<Int> y = snf_.U.apply(coeffs);
    Int lab = 0;
    for (int i = static_cast<int>(y.size()) - 1; i >= 0; --i) {
        Int digit;
        mpz_fdiv_r(digit.get_mpz_t(), y[i].get_mpz_t(), snf_.diag[i].get_mpz_t());
        lab = lab * snf_.diag[i] + digit;
    }
    return lab;
}

Int CosetTable::label(const CycloElem& x) const { return label(x.coeffs()); }

std::vector<Int> CosetTable::representative(const Int& lab) const {
    std::vector<Int> digits(snf_.diag.size());
    Int rest = lab;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        Int q;
        mpz_fdiv_qr(q.get_mpz_t(), digits[i].get_mpz_t(), rest.get_mpz_t(),
                    snf_.diag[i].get_mpz_t());
        rest = q;
    }
    return snf_.Uinv.apply(digits);
}

namespace {

constexpr unsigned long kMaxOracleIndex = 1ul << 24;

unsigned long small_index(const CosetTable& t) {
    if (t.index() > kMaxOracleIndex)
        throw std::invalid_argument("coset enumeration limited to index <= 2^24");
    return t.index().get_ui();
}

// op as a matrix acting on coefficient vectors.
IntMat op_matrix(const CosetTable& t, const PointOp& op) {
    const FieldPtr& f = t.field();
    const int phi = f->euler_phi;
    IntMat m(phi, phi);
    for (int i = 0; i < phi; ++i) {
        CycloElem img = apply_point_op(root_power(f, i), op);
        for (int r = 0; r < phi; ++r) m.at(r, i) = img.coeffs()[r];
    }
    return m;
}

// The operation maps the sublattice into itself; necessary and sufficient
// for it to act on cosets at all.
bool maps_lattice_into_itself(const CosetTable& t, const IntMat& opm) {
    const int phi = t.field()->euler_phi;
    for (int i = 0; i < phi; ++i) {
        std::vector<Int> col(phi);
        for (int r = 0; r < phi; ++r) col[r] = t.mult_matrix().at(r, i);
        if (t.label(opm.apply(col)) != 0) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<long>> verify_colour_action(const CosetTable& table,
                                                      const PointOp& op) {
    const unsigned long count = small_index(table);
    IntMat opm = op_matrix(table, op);
    if (!maps_lattice_into_itself(table, opm)) return std::nullopt;

    std::vector<long> perm(count, -1);
    std::vector<char> hit(count, 0);
    for (unsigned long c = 0; c < count; ++c) {
        std::vector<Int> rep = table.representative(Int(static_cast<long>(c)));
        Int img = table.label(opm.apply(rep));
        unsigned long p = img.get_ui();
        perm[c] = static_cast<long>(p);
        if (hit[p]) return std::nullopt;  // not injective: not a coset map
        hit[p] = 1;
    }

    // Re-check on a second, randomly shifted representative set.
    std::mt19937_64 rng(0x5eedu + count);
    const int phi = table.field()->euler_phi;
    std::uniform_int_distribution<int> dist(-3, 3);
    for (unsigned long c = 0; c < count; ++c) {
        std::vector<Int> rep = table.representative(Int(static_cast<long>(c)));
        std::vector<Int> w(phi);
        for (int i = 0; i < phi; ++i) w[i] = dist(rng);
        std::vector<Int> shift = table.mult_matrix().apply(w);
        for (int i = 0; i < phi; ++i) rep[i] += shift[i];
        Int img = table.label(opm.apply(rep));
        if (img.get_ui() != static_cast<unsigned long>(perm[c])) return std::nullopt;
    }
    return perm;
}

HKind brute_force_H(const CosetTable& table) {
    auto conj = verify_colour_action(table, PointOp{true, 0});
    if (!conj) return HKind::Gprime;
    // Rotations always permute the cosets; spot-verify the composite anyway.
    std::vector<PointOp> sample = {{false, 1}, {true, 0}, {false, 0}};
    if (!homomorphism_spot_check(table, sample))
        throw std::logic_error("colour action is not a homomorphism");
    return HKind::G;
}

PointGroupDescriptor brute_force_K(const CosetTable& table) {
    const unsigned long count = small_index(table);
    const FieldPtr& f = table.field();
    const int N = f->point_group_order_half;

    // Probe representatives: any moved probe certifies the op is not in K.
    std::vector<std::vector<Int>> probes;
    std::mt19937_64 rng(0xc05e7u);
    std::uniform_int_distribution<unsigned long> pick(0, count - 1);
    for (int t = 0; t < 8; ++t)
        probes.push_back(table.representative(Int(static_cast<long>(pick(rng)))));

    auto fixes_all = [&](const PointOp& op) {
        IntMat opm = op_matrix(table, op);
        for (const auto& x : probes)
            if (table.label(opm.apply(x)) != table.label(x)) return false;
        if (!maps_lattice_into_itself(table, opm)) return false;
        for (unsigned long c = 0; c < count; ++c) {
            std::vector<Int> rep = table.representative(Int(static_cast<long>(c)));
            if (table.label(opm.apply(rep)) != Int(static_cast<long>(c))) return false;
        }
        return true;
    };

    PointGroupDescriptor pg;
    int rotations = 0;
    for (int j = 0; j < N; ++j)
        if (fixes_all(PointOp{false, j})) ++rotations;
    pg.rotation_order = rotations;
    for (int j = 0; j < N; ++j)
        if (fixes_all(PointOp{true, j})) pg.reflection_axes.push_back(j);
    pg.reflection_present = !pg.reflection_axes.empty();
    return pg;
}

bool homomorphism_spot_check(const CosetTable& table, std::span<const PointOp> ops) {
    const FieldPtr& f = table.field();
    std::vector<std::vector<long>> perms;
    for (const PointOp& op : ops) {
        auto p = verify_colour_action(table, op);
        if (!p) return false;
        perms.push_back(std::move(*p));
    }
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = 0; j < ops.size(); ++j) {
            PointOp comp = compose_ops(f, ops[i], ops[j]);
            auto pc = verify_colour_action(table, comp);
            if (!pc) return false;
            for (std::size_t c = 0; c < pc->size(); ++c)
                if ((*pc)[c] != perms[i][perms[j][c]]) return false;
        }
    return true;
}

}  // namespace cyclo
