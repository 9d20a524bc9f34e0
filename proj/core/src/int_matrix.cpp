#include "tsih/int_matrix.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace tsih {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw ValidationError("entry count does not match matrix shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw ValidationError("ragged rows in matrix literal");
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::column(const IntVec& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m.at(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(i, i) = d[i];
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : e_)
        if (x != 0)
            return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

void IntMatrix::set_col(std::size_t j, const IntVec& v) {
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, j) = v[i];
}

IntMatrix IntMatrix::hcat(const IntMatrix& right) const {
    if (rows_ != right.rows_)
        throw ValidationError("hcat row mismatch");
    IntMatrix m(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j)
            m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const {
    IntMatrix m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        m.set_col(j, col(idx[j]));
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw ValidationError("matrix product shape mismatch");
    IntMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (cols_ != v.size())
        throw ValidationError("matrix-vector shape mismatch");
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m = *this;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = -m.at(i, j);
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

namespace {

std::atomic<bool> g_self_check{false};

// Extended gcd: returns (g, x, y) with x*a + y*b = g, g >= 0.
struct Egcd {
    Int g, x, y;
};

Egcd ext_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0)
        return {-a, -x0, -y0};
    return {a, x0, y0};
}

// Working state of the reduction: A is transformed in place while the row
// transforms (and inverses) accumulate in u/uinv and the column transforms
// in v/vinv, keeping u*A0*v = A at every step.
struct SnfWork {
    IntMatrix a, u, uinv, v, vinv;

    explicit SnfWork(const IntMatrix& m)
        : a(m),
          u(IntMatrix::identity(m.rows())),
          uinv(IntMatrix::identity(m.rows())),
          v(IntMatrix::identity(m.cols())),
          vinv(IntMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < a.cols(); ++k)
            std::swap(a.at(i, k), a.at(j, k));
        for (std::size_t k = 0; k < u.cols(); ++k)
            std::swap(u.at(i, k), u.at(j, k));
        for (std::size_t k = 0; k < uinv.rows(); ++k)
            std::swap(uinv.at(k, i), uinv.at(k, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < a.rows(); ++k)
            std::swap(a.at(k, i), a.at(k, j));
        for (std::size_t k = 0; k < v.rows(); ++k)
            std::swap(v.at(k, i), v.at(k, j));
        for (std::size_t k = 0; k < vinv.cols(); ++k)
            std::swap(vinv.at(i, k), vinv.at(j, k));
    }

    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k)
            a.at(i, k) = -a.at(i, k);
        for (std::size_t k = 0; k < u.cols(); ++k)
            u.at(i, k) = -u.at(i, k);
        for (std::size_t k = 0; k < uinv.rows(); ++k)
            uinv.at(k, i) = -uinv.at(k, i);
    }

    void add_row(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0)
            return;
        for (std::size_t k = 0; k < a.cols(); ++k)
            a.at(dst, k) += f * a.at(src, k);
        for (std::size_t k = 0; k < u.cols(); ++k)
            u.at(dst, k) += f * u.at(src, k);
        for (std::size_t k = 0; k < uinv.rows(); ++k)
            uinv.at(k, src) -= f * uinv.at(k, dst);
    }

    // Rows t, i become (x*row_t + y*row_i, -(b/g)*row_t + (a/g)*row_i) where
    // a = A[t][pc], b = A[i][pc], xa + yb = g; this puts g at (t,pc) and 0 at
    // (i,pc). The factors form a determinant-1 block, inverted explicitly.
    void bezout_rows(std::size_t t, std::size_t i, std::size_t pc) {
        const Int a0 = a.at(t, pc), b0 = a.at(i, pc);
        if (b0 == 0)
            return;
        if (a0 != 0 && b0 % a0 == 0) {
            add_row(i, t, -(b0 / a0));
            return;
        }
        Egcd e = ext_gcd(a0, b0);
        const Int as = a0 / e.g, bs = b0 / e.g;
        apply_row_pair(t, i, e.x, e.y, -bs, as, as, -e.y, bs, e.x);
    }

    void bezout_cols(std::size_t t, std::size_t j, std::size_t pr) {
        const Int a0 = a.at(pr, t), b0 = a.at(pr, j);
        if (b0 == 0)
            return;
        if (a0 != 0 && b0 % a0 == 0) {
            add_col(j, t, -(b0 / a0));
            return;
        }
        Egcd e = ext_gcd(a0, b0);
        const Int as = a0 / e.g, bs = b0 / e.g;
        apply_col_pair(t, j, e.x, e.y, -bs, as, as, bs, -e.y, e.x);
    }

    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0)
            return;
        for (std::size_t k = 0; k < a.rows(); ++k)
            a.at(k, dst) += f * a.at(k, src);
        for (std::size_t k = 0; k < v.rows(); ++k)
            v.at(k, dst) += f * v.at(k, src);
        for (std::size_t k = 0; k < vinv.cols(); ++k)
            vinv.at(src, k) -= f * vinv.at(dst, k);
    }

    // rows (t,i) <- [[m00,m01],[m10,m11]] * rows(t,i); n** is the inverse block.
    void apply_row_pair(std::size_t t, std::size_t i, const Int& m00, const Int& m01, const Int& m10,
                        const Int& m11, const Int& n00, const Int& n01, const Int& n10, const Int& n11) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Int rt = a.at(t, k), ri = a.at(i, k);
            a.at(t, k) = m00 * rt + m01 * ri;
            a.at(i, k) = m10 * rt + m11 * ri;
        }
        for (std::size_t k = 0; k < u.cols(); ++k) {
            Int rt = u.at(t, k), ri = u.at(i, k);
            u.at(t, k) = m00 * rt + m01 * ri;
            u.at(i, k) = m10 * rt + m11 * ri;
        }
        // uinv <- uinv * L^{-1}: columns t, i combine with the inverse block.
        for (std::size_t k = 0; k < uinv.rows(); ++k) {
            Int ct = uinv.at(k, t), ci = uinv.at(k, i);
            uinv.at(k, t) = ct * n00 + ci * n10;
            uinv.at(k, i) = ct * n01 + ci * n11;
        }
    }

    void apply_col_pair(std::size_t t, std::size_t j, const Int& m00, const Int& m01, const Int& m10,
                        const Int& m11, const Int& n00, const Int& n01, const Int& n10, const Int& n11) {
        for (std::size_t k = 0; k < a.rows(); ++k) {
            Int ct = a.at(k, t), cj = a.at(k, j);
            a.at(k, t) = ct * m00 + cj * m01;
            a.at(k, j) = ct * m10 + cj * m11;
        }
        for (std::size_t k = 0; k < v.rows(); ++k) {
            Int ct = v.at(k, t), cj = v.at(k, j);
            v.at(k, t) = ct * m00 + cj * m01;
            v.at(k, j) = ct * m10 + cj * m11;
        }
        // vinv <- R^{-1} * vinv: rows t, j combine with the inverse block.
        for (std::size_t k = 0; k < vinv.cols(); ++k) {
            Int rt = vinv.at(t, k), rj = vinv.at(j, k);
            vinv.at(t, k) = n00 * rt + n01 * rj;
            vinv.at(j, k) = n10 * rt + n11 * rj;
        }
    }
};

}  // namespace

void set_self_check(bool enabled) { g_self_check.store(enabled); }
bool self_check() { return g_self_check.load(); }

bool SmithDecomposition::verify(const IntMatrix& a) const {
    if (u * a * v != d)
        return false;
    if (u * uinv != IntMatrix::identity(u.rows()))
        return false;
    if (v * vinv != IntMatrix::identity(v.rows()))
        return false;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0)
                return false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        if (diag[i] <= 0 || diag[i + 1] % diag[i] != 0)
            return false;
    if (!diag.empty() && diag.back() <= 0)
        return false;
    return true;
}

SmithDecomposition snf(const IntMatrix& a) {
    SnfWork w(a);
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t t = 0;
    while (t < m && t < n) {
        // Pick the nonzero entry of least absolute value in the lower-right block.
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& x = w.a.at(i, j);
                if (x == 0)
                    continue;
                Int ax = abs(x);
                if (best == 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0)
            break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < m; ++i)
                w.bezout_rows(t, i, t);
            for (std::size_t j = t + 1; j < n; ++j)
                if (w.a.at(t, j) != 0) {
                    w.bezout_cols(t, j, t);
                    dirty = true;  // column step may refill column t
                }
            if (dirty)
                continue;
            // Enforce divisibility of the remaining block by the pivot.
            const Int& p = w.a.at(t, t);
            for (std::size_t i = t + 1; i < m && !dirty; ++i)
                for (std::size_t j = t + 1; j < n && !dirty; ++j)
                    if (w.a.at(i, j) % p != 0) {
                        w.add_row(t, i, 1);
                        dirty = true;
                    }
        }
        if (w.a.at(t, t) < 0)
            w.negate_row(t);
        ++t;
    }

    SmithDecomposition s;
    s.u = std::move(w.u);
    s.uinv = std::move(w.uinv);
    s.v = std::move(w.v);
    s.vinv = std::move(w.vinv);
    s.d = std::move(w.a);
    for (std::size_t i = 0; i < t; ++i)
        s.diag.push_back(s.d.at(i, i));
    if (g_self_check.load() && !s.verify(a))
        throw std::logic_error("smith decomposition self-check failed");
    return s;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithDecomposition s = snf(a);
    std::vector<std::size_t> idx;
    for (std::size_t j = s.rank(); j < a.cols(); ++j)
        idx.push_back(j);
    return s.v.select_cols(idx);
}

namespace {

std::optional<IntVec> solve_with(const SmithDecomposition& s, const IntMatrix& a, const IntVec& b) {
    if (b.size() != a.rows())
        throw ValidationError("solve: dimension mismatch");
    IntVec ub = s.u * b;
    IntVec z(a.cols());
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < s.diag.size()) {
            if (ub[i] % s.diag[i] != 0)
                return std::nullopt;
            z[i] = ub[i] / s.diag[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * z;
}

}  // namespace

std::optional<IntVec> solve(const IntMatrix& a, const IntVec& b) { return solve_with(snf(a), a, b); }

LinearSolver::LinearSolver(IntMatrix a) : a_(std::move(a)), s_(snf(a_)) {}

std::optional<IntVec> LinearSolver::solve(const IntVec& b) const { return solve_with(s_, a_, b); }

std::optional<IntMatrix> LinearSolver::solve_matrix(const IntMatrix& b) const {
    if (b.rows() != a_.rows())
        throw ValidationError("solve_matrix: dimension mismatch");
    IntMatrix x(a_.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto xj = solve(b.col(j));
        if (!xj)
            return std::nullopt;
        x.set_col(j, *xj);
    }
    return x;
}

IntMatrix weak_boundary_basis(const IntMatrix& d, const PrimeSet& s) {
    SmithDecomposition sd = snf(d);
    // In U-coordinates the image is the span of diag[i]*e_i; dividing each
    // diag[i] by its s-part leaves the least multiplier making a weak
    // boundary, so the basis pulls back through U^{-1}.
    IntMatrix basis(d.rows(), sd.rank());
    for (std::size_t i = 0; i < sd.rank(); ++i) {
        Int c = sd.diag[i] / span_part(s, sd.diag[i]);
        for (std::size_t r = 0; r < d.rows(); ++r)
            basis.at(r, i) = c * sd.uinv.at(r, i);
    }
    return basis;
}

IntMatrix lattice_basis(const IntMatrix& a) {
    SmithDecomposition s = snf(a);
    IntMatrix basis(a.rows(), s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i)
        for (std::size_t r = 0; r < a.rows(); ++r)
            basis.at(r, i) = s.diag[i] * s.uinv.at(r, i);
    return basis;
}

bool lattice_eq(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows())
        return false;
    LinearSolver sa(a), sb(b);
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (!sa.solve(b.col(j)))
            return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!sb.solve(a.col(j)))
            return false;
    return true;
}

}  // namespace tsih
