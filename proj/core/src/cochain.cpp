#include "tsih/cochain.hpp"

#include <utility>

#include "tsih/errors.hpp"

namespace tsih {

namespace {

// Looks up a chain-map component, defaulting to the zero map of the right
// shape and validating explicit entries against it.
IntMatrix map_component(const DegreeMatrices& f, int i, std::size_t target_rank, std::size_t source_rank) {
    auto it = f.find(i);
    if (it == f.end())
        return IntMatrix::zero(target_rank, source_rank);
    if (it->second.rows() != target_rank || it->second.cols() != source_rank)
        throw ValidationError("chain map component at degree " + std::to_string(i) + " has wrong shape");
    return it->second;
}

}  // namespace

CochainComplex::CochainComplex() : lo_(0), hi_(0), ranks_{0} {}

CochainComplex::CochainComplex(int lo, int hi, std::vector<std::size_t> ranks, std::map<int, IntMatrix> differentials)
    : lo_(lo), hi_(hi), ranks_(std::move(ranks)) {
    if (hi_ < lo_)
        throw ValidationError("complex needs hi >= lo");
    if (ranks_.size() != static_cast<std::size_t>(hi_ - lo_ + 1))
        throw ValidationError("complex rank list does not match degree range");
    for (auto& [deg, m] : differentials) {
        if (deg < lo_ || deg > hi_)
            throw ValidationError("differential at degree " + std::to_string(deg) + " outside [lo, hi]");
        std::size_t target = deg < hi_ ? ranks_[deg + 1 - lo_] : 0;
        if (m.rows() != target || m.cols() != ranks_[deg - lo_])
            throw ValidationError("differential at degree " + std::to_string(deg) + " has wrong shape");
    }
    diffs_.reserve(hi_ - lo_);
    for (int i = lo_; i < hi_; ++i) {
        auto it = differentials.find(i);
        diffs_.push_back(it != differentials.end() ? it->second
                                                   : IntMatrix::zero(ranks_[i + 1 - lo_], ranks_[i - lo_]));
    }
    for (int i = lo_; i + 1 < hi_; ++i) {
        if (!(d(i + 1) * d(i)).is_zero())
            throw ValidationError("differentials do not compose to zero at degree " + std::to_string(i));
    }
}

std::size_t CochainComplex::rank(int i) const {
    if (i < lo_ || i > hi_)
        return 0;
    return ranks_[i - lo_];
}

IntMatrix CochainComplex::d(int i) const {
    if (i >= lo_ && i < hi_)
        return diffs_[i - lo_];
    return IntMatrix::zero(rank(i + 1), rank(i));
}

bool CochainComplex::operator==(const CochainComplex& o) const {
    int lo = std::min(lo_, o.lo_), hi = std::max(hi_, o.hi_);
    for (int i = lo; i <= hi; ++i) {
        if (rank(i) != o.rank(i) || !(d(i) == o.d(i)))
            return false;
    }
    return true;
}

FgAbGroup cohomology(const CochainComplex& c, int i) {
    return cohomology_presented(c, i).group();
}

Subquotient cohomology_presented(const CochainComplex& c, int i) {
    return Subquotient(kernel_basis(c.d(i)), c.d(i - 1));
}

IntMatrix TruncationResult::inclusion_at(const CochainComplex& original, int i) const {
    auto it = inclusion.find(i);
    if (it != inclusion.end())
        return it->second;
    return IntMatrix::zero(original.rank(i), complex.rank(i));
}

TruncationResult tt_truncate(const CochainComplex& c, int k, const PrimeSet& s) {
    TruncationResult out;
    if (k >= c.hi()) {
        out.complex = c;
        for (int i = c.lo(); i <= c.hi(); ++i)
            out.inclusion.emplace(i, IntMatrix::identity(c.rank(i)));
        return out;
    }
    if (k + 1 < c.lo()) {
        out.complex = CochainComplex();
        return out;
    }
    IntMatrix tip = weak_boundary_basis(c.d(k), s);
    std::vector<std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    for (int i = c.lo(); i <= k; ++i) {
        ranks.push_back(c.rank(i));
        if (i < k)
            diffs.emplace(i, c.d(i));
    }
    ranks.push_back(tip.cols());
    if (k >= c.lo()) {
        auto corestricted = LinearSolver(tip).solve_matrix(c.d(k));
        if (!corestricted)
            throw Error("weak boundary lattice misses the image of the differential");
        diffs.emplace(k, *corestricted);
    }
    out.complex = CochainComplex(c.lo(), k + 1, std::move(ranks), std::move(diffs));
    for (int i = c.lo(); i <= k; ++i)
        out.inclusion.emplace(i, IntMatrix::identity(c.rank(i)));
    out.inclusion.emplace(k + 1, tip);
    return out;
}

CochainComplex shift(const CochainComplex& c, int m) {
    std::vector<std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        ranks.push_back(c.rank(i));
        if (i < c.hi())
            diffs.emplace(i - m, c.d(i));
    }
    return CochainComplex(c.lo() - m, c.hi() - m, std::move(ranks), std::move(diffs));
}

CochainComplex mapping_cone(const CochainComplex& a, const CochainComplex& b, const DegreeMatrices& f) {
    int lo = std::min(a.lo() - 1, b.lo());
    int hi = std::max(a.hi() - 1, b.hi());
    std::vector<std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    for (int i = lo; i <= hi; ++i)
        ranks.push_back(a.rank(i + 1) + b.rank(i));
    for (int i = lo; i < hi; ++i) {
        std::size_t rows = a.rank(i + 2) + b.rank(i + 1);
        std::size_t cols = a.rank(i + 1) + b.rank(i);
        IntMatrix m = IntMatrix::zero(rows, cols);
        IntMatrix da = a.d(i + 1);
        IntMatrix db = b.d(i);
        IntMatrix fi = map_component(f, i + 1, b.rank(i + 1), a.rank(i + 1));
        for (std::size_t r = 0; r < da.rows(); ++r)
            for (std::size_t cc = 0; cc < da.cols(); ++cc)
                m.at(r, cc) = -da.at(r, cc);
        for (std::size_t r = 0; r < fi.rows(); ++r)
            for (std::size_t cc = 0; cc < fi.cols(); ++cc)
                m.at(a.rank(i + 2) + r, cc) = fi.at(r, cc);
        for (std::size_t r = 0; r < db.rows(); ++r)
            for (std::size_t cc = 0; cc < db.cols(); ++cc)
                m.at(a.rank(i + 2) + r, a.rank(i + 1) + cc) = db.at(r, cc);
        diffs.emplace(i, std::move(m));
    }
    return CochainComplex(lo, hi, std::move(ranks), std::move(diffs));
}

CochainComplex p_tau_le(const CochainComplex& c, int n, const PrimeSet& s) {
    return tt_truncate(c, n, s).complex;
}

CochainComplex p_tau_ge(const CochainComplex& c, int n, const PrimeSet& s) {
    TruncationResult below = tt_truncate(c, n - 1, s);
    return mapping_cone(below.complex, c, below.inclusion);
}

std::string HeartObject::to_string() const {
    return "(" + slot0.to_string() + ", " + slot1.to_string() + ")";
}

HeartObject p_H(const CochainComplex& c, int j, const PrimeSet& s) {
    TruncationResult upper = tt_truncate(c, j, s);
    TruncationResult lower = tt_truncate(c, j - 1, s);
    DegreeMatrices step;
    for (int i = lower.complex.lo(); i <= lower.complex.hi(); ++i) {
        if (lower.complex.rank(i) == 0)
            continue;
        auto lifted = LinearSolver(upper.inclusion_at(c, i)).solve_matrix(lower.inclusion_at(c, i));
        if (!lifted)
            throw Error("truncation tower is not nested");
        step.emplace(i, *lifted);
    }
    CochainComplex q = mapping_cone(lower.complex, upper.complex, step);
    return HeartObject{cohomology(q, j), cohomology(q, j + 1)};
}

bool in_heart(const CochainComplex& c, const PrimeSet& s) {
    for (int i = c.lo(); i <= c.hi(); ++i) {
        FgAbGroup h = cohomology(c, i);
        if (i == 0) {
            if (!torsion_part(h, s).is_zero())
                return false;
        } else if (i == 1) {
            if (!mod_torsion(h, s).is_zero())
                return false;
        } else if (!h.is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace tsih
