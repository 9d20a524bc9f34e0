#include "tsih/fg_group.hpp"

#include <sstream>

namespace tsih {

namespace {

Int mod_reduce(const Int& x, const Int& d) {
    Int r = x % d;
    if (r < 0)
        r += d;
    return r;
}

IntMatrix top_rows(const IntMatrix& m, std::size_t n) {
    IntMatrix r(n, m.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = m.at(i, j);
    return r;
}

}  // namespace

FgAbGroup::FgAbGroup(std::size_t rank, IntVec invariants) : rank_(rank), invariants_(std::move(invariants)) {
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
        if (invariants_[i] < 2)
            throw ValidationError("invariant factors must be at least 2");
        if (i > 0 && invariants_[i] % invariants_[i - 1] != 0)
            throw ValidationError("invariant factors must form a divisibility chain");
    }
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    Int m = abs(n);
    if (m == 0)
        return free_group(1);
    if (m == 1)
        return zero();
    return FgAbGroup(0, {m});
}

Int FgAbGroup::gen_order(std::size_t g) const {
    if (g < rank_)
        return 0;
    return invariants_[g - rank_];
}

IntMatrix FgAbGroup::relation_matrix() const {
    IntMatrix r(gens(), invariants_.size());
    for (std::size_t t = 0; t < invariants_.size(); ++t)
        r.at(rank_ + t, t) = invariants_[t];
    return r;
}

std::string FgAbGroup::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ == 1) {
        os << "Z";
        first = false;
    } else if (rank_ > 1) {
        os << "Z^" << rank_;
        first = false;
    }
    for (const Int& d : invariants_) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    IntVec all = a.invariants();
    all.insert(all.end(), b.invariants().begin(), b.invariants().end());
    FgAbGroup torsion = from_presentation(IntMatrix::diagonal(all));
    return FgAbGroup(a.rank() + b.rank(), torsion.invariants());
}

FgAbGroup from_presentation(const IntMatrix& relations) {
    SmithDecomposition s = snf(relations);
    IntVec inv;
    for (const Int& d : s.diag)
        if (d >= 2)
            inv.push_back(d);
    return FgAbGroup(relations.rows() - s.diag.size(), std::move(inv));
}

FgAbGroup torsion_part(const FgAbGroup& m, const PrimeSet& s) {
    IntVec inv;
    for (const Int& d : m.invariants()) {
        Int g = span_part(s, d);
        if (g >= 2)
            inv.push_back(g);
    }
    return FgAbGroup(0, std::move(inv));
}

FgAbGroup mod_torsion(const FgAbGroup& m, const PrimeSet& s) {
    IntVec inv;
    for (const Int& d : m.invariants()) {
        Int c = d / span_part(s, d);
        if (c >= 2)
            inv.push_back(c);
    }
    return FgAbGroup(m.rank(), std::move(inv));
}

FgAbGroup hom_to_Z(const FgAbGroup& m) { return FgAbGroup::free_group(m.rank()); }

FgAbGroup ext_to_Z(const FgAbGroup& m) { return FgAbGroup(0, m.invariants()); }

bool is_torsion_group(const FgAbGroup& m, const PrimeSet& s) {
    if (m.rank() != 0)
        return false;
    for (const Int& d : m.invariants())
        if (!span_contains(s, d))
            return false;
    return true;
}

bool is_torsion_free_of(const FgAbGroup& m, const PrimeSet& s) {
    for (const Int& d : m.invariants())
        if (span_part(s, d) != 1)
            return false;
    return true;
}

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.gens() || matrix_.cols() != source_.gens())
        throw ValidationError("homomorphism matrix shape does not match generator counts");
    // A torsion generator of order d must land where d times the image is a
    // relation of the target.
    for (std::size_t j = source_.rank(); j < source_.gens(); ++j) {
        const Int d = source_.gen_order(j);
        for (std::size_t i = 0; i < target_.gens(); ++i) {
            const Int e = target_.gen_order(i);
            const Int v = d * matrix_.at(i, j);
            bool ok = (e == 0) ? v == 0 : v % e == 0;
            if (!ok)
                throw ValidationError("matrix does not define a homomorphism: generator of order " +
                                      d.str() + " has an image of larger order");
        }
    }
    for (std::size_t i = target_.rank(); i < target_.gens(); ++i) {
        const Int e = target_.gen_order(i);
        for (std::size_t j = 0; j < source_.gens(); ++j)
            matrix_.at(i, j) = mod_reduce(matrix_.at(i, j), e);
    }
}

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return GroupHom(source, target, IntMatrix::zero(target.gens(), source.gens()));
}

GroupHom GroupHom::identity(const FgAbGroup& g) { return GroupHom(g, g, IntMatrix::identity(g.gens())); }

IntVec GroupHom::apply(const IntVec& x) const {
    IntVec y = matrix_ * x;
    for (std::size_t i = target_.rank(); i < target_.gens(); ++i)
        y[i] = mod_reduce(y[i], target_.gen_order(i));
    return y;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (f.target() != g.source())
        throw ValidationError("composition type mismatch");
    return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

KernelResult kernel(const GroupHom& f) {
    const std::size_t gs = f.source().gens();
    IntMatrix block = f.matrix().hcat(f.target().relation_matrix());
    IntMatrix kb = kernel_basis(block);
    IntMatrix k_gens = top_rows(kb, gs);
    Subquotient sq(k_gens, f.source().relation_matrix());
    GroupHom embedding(sq.group(), f.source(), sq.gen_columns());
    return {sq.group(), std::move(embedding)};
}

FgAbGroup cokernel(const GroupHom& f) {
    return from_presentation(f.matrix().hcat(f.target().relation_matrix()));
}

GroupHom torsion_inclusion(const FgAbGroup& m, const PrimeSet& s) {
    FgAbGroup t = torsion_part(m, s);
    IntMatrix mat(m.gens(), t.gens());
    std::size_t col = 0;
    for (std::size_t i = 0; i < m.invariants().size(); ++i) {
        const Int& d = m.invariants()[i];
        Int g = span_part(s, d);
        if (g >= 2) {
            mat.at(m.rank() + i, col) = d / g;
            ++col;
        }
    }
    return GroupHom(t, m, std::move(mat));
}

GroupHom torsion_quotient(const FgAbGroup& m, const PrimeSet& s) {
    FgAbGroup q = mod_torsion(m, s);
    IntMatrix mat(q.gens(), m.gens());
    for (std::size_t i = 0; i < m.rank(); ++i)
        mat.at(i, i) = 1;
    std::size_t row = q.rank();
    for (std::size_t i = 0; i < m.invariants().size(); ++i) {
        const Int& d = m.invariants()[i];
        Int c = d / span_part(s, d);
        if (c >= 2) {
            mat.at(row, m.rank() + i) = 1;
            ++row;
        }
    }
    return GroupHom(m, q, std::move(mat));
}

GroupHom restrict_to_torsion(const GroupHom& f, const PrimeSet& s) {
    return compose(f, torsion_inclusion(f.source(), s));
}

Subquotient::Subquotient(const IntMatrix& gens, const IntMatrix& rels)
    : basis_(lattice_basis(gens)), basis_solver_(basis_), rels_(rels) {
    auto x = basis_solver_.solve_matrix(rels);
    if (!x)
        throw ValidationError("relations do not lie in the generated lattice");
    SmithDecomposition s = snf(*x);
    change_ = s.u;
    diag_ = s.diag;

    const std::size_t q = basis_.cols();
    const std::size_t r = diag_.size();
    // New lattice basis in which the relations are diagonal.
    IntMatrix bprime = basis_ * s.uinv;
    IntVec inv;
    std::vector<std::size_t> torsion_cols;
    for (std::size_t i = 0; i < r; ++i)
        if (diag_[i] >= 2) {
            inv.push_back(diag_[i]);
            torsion_cols.push_back(i);
        }
    group_ = FgAbGroup(q - r, std::move(inv));
    std::vector<std::size_t> order;
    for (std::size_t i = r; i < q; ++i)
        order.push_back(i);
    order.insert(order.end(), torsion_cols.begin(), torsion_cols.end());
    gen_columns_ = bprime.select_cols(order);
}

IntVec Subquotient::coordinatize(const IntVec& x) const {
    auto w = basis_solver_.solve(x);
    if (!w)
        throw ValidationError("vector lies outside the subquotient's lattice");
    IntVec y = change_ * *w;
    const std::size_t q = basis_.cols();
    const std::size_t r = diag_.size();
    IntVec out;
    out.reserve(group_.gens());
    for (std::size_t i = r; i < q; ++i)
        out.push_back(y[i]);
    for (std::size_t i = 0; i < r; ++i)
        if (diag_[i] >= 2)
            out.push_back(mod_reduce(y[i], diag_[i]));
    return out;
}

bool Subquotient::contains(const IntVec& x) const { return basis_solver_.solve(x).has_value(); }

GroupHom induced_hom(const Subquotient& a, const Subquotient& b, const IntMatrix& ambient_map) {
    IntMatrix images = ambient_map * a.gen_columns();
    IntMatrix mat(b.group().gens(), images.cols());
    for (std::size_t j = 0; j < images.cols(); ++j)
        mat.set_col(j, b.coordinatize(images.col(j)));
    return GroupHom(a.group(), b.group(), std::move(mat));
}

bool exact_at(const GroupHom& in, const GroupHom& out) {
    if (in.target() != out.source())
        throw ValidationError("exactness node type mismatch");
    const FgAbGroup& mid = in.target();
    IntMatrix rel = mid.relation_matrix();
    IntMatrix image = in.matrix().hcat(rel);
    IntMatrix kb = kernel_basis(out.matrix().hcat(out.target().relation_matrix()));
    IntMatrix ker = top_rows(kb, mid.gens()).hcat(rel);
    return lattice_eq(image, ker);
}

FgAbGroup image_group(const GroupHom& f) {
    IntMatrix rel = f.target().relation_matrix();
    return Subquotient(f.matrix().hcat(rel), rel).group();
}

}  // namespace tsih
