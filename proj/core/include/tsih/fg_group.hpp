#ifndef TSIH_FG_GROUP_HPP
#define TSIH_FG_GROUP_HPP

#include <string>
#include <vector>

#include "tsih/int_matrix.hpp"
#include "tsih/prime_set.hpp"

namespace tsih {

// Finitely generated abelian group in normal form: free rank plus an
// invariant-factor chain d1 | d2 | ... with every di >= 2. Two groups are
// isomorphic exactly when their normal forms are equal.
class FgAbGroup {
  public:
    FgAbGroup() : rank_(0) {}
    FgAbGroup(std::size_t rank, IntVec invariants);

    static FgAbGroup zero() { return FgAbGroup(); }
    static FgAbGroup free_group(std::size_t rank) { return FgAbGroup(rank, {}); }
    static FgAbGroup cyclic(const Int& n);

    std::size_t rank() const { return rank_; }
    const IntVec& invariants() const { return invariants_; }

    // Number of generators in the standard presentation: free then torsion.
    std::size_t gens() const { return rank_ + invariants_.size(); }
    bool is_zero() const { return rank_ == 0 && invariants_.empty(); }
    bool is_torsion_free() const { return invariants_.empty(); }
    bool is_finite() const { return rank_ == 0; }

    // Order of the generator with the given index (0 for free generators).
    Int gen_order(std::size_t g) const;

    // The columns of the relation lattice in generator coordinates:
    // d_i times the corresponding torsion generator.
    IntMatrix relation_matrix() const;

    bool operator==(const FgAbGroup& o) const = default;

    // Normal-form notation: "0", "Z", "Z^2", "Z + Z/2 + Z/6", ...
    std::string to_string() const;

  private:
    std::size_t rank_;
    IntVec invariants_;
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

// Normal form of Z^rows / (column span of relations).
FgAbGroup from_presentation(const IntMatrix& relations);

// Subgroup of elements annihilated by some product of powers of primes in s.
FgAbGroup torsion_part(const FgAbGroup& m, const PrimeSet& s);

// Quotient by the s-torsion subgroup.
FgAbGroup mod_torsion(const FgAbGroup& m, const PrimeSet& s);

// Homomorphisms into the integers: free of the same rank.
FgAbGroup hom_to_Z(const FgAbGroup& m);

// First derived functor of Hom(-, Z): the full torsion subgroup.
FgAbGroup ext_to_Z(const FgAbGroup& m);

// True iff every element is s-torsion (equivalently rank 0 and every
// invariant lies in the span of s).
bool is_torsion_group(const FgAbGroup& m, const PrimeSet& s);
// True iff the s-torsion subgroup is trivial.
bool is_torsion_free_of(const FgAbGroup& m, const PrimeSet& s);

// Homomorphism between groups in normal form, as an integer matrix on the
// standard generators (free generators first, then torsion generators).
// Entry (i, j) is the coefficient of target generator i in the image of
// source generator j. Construction rejects matrices that do not descend to
// the quotients; torsion-row entries are reduced modulo the invariant.
class GroupHom {
  public:
    GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);
    static GroupHom identity(const FgAbGroup& g);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    // Applies the map to an element in generator coordinates.
    IntVec apply(const IntVec& x) const;

    bool is_zero_map() const { return matrix_.is_zero(); }
    bool operator==(const GroupHom& o) const = default;

  private:
    FgAbGroup source_, target_;
    IntMatrix matrix_;
};

// g after f; sources and targets must agree.
GroupHom compose(const GroupHom& g, const GroupHom& f);

struct KernelResult {
    FgAbGroup group;
    GroupHom embedding;  // kernel -> source of f
};

// Kernel with its embedding, computed on free presentations.
KernelResult kernel(const GroupHom& f);

// Normal form of target / image.
FgAbGroup cokernel(const GroupHom& f);

// The inclusion of the s-torsion subgroup into m.
GroupHom torsion_inclusion(const FgAbGroup& m, const PrimeSet& s);

// The projection of m onto m / (s-torsion).
GroupHom torsion_quotient(const FgAbGroup& m, const PrimeSet& s);

// The composite (s-torsion of source) -> source -> target.
GroupHom restrict_to_torsion(const GroupHom& f, const PrimeSet& s);

// A subquotient span(gens)/span(rels) of some Z^a, in normal form together
// with ambient coordinates for its generators and a coordinate map, so that
// induced homomorphisms can be read off of chain-level data.
class Subquotient {
  public:
    Subquotient(const IntMatrix& gens, const IntMatrix& rels);

    const FgAbGroup& group() const { return group_; }
    // Ambient coordinates of the normal-form generators (free then torsion).
    const IntMatrix& gen_columns() const { return gen_columns_; }

    // Expresses an ambient vector (which must lie in span(gens)) in
    // normal-form generator coordinates, torsion entries reduced.
    IntVec coordinatize(const IntVec& x) const;
    bool contains(const IntVec& x) const;

    // Lattice of all ambient representatives of 0 (= span(rels)).
    const IntMatrix& relation_lattice() const { return rels_; }

  private:
    IntMatrix basis_;            // basis of span(gens)
    LinearSolver basis_solver_;  // solves basis * w = x
    IntMatrix change_;           // basis coordinates -> reduced coordinates
    IntVec diag_;                // torsion orders along the first coordinates
    FgAbGroup group_;
    IntMatrix gen_columns_;
    IntMatrix rels_;
};

// The homomorphism A -> B induced by an ambient linear map that sends
// span(A.gens) into span(B.gens) and span(A.rels) into span(B.rels).
GroupHom induced_hom(const Subquotient& a, const Subquotient& b, const IntMatrix& ambient_map);

// True iff image(in) equals kernel(out) as subgroups of the middle group;
// in.target() and out.source() must be the same normal form.
bool exact_at(const GroupHom& in, const GroupHom& out);

// Isomorphism type of the image subgroup of f.
FgAbGroup image_group(const GroupHom& f);

}  // namespace tsih

#endif
