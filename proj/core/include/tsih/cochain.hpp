#ifndef TSIH_COCHAIN_HPP
#define TSIH_COCHAIN_HPP

#include <map>

#include "tsih/fg_group.hpp"

namespace tsih {

// Bounded complex of finitely generated free Z-modules with integer
// differentials raising degree by one; d._{i+1} d.i = 0 is checked at
// construction. Degrees outside [lo, hi] are zero.
class CochainComplex {
  public:
    CochainComplex();  // the zero complex
    CochainComplex(int lo, int hi, std::vector<std::size_t> ranks, std::map<int, IntMatrix> differentials);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t rank(int i) const;
    // Differential out of degree i, shaped rank(i+1) x rank(i).
    IntMatrix d(int i) const;

    bool operator==(const CochainComplex& o) const;

  private:
    int lo_, hi_;
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> diffs_;  // diffs_[i - lo] maps degree i to i+1
};

// Degreewise matrices of a chain map; absent degrees are zero maps.
using DegreeMatrices = std::map<int, IntMatrix>;

// ker(d^i) / im(d^{i-1}) in normal form.
FgAbGroup cohomology(const CochainComplex& c, int i);

// Same, with generator representatives and coordinates, for induced maps.
Subquotient cohomology_presented(const CochainComplex& c, int i);

// A subcomplex together with its degreewise inclusion into the original.
struct TruncationResult {
    CochainComplex complex;
    DegreeMatrices inclusion;

    // Inclusion matrix at degree i, shaped original_rank(i) x complex.rank(i).
    IntMatrix inclusion_at(const CochainComplex& original, int i) const;
};

// Torsion-tipped truncation: degrees <= k are kept, degree k+1 is replaced
// by the weak boundaries of d^k relative to s, higher degrees vanish.
TruncationResult tt_truncate(const CochainComplex& c, int k, const PrimeSet& s);

// Degree shift with (shift(C,m))^i = C^{i+m}.
CochainComplex shift(const CochainComplex& c, int m);

// Mapping cone of a degreewise-injective chain map f : A -> B; its
// cohomology is that of the quotient B/A.
CochainComplex mapping_cone(const CochainComplex& a, const CochainComplex& b, const DegreeMatrices& f);

// Truncation functors of the natural prime-sensitive t-structure over a
// point: the lower part is the torsion-tipped truncation at n, the upper
// part is the quotient by the truncation at n-1 (as a free presentation).
CochainComplex p_tau_le(const CochainComplex& c, int n, const PrimeSet& s);
CochainComplex p_tau_ge(const CochainComplex& c, int n, const PrimeSet& s);

// An object of the heart, recorded by its two cohomology slots: slot 0 is
// s-torsion-free, slot 1 is s-torsion.
struct HeartObject {
    FgAbGroup slot0, slot1;

    bool is_zero() const { return slot0.is_zero() && slot1.is_zero(); }
    bool operator==(const HeartObject& o) const = default;
    std::string to_string() const;
};

// j-th perverse cohomology of c: the slots of the quotient of consecutive
// torsion-tipped truncations at j and j-1.
HeartObject p_H(const CochainComplex& c, int j, const PrimeSet& s);

// True iff c has cohomology only in degrees 0 and 1, with H^1 s-torsion and
// H^0 s-torsion-free.
bool in_heart(const CochainComplex& c, const PrimeSet& s);

}  // namespace tsih

#endif
