#ifndef TSIH_TS_IH_HPP
#define TSIH_TS_IH_HPP

#include "tsih/simplicial.hpp"

namespace tsih {

// Perversity value at the cone point: a cutoff degree and a prime set.
struct TsPerversity {
    int k = 0;
    PrimeSet primes = PrimeSet::empty();

    bool operator==(const TsPerversity& o) const = default;
    std::string to_string() const;
};

// (codim - 2 - k, complement of primes); an involution for fixed codim.
TsPerversity dual_perversity(const TsPerversity& p, int codim);

// Which clause of the closed-form computation produced a degree's group.
enum class Regime { Relative, Kernel, Cokernel, Absolute, Image };

const char* regime_name(Regime r);

struct TsIhResult {
    int n = 0;
    std::vector<FgAbGroup> groups;   // degrees 0..n
    std::vector<Regime> regimes;

    FgAbGroup at(int i) const;       // zero outside [0, n]
};

// Intersection homology of the coned-off space, one degree at a time:
// relative groups at and above n-k, a kernel at n-k-1, a cokernel at
// n-k-2, and the absolute manifold groups below.
TsIhResult compute_tsih(const LesPackage& pkg, const TsPerversity& p);

// The prime-blind formula: relative groups above the cut, the image of the
// relativization map at degree n-k-1, absolute groups below.
TsIhResult classical_ih(const LesPackage& pkg, int k);

struct DualityRow {
    int degree;                 // i, compared against complementary degrees
    FgAbGroup p_group;          // group at degree i for p
    FgAbGroup q_rank_group;     // group at degree n-i for the dual
    FgAbGroup q_torsion_group;  // group at degree n-i-1 for the dual
    bool rank_ok;
    bool torsion_ok;
};

struct DualityReport {
    int n = 0;
    TsPerversity p, q;
    bool conclusive = true;     // false when the package fails validation
    std::string diagnostic;
    std::vector<DualityRow> rows;

    bool all_pass() const;
};

// Check, degree by degree, that ranks match across complementary degrees
// and torsion invariant factors match with a shift of one.
DualityReport duality_report(const LesPackage& pkg, const TsPerversity& p);

// One stratum's worth of link data for the self-duality conditions.
struct LinkStratum {
    std::string label;
    int codim = 2;
    FgAbGroup group;
    PrimeSet primes = PrimeSet::empty();
};

struct ConditionReport {
    bool pass = true;
    std::string detail;
};

// Torsion-free self-dual regime: even-codimension link groups must be
// torsion-free, odd-codimension ones torsion away from the stratum primes.
ConditionReport check_self_duality_free(const std::vector<LinkStratum>& links);

// Torsion self-dual regime: odd-codimension link groups must vanish,
// even-codimension ones must be torsion away from the stratum primes.
ConditionReport check_self_duality_torsion(const std::vector<LinkStratum>& links);

// True iff the boundary homology in degree n-2-p1 is torsion-free.
bool check_gs_locally_torsion_free(const LesPackage& pkg, int p1);

}  // namespace tsih

#endif
