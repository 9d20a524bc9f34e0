#ifndef TSIH_PRIME_SET_HPP
#define TSIH_PRIME_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tsih/errors.hpp"

namespace tsih {

using Int = boost::multiprecision::cpp_int;

// Trial-division bound used when certifying primality of supplied numbers.
// Default 2^31; overridable programmatically or via TSIH_FACTOR_BOUND.
std::uint64_t factor_bound();
void set_factor_bound(std::uint64_t bound);

// Certified primality by trial division. Throws FactorizationLimit when the
// required trial divisors exceed the configured bound.
bool is_prime_checked(const Int& p);

// A finite or cofinite set of positive rational primes. Finite({}) is the
// empty set; Cofinite({}) is the set of all primes.
class PrimeSet {
  public:
    enum class Kind { Finite, Cofinite };

    // Validates that the listed numbers are primes, strictly increasing.
    PrimeSet(Kind kind, std::vector<Int> primes);

    static PrimeSet finite(std::vector<Int> primes);
    static PrimeSet cofinite(std::vector<Int> primes);
    static PrimeSet empty();       // no primes
    static PrimeSet all_primes();  // every prime

    Kind kind() const { return kind_; }
    const std::vector<Int>& primes() const { return primes_; }

    bool operator==(const PrimeSet& o) const = default;

    // Human-readable form: "{}", "{2,3}", "all", "all-{2}".
    std::string to_string() const;

  private:
    Kind kind_;
    std::vector<Int> primes_;  // listed set when Finite, excluded set when Cofinite
};

// Swaps the finite and cofinite readings; an involution.
PrimeSet complement(const PrimeSet& s);

// Membership of the prime p in the denoted set. Rejects non-prime p.
bool contains_prime(const PrimeSet& s, const Int& p);

// True iff n lies in the multiplicative span of s: n >= 1 and every prime
// factor of n belongs to s. 1 always qualifies; 0 and negatives never do.
bool span_contains(const PrimeSet& s, const Int& n);

// Largest divisor of n (n >= 1) lying in the span of s. Computed by stripping
// the finitely many named primes, so no full factorization is needed.
Int span_part(const PrimeSet& s, const Int& n);

// Parses the command-line encoding: "" (empty set), "all", "2,3", "all-2,3".
PrimeSet parse_prime_set_text(const std::string& text);

}  // namespace tsih

#endif
