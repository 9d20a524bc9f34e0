#ifndef TSIH_TESTS_HELPERS_HPP
#define TSIH_TESTS_HELPERS_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsih/cochain.hpp"
#include "tsih/fg_group.hpp"
#include "tsih/prime_set.hpp"

namespace tsih::testing {

using Rng = std::mt19937_64;

inline long long rand_between(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline std::string data_path(const std::string& name) {
    return std::string(TSIH_DATA_DIR) + "/" + name;
}

inline std::string testdata_path(const std::string& name) {
    return std::string(TSIH_TESTDATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// ---------------------------------------------------------------------------
// Random algebraic objects

struct UnimodularPair {
    IntMatrix p, pinv;
};

// Random change of basis built from elementary operations, tracked together
// with its exact inverse.
inline UnimodularPair random_unimodular(Rng& rng, std::size_t n) {
    UnimodularPair out{IntMatrix::identity(n), IntMatrix::identity(n)};
    if (n == 0)
        return out;
    long long steps = rand_between(rng, 0, 3 * static_cast<long long>(n));
    for (long long s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(rand_between(rng, 0, n - 1));
        std::size_t j = static_cast<std::size_t>(rand_between(rng, 0, n - 1));
        switch (rand_between(rng, 0, 2)) {
            case 0: {
                if (i == j)
                    break;
                Int f(rand_between(rng, -2, 2));
                // p <- E p with E adding f x row j to row i; pinv <- pinv E^{-1}.
                for (std::size_t c = 0; c < n; ++c)
                    out.p.at(i, c) += f * out.p.at(j, c);
                for (std::size_t r = 0; r < n; ++r)
                    out.pinv.at(r, j) -= f * out.pinv.at(r, i);
                break;
            }
            case 1: {
                for (std::size_t c = 0; c < n; ++c)
                    std::swap(out.p.at(i, c), out.p.at(j, c));
                for (std::size_t r = 0; r < n; ++r)
                    std::swap(out.pinv.at(r, i), out.pinv.at(r, j));
                break;
            }
            default: {
                for (std::size_t c = 0; c < n; ++c)
                    out.p.at(i, c) = -out.p.at(i, c);
                for (std::size_t r = 0; r < n; ++r)
                    out.pinv.at(r, i) = -out.pinv.at(r, i);
                break;
            }
        }
    }
    return out;
}

// A complex whose cohomology is known by construction: a direct sum of
// elementary two-term complexes conjugated by unimodular changes of basis.
struct RandomComplex {
    CochainComplex complex;
    std::map<int, FgAbGroup> expected;

    FgAbGroup expected_at(int i) const {
        auto it = expected.find(i);
        return it == expected.end() ? FgAbGroup::zero() : it->second;
    }
};

inline RandomComplex random_complex(Rng& rng) {
    int lo = static_cast<int>(rand_between(rng, -3, 2));
    int hi = lo + static_cast<int>(rand_between(rng, 1, 4));
    std::vector<std::size_t> ranks(hi - lo + 1, 0);
    struct Summand {
        int degree;
        std::size_t src, dst;
        Int m;
    };
    std::vector<Summand> summands;
    long long count = rand_between(rng, 0, 5);
    for (long long t = 0; t < count; ++t) {
        int d = lo + static_cast<int>(rand_between(rng, 0, hi - lo - 1));
        Int m(rand_between(rng, 0, 20));
        if (m != 0 && rand_between(rng, 0, 1) == 0)
            m = -m;
        summands.push_back({d, ranks[d - lo]++, ranks[d + 1 - lo]++, m});
    }
    std::map<int, IntMatrix> diffs;
    for (int i = lo; i < hi; ++i)
        diffs.emplace(i, IntMatrix::zero(ranks[i + 1 - lo], ranks[i - lo]));
    std::map<int, FgAbGroup> expected;
    for (const auto& s : summands) {
        diffs.at(s.degree).at(s.dst, s.src) = s.m;
        if (s.m == 0) {
            expected[s.degree] = direct_sum(expected[s.degree], FgAbGroup::free_group(1));
            expected[s.degree + 1] = direct_sum(expected[s.degree + 1], FgAbGroup::free_group(1));
        } else if (s.m != 1 && s.m != -1) {
            expected[s.degree + 1] = direct_sum(expected[s.degree + 1], FgAbGroup::cyclic(s.m));
        }
    }
    std::map<int, UnimodularPair> bases;
    for (int i = lo; i <= hi; ++i)
        bases.emplace(i, random_unimodular(rng, ranks[i - lo]));
    std::map<int, IntMatrix> conjugated;
    for (int i = lo; i < hi; ++i)
        conjugated.emplace(i, bases.at(i + 1).p * diffs.at(i) * bases.at(i).pinv);
    RandomComplex out;
    out.complex = CochainComplex(lo, hi, std::move(ranks), std::move(conjugated));
    out.expected = std::move(expected);
    return out;
}

inline FgAbGroup random_group(Rng& rng) {
    std::size_t rank = static_cast<std::size_t>(rand_between(rng, 0, 3));
    IntVec invariants;
    long long torsion = rand_between(rng, 0, 3);
    Int d(1);
    for (long long t = 0; t < torsion; ++t) {
        d *= rand_between(rng, t == 0 ? 2 : 1, 6);
        if (d == 1)
            d = 2;
        invariants.push_back(d);
    }
    return FgAbGroup(rank, std::move(invariants));
}

inline PrimeSet random_prime_set(Rng& rng) {
    static const std::vector<std::vector<Int>> lists = {{}, {2}, {3}, {5}, {2, 3}, {2, 5}, {3, 7}, {2, 3, 5}};
    const auto& primes = lists[static_cast<std::size_t>(rand_between(rng, 0, lists.size() - 1))];
    if (rand_between(rng, 0, 1) == 0)
        return PrimeSet::finite(primes);
    return PrimeSet::cofinite(primes);
}

// ---------------------------------------------------------------------------
// Independent arithmetic oracles (trial division only, no library reuse)

inline std::vector<Int> oracle_factor(Int n) {
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

inline bool oracle_span_contains(const PrimeSet& s, const Int& n) {
    if (n < 1)
        return false;
    for (const Int& p : oracle_factor(n)) {
        bool listed = std::find(s.primes().begin(), s.primes().end(), p) != s.primes().end();
        if (s.kind() == PrimeSet::Kind::Finite ? !listed : listed)
            return false;
    }
    return true;
}

inline std::vector<long long> span_elements_upto(const PrimeSet& s, long long bound) {
    std::vector<long long> out;
    for (long long n = 1; n <= bound; ++n)
        if (oracle_span_contains(s, Int(n)))
            out.push_back(n);
    return out;
}

// Is some span multiple of x a combination of the columns of the solver's
// matrix? Searches n through the span up to the bound.
inline bool weak_member_bruteforce(const LinearSolver& image, const PrimeSet& s, const IntVec& x,
                                   long long bound = 10000) {
    for (long long n = 1; n <= bound; ++n) {
        if (!oracle_span_contains(s, Int(n)))
            continue;
        IntVec scaled(x.size());
        for (std::size_t t = 0; t < x.size(); ++t)
            scaled[t] = Int(n) * x[t];
        if (image.solve(scaled))
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Finite-group enumeration oracles

inline IntVec reduce_in(const FgAbGroup& g, IntVec v) {
    for (std::size_t t = 0; t < v.size(); ++t) {
        Int d = g.gen_order(t);
        if (d != 0)
            v[t] = ((v[t] % d) + d) % d;
    }
    return v;
}

inline std::vector<IntVec> enumerate_elements(const FgAbGroup& g) {
    if (!g.is_finite())
        throw std::logic_error("enumerate_elements needs a finite group");
    std::vector<IntVec> out{IntVec(g.invariants().size(), Int(0))};
    for (std::size_t t = 0; t < g.invariants().size(); ++t) {
        std::vector<IntVec> next;
        for (const IntVec& v : out) {
            for (Int a = 0; a < g.invariants()[t]; ++a) {
                IntVec w = v;
                w[t] = a;
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

// Invariant factors of a finite subgroup given by its full element list
// inside an ambient group, recovered by counting p-power annihilators.
inline FgAbGroup enumerated_structure(const std::vector<IntVec>& elements, const FgAbGroup& ambient) {
    Int size(static_cast<long long>(elements.size()));
    auto annihilated_count = [&](const Int& m) {
        long long c = 0;
        for (const IntVec& v : elements) {
            IntVec scaled(v.size());
            for (std::size_t t = 0; t < v.size(); ++t)
                scaled[t] = m * v[t];
            bool zero = true;
            for (const Int& e : reduce_in(ambient, std::move(scaled)))
                if (e != 0)
                    zero = false;
            if (zero)
                ++c;
        }
        return Int(c);
    };
    // Per prime, the count of cyclic factors of p-exponent at least j is the
    // jump in log_p of the p^j-annihilated subgroup sizes.
    std::map<Int, std::vector<long long>> factors_by_prime;
    std::vector<Int> primes;
    for (const Int& p : oracle_factor(size))
        if (primes.empty() || primes.back() != p)
            primes.push_back(p);
    std::size_t max_parts = 0;
    for (const Int& p : primes) {
        std::vector<long long> exps;  // exps[j] = log_p #(p^j)-annihilated
        exps.push_back(0);
        Int power(1);
        while (true) {
            power *= p;
            Int c = annihilated_count(power);
            long long e = 0;
            Int probe = c;
            while (probe % p == 0) {
                probe /= p;
                ++e;
            }
            if (probe != 1)
                throw std::logic_error("annihilator count is not a prime power");
            if (e == exps.back())
                break;
            exps.push_back(e);
        }
        std::vector<long long> at_least;  // at_least[j-1] = #factors with exponent >= j
        for (std::size_t j = 1; j < exps.size(); ++j)
            at_least.push_back(exps[j] - exps[j - 1]);
        std::vector<long long> parts;  // exponents, descending
        for (std::size_t j = 0; j < at_least.size(); ++j) {
            long long above = j + 1 < at_least.size() ? at_least[j + 1] : 0;
            for (long long c = 0; c < at_least[j] - above; ++c)
                parts.push_back(static_cast<long long>(j) + 1);
        }
        std::sort(parts.rbegin(), parts.rend());
        factors_by_prime[p] = parts;
        max_parts = std::max(max_parts, parts.size());
    }
    IntVec invariants;
    for (std::size_t t = 0; t < max_parts; ++t) {
        Int d(1);
        for (const Int& p : primes) {
            const auto& parts = factors_by_prime[p];
            if (t < parts.size()) {
                for (long long e = 0; e < parts[t]; ++e)
                    d *= p;
            }
        }
        invariants.push_back(d);
    }
    std::reverse(invariants.begin(), invariants.end());
    return FgAbGroup(0, std::move(invariants));
}

// Kernel of a map between finite groups, by exhaustive evaluation.
inline FgAbGroup kernel_oracle(const GroupHom& f) {
    std::vector<IntVec> members;
    for (const IntVec& x : enumerate_elements(f.source())) {
        bool zero = true;
        for (const Int& e : f.apply(x))
            if (e != 0)
                zero = false;
        if (zero)
            members.push_back(x);
    }
    return enumerated_structure(members, f.source());
}

// Cokernel of a map between finite groups: annihilator counting on the
// quotient via image membership, no coset representatives needed.
inline FgAbGroup cokernel_oracle(const GroupHom& f) {
    std::set<IntVec> image;
    for (const IntVec& x : enumerate_elements(f.source()))
        image.insert(f.apply(x));
    std::vector<IntVec> all = enumerate_elements(f.target());
    Int quotient_size(static_cast<long long>(all.size() / image.size()));
    auto annihilated = [&](const Int& m) {
        long long c = 0;
        for (const IntVec& b : all) {
            IntVec scaled(b.size());
            for (std::size_t t = 0; t < b.size(); ++t)
                scaled[t] = m * b[t];
            if (image.count(reduce_in(f.target(), std::move(scaled))))
                ++c;
        }
        return Int(c / static_cast<long long>(image.size()));
    };
    std::vector<Int> primes;
    for (const Int& p : oracle_factor(quotient_size))
        if (primes.empty() || primes.back() != p)
            primes.push_back(p);
    std::map<Int, std::vector<long long>> factors_by_prime;
    std::size_t max_parts = 0;
    for (const Int& p : primes) {
        std::vector<long long> exps{0};
        Int power(1);
        while (true) {
            power *= p;
            Int c = annihilated(power);
            long long e = 0;
            Int probe = c;
            while (probe % p == 0) {
                probe /= p;
                ++e;
            }
            if (probe != 1)
                throw std::logic_error("quotient annihilator count is not a prime power");
            if (e == exps.back())
                break;
            exps.push_back(e);
        }
        std::vector<long long> at_least;
        for (std::size_t j = 1; j < exps.size(); ++j)
            at_least.push_back(exps[j] - exps[j - 1]);
        std::vector<long long> parts;
        for (std::size_t j = 0; j < at_least.size(); ++j) {
            long long above = j + 1 < at_least.size() ? at_least[j + 1] : 0;
            for (long long c = 0; c < at_least[j] - above; ++c)
                parts.push_back(static_cast<long long>(j) + 1);
        }
        std::sort(parts.rbegin(), parts.rend());
        factors_by_prime[p] = parts;
        max_parts = std::max(max_parts, parts.size());
    }
    IntVec invariants;
    for (std::size_t t = 0; t < max_parts; ++t) {
        Int d(1);
        for (const Int& p : primes) {
            const auto& parts = factors_by_prime[p];
            if (t < parts.size())
                for (long long e = 0; e < parts[t]; ++e)
                    d *= p;
        }
        invariants.push_back(d);
    }
    std::reverse(invariants.begin(), invariants.end());
    return FgAbGroup(0, std::move(invariants));
}

// ---------------------------------------------------------------------------
// Rank over the rationals by fraction-free elimination (for the simplicial
// homology cross-check; independent of the Smith machinery).

inline std::size_t rational_rank(IntMatrix m) {
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            std::swap(m.at(row, c), m.at(pivot, c));
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0)
                continue;
            Int a = m.at(row, col), b = m.at(r, col);
            Int g = boost::multiprecision::gcd(a, b);
            Int fa = a / g, fb = b / g;
            for (std::size_t c = 0; c < m.cols(); ++c)
                m.at(r, c) = fa * m.at(r, c) - fb * m.at(row, c);
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace tsih::testing

#endif
