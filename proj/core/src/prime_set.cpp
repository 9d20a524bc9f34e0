#include "tsih/prime_set.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace tsih {

namespace {

std::atomic<std::uint64_t> g_factor_bound{1ull << 31};

}  // namespace

std::uint64_t factor_bound() { return g_factor_bound.load(); }

void set_factor_bound(std::uint64_t bound) {
    if (bound < 2)
        throw ValidationError("factorization bound must be at least 2");
    g_factor_bound.store(bound);
}

bool is_prime_checked(const Int& p) {
    if (p < 2)
        return false;
    if (p < 4)
        return true;
    if (p % 2 == 0)
        return false;
    const Int bound(g_factor_bound.load());
    for (Int d = 3; d * d <= p; d += 2) {
        if (d > bound) {
            std::ostringstream os;
            os << "trial division for " << p << " exceeds the bound " << bound;
            throw FactorizationLimit(os.str());
        }
        if (p % d == 0)
            return false;
    }
    return true;
}

PrimeSet::PrimeSet(Kind kind, std::vector<Int> primes) : kind_(kind), primes_(std::move(primes)) {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime_checked(primes_[i])) {
            std::ostringstream os;
            os << "listed element " << primes_[i] << " is not a prime";
            throw ValidationError(os.str());
        }
        if (i > 0 && primes_[i - 1] >= primes_[i])
            throw ValidationError("prime list must be strictly increasing");
    }
}

PrimeSet PrimeSet::finite(std::vector<Int> primes) { return PrimeSet(Kind::Finite, std::move(primes)); }
PrimeSet PrimeSet::cofinite(std::vector<Int> primes) { return PrimeSet(Kind::Cofinite, std::move(primes)); }
PrimeSet PrimeSet::empty() { return finite({}); }
PrimeSet PrimeSet::all_primes() { return cofinite({}); }

std::string PrimeSet::to_string() const {
    std::ostringstream os;
    if (kind_ == Kind::Cofinite) {
        if (primes_.empty())
            return "all";
        os << "all-";
    }
    os << "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i > 0)
            os << ",";
        os << primes_[i];
    }
    os << "}";
    return os.str();
}

PrimeSet complement(const PrimeSet& s) {
    auto kind = s.kind() == PrimeSet::Kind::Finite ? PrimeSet::Kind::Cofinite : PrimeSet::Kind::Finite;
    return PrimeSet(kind, s.primes());
}

bool contains_prime(const PrimeSet& s, const Int& p) {
    if (!is_prime_checked(p)) {
        std::ostringstream os;
        os << p << " is not a prime";
        throw ValidationError(os.str());
    }
    bool listed = std::find(s.primes().begin(), s.primes().end(), p) != s.primes().end();
    return s.kind() == PrimeSet::Kind::Finite ? listed : !listed;
}

bool span_contains(const PrimeSet& s, const Int& n) {
    if (n < 1)
        return false;
    if (s.kind() == PrimeSet::Kind::Finite) {
        // Strip every listed prime; membership means nothing else remains.
        Int m = n;
        for (const Int& p : s.primes())
            while (m % p == 0)
                m /= p;
        return m == 1;
    }
    // Cofinite: membership means no excluded prime divides n.
    for (const Int& p : s.primes())
        if (n % p == 0)
            return false;
    return true;
}

Int span_part(const PrimeSet& s, const Int& n) {
    if (n < 1)
        throw ValidationError("span_part expects a positive integer");
    if (s.kind() == PrimeSet::Kind::Finite) {
        Int part = 1;
        Int m = n;
        for (const Int& p : s.primes()) {
            while (m % p == 0) {
                m /= p;
                part *= p;
            }
        }
        return part;
    }
    // Cofinite: divide out all powers of the excluded primes.
    Int part = n;
    for (const Int& p : s.primes())
        while (part % p == 0)
            part /= p;
    return part;
}

PrimeSet parse_prime_set_text(const std::string& text) {
    std::string body = text;
    auto kind = PrimeSet::Kind::Finite;
    if (text == "all")
        return PrimeSet::all_primes();
    if (text.rfind("all-", 0) == 0) {
        kind = PrimeSet::Kind::Cofinite;
        body = text.substr(4);
    }
    std::vector<Int> primes;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw ParseError("empty entry in prime list '" + text + "'");
        try {
            primes.emplace_back(item);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + item + "' in prime list");
        }
    }
    try {
        return PrimeSet(kind, std::move(primes));
    } catch (const ValidationError& e) {
        throw ParseError("bad prime list '" + text + "': " + e.what());
    }
}

}  // namespace tsih
