#include "tsih/json_io.hpp"

#include <limits>

#include "json.hpp"

#include "tsih/errors.hpp"

namespace tsih {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& require(const json& j, const char* key, const char* ctx) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(ctx) + ": missing key \"" + key + "\"");
    return j.at(key);
}

Int int_from(const json& j, const char* ctx) {
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_number_unsigned())
        return Int(j.get<unsigned long long>());
    if (j.is_string()) {
        const std::string& s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::exception&) {
            throw ParseError(std::string(ctx) + ": \"" + s + "\" is not an integer");
        }
    }
    throw ParseError(std::string(ctx) + ": expected an integer");
}

json int_to(const Int& v) {
    static const Int lo(std::numeric_limits<long long>::min());
    static const Int hi(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi)
        return json(v.convert_to<long long>());
    return json(v.str());
}

long long small_int_from(const json& j, const char* ctx) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw ParseError(std::string(ctx) + ": expected a small integer");
    return j.get<long long>();
}

std::size_t size_from(const json& j, const char* ctx) {
    long long v = small_int_from(j, ctx);
    if (v < 0)
        throw ParseError(std::string(ctx) + ": expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

IntMatrix matrix_from(const json& j, std::size_t rows, std::size_t cols, const char* ctx) {
    if (!j.is_array())
        throw ParseError(std::string(ctx) + ": expected an array of rows");
    if (j.empty() && (rows == 0 || cols == 0))
        return IntMatrix::zero(rows, cols);
    if (j.size() != rows)
        throw ParseError(std::string(ctx) + ": expected " + std::to_string(rows) + " rows, got " +
                         std::to_string(j.size()));
    IntMatrix m = IntMatrix::zero(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || row.size() != cols)
            throw ParseError(std::string(ctx) + ": row " + std::to_string(r) + " must have " +
                             std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = int_from(row.at(c), ctx);
    }
    return m;
}

json matrix_to(const IntMatrix& m) {
    json rows = json::array();
    if (m.rows() == 0 || m.cols() == 0)
        return rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(int_to(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PrimeSet prime_set_from(const json& j) {
    const json& kind = require(j, "kind", "prime set");
    if (!kind.is_string())
        throw ParseError("prime set: \"kind\" must be \"finite\" or \"cofinite\"");
    const json& primes = require(j, "primes", "prime set");
    if (!primes.is_array())
        throw ParseError("prime set: \"primes\" must be an array");
    std::vector<Int> list;
    for (const json& p : primes)
        list.push_back(int_from(p, "prime set"));
    std::string k = kind.get<std::string>();
    if (k == "finite")
        return PrimeSet::finite(std::move(list));
    if (k == "cofinite")
        return PrimeSet::cofinite(std::move(list));
    throw ParseError("prime set: unknown kind \"" + k + "\"");
}

json prime_set_to(const PrimeSet& s) {
    json j;
    j["kind"] = s.kind() == PrimeSet::Kind::Finite ? "finite" : "cofinite";
    json primes = json::array();
    for (const Int& p : s.primes())
        primes.push_back(int_to(p));
    j["primes"] = std::move(primes);
    return j;
}

FgAbGroup group_from(const json& j) {
    std::size_t rank = size_from(require(j, "rank", "group"), "group rank");
    IntVec invariants;
    if (j.contains("invariants")) {
        const json& inv = j.at("invariants");
        if (!inv.is_array())
            throw ParseError("group: \"invariants\" must be an array");
        for (const json& d : inv)
            invariants.push_back(int_from(d, "group invariant"));
    }
    return FgAbGroup(rank, std::move(invariants));
}

json group_to(const FgAbGroup& g) {
    json j;
    j["rank"] = g.rank();
    json inv = json::array();
    for (const Int& d : g.invariants())
        inv.push_back(int_to(d));
    j["invariants"] = std::move(inv);
    return j;
}

GroupHom hom_from(const json& j) {
    FgAbGroup source = group_from(require(j, "source", "hom"));
    FgAbGroup target = group_from(require(j, "target", "hom"));
    IntMatrix m = matrix_from(require(j, "matrix", "hom"), target.gens(), source.gens(), "hom matrix");
    return GroupHom(std::move(source), std::move(target), std::move(m));
}

json hom_to(const GroupHom& h) {
    json j;
    j["source"] = group_to(h.source());
    j["target"] = group_to(h.target());
    j["matrix"] = matrix_to(h.matrix());
    return j;
}

int degree_key(const std::string& key, const char* ctx) {
    try {
        std::size_t used = 0;
        int v = std::stoi(key, &used);
        if (used != key.size())
            throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string(ctx) + ": \"" + key + "\" is not a degree");
    }
}

CochainComplex complex_from(const json& j) {
    long long lo = small_int_from(require(j, "lo", "complex"), "complex lo");
    long long hi = small_int_from(require(j, "hi", "complex"), "complex hi");
    if (hi < lo || hi - lo > 1 << 20)
        throw ParseError("complex: degree range [lo, hi] is invalid");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(hi - lo + 1), 0);
    if (j.contains("ranks")) {
        const json& r = j.at("ranks");
        if (!r.is_object())
            throw ParseError("complex: \"ranks\" must be an object keyed by degree");
        for (const auto& [key, value] : r.items()) {
            int deg = degree_key(key, "complex ranks");
            if (deg < lo || deg > hi)
                throw ParseError("complex: rank at degree " + key + " outside [lo, hi]");
            ranks[deg - lo] = size_from(value, "complex rank");
        }
    }
    std::map<int, IntMatrix> diffs;
    if (j.contains("differentials")) {
        const json& d = j.at("differentials");
        if (!d.is_object())
            throw ParseError("complex: \"differentials\" must be an object keyed by degree");
        for (const auto& [key, value] : d.items()) {
            int deg = degree_key(key, "complex differentials");
            if (deg < lo || deg >= hi)
                throw ParseError("complex: differential at degree " + key + " outside [lo, hi)");
            diffs.emplace(deg, matrix_from(value, ranks[deg + 1 - lo], ranks[deg - lo], "complex differential"));
        }
    }
    return CochainComplex(static_cast<int>(lo), static_cast<int>(hi), std::move(ranks), std::move(diffs));
}

json complex_to(const CochainComplex& c) {
    json j;
    j["lo"] = c.lo();
    j["hi"] = c.hi();
    json ranks = json::object();
    json diffs = json::object();
    for (int i = c.lo(); i <= c.hi(); ++i) {
        if (c.rank(i) > 0)
            ranks[std::to_string(i)] = c.rank(i);
        if (i < c.hi() && !c.d(i).is_zero())
            diffs[std::to_string(i)] = matrix_to(c.d(i));
    }
    j["ranks"] = std::move(ranks);
    j["differentials"] = std::move(diffs);
    return j;
}

SimplicialComplex triangulation_from(const json& j) {
    std::size_t vertices = size_from(require(j, "vertices", "triangulation"), "triangulation vertices");
    const json& facets = require(j, "facets", "triangulation");
    if (!facets.is_array())
        throw ParseError("triangulation: \"facets\" must be an array");
    std::vector<std::vector<int>> list;
    for (const json& f : facets) {
        if (!f.is_array())
            throw ParseError("triangulation: each facet must be an array of vertex indices");
        std::vector<int> facet;
        for (const json& v : f)
            facet.push_back(static_cast<int>(small_int_from(v, "triangulation facet")));
        list.push_back(std::move(facet));
    }
    return SimplicialComplex(vertices, std::move(list));
}

json triangulation_to(const SimplicialComplex& k) {
    json j;
    j["vertices"] = k.vertex_count();
    json facets = json::array();
    for (const auto& f : k.facets()) {
        json facet = json::array();
        for (int v : f)
            facet.push_back(v);
        facets.push_back(std::move(facet));
    }
    j["facets"] = std::move(facets);
    return j;
}

std::vector<FgAbGroup> group_list_from(const json& j, std::size_t want, const char* ctx) {
    if (!j.is_array() || j.size() != want)
        throw ParseError(std::string(ctx) + ": expected an array of " + std::to_string(want) + " groups");
    std::vector<FgAbGroup> out;
    for (const json& g : j)
        out.push_back(group_from(g));
    return out;
}

LesPackage package_from(const json& j) {
    long long n = small_int_from(require(j, "n", "package"), "package n");
    if (n < 0 || n > 1 << 20)
        throw ParseError("package: dimension out of range");
    std::size_t want = static_cast<std::size_t>(n) + 1;
    std::vector<FgAbGroup> b = group_list_from(require(j, "B", "package"), want, "package B");
    std::vector<FgAbGroup> m = group_list_from(require(j, "M", "package"), want, "package M");
    std::vector<FgAbGroup> r = group_list_from(require(j, "R", "package"), want, "package R");
    const json& ji = require(j, "i", "package");
    const json& jj = require(j, "j", "package");
    const json& jd = require(j, "del", "package");
    if (!ji.is_array() || ji.size() != want || !jj.is_array() || jj.size() != want || !jd.is_array() ||
        jd.size() != want)
        throw ParseError("package: \"i\", \"j\", \"del\" must be arrays of n+1 matrices");
    std::vector<IntMatrix> inc, rel, del;
    for (std::size_t d = 0; d < want; ++d) {
        inc.push_back(matrix_from(ji.at(d), m[d].gens(), b[d].gens(), "package map i"));
        rel.push_back(matrix_from(jj.at(d), r[d].gens(), m[d].gens(), "package map j"));
        std::size_t below = d > 0 ? b[d - 1].gens() : 0;
        del.push_back(matrix_from(jd.at(d), below, r[d].gens(), "package map del"));
    }
    return LesPackage::from_parts(static_cast<int>(n), std::move(b), std::move(m), std::move(r), std::move(inc),
                                  std::move(rel), std::move(del));
}

json package_to(const LesPackage& pkg) {
    json j;
    j["n"] = pkg.n();
    json b = json::array(), m = json::array(), r = json::array();
    json ji = json::array(), jj = json::array(), jd = json::array();
    for (int d = 0; d <= pkg.n(); ++d) {
        b.push_back(group_to(pkg.boundary(d)));
        m.push_back(group_to(pkg.manifold(d)));
        r.push_back(group_to(pkg.relative(d)));
        ji.push_back(matrix_to(pkg.include_boundary(d).matrix()));
        jj.push_back(matrix_to(pkg.relativize(d).matrix()));
        jd.push_back(matrix_to(pkg.connecting(d).matrix()));
    }
    j["B"] = std::move(b);
    j["M"] = std::move(m);
    j["R"] = std::move(r);
    j["i"] = std::move(ji);
    j["j"] = std::move(jj);
    j["del"] = std::move(jd);
    return j;
}

TsPerversity perversity_from(const json& j) {
    TsPerversity p;
    p.k = static_cast<int>(small_int_from(require(j, "k", "perversity"), "perversity k"));
    p.primes = prime_set_from(require(j, "primes", "perversity"));
    return p;
}

json perversity_to(const TsPerversity& p) {
    json j;
    j["k"] = p.k;
    j["primes"] = prime_set_to(p.primes);
    return j;
}

std::vector<LinkStratum> strata_from(const json& j) {
    const json& list = require(j, "strata", "link conditions");
    if (!list.is_array())
        throw ParseError("link conditions: \"strata\" must be an array");
    std::vector<LinkStratum> out;
    for (const json& s : list) {
        LinkStratum stratum;
        if (s.contains("label")) {
            if (!s.at("label").is_string())
                throw ParseError("stratum: \"label\" must be a string");
            stratum.label = s.at("label").get<std::string>();
        }
        stratum.codim = static_cast<int>(small_int_from(require(s, "codim", "stratum"), "stratum codim"));
        if (stratum.codim < 2)
            throw ValidationError("stratum codimension must be at least 2");
        stratum.group = group_from(require(s, "group", "stratum"));
        stratum.primes = prime_set_from(require(s, "primes", "stratum"));
        out.push_back(std::move(stratum));
    }
    return out;
}

json strata_to(const std::vector<LinkStratum>& links) {
    json list = json::array();
    for (const LinkStratum& s : links) {
        json j;
        if (!s.label.empty())
            j["label"] = s.label;
        j["codim"] = s.codim;
        j["group"] = group_to(s.group);
        j["primes"] = prime_set_to(s.primes);
        list.push_back(std::move(j));
    }
    json out;
    out["strata"] = std::move(list);
    return out;
}

}  // namespace

PrimeSet prime_set_from_json(const std::string& text) {
    return prime_set_from(parse_document(text));
}

FgAbGroup group_from_json(const std::string& text) {
    return group_from(parse_document(text));
}

GroupHom hom_from_json(const std::string& text) {
    return hom_from(parse_document(text));
}

CochainComplex complex_from_json(const std::string& text) {
    return complex_from(parse_document(text));
}

SimplicialComplex triangulation_from_json(const std::string& text) {
    return triangulation_from(parse_document(text));
}

LesPackage package_from_json(const std::string& text) {
    return package_from(parse_document(text));
}

TsPerversity perversity_from_json(const std::string& text) {
    return perversity_from(parse_document(text));
}

std::vector<LinkStratum> link_strata_from_json(const std::string& text) {
    return strata_from(parse_document(text));
}

std::string to_json(const PrimeSet& s) {
    return prime_set_to(s).dump(2);
}

std::string to_json(const FgAbGroup& g) {
    return group_to(g).dump(2);
}

std::string to_json(const GroupHom& h) {
    return hom_to(h).dump(2);
}

std::string to_json(const CochainComplex& c) {
    return complex_to(c).dump(2);
}

std::string to_json(const SimplicialComplex& k) {
    return triangulation_to(k).dump(2);
}

std::string to_json(const LesPackage& pkg) {
    return package_to(pkg).dump(2);
}

std::string to_json(const TsPerversity& p) {
    return perversity_to(p).dump(2);
}

std::string to_json(const std::vector<LinkStratum>& links) {
    return strata_to(links).dump(2);
}

std::string to_json(const TsIhResult& r) {
    json j;
    j["n"] = r.n;
    json rows = json::array();
    for (int i = 0; i <= r.n; ++i) {
        json row;
        row["degree"] = i;
        row["group"] = group_to(r.groups[i]);
        row["normal_form"] = r.groups[i].to_string();
        row["regime"] = regime_name(r.regimes[i]);
        rows.push_back(std::move(row));
    }
    j["degrees"] = std::move(rows);
    return j.dump(2);
}

std::string to_json(const DualityReport& r) {
    json j;
    j["n"] = r.n;
    j["p"] = perversity_to(r.p);
    j["q"] = perversity_to(r.q);
    j["conclusive"] = r.conclusive;
    if (!r.conclusive)
        j["diagnostic"] = r.diagnostic;
    json rows = json::array();
    for (const DualityRow& row : r.rows) {
        json x;
        x["degree"] = row.degree;
        x["group"] = row.p_group.to_string();
        x["dual_rank_group"] = row.q_rank_group.to_string();
        x["dual_torsion_group"] = row.q_torsion_group.to_string();
        x["rank_ok"] = row.rank_ok;
        x["torsion_ok"] = row.torsion_ok;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["pass"] = r.all_pass();
    return j.dump(2);
}

std::string to_json(const ConditionReport& r) {
    json j;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    return j.dump(2);
}

InputKind sniff_input(const std::string& text) {
    json j = parse_document(text);
    if (j.is_object()) {
        if (j.contains("facets"))
            return InputKind::Triangulation;
        if (j.contains("B"))
            return InputKind::Package;
        if (j.contains("strata"))
            return InputKind::Strata;
        if (j.contains("lo") && j.contains("hi"))
            return InputKind::Complex;
    }
    throw ParseError("unrecognized input document: expected a triangulation, package, complex, or strata file");
}

}  // namespace tsih
