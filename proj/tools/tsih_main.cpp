// Command-line front end: reads JSON descriptions of spaces, complexes, and
// link data, runs the exact computations, and prints tables or JSON.
//
// Exit codes: 0 success, 1 a checked condition fails, 2 bad input,
// 3 factorization limit hit or a verdict is inconclusive.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tsih/cochain.hpp"
#include "tsih/errors.hpp"
#include "tsih/json_io.hpp"
#include "tsih/simplicial.hpp"
#include "tsih/ts_ih.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConditionFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInconclusive = 3;

struct Options {
    std::string input;
    std::string format = "table";
    std::string primes;
    std::uint64_t factor_bound = 0;
    unsigned jobs = 1;
    int k = 0;
    int degree = 0;
    bool sweep = false;
    std::string mode = "free";
};

bool json_output(const Options& opt) { return opt.format == "json"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw tsih::ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// A package from either a triangulated space or explicit group data.
tsih::LesPackage load_package(const std::string& text) {
    switch (tsih::sniff_input(text)) {
        case tsih::InputKind::Triangulation:
            return tsih::les_package(tsih::triangulation_from_json(text));
        case tsih::InputKind::Package:
            return tsih::package_from_json(text);
        default:
            throw tsih::ValidationError("expected a triangulation or an exact-sequence package");
    }
}

tsih::CochainComplex load_complex(const std::string& text) {
    if (tsih::sniff_input(text) != tsih::InputKind::Complex)
        throw tsih::ValidationError("expected a cochain complex document");
    return tsih::complex_from_json(text);
}

nlohmann::json group_json(const tsih::FgAbGroup& g) {
    return nlohmann::json::parse(tsih::to_json(g));
}

std::string homology_line(const std::vector<tsih::FgAbGroup>& h, const char* prefix,
                          int first_degree = 0) {
    std::ostringstream os;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i > 0)
            os << ' ';
        os << prefix << first_degree + static_cast<int>(i) << '=' << h[i].to_string();
    }
    return os.str();
}

const std::vector<tsih::PrimeSet>& sweep_prime_grid() {
    using tsih::Int;
    using tsih::PrimeSet;
    static const std::vector<PrimeSet> grid = {
        PrimeSet::empty(),
        PrimeSet::finite({Int(2)}),
        PrimeSet::finite({Int(3)}),
        PrimeSet::finite({Int(2), Int(3)}),
        PrimeSet::finite({Int(5)}),
        PrimeSet::cofinite({Int(2)}),
        PrimeSet::all_primes(),
    };
    return grid;
}

// ---------------------------------------------------------------------------

int run_homology(const Options& opt) {
    tsih::SimplicialComplex k = tsih::triangulation_from_json(read_file(opt.input));
    std::vector<tsih::FgAbGroup> h = tsih::homology(k);
    if (json_output(opt)) {
        nlohmann::json doc;
        doc["dimension"] = k.dimension();
        doc["degrees"] = nlohmann::json::array();
        for (std::size_t i = 0; i < h.size(); ++i) {
            doc["degrees"].push_back({{"degree", i},
                                      {"group", group_json(h[i])},
                                      {"normal_form", h[i].to_string()}});
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << homology_line(h, "H") << '\n';
    }
    return kExitOk;
}

int run_tsih(const Options& opt) {
    tsih::LesPackage pkg = load_package(read_file(opt.input));
    tsih::TsPerversity p{opt.k, tsih::parse_prime_set_text(opt.primes)};
    tsih::TsIhResult r = tsih::compute_tsih(pkg, p);
    if (json_output(opt)) {
        std::cout << tsih::to_json(r) << '\n';
    } else {
        std::cout << "perversity " << p.to_string() << '\n';
        std::cout << homology_line(r.groups, "IH") << '\n';
        for (int i = 0; i <= r.n; ++i)
            std::cout << "  degree " << i << ": " << r.groups[i].to_string() << "  ["
                      << tsih::regime_name(r.regimes[i]) << "]\n";
    }
    return kExitOk;
}

int report_duality(const tsih::DualityReport& rep, const Options& opt) {
    if (json_output(opt)) {
        std::cout << tsih::to_json(rep) << '\n';
    } else {
        std::cout << "p = " << rep.p.to_string() << ", dual q = " << rep.q.to_string() << '\n';
        if (!rep.conclusive) {
            std::cout << "inconclusive: " << rep.diagnostic << '\n';
        } else {
            int passed = 0;
            for (const tsih::DualityRow& row : rep.rows) {
                bool ok = row.rank_ok && row.torsion_ok;
                passed += ok ? 1 : 0;
                std::cout << "  degree " << row.degree << ": " << row.p_group.to_string()
                          << "  | rank vs " << row.q_rank_group.to_string() << ": "
                          << (row.rank_ok ? "ok" : "MISMATCH") << "  | torsion vs "
                          << row.q_torsion_group.to_string() << ": "
                          << (row.torsion_ok ? "ok" : "MISMATCH") << '\n';
            }
            std::cout << passed << "/" << rep.rows.size() << " degrees pass\n";
        }
    }
    if (!rep.conclusive)
        return kExitInconclusive;
    return rep.all_pass() ? kExitOk : kExitConditionFailed;
}

int run_duality_sweep(const tsih::LesPackage& pkg, const Options& opt) {
    struct Combo {
        tsih::TsPerversity p;
        tsih::DualityReport report;
    };
    std::vector<Combo> combos;
    for (int k = -3; k <= pkg.n() + 1; ++k)
        for (const tsih::PrimeSet& s : sweep_prime_grid())
            combos.push_back({tsih::TsPerversity{k, s}, {}});

    unsigned workers = std::min<unsigned>(opt.jobs, static_cast<unsigned>(combos.size()));
    workers = std::max(workers, 1u);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t t = next.fetch_add(1);
            if (t >= combos.size())
                break;
            combos[t].report = tsih::duality_report(pkg, combos[t].p);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool)
        th.join();

    std::size_t passed = 0, inconclusive = 0;
    for (const Combo& c : combos) {
        if (!c.report.conclusive)
            ++inconclusive;
        else if (c.report.all_pass())
            ++passed;
    }
    if (json_output(opt)) {
        nlohmann::json doc;
        doc["n"] = pkg.n();
        doc["combinations"] = nlohmann::json::array();
        for (const Combo& c : combos) {
            doc["combinations"].push_back({{"k", c.p.k},
                                           {"primes", c.p.primes.to_string()},
                                           {"conclusive", c.report.conclusive},
                                           {"pass", c.report.all_pass()}});
        }
        doc["pass"] = passed == combos.size();
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const Combo& c : combos) {
            std::cout << "k=" << c.p.k << " primes=" << c.p.primes.to_string() << ": "
                      << (!c.report.conclusive ? "inconclusive"
                          : c.report.all_pass() ? "pass"
                                                : "FAIL")
                      << '\n';
        }
        std::cout << "sweep: " << passed << "/" << combos.size() << " combinations pass\n";
    }
    if (inconclusive > 0)
        return kExitInconclusive;
    return passed == combos.size() ? kExitOk : kExitConditionFailed;
}

int run_duality(const Options& opt) {
    tsih::LesPackage pkg = load_package(read_file(opt.input));
    if (opt.sweep)
        return run_duality_sweep(pkg, opt);
    tsih::TsPerversity p{opt.k, tsih::parse_prime_set_text(opt.primes)};
    return report_duality(tsih::duality_report(pkg, p), opt);
}

int run_truncate(const Options& opt) {
    tsih::CochainComplex c = load_complex(read_file(opt.input));
    tsih::PrimeSet s = tsih::parse_prime_set_text(opt.primes);
    tsih::TruncationResult tr = tsih::tt_truncate(c, opt.k, s);

    int lo = std::min(c.lo(), tr.complex.lo());
    int hi = std::max(c.hi(), tr.complex.hi());
    std::vector<tsih::FgAbGroup> before, after;
    for (int i = lo; i <= hi; ++i) {
        before.push_back(tsih::cohomology(c, i));
        after.push_back(tsih::cohomology(tr.complex, i));
    }
    if (json_output(opt)) {
        nlohmann::json doc = nlohmann::json::parse(tsih::to_json(tr.complex));
        nlohmann::json original = nlohmann::json::object();
        nlohmann::json truncated = nlohmann::json::object();
        for (int i = lo; i <= hi; ++i) {
            original[std::to_string(i)] = before[static_cast<std::size_t>(i - lo)].to_string();
            truncated[std::to_string(i)] = after[static_cast<std::size_t>(i - lo)].to_string();
        }
        doc["original_cohomology"] = original;
        doc["cohomology"] = truncated;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "original:  " << homology_line(before, "H", lo) << '\n';
        std::cout << "truncated: " << homology_line(after, "H", lo) << '\n';
        std::cout << tsih::to_json(tr.complex) << '\n';
    }
    return kExitOk;
}

int run_heart(const Options& opt) {
    tsih::CochainComplex c = load_complex(read_file(opt.input));
    tsih::PrimeSet s = tsih::parse_prime_set_text(opt.primes);
    tsih::HeartObject h = tsih::p_H(c, opt.degree, s);
    bool inside = tsih::in_heart(c, s);
    if (json_output(opt)) {
        nlohmann::json doc;
        doc["degree"] = opt.degree;
        doc["primes"] = s.to_string();
        doc["slot0"] = group_json(h.slot0);
        doc["slot1"] = group_json(h.slot1);
        doc["normal_form"] = h.to_string();
        doc["in_heart"] = inside;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "pH^" << opt.degree << " = " << h.to_string() << '\n';
        std::cout << "complex lies in the heart: " << (inside ? "yes" : "no") << '\n';
    }
    return kExitOk;
}

int run_selfdual(const Options& opt) {
    std::string text = read_file(opt.input);
    if (tsih::sniff_input(text) != tsih::InputKind::Strata)
        throw tsih::ValidationError("expected a link-strata document");
    std::vector<tsih::LinkStratum> links = tsih::link_strata_from_json(text);
    tsih::ConditionReport report = opt.mode == "torsion" ? tsih::check_self_duality_torsion(links)
                                                         : tsih::check_self_duality_free(links);
    if (json_output(opt)) {
        nlohmann::json doc = nlohmann::json::parse(tsih::to_json(report));
        doc["mode"] = opt.mode;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << (report.pass ? "pass" : "fail") << ": " << report.detail << '\n';
    }
    return report.pass ? kExitOk : kExitConditionFailed;
}

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("input", opt.input, "input JSON file")->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    sub->add_option("--factor-bound", opt.factor_bound,
                    "largest trial divisor used to certify primes")
        ->envname("TSIH_FACTOR_BOUND");
    sub->add_option("--jobs", opt.jobs, "worker threads for sweeps")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact torsion-sensitive intersection homology calculator"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* homology = app.add_subcommand("homology", "integral homology of a triangulation");
    add_common(homology, opt);

    CLI::App* tsih_cmd = app.add_subcommand(
        "tsih", "intersection homology of the coned-off space, from a triangulation or package");
    add_common(tsih_cmd, opt);
    tsih_cmd->add_option("--k", opt.k, "cutoff degree of the perversity")->required();
    tsih_cmd->add_option("--primes", opt.primes,
                         "prime set: comma list, \"\" for none, \"all\", or \"all-2,3\"");

    CLI::App* duality = app.add_subcommand("duality", "check duality for one perversity or a sweep");
    add_common(duality, opt);
    duality->add_option("--k", opt.k, "cutoff degree of the perversity");
    duality->add_option("--primes", opt.primes, "prime set of the perversity");
    duality->add_flag("--sweep", opt.sweep, "run the full (k, primes) grid");

    CLI::App* truncate = app.add_subcommand("truncate", "torsion-tipped truncation of a complex");
    add_common(truncate, opt);
    truncate->add_option("--k", opt.k, "truncation degree")->required();
    truncate->add_option("--primes", opt.primes, "prime set of the truncation");

    CLI::App* heart = app.add_subcommand("heart", "perverse cohomology slots of a complex");
    add_common(heart, opt);
    heart->add_option("--degree", opt.degree, "slot degree")->capture_default_str();
    heart->add_option("--primes", opt.primes, "prime set of the t-structure");

    CLI::App* selfdual = app.add_subcommand("selfdual", "self-duality conditions on link data");
    add_common(selfdual, opt);
    selfdual->add_option("--mode", opt.mode, "condition family")
        ->check(CLI::IsMember({"free", "torsion"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (opt.factor_bound != 0)
            tsih::set_factor_bound(opt.factor_bound);
        if (app.got_subcommand(homology))
            return run_homology(opt);
        if (app.got_subcommand(tsih_cmd))
            return run_tsih(opt);
        if (app.got_subcommand(duality))
            return run_duality(opt);
        if (app.got_subcommand(truncate))
            return run_truncate(opt);
        if (app.got_subcommand(heart))
            return run_heart(opt);
        if (app.got_subcommand(selfdual))
            return run_selfdual(opt);
    } catch (const tsih::FactorizationLimit& e) {
        std::cerr << "error: " << opt.input << ": " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const tsih::Error& e) {
        std::cerr << "error: " << opt.input << ": " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
