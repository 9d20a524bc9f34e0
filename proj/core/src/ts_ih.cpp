#include "tsih/ts_ih.hpp"

#include "tsih/errors.hpp"

namespace tsih {

std::string TsPerversity::to_string() const {
    return "(k=" + std::to_string(k) + ", primes=" + primes.to_string() + ")";
}

TsPerversity dual_perversity(const TsPerversity& p, int codim) {
    return TsPerversity{codim - 2 - p.k, complement(p.primes)};
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Relative: return "relative";
        case Regime::Kernel: return "kernel";
        case Regime::Cokernel: return "cokernel";
        case Regime::Absolute: return "absolute";
        case Regime::Image: return "image";
    }
    return "?";
}

FgAbGroup TsIhResult::at(int i) const {
    if (i < 0 || i > n)
        return FgAbGroup::zero();
    return groups[i];
}

TsIhResult compute_tsih(const LesPackage& pkg, const TsPerversity& p) {
    int n = pkg.n();
    TsIhResult out;
    out.n = n;
    for (int i = 0; i <= n; ++i) {
        if (i >= n - p.k) {
            out.groups.push_back(pkg.relative(i));
            out.regimes.push_back(Regime::Relative);
        } else if (i == n - p.k - 1) {
            GroupHom cut = compose(torsion_quotient(pkg.boundary(i - 1), p.primes), pkg.connecting(i));
            out.groups.push_back(kernel(cut).group);
            out.regimes.push_back(Regime::Kernel);
        } else if (i == n - p.k - 2) {
            out.groups.push_back(cokernel(restrict_to_torsion(pkg.include_boundary(i), p.primes)));
            out.regimes.push_back(Regime::Cokernel);
        } else {
            out.groups.push_back(pkg.manifold(i));
            out.regimes.push_back(Regime::Absolute);
        }
    }
    return out;
}

TsIhResult classical_ih(const LesPackage& pkg, int k) {
    int n = pkg.n();
    TsIhResult out;
    out.n = n;
    for (int i = 0; i <= n; ++i) {
        if (i >= n - k) {
            out.groups.push_back(pkg.relative(i));
            out.regimes.push_back(Regime::Relative);
        } else if (i == n - k - 1) {
            out.groups.push_back(image_group(pkg.relativize(i)));
            out.regimes.push_back(Regime::Image);
        } else {
            out.groups.push_back(pkg.manifold(i));
            out.regimes.push_back(Regime::Absolute);
        }
    }
    return out;
}

bool DualityReport::all_pass() const {
    if (!conclusive)
        return false;
    for (const auto& row : rows)
        if (!row.rank_ok || !row.torsion_ok)
            return false;
    return true;
}

DualityReport duality_report(const LesPackage& pkg, const TsPerversity& p) {
    DualityReport report;
    report.n = pkg.n();
    report.p = p;
    report.q = dual_perversity(p, pkg.n());
    ExactnessReport exact = pkg.validate_exactness();
    if (!exact.ok) {
        report.conclusive = false;
        report.diagnostic = exact.detail;
        return report;
    }
    TsIhResult lhs = compute_tsih(pkg, p);
    TsIhResult rhs = compute_tsih(pkg, report.q);
    for (int i = 0; i <= pkg.n(); ++i) {
        DualityRow row;
        row.degree = i;
        row.p_group = lhs.at(i);
        row.q_rank_group = rhs.at(pkg.n() - i);
        row.q_torsion_group = rhs.at(pkg.n() - i - 1);
        row.rank_ok = row.p_group.rank() == row.q_rank_group.rank();
        row.torsion_ok = row.p_group.invariants() == row.q_torsion_group.invariants();
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

std::string stratum_name(const LinkStratum& s, std::size_t index) {
    return s.label.empty() ? "stratum #" + std::to_string(index) : s.label;
}

}  // namespace

ConditionReport check_self_duality_free(const std::vector<LinkStratum>& links) {
    for (std::size_t t = 0; t < links.size(); ++t) {
        const LinkStratum& s = links[t];
        if (s.codim < 2)
            throw ValidationError("stratum codimension must be at least 2");
        if (s.codim % 2 == 0) {
            if (!s.group.is_torsion_free())
                return {false, stratum_name(s, t) + ": even-codimension link group " + s.group.to_string() +
                                   " has torsion"};
        } else {
            if (!is_torsion_group(s.group, complement(s.primes)))
                return {false, stratum_name(s, t) + ": odd-codimension link group " + s.group.to_string() +
                                   " is not " + complement(s.primes).to_string() + "-torsion"};
        }
    }
    return {true, "all strata satisfy the torsion-free self-duality conditions"};
}

ConditionReport check_self_duality_torsion(const std::vector<LinkStratum>& links) {
    for (std::size_t t = 0; t < links.size(); ++t) {
        const LinkStratum& s = links[t];
        if (s.codim < 2)
            throw ValidationError("stratum codimension must be at least 2");
        if (s.codim % 2 == 1) {
            if (!s.group.is_zero())
                return {false, stratum_name(s, t) + ": odd-codimension link group " + s.group.to_string() +
                                   " is nonzero"};
        } else {
            if (!is_torsion_group(s.group, complement(s.primes)))
                return {false, stratum_name(s, t) + ": even-codimension link group " + s.group.to_string() +
                                   " is not " + complement(s.primes).to_string() + "-torsion"};
        }
    }
    return {true, "all strata satisfy the torsion self-duality conditions"};
}

bool check_gs_locally_torsion_free(const LesPackage& pkg, int p1) {
    return pkg.boundary(pkg.n() - 2 - p1).is_torsion_free();
}

}  // namespace tsih
