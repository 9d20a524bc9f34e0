#include "tsih/simplicial.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "tsih/errors.hpp"

namespace tsih {

namespace {

const std::vector<std::vector<int>> kNoFaces;

std::vector<int> drop_vertex(const std::vector<int>& simplex, std::size_t j) {
    std::vector<int> face;
    face.reserve(simplex.size() - 1);
    for (std::size_t t = 0; t < simplex.size(); ++t)
        if (t != j)
            face.push_back(simplex[t]);
    return face;
}

// Chain-level data of one complex: per-degree basis sizes and boundary
// operators, extendable past the top degree by zero chain groups.
struct ChainData {
    std::vector<std::size_t> dims;   // dims[d] = rank of the degree-d chain group
    std::vector<IntMatrix> bnd;      // bnd[d] : degree d -> degree d-1, d in [0, dims.size())

    std::size_t dim_at(int d) const {
        if (d < 0 || d >= static_cast<int>(dims.size()))
            return 0;
        return dims[d];
    }

    IntMatrix bnd_at(int d) const {
        if (d >= 0 && d < static_cast<int>(bnd.size()))
            return bnd[d];
        return IntMatrix::zero(dim_at(d - 1), dim_at(d));
    }

    // Cycles modulo boundaries at degree i.
    Subquotient homology_at(int i) const {
        return Subquotient(kernel_basis(bnd_at(i)), bnd_at(i + 1));
    }
};

ChainData chain_data(const SimplicialComplex& k) {
    ChainData c;
    for (int d = 0; d <= k.dimension(); ++d)
        c.dims.push_back(k.face_count(d));
    c.bnd = boundary_matrices(k);
    return c;
}

// Incidences of each codimension-1 face: the (facet, dropped-position)
// pairs producing it. Throws NotManifoldLike past two incidences.
std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> rim_incidences(
    const SimplicialComplex& k) {
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> rim;
    const auto& facets = k.facets();
    for (std::size_t f = 0; f < facets.size(); ++f) {
        for (std::size_t j = 0; j < facets[f].size(); ++j) {
            auto& uses = rim[drop_vertex(facets[f], j)];
            uses.emplace_back(f, j);
            if (uses.size() > 2)
                throw NotManifoldLike("a codimension-1 face lies in more than two facets");
        }
    }
    return rim;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<std::vector<int>> facets)
    : vertex_count_(vertex_count), facets_(std::move(facets)) {
    for (auto& f : facets_) {
        if (f.empty())
            throw ValidationError("facet with no vertices");
        std::sort(f.begin(), f.end());
        for (std::size_t t = 0; t < f.size(); ++t) {
            if (f[t] < 0 || static_cast<std::size_t>(f[t]) >= vertex_count_)
                throw ValidationError("facet vertex index out of range");
            if (t > 0 && f[t] == f[t - 1])
                throw ValidationError("facet repeats a vertex");
        }
    }
    dimension_ = facets_.empty() ? -1 : static_cast<int>(facets_.front().size()) - 1;
    for (const auto& f : facets_) {
        if (static_cast<int>(f.size()) - 1 != dimension_)
            throw ValidationError("facets of mixed dimension");
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());

    std::vector<std::set<std::vector<int>>> collected(dimension_ + 1);
    for (const auto& f : facets_) {
        std::size_t m = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            std::vector<int> face;
            for (std::size_t t = 0; t < m; ++t)
                if (mask & (std::size_t{1} << t))
                    face.push_back(f[t]);
            collected[face.size() - 1].insert(std::move(face));
        }
    }
    faces_.resize(dimension_ + 1);
    index_.resize(dimension_ + 1);
    for (int d = 0; d <= dimension_; ++d) {
        faces_[d].assign(collected[d].begin(), collected[d].end());
        for (std::size_t t = 0; t < faces_[d].size(); ++t)
            index_[d].emplace(faces_[d][t], t);
    }
}

const std::vector<std::vector<int>>& SimplicialComplex::faces(int d) const {
    if (d < 0 || d > dimension_)
        return kNoFaces;
    return faces_[d];
}

std::size_t SimplicialComplex::face_index(int d, const std::vector<int>& simplex) const {
    if (d >= 0 && d <= dimension_) {
        auto it = index_[d].find(simplex);
        if (it != index_[d].end())
            return it->second;
    }
    throw ValidationError("simplex is not a face of the complex");
}

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& k) {
    std::vector<IntMatrix> out;
    if (k.dimension() < 0)
        return out;
    out.push_back(IntMatrix::zero(0, k.face_count(0)));
    for (int d = 1; d <= k.dimension(); ++d) {
        IntMatrix m = IntMatrix::zero(k.face_count(d - 1), k.face_count(d));
        const auto& cells = k.faces(d);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (std::size_t j = 0; j < cells[c].size(); ++j) {
                std::size_t r = k.face_index(d - 1, drop_vertex(cells[c], j));
                m.at(r, c) = (j % 2 == 0) ? 1 : -1;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<FgAbGroup> homology(const SimplicialComplex& k) {
    std::vector<FgAbGroup> out;
    if (k.dimension() < 0)
        return out;
    ChainData c = chain_data(k);
    for (int i = 0; i <= k.dimension(); ++i)
        out.push_back(c.homology_at(i).group());
    return out;
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& k) {
    std::vector<std::vector<int>> rim_facets;
    if (k.dimension() >= 1) {
        for (const auto& [face, uses] : rim_incidences(k)) {
            if (uses.size() == 1)
                rim_facets.push_back(face);
        }
    }
    return SimplicialComplex(k.vertex_count(), std::move(rim_facets));
}

bool check_orientable(const SimplicialComplex& k) {
    if (k.dimension() < 1)
        return true;
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> rim;
    try {
        rim = rim_incidences(k);
    } catch (const NotManifoldLike&) {
        return false;
    }
    std::size_t count = k.facets().size();
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(count);
    for (const auto& [face, uses] : rim) {
        if (uses.size() != 2)
            continue;
        auto [f1, j1] = uses[0];
        auto [f2, j2] = uses[1];
        // Opposite induced orientations force the relative sign of the two
        // facets: eps2 = -(-1)^(j1+j2) eps1.
        int relation = ((j1 + j2) % 2 == 0) ? -1 : 1;
        adj[f1].emplace_back(f2, relation);
        adj[f2].emplace_back(f1, relation);
    }
    std::vector<int> sign(count, 0);
    std::vector<std::size_t> stack;
    for (std::size_t seed = 0; seed < count; ++seed) {
        if (sign[seed] != 0)
            continue;
        sign[seed] = 1;
        stack.push_back(seed);
        while (!stack.empty()) {
            std::size_t f = stack.back();
            stack.pop_back();
            for (auto [g, relation] : adj[f]) {
                int expected = relation * sign[f];
                if (sign[g] == 0) {
                    sign[g] = expected;
                    stack.push_back(g);
                } else if (sign[g] != expected) {
                    return false;
                }
            }
        }
    }
    return true;
}

LesPackage LesPackage::from_parts(int n, std::vector<FgAbGroup> boundary, std::vector<FgAbGroup> manifold,
                                  std::vector<FgAbGroup> relative, std::vector<IntMatrix> include_mats,
                                  std::vector<IntMatrix> relativize_mats, std::vector<IntMatrix> connecting_mats) {
    if (n < 0)
        throw ValidationError("package dimension must be nonnegative");
    std::size_t want = static_cast<std::size_t>(n) + 1;
    if (boundary.size() != want || manifold.size() != want || relative.size() != want ||
        include_mats.size() != want || relativize_mats.size() != want || connecting_mats.size() != want)
        throw ValidationError("package arrays must all have n+1 entries");
    LesPackage p;
    p.n_ = n;
    p.b_ = std::move(boundary);
    p.m_ = std::move(manifold);
    p.r_ = std::move(relative);
    for (int i = 0; i <= n; ++i) {
        p.inc_.emplace_back(p.b_[i], p.m_[i], std::move(include_mats[i]));
        p.rel_.emplace_back(p.m_[i], p.r_[i], std::move(relativize_mats[i]));
        FgAbGroup below = i > 0 ? p.b_[i - 1] : FgAbGroup::zero();
        p.del_.emplace_back(p.r_[i], below, std::move(connecting_mats[i]));
    }
    return p;
}

FgAbGroup LesPackage::boundary(int i) const {
    return (i >= 0 && i <= n_) ? b_[i] : FgAbGroup::zero();
}

FgAbGroup LesPackage::manifold(int i) const {
    return (i >= 0 && i <= n_) ? m_[i] : FgAbGroup::zero();
}

FgAbGroup LesPackage::relative(int i) const {
    return (i >= 0 && i <= n_) ? r_[i] : FgAbGroup::zero();
}

GroupHom LesPackage::include_boundary(int i) const {
    if (i >= 0 && i <= n_)
        return inc_[i];
    return GroupHom::zero(boundary(i), manifold(i));
}

GroupHom LesPackage::relativize(int i) const {
    if (i >= 0 && i <= n_)
        return rel_[i];
    return GroupHom::zero(manifold(i), relative(i));
}

GroupHom LesPackage::connecting(int i) const {
    if (i >= 0 && i <= n_)
        return del_[i];
    return GroupHom::zero(relative(i), boundary(i - 1));
}

ExactnessReport LesPackage::validate_exactness() const {
    for (int i = n_; i >= 0; --i) {
        if (!exact_at(include_boundary(i), relativize(i)))
            return {false, "exact sequence fails at the manifold group in degree " + std::to_string(i)};
        if (!exact_at(relativize(i), connecting(i)))
            return {false, "exact sequence fails at the relative group in degree " + std::to_string(i)};
        if (!exact_at(connecting(i + 1), include_boundary(i)))
            return {false, "exact sequence fails at the boundary group in degree " + std::to_string(i)};
    }
    return {true, ""};
}

LesPackage les_package(const SimplicialComplex& k) {
    SimplicialComplex rim = boundary_subcomplex(k);
    if (rim.dimension() < 0)
        throw EmptyBoundary("triangulation has empty boundary");
    if (!check_orientable(k))
        throw NotOrientable("triangulation is not orientable");

    int n = k.dimension();
    ChainData total = chain_data(k);
    ChainData sub = chain_data(rim);

    // Positions of boundary faces inside the big complex, and of the faces
    // spanning the quotient (relative) chain complex.
    std::vector<std::vector<std::size_t>> sub_pos(n), quot_pos(n + 1);
    std::vector<IntMatrix> inc_mats(n + 1), proj_mats(n + 1);
    for (int d = 0; d <= n; ++d) {
        std::vector<bool> in_sub(k.face_count(d), false);
        if (d <= rim.dimension()) {
            sub_pos[d].reserve(rim.face_count(d));
            for (const auto& s : rim.faces(d)) {
                std::size_t pos = k.face_index(d, s);
                sub_pos[d].push_back(pos);
                in_sub[pos] = true;
            }
        }
        for (std::size_t t = 0; t < k.face_count(d); ++t)
            if (!in_sub[t])
                quot_pos[d].push_back(t);
        IntMatrix inc = IntMatrix::zero(k.face_count(d), d <= rim.dimension() ? rim.face_count(d) : 0);
        for (std::size_t c = 0; c < inc.cols(); ++c)
            inc.at(sub_pos[d][c], c) = 1;
        inc_mats[d] = std::move(inc);
        IntMatrix proj = IntMatrix::zero(quot_pos[d].size(), k.face_count(d));
        for (std::size_t r = 0; r < quot_pos[d].size(); ++r)
            proj.at(r, quot_pos[d][r]) = 1;
        proj_mats[d] = std::move(proj);
    }

    ChainData quot;
    for (int d = 0; d <= n; ++d)
        quot.dims.push_back(quot_pos[d].size());
    for (int d = 0; d <= n; ++d) {
        IntMatrix full = total.bnd_at(d);
        IntMatrix m = IntMatrix::zero(quot.dim_at(d - 1), quot.dim_at(d));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m.at(r, c) = full.at(quot_pos[d - 1][r], quot_pos[d][c]);
        quot.bnd.push_back(std::move(m));
    }

    std::vector<FgAbGroup> b_groups, m_groups, r_groups;
    std::vector<IntMatrix> i_mats, j_mats, del_mats;
    std::vector<Subquotient> sub_h, tot_h, quot_h;
    for (int i = 0; i <= n; ++i) {
        sub_h.push_back(sub.homology_at(i));
        tot_h.push_back(total.homology_at(i));
        quot_h.push_back(quot.homology_at(i));
        b_groups.push_back(sub_h[i].group());
        m_groups.push_back(tot_h[i].group());
        r_groups.push_back(quot_h[i].group());
    }
    for (int i = 0; i <= n; ++i) {
        i_mats.push_back(induced_hom(sub_h[i], tot_h[i], inc_mats[i]).matrix());
        j_mats.push_back(induced_hom(tot_h[i], quot_h[i], proj_mats[i]).matrix());

        // Connecting map: lift a relative cycle, take its boundary, and read
        // the result off in boundary-subcomplex coordinates.
        std::size_t r_gens = quot_h[i].group().gens();
        std::size_t b_gens = i > 0 ? sub_h[i - 1].group().gens() : 0;
        IntMatrix del = IntMatrix::zero(b_gens, r_gens);
        for (std::size_t g = 0; g < r_gens; ++g) {
            IntVec rep = quot_h[i].gen_columns().col(g);
            IntVec lift(k.face_count(i), Int(0));
            for (std::size_t t = 0; t < rep.size(); ++t)
                lift[quot_pos[i][t]] = rep[t];
            IntVec edge = total.bnd_at(i) * lift;
            IntVec on_sub(i > 0 && i - 1 <= rim.dimension() ? rim.face_count(i - 1) : 0, Int(0));
            for (std::size_t t = 0; t < on_sub.size(); ++t) {
                on_sub[t] = edge[sub_pos[i - 1][t]];
                edge[sub_pos[i - 1][t]] = 0;
            }
            for (const Int& leftover : edge) {
                if (leftover != 0)
                    throw Error("relative cycle boundary escapes the boundary subcomplex");
            }
            if (i > 0) {
                IntVec coords = sub_h[i - 1].coordinatize(on_sub);
                for (std::size_t t = 0; t < coords.size(); ++t)
                    del.at(t, g) = coords[t];
            }
        }
        del_mats.push_back(std::move(del));
    }

    LesPackage pkg = LesPackage::from_parts(n, std::move(b_groups), std::move(m_groups), std::move(r_groups),
                                            std::move(i_mats), std::move(j_mats), std::move(del_mats));
    ExactnessReport report = pkg.validate_exactness();
    if (!report.ok)
        throw Error("triangulation produced an inconsistent sequence: " + report.detail);
    return pkg;
}

}  // namespace tsih
