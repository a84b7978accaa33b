#include "gcv/newton.hpp"

#include <algorithm>

#include "gcv/acv.hpp"
#include "gcv/bivar.hpp"
#include "gcv/elimination.hpp"
#include "gcv/macaulay.hpp"
#include "gcv/rng.hpp"

namespace gcv {

PolyTuple make_poly_tuple(const MPoly& F, const std::vector<MPoly>& gs) {
    PolyTuple T;
    T.objective = F;
    T.constraints = gs;
    T.tuple.set(0, newton_polytope(F, true));
    for (std::size_t i = 0; i < gs.size(); ++i)
        T.tuple.set(static_cast<int>(i) + 1, newton_polytope(gs[i]));
    return T;
}

PolyTuple unconstrained_tuple(const MPoly& f) { return make_poly_tuple(f, {}); }

namespace {

// all (c x c) minors of the matrix with rows nabla(F) and Jac(g), c = #rows
std::vector<MPoly> rank_deficiency_minors(const MPoly& F, const std::vector<MPoly>& gs) {
    const int n = F.nvars();
    std::vector<std::vector<MPoly>> C;
    {
        std::vector<MPoly> row;
        for (int j = 0; j < n; ++j) row.push_back(F.derivative(j));
        C.push_back(std::move(row));
    }
    for (auto& g : gs) {
        std::vector<MPoly> row;
        for (int j = 0; j < n; ++j) row.push_back(g.derivative(j));
        C.push_back(std::move(row));
    }
    const int c = static_cast<int>(C.size());
    std::vector<MPoly> minors;
    if (c > n) return minors; // rank can never reach c: the condition is vacuous
    // iterate over all c-subsets of columns
    std::vector<int> cols(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) cols[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<std::vector<MPoly>> sub(static_cast<std::size_t>(c));
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) sub[static_cast<std::size_t>(i)].push_back(C[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])]);
        minors.push_back(det_cofactor(sub));
        int i = c - 1;
        while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - c + i) --i;
        if (i < 0) break;
        ++cols[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < c; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
    }
    return minors;
}

} // namespace

std::vector<AlgebraicNumber> face_discriminant(const PolyTuple& T, const Facing& G,
                                               std::uint64_t seed) {
    if (!G.origin || G.face_of(0) == nullptr)
        throw std::invalid_argument("face_discriminant: facing is not origin");
    const int n = T.objective.nvars();

    MPoly Fg = restrict_to_face(T.objective, *G.face_of(0));
    std::vector<MPoly> gg;
    for (int idx : G.indices) {
        if (idx == 0) continue;
        MPoly g = restrict_to_face(T.constraints[static_cast<std::size_t>(idx - 1)],
                                   *G.face_of(idx));
        if (g.is_zero()) continue;          // vacuous constraint
        if (g.is_constant()) return {};     // empty domain
        gg.push_back(std::move(g));
    }
    // a constant objective restriction maps everything to that constant
    if (Fg.is_constant())
        return {AlgebraicNumber::from_rational(Rat(Fg.constant_value()))};

    std::vector<MPoly> minors = rank_deficiency_minors(Fg, gg);
    std::vector<MPoly> sys_x = gg;
    for (auto& m : minors)
        if (!m.is_zero()) sys_x.push_back(m);

    // variables that actually occur; absent coordinates are torus-free
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto mark = [&](const MPoly& p) {
        for (int v : used_vars(p)) used[static_cast<std::size_t>(v)] = true;
    };
    mark(Fg);
    for (auto& g : sys_x) mark(g);

    // ring: x-vars, then t, then z
    const int nr = n + 2, tv = n, zv = n + 1;
    std::vector<int> into(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) into[static_cast<std::size_t>(i)] = i;

    MPoly torus = MPoly::variable(nr, tv);
    for (int i = 0; i < n; ++i)
        if (used[static_cast<std::size_t>(i)]) torus = torus * MPoly::variable(nr, i);
    torus -= MPoly::constant(nr, Int(1));

    std::vector<MPoly> sys;
    for (auto& p : sys_x) sys.push_back(p.remap(nr, into));
    sys.push_back(torus);
    MPoly fz = Fg.remap(nr, into) - MPoly::variable(nr, zv);

    std::vector<int> elim;
    for (int i = 0; i < n; ++i)
        if (used[static_cast<std::size_t>(i)]) elim.push_back(i);
    elim.push_back(tv);

    const int target = static_cast<int>(elim.size());
    if (static_cast<int>(sys.size()) < target)
        throw std::invalid_argument("face_discriminant: underdetermined face system");

    Rng seeder(seed);
    for (int attempt = 0; attempt < 5; ++attempt) {
        try {
            std::vector<MPoly> sq = make_square(sys, target, seeder.next());
            sq.push_back(fz);
            EliminationResult r = resultant_gcp(sq, elim);
            if (r.eliminant.is_zero()) throw DegenerateElimination("zero eliminant");
            if (r.eliminant.degree_in(zv) < 1) return {};
            UPoly u = to_upoly(r.eliminant, zv);
            return isolate_real_roots(u);
        } catch (const DegenerateElimination&) {
            continue;
        }
    }
    throw MonteCarloFailure("face_discriminant: eliminations stayed degenerate");
}

NewtonSuperset bifurcation_superset_newton(const PolyTuple& T, std::uint64_t seed) {
    NewtonSuperset out;
    out.facings = important_origin_facings(T.tuple);
    Rng seeder(seed);
    for (auto& f : out.facings) {
        auto vals = face_discriminant(T, f, seeder.next());
        out.values = merge_root_sets(out.values, vals);
        out.per_facing.push_back(std::move(vals));
    }
    // the value at the origin always belongs to the superset
    Rat f0(T.objective.constant_value());
    out.values = merge_root_sets(out.values, {AlgebraicNumber::from_rational(f0)});
    return out;
}

} // namespace gcv
