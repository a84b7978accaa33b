#include "gcv/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gcv {

namespace {

// ---- exact linear algebra over Q -------------------------------------------

// row echelon; returns rank, modifies rows in place, records pivot columns
int row_echelon(std::vector<std::vector<Rat>>& rows, std::vector<int>* pivot_cols = nullptr) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<Int> primitive_dir(const std::vector<Rat>& v) {
    Int l = 1;
    for (auto& q : v) l = lcm(l, q.get_den());
    std::vector<Int> w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat t = v[i] * Rat(l);
        w[i] = t.get_num();
        g = gcd(g, w[i]);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

Rat dot(const std::vector<Int>& w, const Point& p) {
    Rat s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += Rat(w[i] * p[i]);
    return s;
}

} // namespace

// ---- exact phase-1 simplex ---------------------------------------------------

bool lp_feasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    const std::size_t m = A.size();
    if (m == 0) return true;
    const std::size_t n = A[0].size();
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }
    }
    // tableau: n structural + m artificial columns, plus rhs
    const std::size_t cols = n + m;
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(cols + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][cols] = b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    // phase-1 objective row: minimize sum of artificials, priced out
    std::vector<Rat> obj(cols + 1, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) obj[j] += T[i][j];
    for (std::size_t i = 0; i < m; ++i) obj[cols] += T[i][cols];

    while (true) {
        // Bland: smallest column with positive reduced coefficient
        std::size_t pj = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (obj[j] > 0) {
                pj = j;
                break;
            }
        if (pj == cols) break;
        // ratio test, ties by smallest basis index
        std::size_t pi = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][pj] <= 0) continue;
            Rat ratio = T[i][cols] / T[i][pj];
            if (pi == m || ratio < best || (ratio == best && basis[i] < basis[pi])) {
                pi = i;
                best = ratio;
            }
        }
        if (pi == m) break; // unbounded (cannot happen in phase 1)
        Rat piv = T[pi][pj];
        for (auto& v : T[pi]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pi || T[i][pj] == 0) continue;
            Rat f = T[i][pj];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[pi][j];
        }
        if (obj[pj] != 0) {
            Rat f = obj[pj];
            for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * T[pi][j];
        }
        basis[pi] = pj;
    }
    return obj[cols] == 0;
}

bool in_convex_hull(const Point& p, const std::vector<Point>& pts) {
    if (pts.empty()) return false;
    const std::size_t n = p.size();
    std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(pts.size()));
    std::vector<Rat> b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) A[i][j] = Rat(pts[j][i]);
        b[i] = Rat(p[i]);
    }
    for (std::size_t j = 0; j < pts.size(); ++j) A[n][j] = 1;
    b[n] = 1;
    return lp_feasible(std::move(A), std::move(b));
}

// ---- LatticePolytope ---------------------------------------------------------

LatticePolytope LatticePolytope::from_points(int ambient_dim, std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("polytope needs at least one point");
    for (auto& p : pts) {
        if (static_cast<int>(p.size()) != ambient_dim)
            throw std::invalid_argument("point dimension mismatch");
        for (auto& c : p)
            if (c < 0) throw std::invalid_argument("polytope points must be nonnegative");
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // keep only hull vertices
    std::vector<Point> verts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Point> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (others.empty() || !in_convex_hull(pts[i], others)) verts.push_back(pts[i]);
    }
    return LatticePolytope(ambient_dim, std::move(verts));
}

int LatticePolytope::affine_dim() const {
    if (verts_.size() <= 1) return 0;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < verts_.size(); ++i) {
        std::vector<Rat> r(dim_);
        for (int j = 0; j < dim_; ++j) r[j] = Rat(verts_[i][j] - verts_[0][j]);
        rows.push_back(std::move(r));
    }
    return row_echelon(rows);
}

LatticePolytope LatticePolytope::face(const std::vector<Int>& w) const {
    Rat best;
    bool first = true;
    for (auto& v : verts_) {
        Rat d = dot(w, v);
        if (first || d > best) {
            best = d;
            first = false;
        }
    }
    std::vector<Point> sel;
    for (auto& v : verts_)
        if (dot(w, v) == best) sel.push_back(v);
    return LatticePolytope(dim_, std::move(sel));
}

std::vector<std::vector<Int>> LatticePolytope::facet_normals() const {
    std::vector<std::vector<Int>> normals;
    const int k = affine_dim();
    if (k == 0) return normals;

    // affine-hull coordinates: basis rows from vertex differences
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < verts_.size(); ++i) {
        std::vector<Rat> r(dim_);
        for (int j = 0; j < dim_; ++j) r[j] = Rat(verts_[i][j] - verts_[0][j]);
        rows.push_back(std::move(r));
    }
    std::vector<int> piv;
    int rank = row_echelon(rows, &piv);
    rows.resize(static_cast<std::size_t>(rank)); // basis of the direction space

    // coordinates of each vertex: solve c * B = (v - v0) using pivot columns
    // B (k x n) in echelon form with pivot columns piv: back-substitute
    auto coords = [&](const Point& v) {
        std::vector<Rat> rhs(dim_);
        for (int j = 0; j < dim_; ++j) rhs[j] = Rat(v[j] - verts_[0][j]);
        std::vector<Rat> c(static_cast<std::size_t>(k), Rat(0));
        for (int t = 0; t < k; ++t) c[t] = rhs[piv[t]] / rows[t][piv[t]];
        return c;
    };
    // note: rows are fully reduced (row_echelon eliminates above and below), so
    // each pivot column has a single nonzero entry and the solve above is exact
    std::vector<std::vector<Rat>> pc;
    pc.reserve(verts_.size());
    for (auto& v : verts_) pc.push_back(coords(v));

    if (k == 1) {
        // two endpoint normals in coordinate space: +1 and -1
        for (int s : {1, -1}) {
            std::vector<Rat> amb(dim_, Rat(0));
            for (int j = 0; j < dim_; ++j) amb[j] = Rat(s) * rows[0][j] / rows[0][piv[0]];
            normals.push_back(primitive_dir(amb));
        }
        std::sort(normals.begin(), normals.end());
        normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
        return normals;
    }

    // enumerate (k-1)-subsets of vertex coordinates spanning candidate facets
    const std::size_t m = verts_.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(k - 1));
    std::vector<int> choose(static_cast<std::size_t>(k - 1));
    // iterate over all k-subsets via simple recursion on combinations of size k
    std::vector<std::size_t> comb(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = i;
    auto next_comb = [&]() {
        long i = static_cast<long>(comb.size()) - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - comb.size() + static_cast<std::size_t>(i)) --i;
        if (i < 0) return false;
        ++comb[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < comb.size(); ++j)
            comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (m < static_cast<std::size_t>(k)) return normals;
    std::set<std::vector<Int>> seen;
    while (true) {
        // nullspace of the (k-1) x k difference matrix of the chosen points
        std::vector<std::vector<Rat>> diff;
        for (std::size_t t = 1; t < comb.size(); ++t) {
            std::vector<Rat> r(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) r[static_cast<std::size_t>(j)] =
                pc[comb[t]][static_cast<std::size_t>(j)] - pc[comb[0]][static_cast<std::size_t>(j)];
            diff.push_back(std::move(r));
        }
        std::vector<int> dpiv;
        int drank = row_echelon(diff, &dpiv);
        if (drank == k - 1) {
            // one-dimensional nullspace: free column
            std::vector<bool> is_piv(static_cast<std::size_t>(k), false);
            for (int p : dpiv) is_piv[static_cast<std::size_t>(p)] = true;
            int freec = 0;
            while (is_piv[static_cast<std::size_t>(freec)]) ++freec;
            std::vector<Rat> nu(static_cast<std::size_t>(k), Rat(0));
            nu[static_cast<std::size_t>(freec)] = 1;
            for (int t = drank - 1; t >= 0; --t) {
                // diff row t: pivot at dpiv[t]
                Rat s = 0;
                for (int j = 0; j < k; ++j)
                    if (j != dpiv[t]) s += diff[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] * nu[static_cast<std::size_t>(j)];
                nu[static_cast<std::size_t>(dpiv[t])] = -s / diff[static_cast<std::size_t>(t)][static_cast<std::size_t>(dpiv[t])];
            }
            // orient: all vertices on the nonpositive side
            int pos = 0, neg = 0;
            for (auto& c : pc) {
                Rat s = 0;
                for (int j = 0; j < k; ++j) s += nu[static_cast<std::size_t>(j)] * (c[static_cast<std::size_t>(j)] - pc[comb[0]][static_cast<std::size_t>(j)]);
                if (s > 0) ++pos;
                if (s < 0) ++neg;
            }
            if (pos == 0 || neg == 0) {
                if (pos > 0)
                    for (auto& x : nu) x = -x;
                if (pos == 0 || neg == 0) {
                    // lift to ambient: w[piv[t]] = (M^T nu)_t with M = inv(B[:,piv])
                    // since rows are fully reduced, B[:,piv] is diagonal
                    std::vector<Rat> amb(dim_, Rat(0));
                    for (int t = 0; t < k; ++t)
                        amb[piv[t]] = nu[static_cast<std::size_t>(t)] / rows[t][piv[t]];
                    auto w = primitive_dir(amb);
                    if (seen.insert(w).second) normals.push_back(w);
                }
            }
        }
        if (!next_comb()) break;
    }
    (void)idx;
    (void)choose;
    return normals;
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
    if (P.ambient_dim() != Q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
    std::vector<Point> pts;
    pts.reserve(P.vertex_count() * Q.vertex_count());
    for (auto& p : P.vertices())
        for (auto& q : Q.vertices()) {
            Point s(P.ambient_dim());
            for (int i = 0; i < P.ambient_dim(); ++i) s[i] = p[i] + q[i];
            pts.push_back(std::move(s));
        }
    return LatticePolytope::from_points(P.ambient_dim(), std::move(pts));
}

LatticePolytope newton_polytope(const MPoly& p, bool include_origin) {
    if (p.is_zero() && !include_origin) throw std::domain_error("newton_polytope of zero polynomial");
    std::vector<Point> pts;
    for (auto& e : p.support()) {
        Point q(p.nvars());
        for (int i = 0; i < p.nvars(); ++i) q[i] = Int(e[i]);
        pts.push_back(std::move(q));
    }
    if (include_origin || pts.empty()) pts.push_back(Point(p.nvars(), Int(0)));
    return LatticePolytope::from_points(p.nvars(), std::move(pts));
}

MPoly restrict_to_face(const MPoly& p, const LatticePolytope& sigma) {
    if (p.nvars() != sigma.ambient_dim())
        throw std::invalid_argument("restrict_to_face: dimension mismatch");
    MPoly r(p.nvars());
    for (auto& [e, c] : p.terms()) {
        Point q(p.nvars());
        for (int i = 0; i < p.nvars(); ++i) q[i] = Int(e[i]);
        if (sigma.contains(q)) r.add_term(e, c);
    }
    return r;
}

// ---- PolytopeTuple and facings ------------------------------------------------

void PolytopeTuple::set(int index, LatticePolytope p) {
    if (!entries_.empty() && p.ambient_dim() != ambient_dim())
        throw std::invalid_argument("tuple entries must share the ambient dimension");
    entries_.insert_or_assign(index, std::move(p));
}

const LatticePolytope& PolytopeTuple::at(int index) const {
    auto it = entries_.find(index);
    if (it == entries_.end()) throw std::out_of_range("tuple index");
    return it->second;
}

std::vector<int> PolytopeTuple::support() const {
    std::vector<int> s;
    for (auto& [k, v] : entries_) s.push_back(k);
    return s;
}

int PolytopeTuple::ambient_dim() const {
    if (entries_.empty()) throw std::logic_error("empty tuple");
    return entries_.begin()->second.ambient_dim();
}

LatticePolytope PolytopeTuple::minkowski_total() const {
    if (entries_.empty()) throw std::logic_error("empty tuple");
    auto it = entries_.begin();
    LatticePolytope acc = it->second;
    for (++it; it != entries_.end(); ++it) acc = minkowski_sum(acc, it->second);
    return acc;
}

int facing_dimension(const Facing& f) {
    if (f.faces.empty()) throw std::invalid_argument("empty facing");
    LatticePolytope acc = f.faces[0];
    for (std::size_t i = 1; i < f.faces.size(); ++i) acc = minkowski_sum(acc, f.faces[i]);
    return acc.affine_dim() - static_cast<int>(f.indices.size());
}

Facing full_facing(const PolytopeTuple& T) {
    Facing f;
    f.indices = T.support();
    for (int i : f.indices) f.faces.push_back(T.at(i));
    f.normal = std::vector<Int>(static_cast<std::size_t>(T.ambient_dim()), Int(0));
    f.important = true; // witnessed by the tuple itself
    f.origin = T.has(0) && T.at(0).contains_origin();
    return f;
}

namespace {

// a full tuple-face: one face per support index, exposed by a common direction
struct FullFace {
    std::vector<int> support;
    std::vector<LatticePolytope> faces;
    std::vector<Int> normal;
};

int subtuple_dimension(const FullFace& g, const std::vector<int>& J) {
    const LatticePolytope* acc = nullptr;
    LatticePolytope tmp = g.faces[0];
    bool first = true;
    for (std::size_t k = 0; k < g.support.size(); ++k) {
        if (std::find(J.begin(), J.end(), g.support[k]) == J.end()) continue;
        if (first) {
            tmp = g.faces[k];
            first = false;
        } else {
            tmp = minkowski_sum(tmp, g.faces[k]);
        }
    }
    (void)acc;
    return tmp.affine_dim() - static_cast<int>(J.size());
}

} // namespace

std::vector<Facing> tuple_facings(const PolytopeTuple& T, int max_ambient_dim) {
    if (T.size() == 0) throw std::invalid_argument("tuple_facings: empty tuple");
    if (T.ambient_dim() > max_ambient_dim)
        throw std::invalid_argument("tuple_facings: ambient dimension exceeds the configured cap");
    const std::vector<int> sup = T.support();
    LatticePolytope total = T.minkowski_total();
    auto fnormals = T.size() == 1 ? T.at(sup[0]).facet_normals() : total.facet_normals();

    // candidate exposure directions: sums over nonempty subsets of facet normals
    std::set<std::vector<Int>> dirs;
    const std::size_t nf = fnormals.size();
    if (nf > 20) throw std::runtime_error("tuple_facings: too many facets at desk scale");
    for (std::size_t mask = 1; mask < (1u << nf); ++mask) {
        std::vector<Int> w(static_cast<std::size_t>(T.ambient_dim()), Int(0));
        for (std::size_t j = 0; j < nf; ++j)
            if (mask & (1u << j))
                for (std::size_t t = 0; t < w.size(); ++t) w[t] += fnormals[j][t];
        bool zero = true;
        for (auto& x : w)
            if (x != 0) zero = false;
        if (!zero) dirs.insert(std::move(w));
    }

    // full tuple-faces exposed by each direction (proper ones only)
    std::vector<FullFace> fulls;
    std::set<std::vector<std::vector<Point>>> seen_faces;
    for (auto& w : dirs) {
        if (total.face(w) == total) continue; // improper exposure
        FullFace g;
        g.support = sup;
        g.normal = w;
        std::vector<std::vector<Point>> key;
        for (int i : sup) {
            g.faces.push_back(T.at(i).face(w));
            key.push_back(g.faces.back().vertices());
        }
        if (seen_faces.insert(key).second) fulls.push_back(std::move(g));
    }

    // restrict every full face to every nonempty support subset
    std::vector<Facing> out;
    std::set<std::pair<std::vector<int>, std::vector<std::vector<Point>>>> seen;
    const std::size_t ns = sup.size();
    for (auto& g : fulls) {
        for (std::size_t mask = 1; mask < (1u << ns); ++mask) {
            Facing f;
            std::vector<std::vector<Point>> key;
            for (std::size_t k = 0; k < ns; ++k)
                if (mask & (1u << k)) {
                    f.indices.push_back(sup[k]);
                    f.faces.push_back(g.faces[k]);
                    key.push_back(g.faces[k].vertices());
                }
            if (!seen.insert({f.indices, key}).second) continue;
            f.normal = g.normal;
            out.push_back(std::move(f));
        }
    }

    // importance: exists a witness full face (including the improper whole
    // tuple) whose restriction is the facing and which minimizes the tuple
    // dimension among all supersets of the facing's support
    std::vector<FullFace> witnesses = fulls;
    {
        FullFace whole;
        whole.support = sup;
        whole.normal = std::vector<Int>(static_cast<std::size_t>(T.ambient_dim()), Int(0));
        for (int i : sup) whole.faces.push_back(T.at(i));
        witnesses.push_back(std::move(whole));
    }
    for (auto& f : out) {
        Facing probe = f;
        int dim_f = facing_dimension(f);
        bool important = false;
        for (auto& g : witnesses) {
            // does g restrict to f?
            bool match = true;
            for (std::size_t k = 0; k < f.indices.size(); ++k) {
                auto pos = static_cast<std::size_t>(
                    std::find(sup.begin(), sup.end(), f.indices[k]) - sup.begin());
                if (!(g.faces[pos] == f.faces[k])) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            // all supersets J of f.indices must not have smaller tuple dimension
            std::vector<int> rest;
            for (int i : sup)
                if (std::find(f.indices.begin(), f.indices.end(), i) == f.indices.end())
                    rest.push_back(i);
            bool ok = true;
            for (std::size_t mask = 0; mask < (1u << rest.size()) && ok; ++mask) {
                std::vector<int> J = f.indices;
                for (std::size_t k = 0; k < rest.size(); ++k)
                    if (mask & (1u << k)) J.push_back(rest[k]);
                std::sort(J.begin(), J.end());
                if (subtuple_dimension(g, J) < dim_f) ok = false;
            }
            if (ok) {
                important = true;
                break;
            }
        }
        f.important = important;
        f.origin = false;
        const LatticePolytope* g0 = f.face_of(0);
        if (g0 != nullptr && g0->contains_origin()) f.origin = true;
        (void)probe;
    }
    return out;
}

std::vector<Facing> important_origin_facings(const PolytopeTuple& T, int max_ambient_dim) {
    if (!T.has(0) || !T.at(0).contains_origin())
        throw std::invalid_argument("important_origin_facings: tuple is not origin");
    std::vector<Facing> out;
    for (auto& f : tuple_facings(T, max_ambient_dim))
        if (f.important && f.origin) out.push_back(f);
    return out;
}

} // namespace gcv
