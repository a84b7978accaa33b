#ifndef GCV_POLYTOPE_HPP
#define GCV_POLYTOPE_HPP

#include <map>
#include <vector>

#include "gcv/integer.hpp"
#include "gcv/mpoly.hpp"

namespace gcv {

using Point = std::vector<Int>;

// feasibility of { x >= 0 : A x = b } by exact phase-1 simplex (Bland's rule)
bool lp_feasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

// is p a convex combination of the given points?
bool in_convex_hull(const Point& p, const std::vector<Point>& pts);

// Lattice polytope stored by its vertex set (hull-redundant points removed on
// construction). All coordinates must be nonnegative.
class LatticePolytope {
  public:
    static LatticePolytope from_points(int ambient_dim, std::vector<Point> pts);
    static LatticePolytope point(int ambient_dim) {
        return from_points(ambient_dim, {Point(ambient_dim, Int(0))});
    }

    int ambient_dim() const { return dim_; }
    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }

    int affine_dim() const;
    bool contains(const Point& p) const { return in_convex_hull(p, verts_); }
    bool contains_origin() const { return contains(Point(dim_, Int(0))); }

    // face exposed by maximizing the linear functional w
    LatticePolytope face(const std::vector<Int>& w) const;

    // primitive integer facet normals, taken inside the affine hull's
    // direction space (empty when the polytope is a point)
    std::vector<std::vector<Int>> facet_normals() const;

    bool operator==(const LatticePolytope& o) const {
        return dim_ == o.dim_ && verts_ == o.verts_;
    }

  private:
    LatticePolytope(int dim, std::vector<Point> verts) : dim_(dim), verts_(std::move(verts)) {}
    int dim_ = 0;
    std::vector<Point> verts_;
};

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);

// convex hull of supp(p), with the origin adjoined when include_origin
LatticePolytope newton_polytope(const MPoly& p, bool include_origin = false);

// sum of the terms of p whose exponents lie in sigma
MPoly restrict_to_face(const MPoly& p, const LatticePolytope& sigma);

// Tuple of polytopes indexed by a finite support set.
class PolytopeTuple {
  public:
    PolytopeTuple() = default;

    void set(int index, LatticePolytope p);
    const LatticePolytope& at(int index) const;
    bool has(int index) const { return entries_.count(index) != 0; }
    std::vector<int> support() const;
    int ambient_dim() const;
    std::size_t size() const { return entries_.size(); }

    LatticePolytope minkowski_total() const; // over the full support

  private:
    std::map<int, LatticePolytope> entries_;
};

struct Facing {
    std::vector<int> indices;           // subset I of the tuple support, sorted
    std::vector<LatticePolytope> faces; // aligned with indices
    std::vector<Int> normal;            // witness direction (all-zero for the full tuple)
    bool important = false;
    bool origin = false;

    const LatticePolytope* face_of(int index) const {
        for (std::size_t k = 0; k < indices.size(); ++k)
            if (indices[k] == index) return &faces[k];
        return nullptr;
    }
};

// dim(sum of the faces) - #indices; may be negative
int facing_dimension(const Facing& f);

// All facings obtained by restricting the proper tuple-faces of the tuple to
// every nonempty support subset, deduplicated; important/origin flags filled.
std::vector<Facing> tuple_facings(const PolytopeTuple& T, int max_ambient_dim = 6);

// the whole tuple as an (improper) facing, witness normal zero
Facing full_facing(const PolytopeTuple& T);

// facings that are both important and origin; requires an origin tuple
std::vector<Facing> important_origin_facings(const PolytopeTuple& T, int max_ambient_dim = 6);

} // namespace gcv

#endif
