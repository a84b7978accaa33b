#ifndef GCV_MACAULAY_HPP
#define GCV_MACAULAY_HPP

#include <vector>

#include "gcv/mpoly.hpp"

namespace gcv {

// max over terms of the exponent sum restricted to the given variables
long degree_in_vars(const MPoly& p, const std::vector<int>& vars);

// homogenize w.r.t. `vars` at degree `delta` using variable `homvar`
MPoly homogenize_in(const MPoly& p, const std::vector<int>& vars, int homvar, long delta);

// Macaulay matrix of a polynomial system: rows are the monomial shifts
// x^alpha * A_k with deg(x^alpha A_k) = m taken over the matrix variables,
// entries are polynomials in the remaining (auxiliary) variables.
struct MacaulayMatrix {
    int nring = 0;                   // variables of the common ring
    std::vector<int> matrix_vars;    // variables eliminated by the matrix
    long m = 0;                      // shift degree
    std::vector<Expt> cols;          // monomials of degree m in matrix_vars
    struct RowLabel {
        int poly;  // source polynomial index
        Expt shift;
    };
    std::vector<RowLabel> rows;
    std::vector<std::vector<MPoly>> entries; // aux-variable polynomials

    std::size_t col_count() const { return cols.size(); }
    std::size_t row_count() const { return rows.size(); }
};

// all shifts of the (already homogeneous in matrix_vars) polynomials at degree m
MacaulayMatrix macaulay_matrix(const std::vector<MPoly>& homogeneous,
                               const std::vector<long>& degrees,
                               const std::vector<int>& matrix_vars, long m);

// Exact determinant of a square matrix of integers (Bareiss).
Int det_bareiss(std::vector<std::vector<Int>> a);

// Exact determinant of a square matrix with polynomial entries by
// per-variable tensor-grid evaluation and interpolation. deg_bounds[v] must
// bound the degree of the determinant in variable v.
MPoly det_interpolated(const std::vector<std::vector<MPoly>>& M, int nring,
                       std::vector<long> deg_bounds);

// Exact determinant via Kronecker packing of all auxiliary variables into a
// single one, integer evaluation past the packed output degree bound, and
// univariate interpolation followed by unpacking.
MPoly determinant_poly(const std::vector<std::vector<MPoly>>& M, int nring);

// naive cofactor expansion (test oracle, small matrices)
MPoly det_cofactor(const std::vector<std::vector<MPoly>>& M);

} // namespace gcv

#endif
