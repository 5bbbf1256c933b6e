#ifndef LYNPBW_LINALG_HPP
#define LYNPBW_LINALG_HPP

#include <vector>

#include "lynpbw/scalars.hpp"

namespace lynpbw {

// Incremental row-echelon accumulator over an exact field.  Rows are reduced
// against the current basis; pivot columns are chosen left to right.
class Echelon {
public:
    Echelon(FieldPtr field, std::size_t ncols);

    // Reduce the row against the basis and keep it if independent.
    // Returns true when the rank increased.
    bool add(std::vector<Scalar> row);
    // True iff the row lies in the current row space.
    bool contains(std::vector<Scalar> row) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    void reduce(std::vector<Scalar>& row) const;

    FieldPtr field_;
    std::size_t ncols_;
    std::vector<std::vector<Scalar>> rows_;    // pivot entries normalized to 1
    std::vector<std::size_t> pivots_;
};

// Solve A x = b exactly (A given as rows).  Returns false when inconsistent;
// when underdetermined the free variables are set to zero.
bool linear_solve(const FieldPtr& field, std::vector<std::vector<Scalar>> A,
                  std::vector<Scalar> b, std::vector<Scalar>& x);

// True iff the square matrix (given as rows) is invertible.
bool is_invertible(const FieldPtr& field, const std::vector<std::vector<Scalar>>& A);

} // namespace lynpbw

#endif
