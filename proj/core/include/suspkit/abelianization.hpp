#ifndef SUSPKIT_ABELIANIZATION_HPP
#define SUSPKIT_ABELIANIZATION_HPP

#include "suspkit/graph_of_groups.hpp"
#include "suspkit/intmat.hpp"
#include "suspkit/words.hpp"

namespace suspkit {

// The abelianization of a presented group in Smith-diagonal coordinates.
// diag[i] is 0 on free coordinates, 1 on collapsed ones, d >= 2 on torsion.
class H1Structure {
public:
    static H1Structure of_presentation(const GroupPresentation& p);
    // relation_columns are exponent vectors spanning the relation lattice.
    static H1Structure of_columns(std::size_t gens, const std::vector<IntVec>& relation_columns);

    std::size_t gens() const { return gens_; }
    const IntVec& diag() const { return diag_; }
    const IntMatrix& basis_change() const { return u_; }
    const IntMatrix& basis_change_inverse() const { return uinv_; }

    std::vector<Int> invariant_factors() const;
    std::size_t free_rank() const;

    // Diagonal coordinates of a generator-exponent vector, with torsion
    // reduced and collapsed coordinates zeroed.
    IntVec reduce(const IntVec& exponents) const;
    IntVec reduce_diag(IntVec diag_coords) const;
    bool same_class(const IntVec& a, const IntVec& b) const;

private:
    std::size_t gens_ = 0;
    IntMatrix u_, uinv_;
    IntVec diag_;
};

IntVec word_exponents(std::size_t rank, const Word& w);

// Class of a path element in the abelianization of the relative presentation:
// vertex entries contribute their exponents, non-tree edge letters their net
// signed counts.
IntVec bar_class(const Pi1Context& ctx, const H1Structure& h1, const BassExpression& x);

// Transverse degree: the quotient of H1 by the span of the fiber images is
// infinite cyclic, generated by the class of the transverse element; the
// degree of gamma is its exponent with respect to that generator.
class TransverseDegree {
public:
    // relation_columns as in H1Structure; fiber_exponents are the images of
    // the fiber generators; t_exponents the transverse element. Throws when
    // the quotient is not infinite cyclic generated by the t class.
    static TransverseDegree make(std::size_t gens, const std::vector<IntVec>& relation_columns,
                                 const std::vector<IntVec>& fiber_exponents,
                                 const IntVec& t_exponents);

    Int degree(const IntVec& exponents) const;

private:
    H1Structure quotient_;
    std::size_t free_coord_ = 0;
    int t_sign_ = 1;
};

// Row-convention matrix of the map y |-> y + f(y) * h on diagonal
// coordinates, where f is a functional over the generators that kills the
// relation lattice (checked) and h is a generator-exponent vector.
IntMatrix transvection_matrix(const H1Structure& h1, const IntVec& functional_row, const IntVec& h_exponents);

// Applies a row-convention matrix to a reduced class.
IntVec apply_matrix(const H1Structure& h1, const IntVec& reduced, const IntMatrix& m);

} // namespace suspkit

#endif
