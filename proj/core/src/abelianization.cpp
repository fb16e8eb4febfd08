#include "suspkit/abelianization.hpp"

namespace suspkit {

IntVec word_exponents(std::size_t rank, const Word& w) {
    IntVec v(rank);
    for (Letter l : w.letters()) {
        if (gen_of(l) >= int(rank)) throw Error("word outside presentation alphabet");
        v[gen_of(l)] += sign_of(l);
    }
    return v;
}

H1Structure H1Structure::of_presentation(const GroupPresentation& p) {
    std::vector<IntVec> cols;
    cols.reserve(p.relators.size());
    for (const Word& r : p.relators) cols.push_back(word_exponents(p.generators.rank(), r));
    return of_columns(p.generators.rank(), cols);
}

H1Structure H1Structure::of_columns(std::size_t gens, const std::vector<IntVec>& relation_columns) {
    IntMatrix m(gens, relation_columns.size());
    for (std::size_t j = 0; j < relation_columns.size(); ++j) {
        if (relation_columns[j].size() != gens) throw Error("relation column has wrong length");
        for (std::size_t i = 0; i < gens; ++i) m.at(i, j) = relation_columns[j][i];
    }
    SnfResult snf = smith_normal_form(m);
    H1Structure h;
    h.gens_ = gens;
    h.u_ = std::move(snf.U);
    h.uinv_ = std::move(snf.Uinv);
    h.diag_.assign(gens, 0);
    for (std::size_t i = 0; i < std::min(gens, relation_columns.size()); ++i)
        h.diag_[i] = snf.D.at(i, i);
    return h;
}

std::vector<Int> H1Structure::invariant_factors() const {
    std::vector<Int> f;
    for (const Int& d : diag_)
        if (d >= 2) f.push_back(d);
    return f;
}

std::size_t H1Structure::free_rank() const {
    std::size_t r = 0;
    for (const Int& d : diag_)
        if (d == 0) ++r;
    return r;
}

IntVec H1Structure::reduce(const IntVec& exponents) const {
    if (exponents.size() != gens_) throw Error("exponent vector has wrong length");
    return reduce_diag(mul(u_, exponents));
}

IntVec H1Structure::reduce_diag(IntVec y) const {
    for (std::size_t i = 0; i < gens_; ++i) {
        if (diag_[i] == 1) {
            y[i] = 0;
        } else if (diag_[i] != 0) {
            y[i] %= diag_[i];
            if (y[i] < 0) y[i] += diag_[i];
        }
    }
    return y;
}

bool H1Structure::same_class(const IntVec& a, const IntVec& b) const {
    return reduce(a) == reduce(b);
}

IntVec bar_class(const Pi1Context& ctx, const H1Structure& h1, const BassExpression& x) {
    return h1.reduce(ctx.exponent_vector(x));
}

TransverseDegree TransverseDegree::make(std::size_t gens, const std::vector<IntVec>& relation_columns,
                                        const std::vector<IntVec>& fiber_exponents,
                                        const IntVec& t_exponents) {
    std::vector<IntVec> cols = relation_columns;
    cols.insert(cols.end(), fiber_exponents.begin(), fiber_exponents.end());
    TransverseDegree d;
    d.quotient_ = H1Structure::of_columns(gens, cols);
    if (d.quotient_.free_rank() != 1 || !d.quotient_.invariant_factors().empty())
        throw Error("quotient by the fiber image is not infinite cyclic");
    std::size_t coord = 0;
    for (std::size_t i = 0; i < gens; ++i)
        if (d.quotient_.diag()[i] == 0) coord = i;
    d.free_coord_ = coord;
    IntVec t = d.quotient_.reduce(t_exponents);
    if (t[coord] == 1)
        d.t_sign_ = 1;
    else if (t[coord] == -1)
        d.t_sign_ = -1;
    else
        throw Error("transverse element does not generate the cyclic quotient");
    return d;
}

Int TransverseDegree::degree(const IntVec& exponents) const {
    IntVec y = quotient_.reduce(exponents);
    return y[free_coord_] * t_sign_;
}

IntMatrix transvection_matrix(const H1Structure& h1, const IntVec& functional_row,
                              const IntVec& h_exponents) {
    const std::size_t n = h1.gens();
    if (functional_row.size() != n || h_exponents.size() != n)
        throw Error("dimension mismatch");
    // express the functional in diagonal coordinates; it must vanish on the
    // relation lattice, i.e. on every non-free coordinate
    IntVec c = mul_row(functional_row, h1.basis_change_inverse());
    for (std::size_t i = 0; i < n; ++i)
        if (h1.diag()[i] != 0 && c[i] != 0)
            throw Error("functional does not descend to the abelianization");
    IntVec u = mul(h1.basis_change(), h_exponents);
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) += c[i] * u[j];
    }
    return m;
}

IntVec apply_matrix(const H1Structure& h1, const IntVec& reduced, const IntMatrix& m) {
    return h1.reduce_diag(mul_row(reduced, m));
}

} // namespace suspkit
