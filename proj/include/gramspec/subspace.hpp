#pragma once

/// @file subspace.hpp
/// @brief Subspaces of the degree-d binary forms, held in canonical RREF
/// bases so equal spaces compare equal coefficient-by-coefficient.

#include <vector>

#include "gramspec/forms.hpp"
#include "gramspec/linalg.hpp"

namespace gramspec {

class Subspace {
public:
    /// Zero subspace of the degree-d forms.
    explicit Subspace(int degree);

    static Subspace span(int degree, const std::vector<BinaryForm>& gens);
    static Subspace full(int degree);

    int degree() const { return degree_; }
    int dim() const { return basis_.rows(); }

    /// RREF basis matrix, one form per row, dim() rows, degree()+1 columns.
    const Matrix& basis() const { return basis_; }
    std::vector<BinaryForm> basis_forms() const;

    bool contains(const BinaryForm& f) const;
    bool is_real() const { return basis_.is_real(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.degree_ == b.degree_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int degree_;
    Matrix basis_;

    friend Subspace product(const Subspace&, const Subspace&);
};

Subspace sum(const Subspace& u, const Subspace& w);

/// Span of all pairwise products of basis forms; both factors nonzero
/// (zero_subspace otherwise).  Lives in degree u.degree() + w.degree().
Subspace product(const Subspace& u, const Subspace& w);

Subspace conj_space(const Subspace& u);

/// Column space of a matrix read as degree-d forms (columns of length d+1).
Subspace matrix_image(const Matrix& m, int degree);

} // namespace gramspec
