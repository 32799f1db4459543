#pragma once

/// @file gram.hpp
/// @brief Gram tensors of binary forms and the faces of their spectrahedra.
///
/// A Gram tensor of degree d is a self-adjoint (d+1)x(d+1) matrix A in the
/// monomial basis m_j = x^(d-j) y^j; it represents the form
/// mu(A) = sum_jk A_jk m_j m_k of degree 2d.  Symmetric tensors are real,
/// hermitian ones complex; PSD symmetric tensors encode sums of squares,
/// PSD hermitian ones sums of hermitian squares.

#include <string>
#include <vector>

#include "gramspec/subspace.hpp"

namespace gramspec {

enum class Flavor { symmetric, hermitian };

const char* flavor_name(Flavor f);

class GramTensor {
public:
    /// Validates self-adjointness (and real entries for the symmetric flavor).
    GramTensor(Flavor flavor, int degree, Matrix m);

    Flavor flavor() const { return flavor_; }
    int degree() const { return degree_; }
    const Matrix& matrix() const { return mat_; }

    /// The represented form sum_jk A_jk m_j m_k (always real coefficients).
    BinaryForm mu() const;

    int rank() const;
    Subspace image() const;
    bool psd() const;
    std::vector<PsdPivot> psd_decomposition() const;

    friend GramTensor operator+(const GramTensor& a, const GramTensor& b);
    friend GramTensor operator*(const Rational& w, const GramTensor& t);
    friend bool operator==(const GramTensor& a, const GramTensor& b) {
        return a.flavor_ == b.flavor_ && a.degree_ == b.degree_ && a.mat_ == b.mat_;
    }

private:
    Flavor flavor_;
    int degree_;
    Matrix mat_;
};

/// Gram tensor of sum p_i conj(p_i) (hermitian) or sum p_i^2 (symmetric,
/// all p_i real): A = sum v_i v_i^*.
GramTensor gram_from_sos(Flavor flavor, const std::vector<BinaryForm>& ps);

/// Dimension of the face of PSD tensors whose image lies in U, by the
/// product-space formula: r(r+1)/2 - dim(UU) for symmetric U (real),
/// r^2 - dim(U conj(U)) for hermitian U, where r = dim(U).
int face_dimension_formula(const Subspace& u, Flavor flavor);

/// Same dimension by an independent route: parametrize self-adjoint matrices
/// on a basis of U and take the kernel of the induced real-linear map onto
/// degree-2d coefficients.
int face_dimension_kernel(const Subspace& u, Flavor flavor);

/// Relation kernel among the products p_j conj(p_k) (hermitian) or p_j p_k,
/// j <= k (symmetric) of a LINEARLY INDEPENDENT family, as a real-linear
/// kernel; diagonal_only means a canonical kernel basis touches nothing but
/// the square coordinates p_j conj(p_j) / p_j^2.
struct RelationReport {
    int kernel_dim = 0;
    bool diagonal_only = false;
};
RelationReport diagonal_relations_only(const std::vector<BinaryForm>& ps, Flavor flavor);

struct FaceReport {
    Flavor flavor = Flavor::hermitian;
    int degree = 0;                 // degree of the tensors (forms have 2*degree)
    Subspace face_subspace;         // U(F) = sum of generator images
    int rank = 0;                   // dim U(F)
    int dimension = 0;              // by the product-space formula
    int dimension_by_kernel = 0;    // independent cross-check; always equal
    bool polyhedral = false;        // via the diagonal-relations test
    bool simplex = false;           // polyhedral + dim = #gens-1 + rank additive
    std::vector<GramTensor> generators;
    std::vector<std::string> notes;

    FaceReport() : face_subspace(0) {}
};

/// Face of the Gram spectrahedron spanned by PSD tensors with a common mu.
/// Dimension is computed by both routes and cross-checked (a mismatch is a
/// hard cross_check_failed error).  The polyhedral flag asserts a sufficient
/// condition: the concatenated PSD-pivot columns of the generators are
/// linearly independent and their relation kernel is diagonal-only.
FaceReport supporting_face(const std::vector<GramTensor>& thetas);

} // namespace gramspec
