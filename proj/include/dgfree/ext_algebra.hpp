#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgfree/linalg.hpp"
#include "dgfree/semifree.hpp"

namespace dgfree
{

/// Finite-dimensional unital algebra given by structure constants:
/// e_i * e_j = sum_k c_ij^k e_k, with product(i, j) holding the vector (c_ij^k)_k.
class StructureConstantAlgebra
{
public:
    /// Throws InputError unless the unit laws and associativity hold exactly.
    StructureConstantAlgebra(Field field, std::vector<std::string> labels,
                             std::vector<std::vector<DenseVector>> products, std::size_t unit);

    /// k[X]/(X^m) in the basis 1, X, ..., X^{m-1}, labelled e1..em.
    static StructureConstantAlgebra truncated_polynomial(Field field, std::size_t m);

    [[nodiscard]] Field field() const noexcept { return field_; }
    [[nodiscard]] std::size_t dim() const noexcept { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] std::size_t unit_index() const noexcept { return unit_; }
    [[nodiscard]] const DenseVector& product(std::size_t i, std::size_t j) const { return products_.at(i).at(j); }
    [[nodiscard]] const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return products_.at(i).at(j).at(k);
    }

    [[nodiscard]] DenseVector basis_vector(std::size_t i) const;
    [[nodiscard]] DenseVector zero() const;
    [[nodiscard]] DenseVector unit() const { return basis_vector(unit_); }
    [[nodiscard]] DenseVector multiply(const DenseVector& x, const DenseVector& y) const;
    [[nodiscard]] DenseVector power(const DenseVector& x, std::size_t k) const;
    [[nodiscard]] bool is_commutative() const;

    /// The same algebra in a new basis, given in old coordinates. The unit must be one of
    /// the new basis vectors. Throws InputError if the vectors are not a basis.
    [[nodiscard]] StructureConstantAlgebra change_basis(const std::vector<DenseVector>& basis,
                                                        std::vector<std::string> labels) const;
    /// Image of rational structure constants in F_p.
    [[nodiscard]] StructureConstantAlgebra reduce(Field target) const;

    /// "e2 + 2*e3".
    [[nodiscard]] std::string render(const DenseVector& x) const;
    /// Products of non-unit basis elements, "e2*e2 = e3".
    [[nodiscard]] std::vector<std::string> relations() const;

    friend bool operator==(const StructureConstantAlgebra&, const StructureConstantAlgebra&) = default;

private:
    Field field_;
    std::vector<std::string> labels_;
    std::vector<std::vector<DenseVector>> products_;
    std::size_t unit_;
};

/// Basis of the degree-zero commutant {A : A D = D A} of a connection matrix.
struct CommutantBasis
{
    Field field;
    std::size_t m = 0;
    /// Reduced echelon basis, unknowns ordered row-major a11, a12, ..., amm.
    std::vector<Matrix> matrices;
    /// The defining equations in reduced echelon form.
    std::vector<SparseVector> equations;

    [[nodiscard]] std::size_t dim() const noexcept { return matrices.size(); }
    /// Each equation as "pivot = combination of free unknowns", e.g. "a21 = a32".
    [[nodiscard]] std::vector<std::string> constraints() const;
    /// True iff the linear equation (over unknowns a_ij, row-major) follows from the equations.
    [[nodiscard]] bool implies(const SparseVector& equation) const;
    /// True iff the given equations cut out exactly the same solution space.
    [[nodiscard]] bool same_solution_space(const std::vector<SparseVector>& equations) const;
    /// Whether A satisfies A D = D A.
    [[nodiscard]] bool contains(const Matrix& a) const;
};

/// Name of unknown a_ij (0-based i, j) for an m x m matrix.
std::string unknown_name(std::size_t i, std::size_t j, std::size_t m);

/// Parses chains like "a12=a13=a23=0" or "a11=a22" into linear equations over the m*m unknowns.
std::vector<SparseVector> parse_constraints(const std::vector<std::string>& chains, std::size_t m, Field field);

CommutantBasis degree_zero_endomorphism_basis(const ConnectionData& data);
CommutantBasis degree_zero_endomorphism_basis(const SemifreeModule& f);

/// How basis matrices compose into algebra products.
enum class Composition
{
    /// e_i * e_j corresponds to B_j * B_i (f o g has matrix A_g A_f).
    Functional,
    /// e_i * e_j corresponds to B_i * B_j.
    Matrix
};

/// Structure constants of the commutant in its echelon basis. If the identity matrix is not
/// itself a basis element, it replaces the basis element at its first nonzero coordinate.
StructureConstantAlgebra ext_structure_constants(const CommutantBasis& b,
                                                 Composition order = Composition::Functional);
/// The basis matrices used by ext_structure_constants (after placing the identity).
std::vector<Matrix> ext_basis_matrices(const CommutantBasis& b);

/// Jacobson radical via the trace form; requires characteristic 0 or p > dim,
/// and throws NotApplicableError otherwise. Reduced echelon basis.
std::vector<DenseVector> radical_basis(const StructureConstantAlgebra& a);

struct TruncatedPolynomial
{
    DenseVector generator;
    std::size_t order = 0;
};

/// Finds x with {1, x, ..., x^{m-1}} a basis and x^m = 0. Commutative input only
/// (NotApplicableError otherwise); nullopt if not local or nothing found within the budget.
std::optional<TruncatedPolynomial> truncated_polynomial_recognize(const StructureConstantAlgebra& a,
                                                                  std::size_t budget = 10000);

/// The algebra in the basis 1, x, ..., x^{m-1}, labelled e1..em.
StructureConstantAlgebra power_basis(const StructureConstantAlgebra& a, const TruncatedPolynomial& t);

/// Gram matrix (lambda(e_i e_j))_ij.
Matrix gram_matrix(const StructureConstantAlgebra& a, const DenseVector& lambda);
bool is_nondegenerate(const StructureConstantAlgebra& a, const DenseVector& lambda);

struct FrobeniusForm
{
    DenseVector functional;
    bool symmetric = false;
    Matrix gram;
    std::size_t attempts = 0;
};

/// Dual-basis functionals first, then seeded random integer combinations in [-3, 3].
/// nullopt means none was found within the budget, not that none exists.
std::optional<FrobeniusForm> frobenius_form(const StructureConstantAlgebra& a, std::uint64_t seed = 0,
                                            std::size_t random_attempts = 1000);

/// The whole Ext pipeline for a module.
struct ExtAnalysis
{
    CommutantBasis commutant;
    StructureConstantAlgebra algebra;
    bool commutative = false;
    bool local = false;
    std::optional<TruncatedPolynomial> recognized;
    /// The algebra in the power basis of the recognized generator, when recognized.
    std::optional<StructureConstantAlgebra> power_algebra;
    std::optional<FrobeniusForm> frobenius;
};

ExtAnalysis analyze_ext(const SemifreeModule& f, std::uint64_t seed = 0);

} // namespace dgfree
