#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgfree/dg_algebra.hpp"

namespace dgfree
{

/// A cohomology class, stored by its canonical representative: the unique cocycle in
/// the class supported on words that are not pivots of the image echelon basis.
struct CohomologyClass
{
    std::size_t degree = 0;
    GradedElement representative;

    [[nodiscard]] bool is_zero() const { return representative.is_zero(); }
    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

/// Coordinates of d^d in word bases: an n^{d+1} x n^d matrix.
Matrix boundary_matrix(const DgFreeAlgebra& a, std::size_t d);

struct DegreeData
{
    std::size_t degree = 0;
    std::size_t words = 0;           // n^d
    std::size_t rank_in = 0;         // rank of d^{d-1}
    std::size_t rank_out = 0;        // rank of d^d
    std::size_t nullity = 0;         // dim ker d^d
    std::vector<CohomologyClass> basis;

    [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

/// Cohomology of a DG free algebra in degrees 0..max_degree, computed eagerly.
///
/// For each degree, an echelon basis of the coboundaries fixes a set of pivot words.
/// Every class has exactly one representative with zero coefficients at those pivots,
/// and these representatives are the cocycles supported on the remaining words.
class CohomologyEngine
{
public:
    CohomologyEngine(const DgFreeAlgebra& a, std::size_t max_degree);

    [[nodiscard]] const DgFreeAlgebra& algebra() const noexcept { return algebra_; }
    [[nodiscard]] std::size_t max_degree() const noexcept { return max_degree_; }
    [[nodiscard]] const DegreeData& degree(std::size_t d) const;

    [[nodiscard]] std::size_t dim(std::size_t d) const { return degree(d).dim(); }
    /// Classes with leading coefficient 1, in increasing order of leading word.
    [[nodiscard]] const std::vector<CohomologyClass>& basis(std::size_t d) const { return degree(d).basis; }

    /// The class of a cocycle z of degree d. Throws InputError if z is not a homogeneous
    /// cocycle of degree d, or d exceeds the computed range.
    [[nodiscard]] CohomologyClass class_of(const GradedElement& z, std::size_t d) const;
    /// Same, with the degree read from z (zero is placed in degree 0).
    [[nodiscard]] CohomologyClass class_of(const GradedElement& z) const;

    /// Some w with d(w) = z, or nullopt. With strict set, a non-cocycle z is an input error;
    /// otherwise it simply has no preimage.
    [[nodiscard]] std::optional<GradedElement> is_coboundary(const GradedElement& z, bool strict = true) const;

    /// Canonical class of the product of representatives.
    [[nodiscard]] CohomologyClass product(const CohomologyClass& u, const CohomologyClass& v) const;

    /// Coordinates of a class in basis(d).
    [[nodiscard]] DenseVector coordinates(const CohomologyClass& c) const;

private:
    void compute_degree(std::size_t d);
    void check_degree(std::size_t d) const;

    DgFreeAlgebra algebra_;
    std::size_t max_degree_;
    std::vector<DegreeData> degrees_;
    // images_[d] spans im d^{d-1} inside degree d.
    std::vector<SparseEchelon> images_;
    // free_words_[d]: indices of degree-d words that are not image pivots.
    std::vector<std::vector<std::size_t>> free_words_;
    // Columns d(w) for w in free_words_[d]; they span im d^d.
    std::vector<std::vector<SparseVector>> free_columns_;
};

/// A claimed ring presentation of H(A) by generators, relations and commutation claims.
struct RingPresentation
{
    struct Generator
    {
        std::string name;
        std::size_t degree;
        GradedElement representative;
    };
    struct Relation
    {
        /// Product of generators, by index into generators, claimed to be the zero class.
        std::vector<std::size_t> word;
    };
    struct Commutation
    {
        std::size_t first;
        std::size_t second;
        /// Optional w with u*v - v*u = d(w) as an exact element identity.
        std::optional<GradedElement> witness;
    };

    std::vector<Generator> generators;
    std::vector<Relation> relations;
    std::vector<Commutation> commutations;

    [[nodiscard]] std::string relation_name(const Relation& r) const;
};

struct PresentationCheck
{
    std::string name;
    bool pass = false;
    std::string detail;
};

struct PresentationReport
{
    std::size_t max_degree = 0;
    std::vector<PresentationCheck> checks;

    [[nodiscard]] bool all_pass() const;
};

/// Checks generators (nonzero cocycle classes), relations (zero classes), commutation claims
/// and witnesses, and that monomials u_1^{e_1}...u_k^{e_k} of each degree d <= max_degree
/// span H^d. The engine must cover max_degree.
PresentationReport ring_presentation_check(const CohomologyEngine& engine, const RingPresentation& p,
                                           std::size_t max_degree);

/// H(A1) = k[u1, u2]/(u1^2) with u1 = [x3], u2 = [x1x3 + x3x1], commuting via d(x1^2).
RingPresentation presentation_a1();
/// H(A2) = k[u1, u2]/(u1^2) with u1 = [y3], u2 = [y1^2 + y2y3 + y3y2], commuting via d(y1y2 + y2y1).
RingPresentation presentation_a2();
std::optional<RingPresentation> presentation_preset(const std::string& name);

} // namespace dgfree
