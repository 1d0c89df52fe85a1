#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgfree/ext_algebra.hpp"
#include "dgfree/symbolic.hpp"

namespace dgfree
{

/// sigma(e_i) = sum_l C_il e_l. Unknown C_il is the variable "c<i><l>" (1-based).
struct AutEquation
{
    enum class Kind
    {
        Unit,           // C_{u,l} - delta_{u,l}
        Multiplicative, // coefficient of e_l in sigma(e_i e_j) - sigma(e_i) sigma(e_j)
    };
    Kind kind;
    std::size_t i = 0; // 0-based
    std::size_t j = 0;
    std::size_t l = 0;
    LaurentPoly poly;

    [[nodiscard]] std::string label(const StructureConstantAlgebra& a) const;
};

struct AutConstraintSystem
{
    std::size_t m = 0;
    VarSetPtr unknowns;
    std::vector<AutEquation> equations;

    /// Variable name for C_il (0-based).
    [[nodiscard]] std::string unknown(std::size_t i, std::size_t l) const;
};

/// Unit equations first, then multiplicative ones in (i, j, l) order. Rational algebras only.
AutConstraintSystem aut_constraints(const StructureConstantAlgebra& a);

/// Whether C (rows are images of basis elements) is an invertible algebra homomorphism fixing the unit.
bool is_automorphism(const StructureConstantAlgebra& a, const Matrix& c);

/// A matrix whose entries are polynomials in named parameters.
struct ParametrizedFamily
{
    std::string name;
    VarSetPtr parameters;
    PolyMatrix matrix;
};

/// (1, 0, 0; 0, a, b; 0, 0, a^2), a invertible.
ParametrizedFamily family_e1();
/// (1, 0, 0, 0; 0, a, b, c; 0, 0, a^2, 2ab; 0, 0, 0, a^3), a invertible.
ParametrizedFamily family_e2();

struct MembershipVerdict
{
    bool holds = true;
    std::optional<std::size_t> failing_equation;
    std::optional<std::string> equation_label;
    std::optional<LaurentPoly> residual;
    std::optional<LaurentPoly> determinant;
    bool determinant_is_unit = false;
};

/// Substitutes the family into every constraint and requires identically zero residuals and
/// a unit-monomial determinant.
MembershipVerdict family_membership_check(const ParametrizedFamily& fam, const StructureConstantAlgebra& a);

struct ClosureVerdict
{
    bool holds = true;
    /// Parameters of M(p) * M(p'), over the doubled parameter set (primed names).
    std::map<std::string, LaurentPoly> product_parameters;
    /// Parameters of M(p)^{-1}.
    std::map<std::string, LaurentPoly> inverse_parameters;
    std::optional<std::string> failure;
};

/// Solves for the parameters of a product of two generic members and of an inverse, reading each
/// parameter off the first entry of the family matrix that equals it, then checks the identity.
ClosureVerdict family_closure_check(const ParametrizedFamily& fam);

/// Every member of the family over F_p (invertible parameters range over F_p^x), sorted.
std::vector<Matrix> instantiate_family(const ParametrizedFamily& fam, Field field);

struct BruteForceResult
{
    Field field;
    std::size_t free_unknowns = 0;
    std::uint64_t search_space = 0;
    std::vector<Matrix> automorphisms; // sorted by entries
    bool group_axioms = false;
};

/// All automorphisms of an algebra over F_p. Linear consequences (unit rows and invariance of the
/// radical filtration, when p > dim) are solved first and only the remaining unknowns enumerated.
/// Throws InputError if the search space exceeds the limit.
BruteForceResult brute_force_aut(const StructureConstantAlgebra& a, std::uint64_t limit = 100000000);

/// Row-major residues, used as a sort key for matrices over F_p.
std::vector<std::uint64_t> matrix_key(const Matrix& m);

} // namespace dgfree
