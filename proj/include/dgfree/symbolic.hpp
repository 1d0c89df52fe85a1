#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgfree/rational.hpp"
#include "dgfree/scalar.hpp"

namespace dgfree
{

/// Named variables; invertible ones may carry negative exponents.
class VarSet
{
public:
    struct Variable
    {
        std::string name;
        bool invertible = false;
        friend bool operator==(const Variable&, const Variable&) = default;
    };

    explicit VarSet(std::vector<Variable> vars);
    static std::shared_ptr<const VarSet> make(std::vector<Variable> vars);

    [[nodiscard]] std::size_t size() const noexcept { return vars_.size(); }
    [[nodiscard]] const Variable& at(std::size_t i) const { return vars_.at(i); }
    [[nodiscard]] const std::vector<Variable>& variables() const noexcept { return vars_; }
    [[nodiscard]] std::optional<std::size_t> index(std::string_view name) const;
    /// Throws InputError for unknown names.
    [[nodiscard]] std::size_t require(std::string_view name) const;

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    std::vector<Variable> vars_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;
using Exponents = std::vector<int>;

/// Total degree first, then lexicographic: the canonical term order.
struct GradedLex
{
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Laurent polynomial over Q in a fixed VarSet. Stored in canonical form: no zero
/// coefficients, terms ordered graded-lex, negative exponents only on invertible variables.
class LaurentPoly
{
public:
    explicit LaurentPoly(VarSetPtr vars);

    static LaurentPoly constant(VarSetPtr vars, const Rational& c);
    static LaurentPoly variable(VarSetPtr vars, std::string_view name);
    static LaurentPoly monomial(VarSetPtr vars, Exponents e, const Rational& c);
    /// Parses +, -, *, /, ^ (integer exponents), parentheses, integers and variable names.
    /// Division is only by nonzero constants or unit monomials.
    static LaurentPoly parse(std::string_view text, VarSetPtr vars);

    [[nodiscard]] const VarSetPtr& vars() const noexcept { return vars_; }
    [[nodiscard]] const std::map<Exponents, Rational, GradedLex>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// Constant term (coefficient of the zero exponent vector).
    [[nodiscard]] Rational constant_term() const;
    /// A single term whose variables are all invertible: a unit of the ring.
    [[nodiscard]] bool is_unit_monomial() const;
    /// True iff no term involves the named variable.
    [[nodiscard]] bool free_of(std::string_view name) const;
    /// True iff the polynomial is exactly the named variable.
    [[nodiscard]] bool is_variable(std::string_view name) const;

    /// Only for unit monomials; throws InputError otherwise.
    [[nodiscard]] LaurentPoly inverse() const;
    /// Negative k only for unit monomials.
    [[nodiscard]] LaurentPoly pow(int k) const;

    /// Ring homomorphism sending each bound variable to a polynomial over target;
    /// unbound variables must exist in target under the same name.
    [[nodiscard]] LaurentPoly substitute(const std::map<std::string, LaurentPoly>& bindings, VarSetPtr target) const;
    /// Value at a point, given by variable name. Throws InputError on a missing value or a
    /// zero value for a variable that appears with negative exponent.
    [[nodiscard]] Scalar evaluate(const std::map<std::string, Scalar>& point, Field field) const;

    [[nodiscard]] std::string to_string() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    void add_term(const Exponents& e, const Rational& c);
    void require_same_ring(const LaurentPoly& o) const;

    VarSetPtr vars_;
    std::map<Exponents, Rational, GradedLex> terms_;
};

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix poly_identity(const VarSetPtr& vars, std::size_t n);
/// Parses a matrix given as rows of polynomial strings.
PolyMatrix poly_matrix(const VarSetPtr& vars, const std::vector<std::vector<std::string>>& rows);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
/// Laplace expansion along the first row.
LaurentPoly determinant(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);
/// Requires the determinant to be a unit monomial or nonzero constant; throws InputError otherwise.
PolyMatrix inverse(const PolyMatrix& m);
PolyMatrix substitute(const PolyMatrix& m, const std::map<std::string, LaurentPoly>& bindings, VarSetPtr target);
std::string to_string(const PolyMatrix& m);

struct MatrixIdentityVerdict
{
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> entry; // 0-based
    std::optional<LaurentPoly> difference;                     // lhs - rhs at entry
};

/// Entry-wise canonical-form equality. Throws InputError on shape mismatch.
MatrixIdentityVerdict matrix_identity_check(const PolyMatrix& lhs, const PolyMatrix& rhs);

struct RandomPointVerdict
{
    bool holds = true;
    std::size_t points = 0;
    std::optional<std::map<std::string, Rational>> counterexample;
};

/// Evaluates both sides at random rational points (invertible variables nonzero).
RandomPointVerdict random_point_check(const PolyMatrix& lhs, const PolyMatrix& rhs, std::size_t points,
                                      std::uint64_t seed);

} // namespace dgfree
