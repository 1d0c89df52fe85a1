#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgfree/free_algebra.hpp"
#include "dgfree/linalg.hpp"

namespace dgfree
{

/// Ordered n-tuple (M^1, ..., M^n) of n x n matrices; d(x_i) = (x_1..x_n) M^i (x_1..x_n)^T.
struct CrisscrossTuple
{
    Field field;
    std::size_t n = 0;
    std::vector<Matrix> matrices;

    /// Throws InputError on wrong count, non-square or wrongly sized matrices, or mixed fields.
    void validate() const;
    static CrisscrossTuple zero(Field field, std::size_t n);

    friend bool operator==(const CrisscrossTuple&, const CrisscrossTuple&) = default;
};

struct CrisscrossViolation
{
    std::size_t i; // 1-based
    std::size_t j; // 1-based
    Matrix sum;    // the nonzero n x n matrix sum_k [c_j^k r_k^i - c_k^i r_j^k]
};

struct CrisscrossVerdict
{
    bool crisscross = true;
    std::optional<CrisscrossViolation> witness;
};

/// Checks sum_k [c_j^k r_k^i - c_k^i r_j^k] = 0 for all i, j, where c_j^k is column j
/// of M^k and r_k^i is row k of M^i. Reports the first failing (i, j) in lexicographic order.
CrisscrossVerdict crisscross_check(const CrisscrossTuple& t);

/// The derivation of the free algebra induced by a tuple, with no validity requirement.
class QuadraticDerivation
{
public:
    explicit QuadraticDerivation(CrisscrossTuple tuple);

    [[nodiscard]] const CrisscrossTuple& tuple() const noexcept { return tuple_; }
    [[nodiscard]] std::size_t n() const noexcept { return tuple_.n; }
    [[nodiscard]] Field field() const noexcept { return tuple_.field; }

    /// The degree-2 element sum_{j,k} M^i_{jk} x_j x_k, for 1 <= i <= n.
    [[nodiscard]] const GradedElement& on_generator(std::size_t i) const;
    /// Graded Leibniz extension: d(ab) = d(a) b + (-1)^{|a|} a d(b).
    [[nodiscard]] GradedElement apply(const GradedElement& e) const;
    /// Coordinates of d(w) in degree_basis(n, d+1), for the word with the given index in degree d.
    [[nodiscard]] SparseVector boundary_column(std::size_t d, std::size_t index) const;

private:
    struct Quadratic
    {
        std::size_t j, k; // 0-based letters
        Scalar coefficient;
    };

    CrisscrossTuple tuple_;
    std::vector<GradedElement> images_;
    std::vector<std::vector<Quadratic>> quadratics_;
};

struct DSquaredVerdict
{
    bool zero = true;
    std::optional<std::size_t> generator; // 1-based
    std::optional<GradedElement> witness; // d(d(x_i)), nonzero
};

/// d^2 = 0 iff it vanishes on generators, since d^2 is itself a derivation.
DSquaredVerdict d_squared_on_generators(const CrisscrossTuple& t);

/// A DG free algebra: a crisscross tuple, validated at construction.
class DgFreeAlgebra
{
public:
    /// Throws InputError if the tuple is malformed or not crisscross.
    explicit DgFreeAlgebra(CrisscrossTuple tuple, std::string name = "", char symbol = 'x');

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] char symbol() const noexcept { return symbol_; }
    [[nodiscard]] std::size_t n() const noexcept { return derivation_.n(); }
    [[nodiscard]] Field field() const noexcept { return derivation_.field(); }
    [[nodiscard]] const CrisscrossTuple& tuple() const noexcept { return derivation_.tuple(); }

    [[nodiscard]] const GradedElement& differential_on_generator(std::size_t i) const
    {
        return derivation_.on_generator(i);
    }
    [[nodiscard]] GradedElement differential(const GradedElement& e) const;
    [[nodiscard]] SparseVector boundary_column(std::size_t d, std::size_t index) const
    {
        return derivation_.boundary_column(d, index);
    }

    [[nodiscard]] GradedElement generator(std::size_t i) const { return GradedElement::generator(n(), field(), i); }
    [[nodiscard]] GradedElement parse(std::string_view text) const { return GradedElement::parse(text, n(), field()); }
    [[nodiscard]] std::string render(const GradedElement& e) const { return e.to_string(symbol_); }

    friend bool operator==(const DgFreeAlgebra& a, const DgFreeAlgebra& b) { return a.tuple() == b.tuple(); }

private:
    QuadraticDerivation derivation_;
    std::string name_;
    char symbol_;
};

DSquaredVerdict d_squared_on_generators(const DgFreeAlgebra& a);

/// d(x1) = x3^2, d(x2) = x2^2, d(x3) = 0.
DgFreeAlgebra preset_a1();
/// d(y1) = y3^2, d(y2) = y1 y3 + y3 y1, d(y3) = 0.
DgFreeAlgebra preset_a2();
/// "a1" or "a2"; nullopt otherwise.
std::optional<DgFreeAlgebra> algebra_preset(const std::string& name);

} // namespace dgfree
