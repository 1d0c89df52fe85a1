#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgfree/linalg.hpp"
#include "dgfree/scalar.hpp"

namespace dgfree
{

/// A monomial in the free algebra k<x_1, ..., x_n>. Letters are stored 0-based;
/// x_i is letter i-1. The empty word is the unit.
struct Word
{
    std::vector<std::uint8_t> letters;

    [[nodiscard]] std::size_t degree() const noexcept { return letters.size(); }

    /// Shorter words first, then lexicographic on letters.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.letters.size() <=> b.letters.size(); c != 0)
            return c;
        return a.letters <=> b.letters;
    }
    friend bool operator==(const Word&, const Word&) = default;

    friend Word operator*(const Word& a, const Word& b);
};

/// Number of words of length d on n letters.
std::size_t word_count(std::size_t n, std::size_t d);
/// Position of w in degree_basis(n, w.degree()).
std::size_t word_index(const Word& w, std::size_t n);
Word word_at(std::size_t index, std::size_t n, std::size_t d);
/// All n^d words of length d, lexicographic. This order indexes every coordinate vector.
std::vector<Word> degree_basis(std::size_t n, std::size_t d);

/// Finite linear combination of words. No zero coefficients are stored.
class GradedElement
{
public:
    GradedElement(std::size_t generator_count, Field field);

    static GradedElement unit(std::size_t n, Field field);
    /// x_i for 1 <= i <= n.
    static GradedElement generator(std::size_t n, Field field, std::size_t i);
    static GradedElement monomial(std::size_t n, const Word& w, const Scalar& coefficient);

    /// Parses "x1*x3 + x3*x1", "2*x1 - 1/2*x2^2", "1", "0". Any single-letter
    /// generator symbol is accepted (x1 and y1 both mean the first generator).
    static GradedElement parse(std::string_view text, std::size_t n, Field field);

    [[nodiscard]] std::size_t generator_count() const noexcept { return n_; }
    [[nodiscard]] Field field() const noexcept { return field_; }
    [[nodiscard]] const std::map<Word, Scalar>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    /// True for zero and for elements whose words all share one length.
    [[nodiscard]] bool is_homogeneous() const;
    /// Common word length; nullopt for zero or mixed elements.
    [[nodiscard]] std::optional<std::size_t> degree() const;
    [[nodiscard]] Scalar coefficient(const Word& w) const;
    /// Coefficient of the empty word.
    [[nodiscard]] Scalar constant_term() const;

    void add_term(const Word& w, const Scalar& coefficient);

    /// Coordinates in degree_basis(n, d). Throws InputError unless homogeneous of degree d (or zero).
    [[nodiscard]] DenseVector to_vector(std::size_t d) const;
    [[nodiscard]] SparseVector to_sparse(std::size_t d) const;
    static GradedElement from_vector(const DenseVector& v, std::size_t n, std::size_t d, Field field);
    static GradedElement from_sparse(const SparseVector& v, std::size_t n, std::size_t d, Field field);

    [[nodiscard]] std::string to_string(char symbol = 'x') const;

    GradedElement operator-() const;
    friend GradedElement operator+(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator-(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator*(const Scalar& c, const GradedElement& a);
    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);

    friend bool operator==(const GradedElement& a, const GradedElement& b);

    [[nodiscard]] GradedElement pow(std::size_t k) const;

private:
    void require_compatible(const GradedElement& o) const;

    std::size_t n_;
    Field field_;
    std::map<Word, Scalar> terms_;
};

GradedElement multiply(const GradedElement& a, const GradedElement& b);

} // namespace dgfree
