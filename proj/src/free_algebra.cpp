#include "dgfree/free_algebra.hpp"

#include <cctype>

#include "dgfree/errors.hpp"

namespace dgfree
{

Word operator*(const Word& a, const Word& b)
{
    Word w;
    w.letters.reserve(a.letters.size() + b.letters.size());
    w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

std::size_t word_count(std::size_t n, std::size_t d)
{
    std::size_t c = 1;
    for (std::size_t i = 0; i < d; ++i)
        c *= n;
    return c;
}

std::size_t word_index(const Word& w, std::size_t n)
{
    std::size_t idx = 0;
    for (auto l : w.letters)
        idx = idx * n + l;
    return idx;
}

Word word_at(std::size_t index, std::size_t n, std::size_t d)
{
    Word w;
    w.letters.assign(d, 0);
    for (std::size_t i = d; i-- > 0;) {
        w.letters[i] = static_cast<std::uint8_t>(index % n);
        index /= n;
    }
    return w;
}

std::vector<Word> degree_basis(std::size_t n, std::size_t d)
{
    const std::size_t count = word_count(n, d);
    std::vector<Word> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(word_at(i, n, d));
    return out;
}

// ---------------------------------------------------------------------------

GradedElement::GradedElement(std::size_t generator_count, Field field) : n_(generator_count), field_(field)
{
    if (generator_count == 0 || generator_count > 255)
        throw InputError("generator count must be in [1, 255]");
}

GradedElement GradedElement::unit(std::size_t n, Field field)
{
    GradedElement e(n, field);
    e.terms_.emplace(Word{}, field.one());
    return e;
}

GradedElement GradedElement::generator(std::size_t n, Field field, std::size_t i)
{
    if (i < 1 || i > n)
        throw InputError("generator index " + std::to_string(i) + " out of range [1, " + std::to_string(n) + "]");
    GradedElement e(n, field);
    e.terms_.emplace(Word{{static_cast<std::uint8_t>(i - 1)}}, field.one());
    return e;
}

GradedElement GradedElement::monomial(std::size_t n, const Word& w, const Scalar& coefficient)
{
    GradedElement e(n, coefficient.field());
    e.add_term(w, coefficient);
    return e;
}

void GradedElement::add_term(const Word& w, const Scalar& coefficient)
{
    if (coefficient.field() != field_)
        throw InputError("coefficient field does not match element field");
    for (auto l : w.letters)
        if (l >= n_)
            throw InputError("word letter out of range");
    if (coefficient.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool GradedElement::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<std::size_t> GradedElement::degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.begin()->first.degree();
}

Scalar GradedElement::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? field_.zero() : it->second;
}

Scalar GradedElement::constant_term() const { return coefficient(Word{}); }

SparseVector GradedElement::to_sparse(std::size_t d) const
{
    SparseVector out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        if (w.degree() != d)
            throw InputError("element is not homogeneous of degree " + std::to_string(d));
        out.push_back({word_index(w, n_), c});
    }
    // Map order within one degree is lexicographic, which is index order.
    return out;
}

DenseVector GradedElement::to_vector(std::size_t d) const
{
    return to_dense(to_sparse(d), word_count(n_, d), field_);
}

GradedElement GradedElement::from_vector(const DenseVector& v, std::size_t n, std::size_t d, Field field)
{
    if (v.size() != word_count(n, d))
        throw InputError("coordinate vector has wrong length");
    return from_sparse(dgfree::to_sparse(v), n, d, field);
}

GradedElement GradedElement::from_sparse(const SparseVector& v, std::size_t n, std::size_t d, Field field)
{
    GradedElement e(n, field);
    const std::size_t count = word_count(n, d);
    for (const auto& entry : v) {
        if (entry.index >= count)
            throw InputError("coordinate index out of range");
        e.add_term(word_at(entry.index, n, d), entry.value);
    }
    return e;
}

std::string GradedElement::to_string(char symbol) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string word;
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            if (i)
                word += '*';
            word += symbol;
            word += std::to_string(w.letters[i] + 1);
        }
        std::string coef = c.to_string();
        bool negative = !coef.empty() && coef[0] == '-';
        if (negative)
            coef.erase(0, 1);
        std::string term;
        if (word.empty())
            term = coef;
        else if (coef == "1")
            term = word;
        else
            term = coef + "*" + word;
        if (first)
            out += negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
        first = false;
    }
    return out;
}

namespace
{

GradedElement parse_term(const std::string& term, std::size_t n, Field field, bool negative)
{
    if (term.empty())
        throw InputError("empty term in element expression");
    Scalar coef = negative ? -field.one() : field.one();
    Word w;
    std::size_t pos = 0;
    while (pos <= term.size()) {
        const auto star = term.find('*', pos);
        const std::string factor = term.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        if (factor.empty())
            throw InputError("empty factor in term '" + term + "'");
        if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
            coef *= field.parse(factor);
        } else if (std::isalpha(static_cast<unsigned char>(factor[0]))) {
            std::size_t i = 1;
            while (i < factor.size() && std::isdigit(static_cast<unsigned char>(factor[i])))
                ++i;
            if (i == 1)
                throw InputError("generator without index: '" + factor + "'");
            const unsigned long idx = std::stoul(factor.substr(1, i - 1));
            if (idx < 1 || idx > n)
                throw InputError("generator index out of range in '" + factor + "'");
            unsigned long power = 1;
            if (i < factor.size()) {
                if (factor[i] != '^' || i + 1 == factor.size())
                    throw InputError("malformed factor '" + factor + "'");
                for (std::size_t k = i + 1; k < factor.size(); ++k)
                    if (!std::isdigit(static_cast<unsigned char>(factor[k])))
                        throw InputError("malformed exponent in '" + factor + "'");
                power = std::stoul(factor.substr(i + 1));
            }
            for (unsigned long k = 0; k < power; ++k)
                w.letters.push_back(static_cast<std::uint8_t>(idx - 1));
        } else {
            throw InputError("unexpected factor '" + factor + "'");
        }
        if (star == std::string::npos)
            break;
        pos = star + 1;
    }
    return GradedElement::monomial(n, w, coef);
}

} // namespace

GradedElement GradedElement::parse(std::string_view text, std::size_t n, Field field)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw InputError("empty element expression");
    GradedElement out(n, field);
    std::size_t pos = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    while (true) {
        const auto next = s.find_first_of("+-", pos);
        const std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term != "0")
            out += parse_term(term, n, field, negative);
        if (next == std::string::npos)
            break;
        negative = s[next] == '-';
        pos = next + 1;
    }
    return out;
}

void GradedElement::require_compatible(const GradedElement& o) const
{
    if (n_ != o.n_)
        throw InputError("generator count mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    if (field_ != o.field_)
        throw InputError("field mismatch between elements");
}

GradedElement GradedElement::operator-() const
{
    GradedElement e(*this);
    for (auto& [w, c] : e.terms_)
        c = -c;
    return e;
}

GradedElement& GradedElement::operator+=(const GradedElement& o)
{
    require_compatible(o);
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o)
{
    require_compatible(o);
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

GradedElement operator+(const GradedElement& a, const GradedElement& b)
{
    GradedElement r(a);
    r += b;
    return r;
}

GradedElement operator-(const GradedElement& a, const GradedElement& b)
{
    GradedElement r(a);
    r -= b;
    return r;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b)
{
    a.require_compatible(b);
    GradedElement r(a.n_, a.field_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r.add_term(wa * wb, ca * cb);
    return r;
}

GradedElement operator*(const Scalar& c, const GradedElement& a)
{
    GradedElement r(a.n_, a.field_);
    for (const auto& [w, v] : a.terms_)
        r.add_term(w, c * v);
    return r;
}

bool operator==(const GradedElement& a, const GradedElement& b)
{
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

GradedElement GradedElement::pow(std::size_t k) const
{
    GradedElement r = unit(n_, field_);
    for (std::size_t i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

GradedElement multiply(const GradedElement& a, const GradedElement& b) { return a * b; }

} // namespace dgfree
