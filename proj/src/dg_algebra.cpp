#include "dgfree/dg_algebra.hpp"

#include <algorithm>

#include "dgfree/errors.hpp"

namespace dgfree
{

void CrisscrossTuple::validate() const
{
    if (n == 0)
        throw InputError("a tuple needs at least one generator");
    if (matrices.size() != n)
        throw InputError("expected " + std::to_string(n) + " matrices, got " + std::to_string(matrices.size()));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& m = matrices[i];
        if (m.rows() != n || m.cols() != n)
            throw InputError("matrix M^" + std::to_string(i + 1) + " is not " + std::to_string(n) + "x" +
                             std::to_string(n));
        if (m.field() != field)
            throw InputError("matrix M^" + std::to_string(i + 1) + " is over a different field");
    }
}

CrisscrossTuple CrisscrossTuple::zero(Field field, std::size_t n)
{
    CrisscrossTuple t{field, n, {}};
    for (std::size_t i = 0; i < n; ++i)
        t.matrices.emplace_back(field, n, n);
    return t;
}

CrisscrossVerdict crisscross_check(const CrisscrossTuple& t)
{
    t.validate();
    const std::size_t n = t.n;
    // dense[k][a][b] = M^{k+1}_{a+1, b+1}
    std::vector<std::vector<DenseVector>> dense(n, std::vector<DenseVector>(n, DenseVector(n, t.field.zero())));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 0; c < n; ++c)
            for (const auto& e : t.matrices[k].column(c))
                dense[k][e.index][c] = e.value;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix sum(t.field, n, n);
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    Scalar s = t.field.zero();
                    for (std::size_t k = 0; k < n; ++k) {
                        // (c_j^k r_k^i)_{ab} = M^k_{aj} M^i_{kb};  (c_k^i r_j^k)_{ab} = M^i_{ak} M^k_{jb}
                        s += dense[k][a][j] * dense[i][k][b] - dense[i][a][k] * dense[k][j][b];
                    }
                    if (!s.is_zero())
                        sum.set(a, b, s);
                }
            }
            if (!sum.is_zero())
                return {false, CrisscrossViolation{i + 1, j + 1, std::move(sum)}};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

QuadraticDerivation::QuadraticDerivation(CrisscrossTuple tuple) : tuple_(std::move(tuple))
{
    tuple_.validate();
    const std::size_t n = tuple_.n;
    quadratics_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        GradedElement img(n, tuple_.field);
        const Matrix& m = tuple_.matrices[i];
        for (std::size_t k = 0; k < n; ++k) {
            for (const auto& e : m.column(k)) {
                const std::size_t j = e.index;
                quadratics_[i].push_back({j, k, e.value});
                img.add_term(Word{{static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(k)}}, e.value);
            }
        }
        images_.push_back(std::move(img));
    }
}

const GradedElement& QuadraticDerivation::on_generator(std::size_t i) const
{
    if (i < 1 || i > n())
        throw InputError("generator index " + std::to_string(i) + " out of range [1, " + std::to_string(n()) + "]");
    return images_[i - 1];
}

GradedElement QuadraticDerivation::apply(const GradedElement& e) const
{
    if (e.generator_count() != n())
        throw InputError("generator count mismatch in differential");
    if (e.field() != field())
        throw InputError("field mismatch in differential");
    GradedElement out(n(), field());
    for (const auto& [w, c] : e.terms()) {
        for (std::size_t pos = 0; pos < w.letters.size(); ++pos) {
            const Scalar sign = (pos % 2 == 0) ? c : -c;
            for (const auto& q : quadratics_[w.letters[pos]]) {
                Word nw;
                nw.letters.reserve(w.letters.size() + 1);
                nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(pos));
                nw.letters.push_back(static_cast<std::uint8_t>(q.j));
                nw.letters.push_back(static_cast<std::uint8_t>(q.k));
                nw.letters.insert(nw.letters.end(), w.letters.begin() + static_cast<long>(pos) + 1, w.letters.end());
                out.add_term(nw, sign * q.coefficient);
            }
        }
    }
    return out;
}

SparseVector QuadraticDerivation::boundary_column(std::size_t d, std::size_t index) const
{
    const std::size_t n = this->n();
    std::vector<std::size_t> powers(d + 2, 1);
    for (std::size_t i = 1; i < powers.size(); ++i)
        powers[i] = powers[i - 1] * n;
    if (index >= powers[d])
        throw InputError("word index out of range");
    SparseVector raw;
    for (std::size_t pos = 0; pos < d; ++pos) {
        const std::size_t tail = d - pos - 1;
        const std::size_t prefix = index / powers[tail + 1];
        const std::size_t letter = (index / powers[tail]) % n;
        const std::size_t suffix = index % powers[tail];
        for (const auto& q : quadratics_[letter]) {
            const std::size_t ni = ((prefix * n + q.j) * n + q.k) * powers[tail] + suffix;
            raw.push_back({ni, pos % 2 == 0 ? q.coefficient : -q.coefficient});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    SparseVector out;
    out.reserve(raw.size());
    for (auto& e : raw) {
        if (!out.empty() && out.back().index == e.index) {
            out.back().value += e.value;
            if (out.back().value.is_zero())
                out.pop_back();
        } else {
            out.push_back(std::move(e));
        }
    }
    return out;
}

DSquaredVerdict d_squared_on_generators(const CrisscrossTuple& t)
{
    QuadraticDerivation d(t);
    for (std::size_t i = 1; i <= t.n; ++i) {
        GradedElement dd = d.apply(d.on_generator(i));
        if (!dd.is_zero())
            return {false, i, std::move(dd)};
    }
    return {};
}

// ---------------------------------------------------------------------------

namespace
{

CrisscrossTuple require_crisscross(CrisscrossTuple t)
{
    auto verdict = crisscross_check(t);
    if (!verdict.crisscross) {
        const auto& w = *verdict.witness;
        throw InputError("tuple is not crisscross: violation at (i, j) = (" + std::to_string(w.i) + ", " +
                         std::to_string(w.j) + "), sum = " + w.sum.to_string());
    }
    return t;
}

} // namespace

DgFreeAlgebra::DgFreeAlgebra(CrisscrossTuple tuple, std::string name, char symbol)
    : derivation_(require_crisscross(std::move(tuple))), name_(std::move(name)), symbol_(symbol)
{
}

GradedElement DgFreeAlgebra::differential(const GradedElement& e) const { return derivation_.apply(e); }

DSquaredVerdict d_squared_on_generators(const DgFreeAlgebra& a) { return d_squared_on_generators(a.tuple()); }

DgFreeAlgebra preset_a1()
{
    const Field q = Field::rationals();
    CrisscrossTuple t = CrisscrossTuple::zero(q, 3);
    t.matrices[0].set(2, 2, q.one());
    t.matrices[1].set(1, 1, q.one());
    return DgFreeAlgebra(std::move(t), "a1", 'x');
}

DgFreeAlgebra preset_a2()
{
    const Field q = Field::rationals();
    CrisscrossTuple t = CrisscrossTuple::zero(q, 3);
    t.matrices[0].set(2, 2, q.one());
    t.matrices[1].set(0, 2, q.one());
    t.matrices[1].set(2, 0, q.one());
    return DgFreeAlgebra(std::move(t), "a2", 'y');
}

std::optional<DgFreeAlgebra> algebra_preset(const std::string& name)
{
    if (name == "a1")
        return preset_a1();
    if (name == "a2")
        return preset_a2();
    return std::nullopt;
}

} // namespace dgfree
