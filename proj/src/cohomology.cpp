#include "dgfree/cohomology.hpp"

#include "dgfree/errors.hpp"

namespace dgfree
{

Matrix boundary_matrix(const DgFreeAlgebra& a, std::size_t d)
{
    const std::size_t cols = word_count(a.n(), d);
    Matrix m(a.field(), word_count(a.n(), d + 1), cols);
    for (std::size_t w = 0; w < cols; ++w)
        m.set_column(w, a.boundary_column(d, w));
    return m;
}

CohomologyEngine::CohomologyEngine(const DgFreeAlgebra& a, std::size_t max_degree)
    : algebra_(a), max_degree_(max_degree)
{
    images_.emplace_back(a.field(), 1);
    for (std::size_t d = 0; d <= max_degree; ++d)
        compute_degree(d);
}

void CohomologyEngine::compute_degree(std::size_t d)
{
    const Field field = algebra_.field();
    const std::size_t n = algebra_.n();
    const SparseEchelon& image = images_[d];

    DegreeData data;
    data.degree = d;
    data.words = word_count(n, d);
    data.rank_in = image.rank();

    std::vector<std::size_t> free;
    free.reserve(data.words - data.rank_in);
    for (std::size_t w = 0; w < data.words; ++w)
        if (!image.is_pivot(w))
            free.push_back(w);

    std::vector<SparseVector> columns;
    columns.reserve(free.size());
    for (std::size_t w : free)
        columns.push_back(algebra_.boundary_column(d, w));

    // Cocycles supported on free words: the kernel of d^d restricted to those columns.
    std::vector<SparseVector> rows(word_count(n, d + 1));
    for (std::size_t p = 0; p < columns.size(); ++p)
        for (const auto& e : columns[p])
            rows[e.index].push_back({p, e.value});
    SparseEchelon equations(field, free.size());
    for (auto& row : rows)
        if (!row.empty())
            equations.insert(std::move(row));
    data.rank_out = equations.rank();
    data.nullity = data.words - data.rank_out;

    for (const auto& k : equations.kernel()) {
        SparseVector coords;
        coords.reserve(k.size());
        for (const auto& e : k)
            coords.push_back({free[e.index], e.value});
        data.basis.push_back({d, GradedElement::from_sparse(coords, n, d, field)});
    }

    if (d < max_degree_) {
        SparseEchelon next(field, word_count(n, d + 1));
        for (const auto& c : columns)
            next.insert(c);
        if (next.rank() != data.rank_out)
            throw InternalError("row and column ranks of the boundary map disagree in degree " + std::to_string(d));
        images_.push_back(std::move(next));
    }

    free_words_.push_back(std::move(free));
    free_columns_.push_back(std::move(columns));
    degrees_.push_back(std::move(data));
}

void CohomologyEngine::check_degree(std::size_t d) const
{
    if (d > max_degree_)
        throw InputError("degree " + std::to_string(d) + " exceeds the computed range (max degree " +
                         std::to_string(max_degree_) + ")");
}

const DegreeData& CohomologyEngine::degree(std::size_t d) const
{
    check_degree(d);
    return degrees_[d];
}

CohomologyClass CohomologyEngine::class_of(const GradedElement& z, std::size_t d) const
{
    check_degree(d);
    if (z.generator_count() != algebra_.n() || z.field() != algebra_.field())
        throw InputError("element does not belong to this algebra");
    SparseVector v = z.to_sparse(d);
    if (!algebra_.differential(z).is_zero())
        throw InputError("not a cocycle: " + algebra_.render(z));
    SparseVector nf = images_[d].normal_form(std::move(v));
    return {d, GradedElement::from_sparse(nf, algebra_.n(), d, algebra_.field())};
}

CohomologyClass CohomologyEngine::class_of(const GradedElement& z) const
{
    if (!z.is_zero() && !z.degree())
        throw InputError("element is not homogeneous: " + algebra_.render(z));
    return class_of(z, z.degree().value_or(0));
}

std::optional<GradedElement> CohomologyEngine::is_coboundary(const GradedElement& z, bool strict) const
{
    const std::size_t n = algebra_.n();
    const Field field = algebra_.field();
    if (z.generator_count() != n || z.field() != field)
        throw InputError("element does not belong to this algebra");
    if (z.is_zero())
        return GradedElement(n, field);
    if (!z.degree())
        throw InputError("element is not homogeneous: " + algebra_.render(z));
    if (!algebra_.differential(z).is_zero()) {
        if (strict)
            throw InputError("not a cocycle: " + algebra_.render(z));
        return std::nullopt;
    }
    const std::size_t d = *z.degree();
    if (d == 0)
        return std::nullopt;
    if (d - 1 > max_degree_)
        throw InputError("degree " + std::to_string(d) + " exceeds the computed range");

    const auto& free = free_words_[d - 1];
    const auto& columns = free_columns_[d - 1];
    Matrix m(field, word_count(n, d), free.size());
    for (std::size_t p = 0; p < columns.size(); ++p)
        m.set_column(p, columns[p]);
    auto x = solve(m, z.to_vector(d));
    if (!x)
        return std::nullopt;
    SparseVector pre;
    for (std::size_t p = 0; p < free.size(); ++p)
        if (!(*x)[p].is_zero())
            pre.push_back({free[p], (*x)[p]});
    return GradedElement::from_sparse(pre, n, d - 1, field);
}

CohomologyClass CohomologyEngine::product(const CohomologyClass& u, const CohomologyClass& v) const
{
    const std::size_t d = u.degree + v.degree;
    if (d > max_degree_)
        throw InputError("product degree " + std::to_string(d) + " exceeds the computed range (max degree " +
                         std::to_string(max_degree_) + ")");
    return class_of(u.representative * v.representative, d);
}

DenseVector CohomologyEngine::coordinates(const CohomologyClass& c) const
{
    const auto& b = basis(c.degree);
    const std::size_t n = algebra_.n();
    DenseVector coords;
    GradedElement rebuilt(n, algebra_.field());
    for (const auto& cls : b) {
        const Word& lead = cls.representative.terms().begin()->first;
        Scalar k = c.representative.coefficient(lead);
        rebuilt += k * cls.representative;
        coords.push_back(std::move(k));
    }
    if (rebuilt != c.representative)
        throw InternalError("class is not in the span of the computed basis");
    return coords;
}

// ---------------------------------------------------------------------------

std::string RingPresentation::relation_name(const Relation& r) const
{
    std::string out;
    std::size_t i = 0;
    while (i < r.word.size()) {
        std::size_t j = i;
        while (j < r.word.size() && r.word[j] == r.word[i])
            ++j;
        if (!out.empty())
            out += '*';
        out += generators.at(r.word[i]).name;
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out.empty() ? "1" : out;
}

bool PresentationReport::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

namespace
{

// Exponent vectors e with sum e_i * deg_i = d, in graded-lex order.
void exponent_vectors(const std::vector<std::size_t>& degs, std::size_t d, std::size_t pos,
                      std::vector<std::size_t>& current, std::vector<std::vector<std::size_t>>& out)
{
    if (pos == degs.size()) {
        if (d == 0)
            out.push_back(current);
        return;
    }
    for (std::size_t e = d / degs[pos] + 1; e-- > 0;) {
        current[pos] = e;
        exponent_vectors(degs, d - e * degs[pos], pos + 1, current, out);
    }
    current[pos] = 0;
}

} // namespace

PresentationReport ring_presentation_check(const CohomologyEngine& engine, const RingPresentation& p,
                                           std::size_t max_degree)
{
    const auto& alg = engine.algebra();
    const std::size_t n = alg.n();
    const Field field = alg.field();
    if (max_degree > engine.max_degree())
        throw InputError("presentation check degree exceeds the computed range");

    PresentationReport report;
    report.max_degree = max_degree;

    std::vector<std::size_t> degs;
    for (const auto& g : p.generators) {
        if (g.degree == 0)
            throw InputError("generator " + g.name + " must have positive degree");
        degs.push_back(g.degree);
        PresentationCheck c{"generator " + g.name, false, ""};
        if (g.representative.generator_count() != n || g.representative.field() != field) {
            c.detail = "representative does not belong to the algebra";
        } else if (g.representative.degree() != g.degree) {
            c.detail = "representative is not homogeneous of degree " + std::to_string(g.degree);
        } else if (g.degree > engine.max_degree()) {
            c.detail = "degree beyond the computed range";
        } else if (auto dz = alg.differential(g.representative); !dz.is_zero()) {
            c.detail = "not a cocycle, d = " + alg.render(dz);
        } else {
            auto cls = engine.class_of(g.representative, g.degree);
            c.pass = !cls.is_zero();
            c.detail = c.pass ? "nonzero class, canonical representative " + alg.render(cls.representative)
                              : "representative is a coboundary";
        }
        report.checks.push_back(std::move(c));
    }

    auto evaluate = [&](const std::vector<std::size_t>& word) {
        GradedElement e = GradedElement::unit(n, field);
        std::size_t d = 0;
        for (std::size_t i : word) {
            e = e * p.generators.at(i).representative;
            d += p.generators.at(i).degree;
        }
        return std::pair{e, d};
    };

    for (const auto& r : p.relations) {
        PresentationCheck c{"relation " + p.relation_name(r) + " = 0", false, ""};
        auto [e, d] = evaluate(r.word);
        if (d > engine.max_degree()) {
            c.detail = "degree beyond the computed range";
        } else {
            auto cls = engine.class_of(e, d);
            c.pass = cls.is_zero();
            c.detail = c.pass ? "zero class" : "nonzero class, canonical witness " + alg.render(cls.representative);
        }
        report.checks.push_back(std::move(c));
    }

    for (const auto& cm : p.commutations) {
        const auto& u = p.generators.at(cm.first);
        const auto& v = p.generators.at(cm.second);
        PresentationCheck c{"commutation " + u.name + "*" + v.name + " = " + v.name + "*" + u.name, false, ""};
        const std::size_t d = u.degree + v.degree;
        const GradedElement uv = u.representative * v.representative;
        const GradedElement vu = v.representative * u.representative;
        if (d > engine.max_degree()) {
            c.detail = "degree beyond the computed range";
        } else {
            auto diff = engine.class_of(uv - vu, d);
            c.pass = diff.is_zero();
            c.detail = c.pass ? "classes agree" : "difference class " + alg.render(diff.representative);
        }
        report.checks.push_back(std::move(c));
        if (cm.witness) {
            PresentationCheck w{"commutation witness " + u.name + "*" + v.name + " - " + v.name + "*" + u.name +
                                    " = d(" + alg.render(*cm.witness) + ")",
                                false, ""};
            const GradedElement lhs = uv - vu;
            const GradedElement rhs = alg.differential(*cm.witness);
            w.pass = lhs == rhs;
            w.detail = w.pass ? "exact identity " + alg.render(lhs)
                              : "lhs " + alg.render(lhs) + " differs from rhs " + alg.render(rhs);
            report.checks.push_back(std::move(w));
        }
    }

    for (std::size_t d = 0; d <= max_degree; ++d) {
        std::vector<std::vector<std::size_t>> exps;
        std::vector<std::size_t> current(degs.size(), 0);
        exponent_vectors(degs, d, 0, current, exps);
        SparseEchelon span(field, word_count(n, d));
        for (const auto& ex : exps) {
            std::vector<std::size_t> word;
            for (std::size_t i = 0; i < ex.size(); ++i)
                word.insert(word.end(), ex[i], i);
            auto [e, deg] = evaluate(word);
            span.insert(engine.class_of(e, deg).representative.to_sparse(deg));
        }
        const std::size_t dim = engine.dim(d);
        PresentationCheck c{"spanning H^" + std::to_string(d), span.rank() == dim, ""};
        c.detail = "dim " + std::to_string(dim) + ", " + std::to_string(exps.size()) + " monomials of rank " +
                   std::to_string(span.rank());
        report.checks.push_back(std::move(c));
    }
    return report;
}

RingPresentation presentation_a1()
{
    const auto a = preset_a1();
    RingPresentation p;
    p.generators.push_back({"u1", 1, a.parse("x3")});
    p.generators.push_back({"u2", 2, a.parse("x1*x3 + x3*x1")});
    p.relations.push_back({{0, 0}});
    p.commutations.push_back({0, 1, a.parse("x1^2")});
    return p;
}

RingPresentation presentation_a2()
{
    const auto a = preset_a2();
    RingPresentation p;
    p.generators.push_back({"u1", 1, a.parse("y3")});
    p.generators.push_back({"u2", 2, a.parse("y1^2 + y2*y3 + y3*y2")});
    p.relations.push_back({{0, 0}});
    p.commutations.push_back({0, 1, a.parse("y1*y2 + y2*y1")});
    return p;
}

std::optional<RingPresentation> presentation_preset(const std::string& name)
{
    if (name == "a1")
        return presentation_a1();
    if (name == "a2")
        return presentation_a2();
    return std::nullopt;
}

} // namespace dgfree
