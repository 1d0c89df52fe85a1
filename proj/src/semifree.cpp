#include "dgfree/semifree.hpp"

#include <algorithm>

#include "dgfree/errors.hpp"

namespace dgfree
{

void ConnectionData::validate_shape() const
{
    const std::size_t m = labels.size();
    if (m == 0)
        throw InputError("module rank must be positive");
    if (connection.size() != m)
        throw InputError("connection matrix must have " + std::to_string(m) + " rows");
    for (std::size_t i = 0; i < m; ++i) {
        if (connection[i].size() != m)
            throw InputError("connection row " + std::to_string(i + 1) + " must have " + std::to_string(m) +
                             " entries");
        for (std::size_t j = 0; j < m; ++j) {
            const auto& e = connection[i][j];
            if (e.generator_count() != algebra.n() || e.field() != algebra.field())
                throw InputError("connection entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                 ") does not belong to the algebra");
            if (!e.is_zero() && e.degree() != 1)
                throw InputError("connection entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                 ") must be zero or homogeneous of degree 1");
        }
    }
}

bool ConnectionData::strictly_lower_triangular() const
{
    for (std::size_t i = 0; i < connection.size(); ++i)
        for (std::size_t j = i; j < connection[i].size(); ++j)
            if (!connection[i][j].is_zero())
                return false;
    return true;
}

MaurerCartanVerdict maurer_cartan_check(const ConnectionData& data)
{
    data.validate_shape();
    const std::size_t m = data.rank();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            GradedElement r = data.algebra.differential(data.connection[i][j]);
            for (std::size_t k = 0; k < m; ++k)
                r -= data.connection[i][k] * data.connection[k][j];
            if (!r.is_zero())
                return {false, std::pair{i + 1, j + 1}, std::move(r)};
        }
    }
    return {};
}

bool ModuleElement::is_zero() const
{
    return std::all_of(coordinates.begin(), coordinates.end(), [](const auto& c) { return c.is_zero(); });
}

SemifreeModule SemifreeModule::create(ConnectionData data, std::string name)
{
    data.validate_shape();
    if (!data.strictly_lower_triangular())
        throw InputError("connection matrix must be strictly lower triangular");
    auto mc = maurer_cartan_check(data);
    if (!mc.holds)
        throw InputError("Maurer-Cartan identity fails at (" + std::to_string(mc.entry->first) + ", " +
                         std::to_string(mc.entry->second) + "), residual " + data.algebra.render(*mc.residual));
    return SemifreeModule(std::move(data), std::move(name));
}

ModuleElement SemifreeModule::zero() const
{
    return {std::vector<GradedElement>(rank(), GradedElement(algebra().n(), algebra().field()))};
}

ModuleElement SemifreeModule::basis_element(std::size_t i) const
{
    if (i >= rank())
        throw InputError("basis index out of range");
    ModuleElement e = zero();
    e.coordinates[i] = GradedElement::unit(algebra().n(), algebra().field());
    return e;
}

ModuleElement SemifreeModule::differential(const ModuleElement& e) const
{
    if (e.coordinates.size() != rank())
        throw InputError("module element has " + std::to_string(e.coordinates.size()) + " coordinates, expected " +
                         std::to_string(rank()));
    const auto& a = algebra();
    ModuleElement out = zero();
    for (std::size_t i = 0; i < rank(); ++i) {
        const auto& ai = e.coordinates[i];
        if (ai.is_zero())
            continue;
        out.coordinates[i] += a.differential(ai);
        // Split a_i by degree so that each homogeneous part carries its own sign.
        for (const auto& [w, c] : ai.terms()) {
            const Scalar sign = w.degree() % 2 == 0 ? c : -c;
            const GradedElement mono = GradedElement::monomial(a.n(), w, sign);
            for (std::size_t j = 0; j < rank(); ++j)
                if (!data_.connection[i][j].is_zero())
                    out.coordinates[j] += mono * data_.connection[i][j];
        }
    }
    return out;
}

SparseVector SemifreeModule::boundary_column(std::size_t d, std::size_t index) const
{
    const std::size_t n = algebra().n();
    const std::size_t block = word_count(n, d);
    const std::size_t next = block * n;
    const std::size_t label = index / block;
    const std::size_t w = index % block;
    if (label >= rank())
        throw InputError("module basis index out of range");

    SparseVector out;
    for (auto& e : algebra().boundary_column(d, w))
        out.push_back({label * next + e.index, e.value});
    for (std::size_t j = 0; j < rank(); ++j) {
        for (const auto& [word, c] : data_.connection[label][j].terms()) {
            const std::size_t idx = j * next + w * n + word.letters[0];
            out.push_back({idx, d % 2 == 0 ? c : -c});
        }
    }
    std::sort(out.begin(), out.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.index < y.index; });
    SparseVector merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().index == e.index) {
            merged.back().value += e.value;
            if (merged.back().value.is_zero())
                merged.pop_back();
        } else {
            merged.push_back(std::move(e));
        }
    }
    return merged;
}

std::string SemifreeModule::render(const ModuleElement& e) const
{
    std::string out;
    for (std::size_t i = 0; i < e.coordinates.size(); ++i) {
        const auto& c = e.coordinates[i];
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        const std::string coef = algebra().render(c);
        if (labels()[i] == "1")
            out += c.size() > 1 ? "(" + coef + ")" : coef;
        else if (coef == "1")
            out += labels()[i];
        else
            out += (c.size() > 1 ? "(" + coef + ")" : coef) + "*" + labels()[i];
    }
    return out.empty() ? "0" : out;
}

MaurerCartanVerdict maurer_cartan_check(const SemifreeModule& f) { return maurer_cartan_check(f.data()); }

bool minimality_check(const ConnectionData& data)
{
    for (const auto& row : data.connection)
        for (const auto& e : row)
            if (!e.constant_term().is_zero())
                return false;
    return true;
}

bool minimality_check(const SemifreeModule& f) { return minimality_check(f.data()); }

std::vector<std::size_t> homology_dims(const SemifreeModule& f, std::size_t max_degree)
{
    const std::size_t n = f.algebra().n();
    const Field field = f.algebra().field();
    std::vector<std::size_t> ranks;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        const std::size_t cols = f.rank() * word_count(n, d);
        SparseEchelon image(field, f.rank() * word_count(n, d + 1));
        for (std::size_t c = 0; c < cols; ++c)
            image.insert(f.boundary_column(d, c));
        ranks.push_back(image.rank());
    }
    std::vector<std::size_t> dims;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        const std::size_t total = f.rank() * word_count(n, d);
        dims.push_back(total - ranks[d] - (d > 0 ? ranks[d - 1] : 0));
    }
    return dims;
}

KoszulCertificate koszul_certificate(const SemifreeModule& f, std::size_t max_degree)
{
    KoszulCertificate cert;
    cert.rank = f.rank();
    cert.labels = f.labels();
    cert.verified_degree = max_degree;
    cert.minimal = minimality_check(f);
    cert.homology = homology_dims(f, max_degree);
    if (!cert.minimal) {
        cert.refusal = "minimality";
        return cert;
    }
    for (std::size_t d = 0; d <= max_degree; ++d) {
        if (cert.homology[d] != (d == 0 ? 1U : 0U)) {
            cert.refusal = "homology: H^" + std::to_string(d) + "(F) has dimension " + std::to_string(cert.homology[d]);
            return cert;
        }
    }
    cert.issued = true;
    return cert;
}

namespace
{

ConnectionMatrix parse_connection(const DgFreeAlgebra& a, const std::vector<std::vector<std::string>>& rows)
{
    ConnectionMatrix m;
    for (const auto& row : rows) {
        std::vector<GradedElement> r;
        for (const auto& s : row)
            r.push_back(a.parse(s));
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

SemifreeModule preset_f1()
{
    auto a = preset_a1();
    auto d = parse_connection(a, {{"0", "0", "0"}, {"x3", "0", "0"}, {"x1", "x3", "0"}});
    return SemifreeModule::create({std::move(a), {"1", "Se_x3", "Se_z"}, std::move(d)}, "f1");
}

SemifreeModule preset_f2()
{
    auto a = preset_a2();
    auto d = parse_connection(
        a, {{"0", "0", "0", "0"}, {"y3", "0", "0", "0"}, {"y1", "y3", "0", "0"}, {"y2", "y1", "y3", "0"}});
    return SemifreeModule::create({std::move(a), {"1", "Se_y3", "Se_z", "Se_r"}, std::move(d)}, "f2");
}

std::optional<SemifreeModule> module_preset(const std::string& name)
{
    if (name == "f1")
        return preset_f1();
    if (name == "f2")
        return preset_f2();
    return std::nullopt;
}

} // namespace dgfree
