#include "dgfree/ext_algebra.hpp"

#include <map>
#include <random>

#include "dgfree/errors.hpp"
#include "dgfree/symbolic.hpp"

namespace dgfree
{

StructureConstantAlgebra::StructureConstantAlgebra(Field field, std::vector<std::string> labels,
                                                   std::vector<std::vector<DenseVector>> products, std::size_t unit)
    : field_(field), labels_(std::move(labels)), products_(std::move(products)), unit_(unit)
{
    const std::size_t m = labels_.size();
    if (m == 0)
        throw InputError("algebra dimension must be positive");
    if (unit_ >= m)
        throw InputError("unit index out of range");
    if (products_.size() != m)
        throw InputError("structure constant table has the wrong size");
    for (const auto& row : products_) {
        if (row.size() != m)
            throw InputError("structure constant table has the wrong size");
        for (const auto& v : row) {
            if (v.size() != m)
                throw InputError("structure constant vector has the wrong length");
            for (const auto& s : v)
                if (s.field() != field_)
                    throw InputError("structure constant over the wrong field");
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        if (product(unit_, i) != basis_vector(i) || product(i, unit_) != basis_vector(i))
            throw InputError("unit law fails for " + labels_[unit_] + " and " + labels_[i]);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (multiply(product(i, j), basis_vector(k)) != multiply(basis_vector(i), product(j, k)))
                    throw InputError("associativity fails for (" + labels_[i] + ", " + labels_[j] + ", " +
                                     labels_[k] + ")");
}

StructureConstantAlgebra StructureConstantAlgebra::truncated_polynomial(Field field, std::size_t m)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i)
        labels.push_back("e" + std::to_string(i + 1));
    std::vector<std::vector<DenseVector>> products(m, std::vector<DenseVector>(m, DenseVector(m, field.zero())));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; i + j < m; ++j)
            products[i][j][i + j] = field.one();
    return {field, std::move(labels), std::move(products), 0};
}

DenseVector StructureConstantAlgebra::zero() const { return DenseVector(dim(), field_.zero()); }

DenseVector StructureConstantAlgebra::basis_vector(std::size_t i) const
{
    DenseVector v = zero();
    v.at(i) = field_.one();
    return v;
}

DenseVector StructureConstantAlgebra::multiply(const DenseVector& x, const DenseVector& y) const
{
    if (x.size() != dim() || y.size() != dim())
        throw InputError("algebra element has the wrong length");
    DenseVector out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero())
                continue;
            const Scalar c = x[i] * y[j];
            const auto& p = products_[i][j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (!p[k].is_zero())
                    out[k] += c * p[k];
        }
    }
    return out;
}

DenseVector StructureConstantAlgebra::power(const DenseVector& x, std::size_t k) const
{
    DenseVector r = unit();
    for (std::size_t i = 0; i < k; ++i)
        r = multiply(r, x);
    return r;
}

bool StructureConstantAlgebra::is_commutative() const
{
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (products_[i][j] != products_[j][i])
                return false;
    return true;
}

StructureConstantAlgebra StructureConstantAlgebra::change_basis(const std::vector<DenseVector>& basis,
                                                                std::vector<std::string> labels) const
{
    const std::size_t m = dim();
    if (basis.size() != m || labels.size() != m)
        throw InputError("a new basis needs exactly " + std::to_string(m) + " vectors and labels");
    Matrix p(field_, m, m);
    for (std::size_t j = 0; j < m; ++j)
        p.set_column(j, to_sparse(basis[j]));
    if (rank(p) != m)
        throw InputError("vectors do not form a basis");
    std::optional<std::size_t> unit_pos;
    for (std::size_t j = 0; j < m; ++j)
        if (basis[j] == unit())
            unit_pos = j;
    if (!unit_pos)
        throw InputError("the unit must be one of the new basis vectors");
    std::vector<std::vector<DenseVector>> products(m, std::vector<DenseVector>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            products[i][j] = *solve(p, multiply(basis[i], basis[j]));
    return {field_, std::move(labels), std::move(products), *unit_pos};
}

StructureConstantAlgebra StructureConstantAlgebra::reduce(Field target) const
{
    if (!field_.is_rational())
        throw InputError("only rational structure constants can be reduced");
    auto products = products_;
    for (auto& row : products)
        for (auto& v : row)
            for (auto& s : v)
                s = target.from_rational(s.rational());
    return {target, labels_, std::move(products), unit_};
}

std::string StructureConstantAlgebra::render(const DenseVector& x) const
{
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        std::string coef = x[i].to_string();
        const bool negative = coef[0] == '-';
        if (negative)
            coef.erase(0, 1);
        const std::string term = coef == "1" ? labels_[i] : coef + "*" + labels_[i];
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> StructureConstantAlgebra::relations() const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (i != unit_ && j != unit_)
                out.push_back(labels_[i] + "*" + labels_[j] + " = " + render(products_[i][j]));
    return out;
}

// ---------------------------------------------------------------------------

std::string unknown_name(std::size_t i, std::size_t j, std::size_t m)
{
    if (m < 10)
        return "a" + std::to_string(i + 1) + std::to_string(j + 1);
    return "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

namespace
{

std::string render_linear(const std::vector<std::pair<std::size_t, Scalar>>& terms, std::size_t m)
{
    std::string out;
    for (const auto& [u, c] : terms) {
        std::string coef = c.to_string();
        const bool negative = coef[0] == '-';
        if (negative)
            coef.erase(0, 1);
        const std::string name = unknown_name(u / m, u % m, m);
        const std::string term = coef == "1" ? name : coef + "*" + name;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::vector<std::string> CommutantBasis::constraints() const
{
    std::vector<std::string> out;
    for (const auto& row : equations) {
        const std::size_t pivot = row.front().index;
        std::vector<std::pair<std::size_t, Scalar>> rhs;
        for (std::size_t t = 1; t < row.size(); ++t)
            rhs.emplace_back(row[t].index, -row[t].value);
        out.push_back(unknown_name(pivot / m, pivot % m, m) + " = " + render_linear(rhs, m));
    }
    return out;
}

bool CommutantBasis::implies(const SparseVector& equation) const
{
    SparseEchelon ech(field, m * m);
    for (const auto& e : equations)
        ech.insert(e);
    return ech.reduce_leading(equation).empty();
}

bool CommutantBasis::same_solution_space(const std::vector<SparseVector>& given) const
{
    SparseEchelon theirs(field, m * m);
    for (const auto& e : given) {
        if (!implies(e))
            return false;
        theirs.insert(e);
    }
    return theirs.rank() == equations.size();
}

bool CommutantBasis::contains(const Matrix& a) const
{
    if (a.rows() != m || a.cols() != m || a.field() != field)
        return false;
    DenseVector flat(m * m, field.zero());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            flat[i * m + j] = a.at(i, j);
    for (const auto& eq : equations) {
        Scalar s = field.zero();
        for (const auto& e : eq)
            s += e.value * flat[e.index];
        if (!s.is_zero())
            return false;
    }
    return true;
}

std::vector<SparseVector> parse_constraints(const std::vector<std::string>& chains, std::size_t m, Field field)
{
    std::vector<VarSet::Variable> vars;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            vars.push_back({unknown_name(i, j, m), false});
    const auto vs = VarSet::make(std::move(vars));

    auto linear = [&](const std::string& side) {
        const LaurentPoly p = LaurentPoly::parse(side, vs);
        std::map<std::size_t, Scalar> coeffs;
        for (const auto& [e, c] : p.terms()) {
            long total = 0;
            std::size_t var = 0;
            for (std::size_t k = 0; k < e.size(); ++k) {
                total += e[k];
                if (e[k] != 0)
                    var = k;
            }
            if (total != 1)
                throw InputError("constraint side '" + side + "' is not linear and homogeneous");
            coeffs[var] += field.from_rational(c);
        }
        SparseVector v;
        for (auto& [k, c] : coeffs)
            if (!c.is_zero())
                v.push_back({k, c});
        return v;
    };

    std::vector<SparseVector> out;
    for (const auto& chain : chains) {
        std::vector<std::string> sides;
        std::size_t start = 0;
        while (true) {
            const auto eq = chain.find('=', start);
            sides.push_back(chain.substr(start, eq == std::string::npos ? std::string::npos : eq - start));
            if (eq == std::string::npos)
                break;
            start = eq + 1;
        }
        if (sides.size() < 2)
            throw InputError("constraint '" + chain + "' has no '='");
        for (std::size_t k = 0; k + 1 < sides.size(); ++k)
            out.push_back(add_scaled(linear(sides[k]), -field.one(), linear(sides[k + 1])));
    }
    return out;
}

CommutantBasis degree_zero_endomorphism_basis(const ConnectionData& data)
{
    data.validate_shape();
    const std::size_t m = data.rank();
    const std::size_t n = data.algebra.n();
    const Field field = data.algebra.field();

    // coefficient[i][j][t] = coefficient of generator t in D_ij.
    std::vector<std::vector<DenseVector>> coef(m, std::vector<DenseVector>(m, DenseVector(n, field.zero())));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& [w, c] : data.connection[i][j].terms())
                coef[i][j][w.letters[0]] = c;

    // (AD - DA)_ij has coefficient sum_k a_ik [D_kj]_t - [D_ik]_t a_kj on generator t.
    SparseEchelon ech(field, m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t t = 0; t < n; ++t) {
                std::map<std::size_t, Scalar> eq;
                for (std::size_t k = 0; k < m; ++k) {
                    if (!coef[k][j][t].is_zero())
                        eq[i * m + k] += coef[k][j][t];
                    if (!coef[i][k][t].is_zero())
                        eq[k * m + j] -= coef[i][k][t];
                }
                SparseVector v;
                for (auto& [u, c] : eq)
                    if (!c.is_zero())
                        v.push_back({u, c});
                if (!v.empty())
                    ech.insert(std::move(v));
            }
        }
    }
    ech.make_reduced();

    CommutantBasis out{field, m, {}, ech.rows()};
    for (const auto& k : ech.kernel()) {
        Matrix a(field, m, m);
        for (const auto& e : k)
            a.set(e.index / m, e.index % m, e.value);
        out.matrices.push_back(std::move(a));
    }
    return out;
}

CommutantBasis degree_zero_endomorphism_basis(const SemifreeModule& f)
{
    return degree_zero_endomorphism_basis(f.data());
}

namespace
{

DenseVector flatten(const Matrix& a)
{
    DenseVector v;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            v.push_back(a.at(i, j));
    return v;
}

} // namespace

std::vector<Matrix> ext_basis_matrices(const CommutantBasis& b)
{
    if (b.matrices.empty())
        throw InternalError("empty commutant");
    std::vector<Matrix> basis = b.matrices;
    const Matrix id = Matrix::identity(b.field, b.m);
    if (!b.contains(id))
        throw InternalError("identity is not in the commutant");
    for (const auto& x : basis)
        if (x == id)
            return basis;
    // Coordinates of the identity in the echelon basis: its entries at the leading positions.
    const DenseVector flat = flatten(id);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& col = basis[k];
        const DenseVector bk = flatten(col);
        std::size_t lead = 0;
        while (bk[lead].is_zero())
            ++lead;
        if (!flat[lead].is_zero()) {
            basis[k] = id;
            return basis;
        }
    }
    throw InternalError("identity has no nonzero coordinate");
}

StructureConstantAlgebra ext_structure_constants(const CommutantBasis& b, Composition order)
{
    const std::vector<Matrix> basis = ext_basis_matrices(b);
    const std::size_t dim = basis.size();
    const std::size_t mm = b.m * b.m;
    Matrix coords(b.field, mm, dim);
    for (std::size_t k = 0; k < dim; ++k)
        coords.set_column(k, to_sparse(flatten(basis[k])));

    std::size_t unit = 0;
    const Matrix id = Matrix::identity(b.field, b.m);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < dim; ++k) {
        labels.push_back("e" + std::to_string(k + 1));
        if (basis[k] == id)
            unit = k;
    }

    std::vector<std::vector<DenseVector>> products(dim, std::vector<DenseVector>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const Matrix prod = order == Composition::Functional ? basis[j] * basis[i] : basis[i] * basis[j];
            auto x = solve(coords, flatten(prod));
            if (!x)
                throw InternalError("commutant is not closed under products");
            products[i][j] = std::move(*x);
        }
    }
    return {b.field, std::move(labels), std::move(products), unit};
}

std::vector<DenseVector> radical_basis(const StructureConstantAlgebra& a)
{
    const std::size_t m = a.dim();
    const Field field = a.field();
    if (field.is_prime() && field.modulus() <= m)
        throw NotApplicableError("the trace-form radical needs characteristic 0 or p > dim");
    // tr(L_{e_k}) = sum_l c_kl^l.
    DenseVector traces(m, field.zero());
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
            traces[k] += a.constant(k, l, l);
    // x is radical iff sum_i x_i tr(L_{e_i e_j}) = 0 for every j.
    SparseEchelon eqs(field, m);
    for (std::size_t j = 0; j < m; ++j) {
        DenseVector row(m, field.zero());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k)
                row[i] += a.constant(i, j, k) * traces[k];
        eqs.insert(to_sparse(row));
    }
    std::vector<DenseVector> out;
    for (const auto& k : eqs.kernel())
        out.push_back(to_dense(k, m, field));
    return out;
}

namespace
{

bool generates_truncated(const StructureConstantAlgebra& a, const DenseVector& x)
{
    const std::size_t m = a.dim();
    SparseEchelon powers(a.field(), m);
    DenseVector p = a.unit();
    for (std::size_t k = 0; k < m; ++k) {
        if (!powers.insert(to_sparse(p)))
            return false;
        p = a.multiply(p, x);
    }
    return to_sparse(p).empty();
}

} // namespace

std::optional<TruncatedPolynomial> truncated_polynomial_recognize(const StructureConstantAlgebra& a,
                                                                  std::size_t budget)
{
    if (!a.is_commutative())
        throw NotApplicableError("truncated polynomial recognition needs a commutative algebra");
    const std::size_t m = a.dim();
    if (m == 1)
        return TruncatedPolynomial{a.zero(), 1};
    const auto rad = radical_basis(a);
    if (rad.size() + 1 != m)
        return std::nullopt;

    std::size_t tried = 0;
    for (const auto& x : rad) {
        if (tried++ >= budget)
            return std::nullopt;
        if (generates_truncated(a, x))
            return TruncatedPolynomial{x, m};
    }
    // Integer combinations with coefficients in [-2, 2], odometer order.
    const std::size_t r = rad.size();
    std::vector<int> digits(r, -2);
    while (tried < budget) {
        DenseVector x = a.zero();
        for (std::size_t i = 0; i < r; ++i)
            if (digits[i] != 0)
                for (std::size_t k = 0; k < m; ++k)
                    x[k] += a.field().from_int(digits[i]) * rad[i][k];
        ++tried;
        if (!to_sparse(x).empty() && generates_truncated(a, x))
            return TruncatedPolynomial{x, m};
        std::size_t i = 0;
        while (i < r && digits[i] == 2)
            digits[i++] = -2;
        if (i == r)
            break;
        ++digits[i];
    }
    return std::nullopt;
}

StructureConstantAlgebra power_basis(const StructureConstantAlgebra& a, const TruncatedPolynomial& t)
{
    std::vector<DenseVector> basis;
    std::vector<std::string> labels;
    DenseVector p = a.unit();
    for (std::size_t k = 0; k < t.order; ++k) {
        basis.push_back(p);
        labels.push_back("e" + std::to_string(k + 1));
        p = a.multiply(p, t.generator);
    }
    return a.change_basis(basis, std::move(labels));
}

Matrix gram_matrix(const StructureConstantAlgebra& a, const DenseVector& lambda)
{
    const std::size_t m = a.dim();
    if (lambda.size() != m)
        throw InputError("functional has the wrong length");
    Matrix g(a.field(), m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Scalar s = a.field().zero();
            for (std::size_t k = 0; k < m; ++k)
                s += lambda[k] * a.constant(i, j, k);
            if (!s.is_zero())
                g.set(i, j, s);
        }
    }
    return g;
}

bool is_nondegenerate(const StructureConstantAlgebra& a, const DenseVector& lambda)
{
    return rank(gram_matrix(a, lambda)) == a.dim();
}

std::optional<FrobeniusForm> frobenius_form(const StructureConstantAlgebra& a, std::uint64_t seed,
                                            std::size_t random_attempts)
{
    const std::size_t m = a.dim();
    std::size_t attempts = 0;
    auto attempt = [&](DenseVector lambda) -> std::optional<FrobeniusForm> {
        ++attempts;
        Matrix g = gram_matrix(a, lambda);
        if (rank(g) != m)
            return std::nullopt;
        const bool symmetric = g == g.transpose();
        return FrobeniusForm{std::move(lambda), symmetric, std::move(g), attempts};
    };
    for (std::size_t k = 0; k < m; ++k)
        if (auto f = attempt(a.basis_vector(k)))
            return f;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < random_attempts; ++t) {
        DenseVector lambda(m);
        for (auto& s : lambda)
            s = a.field().from_int(static_cast<long long>(rng() % 7) - 3);
        if (to_sparse(lambda).empty())
            continue;
        if (auto f = attempt(std::move(lambda)))
            return f;
    }
    return std::nullopt;
}

ExtAnalysis analyze_ext(const SemifreeModule& f, std::uint64_t seed)
{
    CommutantBasis commutant = degree_zero_endomorphism_basis(f);
    StructureConstantAlgebra alg = ext_structure_constants(commutant);
    ExtAnalysis out{std::move(commutant), alg, alg.is_commutative(), false, std::nullopt, std::nullopt, std::nullopt};
    if (out.commutative) {
        const Field field = alg.field();
        if (field.is_rational() || field.modulus() > alg.dim())
            out.local = radical_basis(alg).size() + 1 == alg.dim();
        if (out.local) {
            out.recognized = truncated_polynomial_recognize(alg);
            if (out.recognized)
                out.power_algebra = power_basis(alg, *out.recognized);
        }
    }
    out.frobenius = frobenius_form(out.power_algebra ? *out.power_algebra : alg, seed);
    return out;
}

} // namespace dgfree
