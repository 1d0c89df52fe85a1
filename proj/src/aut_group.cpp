#include "dgfree/aut_group.hpp"

#include <algorithm>
#include <set>

#include "dgfree/errors.hpp"

namespace dgfree
{

std::string AutEquation::label(const StructureConstantAlgebra& a) const
{
    const auto& names = a.labels();
    if (kind == Kind::Unit)
        return "sigma(" + names[i] + ") = " + names[i] + " [" + names[l] + "]";
    return "sigma(" + names[i] + "*" + names[j] + ") = sigma(" + names[i] + ")*sigma(" + names[j] + ") [" +
           names[l] + "]";
}

std::string AutConstraintSystem::unknown(std::size_t i, std::size_t l) const
{
    return m < 10 ? "c" + std::to_string(i + 1) + std::to_string(l + 1)
                  : "c" + std::to_string(i + 1) + "_" + std::to_string(l + 1);
}

AutConstraintSystem aut_constraints(const StructureConstantAlgebra& a)
{
    if (!a.field().is_rational())
        throw InputError("symbolic automorphism constraints need rational structure constants");
    const std::size_t m = a.dim();
    AutConstraintSystem sys;
    sys.m = m;
    std::vector<VarSet::Variable> vars;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < m; ++l)
            vars.push_back({sys.unknown(i, l), false});
    sys.unknowns = VarSet::make(std::move(vars));
    const auto& vs = sys.unknowns;

    std::vector<std::vector<LaurentPoly>> c(m, std::vector<LaurentPoly>(m, LaurentPoly(vs)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < m; ++l)
            c[i][l] = LaurentPoly::variable(vs, sys.unknown(i, l));

    const std::size_t u = a.unit_index();
    for (std::size_t l = 0; l < m; ++l)
        sys.equations.push_back({AutEquation::Kind::Unit, u, u, l,
                                 c[u][l] - LaurentPoly::constant(vs, Rational(l == u ? 1 : 0))});

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t l = 0; l < m; ++l) {
                LaurentPoly eq(vs);
                for (std::size_t k = 0; k < m; ++k)
                    if (!a.constant(i, j, k).is_zero())
                        eq += a.constant(i, j, k).rational() * c[k][l];
                for (std::size_t p = 0; p < m; ++p)
                    for (std::size_t q = 0; q < m; ++q)
                        if (!a.constant(p, q, l).is_zero())
                            eq -= a.constant(p, q, l).rational() * (c[i][p] * c[j][q]);
                sys.equations.push_back({AutEquation::Kind::Multiplicative, i, j, l, std::move(eq)});
            }
        }
    }
    return sys;
}

bool is_automorphism(const StructureConstantAlgebra& a, const Matrix& c)
{
    const std::size_t m = a.dim();
    if (c.rows() != m || c.cols() != m || c.field() != a.field())
        return false;
    if (rank(c) != m)
        return false;
    std::vector<DenseVector> images;
    for (std::size_t i = 0; i < m; ++i) {
        DenseVector row(m, a.field().zero());
        for (std::size_t l = 0; l < m; ++l)
            row[l] = c.at(i, l);
        images.push_back(std::move(row));
    }
    if (images[a.unit_index()] != a.unit())
        return false;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            DenseVector lhs = a.zero();
            for (std::size_t k = 0; k < m; ++k)
                if (!a.constant(i, j, k).is_zero())
                    for (std::size_t l = 0; l < m; ++l)
                        lhs[l] += a.constant(i, j, k) * images[k][l];
            if (lhs != a.multiply(images[i], images[j]))
                return false;
        }
    }
    return true;
}

ParametrizedFamily family_e1()
{
    auto vars = VarSet::make({{"a", true}, {"b", false}});
    return {"E1", vars, poly_matrix(vars, {{"1", "0", "0"}, {"0", "a", "b"}, {"0", "0", "a^2"}})};
}

ParametrizedFamily family_e2()
{
    auto vars = VarSet::make({{"a", true}, {"b", false}, {"c", false}});
    return {"E2", vars,
            poly_matrix(vars, {{"1", "0", "0", "0"}, {"0", "a", "b", "c"}, {"0", "0", "a^2", "2*a*b"},
                               {"0", "0", "0", "a^3"}})};
}

MembershipVerdict family_membership_check(const ParametrizedFamily& fam, const StructureConstantAlgebra& a)
{
    const std::size_t m = a.dim();
    if (fam.matrix.size() != m)
        throw InputError("family matrix size " + std::to_string(fam.matrix.size()) + " does not match algebra dimension " +
                         std::to_string(m));
    for (const auto& row : fam.matrix)
        if (row.size() != m)
            throw InputError("family matrix is not square");
    const auto sys = aut_constraints(a);
    std::map<std::string, LaurentPoly> bindings;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < m; ++l)
            bindings.emplace(sys.unknown(i, l), fam.matrix[i][l]);

    MembershipVerdict v;
    for (std::size_t k = 0; k < sys.equations.size(); ++k) {
        LaurentPoly r = sys.equations[k].poly.substitute(bindings, fam.parameters);
        if (!r.is_zero()) {
            v.holds = false;
            v.failing_equation = k;
            v.equation_label = sys.equations[k].label(a);
            v.residual = std::move(r);
            break;
        }
    }
    v.determinant = determinant(fam.matrix);
    v.determinant_is_unit = v.determinant->is_unit_monomial();
    if (!v.determinant_is_unit)
        v.holds = false;
    return v;
}

namespace
{

struct ParameterSlot
{
    std::string name;
    std::size_t row;
    std::size_t col;
    bool invertible;
};

std::vector<ParameterSlot> parameter_slots(const ParametrizedFamily& fam)
{
    std::vector<ParameterSlot> slots;
    for (const auto& var : fam.parameters->variables()) {
        bool found = false;
        for (std::size_t i = 0; i < fam.matrix.size() && !found; ++i) {
            for (std::size_t j = 0; j < fam.matrix[i].size() && !found; ++j) {
                if (fam.matrix[i][j].is_variable(var.name)) {
                    slots.push_back({var.name, i, j, var.invertible});
                    found = true;
                }
            }
        }
        if (!found)
            throw InputError("parameter '" + var.name + "' does not appear alone in any entry");
    }
    return slots;
}

// Reads parameters off m and checks that the family at those parameters reproduces m.
std::optional<std::string> solve_parameters(const ParametrizedFamily& fam, const std::vector<ParameterSlot>& slots,
                                            const PolyMatrix& m, const VarSetPtr& target,
                                            std::map<std::string, LaurentPoly>& out)
{
    for (const auto& s : slots) {
        const LaurentPoly& value = m[s.row][s.col];
        if (s.invertible && !value.is_unit_monomial())
            return "parameter " + s.name + " would be " + value.to_string() + ", which is not a unit";
        out.insert_or_assign(s.name, value);
    }
    auto check = matrix_identity_check(substitute(fam.matrix, out, target), m);
    if (!check.holds)
        return "entry (" + std::to_string(check.entry->first + 1) + ", " + std::to_string(check.entry->second + 1) +
               ") differs by " + check.difference->to_string();
    return std::nullopt;
}

} // namespace

ClosureVerdict family_closure_check(const ParametrizedFamily& fam)
{
    const auto slots = parameter_slots(fam);
    std::vector<VarSet::Variable> doubled = fam.parameters->variables();
    for (const auto& v : fam.parameters->variables())
        doubled.push_back({v.name + "'", v.invertible});
    const auto vars2 = VarSet::make(std::move(doubled));

    std::map<std::string, LaurentPoly> left;
    std::map<std::string, LaurentPoly> right;
    for (const auto& v : fam.parameters->variables()) {
        left.emplace(v.name, LaurentPoly::variable(vars2, v.name));
        right.emplace(v.name, LaurentPoly::variable(vars2, v.name + "'"));
    }
    const PolyMatrix product = multiply(substitute(fam.matrix, left, vars2), substitute(fam.matrix, right, vars2));

    ClosureVerdict v;
    if (auto why = solve_parameters(fam, slots, product, vars2, v.product_parameters)) {
        v.holds = false;
        v.failure = "product: " + *why;
        return v;
    }
    const PolyMatrix inv = inverse(fam.matrix);
    if (auto why = solve_parameters(fam, slots, inv, fam.parameters, v.inverse_parameters)) {
        v.holds = false;
        v.failure = "inverse: " + *why;
        return v;
    }
    auto id = matrix_identity_check(multiply(fam.matrix, inv), poly_identity(fam.parameters, fam.matrix.size()));
    if (!id.holds) {
        v.holds = false;
        v.failure = "inverse does not multiply to the identity";
    }
    return v;
}

std::vector<std::uint64_t> matrix_key(const Matrix& m)
{
    std::vector<std::uint64_t> key;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            key.push_back(m.at(i, j).residue());
    return key;
}

namespace
{

Matrix from_key(Field field, std::size_t m, const std::vector<std::uint64_t>& key)
{
    Matrix out(field, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (key[i * m + j] != 0)
                out.set(i, j, field.from_int(static_cast<long long>(key[i * m + j])));
    return out;
}

} // namespace

std::vector<Matrix> instantiate_family(const ParametrizedFamily& fam, Field field)
{
    if (!field.is_prime())
        throw InputError("family instantiation needs a prime field");
    const std::uint64_t p = field.modulus();
    const auto& vars = fam.parameters->variables();
    const std::size_t m = fam.matrix.size();
    std::vector<std::uint64_t> values(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k)
        values[k] = vars[k].invertible ? 1 : 0;

    std::set<std::vector<std::uint64_t>> keys;
    while (true) {
        std::map<std::string, Scalar> point;
        for (std::size_t k = 0; k < vars.size(); ++k)
            point.emplace(vars[k].name, field.from_int(static_cast<long long>(values[k])));
        std::vector<std::uint64_t> key;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                key.push_back(fam.matrix[i][j].evaluate(point, field).residue());
        keys.insert(std::move(key));

        std::size_t k = 0;
        while (k < vars.size()) {
            if (++values[k] < p)
                break;
            values[k] = vars[k].invertible ? 1 : 0;
            ++k;
        }
        if (k == vars.size())
            break;
    }
    std::vector<Matrix> out;
    for (const auto& key : keys)
        out.push_back(from_key(field, m, key));
    return out;
}

namespace
{

using Residues = std::vector<std::uint64_t>;

// Dense determinant test over F_p on a row-major m x m residue matrix.
bool invertible_mod(Residues a, std::size_t m, std::uint64_t p)
{
    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1)
                r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * x) % p);
            x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % p);
            e >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t r = c;
        while (r < m && a[r * m + c] == 0)
            ++r;
        if (r == m)
            return false;
        if (r != c)
            for (std::size_t k = 0; k < m; ++k)
                std::swap(a[r * m + k], a[c * m + k]);
        const std::uint64_t pinv = inv(a[c * m + c]);
        for (std::size_t r2 = c + 1; r2 < m; ++r2) {
            if (a[r2 * m + c] == 0)
                continue;
            const std::uint64_t f = a[r2 * m + c] * pinv % p;
            for (std::size_t k = c; k < m; ++k)
                a[r2 * m + k] = (a[r2 * m + k] + (p - f) * a[c * m + k]) % p;
        }
    }
    return true;
}

Residues multiply_mod(const Residues& x, const Residues& y, std::size_t m, std::uint64_t p)
{
    Residues out(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            if (x[i * m + k])
                for (std::size_t j = 0; j < m; ++j)
                    out[i * m + j] = (out[i * m + j] + x[i * m + k] * y[k * m + j]) % p;
    return out;
}

// Linear equations forcing sigma(R^k) into R^k for every power of the radical.
void filtration_equations(const StructureConstantAlgebra& a, std::vector<SparseVector>& out)
{
    const std::size_t m = a.dim();
    const Field field = a.field();
    const auto rad = radical_basis(a);
    std::vector<DenseVector> layer = rad;
    while (!layer.empty() && layer.size() < m) {
        SparseEchelon span(field, m);
        for (const auto& v : layer)
            span.insert(to_sparse(v));
        const auto annihilator = span.kernel();
        for (const auto& v : layer) {
            for (const auto& phi : annihilator) {
                SparseVector eq;
                for (std::size_t i = 0; i < m; ++i) {
                    if (v[i].is_zero())
                        continue;
                    for (const auto& e : phi)
                        eq.push_back({i * m + e.index, v[i] * e.value});
                }
                std::sort(eq.begin(), eq.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
                out.push_back(std::move(eq));
            }
        }
        SparseEchelon next(field, m);
        for (const auto& x : layer)
            for (const auto& r : rad)
                next.insert(to_sparse(a.multiply(x, r)));
        next.make_reduced();
        std::vector<DenseVector> nl;
        for (const auto& row : next.rows())
            nl.push_back(to_dense(row, m, field));
        if (nl.size() == layer.size())
            break;
        layer = std::move(nl);
    }
}

} // namespace

BruteForceResult brute_force_aut(const StructureConstantAlgebra& a, std::uint64_t limit)
{
    const Field field = a.field();
    if (!field.is_prime())
        throw InputError("brute-force enumeration needs a prime field");
    const std::uint64_t p = field.modulus();
    const std::size_t m = a.dim();
    const std::size_t mm = m * m;

    // Affine constraints over unknowns C_il (index i*m + l), constant term at index mm.
    std::vector<SparseVector> eqs;
    const std::size_t u = a.unit_index();
    for (std::size_t l = 0; l < m; ++l) {
        SparseVector eq{{u * m + l, field.one()}};
        if (l == u)
            eq.push_back({mm, -field.one()});
        eqs.push_back(std::move(eq));
    }
    if (p > m)
        filtration_equations(a, eqs);

    SparseEchelon ech(field, mm + 1);
    for (auto& e : eqs)
        ech.insert(std::move(e));
    BruteForceResult result{field, 0, 0, {}, false};
    if (ech.is_pivot(mm)) {
        result.group_axioms = true;
        return result;
    }
    ech.make_reduced();

    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < mm; ++k)
        if (!ech.is_pivot(k))
            free.push_back(k);
    result.free_unknowns = free.size();
    long double space = 1;
    for (std::size_t k = 0; k < free.size(); ++k)
        space *= static_cast<long double>(p);
    if (space > static_cast<long double>(limit))
        throw InputError("search space p^" + std::to_string(free.size()) + " = " +
                         std::to_string(static_cast<double>(space)) + " exceeds the limit " + std::to_string(limit));
    result.search_space = static_cast<std::uint64_t>(space);

    // Each pivot unknown is an affine function of the free ones.
    struct Dependent
    {
        std::size_t pivot;
        std::uint64_t constant;
        std::vector<std::pair<std::size_t, std::uint64_t>> terms; // (position in free, coefficient)
    };
    std::vector<std::size_t> free_pos(mm, mm);
    for (std::size_t k = 0; k < free.size(); ++k)
        free_pos[free[k]] = k;
    std::vector<Dependent> deps;
    for (const auto& row : ech.rows()) {
        Dependent d{row.front().index, 0, {}};
        for (std::size_t t = 1; t < row.size(); ++t) {
            const std::uint64_t neg = (-row[t].value).residue();
            if (row[t].index == mm)
                d.constant = neg;
            else
                d.terms.emplace_back(free_pos[row[t].index], neg);
        }
        deps.push_back(std::move(d));
    }

    std::vector<std::vector<Residues>> c(m, std::vector<Residues>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                c[i][j].push_back(a.constant(i, j, k).residue());

    std::set<Residues> found;
    Residues values(free.size(), 0);
    Residues x(mm, 0);
    Residues lhs(m);
    Residues rhs(m);
    for (std::uint64_t count = 0; count < result.search_space; ++count) {
        for (std::size_t k = 0; k < free.size(); ++k)
            x[free[k]] = values[k];
        for (const auto& d : deps) {
            std::uint64_t s = d.constant;
            for (const auto& [pos, coef] : d.terms)
                s = (s + coef * values[pos]) % p;
            x[d.pivot] = s;
        }
        bool ok = invertible_mod(x, m, p);
        for (std::size_t i = 0; ok && i < m; ++i) {
            for (std::size_t j = 0; ok && j < m; ++j) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (std::size_t k = 0; k < m; ++k)
                    if (c[i][j][k])
                        for (std::size_t l = 0; l < m; ++l)
                            lhs[l] = (lhs[l] + c[i][j][k] * x[k * m + l]) % p;
                for (std::size_t q1 = 0; q1 < m; ++q1) {
                    if (!x[i * m + q1])
                        continue;
                    for (std::size_t q2 = 0; q2 < m; ++q2) {
                        const std::uint64_t w = x[i * m + q1] * x[j * m + q2] % p;
                        if (!w)
                            continue;
                        for (std::size_t l = 0; l < m; ++l)
                            if (c[q1][q2][l])
                                rhs[l] = (rhs[l] + w * c[q1][q2][l]) % p;
                    }
                }
                ok = lhs == rhs;
            }
        }
        if (ok)
            found.insert(x);
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (++values[k] < p)
                break;
            values[k] = 0;
        }
    }

    Residues id(mm, 0);
    for (std::size_t i = 0; i < m; ++i)
        id[i * m + i] = 1;
    bool group = found.count(id) == 1;
    for (auto it = found.begin(); group && it != found.end(); ++it)
        for (auto jt = found.begin(); group && jt != found.end(); ++jt)
            group = found.count(multiply_mod(*it, *jt, m, p)) == 1;
    result.group_axioms = group;
    for (const auto& key : found)
        result.automorphisms.push_back(from_key(field, m, key));
    return result;
}

} // namespace dgfree
