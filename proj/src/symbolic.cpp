#include "dgfree/symbolic.hpp"

#include <cctype>
#include <random>

#include "dgfree/errors.hpp"

namespace dgfree
{

VarSet::VarSet(std::vector<Variable> vars) : vars_(std::move(vars))
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name.empty())
            throw InputError("variable names must be nonempty");
        for (std::size_t j = 0; j < i; ++j)
            if (vars_[j].name == vars_[i].name)
                throw InputError("duplicate variable name '" + vars_[i].name + "'");
    }
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<Variable> vars)
{
    return std::make_shared<const VarSet>(std::move(vars));
}

std::optional<std::size_t> VarSet::index(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const
{
    auto i = index(name);
    if (!i)
        throw InputError("unknown variable '" + std::string(name) + "'");
    return *i;
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const
{
    long da = 0;
    long db = 0;
    for (int e : a)
        da += e;
    for (int e : b)
        db += e;
    if (da != db)
        return da < db;
    return a < b;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(VarSetPtr vars) : vars_(std::move(vars))
{
    if (!vars_)
        throw InputError("polynomial needs a variable set");
}

LaurentPoly LaurentPoly::constant(VarSetPtr vars, const Rational& c)
{
    LaurentPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_->size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(VarSetPtr vars, std::string_view name)
{
    LaurentPoly p(std::move(vars));
    Exponents e(p.vars_->size(), 0);
    e[p.vars_->require(name)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vars, Exponents e, const Rational& c)
{
    LaurentPoly p(std::move(vars));
    if (e.size() != p.vars_->size())
        throw InputError("exponent vector has the wrong length");
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c)
{
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !vars_->at(i).invertible)
            throw InputError("negative exponent on non-invertible variable '" + vars_->at(i).name + "'");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void LaurentPoly::require_same_ring(const LaurentPoly& o) const
{
    if (vars_ != o.vars_ && *vars_ != *o.vars_)
        throw InputError("polynomials live in different variable sets");
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && constant_term() == terms_.begin()->second);
}

Rational LaurentPoly::constant_term() const
{
    auto it = terms_.find(Exponents(vars_->size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::is_unit_monomial() const
{
    if (terms_.size() != 1)
        return false;
    const auto& e = terms_.begin()->first;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !vars_->at(i).invertible)
            return false;
    return true;
}

bool LaurentPoly::free_of(std::string_view name) const
{
    const std::size_t i = vars_->require(name);
    for (const auto& [e, c] : terms_)
        if (e[i] != 0)
            return false;
    return true;
}

bool LaurentPoly::is_variable(std::string_view name) const
{
    return *this == variable(vars_, name);
}

LaurentPoly LaurentPoly::inverse() const
{
    if (!is_unit_monomial())
        throw InputError("only unit monomials are invertible, not " + to_string());
    const auto& [e, c] = *terms_.begin();
    Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        neg[i] = -e[i];
    return monomial(vars_, neg, c.inverse());
}

LaurentPoly LaurentPoly::pow(int k) const
{
    if (k < 0)
        return inverse().pow(-k);
    LaurentPoly result = constant(vars_, Rational(1));
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& bindings, VarSetPtr target) const
{
    std::vector<LaurentPoly> images;
    images.reserve(vars_->size());
    for (const auto& v : vars_->variables()) {
        auto it = bindings.find(v.name);
        if (it == bindings.end()) {
            images.push_back(variable(target, v.name));
            continue;
        }
        if (*it->second.vars() != *target)
            throw InputError("binding for '" + v.name + "' is not over the target variables");
        images.push_back(it->second);
    }
    LaurentPoly out(target);
    for (const auto& [e, c] : terms_) {
        LaurentPoly term = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (e[i] < 0 && !images[i].is_unit_monomial())
                throw InputError("variable '" + vars_->at(i).name + "' appears inverted but is bound to " +
                                 images[i].to_string() + ", which is not a unit");
            term *= images[i].pow(e[i]);
        }
        out += term;
    }
    return out;
}

Scalar LaurentPoly::evaluate(const std::map<std::string, Scalar>& point, Field field) const
{
    std::vector<std::optional<Scalar>> values(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        auto it = point.find(vars_->at(i).name);
        if (it != point.end()) {
            if (it->second.field() != field)
                throw InputError("value for '" + vars_->at(i).name + "' is over a different field");
            values[i] = it->second;
        }
    }
    Scalar total = field.zero();
    for (const auto& [e, c] : terms_) {
        Scalar term = field.from_rational(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!values[i])
                throw InputError("no value for variable '" + vars_->at(i).name + "'");
            Scalar base = *values[i];
            if (e[i] < 0) {
                if (base.is_zero())
                    throw InputError("variable '" + vars_->at(i).name + "' is inverted but evaluated at zero");
                base = base.inverse();
            }
            for (int k = 0; k < std::abs(e[i]); ++k)
                term *= base;
        }
        total += term;
    }
    return total;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += vars_->at(i).name;
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string coef = c.to_string();
        const bool negative = coef[0] == '-';
        if (negative)
            coef.erase(0, 1);
        std::string term = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly p(*this);
    for (auto& [e, c] : p.terms_)
        c = -c;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
{
    a.require_same_ring(b);
    LaurentPoly r(a);
    for (const auto& [e, c] : b.terms_)
        r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
{
    a.require_same_ring(b);
    LaurentPoly r(a);
    for (const auto& [e, c] : b.terms_)
        r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.require_same_ring(b);
    LaurentPoly r(a.vars_);
    Exponents e(a.vars_->size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& a)
{
    LaurentPoly r(a.vars_);
    for (const auto& [e, v] : a.terms_)
        r.add_term(e, c * v);
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

namespace
{

class Parser
{
public:
    Parser(std::string_view text, VarSetPtr vars) : text_(text), vars_(std::move(vars)) {}

    LaurentPoly run()
    {
        LaurentPoly p = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw InputError("cannot parse polynomial '" + std::string(text_) + "': " + why);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPoly expr()
    {
        LaurentPoly p = term();
        while (true) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    LaurentPoly term()
    {
        LaurentPoly p = unary();
        while (true) {
            if (accept('*')) {
                p *= unary();
            } else if (accept('/')) {
                LaurentPoly d = unary();
                if (d.is_zero())
                    fail("division by zero");
                if (!d.is_unit_monomial())
                    fail("division by " + d.to_string() + ", which is not a unit");
                p *= d.inverse();
            } else {
                return p;
            }
        }
    }

    LaurentPoly unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    LaurentPoly power()
    {
        LaurentPoly base = atom();
        if (!accept('^'))
            return base;
        skip();
        bool negative = false;
        if (accept('-'))
            negative = true;
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("exponent must be an integer");
        int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (negative && !base.is_unit_monomial())
            fail("negative power of " + base.to_string() + ", which is not a unit");
        return base.pow(negative ? -k : k);
    }

    LaurentPoly atom()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (accept('(')) {
            LaurentPoly p = expr();
            if (!accept(')'))
                fail("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return LaurentPoly::constant(vars_, Rational::parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            if (!vars_->index(name))
                fail("unknown variable '" + name + "'");
            return LaurentPoly::variable(vars_, name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    VarSetPtr vars_;
    std::size_t pos_ = 0;
};

void require_square(const PolyMatrix& m)
{
    for (const auto& row : m)
        if (row.size() != m.size())
            throw InputError("matrix is not square");
    if (m.empty())
        throw InputError("empty matrix");
}

PolyMatrix minor(const PolyMatrix& m, std::size_t r, std::size_t c)
{
    PolyMatrix out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r)
            continue;
        std::vector<LaurentPoly> row;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != c)
                row.push_back(m[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, VarSetPtr vars) { return Parser(text, std::move(vars)).run(); }

PolyMatrix poly_identity(const VarSetPtr& vars, std::size_t n)
{
    PolyMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly(vars)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = LaurentPoly::constant(vars, Rational(1));
    return m;
}

PolyMatrix poly_matrix(const VarSetPtr& vars, const std::vector<std::vector<std::string>>& rows)
{
    PolyMatrix m;
    for (const auto& row : rows) {
        std::vector<LaurentPoly> r;
        for (const auto& s : row)
            r.push_back(LaurentPoly::parse(s, vars));
        m.push_back(std::move(r));
    }
    return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.empty() || b.empty())
        throw InputError("empty matrix");
    const std::size_t inner = b.size();
    for (const auto& row : a)
        if (row.size() != inner)
            throw InputError("matrix shapes do not match for multiplication");
    const std::size_t cols = b[0].size();
    for (const auto& row : b)
        if (row.size() != cols)
            throw InputError("ragged matrix");
    const VarSetPtr& vars = a[0][0].vars();
    PolyMatrix out(a.size(), std::vector<LaurentPoly>(cols, LaurentPoly(vars)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < inner; ++k)
                if (!a[i][k].is_zero() && !b[k][j].is_zero())
                    out[i][j] += a[i][k] * b[k][j];
    return out;
}

LaurentPoly determinant(const PolyMatrix& m)
{
    require_square(m);
    if (m.size() == 1)
        return m[0][0];
    LaurentPoly det(m[0][0].vars());
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[0][j].is_zero())
            continue;
        LaurentPoly t = m[0][j] * determinant(minor(m, 0, j));
        if (j % 2 == 0)
            det += t;
        else
            det -= t;
    }
    return det;
}

PolyMatrix adjugate(const PolyMatrix& m)
{
    require_square(m);
    const std::size_t n = m.size();
    const VarSetPtr& vars = m[0][0].vars();
    if (n == 1)
        return poly_identity(vars, 1);
    PolyMatrix adj(n, std::vector<LaurentPoly>(n, LaurentPoly(vars)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly c = determinant(minor(m, j, i));
            adj[i][j] = (i + j) % 2 == 0 ? c : -c;
        }
    }
    return adj;
}

PolyMatrix inverse(const PolyMatrix& m)
{
    const LaurentPoly det = determinant(m);
    if (!det.is_unit_monomial())
        throw InputError("determinant " + det.to_string() + " is not a unit");
    const LaurentPoly inv = det.inverse();
    PolyMatrix adj = adjugate(m);
    for (auto& row : adj)
        for (auto& e : row)
            e = inv * e;
    return adj;
}

PolyMatrix substitute(const PolyMatrix& m, const std::map<std::string, LaurentPoly>& bindings, VarSetPtr target)
{
    PolyMatrix out;
    for (const auto& row : m) {
        std::vector<LaurentPoly> r;
        for (const auto& e : row)
            r.push_back(e.substitute(bindings, target));
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_string(const PolyMatrix& m)
{
    std::string out = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            out += "; ";
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j)
                out += ", ";
            out += m[i][j].to_string();
        }
    }
    return out + ")";
}

namespace
{

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.size() != b.size())
        throw InputError("matrix shapes differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].size() != b[i].size())
            throw InputError("matrix shapes differ");
}

} // namespace

MatrixIdentityVerdict matrix_identity_check(const PolyMatrix& lhs, const PolyMatrix& rhs)
{
    require_same_shape(lhs, rhs);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        for (std::size_t j = 0; j < lhs[i].size(); ++j) {
            LaurentPoly diff = lhs[i][j] - rhs[i][j];
            if (!diff.is_zero())
                return {false, std::pair{i, j}, std::move(diff)};
        }
    }
    return {};
}

RandomPointVerdict random_point_check(const PolyMatrix& lhs, const PolyMatrix& rhs, std::size_t points,
                                      std::uint64_t seed)
{
    require_same_shape(lhs, rhs);
    RandomPointVerdict verdict;
    if (lhs.empty() || lhs[0].empty())
        return verdict;
    const VarSetPtr& vars = lhs[0][0].vars();
    const Field q = Field::rationals();
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t span) { return static_cast<long long>(rng() % span); };
    for (std::size_t k = 0; k < points; ++k) {
        std::map<std::string, Scalar> point;
        std::map<std::string, Rational> shown;
        for (const auto& v : vars->variables()) {
            long long num = draw(19) - 9;
            if (v.invertible && num == 0)
                num = 1 + draw(9);
            const Rational value(num, 1 + draw(5));
            point.emplace(v.name, Scalar(value));
            shown.emplace(v.name, value);
        }
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            for (std::size_t j = 0; j < lhs[i].size(); ++j) {
                if (lhs[i][j].evaluate(point, q) != rhs[i][j].evaluate(point, q)) {
                    verdict.holds = false;
                    verdict.counterexample = std::move(shown);
                    verdict.points = k + 1;
                    return verdict;
                }
            }
        }
        verdict.points = k + 1;
    }
    return verdict;
}

} // namespace dgfree
