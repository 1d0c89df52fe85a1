#include "dgfree/picard.hpp"

#include <algorithm>
#include <set>
#include <type_traits>

#include "dgfree/errors.hpp"
#include "dgfree/symbolic.hpp"

namespace dgfree
{

std::string to_string(GroupId g)
{
    return g == GroupId::G1 ? "G1" : "G2";
}

G1Element G1Element::identity(Field field)
{
    return {field.one(), field.zero()};
}

G1Element G1Element::from_matrix(const Matrix& m)
{
    if (m.rows() != 2 || m.cols() != 2)
        throw InternalError("G1 element must be 2x2");
    const Scalar a = m.at(0, 0);
    if (a.is_zero() || !m.at(1, 0).is_zero() || m.at(1, 1) != a * a)
        throw InternalError("matrix left the G1 family:\n" + m.to_string());
    return {a, m.at(0, 1)};
}

Matrix G1Element::matrix() const
{
    Matrix m(field(), 2, 2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 1, a * a);
    return m;
}

G1Element G1Element::inverse() const
{
    const Scalar ai = a.inverse();
    G1Element out{ai, -(b * ai * ai * ai)};
    if (!(out * *this == identity(field())))
        throw InternalError("G1 inverse failed");
    return out;
}

std::string G1Element::to_string() const
{
    return "(" + a.to_string() + ", " + b.to_string() + ")";
}

G1Element operator*(const G1Element& x, const G1Element& y)
{
    return G1Element::from_matrix(x.matrix() * y.matrix());
}

G2Element G2Element::identity(Field field)
{
    return {field.one(), field.zero(), field.zero()};
}

G2Element G2Element::from_matrix(const Matrix& m)
{
    if (m.rows() != 3 || m.cols() != 3)
        throw InternalError("G2 element must be 3x3");
    const Scalar a = m.at(0, 0);
    const Scalar b = m.at(0, 1);
    const Scalar two = a.field().from_int(2);
    const bool shape = !a.is_zero() && m.at(1, 0).is_zero() && m.at(2, 0).is_zero() && m.at(2, 1).is_zero() &&
                       m.at(1, 1) == a * a && m.at(1, 2) == two * a * b && m.at(2, 2) == a * a * a;
    if (!shape)
        throw InternalError("matrix left the G2 family:\n" + m.to_string());
    return {a, b, m.at(0, 2)};
}

Matrix G2Element::matrix() const
{
    Matrix m(field(), 3, 3);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(0, 2, c);
    m.set(1, 1, a * a);
    m.set(1, 2, field().from_int(2) * a * b);
    m.set(2, 2, a * a * a);
    return m;
}

G2Element G2Element::inverse() const
{
    const Scalar ai = a.inverse();
    const Scalar ai3 = ai * ai * ai;
    G2Element out{ai, -(b * ai3), -(c * ai3 * ai) + field().from_int(2) * b * b * ai3 * ai * ai};
    if (!(out * *this == identity(field())))
        throw InternalError("G2 inverse failed");
    return out;
}

std::string G2Element::to_string() const
{
    return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

G2Element operator*(const G2Element& x, const G2Element& y)
{
    return G2Element::from_matrix(x.matrix() * y.matrix());
}

G1Element make_g1(const Scalar& a, const Scalar& b)
{
    if (a.is_zero())
        throw InputError("G1 element needs a != 0");
    if (a.field() != b.field())
        throw InputError("G1 entries from different fields");
    return {a, b};
}

G2Element make_g2(const Scalar& a, const Scalar& b, const Scalar& c)
{
    if (a.is_zero())
        throw InputError("G2 element needs a != 0");
    if (a.field() != b.field() || a.field() != c.field())
        throw InputError("G2 entries from different fields");
    return {a, b, c};
}

G1Element commutator(const G1Element& g, const G1Element& h)
{
    return g * h * g.inverse() * h.inverse();
}

G2Element commutator(const G2Element& g, const G2Element& h)
{
    return g * h * g.inverse() * h.inverse();
}

Scalar abelianization(const G1Element& g)
{
    return g.a;
}

Scalar abelianization(const G2Element& g)
{
    return g.a;
}

bool kernel_membership(const G1Element& g)
{
    return g.a.is_one();
}

bool kernel_membership(const G2Element& g)
{
    return g.a.is_one();
}

std::pair<G1Element, G1Element> commutator_witness(const G1Element& k)
{
    if (!kernel_membership(k))
        throw InputError("G1 element " + k.to_string() + " is not in the kernel of sigma");
    const Field f = k.field();
    if (k == G1Element::identity(f))
        return {k, k};
    const G1Element g{f.from_int(2).inverse(), f.zero()};
    const G1Element h{f.one(), k.b};
    if (commutator(g, h) != k)
        throw InternalError("G1 commutator witness failed for " + k.to_string());
    return {g, h};
}

std::pair<G2Element, G2Element> commutator_witness(const G2Element& k)
{
    if (!kernel_membership(k))
        throw InputError("G2 element " + k.to_string() + " is not in the kernel of sigma");
    const Field f = k.field();
    if (k == G2Element::identity(f))
        return {k, k};
    const G2Element g{f.from_int(2).inverse(), f.zero(), f.zero()};
    const G2Element h{f.one(), k.b, (k.c + f.from_int(2) * k.b * k.b) / f.from_int(3)};
    if (commutator(g, h) != k)
        throw InternalError("G2 commutator witness failed for " + k.to_string());
    return {g, h};
}

G1Element conjugation_action(const Scalar& a, const G1Element& k)
{
    if (a.is_zero())
        throw InputError("conjugation action needs a != 0");
    if (!kernel_membership(k))
        throw InputError("conjugation action is defined on the kernel only");
    return {k.a, k.b / a};
}

G2Element conjugation_action(const Scalar& a, const G2Element& k)
{
    if (a.is_zero())
        throw InputError("conjugation action needs a != 0");
    if (!kernel_membership(k))
        throw InputError("conjugation action is defined on the kernel only");
    return {k.a, k.b / a, k.c / (a * a)};
}

std::string DPicDescriptor::render() const
{
    return "Z x " + to_string(group);
}

namespace
{

PolyMatrix g1_poly(const VarSetPtr& v, const std::string& a, const std::string& b)
{
    return poly_matrix(v, {{a, b}, {"0", "(" + a + ")^2"}});
}

PolyMatrix g2_poly(const VarSetPtr& v, const std::string& a, const std::string& b, const std::string& c)
{
    return poly_matrix(v, {{a, b, c}, {"0", "(" + a + ")^2", "2*(" + a + ")*(" + b + ")"}, {"0", "0", "(" + a + ")^3"}});
}

PolyMatrix top_left(const PolyMatrix& m)
{
    return {{m[0][0]}};
}

PolyMatrix poly_commutator(const PolyMatrix& g, const PolyMatrix& h)
{
    return multiply(multiply(multiply(g, h), inverse(g)), inverse(h));
}

SymbolicCheck run_check(std::string name, const PolyMatrix& lhs, const PolyMatrix& rhs, std::size_t points,
                        std::uint64_t seed)
{
    SymbolicCheck c;
    c.name = std::move(name);
    const auto id = matrix_identity_check(lhs, rhs);
    c.symbolic = id.holds;
    const auto rp = random_point_check(lhs, rhs, points, seed);
    c.random_points = rp.holds;
    c.points = rp.points;
    if (!id.holds)
        c.detail = "entry (" + std::to_string(id.entry->first + 1) + ", " + std::to_string(id.entry->second + 1) +
                   ") differs by " + id.difference->to_string();
    else if (!rp.holds)
        c.detail = "random point counterexample";
    return c;
}

} // namespace

std::vector<SymbolicCheck> picard_symbolic_checks(std::uint64_t seed, std::size_t points)
{
    std::vector<SymbolicCheck> out;
    auto add = [&](std::string name, const PolyMatrix& lhs, const PolyMatrix& rhs) {
        out.push_back(run_check(std::move(name), lhs, rhs, points, seed + out.size()));
    };

    {
        auto v = VarSet::make({{"a", true}, {"b", false}, {"a'", true}, {"b'", false}});
        const auto g = g1_poly(v, "a", "b");
        const auto h = g1_poly(v, "a'", "b'");
        add("g1_closure", multiply(g, h), g1_poly(v, "a*a'", "a*b' + b*a'^2"));
        add("g1_inverse", multiply(g, g1_poly(v, "a^-1", "-b*a^-3")), poly_identity(v, 2));
        add("g1_sigma_homomorphism", top_left(multiply(g, h)), multiply(top_left(g), top_left(h)));
        add("g1_commutators_in_kernel", top_left(poly_commutator(g, h)), poly_identity(v, 1));
    }
    {
        auto v = VarSet::make({{"b", false}});
        const auto g = g1_poly(v, "1/2", "0");
        const auto h = g1_poly(v, "1", "b");
        add("g1_commutator_witness", poly_commutator(g, h), g1_poly(v, "1", "b"));
    }
    {
        auto v = VarSet::make({{"a", true}, {"b", false}, {"s", false}});
        const auto g = g1_poly(v, "a", "b");
        add("g1_conjugation_action", multiply(multiply(g, g1_poly(v, "1", "s")), inverse(g)),
            g1_poly(v, "1", "s/a"));
    }
    {
        auto v = VarSet::make({{"a", true}, {"b", false}, {"c", false}, {"a'", true}, {"b'", false}, {"c'", false}});
        const auto g = g2_poly(v, "a", "b", "c");
        const auto h = g2_poly(v, "a'", "b'", "c'");
        add("g2_closure", multiply(g, h), g2_poly(v, "a*a'", "a*b' + b*a'^2", "a*c' + 2*b*a'*b' + c*a'^3"));
        add("g2_inverse", multiply(g, g2_poly(v, "a^-1", "-b*a^-3", "-c*a^-4 + 2*b^2*a^-5")), poly_identity(v, 3));
        add("g2_sigma_homomorphism", top_left(multiply(g, h)), multiply(top_left(g), top_left(h)));
        add("g2_commutators_in_kernel", top_left(poly_commutator(g, h)), poly_identity(v, 1));
    }
    {
        auto v = VarSet::make({{"b", false}, {"c", false}});
        const auto g = g2_poly(v, "1/2", "0", "0");
        const auto h = g2_poly(v, "1", "b", "(c + 2*b^2)/3");
        add("g2_commutator_witness", poly_commutator(g, h), g2_poly(v, "1", "b", "c"));
    }
    {
        auto v = VarSet::make({{"a", true}, {"b", false}, {"c", false}, {"s", false}, {"t", false}});
        const auto g = g2_poly(v, "a", "b", "c");
        add("g2_conjugation_action", multiply(multiply(g, g2_poly(v, "1", "s", "t")), inverse(g)),
            g2_poly(v, "1", "s/a", "t/a^2"));
    }
    return out;
}

namespace
{

std::vector<G1Element> all_elements(Field f, std::uint64_t p, bool kernel_only, const G1Element*)
{
    std::vector<G1Element> out;
    for (std::uint64_t a = 1; a < p; ++a) {
        if (kernel_only && a != 1)
            continue;
        for (std::uint64_t b = 0; b < p; ++b)
            out.push_back({f.from_int(static_cast<long long>(a)), f.from_int(static_cast<long long>(b))});
    }
    return out;
}

std::vector<G2Element> all_elements(Field f, std::uint64_t p, bool kernel_only, const G2Element*)
{
    std::vector<G2Element> out;
    for (std::uint64_t a = 1; a < p; ++a) {
        if (kernel_only && a != 1)
            continue;
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t c = 0; c < p; ++c)
                out.push_back({f.from_int(static_cast<long long>(a)), f.from_int(static_cast<long long>(b)),
                               f.from_int(static_cast<long long>(c))});
    }
    return out;
}

template <class E>
std::vector<E> elements(Field f, bool kernel_only)
{
    return all_elements(f, f.modulus(), kernel_only, static_cast<const E*>(nullptr));
}

template <class E>
std::set<E> cyclic(const E& g)
{
    std::set<E> out;
    E x = E::identity(g.field());
    do {
        out.insert(x);
        x = x * g;
    } while (!out.count(x));
    return out;
}

template <class E>
bool is_subgroup(const std::set<E>& s)
{
    if (s.empty())
        return false;
    for (const auto& x : s) {
        if (!s.count(x.inverse()))
            return false;
        for (const auto& y : s)
            if (!s.count(x * y))
                return false;
    }
    return true;
}

template <class E>
SubgroupCensus census(GroupId id, Field f)
{
    const auto kernel = elements<E>(f, true);
    std::set<std::set<E>> subgroups;
    for (const auto& k : kernel)
        subgroups.insert(cyclic(k));
    subgroups.insert(std::set<E>(kernel.begin(), kernel.end()));

    SubgroupCensus out;
    out.p = f.modulus();
    out.group = id;
    out.subgroups_examined = subgroups.size();
    std::vector<std::set<E>> stable;
    for (const auto& s : subgroups) {
        if (!is_subgroup(s))
            throw InternalError("census produced a non-subgroup");
        bool ok = true;
        for (std::uint64_t a = 1; ok && a < f.modulus(); ++a)
            for (auto it = s.begin(); ok && it != s.end(); ++it)
                ok = s.count(conjugation_action(f.from_int(static_cast<long long>(a)), *it)) == 1;
        if (ok)
            stable.push_back(s);
    }
    for (const auto& s : stable) {
        std::vector<Matrix> ms;
        for (const auto& e : s)
            ms.push_back(e.matrix());
        out.invariant.push_back(std::move(ms));
    }

    if constexpr (std::is_same_v<E, G2Element>) {
        std::set<E> trivial{E::identity(f)};
        std::set<E> vertical;
        std::set<E> parabola;
        for (std::uint64_t t = 0; t < f.modulus(); ++t) {
            const Scalar ts = f.from_int(static_cast<long long>(t));
            vertical.insert({f.one(), f.zero(), ts});
            parabola.insert({f.one(), ts, ts * ts});
        }
        std::set<E> whole(kernel.begin(), kernel.end());
        bool present = true;
        for (const auto* listed : {&trivial, &vertical, &parabola, &whole})
            present = present && std::find(stable.begin(), stable.end(), *listed) != stable.end();
        out.listed_subgroups_present = present;
    }
    return out;
}

template <class E>
CommutatorSubgroupCheck commutator_subgroup(GroupId id, Field f)
{
    const auto group = elements<E>(f, false);
    std::set<E> comm;
    for (const auto& g : group)
        for (const auto& h : group)
            comm.insert(commutator(g, h));
    std::vector<E> frontier(comm.begin(), comm.end());
    while (!frontier.empty()) {
        std::vector<E> next;
        for (const auto& x : frontier)
            for (const auto& y : std::vector<E>(comm.begin(), comm.end()))
                if (comm.insert(x * y).second)
                    next.push_back(x * y);
        frontier = std::move(next);
    }
    const auto kernel = elements<E>(f, true);
    CommutatorSubgroupCheck out{id, f.modulus(), group.size(), comm.size(), false};
    out.equals_kernel = comm == std::set<E>(kernel.begin(), kernel.end());
    return out;
}

} // namespace

SubgroupCensus invariant_subgroup_census(GroupId group, std::uint64_t p)
{
    const Field f = Field::prime(p);
    return group == GroupId::G1 ? census<G1Element>(group, f) : census<G2Element>(group, f);
}

CommutatorSubgroupCheck brute_force_commutator_subgroup(GroupId group, std::uint64_t p)
{
    const Field f = Field::prime(p);
    return group == GroupId::G1 ? commutator_subgroup<G1Element>(group, f) : commutator_subgroup<G2Element>(group, f);
}

std::string compare_groups(GroupId x, GroupId y, std::uint64_t p)
{
    const auto cx = invariant_subgroup_census(x, p).count();
    const auto cy = x == y ? cx : invariant_subgroup_census(y, p).count();
    return cx == cy ? "indistinguishable by this invariant" : "not isomorphic";
}

std::string NonIsomorphismCertificate::verdict() const
{
    if (failure)
        return "unverified";
    return comparison == "not isomorphic" ? "DPic(A1) != DPic(A2)" : "inconclusive";
}

NonIsomorphismCertificate non_isomorphism_certificate(std::uint64_t p, std::uint64_t seed)
{
    NonIsomorphismCertificate cert;
    cert.p = p;
    const Field f = Field::prime(p);
    cert.symbolic_checks = picard_symbolic_checks(seed);
    for (const auto& c : cert.symbolic_checks) {
        if (!c.pass()) {
            cert.failure = "symbolic check " + c.name + " failed: " + c.detail;
            break;
        }
    }
    for (auto g : {GroupId::G1, GroupId::G2}) {
        cert.commutator_checks.push_back(brute_force_commutator_subgroup(g, p));
        if (!cert.commutator_checks.back().equals_kernel && !cert.failure)
            cert.failure = "commutator subgroup of " + to_string(g) + " over " + f.name() + " differs from ker sigma";
    }
    cert.g1 = invariant_subgroup_census(GroupId::G1, p);
    cert.g2 = invariant_subgroup_census(GroupId::G2, p);
    if (cert.g2.listed_subgroups_present != true && !cert.failure)
        cert.failure = "a listed invariant subgroup of G2 is missing from the census";
    cert.comparison = cert.g1.count() == cert.g2.count() ? "indistinguishable by this invariant" : "not isomorphic";
    if (cert.comparison != "not isomorphic" && !cert.failure)
        cert.failure = "census counts agree";

    cert.cited_inputs = {"DPic(A1) = Z x G1 and DPic(A2) = Z x G2, with Gi the automorphism group of Ext(A_i)",
                         "an isomorphism Z x G1 -> Z x G2 induces one G1 -> G2 compatible with abelianization "
                         "and the conjugation actions, so the invariant-subgroup count is an isomorphism invariant"};
    cert.characteristic_zero_facts = {"sigma_i are surjective homomorphisms (symbolic over Q)",
                                      "ker sigma_i is contained in [Gi, Gi] via explicit commutator witnesses",
                                      "[Gi, Gi] is contained in ker sigma_i (symbolic over Q)",
                                      "conjugation actions s -> s/a and (s, t) -> (s/a, t/a^2)"};
    cert.finite_field_facts = {"[Gi, Gi] = ker sigma_i by brute force over " + f.name(),
                               "invariant-subgroup census over " + f.name() + ": G1 " +
                                   std::to_string(cert.g1.count()) + ", G2 " + std::to_string(cert.g2.count())};
    return cert;
}

} // namespace dgfree
