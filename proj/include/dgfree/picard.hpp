#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgfree/linalg.hpp"
#include "dgfree/scalar.hpp"

namespace dgfree
{

enum class GroupId
{
    G1,
    G2
};

std::string to_string(GroupId g);

/// The matrix (a, b; 0, a^2), a != 0.
struct G1Element
{
    Scalar a;
    Scalar b;

    static G1Element identity(Field field);
    /// Throws InternalError if m does not have the shape of the family.
    static G1Element from_matrix(const Matrix& m);

    [[nodiscard]] Field field() const { return a.field(); }
    [[nodiscard]] Matrix matrix() const;
    [[nodiscard]] G1Element inverse() const;
    [[nodiscard]] std::string to_string() const;

    friend G1Element operator*(const G1Element& x, const G1Element& y);
    friend bool operator==(const G1Element&, const G1Element&) = default;
    friend auto operator<=>(const G1Element&, const G1Element&) = default;
};

/// The matrix (a, b, c; 0, a^2, 2ab; 0, 0, a^3), a != 0.
struct G2Element
{
    Scalar a;
    Scalar b;
    Scalar c;

    static G2Element identity(Field field);
    static G2Element from_matrix(const Matrix& m);

    [[nodiscard]] Field field() const { return a.field(); }
    [[nodiscard]] Matrix matrix() const;
    [[nodiscard]] G2Element inverse() const;
    [[nodiscard]] std::string to_string() const;

    friend G2Element operator*(const G2Element& x, const G2Element& y);
    friend bool operator==(const G2Element&, const G2Element&) = default;
    friend auto operator<=>(const G2Element&, const G2Element&) = default;
};

/// Both elements must have nonzero a; throws InputError otherwise.
G1Element make_g1(const Scalar& a, const Scalar& b);
G2Element make_g2(const Scalar& a, const Scalar& b, const Scalar& c);

/// g h g^-1 h^-1.
G1Element commutator(const G1Element& g, const G1Element& h);
G2Element commutator(const G2Element& g, const G2Element& h);

/// sigma: the matrix goes to its top-left nontrivial entry a.
Scalar abelianization(const G1Element& g);
Scalar abelianization(const G2Element& g);

bool kernel_membership(const G1Element& g);
bool kernel_membership(const G2Element& g);

/// (g, h) with commutator(g, h) == k. Throws InputError unless k lies in the kernel.
std::pair<G1Element, G1Element> commutator_witness(const G1Element& k);
std::pair<G2Element, G2Element> commutator_witness(const G2Element& k);

/// Conjugation of a kernel element by any group element with sigma = a.
/// G1: s -> s/a. G2: (s, t) -> (s/a, t/a^2). Throws InputError if a = 0 or k is not in the kernel.
G1Element conjugation_action(const Scalar& a, const G1Element& k);
G2Element conjugation_action(const Scalar& a, const G2Element& k);

/// The formal Z x G factor of a derived Picard group; nothing about it is computed.
struct DPicDescriptor
{
    GroupId group;
    [[nodiscard]] std::string render() const;
};

struct SymbolicCheck
{
    std::string name;
    bool symbolic = false;
    bool random_points = false;
    std::size_t points = 0;
    std::string detail;

    [[nodiscard]] bool pass() const { return symbolic && random_points; }
};

/// Closure, inverse, homomorphism, commutator witness and conjugation identities for both
/// families, each as a canonical polynomial identity and at random rational points.
std::vector<SymbolicCheck> picard_symbolic_checks(std::uint64_t seed = 0, std::size_t points = 20);

struct SubgroupCensus
{
    std::uint64_t p = 0;
    GroupId group = GroupId::G1;
    /// Every subgroup of the commutator subgroup, each as a sorted list of matrices.
    std::size_t subgroups_examined = 0;
    /// The ones stable under conjugation by every a in F_p^x.
    std::vector<std::vector<Matrix>> invariant;
    /// For G2: the four subgroups trivial, {(0,t)}, {(t,t^2)}, whole all appear in the census.
    std::optional<bool> listed_subgroups_present;

    [[nodiscard]] std::size_t count() const { return invariant.size(); }
};

/// Throws InputError unless p is a prime >= 5.
SubgroupCensus invariant_subgroup_census(GroupId group, std::uint64_t p);

struct CommutatorSubgroupCheck
{
    GroupId group;
    std::uint64_t p = 0;
    std::size_t group_order = 0;
    std::size_t commutator_order = 0;
    bool equals_kernel = false;
};

/// Closes all pairwise commutators over F_p and compares with ker sigma.
CommutatorSubgroupCheck brute_force_commutator_subgroup(GroupId group, std::uint64_t p);

/// "not isomorphic" if the census counts differ, "indistinguishable by this invariant" otherwise.
std::string compare_groups(GroupId x, GroupId y, std::uint64_t p);

struct NonIsomorphismCertificate
{
    std::uint64_t p = 0;
    std::vector<SymbolicCheck> symbolic_checks;
    std::vector<CommutatorSubgroupCheck> commutator_checks;
    SubgroupCensus g1;
    SubgroupCensus g2;
    std::string comparison;
    std::vector<std::string> cited_inputs;
    std::vector<std::string> characteristic_zero_facts;
    std::vector<std::string> finite_field_facts;
    std::optional<std::string> failure;

    [[nodiscard]] bool verified() const { return !failure.has_value(); }
    [[nodiscard]] std::string verdict() const;
};

NonIsomorphismCertificate non_isomorphism_certificate(std::uint64_t p, std::uint64_t seed = 0);

} // namespace dgfree
