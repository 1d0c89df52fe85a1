#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgfree/dg_algebra.hpp"

namespace dgfree
{

using ConnectionMatrix = std::vector<std::vector<GradedElement>>;

/// Unvalidated module data: a semibasis concentrated in degree 0 and a connection matrix D,
/// with d(b_i) = sum_j D_ij b_j.
struct ConnectionData
{
    DgFreeAlgebra algebra;
    std::vector<std::string> labels;
    ConnectionMatrix connection;

    [[nodiscard]] std::size_t rank() const noexcept { return labels.size(); }
    /// Throws InputError unless D is m x m over the algebra with entries zero or homogeneous of degree 1.
    void validate_shape() const;
    [[nodiscard]] bool strictly_lower_triangular() const;
};

struct MaurerCartanVerdict
{
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> entry; // 1-based (i, j)
    std::optional<GradedElement> residual;                   // d(D_ij) - sum_k D_ik D_kj
};

/// Exact check of d(D_ij) = sum_k D_ik D_kj for all i, j, in row-major order.
MaurerCartanVerdict maurer_cartan_check(const ConnectionData& data);

/// A module element sum_i a_i b_i, stored as its coordinates a_i.
struct ModuleElement
{
    std::vector<GradedElement> coordinates;

    [[nodiscard]] bool is_zero() const;
    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

/// A semi-free DG module whose connection is strictly lower triangular and satisfies Maurer-Cartan.
class SemifreeModule
{
public:
    /// Throws InputError if any invariant fails.
    static SemifreeModule create(ConnectionData data, std::string name = "");

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const DgFreeAlgebra& algebra() const noexcept { return data_.algebra; }
    [[nodiscard]] const ConnectionData& data() const noexcept { return data_; }
    [[nodiscard]] std::size_t rank() const noexcept { return data_.rank(); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return data_.labels; }
    /// 0-based.
    [[nodiscard]] const GradedElement& connection(std::size_t i, std::size_t j) const
    {
        return data_.connection.at(i).at(j);
    }

    /// The basis element b_i (0-based).
    [[nodiscard]] ModuleElement basis_element(std::size_t i) const;
    [[nodiscard]] ModuleElement zero() const;

    /// d(sum a_i b_i) = sum_i d(a_i) b_i + (-1)^{|a_i|} a_i sum_j D_ij b_j.
    [[nodiscard]] ModuleElement differential(const ModuleElement& e) const;

    /// Degree-d coordinates index label * n^d + word index.
    [[nodiscard]] SparseVector boundary_column(std::size_t d, std::size_t index) const;

    [[nodiscard]] std::string render(const ModuleElement& e) const;

private:
    SemifreeModule(ConnectionData data, std::string name) : data_(std::move(data)), name_(std::move(name)) {}

    ConnectionData data_;
    std::string name_;
};

MaurerCartanVerdict maurer_cartan_check(const SemifreeModule& f);

/// True iff every connection entry has zero constant term.
bool minimality_check(const ConnectionData& data);
bool minimality_check(const SemifreeModule& f);

/// dim H^d(F) for 0 <= d <= max_degree.
std::vector<std::size_t> homology_dims(const SemifreeModule& f, std::size_t max_degree);

struct KoszulCertificate
{
    bool issued = false;
    std::size_t rank = 0;
    std::vector<std::string> labels;
    std::size_t verified_degree = 0;
    std::vector<std::size_t> homology;
    bool minimal = false;
    std::optional<std::string> refusal; // name of the failing check
};

/// Issued iff F is minimal and H(F) = k up to max_degree.
KoszulCertificate koszul_certificate(const SemifreeModule& f, std::size_t max_degree);

/// Resolution of k over A1 with semibasis {1, Se_x3, Se_z}.
SemifreeModule preset_f1();
/// Resolution of k over A2 with semibasis {1, Se_y3, Se_z, Se_r}.
SemifreeModule preset_f2();
/// "f1" or "f2"; nullopt otherwise.
std::optional<SemifreeModule> module_preset(const std::string& name);

} // namespace dgfree
