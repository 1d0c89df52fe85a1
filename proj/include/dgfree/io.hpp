#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "dgfree/aut_group.hpp"
#include "dgfree/cohomology.hpp"
#include "dgfree/dg_algebra.hpp"
#include "dgfree/ext_algebra.hpp"
#include "dgfree/picard.hpp"
#include "dgfree/semifree.hpp"

namespace dgfree
{

/// Reports keep keys in insertion order.
using Json = nlohmann::ordered_json;

/// An algebra as read from a preset or file: the tuple is not yet known to be crisscross.
struct AlgebraSource
{
    std::string name;
    CrisscrossTuple tuple;
    char symbol = 'x';

    /// Throws InputError if the tuple is not crisscross.
    [[nodiscard]] DgFreeAlgebra build() const;
};

/// Reads and parses a JSON file; InputError on I/O or syntax errors.
Json read_json_file(const std::string& path);

/// {"field": {"kind": "rational"} | {"kind": "prime", "p": 5}, "generators": n, "matrices": [...]},
/// entries integers or "p/q" strings.
CrisscrossTuple parse_tuple(const Json& j);
Field parse_field(const Json& j);

/// Preset name ("a1", "a2") or path to an algebra file.
AlgebraSource load_algebra(const std::string& preset_or_path);

/// Preset name ("f1", "f2") or path to a module file
/// {"algebra": "a1" | path, "rank": m, "labels": [...], "connection": [[element strings]]}.
/// A relative algebra path is resolved against the module file's directory first.
/// The module's algebra must equal `expected`; InputError otherwise. Shape is validated,
/// Maurer-Cartan is not.
ConnectionData load_module(const std::string& preset_or_path, const DgFreeAlgebra& expected);

/// Preset name ("a1", "a2") or path to a presentation file
/// {"generators": [{"name", "degree", "representative"}], "relations": [["u1", "u1"]],
///  "commutations": [{"first", "second", "witness"?}]}.
RingPresentation load_presentation(const std::string& preset_or_path, const DgFreeAlgebra& a);

Json crisscross_report(const AlgebraSource& src);
Json cohomology_report(const CohomologyEngine& engine, const std::optional<PresentationReport>& presentation);
Json maurer_cartan_json(const MaurerCartanVerdict& v, const DgFreeAlgebra& a);
Json resolution_report(const SemifreeModule& f, const KoszulCertificate& cert);
Json ext_report(const ExtAnalysis& x);

struct AutReport
{
    Json json;
    bool verified = false;
};

/// Family membership and closure (when a family of matching dimension exists) plus brute force over F_p.
AutReport aut_report(const StructureConstantAlgebra& a, std::uint64_t p);

Json certificate_report(const NonIsomorphismCertificate& cert);

} // namespace dgfree
