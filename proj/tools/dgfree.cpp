#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dgfree/errors.hpp"
#include "dgfree/io.hpp"

namespace
{

using namespace dgfree;

constexpr int kVerified = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

constexpr std::size_t kDefaultCap = 9;
constexpr std::size_t kHardCap = 10;

struct Options
{
    std::string output;
    std::uint64_t seed = 0;
    std::string algebra;
    std::string module;
    std::size_t max_degree = 6;
    std::string presentation;
    bool aut = false;
    std::uint64_t prime = 5;
};

std::size_t degree_cap()
{
    const char* env = std::getenv("DGFREE_MAX_DEGREE");
    if (env == nullptr || *env == '\0')
        return kDefaultCap;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(env, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || env[pos] != '\0' || v < kDefaultCap || v > kHardCap)
        throw InputError("DGFREE_MAX_DEGREE must be " + std::to_string(kDefaultCap) + " or " +
                         std::to_string(kHardCap));
    return v;
}

void check_degree(std::size_t n)
{
    const std::size_t cap = degree_cap();
    if (n > cap)
        throw InputError("--max-degree " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                         (cap < kHardCap ? " (set DGFREE_MAX_DEGREE=10 to raise it)" : ""));
}

void emit(const Json& report, const std::string& output)
{
    const std::string text = report.dump(2) + "\n";
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out)
        throw InputError("cannot write '" + output + "'");
    out << text;
}

std::string module_name(const std::string& ref)
{
    if (module_preset(ref))
        return ref;
    return std::filesystem::path(ref).stem().string();
}

// Loads a module and checks it; a failing report is stored in `failure`.
std::optional<SemifreeModule> open_module(const Options& o, const DgFreeAlgebra& a, const char* command,
                                          Json& failure)
{
    ConnectionData data = load_module(o.module, a);
    const auto mc = maurer_cartan_check(data);
    const bool triangular = data.strictly_lower_triangular();
    if (mc.holds && triangular)
        return SemifreeModule::create(std::move(data), module_name(o.module));
    failure["command"] = command;
    failure["algebra"] = a.name();
    failure["module"] = module_name(o.module);
    failure["maurer_cartan"] = maurer_cartan_json(mc, a);
    failure["strictly_lower_triangular"] = triangular;
    failure["verified"] = false;
    return std::nullopt;
}

int run_check_crisscross(const Options& o)
{
    const AlgebraSource src = load_algebra(o.algebra);
    Json r = crisscross_report(src);
    const bool ok = r["crisscross"].get<bool>() && r["d_squared_zero"].get<bool>();
    emit(r, o.output);
    return ok ? kVerified : kFailed;
}

int run_cohomology(const Options& o)
{
    check_degree(o.max_degree);
    const DgFreeAlgebra a = load_algebra(o.algebra).build();
    const CohomologyEngine engine(a, o.max_degree);
    std::optional<PresentationReport> pres;
    if (!o.presentation.empty())
        pres = ring_presentation_check(engine, load_presentation(o.presentation, a), o.max_degree);
    emit(cohomology_report(engine, pres), o.output);
    return !pres || pres->all_pass() ? kVerified : kFailed;
}

int run_resolution(const Options& o)
{
    check_degree(o.max_degree);
    const DgFreeAlgebra a = load_algebra(o.algebra).build();
    Json failure;
    const auto f = open_module(o, a, "resolution", failure);
    if (!f) {
        emit(failure, o.output);
        return kFailed;
    }
    const auto cert = koszul_certificate(*f, o.max_degree);
    Json r = resolution_report(*f, cert);
    r["verified"] = cert.issued;
    emit(r, o.output);
    return cert.issued ? kVerified : kFailed;
}

int run_ext(const Options& o)
{
    const DgFreeAlgebra a = load_algebra(o.algebra).build();
    if (o.aut)
        Field::prime(o.prime);
    Json failure;
    const auto f = open_module(o, a, "ext", failure);
    if (!f) {
        emit(failure, o.output);
        return kFailed;
    }
    const ExtAnalysis x = analyze_ext(*f, o.seed);
    Json r;
    r["command"] = "ext";
    r["algebra"] = a.name();
    r["module"] = f->name();
    const Json body = ext_report(x);
    for (const auto& [k, v] : body.items())
        r[k] = v;
    bool ok = x.recognized.has_value() && x.frobenius.has_value();
    if (o.aut) {
        const auto aut = aut_report(x.power_algebra ? *x.power_algebra : x.algebra, o.prime);
        r["aut"] = aut.json;
        ok = ok && aut.verified;
    }
    r["verified"] = ok;
    emit(r, o.output);
    return ok ? kVerified : kFailed;
}

int run_dpic_compare(const Options& o)
{
    Field::prime(o.prime);
    const auto cert = non_isomorphism_certificate(o.prime, o.seed);
    emit(certificate_report(cert), o.output);
    return cert.verified() ? kVerified : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with DG free algebras, their resolutions, Ext-algebras and automorphisms"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--output,-o", o.output, "Write the JSON report here instead of stdout");
    app.add_option("--seed", o.seed, "Seed for every randomized search");

    auto* cc = app.add_subcommand("check-crisscross", "Check the crisscross condition and d^2 = 0 on generators");
    cc->add_option("algebra", o.algebra, "Preset (a1, a2) or algebra JSON file")->required();

    auto* coh = app.add_subcommand("cohomology", "Cohomology dimensions and class representatives");
    coh->add_option("algebra", o.algebra, "Preset (a1, a2) or algebra JSON file")->required();
    coh->add_option("--max-degree", o.max_degree, "Highest degree computed")->capture_default_str();
    coh->add_option("--verify-presentation", o.presentation, "Preset (a1, a2) or presentation JSON file");

    auto* res = app.add_subcommand("resolution", "Maurer-Cartan, minimality, H(F) and the Koszul certificate");
    res->add_option("algebra", o.algebra, "Preset (a1, a2) or algebra JSON file")->required();
    res->add_option("--module", o.module, "Preset (f1, f2) or module JSON file")->required();
    res->add_option("--max-degree", o.max_degree, "Highest degree of H(F) computed")->capture_default_str();

    auto* ext = app.add_subcommand("ext", "Ext-algebra, truncated polynomial recognition and Frobenius form");
    ext->add_option("algebra", o.algebra, "Preset (a1, a2) or algebra JSON file")->required();
    ext->add_option("--module", o.module, "Preset (f1, f2) or module JSON file")->required();
    ext->add_flag("--aut", o.aut, "Also verify the automorphism group");
    ext->add_option("--prime", o.prime, "Prime for the brute-force automorphism count")->capture_default_str();

    auto* dpic = app.add_subcommand("dpic-compare", "Invariant-subgroup certificate separating G1 and G2");
    dpic->add_option("--prime", o.prime, "Prime for the finite census, at least 5")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (cc->parsed())
            return run_check_crisscross(o);
        if (coh->parsed())
            return run_cohomology(o);
        if (res->parsed())
            return run_resolution(o);
        if (ext->parsed())
            return run_ext(o);
        return run_dpic_compare(o);
    } catch (const InputError& e) {
        std::cerr << "dgfree: error: " << e.what() << "\n";
        return kInputError;
    } catch (const NotApplicableError& e) {
        std::cerr << "dgfree: not applicable: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "dgfree: internal error: " << e.what() << "\n";
        return kFailed;
    }
}
