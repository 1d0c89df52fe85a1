#include "dgfree/io.hpp"

#include <filesystem>
#include <fstream>

#include "dgfree/errors.hpp"

namespace dgfree
{

namespace fs = std::filesystem;

DgFreeAlgebra AlgebraSource::build() const
{
    return DgFreeAlgebra(tuple, name, symbol);
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

namespace
{

const Json& require_key(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::size_t require_count(const Json& j, const char* key)
{
    const Json& v = require_key(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InputError(std::string("'") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

Scalar parse_entry(const Json& v, Field f)
{
    if (v.is_number_integer())
        return f.from_int(v.get<long long>());
    if (v.is_string())
        return f.parse(v.get<std::string>());
    throw InputError("matrix entries must be integers or \"p/q\" strings, got " + v.dump());
}

Json matrix_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json scalars_json(const DenseVector& v)
{
    Json out = Json::array();
    for (const auto& s : v)
        out.push_back(s.to_string());
    return out;
}

fs::path resolve_relative(const std::string& ref, const fs::path& base)
{
    fs::path p(ref);
    if (p.is_relative() && !base.empty() && fs::exists(base / p))
        return base / p;
    return p;
}

AlgebraSource load_algebra_from(const std::string& ref, const fs::path& base)
{
    if (auto preset = algebra_preset(ref))
        return {preset->name(), preset->tuple(), preset->symbol()};
    const fs::path path = resolve_relative(ref, base);
    const Json j = read_json_file(path.string());
    AlgebraSource src{path.stem().string(), parse_tuple(j), 'x'};
    if (j.contains("symbol")) {
        const auto s = j.at("symbol");
        if (!s.is_string() || s.get<std::string>().size() != 1)
            throw InputError("'symbol' must be a single character");
        src.symbol = s.get<std::string>()[0];
    }
    return src;
}

std::string element_coordinates(const Matrix& m)
{
    std::string s = "(" + m.at(0, 0).to_string() + ", " + m.at(0, 1).to_string();
    if (m.rows() == 3)
        s += ", " + m.at(0, 2).to_string();
    return s + ")";
}

} // namespace

Field parse_field(const Json& j)
{
    const std::string kind = require_key(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (kind == "rational")
        return Field::rationals();
    if (kind == "prime") {
        const Json& p = require_key(j, "p");
        if (!p.is_number_integer() || p.get<long long>() < 0)
            throw InputError("field 'p' must be a positive integer");
        return Field::prime(p.get<std::uint64_t>());
    }
    throw InputError("field kind must be \"rational\" or \"prime\"");
}

CrisscrossTuple parse_tuple(const Json& j)
{
    if (!j.is_object())
        throw InputError("algebra definition must be a JSON object");
    const Field f = parse_field(require_key(j, "field"));
    const std::size_t n = require_count(j, "generators");
    if (n == 0)
        throw InputError("an algebra needs at least one generator");
    const Json& ms = require_key(j, "matrices");
    if (!ms.is_array() || ms.size() != n)
        throw InputError("'matrices' must be an array of " + std::to_string(n) + " matrices");
    CrisscrossTuple t{f, n, {}};
    for (std::size_t i = 0; i < n; ++i) {
        const Json& m = ms[i];
        if (!m.is_array() || m.size() != n)
            throw InputError("matrix " + std::to_string(i + 1) + " must have " + std::to_string(n) + " rows");
        Matrix out(f, n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!m[r].is_array() || m[r].size() != n)
                throw InputError("matrix " + std::to_string(i + 1) + " row " + std::to_string(r + 1) + " must have " +
                                 std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c)
                out.set(r, c, parse_entry(m[r][c], f));
        }
        t.matrices.push_back(std::move(out));
    }
    t.validate();
    return t;
}

AlgebraSource load_algebra(const std::string& preset_or_path)
{
    return load_algebra_from(preset_or_path, {});
}

ConnectionData load_module(const std::string& preset_or_path, const DgFreeAlgebra& expected)
{
    if (auto preset = module_preset(preset_or_path)) {
        if (!(preset->algebra() == expected))
            throw InputError("module " + preset_or_path + " is defined over " + preset->algebra().name() +
                             ", not over the given algebra");
        return preset->data();
    }
    const fs::path path(preset_or_path);
    const Json j = read_json_file(path.string());
    const Json& alg = require_key(j, "algebra");
    if (!alg.is_string())
        throw InputError("module 'algebra' must be a preset name or a path");
    const AlgebraSource src = load_algebra_from(alg.get<std::string>(), path.parent_path());
    if (!(src.tuple == expected.tuple()))
        throw InputError("module algebra '" + alg.get<std::string>() + "' does not match the given algebra");

    const std::size_t m = require_count(j, "rank");
    const Json& labels = require_key(j, "labels");
    const Json& conn = require_key(j, "connection");
    if (!labels.is_array() || labels.size() != m)
        throw InputError("'labels' must list " + std::to_string(m) + " names");
    if (!conn.is_array() || conn.size() != m)
        throw InputError("'connection' must have " + std::to_string(m) + " rows");

    ConnectionData data{expected, {}, {}};
    for (const auto& l : labels) {
        if (!l.is_string())
            throw InputError("labels must be strings");
        data.labels.push_back(l.get<std::string>());
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!conn[i].is_array() || conn[i].size() != m)
            throw InputError("connection row " + std::to_string(i + 1) + " must have " + std::to_string(m) +
                             " entries");
        std::vector<GradedElement> row;
        for (const auto& e : conn[i]) {
            if (!e.is_string())
                throw InputError("connection entries must be element strings such as \"x1*x3\"");
            row.push_back(expected.parse(e.get<std::string>()));
        }
        data.connection.push_back(std::move(row));
    }
    data.validate_shape();
    return data;
}

RingPresentation load_presentation(const std::string& preset_or_path, const DgFreeAlgebra& a)
{
    if (auto preset = presentation_preset(preset_or_path))
        return *preset;
    const Json j = read_json_file(preset_or_path);
    RingPresentation p;
    std::map<std::string, std::size_t> index;
    const Json& gens = require_key(j, "generators");
    if (!gens.is_array() || gens.empty())
        throw InputError("'generators' must be a nonempty array");
    for (const auto& g : gens) {
        const Json& name = require_key(g, "name");
        const Json& rep = require_key(g, "representative");
        if (!name.is_string() || !rep.is_string())
            throw InputError("generator name and representative must be strings");
        const std::size_t degree = require_count(g, "degree");
        if (!index.emplace(name.get<std::string>(), p.generators.size()).second)
            throw InputError("duplicate generator '" + name.get<std::string>() + "'");
        p.generators.push_back({name.get<std::string>(), degree, a.parse(rep.get<std::string>())});
    }
    auto lookup = [&](const Json& v) {
        if (!v.is_string() || !index.count(v.get<std::string>()))
            throw InputError("unknown generator " + v.dump());
        return index.at(v.get<std::string>());
    };
    if (j.contains("relations")) {
        for (const auto& r : j.at("relations")) {
            if (!r.is_array() || r.empty())
                throw InputError("each relation must be a nonempty list of generator names");
            RingPresentation::Relation rel;
            for (const auto& g : r)
                rel.word.push_back(lookup(g));
            p.relations.push_back(std::move(rel));
        }
    }
    if (j.contains("commutations")) {
        for (const auto& c : j.at("commutations")) {
            RingPresentation::Commutation com{lookup(require_key(c, "first")), lookup(require_key(c, "second")),
                                              std::nullopt};
            if (c.contains("witness")) {
                if (!c.at("witness").is_string())
                    throw InputError("witness must be an element string");
                com.witness = a.parse(c.at("witness").get<std::string>());
            }
            p.commutations.push_back(std::move(com));
        }
    }
    return p;
}

Json crisscross_report(const AlgebraSource& src)
{
    const auto cc = crisscross_check(src.tuple);
    const auto d2 = d_squared_on_generators(src.tuple);
    Json r;
    r["command"] = "check-crisscross";
    r["algebra"] = src.name;
    r["field"] = src.tuple.field.name();
    r["generators"] = src.tuple.n;
    r["crisscross"] = cc.crisscross;
    r["d_squared_zero"] = d2.zero;
    if (cc.witness) {
        r["witness"] = {{"i", cc.witness->i}, {"j", cc.witness->j}, {"sum", matrix_json(cc.witness->sum)}};
    } else {
        r["witness"] = nullptr;
    }
    if (d2.witness) {
        r["d_squared_witness"] = {{"generator", *d2.generator}, {"value", d2.witness->to_string(src.symbol)}};
    } else {
        r["d_squared_witness"] = nullptr;
    }
    return r;
}

Json cohomology_report(const CohomologyEngine& engine, const std::optional<PresentationReport>& presentation)
{
    const auto& a = engine.algebra();
    Json r;
    r["command"] = "cohomology";
    r["algebra"] = a.name();
    r["field"] = a.field().name();
    r["max_degree"] = engine.max_degree();
    Json degrees = Json::array();
    for (std::size_t d = 0; d <= engine.max_degree(); ++d) {
        const auto& data = engine.degree(d);
        Json basis = Json::array();
        for (const auto& c : data.basis)
            basis.push_back(a.render(c.representative));
        degrees.push_back({{"d", d},
                           {"dim", data.dim()},
                           {"words", data.words},
                           {"nullity", data.nullity},
                           {"rank_in", data.rank_in},
                           {"basis", std::move(basis)}});
    }
    r["degrees"] = std::move(degrees);
    if (presentation) {
        Json checks = Json::array();
        for (const auto& c : presentation->checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        r["presentation_checks"] = std::move(checks);
        r["presentation_verified"] = presentation->all_pass();
    }
    return r;
}

Json maurer_cartan_json(const MaurerCartanVerdict& v, const DgFreeAlgebra& a)
{
    Json j;
    j["holds"] = v.holds;
    if (v.entry) {
        j["entry"] = {v.entry->first, v.entry->second};
        j["residual"] = a.render(*v.residual);
    } else {
        j["entry"] = nullptr;
        j["residual"] = nullptr;
    }
    return j;
}

Json resolution_report(const SemifreeModule& f, const KoszulCertificate& cert)
{
    Json r;
    r["command"] = "resolution";
    r["algebra"] = f.algebra().name();
    r["module"] = f.name();
    r["rank"] = f.rank();
    r["labels"] = f.labels();
    Json conn = Json::array();
    for (std::size_t i = 0; i < f.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < f.rank(); ++j)
            row.push_back(f.algebra().render(f.connection(i, j)));
        conn.push_back(std::move(row));
    }
    r["connection"] = std::move(conn);
    r["maurer_cartan"] = maurer_cartan_json(maurer_cartan_check(f), f.algebra());
    r["minimal"] = cert.minimal;
    r["homology"] = cert.homology;
    r["koszul"] = {{"issued", cert.issued},
                   {"verified_degree", cert.verified_degree},
                   {"refusal", cert.refusal ? Json(*cert.refusal) : Json(nullptr)}};
    return r;
}

Json ext_report(const ExtAnalysis& x)
{
    Json r;
    r["ext_dim"] = x.commutant.dim();
    r["constraints"] = x.commutant.constraints();
    Json basis = Json::array();
    for (const auto& m : ext_basis_matrices(x.commutant))
        basis.push_back(matrix_json(m));
    r["basis"] = std::move(basis);
    r["relations"] = x.algebra.relations();
    r["commutative"] = x.commutative;
    r["local"] = x.local;
    if (x.recognized) {
        r["recognized"] = "k[X]/(X^" + std::to_string(x.recognized->order) + ")";
        r["generator"] = x.algebra.render(x.recognized->generator);
    } else {
        r["recognized"] = nullptr;
        r["generator"] = nullptr;
    }
    Json frob;
    frob["found"] = x.frobenius.has_value();
    if (x.frobenius) {
        frob["symmetric"] = x.frobenius->symmetric;
        frob["functional"] = scalars_json(x.frobenius->functional);
        frob["attempts"] = x.frobenius->attempts;
    }
    r["frobenius"] = std::move(frob);
    return r;
}

AutReport aut_report(const StructureConstantAlgebra& a, std::uint64_t p)
{
    AutReport out;
    Json& r = out.json;
    r["dim"] = a.dim();
    std::optional<ParametrizedFamily> fam;
    if (a.field().is_rational() && a.dim() == 3 && a == StructureConstantAlgebra::truncated_polynomial(a.field(), 3))
        fam = family_e1();
    if (a.field().is_rational() && a.dim() == 4 && a == StructureConstantAlgebra::truncated_polynomial(a.field(), 4))
        fam = family_e2();

    bool family_ok = false;
    bool closure_ok = false;
    if (fam) {
        const auto mv = family_membership_check(*fam, a);
        const auto cv = family_closure_check(*fam);
        family_ok = mv.holds;
        closure_ok = cv.holds;
        r["family"] = fam->name;
        r["family_matrix"] = to_string(fam->matrix);
        r["family_verified"] = mv.holds;
        r["determinant"] = mv.determinant->to_string();
        if (mv.failing_equation) {
            r["failing_equation"] = *mv.equation_label;
            r["residual"] = mv.residual->to_string();
        }
        r["closure_verified"] = cv.holds;
        Json prod;
        for (const auto& [k, v] : cv.product_parameters)
            prod[k] = v.to_string();
        Json inv;
        for (const auto& [k, v] : cv.inverse_parameters)
            inv[k] = v.to_string();
        r["product_parameters"] = std::move(prod);
        r["inverse_parameters"] = std::move(inv);
        if (cv.failure)
            r["closure_failure"] = *cv.failure;
    } else {
        r["family"] = nullptr;
    }

    const Field fp = Field::prime(p);
    const auto reduced = a.field().is_rational() ? a.reduce(fp) : a;
    if (reduced.field() != fp)
        throw InputError("algebra is defined over " + a.field().name() + ", not " + fp.name());
    const auto bf = brute_force_aut(reduced);
    bool matches = false;
    if (fam) {
        const auto inst = instantiate_family(*fam, fp);
        matches = inst.size() == bf.automorphisms.size();
        for (std::size_t k = 0; matches && k < inst.size(); ++k)
            matches = matrix_key(inst[k]) == matrix_key(bf.automorphisms[k]);
    }
    Json b;
    b["p"] = p;
    b["free_unknowns"] = bf.free_unknowns;
    b["search_space"] = bf.search_space;
    b["count"] = bf.automorphisms.size();
    b["group_axioms"] = bf.group_axioms;
    b["matches_family"] = fam ? Json(matches) : Json(nullptr);
    r["brute_force"] = std::move(b);
    out.verified = bf.group_axioms && (!fam || (family_ok && closure_ok && matches));
    return out;
}

Json certificate_report(const NonIsomorphismCertificate& cert)
{
    Json r;
    r["command"] = "dpic-compare";
    Json checks = Json::array();
    for (const auto& c : cert.symbolic_checks) {
        Json jc{{"name", c.name},
                {"pass", c.pass()},
                {"symbolic", c.symbolic},
                {"random_points", c.random_points},
                {"points", c.points}};
        if (!c.detail.empty())
            jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    r["symbolic_checks"] = std::move(checks);
    Json comm = Json::array();
    for (const auto& c : cert.commutator_checks)
        comm.push_back({{"group", to_string(c.group)},
                        {"order", c.group_order},
                        {"commutator_order", c.commutator_order},
                        {"equals_kernel", c.equals_kernel}});
    r["commutator_subgroups"] = std::move(comm);
    auto subgroups = [](const SubgroupCensus& s) {
        Json out = Json::array();
        for (const auto& sub : s.invariant) {
            Json elems = Json::array();
            for (const auto& m : sub)
                elems.push_back(element_coordinates(m));
            out.push_back(std::move(elems));
        }
        return out;
    };
    r["census"] = {{"p", cert.p},
                   {"g1", cert.g1.count()},
                   {"g2", cert.g2.count()},
                   {"g1_subgroups_examined", cert.g1.subgroups_examined},
                   {"g2_subgroups_examined", cert.g2.subgroups_examined},
                   {"g2_listed_subgroups_present", cert.g2.listed_subgroups_present.value_or(false)},
                   {"g1_invariant", subgroups(cert.g1)},
                   {"g2_invariant", subgroups(cert.g2)}};
    r["characteristic_zero_facts"] = cert.characteristic_zero_facts;
    r["finite_field_facts"] = cert.finite_field_facts;
    r["comparison"] = cert.comparison;
    r["verdict"] = cert.verdict();
    r["failure"] = cert.failure ? Json(*cert.failure) : Json(nullptr);
    r["cited_inputs"] = cert.cited_inputs;
    return r;
}

} // namespace dgfree
