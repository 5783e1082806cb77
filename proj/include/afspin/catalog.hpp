#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "afspin/holonomy.hpp"
#include "afspin/lift.hpp"
#include "afspin/sylow.hpp"

namespace afspin {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr int catalog_format_version = 1;

struct CatalogFile {
    int format_version = catalog_format_version;
    std::string description;
    std::vector<AlmostBieberbachRecord> records;

    const AlmostBieberbachRecord& find(const std::string& family) const
    {
        for (const auto& r : records)
            if (r.family == family)
                return r;
        throw NotFound("family '" + family + "' is not in the catalog");
    }
};

struct ExpectationRow {
    std::string family;
    std::string holonomy_group;
    std::vector<long> params;
    long count = 0;
};

struct ExpectationsFile {
    int format_version = catalog_format_version;
    std::string description;
    std::vector<ExpectationRow> rows;
};

/// Table-1 ordering: numbered families before the B-series, then by number, then by suffix.
inline std::tuple<int, long, std::string> family_key(const std::string& family)
{
    std::size_t i = 0;
    int series = 0;
    while (i < family.size() && std::isalpha(static_cast<unsigned char>(family[i]))) {
        series = 1;
        ++i;
    }
    std::size_t j = i;
    while (j < family.size() && std::isdigit(static_cast<unsigned char>(family[j])))
        ++j;
    long number = j > i ? std::stol(family.substr(i, j - i)) : 0;
    return {series, number, family.substr(0, i) + family.substr(j)};
}

inline bool family_less(const std::string& a, const std::string& b) { return family_key(a) < family_key(b); }

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Json parse_json_text(const std::string& text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(origin + ": " + line_col(text, e.byte) + ": malformed JSON");
    }
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Field-path aware accessors that raise SchemaError.
struct Schema {
    static void expect(bool ok, const std::string& path, const std::string& what)
    {
        if (!ok)
            throw SchemaError(path + ": " + what);
    }

    static void known_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys)
    {
        expect(j.is_object(), path, "expected an object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            bool found = false;
            for (const char* k : keys)
                found = found || it.key() == k;
            expect(found, path + "." + it.key(), "unknown field");
        }
    }

    static const Json& field(const Json& j, const std::string& path, const char* key)
    {
        expect(j.contains(key), path + "." + key, "missing required field");
        return j.at(key);
    }

    static std::string string(const Json& j, const std::string& path)
    {
        expect(j.is_string(), path, "expected a string");
        return j.get<std::string>();
    }

    static long integer(const Json& j, const std::string& path)
    {
        expect(j.is_number_integer(), path, "expected an integer");
        return j.get<long>();
    }

    static const Json& array(const Json& j, const std::string& path)
    {
        expect(j.is_array(), path, "expected an array");
        return j;
    }

    static int version(const Json& top, const std::string& origin)
    {
        long v = integer(field(top, origin, "format_version"), origin + ".format_version");
        expect(v == catalog_format_version, origin + ".format_version",
               "unsupported version " + std::to_string(v) + ", expected " + std::to_string(catalog_format_version));
        return static_cast<int>(v);
    }
};

inline std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline Word parse_word(const Json& j, const std::string& path, const Presentation& p)
{
    Word w;
    Schema::array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string lp = at(path, i);
        Schema::expect(j[i].is_array() && j[i].size() == 2, lp, "expected a [generator, exponent] pair");
        std::string name = Schema::string(j[i][0], lp + "[0]");
        int g;
        try {
            g = p.index_of(name);
        } catch (const NotFound&) {
            throw SchemaError(lp + "[0]: undeclared generator '" + name + "'");
        }
        ExponentExpr e;
        if (j[i][1].is_number_integer())
            e = ExponentExpr(j[i][1].get<long>());
        else if (j[i][1].is_string()) {
            try {
                e = ExponentExpr::parse(j[i][1].get<std::string>(), p.parameters);
            } catch (const ParseError& err) {
                throw SchemaError(lp + "[1]: " + err.what());
            }
        } else
            throw SchemaError(lp + "[1]: exponent must be an integer or an expression string");
        w.push_back({g, e});
    }
    return w;
}

inline Rational parse_rational(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    Schema::expect(j.is_string(), path, "expected an integer or a \"p/q\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

inline QuadraticEntry parse_entry(const Json& j, const std::string& path)
{
    if (j.is_array()) {
        Schema::expect(j.size() == 2, path, "expected [a, b] for a + b*sqrt(field)");
        return {parse_rational(j[0], path + "[0]"), parse_rational(j[1], path + "[1]")};
    }
    return {parse_rational(j, path), Rational(0)};
}

template <class Entry, class ParseEntry>
std::vector<std::vector<Entry>> parse_square(const Json& j, const std::string& path, int n, ParseEntry parse)
{
    Schema::expect(j.is_array() && static_cast<int>(j.size()) == n, path,
                   "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Entry>> rows;
    for (int r = 0; r < n; ++r) {
        std::string rp = at(path, r);
        Schema::expect(j[r].is_array() && static_cast<int>(j[r].size()) == n, rp,
                       "expected " + std::to_string(n) + " entries");
        std::vector<Entry> row;
        for (int c = 0; c < n; ++c)
            row.push_back(parse(j[r][c], at(rp, c)));
        rows.push_back(row);
    }
    return rows;
}

inline AlmostBieberbachRecord parse_record(const Json& j, const std::string& path)
{
    Schema::known_keys(j, path,
                       {"family", "holonomy_group", "nilpotency_class", "orientable", "source", "dimension",
                        "parameters", "parameter_sets", "generators", "relations", "relators", "holonomy",
                        "orthogonal_holonomy", "sylow_pullback"});
    AlmostBieberbachRecord rec;
    rec.family = Schema::string(Schema::field(j, path, "family"), path + ".family");
    rec.holonomy_group = Schema::string(Schema::field(j, path, "holonomy_group"), path + ".holonomy_group");
    bool known = std::any_of(character_tables().begin(), character_tables().end(),
                             [&](const CharacterTable& t) { return t.group == rec.holonomy_group; });
    Schema::expect(known, path + ".holonomy_group", "unknown holonomy group '" + rec.holonomy_group + "'");
    if (j.contains("nilpotency_class"))
        rec.nilpotency_class = static_cast<int>(Schema::integer(j["nilpotency_class"], path + ".nilpotency_class"));
    if (j.contains("orientable")) {
        Schema::expect(j["orientable"].is_boolean(), path + ".orientable", "expected true or false");
        rec.orientable = j["orientable"].get<bool>();
    }
    if (j.contains("source"))
        rec.source = Schema::string(j["source"], path + ".source");
    if (j.contains("dimension")) {
        rec.dimension = static_cast<int>(Schema::integer(j["dimension"], path + ".dimension"));
        Schema::expect(rec.dimension >= 1 && rec.dimension <= 8, path + ".dimension", "must lie in 1..8");
    }

    Presentation& p = rec.presentation;
    if (j.contains("parameters")) {
        const Json& ps = Schema::array(j["parameters"], path + ".parameters");
        for (std::size_t i = 0; i < ps.size(); ++i)
            p.parameters.push_back(Schema::string(ps[i], at(path + ".parameters", i)));
    }
    const Json& gens = Schema::array(Schema::field(j, path, "generators"), path + ".generators");
    std::set<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string gp = at(path + ".generators", i);
        Schema::known_keys(gens[i], gp, {"name", "role"});
        std::string name = Schema::string(Schema::field(gens[i], gp, "name"), gp + ".name");
        std::string role = Schema::string(Schema::field(gens[i], gp, "role"), gp + ".role");
        Schema::expect(role == "lattice" || role == "holonomy", gp + ".role", "expected \"lattice\" or \"holonomy\"");
        Schema::expect(names.insert(name).second, gp + ".name", "duplicate generator '" + name + "'");
        p.generators.push_back({name, role == "lattice" ? Role::lattice : Role::holonomy});
    }
    if (j.contains("relations")) {
        const Json& rels = Schema::array(j["relations"], path + ".relations");
        for (std::size_t i = 0; i < rels.size(); ++i) {
            std::string rp = at(path + ".relations", i);
            Schema::known_keys(rels[i], rp, {"lhs", "rhs"});
            Word lhs = parse_word(Schema::field(rels[i], rp, "lhs"), rp + ".lhs", p);
            Word rhs = parse_word(Schema::field(rels[i], rp, "rhs"), rp + ".rhs", p);
            Word r = lhs;
            Word ri = inverse(rhs);
            r.insert(r.end(), ri.begin(), ri.end());
            p.relators.push_back(r);
        }
    }
    if (j.contains("relators")) {
        const Json& rels = Schema::array(j["relators"], path + ".relators");
        for (std::size_t i = 0; i < rels.size(); ++i)
            p.relators.push_back(parse_word(rels[i], at(path + ".relators", i), p));
    }
    if (j.contains("parameter_sets")) {
        const Json& sets = Schema::array(j["parameter_sets"], path + ".parameter_sets");
        for (std::size_t i = 0; i < sets.size(); ++i) {
            std::string sp = at(path + ".parameter_sets", i);
            Schema::expect(sets[i].is_array() && sets[i].size() == p.parameters.size(), sp,
                           "expected " + std::to_string(p.parameters.size()) + " integers");
            std::vector<long> v;
            for (std::size_t k = 0; k < sets[i].size(); ++k)
                v.push_back(Schema::integer(sets[i][k], at(sp, k)));
            rec.parameter_sets.push_back(v);
        }
    }
    const Json& hol = j.contains("holonomy") ? j["holonomy"] : Json::object();
    Schema::expect(hol.is_object(), path + ".holonomy", "expected an object keyed by generator name");
    for (auto it = hol.begin(); it != hol.end(); ++it) {
        std::string hp = path + ".holonomy." + it.key();
        int g;
        try {
            g = p.index_of(it.key());
        } catch (const NotFound&) {
            throw SchemaError(hp + ": undeclared generator");
        }
        Schema::expect(p.generators[g].role == Role::holonomy, hp, "lattice generators act trivially");
        auto rows = parse_square<long>(it.value(), hp, rec.dimension,
                                       [](const Json& e, const std::string& ep) { return Schema::integer(e, ep); });
        rec.holonomy[g] = IntMatrix::from_rows(rows);
    }
    for (int g : p.holonomy_generators())
        Schema::expect(rec.holonomy.count(g), path + ".holonomy", "no matrix for holonomy generator '" +
                                                                       p.generators[g].name + "'");
    if (j.contains("orthogonal_holonomy")) {
        std::string op = path + ".orthogonal_holonomy";
        const Json& o = j["orthogonal_holonomy"];
        Schema::known_keys(o, op, {"field", "matrices"});
        OrthogonalForm form;
        form.field = static_cast<int>(Schema::integer(Schema::field(o, op, "field"), op + ".field"));
        Schema::expect(form.field == 2 || form.field == 3, op + ".field", "supported fields are 2 and 3");
        const Json& mats = Schema::field(o, op, "matrices");
        Schema::expect(mats.is_object(), op + ".matrices", "expected an object keyed by generator name");
        for (auto it = mats.begin(); it != mats.end(); ++it) {
            std::string mp = op + ".matrices." + it.key();
            int g;
            try {
                g = p.index_of(it.key());
            } catch (const NotFound&) {
                throw SchemaError(mp + ": undeclared generator");
            }
            form.entries[g] = parse_square<QuadraticEntry>(it.value(), mp, rec.dimension, parse_entry);
        }
        rec.orthogonal = form;
    }
    if (j.contains("sylow_pullback"))
        rec.sylow_pullback =
            std::make_shared<AlmostBieberbachRecord>(parse_record(j["sylow_pullback"], path + ".sylow_pullback"));
    return rec;
}

template <class S>
void check_orthogonal_form(const AlmostBieberbachRecord& rec, const std::vector<std::vector<long>>& param_sets)
{
    const Presentation& p = rec.presentation;
    std::vector<Matrix<S>> theta, nu;
    for (int g : p.holonomy_generators()) {
        Matrix<S> m = rec.orthogonal->template matrix<S>(g, rec.dimension);
        if (!is_orthogonal(m))
            throw InconsistentRecord("orthogonal holonomy of " + p.generators[g].name + " in family " + rec.family +
                                     " is not orthogonal");
        if (!(m.det() == to_field<S>(rec.theta(g)).det()))
            throw InconsistentRecord("orthogonal holonomy of " + p.generators[g].name + " in family " + rec.family +
                                     " has the wrong determinant");
        nu.push_back(m);
        theta.push_back(to_field<S>(rec.theta(g)));
    }
    for (const auto& params : param_sets)
        for (const auto& r : p.evaluated_relators(params)) {
            Matrix<S> m = Matrix<S>::identity(rec.dimension);
            for (const auto& [g, e] : r) {
                if (p.generators[g].role == Role::lattice)
                    continue;
                Matrix<S> x = rec.orthogonal->template matrix<S>(g, rec.dimension);
                if (e < 0)
                    x = x.transpose();
                for (long k = 0; k < (e < 0 ? -e : e); ++k)
                    m = m * x;
            }
            if (!m.is_identity())
                throw InconsistentRecord("relator " + p.word_str(r) + " of family " + rec.family +
                                         " is not the identity under the orthogonal holonomy");
        }
    if (!defines_homomorphism(theta, nu) || !defines_homomorphism(nu, theta))
        throw InconsistentRecord("orthogonal holonomy of family " + rec.family + " is not isomorphic to theta");
    if (!characters_equal(theta, nu))
        throw InconsistentRecord("orthogonal holonomy of family " + rec.family + " has a different character");
}

} // namespace detail

/// Load-time invariants: orientability claim, relators under theta and nu, faithfulness, characters.
inline void validate_record(const AlmostBieberbachRecord& rec)
{
    const Presentation& p = rec.presentation;
    bool orientable = orientability(rec);
    if (rec.orientable != orientable)
        throw InconsistentRecord("family " + rec.family + " is declared " +
                                 (rec.orientable ? "orientable" : "non-orientable") +
                                 " but its holonomy " + (orientable ? "lies" : "does not lie") + " in SL(n, Z)");
    std::vector<std::vector<long>> sets = rec.parameter_sets;
    if (sets.empty())
        sets.push_back(std::vector<long>(p.parameters.size(), 0));
    for (const auto& params : sets)
        for (const auto& r : p.evaluated_relators(params))
            if (!rec.theta(r).is_identity())
                throw InconsistentRecord("relator " + p.word_str(r) + " of family " + rec.family +
                                         " is not the identity under the holonomy matrices");
    matrix_group_closure(rec);
    if (rec.orthogonal) {
        if (rec.orthogonal->field == 3 && !rec.orthogonal->is_rational())
            detail::check_orthogonal_form<QSqrt3>(rec, sets);
        else
            detail::check_orthogonal_form<QSqrt2>(rec, sets);
    }
    if (rec.sylow_pullback)
        validate_record(*rec.sylow_pullback);
}

inline CatalogFile parse_catalog(const std::string& text, const std::string& origin = "catalog")
{
    Json top = detail::parse_json_text(text, origin);
    using detail::Schema;
    Schema::known_keys(top, origin, {"format_version", "description", "records"});
    CatalogFile cat;
    cat.format_version = Schema::version(top, origin);
    if (top.contains("description"))
        cat.description = Schema::string(top["description"], origin + ".description");
    const Json& recs = Schema::array(Schema::field(top, origin, "records"), origin + ".records");
    std::set<std::string> families;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        std::string path = detail::at(origin + ".records", i);
        AlmostBieberbachRecord rec = detail::parse_record(recs[i], path);
        Schema::expect(families.insert(rec.family).second, path + ".family", "duplicate family '" + rec.family + "'");
        validate_record(rec);
        cat.records.push_back(std::move(rec));
    }
    return cat;
}

inline CatalogFile load_catalog(const std::string& path) { return parse_catalog(detail::read_file(path), path); }

inline ExpectationsFile parse_expectations(const std::string& text, const std::string& origin = "expectations")
{
    Json top = detail::parse_json_text(text, origin);
    using detail::Schema;
    Schema::known_keys(top, origin, {"format_version", "description", "rows"});
    ExpectationsFile ex;
    ex.format_version = Schema::version(top, origin);
    if (top.contains("description"))
        ex.description = Schema::string(top["description"], origin + ".description");
    const Json& rows = Schema::array(Schema::field(top, origin, "rows"), origin + ".rows");
    std::set<std::pair<std::string, std::vector<long>>> keys;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string rp = detail::at(origin + ".rows", i);
        Schema::known_keys(rows[i], rp, {"family", "holonomy_group", "params", "count"});
        ExpectationRow row;
        row.family = Schema::string(Schema::field(rows[i], rp, "family"), rp + ".family");
        if (rows[i].contains("holonomy_group"))
            row.holonomy_group = Schema::string(rows[i]["holonomy_group"], rp + ".holonomy_group");
        const Json& ps = Schema::array(Schema::field(rows[i], rp, "params"), rp + ".params");
        for (std::size_t k = 0; k < ps.size(); ++k)
            row.params.push_back(Schema::integer(ps[k], detail::at(rp + ".params", k)));
        row.count = Schema::integer(Schema::field(rows[i], rp, "count"), rp + ".count");
        Schema::expect(row.count >= 0, rp + ".count", "counts are non-negative");
        Schema::expect(keys.insert({row.family, reduce_params_mod2(row.params)}).second, rp,
                       "duplicate row for family " + row.family);
        ex.rows.push_back(std::move(row));
    }
    return ex;
}

inline ExpectationsFile load_expectations(const std::string& path)
{
    return parse_expectations(detail::read_file(path), path);
}

inline std::string default_catalog_path() { return std::string(AFSPIN_DATA_DIR) + "/catalog.json"; }
inline std::string default_expectations_path() { return std::string(AFSPIN_DATA_DIR) + "/table1_expected.json"; }

/// Runs f(i) for i in [0, n) on worker threads; results are written by index so order never changes.
template <class F>
void parallel_for(std::size_t n, F f)
{
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                try {
                    f(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

struct ClassifyRow {
    std::string family;
    std::string holonomy_group;
    std::vector<long> params;
    std::vector<long> params_mod2;
    long count = 0;
    bool exists = false;
    bool parallelizable = false;
    Strategy strategy = Strategy::direct;
};

inline ClassifyRow classify_one(const AlmostBieberbachRecord& rec, const std::vector<long>& params)
{
    if (!rec.orientable)
        throw NonOrientable("family " + rec.family +
                            " is not orientable: its holonomy does not lie in SL(n, Z), so it has no spin structure "
                            "in the oriented sense");
    ClassifyRow row{rec.family, rec.holonomy_group, params, reduce_params_mod2(rec, params)};
    LiftResult r = lift(rec, row.params_mod2);
    row.count = r.count;
    row.exists = r.exists;
    row.parallelizable = r.parallelizable;
    row.strategy = r.strategy;
    return row;
}

/// Rows for one family (or all when `family` is empty) at the given or the catalogued parameters.
inline std::vector<ClassifyRow> classify(const CatalogFile& cat, const std::string& family = "",
                                         const std::vector<long>& params = {}, bool use_params = false)
{
    std::vector<std::pair<const AlmostBieberbachRecord*, std::vector<long>>> jobs;
    for (const auto& rec : cat.records) {
        if (!family.empty() && rec.family != family)
            continue;
        if (use_params)
            jobs.emplace_back(&rec, params);
        else
            for (const auto& p : rec.parameter_sets)
                jobs.emplace_back(&rec, p);
    }
    if (!family.empty() && jobs.empty())
        cat.find(family);
    std::vector<ClassifyRow> rows(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) { rows[i] = classify_one(*jobs[i].first, jobs[i].second); });
    std::sort(rows.begin(), rows.end(), [](const ClassifyRow& a, const ClassifyRow& b) {
        if (a.family != b.family)
            return family_less(a.family, b.family);
        return a.params < b.params;
    });
    return rows;
}

struct ReportRow {
    std::string family;
    std::string holonomy_group;
    std::vector<long> params;
    long expected = 0;
    std::optional<long> computed;
    bool pass = false;
    std::string note;
};

struct Report {
    std::vector<ReportRow> rows;
    long total = 0;
    long failures = 0;
    long zero_rows = 0;
    std::vector<std::string> warnings;
};

/// Recomputes every expectation row; a missing family is a failure, not an error.
inline Report verify(const CatalogFile& cat, const ExpectationsFile& ex)
{
    Report rep;
    rep.rows.resize(ex.rows.size());
    parallel_for(ex.rows.size(), [&](std::size_t i) {
        const ExpectationRow& e = ex.rows[i];
        ReportRow& r = rep.rows[i];
        r.family = e.family;
        r.holonomy_group = e.holonomy_group;
        r.params = reduce_params_mod2(e.params);
        r.expected = e.count;
        const AlmostBieberbachRecord* rec = nullptr;
        for (const auto& x : cat.records)
            if (x.family == e.family)
                rec = &x;
        if (!rec) {
            r.note = "family not in catalog";
            return;
        }
        if (!e.holonomy_group.empty() && e.holonomy_group != rec->holonomy_group) {
            r.note = "catalog holonomy is " + rec->holonomy_group;
            return;
        }
        if (e.params.size() != rec->presentation.parameters.size()) {
            r.note = "family takes " + std::to_string(rec->presentation.parameters.size()) + " parameters";
            return;
        }
        try {
            r.computed = classify_one(*rec, e.params).count;
            r.pass = *r.computed == r.expected;
        } catch (const Error& err) {
            r.note = err.what();
        }
    });
    std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.family != b.family)
            return family_less(a.family, b.family);
        return a.params < b.params;
    });
    for (const auto& r : rep.rows) {
        ++rep.total;
        rep.failures += r.pass ? 0 : 1;
        rep.zero_rows += r.computed && *r.computed == 0 ? 1 : 0;
    }
    if (ex.rows.empty())
        rep.warnings.push_back("expectations file has no rows");
    return rep;
}

/// Preimage group of the holonomy: the canonical lifts of the generators together with -1.
struct LiftGroupResult {
    GroupName name;
    int order = 0;
    int holonomy_order = 0;
    std::vector<std::string> elements;
};

template <class S>
LiftGroupResult lift_group_in(const AlmostBieberbachRecord& rec)
{
    std::vector<SpinElement<S>> base = base_preimages<S>(rec);
    std::vector<SpinElement<S>> gens{-SpinElement<S>::one(rec.dimension)};
    for (int g : rec.presentation.holonomy_generators())
        gens.push_back(base[g]);
    FiniteSpinGroup<S> f = subgroup_closure(gens, rec.dimension);
    LiftGroupResult r;
    r.name = identify_group(f);
    r.order = f.order();
    r.holonomy_order = character_table(rec.holonomy_group).order;
    for (const auto& x : f.elements)
        r.elements.push_back(x.str());
    return r;
}

inline LiftGroupResult lift_group(const AlmostBieberbachRecord& rec)
{
    if (rec.orthogonal && rec.orthogonal->field == 3 && !rec.orthogonal->is_rational())
        return lift_group_in<QSqrt3>(rec);
    return lift_group_in<QSqrt2>(rec);
}

} // namespace afspin
