#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afspin/render.hpp"

using namespace afspin;

namespace {

enum Exit { ok = 0, verification_failed = 1, invalid_input = 2, io_error = 3, internal_error = 4 };

struct Options {
    std::string catalog = default_catalog_path();
    std::string expected = default_expectations_path();
    std::string family;
    std::string params;
    std::string format = "text";
    std::string output;
    std::string matrix;
    std::string what;
};

/// "k1=1,k2=0,..." by name or "1,0,..." by position; missing names default to 0.
std::vector<long> parse_params(const std::string& text, const AlmostBieberbachRecord& rec)
{
    const auto& names = rec.presentation.parameters;
    std::vector<long> values(names.size(), 0);
    if (text.empty())
        return values;
    std::vector<std::string> items;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        items.push_back(item);
    bool named = text.find('=') != std::string::npos;
    if (!named && items.size() != names.size())
        throw ParseError("family " + rec.family + " takes " + std::to_string(names.size()) + " parameters, got " +
                         std::to_string(items.size()));
    auto to_long = [](const std::string& s) {
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size())
                throw ParseError("");
            return v;
        } catch (const std::exception&) {
            throw ParseError("parameter value '" + s + "' is not an integer");
        }
    };
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!named) {
            values[i] = to_long(items[i]);
            continue;
        }
        auto eq = items[i].find('=');
        if (eq == std::string::npos)
            throw ParseError("expected name=value in '" + items[i] + "'");
        std::string name = items[i].substr(0, eq);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw ParseError("family " + rec.family + " has no parameter '" + name + "'");
        values[it - names.begin()] = to_long(items[i].substr(eq + 1));
    }
    return values;
}

/// "diag:1,1,-1,-1", "identity", "identity:n" or a JSON array of rows with entries
/// p, "p/q" or [a, b] for a + b*sqrt2.
Matrix<QSqrt2> parse_matrix(const std::string& text)
{
    if (text == "identity")
        return Matrix<QSqrt2>::identity(4);
    if (text.rfind("identity:", 0) == 0) {
        int n = std::stoi(text.substr(9));
        if (n < 1 || n > 8)
            throw DimensionError("dimension must lie in 1..8");
        return Matrix<QSqrt2>::identity(n);
    }
    if (text.rfind("diag:", 0) == 0) {
        std::vector<QSqrt2> d;
        std::stringstream ss(text.substr(5));
        for (std::string item; std::getline(ss, item, ',');)
            d.emplace_back(Rational::parse(item));
        if (d.empty() || d.size() > 8)
            throw DimensionError("diagonal must have 1..8 entries");
        return Matrix<QSqrt2>::diagonal(d);
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error&) {
        throw ParseError("matrix literal must be diag:..., identity or a JSON array of rows");
    }
    if (!j.is_array() || j.empty() || j.size() > 8)
        throw ParseError("matrix literal must be a JSON array of 1..8 rows");
    int n = static_cast<int>(j.size());
    auto rows = detail::parse_square<QuadraticEntry>(j, "matrix", n, detail::parse_entry);
    Matrix<QSqrt2> m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = QSqrt2(rows[r][c].a, rows[r][c].b);
    return m;
}

void emit(const Options& o, const std::string& text)
{
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + o.output + "'");
    out << text;
}

int cmd_classify(const Options& o)
{
    CatalogFile cat = load_catalog(o.catalog);
    std::vector<ClassifyRow> rows;
    if (!o.params.empty()) {
        if (o.family.empty())
            throw ParseError("--params needs --family");
        const auto& rec = cat.find(o.family);
        rows = classify(cat, o.family, parse_params(o.params, rec), true);
    } else {
        rows = classify(cat, o.family);
    }
    emit(o, render_classify(rows, parse_format(o.format)));
    return ok;
}

int cmd_verify(const Options& o)
{
    Format f = parse_format(o.format);
    Report rep = verify(load_catalog(o.catalog), load_expectations(o.expected));
    emit(o, render_report(rep, f));
    for (const auto& w : rep.warnings)
        if (f != Format::text && f != Format::markdown)
            std::cerr << "warning: " << w << "\n";
    return rep.failures == 0 ? ok : verification_failed;
}

int cmd_preimage(const Options& o)
{
    Format f = parse_format(o.format);
    Matrix<QSqrt2> m = parse_matrix(o.matrix);
    bool signed_perm = true;
    SignedPermMatrix sp;
    try {
        sp = SignedPermMatrix::from_matrix(m);
    } catch (const NotSignedPerm&) {
        signed_perm = false;
    }
    SpinPair<QSqrt2> p = signed_perm ? preimage_signed_perm<QSqrt2>(sp) : preimage_general(m);
    if (f == Format::json) {
        OrderedJson j;
        j["matrix"] = o.matrix;
        j["method"] = signed_perm ? "signed_permutation" : "general";
        j["preimages"] = {spin_json(p.first), spin_json(p.second)};
        emit(o, j.dump(2) + "\n");
    } else {
        emit(o, "±(" + p.first.str() + ")\n");
    }
    return ok;
}

int cmd_lift_group(const Options& o)
{
    CatalogFile cat = load_catalog(o.catalog);
    const auto& rec = cat.find(o.family);
    LiftGroupResult g = lift_group(rec);
    Format f = parse_format(o.format);
    if (f == Format::json) {
        OrderedJson j;
        j["family"] = rec.family;
        j["holonomy_group"] = rec.holonomy_group;
        j["group"] = g.name.id;
        j["order"] = g.order;
        j["holonomy_order"] = g.holonomy_order;
        j["elements"] = g.elements;
        emit(o, j.dump(2) + "\n");
        return ok;
    }
    std::string s = "family " + rec.family + ": λ⁻¹(" + GroupName{rec.holonomy_group}.pretty() + ") ≅ " +
                    g.name.pretty() + ", order " + std::to_string(g.order) + "\n";
    for (const auto& x : g.elements)
        s += "  " + x + "\n";
    emit(o, s);
    return ok;
}

int cmd_char(const Options& o)
{
    CatalogFile cat = load_catalog(o.catalog);
    const auto& rec = cat.find(o.family);
    const CharacterTable& t = character_table(rec.holonomy_group);
    std::vector<long> values = character_on_table(rec, matrix_group_closure(rec), t);
    std::string d = decomposition_str(decompose_character(values, t));
    if (parse_format(o.format) == Format::json) {
        OrderedJson j;
        j["family"] = rec.family;
        j["holonomy_group"] = rec.holonomy_group;
        std::vector<std::string> labels;
        for (const auto& c : t.classes)
            labels.push_back(c.label);
        j["classes"] = labels;
        j["traces"] = values;
        j["decomposition"] = d;
        emit(o, j.dump(2) + "\n");
    } else {
        emit(o, d + "\n");
    }
    return ok;
}

int cmd_export(const Options& o)
{
    if (o.what == "tables") {
        emit(o, character_tables_markdown());
        return ok;
    }
    CatalogFile cat = load_catalog(o.catalog);
    if (o.what == "table1") {
        emit(o, render_classify(classify(cat), parse_format(o.format)));
        return ok;
    }
    if (o.what == "preimages") {
        OrderedJson out;
        out["format_version"] = catalog_format_version;
        OrderedJson arr = OrderedJson::array();
        for (const auto& rec : cat.records) {
            OrderedJson j;
            j["family"] = rec.family;
            OrderedJson gens = OrderedJson::object();
            auto add = [&](auto base) {
                for (int g : rec.presentation.holonomy_generators())
                    gens[rec.presentation.generators[g].name] = spin_json(base[g]);
            };
            if (rec.orthogonal && rec.orthogonal->field == 3 && !rec.orthogonal->is_rational())
                add(base_preimages<QSqrt3>(rec));
            else
                add(base_preimages<QSqrt2>(rec));
            j["generators"] = gens;
            arr.push_back(j);
        }
        out["records"] = arr;
        emit(o, out.dump(2) + "\n");
        return ok;
    }
    throw ParseError("unknown export '" + o.what + "' (table1, tables, preimages)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spin structures on almost-flat manifolds"};
    app.require_subcommand(1);
    Options o;

    auto add_catalog = [&](CLI::App* c) { c->add_option("--catalog", o.catalog, "catalog JSON file"); };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text, json, csv or markdown");
        c->add_option("-o,--output", o.output, "write to a file instead of stdout");
    };

    auto* classify = app.add_subcommand("classify", "count spin structures per family and parameter vector");
    add_catalog(classify);
    add_format(classify);
    classify->add_option("--family", o.family, "family id, e.g. 27 or B5b");
    classify->add_option("--params", o.params, "k1=..,k2=.. or positional 1,0,0,1");

    auto* verify_cmd = app.add_subcommand("verify", "recompute every row of an expectations file");
    add_catalog(verify_cmd);
    add_format(verify_cmd);
    verify_cmd->add_option("--expected", o.expected, "expectations JSON file");

    auto* preimage = app.add_subcommand("preimage", "both preimages in Spin(n) of a matrix in SO(n)");
    add_format(preimage);
    preimage->add_option("matrix", o.matrix, "diag:1,1,-1,-1, identity or [[...],...]")->required();

    auto* lift_group_cmd = app.add_subcommand("lift-group", "preimage of the holonomy group in Spin(4)");
    add_catalog(lift_group_cmd);
    add_format(lift_group_cmd);
    lift_group_cmd->add_option("--family", o.family, "family id")->required();

    auto* char_cmd = app.add_subcommand("char", "decomposition of the holonomy character");
    add_catalog(char_cmd);
    add_format(char_cmd);
    char_cmd->add_option("--family", o.family, "family id")->required();

    auto* export_cmd = app.add_subcommand("export", "machine-readable exports");
    add_catalog(export_cmd);
    add_format(export_cmd);
    export_cmd->add_option("what", o.what, "table1, tables or preimages")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : invalid_input;
    }

    try {
        if (*classify)
            return cmd_classify(o);
        if (*verify_cmd)
            return cmd_verify(o);
        if (*preimage)
            return cmd_preimage(o);
        if (*lift_group_cmd)
            return cmd_lift_group(o);
        if (*char_cmd)
            return cmd_char(o);
        if (*export_cmd)
            return cmd_export(o);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_error;
    } catch (const ClosureBoundExceeded& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_error;
    } catch (const EnumerationBoundExceeded& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_error;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return internal_error;
}
