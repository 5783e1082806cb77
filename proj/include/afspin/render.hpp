#pragma once

#include <string>
#include <vector>

#include "afspin/catalog.hpp"

namespace afspin {

enum class Format { text, json, csv, markdown };

inline Format parse_format(const std::string& s)
{
    if (s == "text")
        return Format::text;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    if (s == "markdown")
        return Format::markdown;
    throw ParseError("unknown format '" + s + "' (text, json, csv, markdown)");
}

inline std::string params_str(const std::vector<long>& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

/// Integer as a JSON number when it fits a machine word, else as a decimal string.
inline OrderedJson integer_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return OrderedJson(z.get_si());
    return OrderedJson(z.get_str());
}

/// Exact a + b*sqrt(D) as {a_num, a_den, b_num, b_den}.
template <class S>
OrderedJson scalar_json(const S& x)
{
    OrderedJson j;
    j["a_num"] = integer_json(x.a().num());
    j["a_den"] = integer_json(x.a().den());
    j["b_num"] = integer_json(x.b().num());
    j["b_den"] = integer_json(x.b().den());
    return j;
}

template <class S>
OrderedJson spin_json(const SpinElement<S>& x)
{
    OrderedJson j;
    j["radicand"] = S::radicand;
    j["text"] = x.str();
    OrderedJson terms = OrderedJson::array();
    for (const auto& [mask, c] : x.value().terms()) {
        OrderedJson t;
        t["blade"] = Blade(x.dim(), mask).str();
        t["coefficient"] = scalar_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline OrderedJson classify_json(const std::vector<ClassifyRow>& rows)
{
    OrderedJson out;
    out["format_version"] = catalog_format_version;
    OrderedJson arr = OrderedJson::array();
    for (const auto& r : rows) {
        OrderedJson j;
        j["family"] = r.family;
        j["holonomy_group"] = r.holonomy_group;
        j["params"] = r.params;
        j["params_mod2"] = r.params_mod2;
        j["count"] = r.count;
        j["spin"] = r.exists;
        j["parallelizable"] = r.parallelizable;
        j["strategy"] = strategy_name(r.strategy);
        arr.push_back(j);
    }
    out["rows"] = arr;
    return out;
}

inline std::string render_classify(const std::vector<ClassifyRow>& rows, Format f)
{
    std::string s;
    switch (f) {
    case Format::json:
        return classify_json(rows).dump(2) + "\n";
    case Format::csv:
        s = "family,holonomy_group,params,params_mod2,count,parallelizable,strategy\n";
        for (const auto& r : rows)
            s += r.family + "," + r.holonomy_group + ",\"" + params_str(r.params) + "\",\"" +
                 params_str(r.params_mod2) + "\"," + std::to_string(r.count) + "," +
                 (r.parallelizable ? "true" : "false") + "," + strategy_name(r.strategy) + "\n";
        return s;
    case Format::markdown:
        s = "| Fam | F | Params | Spin | Parallelizable |\n|---|---|---|---|---|\n";
        for (const auto& r : rows) {
            std::string count = r.count == 0 ? "**0**" : std::to_string(r.count);
            s += "| " + r.family + " | " + r.holonomy_group + " | " + params_str(r.params_mod2) + " | " + count +
                 " | " + (r.parallelizable ? "yes" : "no") + " |\n";
        }
        return s;
    case Format::text:
        for (const auto& r : rows) {
            s += "family " + r.family + " [" + r.holonomy_group + "] params " + params_str(r.params);
            if (r.params != r.params_mod2)
                s += " -> mod 2 " + params_str(r.params_mod2);
            s += ": " + std::to_string(r.count) + " spin structure" + (r.count == 1 ? "" : "s") +
                 (r.parallelizable ? ", parallelizable" : ", not spin") + " (" + strategy_name(r.strategy) + ")\n";
        }
        return s;
    }
    return s;
}

inline OrderedJson report_json(const Report& rep)
{
    OrderedJson out;
    out["format_version"] = catalog_format_version;
    OrderedJson summary;
    summary["rows"] = rep.total;
    summary["failures"] = rep.failures;
    summary["zero_rows"] = rep.zero_rows;
    out["summary"] = summary;
    out["warnings"] = rep.warnings;
    OrderedJson arr = OrderedJson::array();
    for (const auto& r : rep.rows) {
        OrderedJson j;
        j["family"] = r.family;
        j["holonomy_group"] = r.holonomy_group;
        j["params"] = r.params;
        j["expected"] = r.expected;
        if (r.computed)
            j["computed"] = *r.computed;
        else
            j["computed"] = nullptr;
        j["pass"] = r.pass;
        if (!r.note.empty())
            j["note"] = r.note;
        arr.push_back(j);
    }
    out["rows"] = arr;
    return out;
}

inline std::string render_report(const Report& rep, Format f)
{
    std::string s;
    auto computed = [](const ReportRow& r) { return r.computed ? std::to_string(*r.computed) : std::string("-"); };
    switch (f) {
    case Format::json:
        return report_json(rep).dump(2) + "\n";
    case Format::csv:
        s = "family,holonomy_group,params,expected,computed,pass,note\n";
        for (const auto& r : rep.rows)
            s += r.family + "," + r.holonomy_group + ",\"" + params_str(r.params) + "\"," + std::to_string(r.expected) +
                 "," + computed(r) + "," + (r.pass ? "true" : "false") + ",\"" + r.note + "\"\n";
        return s;
    case Format::markdown:
        s = "| Fam | F | Params | Expected | Computed | |\n|---|---|---|---|---|---|\n";
        for (const auto& r : rep.rows)
            s += "| " + r.family + " | " + r.holonomy_group + " | " + params_str(r.params) + " | " +
                 std::to_string(r.expected) + " | " + computed(r) + " | " + (r.pass ? "ok" : "FAIL " + r.note) +
                 " |\n";
        s += "\n";
        break;
    case Format::text:
        for (const auto& r : rep.rows)
            if (!r.pass)
                s += "FAIL family " + r.family + " params " + params_str(r.params) + ": expected " +
                     std::to_string(r.expected) + ", computed " + computed(r) +
                     (r.note.empty() ? "" : " (" + r.note + ")") + "\n";
        break;
    }
    for (const auto& w : rep.warnings)
        s += "warning: " + w + "\n";
    s += std::to_string(rep.total) + " rows, " + std::to_string(rep.failures) + " failures, " +
         std::to_string(rep.zero_rows) + " rows with no spin structure\n";
    return s;
}

} // namespace afspin
