#include "hyperform/catalog.hpp"

#include "hyperform/error.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <set>

namespace hyperform {

using json = nlohmann::ordered_json;

std::string_view to_string(Nature n)
{
    switch (n) {
        case Nature::arithmetic: return "Arithmetic";
        case Nature::thin: return "Thin";
        case Nature::unknown: return "Unknown";
        case Nature::finite: return "Finite";
    }
    return "Unknown";
}

Nature parse_nature(std::string_view text)
{
    for (auto n : {Nature::arithmetic, Nature::thin, Nature::unknown, Nature::finite})
        if (text == to_string(n))
            return n;
    throw error(errc::parse_error, "unknown nature '" + std::string(text) + "'");
}

namespace {

constexpr std::size_t degree = 5;

[[noreturn]] void fail(errc code, std::size_t line, std::string const& what)
{
    throw error(code, "line " + std::to_string(line) + ": " + what);
}

ParameterVector parse_parameters(json const& j, char const* field, std::size_t line)
{
    if (!j.contains(field) || !j[field].is_array() || j[field].size() != degree)
        fail(errc::parse_error, line, std::string("'") + field + "' must be an array of 5 rationals");
    std::vector<Rational> v;
    for (auto const& x : j[field]) {
        if (!x.is_string())
            fail(errc::parse_error, line, std::string("'") + field + "' entries must be strings like \"1/6\"");
        try {
            v.push_back(parse_rational(x.get<std::string>()));
        } catch (error const& e) {
            fail(errc::bad_rational, line, e.detail());
        }
    }
    return ParameterVector(std::move(v));
}

CatalogEntry parse_entry(std::string const& text, std::size_t line)
{
    json j;
    try {
        j = json::parse(text);
    } catch (json::parse_error const& e) {
        fail(errc::parse_error, line, e.what());
    }
    if (!j.is_object())
        fail(errc::parse_error, line, "record is not a JSON object");

    CatalogEntry e;
    if (!j.contains("id") || !j["id"].is_string() || j["id"].get<std::string>().empty())
        fail(errc::parse_error, line, "missing 'id'");
    e.id = j["id"].get<std::string>();
    e.alpha = parse_parameters(j, "alpha", line);
    e.beta = parse_parameters(j, "beta", line);

    try {
        if (j.contains("nature"))
            e.nature = parse_nature(j["nature"].get<std::string>());
        if (j.contains("source"))
            e.source = j["source"].get<std::string>();
        if (j.contains("expected_first_row")) {
            auto const& row = j["expected_first_row"];
            if (!row.is_array() || row.size() != degree)
                fail(errc::parse_error, line, "'expected_first_row' must hold 5 integers");
            std::vector<Integer> v;
            for (auto const& x : row)
                v.emplace_back(x.get<long>());
            e.expected_first_row = std::move(v);
        }
        if (j.contains("expected_hasse")) {
            auto const& h = j["expected_hasse"];
            if (!h.is_array() || h.size() != degree)
                fail(errc::parse_error, line, "'expected_hasse' must hold 5 values");
            std::vector<int> v;
            for (auto const& x : h) {
                int w = x.get<int>();
                if (w != 1 && w != -1)
                    fail(errc::parse_error, line, "Hasse values must be +1 or -1");
                v.push_back(w);
            }
            e.expected_hasse = std::move(v);
        }
        if (j.contains("expected_order")) {
            long n = j["expected_order"].get<long>();
            if (n <= 0)
                fail(errc::parse_error, line, "'expected_order' must be positive");
            e.expected_order = static_cast<unsigned long>(n);
        }
    } catch (json::exception const& ex) {
        fail(errc::parse_error, line, ex.what());
    } catch (error const& ex) {
        if (ex.code() != errc::parse_error)
            throw;
        if (ex.detail().rfind("line ", 0) == 0)
            throw;
        fail(errc::parse_error, line, ex.detail());
    }
    return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::istream& in)
{
    std::vector<CatalogEntry> entries;
    std::set<std::string> ids;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        CatalogEntry e = parse_entry(text, line);
        if (!ids.insert(e.id).second)
            fail(errc::duplicate_id, line, "id '" + e.id + "' already used");
        entries.push_back(std::move(e));
    }
    if (entries.empty())
        throw error(errc::parse_error, "catalog has no entries");
    return entries;
}

std::vector<CatalogEntry> load_catalog(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw error(errc::parse_error, "cannot open " + path.string());
    return parse_catalog(in);
}

std::string serialize_entry(CatalogEntry const& e)
{
    json j;
    j["id"] = e.id;
    for (auto const& [name, pv] : {std::pair{"alpha", &e.alpha}, std::pair{"beta", &e.beta}}) {
        json a = json::array();
        for (auto const& r : pv->entries())
            a.push_back(to_string(r));
        j[name] = a;
    }
    if (e.expected_first_row) {
        json a = json::array();
        for (auto const& x : *e.expected_first_row)
            a.push_back(x.get_si());
        j["expected_first_row"] = a;
    }
    if (e.expected_hasse)
        j["expected_hasse"] = *e.expected_hasse;
    j["nature"] = std::string(to_string(e.nature));
    j["source"] = e.source;
    if (e.expected_order)
        j["expected_order"] = *e.expected_order;
    return j.dump();
}

}  // namespace hyperform
