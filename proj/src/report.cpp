#include "hyperform/report.hpp"

#include "hyperform/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace hyperform {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view text)
{
    if (text == "text")
        return Format::text;
    if (text == "json")
        return Format::json;
    if (text == "csv")
        return Format::csv;
    if (text == "markdown" || text == "md")
        return Format::markdown;
    throw error(errc::parse_error, "unknown format '" + std::string(text) + "'");
}

namespace {

template <typename Range>
std::string tuple_string(Range const& r)
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto const& x : r) {
        if (!first)
            os << ", ";
        first = false;
        os << x;
    }
    os << ")";
    return os.str();
}

std::string signature_string(Signature s)
{
    return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
}

std::vector<int> key_hasse(InvariantRecord const& inv)
{
    std::vector<int> v;
    for (auto p : key_primes)
        v.push_back(inv.hasse_at(p));
    return v;
}

bool proportional(std::vector<Integer> const& a, std::vector<Integer> const& b)
{
    if (a.size() != b.size())
        return false;
    if (std::all_of(a.begin(), a.end(), [](auto const& x) { return x == 0; }) ||
        std::all_of(b.begin(), b.end(), [](auto const& x) { return x == 0; }))
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i])
                return false;
    return true;
}

PairKind parse_kind(std::string_view s)
{
    for (auto k : {PairKind::orthogonal, PairKind::symplectic, PairKind::finite, PairKind::inadmissible})
        if (s == to_string(k))
            return k;
    throw error(errc::parse_error, "unknown pair kind '" + std::string(s) + "'");
}

// Integers go out as decimal strings so large values survive any reader.
json integer_array(std::vector<Integer> const& v)
{
    json a = json::array();
    for (auto const& x : v)
        a.push_back(x.get_str());
    return a;
}

json parameter_array(ParameterVector const& p)
{
    json a = json::array();
    for (auto const& r : p.entries())
        a.push_back(to_string(r));
    return a;
}

json key_json(SimilarityClassKey const& k)
{
    json j;
    j["signature"] = {k.signature.plus, k.signature.minus};
    j["discriminant"] = k.discriminant;
    json h = json::array();
    for (auto const& [p, w] : k.hasse)
        h.push_back({p, w});
    j["hasse"] = h;
    return j;
}

SimilarityClassKey key_from_json(json const& j)
{
    SimilarityClassKey k;
    k.signature = {j.at("signature").at(0).get<unsigned>(), j.at("signature").at(1).get<unsigned>()};
    k.discriminant = j.at("discriminant").get<int>();
    for (auto const& pw : j.at("hasse"))
        k.hasse.emplace_back(pw.at(0).get<unsigned long>(), pw.at(1).get<int>());
    return k;
}

json invariants_json(InvariantRecord const& inv)
{
    json j;
    j["signature"] = {inv.signature.plus, inv.signature.minus};
    j["discriminant"] = inv.discriminant.get_str();
    json h = json::array();
    for (auto const& [p, w] : inv.hasse)
        h.push_back({p, w});
    j["hasse"] = h;
    j["relevant_primes"] = inv.relevant_primes;
    return j;
}

InvariantRecord invariants_from_json(json const& j)
{
    InvariantRecord inv;
    inv.signature = {j.at("signature").at(0).get<unsigned>(), j.at("signature").at(1).get<unsigned>()};
    inv.discriminant = Integer(j.at("discriminant").get<std::string>());
    for (auto const& pw : j.at("hasse"))
        inv.hasse[pw.at(0).get<unsigned long>()] = pw.at(1).get<int>();
    inv.relevant_primes = j.at("relevant_primes").get<std::vector<unsigned long>>();
    return inv;
}

ParameterVector parameters_from_json(json const& j)
{
    std::vector<Rational> v;
    for (auto const& x : j)
        v.push_back(parse_rational(x.get<std::string>()));
    return ParameterVector(std::move(v));
}

std::string md_escape(std::string s)
{
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::vector<Mismatch> check_expectations(std::vector<CatalogEntry> const& entries,
                                         ClassificationReport const& report)
{
    std::vector<Mismatch> out;
    for (auto const& e : entries) {
        bool const expects = e.expected_first_row || e.expected_hasse || e.expected_order;
        FormRecord const* r = report.find(e.id);
        if (!r) {
            if (expects) {
                std::string why = "not classified";
                for (auto const& d : report.diagnostics)
                    if (d.id == e.id)
                        why = d.message;
                out.push_back({e.id, "classification", "classified", "missing", why});
            }
            continue;
        }
        if (e.expected_first_row && !proportional(*e.expected_first_row, r->first_row)) {
            std::string note;
            try {
                std::vector<Rational> row(e.expected_first_row->begin(), e.expected_first_row->end());
                QuadraticForm const printed = QuadraticForm::from_first_row(row);
                bool const inv = preserves(companion_matrix(parameters_to_polynomial(e.alpha)), printed) &&
                                 preserves(companion_matrix(parameters_to_polynomial(e.beta)), printed);
                note = inv ? "expected row is preserved by A and B"
                           : "expected row is not preserved by A and B";
            } catch (error const&) {
                note = "expected row could not be tested for invariance";
            }
            out.push_back({e.id, "first_row", tuple_string(*e.expected_first_row),
                           tuple_string(r->first_row), note});
        }
        if (e.expected_hasse) {
            auto const computed = key_hasse(r->invariants);
            if (computed != *e.expected_hasse)
                out.push_back({e.id, "hasse", tuple_string(*e.expected_hasse), tuple_string(computed), {}});
        }
        if (e.expected_order) {
            std::string const computed = r->group_order ? std::to_string(*r->group_order) : "none";
            if (!r->group_order || *r->group_order != *e.expected_order)
                out.push_back({e.id, "group_order", std::to_string(*e.expected_order), computed, {}});
        }
    }
    return out;
}

std::string render_json(ClassificationReport const& report)
{
    json j;
    j["prime_bound"] = report.prime_bound;
    json classes = json::array();
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        json c;
        c["index"] = i + 1;
        c["key"] = key_json(report.classes[i].key);
        c["ids"] = report.classes[i].ids;
        classes.push_back(c);
    }
    j["classes"] = classes;

    json forms = json::array();
    for (auto const& r : report.per_form) {
        json f;
        f["id"] = r.id;
        f["alpha"] = parameter_array(r.alpha);
        f["beta"] = parameter_array(r.beta);
        f["nature"] = std::string(to_string(r.nature));
        f["source"] = r.source;
        f["kind"] = std::string(to_string(r.kind));
        f["first_row"] = integer_array(r.first_row);
        f["invariants"] = invariants_json(r.invariants);
        f["key"] = key_json(r.key);
        f["class_index"] = r.class_index;
        f["group_order"] = r.group_order ? json(*r.group_order) : json(nullptr);
        forms.push_back(f);
    }
    j["per_form"] = forms;

    json diags = json::array();
    for (auto const& d : report.diagnostics)
        diags.push_back({{"id", d.id}, {"stage", d.stage}, {"kind", std::string(to_string(d.kind))},
                         {"message", d.message}});
    j["diagnostics"] = diags;
    return j.dump(2) + "\n";
}

ClassificationReport parse_report_json(std::string_view text)
{
    try {
        json const j = json::parse(text);
        ClassificationReport rep;
        rep.prime_bound = j.at("prime_bound").get<unsigned long>();
        for (auto const& c : j.at("classes"))
            rep.classes.push_back({key_from_json(c.at("key")), c.at("ids").get<std::vector<std::string>>()});
        for (auto const& f : j.at("per_form")) {
            FormRecord r;
            r.id = f.at("id").get<std::string>();
            r.alpha = parameters_from_json(f.at("alpha"));
            r.beta = parameters_from_json(f.at("beta"));
            r.nature = parse_nature(f.at("nature").get<std::string>());
            r.source = f.at("source").get<std::string>();
            r.kind = parse_kind(f.at("kind").get<std::string>());
            for (auto const& x : f.at("first_row"))
                r.first_row.emplace_back(x.get<std::string>());
            r.invariants = invariants_from_json(f.at("invariants"));
            r.key = key_from_json(f.at("key"));
            r.class_index = f.at("class_index").get<std::size_t>();
            if (!f.at("group_order").is_null())
                r.group_order = f.at("group_order").get<unsigned long>();
            rep.per_form.push_back(std::move(r));
        }
        for (auto const& d : j.at("diagnostics"))
            rep.diagnostics.push_back({d.at("id").get<std::string>(), d.at("stage").get<std::string>(),
                                       parse_kind(d.at("kind").get<std::string>()),
                                       d.at("message").get<std::string>()});
        return rep;
    } catch (json::exception const& e) {
        throw error(errc::parse_error, e.what());
    } catch (std::invalid_argument const& e) {
        throw error(errc::parse_error, e.what());
    }
}

std::string render_csv(ClassificationReport const& report)
{
    std::ostringstream os;
    os << "id,signature,discriminant,W2,W3,W5,W7,W11,class_index,nature\n";
    for (auto const& r : report.per_form) {
        os << r.id << ",\"" << signature_string(r.invariants.signature) << "\"," << r.invariants.discriminant;
        for (int w : key_hasse(r.invariants))
            os << "," << w;
        os << "," << r.class_index << "," << to_string(r.nature) << "\n";
    }
    return os.str();
}

std::string render_markdown(ClassificationReport const& report)
{
    std::ostringstream os;
    os << "# Similarity classes\n\n";
    os << report.per_form.size() << " forms in " << report.classes.size()
       << " classes. Hasse-Witt invariants evaluated at every prime up to " << report.prime_bound << ".\n";

    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        auto const& c = report.classes[i];
        os << "\n## Class " << i + 1 << ": " << to_string(c.key) << "\n\n";
        bool const finite = std::any_of(c.ids.begin(), c.ids.end(), [&](auto const& id) {
            return report.find(id)->group_order.has_value();
        });
        os << "| id | alpha | beta | first row | nature | source |" << (finite ? " order |" : "") << "\n";
        os << "|---|---|---|---|---|---|" << (finite ? "---|" : "") << "\n";
        for (auto const& id : c.ids) {
            FormRecord const& r = *report.find(id);
            os << "| " << r.id << " | " << r.alpha.to_string() << " | " << r.beta.to_string() << " | "
               << tuple_string(r.first_row) << " | " << to_string(r.nature) << " | " << md_escape(r.source)
               << " |";
            if (finite)
                os << " " << (r.group_order ? std::to_string(*r.group_order) : "") << " |";
            os << "\n";
        }
    }

    // Conclusions per real signature.
    std::map<std::pair<unsigned, unsigned>, std::vector<std::size_t>, std::greater<>> by_sig;
    for (std::size_t i = 0; i < report.classes.size(); ++i)
        by_sig[{report.classes[i].key.signature.plus, report.classes[i].key.signature.minus}].push_back(i);

    os << "\n## Commensurability\n\n";
    for (auto const& [sig, idx] : by_sig) {
        std::map<Nature, std::set<std::size_t>> classes_with;
        std::map<Nature, std::size_t> rows;
        for (auto i : idx)
            for (auto const& id : report.classes[i].ids) {
                Nature n = report.find(id)->nature;
                classes_with[n].insert(i);
                ++rows[n];
            }
        os << "- O(" << sig.first << "," << sig.second << "): " << idx.size() << " similarity classes.";
        if (rows[Nature::finite])
            os << " " << rows[Nature::finite] << " finite groups, "
               << "commensurable only in the trivial sense.";
        if (rows[Nature::arithmetic])
            os << " " << rows[Nature::arithmetic] << " arithmetic groups fall into "
               << classes_with[Nature::arithmetic].size() << " commensurability classes.";
        if (rows[Nature::thin])
            os << " " << rows[Nature::thin] << " thin groups in " << classes_with[Nature::thin].size()
               << " classes; thin groups from different classes have no Zariski-dense subgroup in common.";
        if (rows[Nature::unknown]) {
            std::set<std::size_t> all = classes_with[Nature::unknown];
            all.insert(classes_with[Nature::arithmetic].begin(), classes_with[Nature::arithmetic].end());
            os << " " << rows[Nature::unknown] << " groups of unknown nature; if all of them are arithmetic, "
               << "the arithmetic groups of this signature form " << all.size()
               << " commensurability classes.";
        }
        os << "\n";
    }

    if (!report.diagnostics.empty()) {
        os << "\n## Excluded rows\n\n| id | stage | kind | message |\n|---|---|---|---|\n";
        for (auto const& d : report.diagnostics)
            os << "| " << d.id << " | " << d.stage << " | " << to_string(d.kind) << " | " << md_escape(d.message)
               << " |\n";
    }
    return os.str();
}

std::string render(ClassificationReport const& report, Format format)
{
    switch (format) {
        case Format::json: return render_json(report);
        case Format::csv: return render_csv(report);
        case Format::text:
        case Format::markdown: return render_markdown(report);
    }
    return render_markdown(report);
}

std::string render_pair(ParameterVector const& alpha, ParameterVector const& beta,
                        PairAnalysis const& a, Format format)
{
    auto const& cls = a.classification;
    std::vector<Integer> row;
    std::optional<Signature> sig;
    std::optional<Integer> disc;
    if (a.construction) {
        row = primitive_first_row(a.construction->form);
        sig = real_signature(congruence_diagonalize(a.construction->form.matrix()));
        disc = discriminant_class(a.construction->form);
    }

    if (format == Format::json) {
        json j;
        j["alpha"] = parameter_array(alpha);
        j["beta"] = parameter_array(beta);
        j["f"] = a.f.to_string();
        j["g"] = a.g.to_string();
        j["kind"] = std::string(to_string(cls.kind));
        if (!cls.reason.empty())
            j["reason"] = cls.reason;
        if (a.construction) {
            j["first_row"] = integer_array(row);
            j["signature"] = {sig->plus, sig->minus};
            j["discriminant"] = disc->get_str();
        }
        if (a.canonical) {
            j["hasse"] = key_hasse(a.canonical->invariants);
            j["key"] = key_json(a.canonical->key);
        }
        if (a.group_order)
            j["group_order"] = *a.group_order;
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    if (format == Format::csv) {
        os << "alpha,beta,kind,first_row,signature,discriminant,W2,W3,W5,W7,W11,group_order\n";
        os << "\"" << alpha.to_string() << "\",\"" << beta.to_string() << "\"," << to_string(cls.kind) << ",";
        if (a.construction)
            os << "\"" << tuple_string(row) << "\",\"" << signature_string(*sig) << "\"," << *disc;
        else
            os << ",,";
        for (std::size_t i = 0; i < key_primes.size(); ++i)
            os << "," << (a.canonical ? std::to_string(a.canonical->invariants.hasse_at(key_primes[i])) : "");
        os << "," << (a.group_order ? std::to_string(*a.group_order) : "") << "\n";
        return os.str();
    }

    char const* bullet = format == Format::markdown ? "- " : "";
    os << bullet << "alpha: " << alpha.to_string() << "\n";
    os << bullet << "beta: " << beta.to_string() << "\n";
    os << bullet << "f: " << a.f.to_string() << "\n";
    os << bullet << "g: " << a.g.to_string() << "\n";
    os << bullet << "classification: " << to_string(cls.kind);
    if (!cls.reason.empty())
        os << " (" << cls.reason << ")";
    os << "\n";
    if (a.construction) {
        os << bullet << "first row: " << tuple_string(row) << "\n";
        os << bullet << "signature: " << signature_string(*sig) << "\n";
        os << bullet << "discriminant class: " << *disc << "\n";
    }
    if (a.canonical) {
        os << bullet << "Hasse vector (2,3,5,7,11): " << tuple_string(key_hasse(a.canonical->invariants)) << "\n";
        os << bullet << "similarity key: " << to_string(a.canonical->key) << "\n";
    }
    if (a.group_order)
        os << bullet << "group order: " << *a.group_order << "\n";
    return os.str();
}

int run_classify(std::filesystem::path const& catalog_path, ClassifyOptions const& options,
                 Format format, std::ostream& out, std::ostream& err)
{
    std::vector<CatalogEntry> entries;
    try {
        entries = load_catalog(catalog_path);
    } catch (error const& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    ClassificationReport const report = classify_catalog(entries, options);
    out << render(report, format);

    auto const mismatches = check_expectations(entries, report);
    for (auto const& m : mismatches) {
        err << "mismatch " << m.id << " " << m.field << ": expected " << m.expected << ", computed "
            << m.computed;
        if (!m.note.empty())
            err << " (" << m.note << ")";
        err << "\n";
    }
    return mismatches.empty() ? exit_ok : exit_mismatch;
}

int run_pair(ParameterVector const& alpha, ParameterVector const& beta, ClassifyOptions const& options,
             Format format, std::ostream& out, std::ostream& err)
{
    try {
        PairAnalysis const a = analyze_pair(alpha, beta, options);
        out << render_pair(alpha, beta, a, format);
        return exit_ok;
    } catch (error const& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

}  // namespace hyperform
