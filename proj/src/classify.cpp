#include "hyperform/classify.hpp"

#include "hyperform/error.hpp"
#include "hyperform/finite_group.hpp"

#include <algorithm>
#include <sstream>

namespace hyperform {

std::vector<int> SimilarityClassKey::hasse_vector() const
{
    std::vector<int> v;
    for (auto const& [p, w] : hasse)
        v.push_back(w);
    return v;
}

bool key_order(SimilarityClassKey const& a, SimilarityClassKey const& b)
{
    if (a.signature.plus != b.signature.plus)
        return a.signature.plus > b.signature.plus;
    if (a.hasse != b.hasse)
        return a.hasse < b.hasse;  // (p, -1) sorts before (p, +1)
    return a.discriminant < b.discriminant;
}

std::string to_string(SimilarityClassKey const& key)
{
    std::ostringstream os;
    os << "O(" << key.signature.plus << "," << key.signature.minus << ") disc "
       << (key.discriminant > 0 ? "+1" : "-1") << " W(";
    for (std::size_t i = 0; i < key.hasse.size(); ++i) {
        if (i)
            os << ", ";
        if (i >= key_primes.size())
            os << "p" << key.hasse[i].first << ":";
        os << key.hasse[i].second;
    }
    os << ")";
    return os.str();
}

QuadraticForm normalize_discriminant(QuadraticForm const& q, Rational const& target)
{
    if (q.dimension() % 2 == 0)
        throw error(errc::shape_mismatch, "discriminant normalization needs odd dimension");
    if (target == 0)
        throw error(errc::zero_scalar, "target discriminant is zero");
    Rational const det = determinant(q.matrix());
    if (det == 0)
        throw error(errc::degenerate, "form has determinant zero");
    return q.scaled(target / det);
}

CanonicalForm canonicalize(QuadraticForm const& q, InvariantOptions const& options)
{
    Signature const sig = real_signature(congruence_diagonalize(q.matrix()));
    QuadraticForm work = sig.minus > sig.plus ? q.scaled(-1) : q;
    unsigned const minus = std::min(sig.plus, sig.minus);
    work = normalize_discriminant(work, minus % 2 ? -1 : 1);

    CanonicalForm c{work, full_invariants(work, options), {}};
    c.key.signature = c.invariants.signature;
    c.key.discriminant = static_cast<int>(c.invariants.discriminant.get_si());
    for (auto p : key_primes)
        c.key.hasse.emplace_back(p, c.invariants.hasse_at(p));
    for (auto const& [p, w] : c.invariants.hasse)
        if (w == -1 && std::find(key_primes.begin(), key_primes.end(), p) == key_primes.end())
            c.key.hasse.emplace_back(p, w);
    return c;
}

bool lemma2_scaling_check(QuadraticForm const& q, Rational const& lambda, unsigned long p)
{
    if (lambda == 0)
        throw error(errc::zero_scalar, "scaling by zero");
    int const before = hasse_witt(congruence_diagonalize(q.matrix()), p);
    int const after = hasse_witt(congruence_diagonalize(q.scaled(lambda).matrix()), p);
    return before == after;
}

FormRecord const* ClassificationReport::find(std::string_view id) const
{
    for (auto const& r : per_form)
        if (r.id == id)
            return &r;
    return nullptr;
}

namespace {

template <typename F>
auto staged(char const* stage, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (error const& e) {
        if (!e.stage().empty())
            throw;
        throw e.at_stage(stage);
    }
}

}  // namespace

PairAnalysis analyze_pair(ParameterVector const& alpha, ParameterVector const& beta,
                          ClassifyOptions const& options)
{
    PairAnalysis a;
    staged("parameters", [&] { return interlaces(alpha, beta); });
    a.f = staged("polynomial", [&] { return parameters_to_polynomial(alpha); });
    a.g = staged("polynomial", [&] { return parameters_to_polynomial(beta); });
    a.classification = validate_pair(a.f, a.g);
    if (a.classification.kind != PairKind::orthogonal && a.classification.kind != PairKind::finite)
        return a;

    RationalMatrix const ca = companion_matrix(a.f);
    RationalMatrix const cb = companion_matrix(a.g);
    a.construction = staged("form", [&] { return construct_invariant_form(ca, cb); });
    InvariantOptions const inv{options.prime_bound, true};
    a.canonical = staged("invariants", [&] { return canonicalize(a.construction->form, inv); });
    if (a.classification.kind == PairKind::finite && options.group_orders)
        a.group_order = staged("group", [&] {
            return static_cast<unsigned long>(group_order(
                IntMatrix::from_rational(ca), IntMatrix::from_rational(cb), options.max_group_elements));
        });
    return a;
}

ClassificationReport classify_catalog(std::vector<CatalogEntry> const& entries,
                                      ClassifyOptions const& options)
{
    ClassificationReport report;
    report.prime_bound = options.prime_bound;

    for (auto const& e : entries) {
        try {
            PairAnalysis const a = analyze_pair(e.alpha, e.beta, options);
            if (!a.canonical) {
                report.diagnostics.push_back(
                    {e.id, "admissibility", a.classification.kind, a.classification.reason.empty()
                                                                        ? "excluded from classification"
                                                                        : a.classification.reason});
                continue;
            }
            FormRecord r;
            r.id = e.id;
            r.alpha = e.alpha;
            r.beta = e.beta;
            r.nature = e.nature;
            r.source = e.source;
            r.kind = a.classification.kind;
            r.first_row = primitive_first_row(a.construction->form);
            r.invariants = a.canonical->invariants;
            r.key = a.canonical->key;
            r.group_order = a.group_order;
            report.per_form.push_back(std::move(r));
        } catch (error const& err) {
            report.diagnostics.push_back({e.id, err.stage(), PairKind::inadmissible, err.what()});
        }
    }

    std::vector<SimilarityClassKey> keys;
    for (auto const& r : report.per_form)
        if (std::find(keys.begin(), keys.end(), r.key) == keys.end())
            keys.push_back(r.key);
    std::stable_sort(keys.begin(), keys.end(), key_order);

    for (auto const& k : keys)
        report.classes.push_back({k, {}});
    for (auto& r : report.per_form) {
        auto const idx = static_cast<std::size_t>(
            std::find(keys.begin(), keys.end(), r.key) - keys.begin());
        r.class_index = idx + 1;
        report.classes[idx].ids.push_back(r.id);
    }
    return report;
}

}  // namespace hyperform
