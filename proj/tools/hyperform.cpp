// hyperform: classify invariant quadratic forms of degree-5 hypergeometric
// groups.

#include "hyperform/classify.hpp"
#include "hyperform/error.hpp"
#include "hyperform/factor.hpp"
#include "hyperform/finite_group.hpp"
#include "hyperform/report.hpp"

#include <CLI11.hpp>

#include <iostream>

#ifndef HYPERFORM_DEFAULT_CATALOG
#define HYPERFORM_DEFAULT_CATALOG "data/catalog.jsonl"
#endif

namespace {

using namespace hyperform;

ParameterVector parse_degree5(std::string const& text, char const* name)
{
    ParameterVector p = ParameterVector::parse(text);
    if (p.size() != 5)
        throw error(errc::parse_error, std::string(name) + " needs 5 entries, got " + std::to_string(p.size()));
    return p;
}

// Q with first row (3, 0, -1, 0, -5), reduced by hand to
// diag(3/2, 3/2, 1/3, 1/3, -1).
int verify_example(std::ostream& out)
{
    QuadraticForm const q = QuadraticForm::from_first_row({3, 0, -1, 0, -5});
    std::vector<Rational> const ref = {Rational(3, 2), Rational(3, 2), Rational(1, 3), Rational(1, 3),
                                       Rational(-1)};
    bool ok = true;
    auto check = [&](bool cond, std::string const& what) {
        out << (cond ? "ok    " : "FAIL  ") << what << "\n";
        ok = ok && cond;
    };

    Rational const det = determinant(q.matrix());
    check(det == -512, "det Q = " + to_string(det) + " (expected -2^9)");

    DiagonalForm const d = congruence_diagonalize(q.matrix());
    RationalMatrix const tqt = d.witness.transpose() * q.matrix() * d.witness;
    std::string diag;
    for (auto const& x : d.entries)
        diag += (diag.empty() ? "" : ", ") + to_string(x);
    check(tqt == RationalMatrix::diagonal(d.entries), "T^t Q T = diag(" + diag + ")");

    Signature const s = real_signature(d), s_ref = real_signature(std::span<Rational const>(ref));
    check(s == s_ref, "signature (" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")");

    out << "      discriminant class of Q: " << discriminant_class(q)
        << ", of the reduced diagonal: " << squarefree_class(ref[0] * ref[1] * ref[2] * ref[3] * ref[4])
        << "\n";

    Rational const u[3] = {ref[0], ref[2], ref[4]};
    int const expected[3][3] = {{-1, 1, -1}, {0, -1, 1}, {0, 0, -1}};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            int const h = hilbert_symbol(u[i], u[j], 2);
            check(h == expected[i][j], "(" + to_string(u[i]) + ", " + to_string(u[j]) + ")_2 = " + std::to_string(h) +
                                           " (hand computation: " + std::to_string(expected[i][j]) + ")");
        }

    int const w2 = hasse_witt(std::span<Rational const>(ref), 2);
    check(w2 == 1, "W_2 of the reduced diagonal = " + std::to_string(w2));
    bool same = true;
    for (unsigned long p : primes_up_to(default_prime_bound))
        same = same && hasse_witt(d, p) == hasse_witt(std::span<Rational const>(ref), p);
    check(same, "W_p of Q and of the reduced diagonal agree for p <= " + std::to_string(default_prime_bound));
    return ok ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Similarity classes of invariant forms of hypergeometric groups"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned long prime_bound = default_prime_bound;
    std::string format_name;
    std::string catalog = HYPERFORM_DEFAULT_CATALOG;
    app.add_option("--prime-bound", prime_bound, "evaluate W_p for every prime up to this bound")
        ->check(CLI::Range(2ul, 100000ul));
    app.add_option("--format", format_name, "json, csv or markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown", "text"}));
    app.add_option("--catalog", catalog, "catalog file (JSON lines)");

    std::string alpha, beta;
    std::size_t max_elements = default_max_elements;

    auto* pair = app.add_subcommand("pair", "analyze one (alpha, beta) pair");
    pair->add_option("--alpha", alpha, "e.g. 0,0,0,0,0")->required();
    pair->add_option("--beta", beta, "e.g. 1/2,1/4,1/4,3/4,3/4")->required();

    app.add_subcommand("classify", "classify every row of the catalog");

    auto* order = app.add_subcommand("order", "order of the group generated by A and B");
    order->add_option("--alpha", alpha)->required();
    order->add_option("--beta", beta)->required();
    order->add_option("--max-elements", max_elements, "give up past this many elements");

    app.add_subcommand("verify-example", "rerun the diagonalization and Hilbert symbol example");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input_error;
    }

    ClassifyOptions options;
    options.prime_bound = prime_bound;

    try {
        if (app.got_subcommand("classify"))
            return run_classify(catalog, options, parse_format(format_name.empty() ? "markdown" : format_name),
                                std::cout, std::cerr);
        if (app.got_subcommand("pair"))
            return run_pair(parse_degree5(alpha, "--alpha"), parse_degree5(beta, "--beta"), options,
                            parse_format(format_name.empty() ? "text" : format_name), std::cout, std::cerr);
        if (app.got_subcommand("order")) {
            auto const f = parameters_to_polynomial(parse_degree5(alpha, "--alpha"));
            auto const g = parameters_to_polynomial(parse_degree5(beta, "--beta"));
            std::cout << group_order(IntMatrix::from_rational(companion_matrix(f)),
                                     IntMatrix::from_rational(companion_matrix(g)), max_elements)
                      << "\n";
            return exit_ok;
        }
        return verify_example(std::cout);
    } catch (error const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
