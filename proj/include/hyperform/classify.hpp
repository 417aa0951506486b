#ifndef HYPERFORM_CLASSIFY_HPP_
#define HYPERFORM_CLASSIFY_HPP_

#include "hyperform/catalog.hpp"
#include "hyperform/padic.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperform {

/* Primes at which Hasse vectors are tabulated. */
inline constexpr std::array<unsigned long, 5> key_primes = {2, 3, 5, 7, 11};

/* Complete similarity invariant of a non-degenerate form in odd dimension:
 * signature up to sign, discriminant after normalization, and W_p at the
 * key primes plus every other prime where W_p = -1. */
struct SimilarityClassKey {
    Signature signature;   // plus >= minus
    int discriminant = 1;  // (-1)^minus
    std::vector<std::pair<unsigned long, int>> hasse;

    std::vector<int> hasse_vector() const;  // values only
    friend bool operator==(SimilarityClassKey const&, SimilarityClassKey const&) = default;
};

/* Report order: plus descending, then Hasse values with -1 before +1. */
bool key_order(SimilarityClassKey const& a, SimilarityClassKey const& b);

std::string to_string(SimilarityClassKey const& key);

/* lambda Q with lambda = target / det Q; the result has discriminant class
 * squarefree_class(target). Throws errc::degenerate, errc::zero_scalar,
 * and errc::shape_mismatch for even dimension. */
QuadraticForm normalize_discriminant(QuadraticForm const& q, Rational const& target);

struct CanonicalForm {
    QuadraticForm form;  // sign-fixed and discriminant-normalized
    InvariantRecord invariants;
    SimilarityClassKey key;
};

CanonicalForm canonicalize(QuadraticForm const& q, InvariantOptions const& options = {});

/* W_p(Q) == W_p(lambda Q), each from its own diagonalization. Throws
 * errc::zero_scalar, errc::degenerate. */
bool lemma2_scaling_check(QuadraticForm const& q, Rational const& lambda, unsigned long p);

struct FormRecord {
    std::string id;
    ParameterVector alpha;
    ParameterVector beta;
    Nature nature = Nature::unknown;
    std::string source;
    PairKind kind = PairKind::inadmissible;
    std::vector<Integer> first_row;  // primitive integral, unnormalized sign
    InvariantRecord invariants;      // of the canonical form
    SimilarityClassKey key;
    std::size_t class_index = 0;
    std::optional<unsigned long> group_order;

    friend bool operator==(FormRecord const&, FormRecord const&) = default;
};

struct SimilarityClass {
    SimilarityClassKey key;
    std::vector<std::string> ids;
    friend bool operator==(SimilarityClass const&, SimilarityClass const&) = default;
};

struct Diagnostic {
    std::string id;
    std::string stage;
    PairKind kind = PairKind::inadmissible;
    std::string message;
    friend bool operator==(Diagnostic const&, Diagnostic const&) = default;
};

struct ClassificationReport {
    unsigned long prime_bound = default_prime_bound;
    std::vector<SimilarityClass> classes;
    std::vector<FormRecord> per_form;  // catalog order
    std::vector<Diagnostic> diagnostics;

    FormRecord const* find(std::string_view id) const;
    friend bool operator==(ClassificationReport const&, ClassificationReport const&) = default;
};

struct ClassifyOptions {
    unsigned long prime_bound = default_prime_bound;
    bool group_orders = true;
    std::size_t max_group_elements = 1'000'000;
};

/* Everything a single (alpha, beta) pair yields. Throws on failure, with
 * the failing stage in the message. */
struct PairAnalysis {
    IntPolynomial f;
    IntPolynomial g;
    PairClassification classification;
    std::optional<FormConstruction> construction;
    std::optional<CanonicalForm> canonical;
    std::optional<unsigned long> group_order;
};

PairAnalysis analyze_pair(ParameterVector const& alpha, ParameterVector const& beta,
                          ClassifyOptions const& options = {});

/* Groups orthogonal and finite rows by similarity key; every other row,
 * and every row whose analysis throws, lands in diagnostics. */
ClassificationReport classify_catalog(std::vector<CatalogEntry> const& entries,
                                      ClassifyOptions const& options = {});

}  // namespace hyperform

#endif /* HYPERFORM_CLASSIFY_HPP_ */
