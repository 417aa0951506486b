#ifndef HYPERFORM_REPORT_HPP_
#define HYPERFORM_REPORT_HPP_

#include "hyperform/catalog.hpp"
#include "hyperform/classify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperform {

enum class Format { text, json, csv, markdown };

Format parse_format(std::string_view text);  // throws errc::parse_error

/* A catalog field whose transcribed value disagrees with the computation. */
struct Mismatch {
    std::string id;
    std::string field;
    std::string expected;
    std::string computed;
    std::string note;
};

std::vector<Mismatch> check_expectations(std::vector<CatalogEntry> const& entries,
                                         ClassificationReport const& report);

std::string render_json(ClassificationReport const& report);
std::string render_csv(ClassificationReport const& report);
std::string render_markdown(ClassificationReport const& report);
std::string render(ClassificationReport const& report, Format format);

/* Inverse of render_json. Throws errc::parse_error. */
ClassificationReport parse_report_json(std::string_view text);

std::string render_pair(ParameterVector const& alpha, ParameterVector const& beta,
                        PairAnalysis const& analysis, Format format);

/* Exit codes of the command line tool. */
inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_input_error = 2;

/* Load, classify, render to out, list mismatches on err. Returns an exit
 * code. */
int run_classify(std::filesystem::path const& catalog_path, ClassifyOptions const& options,
                 Format format, std::ostream& out, std::ostream& err);

/* Analyze and render one pair. Returns an exit code. */
int run_pair(ParameterVector const& alpha, ParameterVector const& beta,
             ClassifyOptions const& options, Format format, std::ostream& out,
             std::ostream& err);

}  // namespace hyperform

#endif /* HYPERFORM_REPORT_HPP_ */
