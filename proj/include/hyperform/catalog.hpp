#ifndef HYPERFORM_CATALOG_HPP_
#define HYPERFORM_CATALOG_HPP_

#include "hyperform/cyclotomic.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyperform {

enum class Nature { arithmetic, thin, unknown, finite };

std::string_view to_string(Nature n);
Nature parse_nature(std::string_view text);  // throws errc::parse_error

struct CatalogEntry {
    std::string id;
    ParameterVector alpha;
    ParameterVector beta;
    std::optional<std::vector<Integer>> expected_first_row;
    std::optional<std::vector<int>> expected_hasse;  // at 2, 3, 5, 7, 11
    Nature nature = Nature::unknown;
    std::string source;
    std::optional<unsigned long> expected_order;
};

/* One JSON object per line:
 *   {"id":"A32-01","alpha":["0",...],"beta":["1/2",...],
 *    "expected_first_row":[57,...],"expected_hasse":[-1,...],
 *    "nature":"Arithmetic","source":"...","expected_order":160}
 * Blank lines are skipped. Errors carry the 1-based line number:
 * errc::parse_error, errc::duplicate_id, errc::bad_rational. An input with
 * no entries is a parse error. */
std::vector<CatalogEntry> parse_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog(std::filesystem::path const& path);

std::string serialize_entry(CatalogEntry const& e);

}  // namespace hyperform

#endif /* HYPERFORM_CATALOG_HPP_ */
