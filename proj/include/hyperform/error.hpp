#ifndef HYPERFORM_ERROR_HPP_
#define HYPERFORM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperform {

enum class errc {
    not_cyclotomic_product,
    shared_value,
    not_monic,
    shape_mismatch,
    singular,
    zero_input,
    unfactored,
    dependent_orbit,
    not_invariant,
    degenerate,
    zero_argument,
    not_prime,
    zero_scalar,
    bound_exceeded,
    parse_error,
    duplicate_id,
    bad_rational,
};

std::string_view to_string(errc code);

/* Every failure in the library is reported through this one exception type;
 * the code says which contract was violated. */
class error : public std::runtime_error {
  public:
    error(errc code, std::string detail, std::string stage = {})
        : std::runtime_error(compose(code, detail, stage)),
          code_(code), detail_(std::move(detail)), stage_(std::move(stage)) {}

    errc code() const noexcept { return code_; }
    std::string const& detail() const noexcept { return detail_; }
    /* Pipeline stage that failed, when known ("polynomial", "form", ...). */
    std::string const& stage() const noexcept { return stage_; }

    error at_stage(std::string stage) const { return error(code_, detail_, std::move(stage)); }

  private:
    static std::string compose(errc code, std::string const& detail, std::string const& stage)
    {
        std::string s = stage.empty() ? std::string() : "[" + stage + "] ";
        return s + std::string(to_string(code)) + ": " + detail;
    }

    errc code_;
    std::string detail_;
    std::string stage_;
};

}  // namespace hyperform

#endif /* HYPERFORM_ERROR_HPP_ */
