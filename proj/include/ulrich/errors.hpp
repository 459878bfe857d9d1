#ifndef ULRICH_ERRORS_HPP
#define ULRICH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ulrich {

/// Error codes raised by the library. Input validation failures carry the
/// code named in the operation contract; `internal` marks consistency
/// failures that can only come from a bug in this library.
enum class errc {
    empty_generators,
    invalid_generator,
    not_coprime,
    not_member,
    full_semigroup,
    criteria_disagree,
    ambient_mismatch,
    not_integral,
    not_in_ideal,
    not_proper,
    bound_too_small,
    not_ulrich_input,
    not_max_embedding_dim,
    even_b,
    b_not_in_base,
    b_too_small,
    construction_failed,
    internal,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail);
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] void raise(errc code, const std::string& detail);

} // namespace ulrich

#endif
