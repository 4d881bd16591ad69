#pragma once

#include <stdexcept>
#include <string>

namespace ssna {

// Error categories map onto CLI exit codes: input errors exit 2,
// numerical/degeneracy errors exit 3, everything else exit 4.
enum class errc {
    duplicate_id,
    schema_error,
    empty_corpus,
    empty_matrix,
    not_enough_actors,
    kind_error,
    range_error,
    undefined_correlation,
    rank_error,
    degenerate_input,
    io_error,
    config_error,
    internal,
};

const char* errc_name(errc c);

// 2 = input, 3 = numerical, 4 = internal
int errc_exit_code(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }
    int exit_code() const { return errc_exit_code(code_); }

private:
    errc code_;
};

}  // namespace ssna
