#pragma once

#include <stdexcept>
#include <string>

namespace qspectra {

enum class Errc {
    length_mismatch,
    bad_character,
    missing_header,
    unsupported_n,
    size_mismatch,
    not_bent,
    too_large,
    too_many_qubits,
    index_out_of_range,
    bad_weight,
    no_good_support,
    simulation_inconsistency,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace qspectra
