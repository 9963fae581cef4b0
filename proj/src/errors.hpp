#ifndef TDA_ERRORS_HPP
#define TDA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tda {

// Bad user input: malformed files, out-of-range parameters, invalid
// simplices. The CLI maps this to exit code 2, everything else to 1.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : invalid_input {
    parse_error(const std::string& msg, std::size_t row)
        : invalid_input(msg + " (row " + std::to_string(row + 1) + ")"), row(row) {}
    std::size_t row;
};

} // namespace tda

#endif
