#pragma once

#include <stdexcept>
#include <string>

namespace cbnobs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the text-format parser. line/col are 1-based; line 0 means the
// problem concerns the file as a whole (e.g. a missing update line).
struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int col_);
    int line = 0;
    int col = 0;
};

}  // namespace cbnobs
