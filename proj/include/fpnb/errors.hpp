#ifndef FPNB_ERRORS_HPP
#define FPNB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpnb {

// Malformed input data (corpus files, word lists, model files). Carries the
// offending location so CLI diagnostics can point at a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& reason)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + reason), line_(line) {}

    explicit ParseError(const std::string& reason) : std::runtime_error(reason), line_(0) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace fpnb

#endif  // FPNB_ERRORS_HPP
