#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftqc {

// Configuration or input-file problems. The CLI maps these to exit code 2;
// every other std::exception maps to exit code 1 (domain error).
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// QASM syntax problem; carries the 1-based source line.
class parse_error : public std::invalid_argument {
  public:
    parse_error(std::size_t line, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

}  // namespace ftqc
