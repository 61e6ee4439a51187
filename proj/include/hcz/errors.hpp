#pragma once

#include <stdexcept>
#include <string>

namespace hcz {

// Every library error carries a short tag so the CLI can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& what)
        : std::runtime_error(tag + ": " + what), tag_(std::move(tag)) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

// Input outside the theorem hypotheses; `which` is "a", "b", "c" or "hypothesis".
class AssumptionError : public Error {
public:
    AssumptionError(std::string tag, std::string which, const std::string& what)
        : Error(std::move(tag), "assumption " + which + " violated: " + what),
          which_(std::move(which)) {}
    const std::string& which() const { return which_; }

private:
    std::string which_;
};

}  // namespace hcz
