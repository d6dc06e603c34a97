#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace duplex {

// Exception carrying a stable, machine-readable error name ("NonUniformGrid",
// "ZeroTotalPower", ...) in addition to the human-readable message. The CLI
// reports the name on stderr and maps it to its exit code.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& what) {
    throw Error(std::move(name), what);
}

}  // namespace duplex
