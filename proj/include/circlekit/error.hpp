#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace circlekit {

// Domain error carrying a stable machine-readable name ("OddLength",
// "TooLarge", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, std::string what)
      : std::runtime_error(name + ": " + what),
        name_(std::move(name)),
        message_(std::move(what)) {}

  const std::string& name() const noexcept { return name_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string name_;
  std::string message_;
};

[[noreturn]] inline void fail(std::string name, const std::string& what) {
  throw Error(std::move(name), what);
}

}  // namespace circlekit
