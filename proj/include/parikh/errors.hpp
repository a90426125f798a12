#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parikh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidLetter : public Error {
public:
    explicit InvalidLetter(char letter)
        : Error(std::string("letter '") + letter + "' is not in the alphabet"), letter_(letter) {}
    char letter() const noexcept { return letter_; }

private:
    char letter_;
};

/// A letter count is not representable in the basis (Strict mode).
class OutOfRangeCount : public Error {
public:
    OutOfRangeCount(char letter, std::uint64_t count, std::size_t n)
        : Error(std::string("count of letter '") + letter + "' is " + std::to_string(count) +
                ", not below basis " + std::to_string(n)),
          letter_(letter), count_(count) {}
    char letter() const noexcept { return letter_; }
    std::uint64_t count() const noexcept { return count_; }

private:
    char letter_;
    std::uint64_t count_;
};

/// A vector component is not representable in the basis (Strict mode).
class OutOfRangeComponent : public Error {
public:
    OutOfRangeComponent(std::size_t index, std::uint64_t value, std::size_t n)
        : Error("component " + std::to_string(index) + " is " + std::to_string(value) +
                ", not below basis " + std::to_string(n)),
          index_(index), value_(value) {}
    std::size_t index() const noexcept { return index_; }
    std::uint64_t value() const noexcept { return value_; }

private:
    std::size_t index_;
    std::uint64_t value_;
};

class StepLimitExceeded : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NotInTwoCycle : public Error {
public:
    using Error::Error;
};

class NoPreimage : public Error {
public:
    using Error::Error;
};

class NoAttractor : public Error {
public:
    using Error::Error;
};

class DepthLimitExceeded : public Error {
public:
    using Error::Error;
};

class Unrepresentable : public Error {
public:
    using Error::Error;
};

} // namespace parikh
