#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bidihuff {

// Base of every domain error raised by the library. The CLI maps these to
// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class KraftError : public Error {
 public:
  enum class Kind { Deficit, Overflow };

  KraftError(Kind kind, std::string sum)
      : Error(std::string(kind == Kind::Deficit ? "KraftDeficit" : "KraftOverflow") +
              ": Kraft sum is " + sum + (kind == Kind::Deficit ? " < 1" : " > 1")),
        kind_(kind),
        sum_(std::move(sum)) {}

  Kind kind() const { return kind_; }
  // Offending sum as an exact fraction "p/q".
  const std::string& sum() const { return sum_; }

 private:
  Kind kind_;
  std::string sum_;
};

// Forward parse ran out of bits inside a codeword. `position` is where that
// codeword starts.
class DecodeError : public Error {
 public:
  enum class Kind { DeadEnd };

  DecodeError(Kind kind, std::size_t position)
      : Error("DeadEnd: incomplete codeword at bit " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// The bit string was not a concatenation of codewords.
class InvalidStream : public Error {
 public:
  using Error::Error;
};

// A structural property of the scenario list was violated during decoding.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::string needed, std::uint64_t cap)
      : Error(what + ": needs " + needed + " but cap is " + std::to_string(cap)),
        needed_(std::move(needed)),
        cap_(cap) {}

  const std::string& needed() const { return needed_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::string needed_;
  std::uint64_t cap_;
};

}  // namespace bidihuff
