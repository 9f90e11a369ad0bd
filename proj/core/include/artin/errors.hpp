#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Input-level problems: bad files, bad flags, mismatched tables or fields.
// The CLI maps these to exit code 1.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public InputError {
 public:
  ParseError(std::string file, int line, const std::string& what)
      : InputError(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

// Mathematical precondition failures (exit code 2).
class MathError : public std::runtime_error {
 public:
  MathError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class NotArtinianError : public MathError {
 public:
  explicit NotArtinianError(const std::string& what)
      : MathError("NotArtinian", what) {}
};

class ZeroDualGeneratorError : public MathError {
 public:
  ZeroDualGeneratorError() : MathError("ZeroDualGenerator", "dual generator is zero") {}
};

class NonNilpotentError : public MathError {
 public:
  explicit NonNilpotentError(const std::string& what)
      : MathError("NonNilpotent", what) {}
};

class NotLinearError : public MathError {
 public:
  explicit NotLinearError(const std::string& what) : MathError("NotLinear", what) {}
};

class SizeMismatchError : public MathError {
 public:
  explicit SizeMismatchError(const std::string& what)
      : MathError("SizeMismatch", what) {}
};

class InvalidRankSequenceError : public MathError {
 public:
  explicit InvalidRankSequenceError(const std::string& what)
      : MathError("InvalidRankSequence", what) {}
};

class EmptyStratumError : public MathError {
 public:
  explicit EmptyStratumError(const std::string& what)
      : MathError("EmptyStratum", what) {}
};

class IncomparableSamplesError : public MathError {
 public:
  explicit IncomparableSamplesError(const std::string& what)
      : MathError("IncomparableSamples", what) {}
};

class CharTooSmallError : public MathError {
 public:
  explicit CharTooSmallError(const std::string& what)
      : MathError("CharTooSmall", what) {}
};

// Carries a witness pair (f, g) with (f*g) not annihilating G.
class ConditionFailsError : public MathError {
 public:
  ConditionFailsError(std::string f, std::string g, const std::string& what)
      : MathError("ConditionFails", what),
        witness_f_(std::move(f)),
        witness_g_(std::move(g)) {}
  const std::string& witness_f() const { return witness_f_; }
  const std::string& witness_g() const { return witness_g_; }

 private:
  std::string witness_f_;
  std::string witness_g_;
};

class NotFreeExtensionError : public MathError {
 public:
  explicit NotFreeExtensionError(const std::string& what)
      : MathError("NotFreeExtension", what) {}
};

class ZeroParameterError : public MathError {
 public:
  explicit ZeroParameterError(const std::string& what)
      : MathError("ZeroParameter", what) {}
};

// A guaranteed inequality observed to fail (exit code 3; property harness only).
class FalsificationError : public std::runtime_error {
 public:
  explicit FalsificationError(const std::string& what) : std::runtime_error(what) {}
};

// Exit-code contract shared by the CLI and the test harness.
int cli_exit_code(const std::exception& e);

}  // namespace artin
