#pragma once

#include <stdexcept>
#include <string>

namespace trapion {

// Base of every error raised by the library. Input errors (bad files, bad
// arguments) derive from InputError so the CLI can map them to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

// state-sim
class DimensionOverflow : public InputError {
public:
    using InputError::InputError;
};
class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};
class ShapeMismatch : public InputError {
public:
    using InputError::InputError;
};
class NonUnitaryMatrix : public InputError {
public:
    using InputError::InputError;
};
class BadTargets : public InputError {
public:
    using InputError::InputError;
};
// Raised when a sideband pulse would push amplitude past the phonon cutoff.
class TruncationLeakage : public Error {
public:
    using Error::Error;
};

// number theory / rsa / shor
class NotCoprime : public InputError {
public:
    using InputError::InputError;
};
class NoInverse : public InputError {
public:
    using InputError::InputError;
};
class TooLargeForBruteForce : public InputError {
public:
    using InputError::InputError;
};
class FixedExponentNotCoprime : public InputError {
public:
    using InputError::InputError;
};
class MessageOutOfRange : public InputError {
public:
    using InputError::InputError;
};
class RegisterTooSmall : public InputError {
public:
    using InputError::InputError;
};
class PrecheckFailed : public InputError {
public:
    using InputError::InputError;
};
class RetriesExhausted : public Error {
public:
    using Error::Error;
};

// resources
class MissingParameters : public InputError {
public:
    using InputError::InputError;
};

}  // namespace trapion
