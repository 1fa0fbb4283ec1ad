#pragma once

#include <stdexcept>
#include <string>

namespace tyche {

// invalid-argument and out-of-range conditions use the std exceptions directly;
// the protocol-specific failure modes get their own types so tests can tell them apart.

struct DuplicateMessageError : std::runtime_error {
    explicit DuplicateMessageError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientEscrowError : std::runtime_error {
    explicit InsufficientEscrowError(const std::string& what) : std::runtime_error(what) {}
};

struct PhaseError : std::runtime_error {
    explicit PhaseError(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateActionError : std::runtime_error {
    explicit DuplicateActionError(const std::string& what) : std::runtime_error(what) {}
};

struct DoubleSpendError : std::runtime_error {
    explicit DoubleSpendError(const std::string& what) : std::runtime_error(what) {}
};

struct ProofError : std::runtime_error {
    explicit ProofError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tyche
