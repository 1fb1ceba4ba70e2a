#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace dce {

using Vertex = std::int32_t;

/// Unordered vertex pair, stored with u < v.
struct VertexPair {
    Vertex u = 0;
    Vertex v = 0;

    VertexPair() = default;
    VertexPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

enum class ErrorCode {
    InvalidGraph,
    NotClusterGraph,
    SizeMismatch,
    NotApplicable,
    TooLarge,
    KernelTooLargeForOracle,
    WrongVariant,
    MalformedParts,
    PreconditionViolated,
    InvalidSource,
    InvalidInstance,
    Parse,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::NotClusterGraph: return "NotClusterGraph";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::KernelTooLargeForOracle: return "KernelTooLargeForOracle";
        case ErrorCode::WrongVariant: return "WrongVariant";
        case ErrorCode::MalformedParts: return "MalformedParts";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::InvalidSource: return "InvalidSource";
        case ErrorCode::InvalidInstance: return "InvalidInstance";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

}  // namespace dce
