#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dfsub {

enum class ErrorKind {
    DivisionByZero,
    EmptyVector,
    RelationNotSupported,
    BothZero,
    ZeroDenominator,
    ZeroDivisor,
    UnknownSymbol,
    ConstantInput,
    EmptyInput,
    ZeroPolynomial,
    NonPolynomialCoefficient,
    NotIterLogExpression,
    EmptyPresentation,
    NotFixed,
    NotCoprime,
    ZeroScale,
    SyntaxError,
    NotIterLog,
    InvalidTower,
    Unsupported,
};

std::string_view error_kind_name(ErrorKind kind);

// Domain error carrying a machine-readable kind. `position` is set by the
// parser (byte offset into the input text).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(message), kind_(kind), position_(position) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> position_;
};

}  // namespace dfsub
