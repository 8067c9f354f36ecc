#include "dfsub/errors.hpp"

namespace dfsub {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::EmptyVector: return "EmptyVector";
        case ErrorKind::RelationNotSupported: return "RelationNotSupported";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::ZeroDivisor: return "ZeroDivisor";
        case ErrorKind::UnknownSymbol: return "UnknownSymbol";
        case ErrorKind::ConstantInput: return "ConstantInput";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NonPolynomialCoefficient: return "NonPolynomialCoefficient";
        case ErrorKind::NotIterLogExpression: return "NotIterLogExpression";
        case ErrorKind::EmptyPresentation: return "EmptyPresentation";
        case ErrorKind::NotFixed: return "NotFixed";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::ZeroScale: return "ZeroScale";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NotIterLog: return "NotIterLog";
        case ErrorKind::InvalidTower: return "InvalidTower";
        case ErrorKind::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

}  // namespace dfsub
