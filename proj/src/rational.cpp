#include "canonlab/rational.hpp"

#include "canonlab/errors.hpp"

namespace canonlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateBranch: return "DuplicateBranch";
        case ErrorCode::DanglingBranch: return "DanglingBranch";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::EmptySide: return "EmptySide";
        case ErrorCode::TooManyComponents: return "TooManyComponents";
        case ErrorCode::TwistOnNode: return "TwistOnNode";
        case ErrorCode::InvalidBundle: return "InvalidBundle";
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::ZeroSpace: return "ZeroSpace";
        case ErrorCode::BundleMismatch: return "BundleMismatch";
        case ErrorCode::ExpressFailure: return "ExpressFailure";
        case ErrorCode::GenusTooSmall: return "GenusTooSmall";
        case ErrorCode::NotAPencil: return "NotAPencil";
        case ErrorCode::NotGloballyGenerated: return "NotGloballyGenerated";
        case ErrorCode::TooFewSections: return "TooFewSections";
        case ErrorCode::WrongCardinality: return "WrongCardinality";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::ModpMismatch: return "ModpMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();  // canonical "p" or "p/q", q > 0
}

Param param_from_string(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return Param::inf();
    return Param::fin(rational_from_string(text));
}

std::string param_to_string(const Param& p) {
    return p.infinite ? "inf" : rational_to_string(p.value);
}

}  // namespace canonlab
