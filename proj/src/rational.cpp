#include "pltop/rational.hpp"

#include <cctype>

namespace pltop {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
        case ErrorCode::NonManifoldFace: return "NonManifoldFace";
        case ErrorCode::ImproperIntersection: return "ImproperIntersection";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotOrientableInput: return "NotOrientableInput";
        case ErrorCode::NotSubcomplex: return "NotSubcomplex";
        case ErrorCode::MissingVertexImage: return "MissingVertexImage";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
        case ErrorCode::ImageEscapesDomain: return "ImageEscapesDomain";
        case ErrorCode::RefinementExhausted: return "RefinementExhausted";
        case ErrorCode::NotSimplicial: return "NotSimplicial";
        case ErrorCode::OrientationMissing: return "OrientationMissing";
        case ErrorCode::NotBijection: return "NotBijection";
        case ErrorCode::BoundaryNotPreserved: return "BoundaryNotPreserved";
        case ErrorCode::NotInjective: return "NotInjective";
        case ErrorCode::InconsistentSigns: return "InconsistentSigns";
        case ErrorCode::NoRoomOnSphere: return "NoRoomOnSphere";
        case ErrorCode::ChoiceDisagreement: return "ChoiceDisagreement";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotStarShaped: return "NotStarShaped";
        case ErrorCode::CenterOnBoundary: return "CenterOnBoundary";
        case ErrorCode::ToleranceNotReached: return "ToleranceNotReached";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::RationalParseError: return "RationalParseError";
        case ErrorCode::GeometryError: return "GeometryError";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "UnknownError";
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) fail(ErrorCode::RationalParseError, "empty rational literal");
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid_int(num) || !valid_int(den))
        fail(ErrorCode::RationalParseError, "malformed rational literal '" + s + "'");
    Integer n(num), d(den);
    if (d == 0) fail(ErrorCode::RationalParseError, "zero denominator in '" + s + "'");
    return Rational(n, d);
}

std::string format_rational(const Rational& r) {
    Integer n = numerator(r), d = denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace pltop
