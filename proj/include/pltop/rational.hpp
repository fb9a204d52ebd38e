#ifndef PLTOP_RATIONAL_HPP
#define PLTOP_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pltop {

// Exact arbitrary-precision rational. All kernel arithmetic goes through
// this type; no floating point ever enters a predicate.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using VecQ = std::vector<Rational>;

enum class ErrorCode {
    DegenerateSimplex,
    NonManifoldFace,
    ImproperIntersection,
    NotConnected,
    NotOrientableInput,
    NotSubcomplex,
    MissingVertexImage,
    ArityMismatch,
    PointOutsideDomain,
    ImageEscapesDomain,
    RefinementExhausted,
    NotSimplicial,
    OrientationMissing,
    NotBijection,
    BoundaryNotPreserved,
    NotInjective,
    InconsistentSigns,
    NoRoomOnSphere,
    ChoiceDisagreement,
    NotSymmetric,
    NotStarShaped,
    CenterOnBoundary,
    ToleranceNotReached,
    SchemaError,
    RationalParseError,
    GeometryError,
    InternalError,
};

const char* error_code_name(ErrorCode c);

class PltopError : public std::runtime_error {
public:
    PltopError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw PltopError(code, what);
}

// Parses "p/q" or "p". Rejects zero denominators and malformed input.
Rational parse_rational(const std::string& s);

// Canonical "p/q" form ("p" when q == 1), denominator positive.
std::string format_rational(const Rational& r);

inline int sgn(const Rational& r) { return r.sign(); }

}  // namespace pltop

#endif
