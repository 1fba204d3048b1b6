#pragma once

#include <stdexcept>
#include <string>

namespace besant {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotConvex : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };
struct NotCyclic : Error { using Error::Error; };
struct NotOrthodiagonal : Error { using Error::Error; };
struct CollinearMidpoints : Error { using Error::Error; };

struct DegenerateConic : Error { using Error::Error; };
struct NotEllipse : Error { using Error::Error; };
struct DegenerateLine : Error { using Error::Error; };

struct ParamOutOfRange : Error { using Error::Error; };
struct TrapezoidInput : Error { using Error::Error; };
struct InvalidTrapezoid : Error { using Error::Error; };

struct CollinearVertices : Error { using Error::Error; };
struct InvalidWeights : Error { using Error::Error; };

struct NotBesant : Error { using Error::Error; };
struct NonIsoscelesTrapezoid : Error { using Error::Error; };
struct ConstraintViolation : Error { using Error::Error; };

}  // namespace besant
