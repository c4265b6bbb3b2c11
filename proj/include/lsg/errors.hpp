#ifndef LSG_ERRORS_HPP
#define LSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lsg {

// Base for all domain errors. `code` feeds the CLI exit-code mapping:
// invalid input -> 2, guard bound exceeded -> 3.
struct Error : std::runtime_error {
    enum class Code { invalid_input, too_large, internal };
    Code code;
    Error(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(Code::invalid_input, msg) {}
};

// Space axioms failed; names the first failing pair.
struct AxiomViolation : InvalidInput {
    std::string x, y;
    AxiomViolation(std::string x_, std::string y_, const std::string& detail)
        : InvalidInput("AxiomViolation at (" + x_ + ", " + y_ + "): " + detail),
          x(std::move(x_)),
          y(std::move(y_)) {}
};

struct UnknownPoint : InvalidInput {
    explicit UnknownPoint(const std::string& name) : InvalidInput("UnknownPoint: " + name) {}
};

struct InvalidPartition : InvalidInput {
    explicit InvalidPartition(const std::string& msg) : InvalidInput("InvalidPartition: " + msg) {}
};

struct NotContinuous : InvalidInput {
    explicit NotContinuous(const std::string& msg) : InvalidInput("NotContinuous: " + msg) {}
};

// Groupoid table validation failures; the message carries the first witness.
struct AssociativityViolation : InvalidInput {
    explicit AssociativityViolation(const std::string& msg)
        : InvalidInput("AssociativityViolation: " + msg) {}
};
struct UnitViolation : InvalidInput {
    explicit UnitViolation(const std::string& msg) : InvalidInput("UnitViolation: " + msg) {}
};
struct InverseViolation : InvalidInput {
    explicit InverseViolation(const std::string& msg) : InvalidInput("InverseViolation: " + msg) {}
};
struct EndpointMismatch : InvalidInput {
    explicit EndpointMismatch(const std::string& msg) : InvalidInput("EndpointMismatch: " + msg) {}
};

struct CarrierMismatch : InvalidInput {
    explicit CarrierMismatch(const std::string& msg) : InvalidInput("CarrierMismatch: " + msg) {}
};

struct UnknownObject : InvalidInput {
    explicit UnknownObject(const std::string& name) : InvalidInput("UnknownObject: " + name) {}
};

struct NotEquivariant : InvalidInput {
    explicit NotEquivariant(const std::string& msg) : InvalidInput("NotEquivariant: " + msg) {}
};
struct NonFreeAction : InvalidInput {
    explicit NonFreeAction(const std::string& msg) : InvalidInput("NonFreeAction: " + msg) {}
};

struct PointNotInCarrier : InvalidInput {
    explicit PointNotInCarrier(const std::string& msg)
        : InvalidInput("PointNotInCarrier: " + msg) {}
};

struct BasepointMismatch : InvalidInput {
    explicit BasepointMismatch(const std::string& msg)
        : InvalidInput("BasepointMismatch: " + msg) {}
};

struct CompViolation : InvalidInput {
    int chart_i, chart_j;
    std::string point;
    CompViolation(int i, int j, std::string x)
        : InvalidInput("CompViolation: charts " + std::to_string(i) + " and " +
                       std::to_string(j) + " disagree at " + x),
          chart_i(i),
          chart_j(j),
          point(std::move(x)) {}
};

struct NotPathCompatible : InvalidInput {
    int chart_i, chart_j;
    std::string point;
    NotPathCompatible(int i, int j, std::string x, const std::string& detail)
        : InvalidInput("NotPathCompatible: charts " + std::to_string(i) + " and " +
                       std::to_string(j) + " at " + x + ": " + detail),
          chart_i(i),
          chart_j(j),
          point(std::move(x)) {}
};

struct NotAnAtlas : InvalidInput {
    explicit NotAnAtlas(const std::string& msg) : InvalidInput("NotAnAtlas: " + msg) {}
};

struct NotARetraction : InvalidInput {
    explicit NotARetraction(const std::string& msg) : InvalidInput("NotARetraction: " + msg) {}
};

struct NotIdentityOnObjects : InvalidInput {
    explicit NotIdentityOnObjects(const std::string& msg)
        : InvalidInput("NotIdentityOnObjects: " + msg) {}
};

struct NoSection : InvalidInput {
    explicit NoSection(const std::string& msg) : InvalidInput("NoSection: " + msg) {}
};

struct NonComparableStep : InvalidInput {
    explicit NonComparableStep(const std::string& msg)
        : InvalidInput("NonComparableStep: " + msg) {}
};

struct MissingGamma : InvalidInput {
    explicit MissingGamma(const std::string& msg) : InvalidInput("MissingGamma: " + msg) {}
};

struct NotFlat : InvalidInput {
    int chart;
    NotFlat(int chart_, const std::string& msg)
        : InvalidInput("NotFlat: chart " + std::to_string(chart_) + ": " + msg), chart(chart_) {}
};

struct OverlapMismatch : InvalidInput {
    int chart_i, chart_j;
    std::string point;
    OverlapMismatch(int i, int j, std::string x)
        : InvalidInput("OverlapMismatch: charts " + std::to_string(i) + " and " +
                       std::to_string(j) + " at " + x),
          chart_i(i),
          chart_j(j),
          point(std::move(x)) {}
};

// Guard bound exceeded; never silent truncation.
struct TooLarge : Error {
    int bound;
    TooLarge(const std::string& what_exceeded, int bound_)
        : Error(Code::too_large,
                "TooLarge: " + what_exceeded + " exceeds bound " + std::to_string(bound_)),
          bound(bound_) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error(Code::invalid_input, "ParseError: line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

}  // namespace lsg

#endif
