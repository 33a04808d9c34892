#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace legendrian {

// Domain error with a stable machine-readable code.  The CLI maps codes to
// exit status 1 and prints them verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& w) : Error("InvalidInput", w) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w) : Error("DivisionByZero", w) {}
};
struct Undefined : Error {
    explicit Undefined(const std::string& w) : Error("Undefined", w) {}
};
struct ConstantG : Error {
    explicit ConstantG(const std::string& w) : Error("ConstantG", w) {}
};
struct NotRepresentable : Error {
    explicit NotRepresentable(const std::string& w) : Error("NotRepresentable", w) {}
};
struct DegenerateCurve : Error {
    explicit DegenerateCurve(const std::string& w) : Error("DegenerateCurve", w) {}
};
struct HypothesisViolation : Error {
    explicit HypothesisViolation(const std::string& w) : Error("HypothesisViolation", w) {}
};
struct GridTooSmall : Error {
    explicit GridTooSmall(const std::string& w) : Error("GridTooSmall", w) {}
};
struct EmptyDomain : Error {
    explicit EmptyDomain(const std::string& w) : Error("EmptyDomain", w) {}
};
struct PoleOnSurface : Error {
    explicit PoleOnSurface(const std::string& w) : Error("PoleOnSurface", w) {}
};
struct ParseError : Error {
    ParseError(const std::string& w, std::size_t position)
        : Error("ParseError", w + " at position " + std::to_string(position)),
          pos(position) {}
    std::size_t pos;
};

}  // namespace legendrian
