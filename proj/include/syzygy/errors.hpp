#ifndef SYZYGY_ERRORS_HPP
#define SYZYGY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syzygy {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct CompositionNotZero : Error {
    explicit CompositionNotZero(const std::string& msg) : Error("composition is not zero: " + msg) {}
};

struct NotInSpan : Error {
    explicit NotInSpan(const std::string& msg) : Error("vector not in span: " + msg) {}
};

struct InvalidRange : Error {
    explicit InvalidRange(const std::string& msg) : Error("invalid range: " + msg) {}
};

struct ZeroFunctional : Error {
    explicit ZeroFunctional(const std::string& msg) : Error("zero functional: " + msg) {}
};

struct PieceUnavailable : Error {
    explicit PieceUnavailable(const std::string& msg) : Error("graded piece unavailable: " + msg) {}
};

struct HilbertMismatch : Error {
    HilbertMismatch(int degree, long got, long expected)
        : Error("Hilbert function mismatch in degree " + std::to_string(degree) + ": got " +
                std::to_string(got) + ", expected " + std::to_string(expected)),
          degree(degree), got(got), expected(expected) {}
    int degree;
    long got;
    long expected;
};

struct CharTwoUnsupported : Error {
    explicit CharTwoUnsupported(const std::string& msg) : Error("characteristic 2 unsupported: " + msg) {}
};

struct CharTooSmall : Error {
    explicit CharTooSmall(const std::string& msg) : Error("characteristic too small: " + msg) {}
};

struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(const std::string& msg) : Error("unsupported degree: " + msg) {}
};

struct ProxyDisagreement : Error {
    explicit ProxyDisagreement(const std::string& msg) : Error("proxy primes disagree: " + msg) {}
};

struct ReductionFailure : Error {
    explicit ReductionFailure(const std::string& msg) : Error("linear section reduction failed: " + msg) {}
};

}  // namespace syzygy

#endif
