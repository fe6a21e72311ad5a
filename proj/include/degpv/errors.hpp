#ifndef DEGPV_ERRORS_HPP
#define DEGPV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degpv {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// residue_at hit a pole of order >= 2 after cancellation.
struct HigherOrderPole : Error {
    explicit HigherOrderPole(const std::string& msg) : Error(msg) {}
};

// A precondition on the input data fails (t = 0, zero denominator, ...).
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

// Chart transition requested outside the chart overlap (b0 = 0 or b1 = 0).
struct NotInOverlap : Error {
    explicit NotInOverlap(const std::string& msg) : Error(msg) {}
};

// beta - alpha is a negative integer: the series recursion has no unique solution.
struct ResonantExponents : Error {
    explicit ResonantExponents(const std::string& msg) : Error(msg) {}
};

// q hit {0,1} (or t hit 0): a fixed singularity of the Painleve equations.
struct FixedSingularity : Error {
    explicit FixedSingularity(const std::string& msg) : Error(msg) {}
};

// Adaptive step size underflowed, typically at a movable pole.
struct StepFailure : Error {
    explicit StepFailure(const std::string& msg) : Error(msg) {}
};

// Integration path passes too close to a pole of the connection.
struct PathTooClose : Error {
    explicit PathTooClose(const std::string& msg) : Error(msg) {}
};

// Config file could not be parsed; carries a line/column diagnostic.
struct ConfigError : Error {
    int line;
    int column;
    ConfigError(int line_, int col_, const std::string& msg)
        : Error("config:" + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

} // namespace degpv

#endif
