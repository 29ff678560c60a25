#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sandpiles {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad literals, negative counts, precondition violations
// such as non-partition or non-unimodal arguments.
class BadInput : public Error {
public:
    using Error::Error;
};

// Column 0 could not collapse in the direction the alternating schedule
// demanded. `step` is the 1-based step that failed.
class AlternationStalled : public Error {
public:
    explicit AlternationStalled(std::int64_t step)
        : Error("alternation stalled at step " + std::to_string(step)), step(step) {}
    std::int64_t step;
};

// Same, for the window-restarting variant.
class PseudoStalled : public Error {
public:
    explicit PseudoStalled(std::int64_t step)
        : Error("pseudo-alternation stalled at step " + std::to_string(step)), step(step) {}
    std::int64_t step;
};

// A column became collapsible on both sides where the evolution was required
// to be choice-free.
class AmbivalentColumn : public Error {
public:
    AmbivalentColumn(std::int64_t position, std::int64_t step)
        : Error("column " + std::to_string(position) + " is collapsible on both sides at step " +
                std::to_string(step)),
          position(position),
          step(step) {}
    std::int64_t position;
    std::int64_t step;
};

// State-space walk hit its node budget before closing the space.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::size_t nodes)
        : Error("exploration budget of " + std::to_string(nodes) + " nodes exceeded"), nodes(nodes) {}
    std::size_t nodes;
};

// The requested target is not a fixed-point form of the given weight.
class NotAFixedPointForm : public Error {
public:
    using Error::Error;
};

// Unsupported export format name or format/payload combination.
class UnknownFormat : public Error {
public:
    using Error::Error;
};

// A direction map left an ambivalent column unresolved.
class DirectionMapIncomplete : public Error {
public:
    explicit DirectionMapIncomplete(std::int64_t position)
        : Error("no direction given for ambivalent column " + std::to_string(position)),
          position(position) {}
    std::int64_t position;
};

}  // namespace sandpiles
