#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sandpiles/errors.hpp"

namespace sandpiles {

using Height = std::int64_t;
using Position = std::int64_t;
using Heights = std::vector<Height>;

enum class Model { Spm, Pspm, Sspm, Psspm };
enum class Direction { Left, Right };

std::string_view to_string(Model m);
std::string_view to_string(Direction d);
std::optional<Model> parse_model(std::string_view name);

// A contiguous window of positive columns on the line. `origin` is the
// absolute position of heights.front(); the single starting column sits at 0.
struct Configuration {
    Heights heights;
    Position origin = 0;

    bool empty() const { return heights.empty(); }
    std::int64_t size() const { return static_cast<std::int64_t>(heights.size()); }
    Position left_edge() const { return origin; }
    Position right_edge() const { return origin + size() - 1; }
    bool contains(Position p) const { return !empty() && p >= left_edge() && p <= right_edge(); }
    // Height at an absolute position, 0 outside the window.
    Height at(Position p) const { return contains(p) ? heights[static_cast<std::size_t>(p - origin)] : 0; }

    friend bool operator==(const Configuration&, const Configuration&) = default;
    // Canonical node order: (origin, heights) lexicographic.
    friend std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) {
        if (auto c = a.origin <=> b.origin; c != 0) return c;
        return a.heights <=> b.heights;
    }
};

// Translation class of a configuration: the height sequence alone.
struct Form {
    Heights heights;

    friend bool operator==(const Form&, const Form&) = default;
    friend auto operator<=>(const Form&, const Form&) = default;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept;
};
struct FormHash {
    std::size_t operator()(const Form& f) const noexcept;
};

Configuration single_column(Height n);  // (n) at position 0; throws BadInput for n < 1

std::int64_t weight(const Heights& s);
std::int64_t weight(const Configuration& c);
Height height(const Heights& s);        // tallest column; throws BadInput on an empty window
Height height(const Configuration& c);

Heights reversed(Heights s);
bool is_partition(const Heights& s);    // positive and non-increasing; empty counts
bool is_unimodal(const Heights& s);     // positive, rises then falls; empty counts

Form normalize(const Configuration& c);
Configuration translate(const Configuration& c, Position delta);
Configuration mirror(const Configuration& c);  // reflect through 0: position p -> -p
Form mirror(const Form& f);
Direction mirror(Direction d);

// Literal syntax: comma-separated heights with an optional @offset suffix,
// e.g. "1,2,4,3,2,1@-2". Emission omits "@0"; parsing accepts either spelling.
std::string to_literal(const Configuration& c);
std::string to_literal(const Form& f);
std::string to_literal(const Heights& s);
Configuration parse_configuration(std::string_view text);  // throws BadInput
Form parse_form(std::string_view text);                    // throws BadInput; rejects '@'

}  // namespace sandpiles
