#include "sandpiles/configuration.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace sandpiles {

std::string_view to_string(Model m) {
    switch (m) {
        case Model::Spm: return "spm";
        case Model::Pspm: return "pspm";
        case Model::Sspm: return "sspm";
        case Model::Psspm: return "psspm";
    }
    return "?";
}

std::string_view to_string(Direction d) {
    return d == Direction::Left ? "left" : "right";
}

std::optional<Model> parse_model(std::string_view name) {
    if (name == "spm") return Model::Spm;
    if (name == "pspm") return Model::Pspm;
    if (name == "sspm") return Model::Sspm;
    if (name == "psspm") return Model::Psspm;
    return std::nullopt;
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(c.origin));
    for (Height x : c.heights) mix(static_cast<std::uint64_t>(x));
    return h;
}

std::size_t FormHash::operator()(const Form& f) const noexcept {
    return ConfigurationHash{}(Configuration{f.heights, 0});
}

Configuration single_column(Height n) {
    if (n < 1) throw BadInput("a starting column needs at least one grain");
    return Configuration{{n}, 0};
}

std::int64_t weight(const Heights& s) {
    return std::accumulate(s.begin(), s.end(), std::int64_t{0});
}

std::int64_t weight(const Configuration& c) { return weight(c.heights); }

Height height(const Heights& s) {
    if (s.empty()) throw BadInput("height of an empty window is undefined");
    return *std::max_element(s.begin(), s.end());
}

Height height(const Configuration& c) { return height(c.heights); }

Heights reversed(Heights s) {
    std::reverse(s.begin(), s.end());
    return s;
}

bool is_partition(const Heights& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1) return false;
        if (i > 0 && s[i - 1] < s[i]) return false;
    }
    return true;
}

bool is_unimodal(const Heights& s) {
    for (Height h : s)
        if (h < 1) return false;
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] <= s[i + 1]) ++i;
    while (i + 1 < s.size() && s[i] >= s[i + 1]) ++i;
    return i + 1 >= s.size();
}

Form normalize(const Configuration& c) { return Form{c.heights}; }

Configuration translate(const Configuration& c, Position delta) {
    return Configuration{c.heights, c.origin + delta};
}

Configuration mirror(const Configuration& c) {
    if (c.empty()) return c;
    return Configuration{reversed(c.heights), -c.right_edge()};
}

Form mirror(const Form& f) { return Form{reversed(f.heights)}; }

Direction mirror(Direction d) {
    return d == Direction::Left ? Direction::Right : Direction::Left;
}

std::string to_literal(const Heights& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

std::string to_literal(const Configuration& c) {
    std::string out = to_literal(c.heights);
    if (c.origin != 0) {
        out += '@';
        out += std::to_string(c.origin);
    }
    return out;
}

std::string to_literal(const Form& f) { return to_literal(f.heights); }

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw BadInput("bad " + std::string(what) + " in literal: '" + std::string(text) + "'");
    return value;
}

Heights parse_heights(std::string_view text) {
    Heights out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view piece = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        Height h = parse_int(piece, "height");
        if (h < 1) throw BadInput("heights must be positive, got '" + std::string(piece) + "'");
        out.push_back(h);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Configuration parse_configuration(std::string_view text) {
    if (text.empty()) throw BadInput("empty configuration literal");
    Position origin = 0;
    std::size_t at = text.find('@');
    if (at != std::string_view::npos) {
        origin = parse_int(text.substr(at + 1), "offset");
        text = text.substr(0, at);
    }
    return Configuration{parse_heights(text), origin};
}

Form parse_form(std::string_view text) {
    if (text.empty()) throw BadInput("empty form literal");
    if (text.find('@') != std::string_view::npos)
        throw BadInput("a form literal carries no offset");
    return Form{parse_heights(text)};
}

}  // namespace sandpiles
