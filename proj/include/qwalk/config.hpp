#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

enum class Mode { forward, reverse, ico, ico_step, full_ico };
enum class Observable { dist, spread, td, blp, entropy, concurrence };

std::string_view to_string(Mode m);
std::string_view to_string(Observable o);

/// A numeric value together with the literal it was written as, so configs
/// echo back exactly ("pi/6" stays "pi/6").
struct Literal {
    Complex value;
    std::string text;

    double real() const { return value.real(); }
};

/// Evaluates literals such as "pi/6", "5pi/12", "-0.25*pi", "0.8i",
/// "0.6+0.8i", "1/sqrt(2)". Throws ConfigError on malformed input.
Complex evaluate_literal(std::string_view text);
Literal make_literal(std::string_view text);

struct ExperimentConfig {
    Mode mode = Mode::forward;
    std::size_t period = 0;  // k; 0 until parsed (defaults to thetas.size())
    std::vector<Literal> thetas;
    Literal theta_s = make_literal("pi/4");
    std::size_t steps = 0;
    Literal alpha = make_literal("1/sqrt(2)");
    Literal beta = make_literal("1/sqrt(2)");
    std::vector<int> permutation;  // optional explicit forward block, 1-based
    std::vector<Observable> observables{Observable::spread};
    std::optional<std::size_t> lattice;
    bool allow_wrap = false;
    std::string out;

    std::size_t lattice_size() const { return lattice.value_or(2 * steps + 3); }
    std::vector<double> theta_values() const;
    bool wants(Observable o) const;
};

/// `key = value` lines; '#' starts a comment; lists are comma separated.
/// Unknown keys, malformed values and incompatible mode/parameter
/// combinations raise ConfigError carrying the offending line number.
ExperimentConfig parse_config(std::string_view text);

/// Inverse of parse_config: parse_config(format_config(c)) == c.
std::string format_config(const ExperimentConfig& config);

/// Rebuilds the config from the "# [config]" block of an emitted CSV file.
ExperimentConfig parse_metadata(std::string_view csv_text);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

} // namespace qwalk
