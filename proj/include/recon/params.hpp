#pragma once

#include <array>
#include <string_view>

#include "recon/error.hpp"

namespace recon {

/// The ten vertex-set parameters. The first seven are minimizing (feasible
/// sets closed under supersets), the last three maximizing (closed under
/// subsets).
enum class ParameterKind {
    domination,
    power_domination,
    zero_forcing,
    psd_forcing,
    skew_forcing,
    vertex_cover,
    connected_domination,
    independence,
    irredundance,
    zf_irredundance,
};

enum class Direction { x_min, y_max };

struct KindInfo {
    Direction direction;
    bool robust;          // satisfies the (n-1)-set/singleton and component axioms
    int value_at_k1;      // parameter value on the one-vertex graph
    std::string_view cli_name;
    std::string_view display_name;
    std::string_view symbol;
};

inline constexpr std::array<ParameterKind, 10> all_kinds = {
    ParameterKind::domination,        ParameterKind::power_domination,
    ParameterKind::zero_forcing,      ParameterKind::psd_forcing,
    ParameterKind::skew_forcing,      ParameterKind::vertex_cover,
    ParameterKind::connected_domination, ParameterKind::independence,
    ParameterKind::irredundance,      ParameterKind::zf_irredundance,
};

constexpr KindInfo kind_info(ParameterKind k) {
    switch (k) {
        case ParameterKind::domination:
            return {Direction::x_min, true, 1, "dom", "domination", "gamma"};
        case ParameterKind::power_domination:
            return {Direction::x_min, true, 1, "pd", "power domination", "pd"};
        case ParameterKind::zero_forcing:
            return {Direction::x_min, true, 1, "zf", "standard zero forcing", "Z"};
        case ParameterKind::psd_forcing:
            return {Direction::x_min, true, 1, "psd", "PSD zero forcing", "Z+"};
        case ParameterKind::skew_forcing:
            return {Direction::x_min, true, 0, "skew", "skew zero forcing", "Z-"};
        case ParameterKind::vertex_cover:
            return {Direction::x_min, true, 0, "vc", "vertex cover", "tau"};
        case ParameterKind::connected_domination:
            return {Direction::x_min, false, 1, "cdom", "connected domination", "gamma_c"};
        case ParameterKind::independence:
            return {Direction::y_max, true, 1, "ind", "independence", "alpha"};
        case ParameterKind::irredundance:
            return {Direction::y_max, true, 1, "ir", "irredundance", "IR"};
        case ParameterKind::zf_irredundance:
            return {Direction::y_max, true, 1, "zir", "zero forcing irredundance", "ZIR"};
    }
    return {Direction::x_min, false, 0, "", "", ""};
}

constexpr Direction direction_of(ParameterKind k) { return kind_info(k).direction; }
constexpr bool is_x_kind(ParameterKind k) { return direction_of(k) == Direction::x_min; }

inline ParameterKind kind_from_name(std::string_view name) {
    for (ParameterKind k : all_kinds)
        if (kind_info(k).cli_name == name) return k;
    fail(Errc::bad_argument, "unknown parameter kind: " + std::string(name));
}

struct ParameterValues {
    ParameterKind kind;
    int value;     // X(G) or Y(G)
    int extremal;  // upper X number (max minimal) or lower Y number (min maximal)
};

}  // namespace recon
