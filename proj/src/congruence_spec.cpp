#include "supercong/congruence_spec.hpp"

#include <algorithm>
#include <utility>

namespace supercong {

std::string_view to_string(Status s) { return s == Status::Proven ? "PROVEN" : "CONJECTURAL"; }

namespace {

CongruenceSpec make(std::string id, std::vector<Frac> num, std::array<std::int64_t, 3> weight, Frac z,
                    Limit limit, unsigned mod_exp, RhsSpec rhs, std::uint32_t p_min, Status status) {
    CongruenceSpec s;
    s.id = std::move(id);
    s.den_params.assign(num.size(), Frac(1));
    s.num_params = std::move(num);
    s.weight = weight;
    s.z = z;
    s.limit = limit;
    s.mod_exp = mod_exp;
    s.rhs = rhs;
    s.p_min = p_min;
    s.status = status;
    return s;
}

std::vector<CongruenceSpec> build_registry() {
    const Frac h(1, 2);
    const std::vector<Frac> half3{h, h, h};
    const std::vector<Frac> half5{h, h, h, h, h};
    const std::vector<Frac> quarter{h, Frac(1, 4), Frac(3, 4)};
    const std::vector<Frac> third{h, Frac(1, 3), Frac(2, 3)};
    const std::vector<Frac> mixed5{h, Frac(1, 3), Frac(2, 3), Frac(1, 4), Frac(3, 4)};
    constexpr auto P = Status::Proven;
    constexpr auto C = Status::Conjectural;
    constexpr auto F = Limit::Full;
    constexpr auto H = Limit::Half;

    return {
        make("J1a", half3, {1, 3, 0}, Frac(4), F, 3, {Frac(1), {}, 1}, 3, P),
        make("J1", half3, {1, 3, 0}, Frac(4), H, 3, {Frac(1), {}, 1}, 3, P),
        make("J2a", half5, {1, 6, 10}, Frac(-4), F, 5, {Frac(1), {}, 2}, 5, P),
        make("J2", half5, {1, 6, 10}, Frac(-4), H, 5, {Frac(1), {}, 2}, 5, P),
        make("zu3", half3, {1, 3, 0}, Frac(-8), F, 3, {Frac(1), Frac(-1), 1}, 3, P),
        make("zu3-half", half3, {1, 3, 0}, Frac(-8), H, 3, {Frac(1), Frac(-1), 1}, 3, P),
        make("J4", half3, {1, 3, 0}, Frac(-8), F, 3, {Frac(1), Frac(-1), 1}, 3, P),
        make("zu2", half3, {8, 21, 0}, Frac(64), F, 3, {Frac(8), {}, 1}, 3, P),
        make("zu2-half", half3, {8, 21, 0}, Frac(64), H, 3, {Frac(8), {}, 1}, 3, P),
        make("zu4", quarter, {1, 5, 0}, Frac(-16, 9), F, 3, {Frac(1), Frac(-3), 1}, 5, C),
        make("zun", quarter, {8, 35, 0}, Frac(256, 81), F, 3, {Frac(8), {}, 1}, 5, C),
        make("zu5", third, {3, 11, 0}, Frac(27, 16), F, 3, {Frac(3), {}, 1}, 3, C),
        make("5F4-zu2", half5, {32, 160, 205}, Frac(-1024), F, 5, {Frac(32), {}, 2}, 5, C),
        make("5F4-zu2-half", half5, {32, 160, 205}, Frac(-1024), H, 5, {Frac(32), {}, 2}, 5, C),
        make("5F4-zu4", mixed5, {9, 75, 172}, Frac(-27, 16), F, 5, {Frac(9), {}, 2}, 3, C),
    };
}

const std::pair<std::string_view, std::string_view> kAliases[] = {
    {"J1-half", "J1"},     {"J2-half", "J2"},   {"J1a-full", "J1a"},
    {"J2a-full", "J2a"},   {"zu3-full", "zu3"}, {"zu2-full", "zu2"},
    {"zu5-full", "zu5"},   {"5F4-zu2-full", "5F4-zu2"},
};

}  // namespace

const std::vector<CongruenceSpec>& congruence_specs() {
    static const std::vector<CongruenceSpec> registry = build_registry();
    return registry;
}

const CongruenceSpec* try_find_congruence(std::string_view id) {
    for (const auto& [alias, target] : kAliases)
        if (alias == id) id = target;
    const auto& reg = congruence_specs();
    const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& s) { return s.id == id; });
    return it == reg.end() ? nullptr : &*it;
}

const CongruenceSpec& find_congruence(std::string_view id) {
    if (const auto* s = try_find_congruence(id)) return *s;
    throw UnknownCheckId("unknown congruence id: " + std::string(id));
}

}  // namespace supercong
