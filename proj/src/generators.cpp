#include "listsched/generators.hpp"

#include <stdexcept>

#include <json.hpp>

namespace listsched {

namespace {

void require_machines(std::size_t m, std::size_t minimum, std::string_view family) {
    if (m < minimum)
        throw std::invalid_argument(std::string(family) + " needs m >= " + std::to_string(minimum) + ", got " +
                                    std::to_string(m));
}

GeneratedFamily make_family(const std::vector<Time>& sizes, std::size_t m, FamilyTag tag, Time lsa, Time opt) {
    Instance instance = Instance::from_sizes(sizes, m);
    ArrivalOrder order = ArrivalOrder::as_listed(instance);
    return {std::move(instance), std::move(order), tag, lsa, opt};
}

// `units` jobs of size 1 followed by one job of size `big`.
std::vector<Time> units_then(std::size_t units, Time big) {
    std::vector<Time> sizes(units, Time(1));
    sizes.push_back(big);
    return sizes;
}

const Time kOnePlusRoot2{Surd(1, 1)};

} // namespace

std::string_view to_string(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::class1: return "class1";
    case FamilyTag::class2: return "class2";
    case FamilyTag::graham_tight: return "graham_tight";
    case FamilyTag::faigle_m2: return "faigle_m2";
    case FamilyTag::faigle_m3: return "faigle_m3";
    case FamilyTag::faigle_sqrt2: return "faigle_sqrt2";
    }
    return "unknown";
}

std::optional<FamilyTag> parse_family_tag(std::string_view text) {
    for (FamilyTag tag : {FamilyTag::class1, FamilyTag::class2, FamilyTag::graham_tight, FamilyTag::faigle_m2,
                          FamilyTag::faigle_m3, FamilyTag::faigle_sqrt2})
        if (text == to_string(tag)) return tag;
    return std::nullopt;
}

std::optional<StructuredClass> GeneratedFamily::structured_class() const {
    if (tag == FamilyTag::class1) return StructuredClass::class1;
    if (tag == FamilyTag::class2) return StructuredClass::class2;
    return std::nullopt;
}

GeneratedFamily gen_class1(std::size_t m) {
    require_machines(m, 2, "class1");
    auto mi = static_cast<std::int64_t>(m);
    return make_family(units_then((m - 1) * (m - 1), Time(mi)), m, FamilyTag::class1, Time(2 * mi - 2), Time(mi));
}

GeneratedFamily gen_class2(std::size_t m) {
    require_machines(m, 2, "class2");
    auto mi = static_cast<std::int64_t>(m);
    return make_family(units_then(m * (m - 1), Time(mi * mi)), m, FamilyTag::class2, Time(mi * mi + mi - 1),
                       Time(mi * mi));
}

GeneratedFamily gen_graham_tight(std::size_t m) {
    require_machines(m, 2, "graham_tight");
    auto mi = static_cast<std::int64_t>(m);
    return make_family(units_then(m * (m - 1), Time(mi)), m, FamilyTag::graham_tight, Time(2 * mi - 1), Time(mi));
}

GeneratedFamily gen_faigle(std::size_t m) {
    require_machines(m, 2, "faigle");
    if (m == 2) return make_family({1, 1, 2}, m, FamilyTag::faigle_m2, 3, 2);
    if (m == 3) return make_family({1, 1, 1, 3, 3, 3, 6}, m, FamilyTag::faigle_m3, 10, 6);

    std::vector<Time> sizes(m, Time(1));
    sizes.insert(sizes.end(), m, kOnePlusRoot2);
    sizes.push_back(kOnePlusRoot2.scaled(2));
    // Units leave every machine at 1, the 1+r2 jobs at 2+r2; the last job lands on 2+r2.
    return make_family(sizes, m, FamilyTag::faigle_sqrt2, Time(Surd(4, 3)), kOnePlusRoot2.scaled(2));
}

GeneratedFamily generate(FamilyTag tag, std::size_t m) {
    switch (tag) {
    case FamilyTag::class1: return gen_class1(m);
    case FamilyTag::class2: return gen_class2(m);
    case FamilyTag::graham_tight: return gen_graham_tight(m);
    case FamilyTag::faigle_m2:
        if (m != 2) throw std::invalid_argument("faigle_m2 requires m = 2");
        return gen_faigle(m);
    case FamilyTag::faigle_m3:
        if (m != 3) throw std::invalid_argument("faigle_m3 requires m = 3");
        return gen_faigle(m);
    case FamilyTag::faigle_sqrt2:
        require_machines(m, 4, "faigle_sqrt2");
        return gen_faigle(m);
    }
    throw std::invalid_argument("unknown family");
}

std::string family_sidecar_json(const GeneratedFamily& family) {
    nlohmann::ordered_json j;
    j["family"] = to_string(family.tag);
    j["m"] = family.instance.machines();
    j["jobs"] = family.instance.size();
    j["predicted_lsa"] = family.predicted_lsa.to_string();
    j["predicted_opt"] = family.predicted_opt.to_string();
    j["worst_order"] = family.worst_order.ids();
    return j.dump(2) + "\n";
}

} // namespace listsched
