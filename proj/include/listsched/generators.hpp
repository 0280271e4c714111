#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "listsched/model.hpp"
#include "listsched/oracle.hpp"

namespace listsched {

enum class FamilyTag { class1, class2, graham_tight, faigle_m2, faigle_m3, faigle_sqrt2 };

std::string_view to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(std::string_view text);

// An adversarial instance with the arrival order that is worst for list
// scheduling and the closed-form makespans it should produce. The predicted
// values are claims for the harness to check, not inputs to trust.
struct GeneratedFamily {
    Instance instance;
    ArrivalOrder worst_order;
    FamilyTag tag;
    Time predicted_lsa;
    Time predicted_opt;

    // Structured class for the closed-form optimum, when the family has one.
    [[nodiscard]] std::optional<StructuredClass> structured_class() const;
};

// (m-1)^2 unit jobs, then one job of size m; units arrive first.
// Predicted: LSA 2m-2, OPT m. m = 2 is accepted (ratio 1).
GeneratedFamily gen_class1(std::size_t m);

// m(m-1) unit jobs, then one job of size m^2; the big job arrives last.
// Predicted: LSA m^2+m-1, OPT m^2.
GeneratedFamily gen_class2(std::size_t m);

// m(m-1) unit jobs, then one job of size m; meets the 2-1/m bound exactly.
GeneratedFamily gen_graham_tight(std::size_t m);

// m=2: (1,1,2). m=3: (1,1,1,3,3,3,6). m>=4: m unit jobs, m jobs of size
// 1+r2, one job of size 2(1+r2), in that order.
GeneratedFamily gen_faigle(std::size_t m);

// Dispatch by tag. faigle_m2 requires m = 2, faigle_m3 m = 3, faigle_sqrt2 m >= 4.
GeneratedFamily generate(FamilyTag tag, std::size_t m);

// Sidecar JSON for a generated family:
// {"family":"class1","m":4,"jobs":10,"predicted_lsa":"6","predicted_opt":"4","worst_order":[1,...]}
std::string family_sidecar_json(const GeneratedFamily& family);

} // namespace listsched
