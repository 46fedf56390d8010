#include "ngon/hn_engine.hpp"

#include <algorithm>

namespace ngon {

HNResult hn_of_object(const SheafObject& s) {
    std::vector<std::pair<PhasePoint, std::size_t>> items;
    for (std::size_t i = 0; i < s.summands.size(); ++i) {
        if (is_semistable(s.summands[i]) == Stability::Unstable)
            throw DomainError("summand " + std::to_string(i) + " is unstable; refine it before computing HN slices");
        items.emplace_back(phase(s.summands[i]), i);
    }
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    HNResult out;
    for (const auto& [ph, idx] : items) {
        ChargeVec c = charge(k_class(s.summands[idx]));
        if (out.slices.empty() || out.slices.back().phase != ph) {
            out.slices.push_back({ph, c, {idx}});
        } else {
            out.slices.back().total_charge = out.slices.back().total_charge + c;
            out.slices.back().members.push_back(idx);
        }
    }
    return out;
}

HNPolygon hn_polygon(const std::vector<ChargeVec>& charges) {
    std::vector<ChargeVec> sorted = charges;
    for (const auto& c : sorted)
        if (!c.in_upper()) throw DomainError("hn_polygon: charges must lie in the upper half plane H'");
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const ChargeVec& a, const ChargeVec& b) { return phase_of_charge(a) > phase_of_charge(b); });
    HNPolygon p;
    p.vertices.push_back({0, 0});
    for (std::size_t i = 0; i < sorted.size();) {
        ChargeVec edge = sorted[i];
        std::size_t j = i + 1;
        while (j < sorted.size() && phase_of_charge(sorted[j]) == phase_of_charge(edge)) edge = edge + sorted[j++];
        p.vertices.push_back(p.vertices.back() + edge);
        i = j;
    }
    return p;
}

bool slice_membership(const SheafObject& s, const PhasePoint& lo, const PhasePoint& hi) {
    if (!(lo < hi)) throw DomainError("slice_membership: window must satisfy lo < hi");
    for (const auto& slice : hn_of_object(s).slices)
        if (!(lo < slice.phase && slice.phase <= hi)) return false;
    return true;
}

} // namespace ngon
