#include "lexspec/json_io.hpp"

namespace lexspec {

std::string main_flag_name(MainFlag f) {
    switch (f) {
    case MainFlag::Main: return "main";
    case MainFlag::NonMain: return "nonmain";
    default: return "unclassified";
    }
}

Json to_json(const BigInt& v) {
    if (fits_int64(v)) return v.convert_to<std::int64_t>();
    return v.str();
}

Json to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const Spectrum& s) {
    Json entries = Json::array();
    for (const auto& e : s.entries)
        entries.push_back({{"value", e.value},
                           {"multiplicity", e.multiplicity},
                           {"main", main_flag_name(e.main)}});
    return {{"order", s.order}, {"entries", entries}};
}

Json to_json(const MainPolynomial& mp) {
    Json coeffs = Json::array();
    for (const auto& c : mp.coeffs) coeffs.push_back(to_json(c));
    return {{"s", mp.s}, {"coeffs", coeffs}};
}

Json to_json(const CorollaryReport& r) {
    Json mains = Json::array();
    for (const auto& m : r.mains)
        mains.push_back({{"mu", m.mu},
                         {"mult_in_W", m.mult_in_w},
                         {"max_residual", m.max_residual},
                         {"v_dot_ones", m.v_dot_ones},
                         {"nonmain_in_W", m.nonmain_in_w}});
    Json out = {{"eta", r.eta}, {"zero_main", r.zero_main}, {"mains", mains}, {"passed", r.passed}};
    if (!r.message.empty()) out["message"] = r.message;
    return out;
}

Json to_json(const MultisetDiff& d) {
    Json matched = Json::array();
    for (const auto& m : d.matched) matched.push_back({m.left, m.right, m.gap});
    return {{"matched", matched},
            {"unmatched_left", d.unmatched_left},
            {"unmatched_right", d.unmatched_right},
            {"max_gap", d.max_gap},
            {"pass", d.pass},
            {"close_classes_warning", d.close_classes_warning}};
}

Json to_json(const PowerSpectrum& ps) {
    Json levels = Json::array();
    for (const auto& lvl : ps.levels) {
        Json j = {{"j", lvl.level},
                  {"order", lvl.order},
                  {"s", lvl.s},
                  {"main_roots", lvl.main_roots},
                  {"spectrum", to_json(lvl.spectrum)}};
        if (lvl.exact_main_poly) {
            j["main_poly"] = to_json(*lvl.exact_main_poly)["coeffs"];
            Json row = Json::array();
            for (const auto& v : lvl.exact_walk_row) row.push_back(to_json(v));
            j["walk_row"] = row;
        } else {
            j["main_poly"] = nullptr;
        }
        levels.push_back(std::move(j));
    }
    return {{"k", ps.k}, {"levels", levels}};
}

} // namespace lexspec
