#pragma once

#include <mindeg/curve_oracle.hpp>
#include <mindeg/cy3_lab.hpp>
#include <mindeg/matrix.hpp>
#include <mindeg/ring_gen.hpp>
#include <mindeg/split_algebra.hpp>
#include <mindeg/surface_lab.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mindeg {

using json = nlohmann::json;

// Rationals travel as "p/q" strings ("p" when the denominator is 1).
inline json to_json(const Rational& x) { return rational_to_string(x); }

inline Rational rational_from_json(const json& j) {
    return rational_from_string(j.get<std::string>());
}

inline json to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const SplitBundle& b) { return json(b.twists); }

inline SplitBundle split_bundle_from_json(const json& j) {
    return SplitBundle(j.get<std::vector<int>>());
}

inline json to_json(const GeneratorProfile& p) {
    json obj = json::object();
    for (const auto& [d, c] : p.counts) obj[std::to_string(d)] = c;
    return obj;
}

inline GeneratorProfile profile_from_json(const json& j) {
    GeneratorProfile p;
    for (const auto& [key, value] : j.items()) p.counts[std::stoi(key)] = value.get<long>();
    return p;
}

inline json to_json(const CoverReport& r) {
    return json{{"k_class_ok", r.k_class_ok},
                {"regular", r.regular},
                {"h0K", r.h0K},
                {"h0_hyperplane", r.h0_hyperplane},
                {"cover_degree", r.cover_degree},
                {"target_degree", r.target_degree},
                {"predicted_profile", to_json(r.predicted_profile)},
                {"branch_bpf_ok", r.branch_bpf_ok},
                {"image_is_cone", r.image_is_cone},
                {"pass", r.pass()},
                {"assumptions", r.assumptions}};
}

inline json to_json(const N0Record& r) {
    return json{{"n", r.n},
                {"sectional_genus", r.sectional_genus},
                {"N0_B2", r.N0_B2},
                {"N0_B3", r.N0_B3},
                {"sectional_genus_gt_3", r.sectional_genus_gt_3},
                {"C_nonhyperelliptic", r.C_nonhyperelliptic}};
}

using CurveFixture = std::variant<HyperellipticCurve, CyclicTrigonalCurve>;

// Fixture list format: [{"kind": "hyperelliptic"|"trigonal",
//                        "f": [coefficient strings, low to high],
//                        "r": optional expected target degree}]
inline std::vector<CurveFixture> curve_fixtures_from_json(const json& j) {
    std::vector<CurveFixture> out;
    for (const json& entry : j) {
        std::vector<Rational> coeffs;
        for (const json& c : entry.at("f")) coeffs.push_back(rational_from_json(c));
        Poly f(std::move(coeffs));
        const std::string kind = entry.at("kind").get<std::string>();
        if (kind == "hyperelliptic") {
            out.emplace_back(HyperellipticCurve(std::move(f)));
        } else if (kind == "trigonal") {
            CyclicTrigonalCurve c(std::move(f));
            if (entry.contains("r") && entry.at("r").get<int>() != c.target_twist())
                throw std::invalid_argument("fixture degree disagrees with the stated twist");
            out.emplace_back(std::move(c));
        } else {
            throw std::invalid_argument("unknown fixture kind: " + kind);
        }
    }
    return out;
}

}  // namespace mindeg
