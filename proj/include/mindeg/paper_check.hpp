#pragma once

#include <mindeg/curve_oracle.hpp>
#include <mindeg/cy3_lab.hpp>
#include <mindeg/json_io.hpp>
#include <mindeg/ring_gen.hpp>
#include <mindeg/split_algebra.hpp>
#include <mindeg/surface_lab.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace mindeg {

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
    double seconds = 0.0;
};

namespace check_detail {

// Closed-form codimension of beta(s, t) where one is stated; symmetric in
// (s, t). Pairs without a stated value return nothing.
inline std::optional<long> stated_beta_codim(int n, int r, int s, int t) {
    if (s < t) std::swap(s, t);
    if (s == 1 && t == 1) return static_cast<long>(r) * (n - 2);
    if (r == 1) {
        if (t == 1 && s == 2) return 0;
        if (t == 1 && s == 3) return 1;
        if (t == 1 && s >= 4) return 0;
        if (s == 2 && t == 2) return n == 2 ? 1 : 0;
    } else {
        if (t == 1 && s == 2) return r - 1;
        if (t == 1 && s >= 3) return 0;
    }
    return std::nullopt;
}

inline GeneratorProfile stated_surface_profile(int n, int r) {
    GeneratorProfile p;
    if (n == 2 && r == 1)
        p.counts = {{4, 1}};
    else
        p.counts = {{2, static_cast<long>(r) * (n - 2)}, {3, r - 1}};
    return p;
}

struct Tally {
    long checked = 0;
    long failed = 0;
    std::ostringstream failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failed;
            if (failed <= 4) failures << (failed > 1 ? "; " : "") << what;
        }
    }

    void fill(CriterionResult& res, const std::string& expectation) const {
        res.expected = expectation;
        res.pass = failed == 0;
        std::ostringstream os;
        os << checked << " checks, " << failed << " failed";
        if (failed > 0) os << " [" << failures.str() << "]";
        res.actual = os.str();
    }
};

template <typename F>
CriterionResult timed(std::string id, std::string name, double limit_seconds, F&& body) {
    CriterionResult res;
    res.id = std::move(id);
    res.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    body(tally);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    tally.fill(res, "0 failures");
    if (limit_seconds > 0 && res.seconds >= limit_seconds) {
        res.pass = false;
        res.actual += " (over the " + std::to_string(limit_seconds) + "s budget)";
    }
    return res;
}

inline CriterionResult c1_beta_closed_forms() {
    return timed("1", "multiplication-map codimension grid", 10.0, [](Tally& t) {
        for (int r = 1; r <= 6; ++r)
            for (int n = 2; n <= 6; ++n) {
                const CoverModel model = CoverModel::theta_cover(n, r);
                for (int s = 1; s <= 7; ++s)
                    for (int u = 1; s + u <= 8; ++u) {
                        const auto want = stated_beta_codim(n, r, s, u);
                        if (!want) continue;
                        const long got = model.beta_codim(s, u);
                        std::ostringstream what;
                        what << "(n=" << n << ",r=" << r << ",s=" << s << ",t=" << u << ") got "
                             << got << " want " << *want;
                        t.expect(got == *want, what.str());
                    }
            }
    });
}

inline CriterionResult c2_oracle_equivalence() {
    return timed("2", "abstract engine vs explicit-curve oracle", 60.0, [](Tally& t) {
        struct Case {
            int n, r;
            SectionRing ring;
            SplitBundle split;
        };
        std::vector<Case> cases;
        for (int g : {3, 5, 7}) {
            HyperellipticCurve c(standard_fixture_poly(2 * g + 2));
            cases.push_back({2, (g - 1) / 2, SectionRing::hyperelliptic_theta(c),
                             oracle_pushforward_split(c)});
        }
        for (int r : {1, 2, 3}) {
            CyclicTrigonalCurve c(standard_fixture_poly(3 * r + 3));
            cases.push_back(
                {3, r, SectionRing::trigonal_theta(c), oracle_pushforward_split(c)});
        }
        for (const Case& cs : cases) {
            const CoverModel model = CoverModel::theta_cover(cs.n, cs.r);
            t.expect(cs.split == theta_splitting(cs.n, cs.r),
                     "pushforward split mismatch at n=" + std::to_string(cs.n) +
                         " r=" + std::to_string(cs.r));
            for (int s = 1; s <= 5; ++s)
                for (int u = 1; s + u <= 6; ++u) {
                    const long oracle = oracle_mult_codim(cs.ring, s, u);
                    const long engine = model.beta_codim(s, u);
                    std::ostringstream what;
                    what << "(n=" << cs.n << ",r=" << cs.r << ",s=" << s << ",t=" << u
                         << ") oracle " << oracle << " engine " << engine;
                    t.expect(oracle == engine, what.str());
                }
        }
    });
}

inline CriterionResult c3_hyperelliptic_profiles() {
    return timed("3", "hyperelliptic canonical-ring generators", 0.0, [](Tally& t) {
        for (int g = 2; g <= 6; ++g) {
            HyperellipticCurve c(standard_fixture_poly(2 * g + 2));
            GeneratorProfile want;
            if (g == 2)
                want.counts = {{3, 1}};
            else
                want.counts = {{2, g - 2}};
            const GeneratorProfile brute = canonical_profile_bruteforce(c);
            const GeneratorProfile engine = hyperelliptic_profile(g);
            t.expect(brute == want, "brute profile at g=" + std::to_string(g) + ": " + brute.str());
            t.expect(engine == want,
                     "engine profile at g=" + std::to_string(g) + ": " + engine.str());
        }
    });
}

inline CriterionResult c4_generator_profiles() {
    return timed("4", "surface canonical-ring generator profiles", 0.0, [](Tally& t) {
        for (int r = 1; r <= 6; ++r)
            for (int n = 2; n <= 6; ++n) {
                const GeneratorProfile computed = generator_profile(n, r);
                const GeneratorProfile closed = surface_canonical_profile(n, r);
                const GeneratorProfile want = stated_surface_profile(n, r);
                std::ostringstream what;
                what << "(n=" << n << ",r=" << r << ") computed " << computed.str();
                t.expect(computed == want && closed == want, what.str());
            }
    });
}

inline CriterionResult c5_quadric_cone_tower() {
    return timed("5", "quadruple cover of the quadric cone", 0.0, [](Tally& t) {
        const RuledSurface f2 = RuledSurface::Fe(2);
        const DoubleCoverTower tower(f2, {f2, 1, 3}, {f2, 2, 3});
        const auto push = tower_pushforward(tower);
        const std::array<DivisorClass, 4> want{DivisorClass{f2, 0, 0}, DivisorClass{f2, -1, -3},
                                               DivisorClass{f2, -2, -3}, DivisorClass{f2, -3, -6}};
        t.expect(push == want, "pushforward summands differ");
        t.expect(tower_canonical(tower) == DivisorClass{f2, 1, 2}, "canonical descent class");
        t.expect(tower_h0K(tower) == 4, "h0 of the canonical bundle");
        t.expect(tower_regular(tower), "regularity");
        const CoverReport rep = validate_canonical_cover(tower, {f2, 1, 2});
        t.expect(rep.target_degree == 2, "image degree");
        t.expect(rep.image_is_cone, "cone flag");
        t.expect(rep.pass(), "full report");
    });
}

inline CriterionResult c6_scroll_towers() {
    return timed("6", "quadruple covers of smooth scrolls", 0.0, [](Tally& t) {
        const auto check = [&](const DoubleCoverTower& tower, const DivisorClass& hyperplane,
                               const std::string& label) {
            const CoverReport rep = validate_canonical_cover(tower, hyperplane);
            t.expect(rep.k_class_ok && rep.regular && rep.h0K == rep.h0_hyperplane &&
                         rep.cover_degree == 4 && rep.branch_bpf_ok,
                     label + ": " + std::string(rep.k_class_ok ? "" : "K ") +
                         (rep.regular ? "" : "regular ") +
                         (rep.h0K == rep.h0_hyperplane ? "" : "h0 ") +
                         (rep.branch_bpf_ok ? "" : "bpf"));
        };
        const RuledSurface q = RuledSurface::P1xP1();
        for (long m = 1; m <= 4; ++m) {
            check({q, {q, 1, m + 1}, {q, 2, 1}}, {q, 1, m}, "quadric m=" + std::to_string(m));
            check({q, {q, 2, 1}, {q, 1, m + 1}}, {q, 1, m}, "quadric m=" + std::to_string(m));
            check({q, {q, m + 1, 1}, {q, 1, 2}}, {q, m, 1}, "quadric m=" + std::to_string(m));
            check({q, {q, 1, 2}, {q, m + 1, 1}}, {q, m, 1}, "quadric m=" + std::to_string(m));
        }
        const RuledSurface f1 = RuledSurface::Fe(1);
        for (long m = 2; m <= 4; ++m) {
            check({f1, {f1, 1, m + 1}, {f1, 2, 2}}, {f1, 1, m}, "F1 m=" + std::to_string(m));
            check({f1, {f1, 2, 2}, {f1, 1, m + 1}}, {f1, 1, m}, "F1 m=" + std::to_string(m));
        }
    });
}

inline CriterionResult c7_obstructions() {
    return timed("7", "cyclic and odd-degree obstructions", 0.0, [](Tally& t) {
        for (int n = 2; n <= 10; ++n)
            for (int r = 1; r <= 5; ++r)
                t.expect(cyclic_admissible(n, r) == (n == 2 || n == 3),
                         "cyclic admissibility at n=" + std::to_string(n));
        const RuledSurface f2 = RuledSurface::Fe(2);
        const DivisorClass hyperplane{f2, 1, 3};
        for (int n = 2; n <= 11; ++n)
            t.expect(parity_obstruction(hyperplane, n) == (n % 2 == 1),
                     "parity at n=" + std::to_string(n));
    });
}

inline CriterionResult c8_cy3_equivalences() {
    return timed("8", "Calabi-Yau threefold normal generation", 5.0, [](Tally& t) {
        for (int n = 2; n <= 8; ++n) {
            const CYCover cover(n);
            const N0Record rec = n0_equivalences(cover);
            const bool want = n != 2;
            t.expect(rec.N0_B2 == want && rec.N0_B3 == want &&
                         rec.sectional_genus_gt_3 == want && rec.C_nonhyperelliptic == want,
                     "equivalences at n=" + std::to_string(n));
        }
        t.expect(sectional_genus(CYCover(2)) == 3, "sectional genus at n=2");
        const AlphaBetaReport ab = alpha_beta_surjectivity(CYCover(4));
        t.expect(ab.gamma_columns == 100 && ab.gamma_rank == 35,
                 "square map rank " + std::to_string(ab.gamma_rank) + " of " +
                     std::to_string(ab.gamma_columns) + " columns");
    });
}

inline CriterionResult c9_property_suites() {
    return timed("9", "exactness property suites", 0.0, [](Tally& t) {
        // Riemann-Roch and Serre duality across the ruled-surface grid.
        std::vector<RuledSurface> surfaces{RuledSurface::P1xP1()};
        for (int e = 0; e <= 3; ++e) surfaces.push_back(RuledSurface::Fe(e));
        for (const RuledSurface& s : surfaces) {
            const DivisorClass k = canonical_class(s);
            for (long a = -6; a <= 6; ++a)
                for (long b = -6; b <= 6; ++b) {
                    const DivisorClass d{s, a, b};
                    const Cohomology c = cohomology(d);
                    const long chi = 1 + (intersect(d, d) - intersect(d, k)) / 2;
                    t.expect(c.h0 - c.h1 + c.h2 == chi,
                             "Riemann-Roch at " + s.str() + " " + d.str());
                    t.expect(c.h2 == cohomology(k - d).h0,
                             "Serre duality at " + s.str() + " " + d.str());
                }
        }
        // Hilbert-function fits invert the twist tables of random bundles.
        std::mt19937 rng(20260810);
        std::uniform_int_distribution<int> twist_dist(-10, 2);
        std::uniform_int_distribution<int> size_dist(1, 6);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> twists(size_dist(rng));
            for (int& x : twists) x = twist_dist(rng);
            const SplitBundle bundle(std::move(twists));
            std::map<int, long> dims;
            for (int k = -3; k <= 11; ++k) dims[k] = bundle.h0_twisted(k);
            t.expect(hilbert_fit(dims) == bundle, "fit round-trip " + bundle.str());
        }
        // Rank identities on random rational matrices.
        std::uniform_int_distribution<int> num_dist(-9, 9);
        std::uniform_int_distribution<int> den_dist(1, 9);
        std::uniform_int_distribution<std::size_t> dim_dist(1, 6);
        for (int trial = 0; trial < 100; ++trial) {
            RationalMatrix m(dim_dist(rng), dim_dist(rng));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m.at(i, j) = Rational(num_dist(rng), den_dist(rng));
            t.expect(rank(m) == rank(m.transposed()), "rank of transpose");
            t.expect(image_codim(m) + rank(m) == static_cast<long>(m.rows()),
                     "codim + rank = rows");
        }
    });
}

}  // namespace check_detail

inline std::vector<CriterionResult> run_paper_check() {
    return {check_detail::c1_beta_closed_forms(), check_detail::c2_oracle_equivalence(),
            check_detail::c3_hyperelliptic_profiles(), check_detail::c4_generator_profiles(),
            check_detail::c5_quadric_cone_tower(), check_detail::c6_scroll_towers(),
            check_detail::c7_obstructions(), check_detail::c8_cy3_equivalences(),
            check_detail::c9_property_suites()};
}

inline json report_to_json(const std::vector<CriterionResult>& results) {
    json report = json::object();
    for (const CriterionResult& r : results)
        report[r.id] = json{{"pass", r.pass}, {"expected", r.expected}, {"actual", r.actual}};
    return report;
}

inline void write_report(const std::vector<CriterionResult>& results, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report to " + path);
    out << report_to_json(results).dump(2) << '\n';
}

}  // namespace mindeg
