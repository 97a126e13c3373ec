#pragma once

#include <mindeg/ring_gen.hpp>

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mindeg {

// A rational ruled surface: the Hirzebruch surface F_e with minimal section
// C0 (C0^2 = -e) and fiber f, or the smooth quadric with rulings f, f'.
enum class RuledKind { Hirzebruch, Quadric };

struct RuledSurface {
    RuledKind kind;
    int e = 0;

    static RuledSurface Fe(int e) {
        if (e < 0) throw std::invalid_argument("F_e needs e >= 0");
        return {RuledKind::Hirzebruch, e};
    }
    static RuledSurface P1xP1() { return {RuledKind::Quadric, 0}; }

    bool operator==(const RuledSurface&) const = default;

    std::string str() const {
        return kind == RuledKind::Quadric ? "P1xP1" : "F" + std::to_string(e);
    }
};

// Integer divisor class: a*C0 + b*f on F_e, or a*f + b*f' on the quadric.
struct DivisorClass {
    RuledSurface surface;
    long a = 0, b = 0;

    DivisorClass operator+(const DivisorClass& o) const {
        check(o);
        return {surface, a + o.a, b + o.b};
    }
    DivisorClass operator-(const DivisorClass& o) const {
        check(o);
        return {surface, a - o.a, b - o.b};
    }
    DivisorClass operator-() const { return {surface, -a, -b}; }
    DivisorClass operator*(long k) const { return {surface, k * a, k * b}; }

    bool operator==(const DivisorClass&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '(' << a << ", " << b << ')';
        return os.str();
    }

    void check(const DivisorClass& o) const {
        if (!(surface == o.surface)) throw std::invalid_argument("divisor classes on different surfaces");
    }
};

// Intersection form: C0^2 = -e, C0.f = 1, f^2 = 0 on F_e; f^2 = f'^2 = 0,
// f.f' = 1 on the quadric.
inline long intersect(const DivisorClass& d1, const DivisorClass& d2) {
    d1.check(d2);
    if (d1.surface.kind == RuledKind::Hirzebruch)
        return -static_cast<long>(d1.surface.e) * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
    return d1.a * d2.b + d2.a * d1.b;
}

inline DivisorClass canonical_class(const RuledSurface& s) {
    if (s.kind == RuledKind::Quadric) return {s, -2, -2};
    return {s, -2, -static_cast<long>(s.e) - 2};
}

struct Cohomology {
    long h0, h1, h2;
    bool operator==(const Cohomology&) const = default;
};

// h^0 by pushing forward along the ruling, chi by Riemann-Roch, h^2 by Serre
// duality, h^1 as the exact difference. Valid for every class, so vanishing
// statements are computed, never assumed.
inline Cohomology cohomology(const DivisorClass& d) {
    const auto h0_of = [](const DivisorClass& c) -> long {
        if (c.surface.kind == RuledKind::Quadric)
            return (c.a >= 0 && c.b >= 0) ? (c.a + 1) * (c.b + 1) : 0;
        if (c.a < 0) return 0;
        long total = 0;
        for (long k = 0; k <= c.a; ++k) total += std::max(c.b - k * c.surface.e + 1, 0L);
        return total;
    };
    const DivisorClass k = canonical_class(d.surface);
    const long chi = 1 + (intersect(d, d) - intersect(d, k)) / 2;
    const long h0v = h0_of(d);
    const long h2v = h0_of(k - d);
    const long h1v = h0v + h2v - chi;
    if (h1v < 0) throw std::logic_error("cohomology bookkeeping produced negative h^1");
    return {h0v, h1v, h2v};
}

// Base-point-freeness on a ruled surface: a >= 0 and b >= a*e (both rulings
// nonnegative on the quadric).
inline bool base_point_free(const DivisorClass& d) {
    if (d.surface.kind == RuledKind::Quadric) return d.a >= 0 && d.b >= 0;
    return d.a >= 0 && d.b >= d.a * d.surface.e;
}

// Iterated double cover X -> X' -> Y with branch data D_i in |2 L_i|.
struct DoubleCoverTower {
    RuledSurface base;
    DivisorClass L1, L2;

    DoubleCoverTower(RuledSurface y, DivisorClass l1, DivisorClass l2)
        : base(y), L1(std::move(l1)), L2(std::move(l2)) {
        if (!(L1.surface == base) || !(L2.surface == base))
            throw std::invalid_argument("branch data must live on the base surface");
    }
};

// The pushforward of the structure sheaf splits into four line bundles.
inline std::array<DivisorClass, 4> tower_pushforward(const DoubleCoverTower& t) {
    const DivisorClass zero{t.base, 0, 0};
    return {zero, -t.L1, -t.L2, -(t.L1 + t.L2)};
}

// The class on the base whose pullback is the canonical bundle upstairs.
inline DivisorClass tower_canonical(const DoubleCoverTower& t) {
    return canonical_class(t.base) + t.L1 + t.L2;
}

inline long tower_h0K(const DoubleCoverTower& t) {
    const DivisorClass kdesc = tower_canonical(t);
    long total = 0;
    for (const DivisorClass& s : tower_pushforward(t)) total += cohomology(kdesc + s).h0;
    return total;
}

// Regularity of the cover: h^1 of every pushforward summand vanishes.
inline bool tower_regular(const DoubleCoverTower& t) {
    for (const DivisorClass& s : tower_pushforward(t))
        if (cohomology(s).h1 != 0) return false;
    return true;
}

// Everything validate_canonical_cover can decide; failures are fields, not
// exceptions. Bertini-type smoothness and transversality of the branch
// divisors stay assumptions and are listed as such.
struct CoverReport {
    bool k_class_ok = false;
    bool regular = false;
    long h0K = 0;
    long h0_hyperplane = 0;
    int cover_degree = 4;
    long target_degree = 0;
    GeneratorProfile predicted_profile;
    bool branch_bpf_ok = false;
    bool image_is_cone = false;
    std::vector<std::string> assumptions;

    bool pass() const { return k_class_ok && regular && h0K == h0_hyperplane; }
};

// Checks that the tower is a degree-4 canonical cover of the minimal-degree
// image of the hyperplane class: canonical descent class equals the
// hyperplane, the cover is regular, and the canonical series is complete.
inline CoverReport validate_canonical_cover(const DoubleCoverTower& t,
                                            const DivisorClass& hyperplane) {
    hyperplane.check({t.base, 0, 0});
    CoverReport rep;
    rep.k_class_ok = tower_canonical(t) == hyperplane;
    rep.regular = tower_regular(t);
    rep.h0K = tower_h0K(t);
    rep.h0_hyperplane = cohomology(hyperplane).h0;
    rep.cover_degree = 4;
    rep.target_degree = intersect(hyperplane, hyperplane);
    if (rep.target_degree >= 1)
        rep.predicted_profile = surface_canonical_profile(4, static_cast<int>(rep.target_degree));
    rep.branch_bpf_ok = base_point_free(t.L1 * 2) && base_point_free(t.L2 * 2) &&
                        cohomology(t.L1 * 2).h0 > 0 && cohomology(t.L2 * 2).h0 > 0;
    if (t.base.kind == RuledKind::Hirzebruch)
        rep.image_is_cone = intersect(hyperplane, DivisorClass{t.base, 1, 0}) == 0;
    rep.assumptions = {
        "general members of the branch systems are smooth",
        "the two branch divisors meet transversally",
    };
    return rep;
}

// Covers of a smooth scroll induced by a subseries of the canonical bundle
// have even degree: deg = (pullback of f).(K + pullback of f) is even. Only
// the parity of the cover degree enters.
inline bool parity_obstruction(const DivisorClass& hyperplane, int n) {
    if (hyperplane.a != 1)
        throw std::invalid_argument("hyperplane of a scroll has the form C0 + m f");
    if (n < 2) throw std::invalid_argument("cover degree must be >= 2");
    return n % 2 != 0;
}

// Surfaces of minimal degree r in P^(r+1).
struct SurfaceDescriptor {
    enum class Kind { Plane, Scroll, Cone, Veronese } kind;
    int a = 0, b = 0;

    std::string str() const {
        switch (kind) {
            case Kind::Plane: return "P2";
            case Kind::Scroll:
                return "S(" + std::to_string(a) + "," + std::to_string(b) + ")";
            case Kind::Cone:
                return "cone over rational normal curve of degree " + std::to_string(a + b);
            case Kind::Veronese: return "Veronese surface";
        }
        return {};
    }

    bool operator==(const SurfaceDescriptor&) const = default;
};

inline std::vector<SurfaceDescriptor> minimal_degree_catalog(int r) {
    if (r < 1) throw std::invalid_argument("degree must be >= 1");
    using Kind = SurfaceDescriptor::Kind;
    if (r == 1) return {{Kind::Plane}};
    std::vector<SurfaceDescriptor> out;
    for (int a = 1; 2 * a <= r; ++a) out.push_back({Kind::Scroll, a, r - a});
    out.push_back({Kind::Cone, 0, r});
    if (r == 4) out.push_back({Kind::Veronese});
    return out;
}

}  // namespace mindeg
