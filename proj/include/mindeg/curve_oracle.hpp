#pragma once

#include <mindeg/matrix.hpp>
#include <mindeg/polynomial.hpp>
#include <mindeg/ring_gen.hpp>
#include <mindeg/split_algebra.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace mindeg {

// y^2 = f(x), deg f = 2g + 2, f squarefree. The degree-2 map is (x, y) -> x.
class HyperellipticCurve {
public:
    explicit HyperellipticCurve(Poly f) : f_(std::move(f)) {
        if (f_.degree() < 6 || f_.degree() % 2 != 0)
            throw std::invalid_argument("branch polynomial must have even degree 2g+2, g >= 2");
        if (!is_squarefree(f_)) throw std::invalid_argument("branch polynomial must be squarefree");
        genus_ = static_cast<int>(f_.degree()) / 2 - 1;
    }

    const Poly& branch_poly() const { return f_; }
    int genus() const { return genus_; }

private:
    Poly f_;
    int genus_;
};

// y^3 = f(x), deg f = 3r + 3, f squarefree: a cyclic triple cover of the line,
// totally ramified over the zeros of f and unramified over infinity, of genus
// 3r + 1.
class CyclicTrigonalCurve {
public:
    explicit CyclicTrigonalCurve(Poly f) : f_(std::move(f)) {
        if (f_.degree() < 6 || f_.degree() % 3 != 0)
            throw std::invalid_argument("branch polynomial must have degree 3r+3, r >= 1");
        if (!is_squarefree(f_)) throw std::invalid_argument("branch polynomial must be squarefree");
        r_ = static_cast<int>(f_.degree()) / 3 - 1;
    }

    const Poly& branch_poly() const { return f_; }
    int target_twist() const { return r_; }
    int genus() const { return 3 * r_ + 1; }

private:
    Poly f_;
    int r_;
};

// p(x) y^s, with the curve relation in force (0 <= s < number of strata).
struct CurveSection {
    Poly p;
    int ystratum;
};

// Ordered monomial basis of one graded piece of a section ring on a curve.
struct PluricanonicalBasis {
    int level;
    std::vector<CurveSection> elements;

    long dim() const { return static_cast<long>(elements.size()); }
};

/*
 * Graded ring of sections of powers of a pullback bundle on a superelliptic
 * curve y^strata = f(x).
 *
 * The function y has a pole of order y_pole at each place over infinity, so
 * the level-l piece is stratified by powers of y with x-degree bounds
 * l * pole_scale - s * y_pole per stratum: the mu-action eigenspaces keep the
 * strata independent. Products reduce y^strata -> f and must land back under
 * the bounds; a product escaping the target span is an error, not a
 * truncation.
 */
class SectionRing {
public:
    SectionRing(int strata, Poly f, int pole_scale, int y_pole)
        : strata_(strata), f_(std::move(f)), pole_scale_(pole_scale), y_pole_(y_pole) {}

    // Canonical grading: pieces H^0(K^l), K = (g-1) times the pencil class.
    static SectionRing hyperelliptic_canonical(const HyperellipticCurve& c) {
        return SectionRing(2, c.branch_poly(), c.genus() - 1, c.genus() + 1);
    }

    // Half-canonical grading for odd genus: the pencil class taken (g-1)/2
    // times, so that the square of the grading bundle is canonical.
    static SectionRing hyperelliptic_theta(const HyperellipticCurve& c) {
        if (c.genus() % 2 == 0)
            throw std::invalid_argument("half-canonical grading needs odd genus");
        return SectionRing(2, c.branch_poly(), (c.genus() - 1) / 2, c.genus() + 1);
    }

    static SectionRing trigonal_theta(const CyclicTrigonalCurve& c) {
        return SectionRing(3, c.branch_poly(), c.target_twist(), c.target_twist() + 1);
    }

    int strata() const { return strata_; }
    int pole_scale() const { return pole_scale_; }
    int y_pole() const { return y_pole_; }
    const Poly& branch_poly() const { return f_; }

    // Largest admissible x-degree in stratum s at the given level; negative
    // means the stratum is empty there.
    long stratum_bound(int level, int s) const {
        return static_cast<long>(level) * pole_scale_ - static_cast<long>(s) * y_pole_;
    }

    long dim(int level) const {
        long d = 0;
        for (int s = 0; s < strata_; ++s) d += std::max(stratum_bound(level, s) + 1, 0L);
        return d;
    }

    PluricanonicalBasis basis(int level) const {
        PluricanonicalBasis b{level, {}};
        for (int s = 0; s < strata_; ++s)
            for (long i = 0; i <= stratum_bound(level, s); ++i)
                b.elements.push_back({Poly::xpow(i), s});
        return b;
    }

    CurveSection multiply(const CurveSection& a, const CurveSection& b) const {
        Poly p = a.p * b.p;
        int s = a.ystratum + b.ystratum;
        while (s >= strata_) {
            s -= strata_;
            p = p * f_;
        }
        return {std::move(p), s};
    }

    std::vector<Rational> coordinates(const CurveSection& sec, int level) const {
        if (sec.ystratum < 0 || sec.ystratum >= strata_)
            throw std::domain_error("section stratum out of range");
        if (sec.p.degree() > stratum_bound(level, sec.ystratum))
            throw std::domain_error("section lies outside the target basis span");
        std::vector<Rational> coords(dim(level));
        long offset = 0;
        for (int s = 0; s < sec.ystratum; ++s)
            offset += std::max(stratum_bound(level, s) + 1, 0L);
        for (long i = 0; i <= sec.p.degree(); ++i) coords[offset + i] = sec.p.coeff(i);
        return coords;
    }

    // Matrix of level-s x level-t multiplication in the monomial bases,
    // columns indexed left-factor major.
    RationalMatrix mult_matrix(int s, int t) const {
        const PluricanonicalBasis bs = basis(s), bt = basis(t);
        RationalMatrix m(dim(s + t), bs.elements.size() * bt.elements.size());
        for (std::size_t i = 0; i < bs.elements.size(); ++i)
            for (std::size_t j = 0; j < bt.elements.size(); ++j) {
                const std::vector<Rational> col =
                    coordinates(multiply(bs.elements[i], bt.elements[j]), s + t);
                for (std::size_t k = 0; k < col.size(); ++k)
                    m.at(k, i * bt.elements.size() + j) = col[k];
            }
        return m;
    }
};

inline PluricanonicalBasis hyperelliptic_sections(const HyperellipticCurve& c, int level) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    return SectionRing::hyperelliptic_canonical(c).basis(level);
}

inline PluricanonicalBasis trigonal_theta_sections(const CyclicTrigonalCurve& c, int level) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    return SectionRing::trigonal_theta(c).basis(level);
}

// Brute-force codimension of the image of level-s x level-t multiplication,
// straight from polynomial arithmetic and exact rank.
inline long oracle_mult_codim(const SectionRing& ring, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("multiplication needs s, t >= 1");
    if (s + t > 8) throw std::invalid_argument("levels beyond 8 are out of range");
    return image_codim(ring.mult_matrix(s, t));
}

namespace detail {

// h^0 of the pushforward of O twisted by O(k): functions p + q y (+ s y^2)
// with pole order at most k over infinity, counted stratum by stratum.
inline std::map<int, long> pushforward_dims(int strata, int y_pole) {
    std::map<int, long> dims;
    const int top = (strata - 1) * y_pole + 1;
    for (int k = -2; k <= top; ++k) {
        long d = 0;
        for (int s = 0; s < strata; ++s) d += std::max(k - s * y_pole + 1, 0);
        dims[k] = d;
    }
    return dims;
}

inline SplitBundle trace_zero_from_dims(const std::map<int, long>& dims) {
    SplitBundle full = hilbert_fit(dims);
    std::vector<int> twists = full.twists;
    const auto it = std::find(twists.begin(), twists.end(), 0);
    if (it == twists.end())
        throw std::logic_error("pushforward has no structure-sheaf summand");
    twists.erase(it);
    return SplitBundle(std::move(twists));
}

}  // namespace detail

// Trace-zero splitting type of the cover's pushforward, recovered from the
// explicit function spaces through the Hilbert-function fit.
inline SplitBundle oracle_pushforward_split(const HyperellipticCurve& c) {
    return detail::trace_zero_from_dims(detail::pushforward_dims(2, c.genus() + 1));
}

inline SplitBundle oracle_pushforward_split(const CyclicTrigonalCurve& c) {
    return detail::trace_zero_from_dims(detail::pushforward_dims(3, c.target_twist() + 1));
}

namespace detail {

/*
 * Whether the square of the grading bundle is canonical: the degree-0 class
 * K - 2*theta is trivial iff it has a nonzero section. Sections of K - 2*theta
 * embed into the holomorphic differentials as those vanishing to order 2m
 * along a fiber avoiding the branch divisor; per stratum x^i dx / y^j
 * (admissible for i <= j*y_pole - 2) that vanishing is divisibility of the
 * stratum polynomial by (x - t)^(2m). Rank of the coefficient conditions
 * decides, and exhibits the section when one exists.
 */
inline bool theta_square_check_impl(int strata, const Poly& f, int y_pole, int m, int genus) {
    Rational t = 0;
    while (f.eval(t) == 0) t += 1;

    struct Column {
        long i;
        int j;
    };
    std::vector<Column> cols;
    for (int j = 0; j < strata; ++j)
        for (long i = 0; i + 2 <= static_cast<long>(j) * y_pole; ++i) cols.push_back({i, j});
    if (static_cast<long>(cols.size()) != genus)
        throw std::logic_error("differential count disagrees with the genus");

    const long order = 2L * m;
    RationalMatrix conditions(static_cast<std::size_t>(order) * strata, cols.size());
    for (std::size_t col = 0; col < cols.size(); ++col) {
        // coefficient of (x - t)^c in x^i is C(i, c) t^(i-c)
        Rational binom = 1;
        for (long c = 0; c <= std::min(cols[col].i, order - 1); ++c) {
            Rational value = binom;
            for (long e = 0; e < cols[col].i - c; ++e) value *= t;
            conditions.at(static_cast<std::size_t>(cols[col].j) * order + c, col) = value;
            binom = binom * Rational(cols[col].i - c) / Rational(c + 1);
        }
    }
    const long h0_sections = static_cast<long>(cols.size()) - rank(conditions);
    return h0_sections >= 1;
}

}  // namespace detail

inline bool theta_square_check(const CyclicTrigonalCurve& c) {
    return detail::theta_square_check_impl(3, c.branch_poly(), c.target_twist() + 1,
                                           c.target_twist(), c.genus());
}

inline bool theta_square_check(const HyperellipticCurve& c) {
    if (c.genus() % 2 == 0)
        throw std::invalid_argument("half-canonical grading needs odd genus");
    return detail::theta_square_check_impl(2, c.branch_poly(), c.genus() + 1,
                                           (c.genus() - 1) / 2, c.genus());
}

namespace detail {

inline GeneratorProfile profile_from_ring(const SectionRing& ring, int level_stride,
                                          int max_degree) {
    GeneratorProfile p;
    for (int level = 2; level <= max_degree; ++level) {
        std::vector<RationalMatrix> parts;
        for (int a = level - 1; 2 * a >= level; --a)
            parts.push_back(ring.mult_matrix(level_stride * a, level_stride * (level - a)));
        const long codim = image_codim(RationalMatrix::hstack(parts));
        if (level > 4 && codim != 0)
            throw std::logic_error("generator degrees did not stabilize by degree 4");
        if (codim > 0) p.counts.emplace(level, codim);
    }
    return p;
}

}  // namespace detail

// Generator profile of the canonical ring, from scratch: for each degree the
// codimension of the sum of the images of all products from lower degrees.
inline GeneratorProfile canonical_profile_bruteforce(const HyperellipticCurve& c,
                                                     int max_degree = 6) {
    return detail::profile_from_ring(SectionRing::hyperelliptic_canonical(c), 1, max_degree);
}

inline GeneratorProfile canonical_profile_bruteforce(const CyclicTrigonalCurve& c,
                                                     int max_degree = 6) {
    if (!theta_square_check(c))
        throw std::domain_error("square of the grading bundle is not canonical");
    return detail::profile_from_ring(SectionRing::trigonal_theta(c), 2, max_degree);
}

// Default fixture polynomials: x^d - 1 is always squarefree; the genericity
// mate is x^d + x + 1, else x^d + x^2 + 1.
inline Poly standard_fixture_poly(int degree) {
    std::vector<Rational> c(degree + 1);
    c[0] = -1;
    c[degree] = 1;
    return Poly(std::move(c));
}

inline Poly second_fixture_poly(int degree) {
    std::vector<Rational> c(degree + 1);
    c[0] = 1;
    c[1] = 1;
    c[degree] = 1;
    Poly p(std::move(c));
    if (is_squarefree(p)) return p;
    std::vector<Rational> d(degree + 1);
    d[0] = 1;
    d[2] = 1;
    d[degree] = 1;
    return Poly(std::move(d));
}

}  // namespace mindeg
