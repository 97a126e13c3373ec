#pragma once

#include <mindeg/split_algebra.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mindeg {

// Minimal-generator counts per degree >= 2; degree-1 generators are implicit
// (all of the degree-1 piece). Equality ignores explicit zero counts.
struct GeneratorProfile {
    std::map<int, long> counts;

    long at(int degree) const {
        const auto it = counts.find(degree);
        return it == counts.end() ? 0 : it->second;
    }

    GeneratorProfile normalized() const {
        GeneratorProfile p;
        for (const auto& [d, c] : counts)
            if (c != 0) p.counts.emplace(d, c);
        return p;
    }

    bool operator==(const GeneratorProfile& o) const {
        return normalized().counts == o.normalized().counts;
    }

    std::string str() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (const auto& [d, c] : counts) {
            if (!first) os << ", ";
            os << d << ": " << c;
            first = false;
        }
        os << '}';
        return os.str();
    }
};

// One graded piece R_l of the section ring with its block decomposition.
struct GradedPiece {
    int level;
    BlockSpace blocks;

    std::vector<long> block_dims() const { return blocks.block_dims(); }
    long dim() const { return blocks.total_dim(); }
};

/*
 * Block calculus of the section ring of a split cover algebra on P^1.
 *
 * R_l decomposes as H^0(O(l m)) (+) (+)_i H^0(O(e_i + l m)) where m is the
 * polarization degree and e_i the trace-zero twists. A product of two blocks
 * lands where the algebra structure sends it: O x O by ring multiplication,
 * O x E_i by the module structure, E_i x E_j by the mu profile. Everything
 * is evaluated by exact rank on monomial multiplication matrices; no case
 * table of codimensions enters.
 */
class CoverModel {
public:
    explicit CoverModel(CoverAlgebra algebra) : alg_(std::move(algebra)) {}

    static CoverModel theta_cover(int n, int r) {
        return CoverModel(CoverAlgebra::theta_cover(n, r));
    }

    // Double cover by a base-point-free pencil, graded by the canonical
    // bundle L^(g-1): trace-zero part O(-g-1).
    static CoverModel canonical_double_cover(int g) {
        if (g < 2) throw std::invalid_argument("genus must be >= 2");
        return CoverModel(
            CoverAlgebra(2, g - 1, SplitBundle({-g - 1}), generic_mu_profile(2)));
    }

    const CoverAlgebra& algebra() const { return alg_; }

    GradedPiece graded(int level) const {
        if (level < 0) throw std::invalid_argument("level must be >= 0");
        std::vector<int> twists{level * alg_.target_twist};
        for (int e : alg_.bundle.twists) twists.push_back(e + level * alg_.target_twist);
        return GradedPiece{level, BlockSpace{1, std::move(twists)}};
    }

    BlockImage beta_hits(int s, int t) const {
        if (s < 1 || t < 1) throw std::invalid_argument("beta requires s, t >= 1");
        return block_mult_hits(graded(s).blocks, graded(t).blocks, graded(s + t).blocks,
                               wiring());
    }

    long beta_codim(int s, int t) const {
        return graded(s + t).dim() - beta_hits(s, t).total_dim();
    }

    bool beta_image_equal(int s1, int t1, int s2, int t2) const {
        if (s1 + t1 != s2 + t2) throw std::invalid_argument("images live in different levels");
        return block_images_equal(beta_hits(s1, t1), beta_hits(s2, t2));
    }

    // Sum of the images of every beta(s, t) with s + t = level, s, t >= 1.
    BlockImage degree_hits(int level) const {
        BlockImage acc;
        for (int s = level - 1; 2 * s >= level; --s) {
            BlockImage h = beta_hits(s, level - s);
            if (acc.hits.empty())
                acc = std::move(h);
            else
                acc.merge(h);
        }
        return acc;
    }

    long degree_codim(int level) const {
        return graded(level).dim() - degree_hits(level).total_dim();
    }

    // The count of new generators in each degree is the codimension of the
    // sum of products from below. Stabilization is part of the contract:
    // levels past 4 must need nothing new, and this is checked, not assumed.
    GeneratorProfile generator_profile(int max_degree = 6) const {
        GeneratorProfile p;
        for (int level = 2; level <= max_degree; ++level) {
            const long codim = degree_codim(level);
            if (level > 4 && codim != 0)
                throw std::logic_error("generator degrees did not stabilize by degree 4");
            if (codim > 0) p.counts.emplace(level, codim);
        }
        return p;
    }

    // Profile of the even subring (the canonical grading when the square of
    // the polarization is canonical): degree L collects beta(2a, 2b), a+b=L.
    GeneratorProfile even_subring_profile(int max_degree = 6) const {
        GeneratorProfile p;
        for (int level = 2; level <= max_degree; ++level) {
            BlockImage acc;
            for (int a = level - 1; 2 * a >= level; --a) {
                BlockImage h = beta_hits(2 * a, 2 * (level - a));
                if (acc.hits.empty())
                    acc = std::move(h);
                else
                    acc.merge(h);
            }
            const long codim = graded(2 * level).dim() - acc.total_dim();
            if (level > 4 && codim != 0)
                throw std::logic_error("generator degrees did not stabilize by degree 4");
            if (codim > 0) p.counts.emplace(level, codim);
        }
        return p;
    }

private:
    std::vector<BlockWire> wiring() const {
        const std::size_t k = alg_.bundle.size();
        std::vector<BlockWire> wires;
        wires.push_back({0, 0, 0, WireMode::ModuleMult});
        for (std::size_t i = 1; i <= k; ++i) {
            wires.push_back({0, i, i, WireMode::ModuleMult});
            wires.push_back({i, 0, i, WireMode::ModuleMult});
        }
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = 1; j <= k; ++j)
                for (std::size_t c = 0; c <= k; ++c)
                    switch (alg_.mu.mode(i, j, c)) {
                        case MuMode::Zero:
                            break;
                        case MuMode::Nonzero:
                            wires.push_back({i, j, c, WireMode::ModuleMult});
                            break;
                        case MuMode::Iso:
                            wires.push_back({i, j, c, WireMode::IsoOntoTarget});
                            break;
                    }
        return wires;
    }

    CoverAlgebra alg_;
};

inline GradedPiece graded_piece(int n, int r, int level) {
    return CoverModel::theta_cover(n, r).graded(level);
}

inline long beta_codim(int n, int r, int s, int t) {
    return CoverModel::theta_cover(n, r).beta_codim(s, t);
}

inline bool beta_image_equal(int n, int r, int s1, int t1, int s2, int t2) {
    return CoverModel::theta_cover(n, r).beta_image_equal(s1, t1, s2, t2);
}

inline GeneratorProfile generator_profile(int n, int r) {
    return CoverModel::theta_cover(n, r).generator_profile();
}

// Closed-form generator profile of the canonical ring of a surface whose
// canonical morphism is a degree-n cover of a minimal-degree surface of
// degree r, cross-checked against the block computation on a curve section.
inline GeneratorProfile surface_canonical_profile(int n, int r) {
    GeneratorProfile p;
    if (n == 2 && r == 1)
        p.counts = {{4, 1}};
    else
        p.counts = {{2, static_cast<long>(r) * (n - 2)}, {3, r - 1}};
    if (!(p == generator_profile(n, r)))
        throw std::logic_error("closed-form profile disagrees with the block computation");
    return p;
}

// Canonical ring of a hyperelliptic curve of genus g, through the block
// calculus of the pencil's double cover.
inline GeneratorProfile hyperelliptic_profile(int g) {
    return CoverModel::canonical_double_cover(g).generator_profile();
}

// Whether the canonical ring of a curve with a base-point-free degree-(g-1)
// half-canonical bundle (degree-n cover of a degree-r rational normal curve)
// is generated in degree 1. Decided on the maps beta(2m, 2), m <= 4.
inline bool theta_char_degree1(int n, int r) {
    if (n < 2 || r < 1 || n * r + 1 < 3)
        throw std::invalid_argument("parameters give genus < 3");
    const CoverModel model = CoverModel::theta_cover(n, r);
    for (int m = 1; m <= 4; ++m)
        if (model.beta_codim(2 * m, 2) != 0) return false;
    return true;
}

}  // namespace mindeg
