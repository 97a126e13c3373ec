#pragma once

#include <mindeg/matrix.hpp>
#include <mindeg/monomial.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace mindeg {

// h^0(O_{P^n}(d)) = C(n+d, n) for d >= 0, and 0 for negative twists.
inline long h0(int ambient_dim, int twist) {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (twist < 0) return 0;
    long num = 1, den = 1;
    for (int k = 1; k <= ambient_dim; ++k) {
        num *= twist + k;
        den *= k;
    }
    return num / den;
}

namespace detail {

inline void enumerate_monomials(int vars_left, int degree_left, std::vector<int>& stem,
                                std::vector<Monomial>& out) {
    if (vars_left == 1) {
        stem.push_back(degree_left);
        out.push_back(Monomial{stem});
        stem.pop_back();
        return;
    }
    for (int e = 0; e <= degree_left; ++e) {
        stem.push_back(e);
        enumerate_monomials(vars_left - 1, degree_left - e, stem, out);
        stem.pop_back();
    }
}

}  // namespace detail

// Monomial basis of H^0(O_{P^n}(d)), lexicographically sorted on the exponent
// vector. The order is fixed: every matrix built on top of it is reproducible.
inline std::vector<Monomial> monomial_basis(int ambient_dim, int twist) {
    std::vector<Monomial> out;
    if (twist < 0) return out;
    std::vector<int> stem;
    detail::enumerate_monomials(ambient_dim + 1, twist, stem, out);
    return out;
}

// Section space of one line-bundle twist with its ordered monomial basis.
struct SectionSpace {
    int ambient_dim;
    int twist;

    long dim() const { return h0(ambient_dim, twist); }
    std::vector<Monomial> basis() const { return monomial_basis(ambient_dim, twist); }
};

// Matrix of H^0(O(a)) (x) H^0(O(b)) -> H^0(O(a+b)) in the monomial bases:
// convolution of exponent vectors. Columns are indexed left-factor major.
// A negative factor gives the zero map (no columns).
inline RationalMatrix mult_map(int ambient_dim, int a, int b) {
    const std::vector<Monomial> left = monomial_basis(ambient_dim, a);
    const std::vector<Monomial> right = monomial_basis(ambient_dim, b);
    const std::vector<Monomial> target = monomial_basis(ambient_dim, a + b);
    RationalMatrix m(target.size(), left.size() * right.size());
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < target.size(); ++k) index[target[k]] = k;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            m.at(index.at(left[i] * right[j]), i * right.size() + j) = 1;
    return m;
}

// Ordered direct sum of section spaces on a common ambient space. Blocks with
// negative twist are present with dimension 0.
struct BlockSpace {
    int ambient_dim;
    std::vector<int> twists;

    long block_dim(std::size_t i) const { return h0(ambient_dim, twists.at(i)); }
    long total_dim() const {
        long d = 0;
        for (int t : twists) d += h0(ambient_dim, t);
        return d;
    }
    std::vector<long> block_dims() const {
        std::vector<long> d;
        d.reserve(twists.size());
        for (int t : twists) d.push_back(h0(ambient_dim, t));
        return d;
    }
};

enum class WireMode { Zero, ModuleMult, IsoOntoTarget };

// One product route: (left block) x (right block) -> target block.
struct BlockWire {
    std::size_t left, right, target;
    WireMode mode;
};

/*
 * Hit state of one target block under a set of wires.
 *
 * Wires of equal source and target twist contribute concrete column spans in
 * the target monomial basis. A module-mult wire whose target twist exceeds
 * the source twist sum factors through multiplication by an unmaterialized
 * form; it contributes an injective image of known dimension but unknown
 * position, tracked separately. Such contributions form a nested chain in
 * every wiring built here, so merging them takes the maximum.
 */
struct BlockHit {
    int ambient_dim = 1;
    int twist = 0;
    bool full = false;
    std::vector<RationalMatrix> spans;
    long opaque_dim = 0;

    long block_dim() const { return h0(ambient_dim, twist); }

    long concrete_rank() const {
        if (spans.empty()) return 0;
        return rank(RationalMatrix::hstack(spans));
    }

    long dim() const {
        if (full) return block_dim();
        return std::min(block_dim(), concrete_rank() + opaque_dim);
    }

    void normalize() {
        if (!full && block_dim() > 0 && concrete_rank() == block_dim()) full = true;
        if (full) {
            spans.clear();
            opaque_dim = 0;
        }
    }

    void merge(const BlockHit& o) {
        full = full || o.full;
        spans.insert(spans.end(), o.spans.begin(), o.spans.end());
        opaque_dim = std::max(opaque_dim, o.opaque_dim);
        normalize();
    }
};

// Per-target-block image state of a block-wise multiplication.
struct BlockImage {
    std::vector<BlockHit> hits;

    long total_dim() const {
        long d = 0;
        for (const auto& h : hits) d += h.dim();
        return d;
    }
    std::vector<long> dims() const {
        std::vector<long> d;
        d.reserve(hits.size());
        for (const auto& h : hits) d.push_back(h.dim());
        return d;
    }

    void merge(const BlockImage& o) {
        if (hits.size() != o.hits.size()) throw std::invalid_argument("block image shape mismatch");
        for (std::size_t i = 0; i < hits.size(); ++i) hits[i].merge(o.hits[i]);
    }
};

inline BlockImage block_mult_hits(const BlockSpace& left, const BlockSpace& right,
                                  const BlockSpace& target, const std::vector<BlockWire>& wiring) {
    if (left.ambient_dim != right.ambient_dim || left.ambient_dim != target.ambient_dim)
        throw std::invalid_argument("block spaces live on different ambient spaces");
    const int amb = left.ambient_dim;

    BlockImage image;
    image.hits.reserve(target.twists.size());
    for (int t : target.twists) image.hits.push_back(BlockHit{amb, t});

    for (const BlockWire& w : wiring) {
        if (w.left >= left.twists.size() || w.right >= right.twists.size() ||
            w.target >= target.twists.size())
            throw std::out_of_range("wiring references an out-of-range block index");
        if (w.mode == WireMode::Zero) continue;

        const int a = left.twists[w.left];
        const int b = right.twists[w.right];
        const int t = target.twists[w.target];
        BlockHit& hit = image.hits[w.target];

        if (h0(amb, a) == 0 || h0(amb, b) == 0) continue;

        const int gap = t - (a + b);
        if (gap < 0)
            throw std::invalid_argument("wire maps onto a block of smaller twist");

        if (w.mode == WireMode::IsoOntoTarget) {
            if (gap != 0) throw std::invalid_argument("iso wire requires matching twists");
            // Multiplication of nonnegative-twist section spaces surjects;
            // through the isomorphism the whole block is reached.
            hit.full = true;
        } else {
            RationalMatrix m = mult_map(amb, a, b);
            if (gap == 0)
                hit.spans.push_back(std::move(m));
            else
                hit.opaque_dim = std::max(hit.opaque_dim, rank(m));
        }
    }
    for (auto& h : image.hits) h.normalize();
    return image;
}

// Dimension of the sum of images arriving at each target block. Distinct
// blocks are independent summands, so the total image dimension is the sum.
inline std::vector<long> block_mult_image(const BlockSpace& left, const BlockSpace& right,
                                          const BlockSpace& target,
                                          const std::vector<BlockWire>& wiring) {
    return block_mult_hits(left, right, target, wiring).dims();
}

// Subspace equality of two hit states of the same block layout.
inline bool block_images_equal(const BlockImage& x, const BlockImage& y) {
    if (x.hits.size() != y.hits.size()) throw std::invalid_argument("block image shape mismatch");
    for (std::size_t i = 0; i < x.hits.size(); ++i) {
        const BlockHit& a = x.hits[i];
        const BlockHit& b = y.hits[i];
        if (a.full != b.full) return false;
        if (a.full) continue;
        if (a.opaque_dim > 0 || b.opaque_dim > 0)
            throw std::domain_error("image position not determined by the block model");
        const long ra = a.concrete_rank(), rb = b.concrete_rank();
        if (ra != rb) return false;
        if (ra == 0) continue;
        std::vector<RationalMatrix> both = a.spans;
        both.insert(both.end(), b.spans.begin(), b.spans.end());
        if (rank(RationalMatrix::hstack(both)) != ra) return false;
    }
    return true;
}

}  // namespace mindeg
