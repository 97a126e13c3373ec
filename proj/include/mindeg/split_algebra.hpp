#pragma once

#include <mindeg/sections.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mindeg {

// Multiset of line-bundle twists of a split bundle on projective space,
// normalized descending.
struct SplitBundle {
    std::vector<int> twists;

    explicit SplitBundle(std::vector<int> t = {}) : twists(std::move(t)) {
        std::sort(twists.begin(), twists.end(), std::greater<int>());
    }

    std::size_t size() const { return twists.size(); }

    int twist_sum() const {
        int s = 0;
        for (int t : twists) s += t;
        return s;
    }

    // h^0 of the bundle twisted by O(k), on P^1.
    long h0_twisted(int k) const {
        long d = 0;
        for (int t : twists) d += h0(1, t + k);
        return d;
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < twists.size(); ++i) {
            if (i) os << ", ";
            os << twists[i];
        }
        os << ']';
        return os.str();
    }

    bool operator==(const SplitBundle&) const = default;
};

namespace detail {

inline long h1_p1(int d) { return d >= -1 ? 0 : -d - 1; }

// The unique integer d in [lo, hi] with the prescribed h^0 and h^1 on P^1.
inline int solve_twist(int lo, int hi, long want_h0, long want_h1) {
    int found = 0;
    bool any = false;
    for (int d = lo; d <= hi; ++d) {
        if (h0(1, d) == want_h0 && h1_p1(d) == want_h1) {
            if (any) throw std::logic_error("twist constraints are not rigid");
            found = d;
            any = true;
        }
    }
    if (!any) throw std::logic_error("twist constraints are unsatisfiable");
    return found;
}

}  // namespace detail

/*
 * Trace-zero splitting type of a degree-n cover of a rational normal curve of
 * degree r induced by a complete half-canonical series.
 *
 * Derivation, not a lookup: the summands O(a_i) are negative; h^1 of the
 * canonical pushforward is 1, which forces exactly one a_i + 2r = -2; the
 * section count h^0 = r+1 of the inducing bundle and its h^1 = r+1 force
 * h^0(O(a_i + r)) = h^1(O(a_i + r)) = 0 for the remaining summands, and the
 * only twist with both vanishing is -1.
 */
inline SplitBundle theta_splitting(int n, int r) {
    if (n < 2) throw std::invalid_argument("cover degree must be >= 2");
    if (r < 1) throw std::invalid_argument("target degree must be >= 1");
    const int lo = -2 * r - 4, hi = -1;
    const int special = detail::solve_twist(lo + 2 * r, hi + 2 * r, h0(1, -2), 1) - 2 * r;
    const int pinned = detail::solve_twist(lo + r, hi + r, 0, 0) - r;
    std::vector<int> twists(n - 2, pinned);
    twists.push_back(special);
    return SplitBundle(std::move(twists));
}

enum class MuMode { Zero, Nonzero, Iso };

// Zero / nonzero / isomorphism profile of the trace-part multiplication
// E_i (x) E_j -> O (+) E, symmetric in (i, j). Summands are 1-based; target 0
// is the O-part and target k >= 1 the k-th trace-zero summand.
class MuProfile {
public:
    explicit MuProfile(std::size_t summands) : k_(summands), marks_(pair_count() * (k_ + 1)) {}

    std::size_t summands() const { return k_; }

    MuMode mode(std::size_t i, std::size_t j, std::size_t target) const {
        return marks_.at(slot(i, j, target));
    }

    void set(std::size_t i, std::size_t j, std::size_t target, MuMode m) {
        marks_.at(slot(i, j, target)) = m;
    }

    bool operator==(const MuProfile&) const = default;

private:
    std::size_t pair_count() const { return k_ * (k_ + 1) / 2; }

    std::size_t slot(std::size_t i, std::size_t j, std::size_t target) const {
        if (i < 1 || i > k_ || j < 1 || j > k_ || target > k_)
            throw std::out_of_range("mu profile index");
        if (i > j) std::swap(i, j);
        const std::size_t pair = (i - 1) * k_ - (i - 1) * (i - 2) / 2 + (j - i);
        return pair * (k_ + 1) + target;
    }

    std::size_t k_;
    std::vector<MuMode> marks_;
};

// Degree bookkeeping on P^1: a nonzero sheaf map O(s) -> O(t) needs s <= t,
// and an isomorphism needs s = t. Entries violating the first are forced to
// zero; iso claims violating the second are demoted to nonzero.
inline MuProfile enforce_degree_rules(MuProfile mu, const SplitBundle& trace_zero) {
    const auto twist = [&](std::size_t target) {
        return target == 0 ? 0 : trace_zero.twists.at(target - 1);
    };
    for (std::size_t i = 1; i <= mu.summands(); ++i)
        for (std::size_t j = i; j <= mu.summands(); ++j) {
            const int src = trace_zero.twists.at(i - 1) + trace_zero.twists.at(j - 1);
            for (std::size_t c = 0; c <= mu.summands(); ++c) {
                const MuMode m = mu.mode(i, j, c);
                if (m == MuMode::Zero) continue;
                if (src > twist(c))
                    mu.set(i, j, c, MuMode::Zero);
                else if (m == MuMode::Iso && src != twist(c))
                    mu.set(i, j, c, MuMode::Nonzero);
            }
        }
    return mu;
}

// Multiplication profile of an integral cover with no extra structure
// assumed. For n = 2 the cover is cyclic and the trace part squares into the
// O-part. For n >= 3 some pair of top summands maps isomorphically onto the
// bottom summand: anything less would split off an integral subalgebra of
// rank n-1, and n-1 does not divide n.
inline MuProfile generic_mu_profile(int n) {
    if (n < 2) throw std::invalid_argument("cover degree must be >= 2");
    MuProfile mu(static_cast<std::size_t>(n) - 1);
    if (n == 2)
        mu.set(1, 1, 0, MuMode::Nonzero);
    else
        mu.set(1, 1, static_cast<std::size_t>(n) - 1, MuMode::Iso);
    return mu;
}

// Abstract pushforward algebra O (+) E of a finite cover, with the section
// twist scale of the inducing bundle and the trace-part product profile.
struct CoverAlgebra {
    int degree;
    int target_twist;
    SplitBundle bundle;
    MuProfile mu;

    CoverAlgebra(int n, int r, SplitBundle trace_zero, MuProfile profile)
        : degree(n), target_twist(r), bundle(std::move(trace_zero)),
          mu(enforce_degree_rules(std::move(profile), bundle)) {
        if (1 + bundle.size() != static_cast<std::size_t>(degree))
            throw std::invalid_argument("algebra rank must equal the cover degree");
        if (mu.summands() != bundle.size())
            throw std::invalid_argument("mu profile shape mismatch");
    }

    static CoverAlgebra theta_cover(int n, int r) {
        return CoverAlgebra(n, r, theta_splitting(n, r), generic_mu_profile(n));
    }
};

// True iff a totally cyclic splitting {-c, -2c, ..., -(n-1)c} realizes the
// derived trace-zero type for some c. Decided by comparing multisets, and
// the comparison succeeds exactly for covers of degree 2 or 3.
inline bool cyclic_admissible(int n, int r) {
    if (n < 2) throw std::invalid_argument("cover degree must be >= 2");
    const SplitBundle expected = theta_splitting(n, r);
    for (int c = 1; c <= 2 * r + 2; ++c) {
        std::vector<int> shape;
        for (int i = 1; i < n; ++i) shape.push_back(-i * c);
        if (SplitBundle(std::move(shape)) == expected) return true;
    }
    return false;
}

// Raised when no split bundle reproduces a Hilbert-function table.
class HilbertFitError : public std::runtime_error {
public:
    HilbertFitError(int k, const std::string& what)
        : std::runtime_error("no split bundle fits at k = " + std::to_string(k) + ": " + what),
          failing_k(k) {}
    int failing_k;
};

/*
 * Recovers the unique split bundle with h^0(F(k)) = dims(k) over a contiguous
 * window. The multiplicity of the twist -k is the second finite difference of
 * the table at k; the window must start below every twist (so the two ghost
 * values below it are 0) and reach -k for the largest twist -k present.
 * The recovered bundle is checked against the whole table.
 */
inline SplitBundle hilbert_fit(const std::map<int, long>& dims) {
    if (dims.empty()) throw std::invalid_argument("empty Hilbert table");
    const int k_lo = dims.begin()->first, k_hi = dims.rbegin()->first;
    if (static_cast<std::size_t>(k_hi - k_lo + 1) != dims.size())
        throw std::invalid_argument("Hilbert table window is not contiguous");

    const auto h = [&](int k) { return k < k_lo ? 0 : dims.at(k); };
    std::vector<int> twists;
    for (int k = k_lo; k <= k_hi; ++k) {
        const long mult = h(k) - 2 * h(k - 1) + h(k - 2);
        if (mult < 0) throw HilbertFitError(k, "negative multiplicity");
        twists.insert(twists.end(), mult, -k);
    }
    SplitBundle bundle(std::move(twists));
    for (int k = k_lo; k <= k_hi; ++k)
        if (bundle.h0_twisted(k) != dims.at(k))
            throw HilbertFitError(k, "table mismatch after fit");
    return bundle;
}

}  // namespace mindeg
