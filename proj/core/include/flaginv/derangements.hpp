#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace flaginv {

// Fixed-point-free permutation of {0, .., r-1}.  Stored 0-based; one_based()
// gives the image tuple in the conventional notation, e.g. (2143).
class Derangement {
public:
    explicit Derangement(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }
    std::vector<int> one_based() const;

    Derangement inverse() const;
    bool is_involution() const;

    friend bool operator==(const Derangement& a, const Derangement& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Derangement& a, const Derangement& b) { return !(a == b); }
    // Lexicographic on image sequences; the enumeration order.
    friend bool operator<(const Derangement& a, const Derangement& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<int> images_;
};

// !r by the recurrence !r = (r-1)(!(r-1) + !(r-2)), !1 = 0, !2 = 1.
std::uint64_t count_derangements(int r);

// All derangements of r letters in lexicographic order of image sequences.
// Guarded to r <= 8.
std::vector<Derangement> enumerate_derangements(int r);

// Fixed-point-free involutions, lexicographic.  Count (r-1)!! for even r;
// empty for odd r.
std::vector<Derangement> order_two_derangements(int r);

// A derangement sigma with adjacency[i][sigma(i)] true for all i, or nullopt
// when no perfect matching exists.  Deterministic: augmenting paths explored
// in lowest-index order, rows taken in order.  Diagonal must be false.
std::optional<Derangement> find_witness_matching(const std::vector<std::vector<bool>>& adjacency);

// For odd r >= 3: one representative per inverse pair {sigma, sigma^-1},
// keeping the lexicographically smaller; !r/2 elements, lexicographic.
std::vector<Derangement> pick_half_set(int r);

// Slot order for Hermitian moment vectors: involutions first (lexicographic),
// then the lexicographically smaller member of each remaining inverse pair.
// For odd r this is exactly pick_half_set(r).
std::vector<Derangement> moment_slot_order(int r);

} // namespace flaginv
