#include "flaginv/derangements.hpp"

#include <algorithm>
#include <numeric>

#include "flaginv/errors.hpp"

namespace flaginv {

Derangement::Derangement(std::vector<int> images) : images_(std::move(images)) {
    int r = size();
    std::vector<bool> seen(r, false);
    for (int i = 0; i < r; ++i) {
        int v = images_[i];
        if (v < 0 || v >= r || seen[v]) throw DomainError("permutation", "images not a bijection");
        if (v == i) throw DomainError("permutation", "fixed point at index " + std::to_string(i));
        seen[v] = true;
    }
}

std::vector<int> Derangement::one_based() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
}

Derangement Derangement::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
    return Derangement(std::move(inv));
}

bool Derangement::is_involution() const {
    for (int i = 0; i < size(); ++i)
        if (images_[images_[i]] != i) return false;
    return true;
}

std::uint64_t count_derangements(int r) {
    if (r < 1) throw DomainError("size", "derangement count needs r >= 1");
    if (r == 1) return 0;
    if (r == 2) return 1;
    std::uint64_t prev2 = 0, prev1 = 1; // !1, !2
    for (int k = 3; k <= r; ++k) {
        std::uint64_t cur = static_cast<std::uint64_t>(k - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

std::vector<Derangement> enumerate_derangements(int r) {
    if (r < 1) throw DomainError("size", "derangement enumeration needs r >= 1");
    if (r > 8) throw DomainError("size", "derangement enumeration supported for r <= 8");
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Derangement> out;
    do {
        bool fixed_point = false;
        for (int i = 0; i < r; ++i)
            if (perm[i] == i) { fixed_point = true; break; }
        if (!fixed_point) out.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Derangement> order_two_derangements(int r) {
    if (r % 2 != 0) return {};
    std::vector<Derangement> out;
    for (const Derangement& d : enumerate_derangements(r))
        if (d.is_involution()) out.push_back(d);
    return out;
}

namespace {

bool augment(const std::vector<std::vector<bool>>& adj, int i,
             std::vector<int>& match_of_col, std::vector<bool>& visited) {
    int r = static_cast<int>(adj.size());
    for (int j = 0; j < r; ++j) {
        if (!adj[i][j] || visited[j]) continue;
        visited[j] = true;
        if (match_of_col[j] < 0 || augment(adj, match_of_col[j], match_of_col, visited)) {
            match_of_col[j] = i;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<Derangement> find_witness_matching(const std::vector<std::vector<bool>>& adjacency) {
    int r = static_cast<int>(adjacency.size());
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(adjacency[i].size()) != r)
            throw DomainError("shape", "adjacency grid must be square");
        if (adjacency[i][i])
            throw DomainError("shape", "adjacency diagonal must be empty");
    }
    std::vector<int> match_of_col(r, -1);
    for (int i = 0; i < r; ++i) {
        std::vector<bool> visited(r, false);
        if (!augment(adjacency, i, match_of_col, visited)) return std::nullopt;
    }
    std::vector<int> images(r);
    for (int j = 0; j < r; ++j) images[match_of_col[j]] = j;
    return Derangement(std::move(images));
}

std::vector<Derangement> pick_half_set(int r) {
    if (r % 2 == 0) throw DomainError("size", "half-set defined for odd r");
    if (r < 3) throw DomainError("size", "half-set needs r >= 3");
    std::vector<Derangement> out;
    for (const Derangement& d : enumerate_derangements(r))
        if (d.images() <= d.inverse().images()) out.push_back(d);
    return out;
}

std::vector<Derangement> moment_slot_order(int r) {
    std::vector<Derangement> out;
    std::vector<Derangement> rest;
    for (const Derangement& d : enumerate_derangements(r)) {
        if (d.is_involution()) out.push_back(d);
        else if (d.images() < d.inverse().images()) rest.push_back(d);
    }
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

} // namespace flaginv
