#include <doctest.h>

#include <algorithm>
#include <set>

#include "flaginv/derangements.hpp"
#include "flaginv/errors.hpp"
#include "support.hpp"

using namespace flaginv;

namespace {

std::vector<int> ob(const Derangement& d) { return d.one_based(); }

} // namespace

TEST_CASE("derangement counts") {
    CHECK(count_derangements(1) == 0);
    CHECK(count_derangements(2) == 1);
    CHECK(count_derangements(3) == 2);
    CHECK(count_derangements(4) == 9);
    CHECK(count_derangements(5) == 44);
    CHECK(count_derangements(6) == 265);
    CHECK_THROWS_AS(count_derangements(0), DomainError);
}

TEST_CASE("enumeration is lexicographic and complete") {
    auto r2 = enumerate_derangements(2);
    REQUIRE(r2.size() == 1);
    CHECK(ob(r2[0]) == std::vector<int>{2, 1});

    auto r3 = enumerate_derangements(3);
    REQUIRE(r3.size() == 2);
    CHECK(ob(r3[0]) == std::vector<int>{2, 3, 1});
    CHECK(ob(r3[1]) == std::vector<int>{3, 1, 2});

    // The full r=4 table in lexicographic order.
    auto r4 = enumerate_derangements(4);
    std::vector<std::vector<int>> expected = {
        {2, 1, 4, 3}, {2, 3, 4, 1}, {2, 4, 1, 3},
        {3, 1, 4, 2}, {3, 4, 1, 2}, {3, 4, 2, 1},
        {4, 1, 2, 3}, {4, 3, 1, 2}, {4, 3, 2, 1},
    };
    REQUIRE(r4.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(ob(r4[k]) == expected[k]);

    for (int r = 2; r <= 8; ++r) {
        auto all = enumerate_derangements(r);
        CHECK(all.size() == count_derangements(r));
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
    CHECK_THROWS_AS(enumerate_derangements(9), DomainError);
}

TEST_CASE("order-two derangements") {
    CHECK(order_two_derangements(2).size() == 1);
    CHECK(order_two_derangements(4).size() == 3);  // 3!! = 3*1
    CHECK(order_two_derangements(6).size() == 15); // 5!! = 5*3*1
    CHECK(order_two_derangements(3).empty());
    CHECK(order_two_derangements(5).empty());
    for (const Derangement& d : order_two_derangements(6)) {
        CHECK(d.is_involution());
        CHECK(d.inverse() == d);
    }
}

TEST_CASE("witness matching examples") {
    auto full = [](int r) {
        std::vector<std::vector<bool>> adj(r, std::vector<bool>(r, true));
        for (int i = 0; i < r; ++i) adj[i][i] = false;
        return adj;
    };

    auto w3 = find_witness_matching(full(3));
    REQUIRE(w3.has_value());
    CHECK(ob(*w3) == std::vector<int>{2, 3, 1});

    auto empty_row = full(3);
    empty_row[1] = {false, false, false};
    CHECK_FALSE(find_witness_matching(empty_row).has_value());

    std::vector<std::vector<bool>> cycle(4, std::vector<bool>(4, false));
    for (int i = 0; i < 4; ++i) cycle[i][(i + 1) % 4] = true;
    auto w4 = find_witness_matching(cycle);
    REQUIRE(w4.has_value());
    CHECK(ob(*w4) == std::vector<int>{2, 3, 4, 1});

    std::vector<std::vector<bool>> bad = {{true}};
    CHECK_THROWS_AS(find_witness_matching(bad), DomainError);
}

TEST_CASE("witness matching agrees with exhaustive scan") {
    testsupport::Rng rng(201);
    for (int trial = 0; trial < 300; ++trial) {
        int r = 2 + static_cast<int>(rng.integer(0, 4)); // r in 2..6
        std::vector<std::vector<bool>> adj(r, std::vector<bool>(r, false));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (i != j) adj[i][j] = rng.integer(0, 2) > 0;

        auto fast = find_witness_matching(adj);
        bool brute = false;
        for (const Derangement& d : enumerate_derangements(r)) {
            bool ok = true;
            for (int i = 0; i < r; ++i)
                if (!adj[i][d(i)]) { ok = false; break; }
            if (ok) { brute = true; break; }
        }
        CHECK(fast.has_value() == brute);
        if (fast) {
            for (int i = 0; i < r; ++i) CHECK(adj[i][(*fast)(i)]);
        }
    }
}

TEST_CASE("half-set for odd r") {
    auto h3 = pick_half_set(3);
    REQUIRE(h3.size() == 1);
    CHECK(ob(h3[0]) == std::vector<int>{2, 3, 1});

    CHECK(pick_half_set(5).size() == 22);
    CHECK_THROWS_AS(pick_half_set(4), DomainError);
    CHECK_THROWS_AS(pick_half_set(1), DomainError);

    for (int r : {3, 5}) {
        auto half = pick_half_set(r);
        std::set<std::vector<int>> seen;
        for (const Derangement& d : half) {
            CHECK(seen.insert(d.images()).second);
            CHECK(seen.insert(d.inverse().images()).second); // disjoint from inverses
        }
        CHECK(seen.size() == count_derangements(r));
    }
}

TEST_CASE("moment slot order") {
    // r=4: the three involutions first, then the smaller member of each
    // inverse pair, everything lexicographic.
    auto slots = moment_slot_order(4);
    std::vector<std::vector<int>> expected = {
        {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1},
        {2, 3, 4, 1}, {2, 4, 1, 3}, {3, 4, 2, 1},
    };
    REQUIRE(slots.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(ob(slots[k]) == expected[k]);

    CHECK(moment_slot_order(3) == pick_half_set(3));
    CHECK(moment_slot_order(5) == pick_half_set(5));
    CHECK(moment_slot_order(6).size() == (265 + 15) / 2);
}
