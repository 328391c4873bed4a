#include <doctest.h>

#include <set>

#include "rainbow/bitset.hpp"
#include "rainbow/generators.hpp"

using rainbow::Bitset;

TEST_CASE("bitset basics") {
    Bitset b(130);
    CHECK(b.size() == 130);
    CHECK(b.none());
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.test(64));
    CHECK_FALSE(b.test(63));
    b.reset(64);
    CHECK(b.count() == 2);
    CHECK(b.any());
    b.clear();
    CHECK(b.none());
}

TEST_CASE("bitset set algebra against std::set") {
    rainbow::SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int width = 1 + static_cast<int>(rng.below(200));
        Bitset a(width), b(width);
        std::set<int> sa, sb;
        for (int i = 0; i < width / 2; ++i) {
            int x = static_cast<int>(rng.below(width));
            int y = static_cast<int>(rng.below(width));
            a.set(x);
            sa.insert(x);
            b.set(y);
            sb.insert(y);
        }
        CHECK(a.count() == static_cast<int>(sa.size()));

        bool inter = false;
        for (int x : sa) inter = inter || sb.count(x);
        CHECK(a.intersects(b) == inter);

        bool subset = true;
        for (int x : sa) subset = subset && sb.count(x);
        CHECK(a.is_subset_of(b) == subset);

        Bitset u = a;
        u |= b;
        std::set<int> su = sa;
        su.insert(sb.begin(), sb.end());
        CHECK(u.count() == static_cast<int>(su.size()));

        Bitset d = a;
        d.subtract(b);
        int diff = 0;
        for (int x : sa) diff += sb.count(x) ? 0 : 1;
        CHECK(d.count() == diff);
    }
}

TEST_CASE("bitset equality and hashing") {
    Bitset a(10), b(10), c(11);
    a.set(3);
    b.set(3);
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(a != c);
    b.set(4);
    CHECK(a != b);
}
