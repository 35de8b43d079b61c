#include <cmath>
#include <cstdint>
#include <set>
#include <string>

#include "doctest.h"
#include "relaysim/rng.hpp"

using namespace relaysim;

TEST_CASE("stream output is a pure function of the seed") {
    RandomStream a(123456789), b(123456789), c(123456790);
    bool any_differ = false;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t va = a.next();
        CHECK(va == b.next());
        any_differ |= va != c.next();
    }
    CHECK(any_differ);
}

// Frozen first outputs for one seed. These pin the exact generator and
// seeding procedure: any change to either silently changes every simulation
// result, so it must show up here first.
TEST_CASE("generator sequence regression anchor") {
    RandomStream r(1);
    CHECK(r.next() == 14971601782005023387ULL);
    CHECK(r.next() == 13781649495232077965ULL);
    CHECK(r.next() == 1847458086238483744ULL);
    CHECK(r.next() == 13765271635752736470ULL);
    CHECK(substream_seed(42, "link0/data") == 16545181315196053854ULL);
    CHECK(substream_seed(42, "link0/ack") == 1192637796324646347ULL);
    CHECK(substream_seed(42, "link1/data") == 17008733603959876577ULL);
    RandomStream u(7);
    CHECK(u.uniform() == 0.055360436478333108);
}

TEST_CASE("substreams with different labels are independent") {
    CHECK(substream_seed(42, "link0/data") != substream_seed(42, "link0/ack"));
    CHECK(substream_seed(42, "link0/data") != substream_seed(43, "link0/data"));
    std::set<std::uint64_t> seeds;
    for (int i = 0; i < 64; ++i)
        seeds.insert(substream_seed(9, "link" + std::to_string(i) + "/data"));
    CHECK(seeds.size() == 64);

    // same master seed, sibling labels: sequences must not be shifted copies
    RandomStream d(42, "link0/data"), k(42, "link0/ack");
    int equal = 0;
    for (int i = 0; i < 1000; ++i) equal += d.next() == k.next();
    CHECK(equal == 0);
}

TEST_CASE("uniform stays in [0, 1) and is roughly centered") {
    RandomStream r(2024);
    double sum = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double u = r.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("bernoulli thresholds are exact at the extremes") {
    CHECK(RandomStream::threshold(0.0) == 0);
    CHECK(RandomStream::threshold(1.0) == UINT64_MAX);
    RandomStream r(3);
    for (int i = 0; i < 1000; ++i) CHECK_FALSE(r.bernoulli(RandomStream::threshold(0.0)));
    for (int i = 0; i < 1000; ++i) CHECK(r.bernoulli(RandomStream::threshold(1.0)));
}

TEST_CASE("bernoulli frequency tracks the probability") {
    const double p = 0.076884;
    const std::uint64_t th = RandomStream::threshold(p);
    RandomStream r(5);
    const int n = 200000;
    int hits = 0;
    for (int i = 0; i < n; ++i) hits += r.bernoulli(th);
    const double sigma = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(double(hits) / n - p) < 4 * sigma);
}
