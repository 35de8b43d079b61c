#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "relaysim/analytic.hpp"
#include "relaysim/event_queue.hpp"
#include "relaysim/world.hpp"

using namespace relaysim;

namespace {

Event ev(SimTime t, EventKind kind, std::uint32_t station, FrameKind fk = FrameKind::Data) {
    Event e;
    e.time = t;
    e.kind = kind;
    e.station = station;
    e.frame.kind = fk;
    return e;
}

} // namespace

TEST_CASE("events pop in time order, insertion order within a tie") {
    EventQueue q;
    q.schedule(ev(5, EventKind::TransmitComplete, 0));
    q.schedule(ev(3, EventKind::TransmitComplete, 1));
    q.schedule(ev(3, EventKind::TransmitComplete, 2));
    q.schedule(ev(1, EventKind::TransmitComplete, 3));
    const SimTime inf = UINT64_MAX;
    CHECK(q.pop(inf)->station == 3);
    CHECK(q.pop(inf)->station == 1);
    CHECK(q.pop(inf)->station == 2);
    CHECK(q.pop(inf)->station == 0);
    CHECK_FALSE(q.pop(inf).has_value());
}

TEST_CASE("control arrivals outrank simultaneous data events") {
    EventQueue q;
    const SimTime inf = UINT64_MAX;
    // inserted last, but ACK/NACK arrivals at an equal instant win
    q.schedule(ev(10, EventKind::ArrivalComplete, 0, FrameKind::Data));
    q.schedule(ev(10, EventKind::TransmitComplete, 1));
    q.schedule(ev(10, EventKind::ArrivalComplete, 2, FrameKind::Ack));
    q.schedule(ev(10, EventKind::ArrivalComplete, 3, FrameKind::Nack));
    CHECK(q.pop(inf)->station == 2);
    CHECK(q.pop(inf)->station == 3);
    CHECK(q.pop(inf)->station == 0);
    CHECK(q.pop(inf)->station == 1);

    // the rule only applies to arrivals: a timer carrying no frame is ordinary
    Event timer = ev(20, EventKind::TimerFire, 4);
    timer.token = 1;
    q.schedule(timer);
    q.schedule(ev(20, EventKind::ArrivalComplete, 5, FrameKind::Ack));
    CHECK(q.pop(inf)->station == 5);
    CHECK(q.pop(inf)->station == 4);
}

TEST_CASE("cancelled timers never fire") {
    EventQueue q;
    Event t = ev(10, EventKind::TimerFire, 0);
    t.token = 7;
    q.schedule(t);
    q.cancel_timer(7);
    CHECK(q.drained());
    CHECK_FALSE(q.pop(UINT64_MAX).has_value());
    CHECK(q.stale_cancels() == 0);
    q.cancel_timer(7);  // second cancel of the same token is stale
    CHECK(q.stale_cancels() == 1);
}

TEST_CASE("cancelling an already-fired timer is counted, not fatal") {
    EventQueue q;
    Event t = ev(10, EventKind::TimerFire, 0);
    t.token = 9;
    q.schedule(t);
    REQUIRE(q.pop(UINT64_MAX).has_value());
    q.cancel_timer(9);
    CHECK(q.stale_cancels() == 1);
}

TEST_CASE("scheduling into the past is a hard error") {
    EventQueue q;
    q.schedule(ev(10, EventKind::TransmitComplete, 0));
    REQUIRE(q.pop(UINT64_MAX).has_value());
    CHECK_NOTHROW(q.schedule(ev(10, EventKind::TransmitComplete, 0)));  // same instant ok
    CHECK_THROWS_AS(q.schedule(ev(9, EventKind::TransmitComplete, 0)), std::logic_error);
}

TEST_CASE("events beyond the clock range are rejected") {
    EventQueue q;
    CHECK_THROWS_AS(q.schedule(ev(kMaxSimTime + 1, EventKind::TransmitComplete, 0)),
                    std::runtime_error);
}

TEST_CASE("the horizon hides later events without consuming them") {
    EventQueue q;
    q.schedule(ev(10, EventKind::TransmitComplete, 0));
    q.schedule(ev(20, EventKind::TransmitComplete, 1));
    CHECK(q.pop(15)->station == 0);
    CHECK_FALSE(q.pop(15).has_value());
    CHECK_FALSE(q.drained());
    CHECK(q.pop(20)->station == 1);
    CHECK(q.drained());
}

TEST_CASE("corruption sampling consumes a fixed draw count per frame") {
    const std::uint64_t th_pkt = RandomStream::threshold(0.3);

    SUBCASE("packet mode: one draw") {
        RandomStream a(11), twin(11);
        (void)sample_corruption(SamplingMode::Packet, a, 1000, th_pkt, 0);
        (void)twin.next();
        CHECK(a.next() == twin.next());
    }
    SUBCASE("per-bit mode: 8 x length, even when no bit can flip") {
        RandomStream a(11), twin(11);
        CHECK_FALSE(sample_corruption(SamplingMode::PerBit, a, 125, 0, 0));
        for (int i = 0; i < 1000; ++i) (void)twin.next();
        CHECK(a.next() == twin.next());
    }
    SUBCASE("per-bit mode: no short-circuit after an early flip") {
        RandomStream a(11), twin(11);
        CHECK(sample_corruption(SamplingMode::PerBit, a, 125, 0,
                                RandomStream::threshold(1.0)));
        for (int i = 0; i < 1000; ++i) (void)twin.next();
        CHECK(a.next() == twin.next());
    }
}

TEST_CASE("both sampling modes reproduce the per-hop loss rate") {
    const double ber = 1e-3;
    const std::uint32_t len = 50;
    const double w = analytic::per_hop_loss(ber, len).value();  // ~0.33
    const std::uint64_t th_pkt = RandomStream::threshold(w);
    const std::uint64_t th_bit = RandomStream::threshold(ber);
    const int n = 20000;
    const double sigma = std::sqrt(w * (1 - w) / n);

    RandomStream rp(100), rb(101);
    int hits_p = 0, hits_b = 0;
    for (int i = 0; i < n; ++i) {
        hits_p += sample_corruption(SamplingMode::Packet, rp, len, th_pkt, th_bit);
        hits_b += sample_corruption(SamplingMode::PerBit, rb, len, th_pkt, th_bit);
    }
    CHECK(std::abs(double(hits_p) / n - w) < 4 * sigma);
    CHECK(std::abs(double(hits_b) / n - w) < 4 * sigma);
}
