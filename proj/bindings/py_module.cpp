#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relaysim/analytic.hpp"
#include "relaysim/experiments.hpp"
#include "relaysim/scenario.hpp"

namespace py = pybind11;
using namespace relaysim;

PYBIND11_MODULE(relaysim, m) {
    m.doc() = "hop-by-hop ARQ relay-chain simulator: closed forms and Monte Carlo";

    // Closed-form layer. Probabilities cross the boundary as plain floats.
    m.def("per_hop_loss",
          [](double ber, std::uint32_t packet_len) {
              return analytic::per_hop_loss(ber, packet_len).value();
          },
          py::arg("ber"), py::arg("packet_len"),
          "whole-frame corruption probability over 8*packet_len bits");
    m.def("end_to_end_loss",
          [](double per_hop, std::uint32_t relays) {
              return analytic::end_to_end_loss(analytic::Probability(per_hop), relays)
                  .value();
          },
          py::arg("per_hop"), py::arg("relays"),
          "loss across relays+1 independent hops without retransmission");
    m.def("ack_timeout", &analytic::ack_timeout, py::arg("rtt_s"), py::arg("t_ack_s"));
    m.def("residual_hop_loss_exact",
          [](double per_hop, std::uint32_t n) {
              return analytic::residual_hop_loss_exact(analytic::Probability(per_hop), n)
                  .value();
          },
          py::arg("per_hop"), py::arg("max_transmissions"));
    m.def("residual_hop_loss_approx",
          [](double ber, std::uint32_t packet_len, std::uint32_t n) {
              return analytic::residual_hop_loss_approx(ber, packet_len, n).value();
          },
          py::arg("ber"), py::arg("packet_len"), py::arg("max_transmissions"));
    m.def("end_to_end_delivery_approx",
          [](double ber, std::uint32_t packet_len, std::uint32_t n, std::uint32_t relays) {
              return analytic::end_to_end_delivery_approx(ber, packet_len, n, relays)
                  .value();
          },
          py::arg("ber"), py::arg("packet_len"), py::arg("max_transmissions"),
          py::arg("relays"));

    py::enum_<SamplingMode>(m, "SamplingMode")
        .value("packet", SamplingMode::Packet)
        .value("perbit", SamplingMode::PerBit);

    py::register_exception<ConfigError>(m, "ConfigError");

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("ber", &ScenarioConfig::ber)
        .def_readwrite("packet_len", &ScenarioConfig::packet_len)
        .def_readwrite("ack_len", &ScenarioConfig::ack_len)
        .def_readwrite("bandwidth_bps", &ScenarioConfig::bandwidth_bps)
        .def_readwrite("prop_delay_s", &ScenarioConfig::prop_delay_s)
        .def_readwrite("relays", &ScenarioConfig::relays)
        .def_readwrite("max_transmissions", &ScenarioConfig::max_transmissions)
        .def_readwrite("buffer_slots", &ScenarioConfig::buffer_slots)
        .def_property("seed",
                      [](const ScenarioConfig& c) { return c.seed; },
                      [](ScenarioConfig& c, std::uint64_t s) {
                          c.seed = s;
                          c.seed_set = true;
                      })
        .def_readwrite("stop_packets", &ScenarioConfig::stop_packets)
        .def_readwrite("stop_seconds", &ScenarioConfig::stop_seconds)
        .def_readwrite("sampling_mode", &ScenarioConfig::sampling_mode)
        .def_readwrite("ideal_acks", &ScenarioConfig::ideal_acks)
        .def_readwrite("check_delay_s", &ScenarioConfig::check_delay_s);

    py::class_<Metrics>(m, "Metrics")
        .def_readonly("generated", &Metrics::generated)
        .def_readonly("delivered_unique", &Metrics::delivered_unique)
        .def_readonly("duplicates_suppressed", &Metrics::duplicates_suppressed)
        .def_readonly("dropped_retx_limit", &Metrics::dropped_retx_limit)
        .def_readonly("dropped_buffer_overflow", &Metrics::dropped_buffer_overflow)
        .def_readonly("total_transmissions", &Metrics::total_transmissions)
        .def_readonly("stale_acks", &Metrics::stale_acks)
        .def_readonly("in_flight_at_end", &Metrics::in_flight_at_end)
        .def_readonly("utilization", &Metrics::utilization)
        .def_readonly("end_to_end_loss", &Metrics::end_to_end_loss)
        .def_readonly("mean_latency_s", &Metrics::mean_latency_s)
        .def_readonly("max_latency_s", &Metrics::max_latency_s)
        .def_readonly("first_delivery_latency_s", &Metrics::first_delivery_latency_s)
        .def_readonly("starved", &Metrics::starved);

    m.def("run_scenario",
          [](const ScenarioConfig& cfg) { return experiments::run_scenario(cfg); },
          py::arg("config"), py::call_guard<py::gil_scoped_release>());

    py::class_<experiments::SweepRow>(m, "SweepRow")
        .def_readonly("value", &experiments::SweepRow::value)
        .def_readonly("metrics", &experiments::SweepRow::metrics);

    m.def("sweep_retransmissions", &experiments::sweep_retransmissions,
          py::arg("base"), py::arg("n_values"),
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep_buffer", &experiments::sweep_buffer, py::arg("base"),
          py::arg("b_values"), py::call_guard<py::gil_scoped_release>());

    py::class_<experiments::ValidationPoint>(m, "ValidationPoint")
        .def(py::init([](double ber, std::uint32_t packet_len, std::uint32_t relays,
                         std::uint32_t max_transmissions) {
                 experiments::ValidationPoint p;
                 p.ber = ber;
                 p.packet_len = packet_len;
                 p.relays = relays;
                 p.max_transmissions = max_transmissions;
                 return p;
             }),
             py::arg("ber"), py::arg("packet_len"), py::arg("relays"),
             py::arg("max_transmissions"))
        .def_readonly("ber", &experiments::ValidationPoint::ber)
        .def_readonly("packet_len", &experiments::ValidationPoint::packet_len)
        .def_readonly("relays", &experiments::ValidationPoint::relays)
        .def_readonly("max_transmissions", &experiments::ValidationPoint::max_transmissions);

    py::class_<experiments::ValidationRow>(m, "ValidationRow")
        .def_readonly("point", &experiments::ValidationRow::point)
        .def_readonly("packets", &experiments::ValidationRow::packets)
        .def_readonly("delivered", &experiments::ValidationRow::delivered)
        .def_readonly("sim_delivery", &experiments::ValidationRow::sim_delivery)
        .def_readonly("exact_delivery", &experiments::ValidationRow::exact_delivery)
        .def_readonly("exact_z", &experiments::ValidationRow::exact_z)
        .def_readonly("approx_delivery", &experiments::ValidationRow::approx_delivery)
        .def_readonly("approx_z", &experiments::ValidationRow::approx_z)
        .def_readonly("approx_flagged", &experiments::ValidationRow::approx_flagged);

    m.def("validate_against_analytic", &experiments::validate_against_analytic,
          py::arg("grid"), py::arg("master_seed"), py::arg("packets_per_point"),
          py::call_guard<py::gil_scoped_release>());
}
