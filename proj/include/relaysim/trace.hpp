#ifndef RELAYSIM_TRACE_HPP
#define RELAYSIM_TRACE_HPP

#include <iosfwd>

#include "relaysim/world.hpp"

namespace relaysim {

/// Emits one tab-separated line per observed event or action:
/// `time<TAB>station<TAB>event_kind<TAB>seq<TAB>attempt<TAB>detail`.
/// Times are the exact 12-decimal rendering of the integer clock, so
/// identical runs produce byte-identical files.
class TraceWriter : public SimObserver {
  public:
    TraceWriter(std::ostream& os, const World& world) : os_(os), world_(world) {}

    void on_event(const Event& e, SimTime now) override;
    void on_action(std::uint32_t station, const Action& a, SimTime now) override;

  private:
    void line(SimTime now, std::uint32_t station, const char* kind,
              std::uint64_t seq, std::uint32_t attempt, const std::string& detail);

    std::ostream& os_;
    const World& world_;
};

} // namespace relaysim

#endif
