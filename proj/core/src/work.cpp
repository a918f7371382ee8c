#include "cliquesim/work.hpp"

#include <algorithm>

namespace cliquesim {

WorkSummary work_report(const std::vector<TraceRecord>& trace) {
  WorkSummary s;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (trace[i].is_legal) {
      s.first_legal_record = i;
      break;
    }
  }
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const bool stabilizing = !s.first_legal_record || i <= *s.first_legal_record;
    if (stabilizing) {
      for (const auto& [id, c] : trace[i].per_node_sent) {
        s.stabilization_sent[id] += c;
      }
      for (const auto& [id, c] : trace[i].per_node_received) {
        s.stabilization_received[id] += c;
      }
    } else if (i >= *s.first_legal_record + 3) {
      for (const auto& [id, c] : trace[i].per_node_sent) {
        s.max_maintenance_sent = std::max(s.max_maintenance_sent, c);
      }
      for (const auto& [id, c] : trace[i].per_node_received) {
        s.max_maintenance_received = std::max(s.max_maintenance_received, c);
      }
    }
  }
  for (const auto& [id, c] : s.stabilization_sent) {
    s.max_stabilization_sent = std::max(s.max_stabilization_sent, c);
  }
  for (const auto& [id, c] : s.stabilization_received) {
    s.max_stabilization_received = std::max(s.max_stabilization_received, c);
  }
  return s;
}

}  // namespace cliquesim
