#pragma once

#include <cstdint>

namespace lrev {

/// Query accounting. Classical reads are direct input-symbol reads;
/// quantum_charged counts input queries attributed to oracle applications
/// inside a (simulated) Grover search. Simulator bookkeeping is never charged.
struct QueryLedger {
  std::uint64_t classical_reads = 0;
  std::uint64_t quantum_charged = 0;
  std::uint64_t predicate_calls = 0;

  std::uint64_t total() const { return classical_reads + quantum_charged; }

  QueryLedger& operator+=(const QueryLedger& other) {
    classical_reads += other.classical_reads;
    quantum_charged += other.quantum_charged;
    predicate_calls += other.predicate_calls;
    return *this;
  }

  bool operator==(const QueryLedger&) const = default;
};

inline void charge_read(QueryLedger* ledger, std::uint64_t count = 1) {
  if (ledger != nullptr) ledger->classical_reads += count;
}

} // namespace lrev
