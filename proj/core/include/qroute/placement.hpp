#pragma once

#include "qroute/circuit.hpp"
#include "qroute/topology.hpp"

#include <cstdint>
#include <vector>

namespace qroute {

/// Injective virtual-to-physical qubit assignment with its inverse. Spare
/// physical qubits hold kFree. Both tables are kept mutually inverse by
/// apply_swap.
struct Placement {
  static constexpr QubitIndex kFree = -1;

  std::vector<QubitIndex> virt_to_phys;
  std::vector<QubitIndex> phys_to_virt;

  [[nodiscard]] static Placement identity(int num_virtual, int num_physical);

  [[nodiscard]] int num_virtual() const { return static_cast<int>(virt_to_phys.size()); }
  [[nodiscard]] int num_physical() const { return static_cast<int>(phys_to_virt.size()); }
  [[nodiscard]] QubitIndex phys_of(QubitIndex v) const {
    return virt_to_phys[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] QubitIndex virt_at(QubitIndex p) const {
    return phys_to_virt[static_cast<std::size_t>(p)];
  }

  /// Exchanges the occupants of two physical qubits.
  void apply_swap(QubitIndex p0, QubitIndex p1);

  /// True when the two tables are mutually inverse and injective.
  [[nodiscard]] bool consistent() const;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Uniformly random injective placement of n virtual qubits onto the
/// topology's physical qubits, deterministic per seed. Throws if n exceeds
/// the physical qubit count.
[[nodiscard]] Placement random_placement(int num_virtual, const Topology& t, std::uint64_t seed);

}  // namespace qroute
