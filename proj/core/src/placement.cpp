#include "qroute/placement.hpp"

#include "qroute/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace qroute {

Placement Placement::identity(int num_virtual, int num_physical) {
  if (num_virtual > num_physical) {
    throw std::invalid_argument("Placement: more virtual than physical qubits");
  }
  Placement p;
  p.virt_to_phys.resize(static_cast<std::size_t>(num_virtual));
  std::iota(p.virt_to_phys.begin(), p.virt_to_phys.end(), 0);
  p.phys_to_virt.assign(static_cast<std::size_t>(num_physical), kFree);
  for (int v = 0; v < num_virtual; ++v) p.phys_to_virt[static_cast<std::size_t>(v)] = v;
  return p;
}

void Placement::apply_swap(QubitIndex p0, QubitIndex p1) {
  QubitIndex& v0 = phys_to_virt[static_cast<std::size_t>(p0)];
  QubitIndex& v1 = phys_to_virt[static_cast<std::size_t>(p1)];
  std::swap(v0, v1);
  if (v0 != kFree) virt_to_phys[static_cast<std::size_t>(v0)] = p0;
  if (v1 != kFree) virt_to_phys[static_cast<std::size_t>(v1)] = p1;
}

bool Placement::consistent() const {
  std::size_t occupied = 0;
  for (std::size_t p = 0; p < phys_to_virt.size(); ++p) {
    const QubitIndex v = phys_to_virt[p];
    if (v == kFree) continue;
    if (v < 0 || static_cast<std::size_t>(v) >= virt_to_phys.size()) return false;
    if (virt_to_phys[static_cast<std::size_t>(v)] != static_cast<QubitIndex>(p)) return false;
    ++occupied;
  }
  return occupied == virt_to_phys.size();
}

Placement random_placement(int num_virtual, const Topology& t, std::uint64_t seed) {
  const int m = t.num_qubits();
  if (num_virtual > m) {
    throw std::invalid_argument("random_placement: more virtual than physical qubits");
  }
  std::vector<QubitIndex> slots(static_cast<std::size_t>(m));
  std::iota(slots.begin(), slots.end(), 0);
  Rng rng(seed);
  rng.shuffle(slots);

  Placement p;
  p.virt_to_phys.assign(slots.begin(), slots.begin() + num_virtual);
  p.phys_to_virt.assign(static_cast<std::size_t>(m), Placement::kFree);
  for (int v = 0; v < num_virtual; ++v) {
    p.phys_to_virt[static_cast<std::size_t>(p.virt_to_phys[static_cast<std::size_t>(v)])] = v;
  }
  return p;
}

}  // namespace qroute
