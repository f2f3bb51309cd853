// Index-level twisted polynomial arithmetic over a tabled coefficient ring.
// The exact layer is definitional; this mirror exists so exhaustive sweeps
// (zero-divisor scans, factor searches, automorphism sweeps) run on uint32
// lookups instead of rational arithmetic. Both layers enumerate in the same
// canonical order, so witnesses coincide.

#pragma once

#include <cstdint>
#include <vector>

#include "nacx/ring.hpp"

namespace nacx::fastskew {

using IPoly = std::vector<uint32_t>;  // ascending coefficient indices, stripped

struct Ctx {
  const DenseRingTables* D = nullptr;
  std::vector<PermMap> sigpow;  // sigma^0, sigma^1, ...

  uint32_t mul(uint32_t a, uint32_t b) const { return D->mul_at(a, b); }
  uint32_t add(uint32_t a, uint32_t b) const { return D->add_at(a, b); }
  uint32_t neg(uint32_t a) const { return D->neg[a]; }
  int64_t inv(uint32_t a) const { return D->inv[a]; }
  uint32_t sigma(size_t pw, uint32_t a) const { return sigpow[pw].img[a]; }
};

// Tables for D plus sigma powers up to max_power (inclusive). Requires
// D.tables() to be available.
Ctx make_ctx(const Ring& D, const RingAut& sigma, size_t max_power);

inline void strip(IPoly& g) {
  while (!g.empty() && g.back() == 0) g.pop_back();
}

IPoly mul(const Ctx& c, const IPoly& g, const IPoly& h);

// g = q f + r with deg r < deg f; needs an invertible leading coefficient of
// f (after the twist). Returns false when it is not a unit.
bool right_divmod(const Ctx& c, IPoly g, const IPoly& f, IPoly* q, IPoly* r);

// Product in S_f on fixed-length coefficient blocks (length m = deg f).
std::vector<uint32_t> petit_mul(const Ctx& c, const IPoly& f,
                                const std::vector<uint32_t>& g,
                                const std::vector<uint32_t>& h);

}  // namespace nacx::fastskew
