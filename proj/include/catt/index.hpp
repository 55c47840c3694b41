#ifndef CATT_INDEX_HPP
#define CATT_INDEX_HPP

#include <cstdint>

#include "catt/ps.hpp"
#include "catt/syntax.hpp"

namespace catt {

// A full type over a ps-context either uses the whole boundary (op) or the
// whole context (coh). The evidence is recomputable from (ctx, ty), so two
// witnesses for the same pair compare equal.
enum class fullness_kind : std::uint8_t { op, coh };

struct fullness_witness {
  fullness_kind kind = fullness_kind::coh;

  friend bool operator==(const fullness_witness&, const fullness_witness&) =
      default;
};

// Index of a coherence constructor: a ps-context with its derivation, the
// declared (full) type, and the fullness evidence. Equality and hashing
// erase the derivation and witness: both are uniquely determined by
// (ctx, ty), which is what eq_index compares.
struct coh_index {
  ps_derivation ps;
  type_ptr ty;
  fullness_witness witness;

  const raw_ctx& ctx() const { return ps.ctx; }
};

}  // namespace catt

#endif
