#ifndef CATT_PS_HPP
#define CATT_PS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "catt/diagnostics.hpp"
#include "catt/syntax.hpp"

namespace catt {

// The three derivation moves for pasting contexts. A valid sequence begins
// with exactly one start.
enum class ps_move : std::uint8_t { start, extend, drop };

// Recorded move sequence proving ctx is a ps-context. Replaying the moves
// from (var 0, obj) reconstructs ctx exactly and ends with focus type obj.
struct ps_derivation {
  raw_ctx ctx;
  std::vector<ps_move> moves;
  var_name final_var = 0;
  type_ptr final_ty;  // obj at acceptance
};

// Deterministic recognition: drop until the focus type matches the next
// declared entry, then extend consuming two entries; trailing drops close
// the derivation. Validates context well-formedness internally.
result<ps_derivation> check_ps(const raw_ctx& ctx);

// The order generated by "source before arrow before target", transitively
// closed. Linear exactly on ps-contexts.
class triangle_rel {
 public:
  static triangle_rel of(const raw_ctx& ctx);

  bool related(var_name x, var_name y) const;
  const std::vector<std::pair<var_name, var_name>>& pairs() const {
    return pairs_;
  }

 private:
  std::vector<std::pair<var_name, var_name>> pairs_;  // sorted, closed
};

// True iff the relation is irreflexive and total on the declared variables.
bool is_linear(const raw_ctx& ctx, const triangle_rel& rel);

// Dimension-i boundary variable lists, by replaying the derivation.
std::vector<var_name> src_vars(const ps_derivation& d, std::uint32_t i);
std::vector<var_name> tgt_vars(const ps_derivation& d, std::uint32_t i);

// Boundary sets at i = dim_ctx(ctx): all variables in the source (resp.
// target) of the composite the ps-context presents.
var_set src_set(const ps_derivation& d);
var_set tgt_set(const ps_derivation& d);

}  // namespace catt

#endif
