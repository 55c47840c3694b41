#ifndef CATT_THEORY_HPP
#define CATT_THEORY_HPP

#include "catt/diagnostics.hpp"
#include "catt/index.hpp"
#include "catt/rules.hpp"

namespace catt {

// Decides whether a type over a ps-context uses the whole boundary (op) or
// the whole context (coh). For arrow types the op condition is tried first;
// equality of indices erases the witness, so the order is unobservable.
result<fullness_witness> check_fullness(const ps_derivation& d,
                                        const type_ptr& a);

// Builds a coherence index, performing all validation: ps recognition, type
// checking of ty over ctx (in the full theory, so ty may itself contain
// coherences), fullness, and the dimension condition.
result<index_ptr> make_index(const raw_ctx& ctx, const type_ptr& ty);

// The theory whose indices are the full types over ps-contexts.
const theory_signature& catt_signature();

}  // namespace catt

#endif
