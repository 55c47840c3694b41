#ifndef CATT_RULES_HPP
#define CATT_RULES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "catt/diagnostics.hpp"
#include "catt/syntax.hpp"

namespace catt {

// A globular type theory, given by its family of coherence indices: how to
// compare them, which context and type each declares, and which index values
// actually inhabit the theory's index set.
struct theory_signature {
  std::string name;
  // Promises dim_ctx(ctx_of(i)) <= dim_ty(ty_of(i)) for admitted indices;
  // enforced at admission when set.
  bool wf_dimension = false;
  std::function<bool(const coh_index&, const coh_index&)> index_eq;
  std::function<const raw_ctx&(const coh_index&)> ctx_of;
  std::function<type_ptr(const coh_index&)> ty_of;
  // Empty result = the value inhabits this theory's index set.
  std::function<check_result(const coh_index&)> admit_index;
};

// The theory with no term constructors beyond variables: no index is ever
// admitted, so the only derivable terms are variables.
const theory_signature& glob_signature();

// Judgment engine for a globular type theory. Pure over immutable data; the
// per-index validation cache is internally synchronized, so one checker may
// be shared across threads.
class checker {
 public:
  explicit checker(theory_signature sig, bool cache_enabled = true);

  check_result check_ctx(const raw_ctx& ctx) const;
  check_result check_ty(const raw_ctx& ctx, const type_ptr& a) const;
  result<type_ptr> infer_tm(const raw_ctx& ctx, const term_ptr& t) const;
  check_result check_tm(const raw_ctx& ctx, const term_ptr& t,
                        const type_ptr& a) const;
  check_result check_sub(const raw_ctx& dom, const raw_sub& s,
                         const raw_ctx& cod) const;

  const theory_signature& signature() const { return sig_; }

 private:
  // Internal variants assume the relevant contexts already checked.
  check_result ctx_ok(const raw_ctx& ctx) const;
  check_result ty_ok(const raw_ctx& ctx, const type_ptr& a) const;
  result<type_ptr> tm_infer(const raw_ctx& ctx, const term_ptr& t) const;
  check_result sub_ok(const raw_ctx& dom, const raw_sub& s,
                      const raw_ctx& cod) const;
  // Admission plus the index's own context/type judgment, memoized.
  check_result index_ok(const index_ptr& i) const;

  struct index_hash {
    std::size_t operator()(const index_ptr& i) const;
  };
  struct index_eq_key {
    bool operator()(const index_ptr& a, const index_ptr& b) const;
  };

  theory_signature sig_;
  bool cache_enabled_;
  mutable std::mutex mu_;
  mutable std::unordered_map<index_ptr, check_result, index_hash, index_eq_key>
      index_cache_;
};

// One-shot forms; each call uses a fresh checker.
check_result check_ctx(const theory_signature& sig, const raw_ctx& ctx);
check_result check_ty(const theory_signature& sig, const raw_ctx& ctx,
                      const type_ptr& a);
result<type_ptr> infer_tm(const theory_signature& sig, const raw_ctx& ctx,
                          const term_ptr& t);
check_result check_tm(const theory_signature& sig, const raw_ctx& ctx,
                      const term_ptr& t, const type_ptr& a);
check_result check_sub(const theory_signature& sig, const raw_ctx& dom,
                       const raw_sub& s, const raw_ctx& cod);

// Universal arrow type of dimension n over the sphere context's variables.
type_ptr u_arrow(std::uint32_t n);
// Sphere context: 2n variables, two parallel cells in each dimension < n.
raw_ctx sphere(std::uint32_t n);
// Disk context: the sphere plus one filling cell.
raw_ctx disk(std::uint32_t n);

// A type over ctx, seen as a substitution into the sphere of its dimension.
struct classified_ty {
  std::uint32_t dim = 0;
  raw_sub into_sphere;
};

// Inverse of ty_of_sphere_sub on derivable types: obj maps to (0, empty);
// each arrow layer contributes its endpoints at the next sphere levels.
classified_ty classify_ty(const type_ptr& a);
// Instantiates the universal arrow: u_arrow(n)[s].
type_ptr ty_of_sphere_sub(std::uint32_t n, const raw_sub& s);

}  // namespace catt

#endif
