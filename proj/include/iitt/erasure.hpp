#ifndef IITT_ERASURE_HPP
#define IITT_ERASURE_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "iitt/term.hpp"

namespace iitt {

// Untyped target of erasure: plain lambda terms plus the data-like survivors
// (unit, pairs, split) and the dummy that replaces proofs.
//
// Sort and Pi nodes are produced only by erase_annotations, which must keep
// type formers distinguishable for the beta-eta comparison oracle; external
// erasure never emits them.
enum class UTermKind : std::uint8_t {
  Var,
  Lam,
  App,
  Unit,
  Pair,
  Split,
  Dummy,
  Sort,
  Pi,
};

class UTerm;
using UTermPtr = std::shared_ptr<const UTerm>;

class UTerm {
public:
  UTermKind kind;
  std::uint32_t index = 0;  // Var
  std::uint32_t level = 0;  // Sort
  std::string hint;         // binder name hint (Lam, Pi, Split)
  std::string hint2;        // Split's second binder
  UTermPtr a;
  UTermPtr b;

  explicit UTerm(UTermKind k) : kind(k) {}
};

unsigned ubinder_arity(UTermKind kind);

UTermPtr umk_var(std::uint32_t index);
UTermPtr umk_lam(UTermPtr body, std::string hint = "");
UTermPtr umk_app(UTermPtr fn, UTermPtr arg);
UTermPtr umk_unit();
UTermPtr umk_pair(UTermPtr fst, UTermPtr snd);
UTermPtr umk_split(UTermPtr scrut, UTermPtr body, std::string hint = "",
                   std::string hint2 = "");
UTermPtr umk_dummy();
UTermPtr umk_sort(std::uint32_t level);
UTermPtr umk_pi(UTermPtr dom, UTermPtr cod, std::string hint = "");

bool ualpha_eq(const UTermPtr& t, const UTermPtr& u);
UTermPtr ushift(const UTermPtr& t, std::int64_t by, std::uint32_t cutoff = 0);
UTermPtr usubst1(const UTermPtr& body, const UTermPtr& u);
UTermPtr usubst2(const UTermPtr& body, const UTermPtr& fst, const UTermPtr& snd);
bool uoccurs_free(const UTermPtr& t, std::uint32_t index);
std::size_t uterm_size(const UTermPtr& t);

// Lambda-calculus notation; named=false prints de Bruijn indices.
std::string print_untyped(const UTermPtr& t, bool named = true);

// Internal erasure: subterms sitting in irrelevant argument positions
// (irrelevant application arguments, irrelevant pair first components,
// squash payloads) are replaced by the dummy. Assumes the input checked
// against `type` in `ctx`; the result checks at the same type and is
// algorithmically equal to the input.
//
// Erasure is type-directed like the checker itself: a squash payload is only
// dummied where the surrounding type is supplied (check positions), since in
// synthesis positions the payload is the one source of the squashed type.
// Application arguments and pair components are erasable everywhere.
TermPtr internal_erase(const Context& ctx, const TermPtr& t,
                       const TermPtr& type, std::uint64_t fuel = 1'000'000);
// Without a known type: the conservative synthesis-position erasure.
TermPtr internal_erase(const TermPtr& t);

// External erasure: drops all typing content. Irrelevant lambda binders and
// irrelevant applications are deleted outright, squash intro/elim die into
// dummy substitution, and type formers (which carry no runtime content)
// become the dummy.
UTermPtr erase_external(const TermPtr& t);

// Annotation-only erasure: like erase_external but keeps irrelevant lambdas,
// applications and pair components, and keeps sorts and function types as
// structured nodes. This is the bridge to the untyped beta-eta oracle on the
// relevant-only fragment.
UTermPtr erase_annotations(const TermPtr& t);

}  // namespace iitt

#endif
