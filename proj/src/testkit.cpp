#include "iitt/testkit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "iitt/checker.hpp"
#include "iitt/equality.hpp"
#include "iitt/erasure.hpp"
#include "iitt/surface.hpp"

namespace iitt {
namespace testkit {

// ---------------------------------------------------------------------------
// Named terms and the substitution oracle.

NTermPtr nmk(TermKind kind) {
  auto t = std::make_shared<NTerm>();
  t->kind = kind;
  return t;
}

NTermPtr nmk_var(std::string name) {
  auto t = std::make_shared<NTerm>();
  t->kind = TermKind::Var;
  t->name = std::move(name);
  return t;
}

namespace {

NTermPtr nnode(TermKind kind, Ann ann, std::string name, NTermPtr a, NTermPtr b,
               std::string name2 = "") {
  auto t = std::make_shared<NTerm>();
  t->kind = kind;
  t->ann = ann;
  t->name = std::move(name);
  t->name2 = std::move(name2);
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

bool named_free(const NTermPtr& t, const std::string& x) {
  if (!t) return false;
  if (t->kind == TermKind::Var) return t->name == x;
  if (named_free(t->a, x)) return true;
  unsigned arity = binder_arity(t->kind);
  if (arity >= 1 && t->name == x) return false;
  if (arity == 2 && t->name2 == x) return false;
  return named_free(t->b, x);
}

// Any occurrence at all, free or as a binder. Used to pick fresh names that
// cannot be captured by inner binders either.
bool named_mentions(const NTermPtr& t, const std::string& x) {
  if (!t) return false;
  if (t->name == x || t->name2 == x) return true;
  return named_mentions(t->a, x) || named_mentions(t->b, x);
}

std::string fresh_name(const std::string& base, const NTermPtr& avoid1,
                       const NTermPtr& avoid2, const std::string& avoid_name) {
  for (int i = 1;; ++i) {
    std::string cand = base + "#" + std::to_string(i);
    if (cand != avoid_name && !named_mentions(avoid1, cand) &&
        !named_mentions(avoid2, cand))
      return cand;
  }
}

// Renames one binder slot if it would capture free occurrences of u.
void avoid_capture(std::string& binder, NTermPtr& body, const std::string& x,
                   const NTermPtr& u) {
  if (binder == x) return;  // substitution is shadowed; caller handles
  if (named_free(u, binder) && named_free(body, x)) {
    std::string renamed = fresh_name(binder, body, u, x);
    body = named_subst(body, binder, nmk_var(renamed));
    binder = renamed;
  }
}

}  // namespace

NTermPtr named_subst(const NTermPtr& t, const std::string& x,
                     const NTermPtr& u) {
  if (!t) return t;
  switch (t->kind) {
    case TermKind::Var:
      return t->name == x ? u : t;
    case TermKind::Sort:
    case TermKind::UnitTy:
    case TermKind::UnitVal:
    case TermKind::Dummy:
      return t;
    default: {
      NTermPtr a = named_subst(t->a, x, u);  // the a slot never binds
      unsigned arity = binder_arity(t->kind);
      if (arity == 0)
        return nnode(t->kind, t->ann, t->name, a, named_subst(t->b, x, u),
                     t->name2);
      std::string n1 = t->name;
      std::string n2 = t->name2;
      NTermPtr body = t->b;
      if (arity == 1) {
        if (n1 == x) return nnode(t->kind, t->ann, n1, a, body, n2);
        avoid_capture(n1, body, x, u);
        return nnode(t->kind, t->ann, n1, a, named_subst(body, x, u), n2);
      }
      // Two binders (Split): shadowing by either name blocks substitution.
      // The inner binder owns a shared name, so it is renamed first; after
      // that no occurrence in the body can belong to the outer one.
      if (n1 == x || n2 == x) return nnode(t->kind, t->ann, n1, a, body, n2);
      avoid_capture(n2, body, x, u);
      avoid_capture(n1, body, x, u);
      return nnode(t->kind, t->ann, n1, a, named_subst(body, x, u), n2);
    }
  }
}

TermPtr from_named(const NTermPtr& t, std::vector<std::string> scope) {
  struct Go {
    std::vector<std::string>& scope;

    TermPtr operator()(const NTermPtr& t) {
      switch (t->kind) {
        case TermKind::Var: {
          for (std::size_t i = 0; i < scope.size(); ++i)
            if (scope[scope.size() - 1 - i] == t->name)
              return mk_var(static_cast<std::uint32_t>(i));
          throw std::runtime_error("from_named: unknown name " + t->name);
        }
        case TermKind::Sort:
          return mk_sort(t->level);
        case TermKind::UnitTy:
          return mk_unit_ty();
        case TermKind::UnitVal:
          return mk_unit_val();
        case TermKind::Dummy:
          return mk_dummy();
        default: {
          TermPtr a = t->a ? (*this)(t->a) : nullptr;
          unsigned arity = binder_arity(t->kind);
          TermPtr b;
          if (t->b) {
            if (arity >= 1) scope.push_back(t->name);
            if (arity == 2) scope.push_back(t->name2);
            b = (*this)(t->b);
            if (arity == 2) scope.pop_back();
            if (arity >= 1) scope.pop_back();
          }
          switch (t->kind) {
            case TermKind::Pi: return mk_pi(t->ann, a, b, t->name);
            case TermKind::Lam: return mk_lam(t->ann, a, b, t->name);
            case TermKind::App: return mk_app(t->ann, a, b);
            case TermKind::Sigma: return mk_sigma(t->ann, a, b, t->name);
            case TermKind::Pair: return mk_pair(t->ann, a, b);
            case TermKind::Split: return mk_split(a, b, t->name, t->name2);
            case TermKind::SqTy: return mk_sq_ty(a);
            case TermKind::SqVal: return mk_sq_val(a);
            case TermKind::SqElim: return mk_sq_elim(a, b, t->name);
            default: throw std::runtime_error("from_named: bad node");
          }
        }
      }
    }
  };
  Go go{scope};
  return go(t);
}

NTermPtr to_named(const TermPtr& t, std::vector<std::string> scope) {
  struct Go {
    std::vector<std::string>& scope;

    std::string fresh(const std::string& hint) {
      std::string base = hint.empty() || hint == "_" ? "v" : hint;
      std::string name = base;
      int n = 0;
      while (std::find(scope.begin(), scope.end(), name) != scope.end())
        name = base + std::to_string(++n);
      return name;
    }

    NTermPtr operator()(const TermPtr& t) {
      switch (t->kind) {
        case TermKind::Var: {
          if (t->index >= scope.size())
            throw std::runtime_error("to_named: dangling index");
          return nmk_var(scope[scope.size() - 1 - t->index]);
        }
        case TermKind::Sort: {
          auto n = std::make_shared<NTerm>();
          n->kind = TermKind::Sort;
          n->level = t->level;
          return NTermPtr(n);
        }
        case TermKind::UnitTy:
        case TermKind::UnitVal:
        case TermKind::Dummy:
          return nmk(t->kind);
        default: {
          NTermPtr a = t->a ? (*this)(t->a) : nullptr;
          unsigned arity = binder_arity(t->kind);
          std::string n1, n2;
          NTermPtr b;
          if (t->b) {
            if (arity >= 1) {
              n1 = fresh(t->hint);
              scope.push_back(n1);
            }
            if (arity == 2) {
              n2 = fresh(t->hint2);
              scope.push_back(n2);
            }
            b = (*this)(t->b);
            if (arity == 2) scope.pop_back();
            if (arity >= 1) scope.pop_back();
          }
          return nnode(t->kind, t->ann, n1, a, b, n2);
        }
      }
    }
  };
  Go go{scope};
  return go(t);
}

// ---------------------------------------------------------------------------
// Keys.

namespace {

void key_into(const TermPtr& t, std::string& out) {
  if (!t) {
    out += '_';
    return;
  }
  out += static_cast<char>('A' + static_cast<int>(t->kind));
  if (t->kind == TermKind::Sort) out += std::to_string(t->level);
  if (t->kind == TermKind::Var) out += std::to_string(t->index);
  if (t->ann == Ann::Irrelevant) out += '/';
  if (t->a || t->b) {
    out += '(';
    key_into(t->a, out);
    out += ',';
    key_into(t->b, out);
    out += ')';
  }
}

}  // namespace

std::string term_key(const TermPtr& t) {
  std::string out;
  key_into(t, out);
  return out;
}

std::string ctx_key(const Context& ctx) {
  std::string out;
  for (const auto& b : ctx.bindings()) {
    out += b.ann == Ann::Irrelevant ? '/' : ':';
    key_into(b.ty, out);
    out += ';';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rule-directed enumeration.

namespace {

struct TypeEntry {
  TermPtr type;
  std::uint32_t level;
};

}  // namespace

const std::vector<std::pair<TermPtr, TermPtr>>& Enumerator::infer_set(
    const Context& ctx, unsigned size) {
  std::string key = ctx_key(ctx) + '#' + std::to_string(size);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::vector<std::pair<TermPtr, TermPtr>> out;
  const bool ext = !budget_.extension_free;
  std::vector<Ann> anns;
  anns.push_back(Ann::Relevant);
  if (!budget_.relevant_only) anns.push_back(Ann::Irrelevant);

  auto whnf_of = [&](const TermPtr& t) {
    Fuel f{budget_.fuel};
    return whnf(t, f);
  };
  // The types of exactly `sz` in a context: inferable terms whose type is a
  // sort.
  auto types_of = [&](const Context& c, unsigned sz) {
    std::vector<TypeEntry> tys;
    for (const auto& [t, ty] : infer_set(c, sz)) {
      TermPtr w = whnf_of(ty);
      if (w->kind == TermKind::Sort) tys.push_back({t, w->level});
    }
    return tys;
  };

  if (size == 1) {
    for (std::uint32_t k = 0; k <= budget_.max_level; ++k)
      out.emplace_back(mk_sort(k), mk_sort(sort_axiom(k)));
    for (std::uint32_t i = 0; i < ctx.size(); ++i)
      if (ctx.lookup(i).ann == Ann::Relevant)
        out.emplace_back(mk_var(i), ctx.lookup_type(i));
    if (ext) {
      out.emplace_back(mk_unit_ty(), mk_sort(0));
      out.emplace_back(mk_unit_val(), mk_unit_ty());
    }
  } else {
    // Binders with a type on both sides: Pi and Sigma.
    for (Ann ann : anns) {
      for (unsigned i = 1; i + 1 < size; ++i) {
        for (const auto& dom : types_of(ctx, i)) {
          Context inner = ctx.extended(ann, dom.type);
          for (const auto& cod : types_of(inner, size - 1 - i)) {
            TermPtr sort = mk_sort(sort_rule(dom.level, cod.level));
            out.emplace_back(mk_pi(ann, dom.type, cod.type), sort);
            if (ext)
              out.emplace_back(mk_sigma(ann, dom.type, cod.type), sort);
          }
        }
      }
    }
    // Lambdas: any inferable body under the binder.
    for (Ann ann : anns) {
      for (unsigned i = 1; i + 1 < size; ++i) {
        for (const auto& dom : types_of(ctx, i)) {
          Context inner = ctx.extended(ann, dom.type);
          for (const auto& [body, body_ty] : infer_set(inner, size - 1 - i))
            out.emplace_back(mk_lam(ann, dom.type, body),
                             mk_pi(ann, dom.type, body_ty));
        }
      }
    }
    // Applications: function first, then anything checkable at the domain.
    for (unsigned i = 1; i + 1 < size; ++i) {
      for (const auto& [fn, fn_ty] : infer_set(ctx, i)) {
        TermPtr w = whnf_of(fn_ty);
        if (w->kind != TermKind::Pi) continue;
        if (budget_.relevant_only && w->ann == Ann::Irrelevant) continue;
        for (const auto& arg : checkable(ctx, w->a, size - 1 - i, w->ann))
          out.emplace_back(mk_app(w->ann, fn, arg), subst1(w->b, arg));
      }
    }
    if (ext) {
      for (const auto& inner : types_of(ctx, size - 1))
        out.emplace_back(mk_sq_ty(inner.type), mk_sort(inner.level));
      // sq p infers through the resurrected context.
      for (const auto& [p, p_ty] : infer_set(resurrect(ctx), size - 1))
        out.emplace_back(mk_sq_val(p), mk_sq_ty(p_ty));
      for (unsigned i = 1; i + 1 < size; ++i) {
        for (const auto& [scrut, scrut_ty] : infer_set(ctx, i)) {
          TermPtr w = whnf_of(scrut_ty);
          if (w->kind == TermKind::SqTy) {
            Context inner = ctx.extended(Ann::Irrelevant, w->a);
            for (const auto& [v, v_ty] : infer_set(inner, size - 1 - i))
              if (auto st = strengthen(v_ty, 1))
                out.emplace_back(mk_sq_elim(scrut, v), *st);
          } else if (w->kind == TermKind::Sigma) {
            Context inner = ctx.extended(w->ann, w->a)
                                .extended(Ann::Relevant, w->b);
            for (const auto& [v, v_ty] : infer_set(inner, size - 1 - i))
              if (auto st = strengthen(v_ty, 2))
                out.emplace_back(mk_split(scrut, v), *st);
          }
        }
      }
    }
  }

  auto [it, inserted] = memo_.emplace(std::move(key), std::move(out));
  (void)inserted;
  return it->second;
}

std::vector<TermPtr> Enumerator::checkable(const Context& ctx,
                                           const TermPtr& type, unsigned size,
                                           Ann mode) {
  Context rctx = mode == Ann::Irrelevant ? resurrect(ctx) : ctx;
  std::vector<TermPtr> out;
  for (const auto& [t, ty] : infer_set(rctx, size)) {
    if (ty_eq(rctx, ty, type, budget_.fuel).accepted()) out.push_back(t);
  }
  auto extra = checkable_extra(ctx, type, size, mode);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

// The checkable terms check() accepts but infer() rejects: the dummy, pairs,
// and lambdas / squash intros whose payload is itself check-only.
std::vector<TermPtr> Enumerator::checkable_extra(const Context& ctx,
                                                 const TermPtr& type,
                                                 unsigned size, Ann mode) {
  Context rctx = mode == Ann::Irrelevant ? resurrect(ctx) : ctx;
  std::vector<TermPtr> out;
  if (mode == Ann::Irrelevant && size == 1 && !budget_.relevant_only)
    out.push_back(mk_dummy());

  Fuel f{budget_.fuel};
  TermPtr w = whnf(type, f);
  auto types_of = [&](const Context& c, unsigned sz) {
    std::vector<TermPtr> tys;
    for (const auto& [t, ty] : infer_set(c, sz)) {
      Fuel f2{budget_.fuel};
      if (whnf(ty, f2)->kind == TermKind::Sort) tys.push_back(t);
    }
    return tys;
  };

  switch (w->kind) {
    case TermKind::Pi: {
      if (budget_.relevant_only && w->ann == Ann::Irrelevant) break;
      for (unsigned i = 1; i + 1 < size; ++i) {
        for (const auto& dom : types_of(rctx, i)) {
          if (!ty_eq(rctx, dom, w->a, budget_.fuel).accepted()) continue;
          Context inner = rctx.extended(w->ann, dom);
          for (const auto& body :
               checkable_extra(inner, w->b, size - 1 - i, Ann::Relevant))
            out.push_back(mk_lam(w->ann, dom, body));
        }
      }
      break;
    }
    case TermKind::Sigma: {
      if (budget_.extension_free) break;
      for (unsigned i = 1; i + 1 < size; ++i) {
        for (const auto& fst : checkable(rctx, w->a, i, w->ann)) {
          TermPtr snd_ty = subst1(w->b, fst);
          for (const auto& snd :
               checkable(rctx, snd_ty, size - 1 - i, Ann::Relevant))
            out.push_back(mk_pair(w->ann, fst, snd));
        }
      }
      break;
    }
    case TermKind::SqTy: {
      if (budget_.extension_free || size < 2) break;
      for (const auto& payload :
           checkable_extra(rctx, w->a, size - 1, Ann::Irrelevant))
        out.push_back(mk_sq_val(payload));
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<Judgement> Enumerator::all(const Context& base) {
  std::vector<Judgement> out;
  for (unsigned s = 1; s <= budget_.max_size; ++s)
    for (const auto& [t, ty] : infer_set(base, s))
      out.push_back(Judgement{base, t, ty});
  return out;
}

std::vector<Judgement> enum_well_typed(const EnumBudget& budget,
                                       const Context& base) {
  Enumerator en(budget);
  return en.all(base);
}

void enum_raw(unsigned size, std::uint32_t depth, const EnumBudget& budget,
              const std::function<void(const TermPtr&)>& yield) {
  const bool ext = !budget.extension_free;
  if (size == 0) return;
  if (size == 1) {
    for (std::uint32_t k = 0; k <= budget.max_level; ++k) yield(mk_sort(k));
    for (std::uint32_t i = 0; i < depth; ++i) yield(mk_var(i));
    if (ext) {
      yield(mk_unit_ty());
      yield(mk_unit_val());
    }
    if (!budget.relevant_only) yield(mk_dummy());
    return;
  }
  if (ext) {
    enum_raw(size - 1, depth, budget, [&](const TermPtr& t) {
      yield(mk_sq_ty(t));
      yield(mk_sq_val(t));
    });
  }
  std::vector<Ann> anns;
  anns.push_back(Ann::Relevant);
  if (!budget.relevant_only) anns.push_back(Ann::Irrelevant);
  for (unsigned i = 1; i + 1 < size; ++i) {
    enum_raw(i, depth, budget, [&](const TermPtr& left) {
      // binder arity 1 on the right
      enum_raw(size - 1 - i, depth + 1, budget, [&](const TermPtr& right) {
        for (Ann ann : anns) {
          yield(mk_pi(ann, left, right));
          yield(mk_lam(ann, left, right));
          if (ext) yield(mk_sigma(ann, left, right));
        }
        if (ext) yield(mk_sq_elim(left, right));
      });
      // no binders on the right
      enum_raw(size - 1 - i, depth, budget, [&](const TermPtr& right) {
        for (Ann ann : anns) {
          yield(mk_app(ann, left, right));
          if (ext) yield(mk_pair(ann, left, right));
        }
      });
      if (ext) {
        enum_raw(size - 1 - i, depth + 2, budget, [&](const TermPtr& right) {
          yield(mk_split(left, right));
        });
      }
    });
  }
}

std::vector<Context> standard_contexts() {
  Context empty;
  Context x0 = empty.extended(Ann::Relevant, mk_sort(0), "X");
  Context xx = x0.extended(Ann::Relevant, mk_var(0), "x");
  Context uu = empty.extended(Ann::Relevant, mk_sort(0), "U")
                   .extended(Ann::Irrelevant, mk_var(0), "u");
  return {empty, x0, xx, uu};
}

TermPtr random_term(std::mt19937& rng, unsigned max_depth,
                    std::uint32_t free_vars) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  if (max_depth == 0) {
    switch (pick(4)) {
      case 0: return mk_sort(rng() % 3);
      case 1: return free_vars ? mk_var(rng() % free_vars) : mk_unit_val();
      case 2: return mk_unit_ty();
      default: return mk_unit_val();
    }
  }
  Ann ann = rng() % 2 ? Ann::Relevant : Ann::Irrelevant;
  auto sub = [&](std::uint32_t extra) {
    return random_term(rng, max_depth - 1, free_vars + extra);
  };
  switch (pick(12)) {
    case 0: return mk_pi(ann, sub(0), sub(1));
    case 1: return mk_lam(ann, sub(0), sub(1));
    case 2: return mk_app(ann, sub(0), sub(0));
    case 3: return mk_sigma(ann, sub(0), sub(1));
    case 4: return mk_pair(ann, sub(0), sub(0));
    case 5: return mk_split(sub(0), sub(2));
    case 6: return mk_sq_ty(sub(0));
    case 7: return mk_sq_val(sub(0));
    case 8: return mk_sq_elim(sub(0), sub(1));
    case 9: return mk_dummy();
    default: return random_term(rng, 0, free_vars);
  }
}

// ---------------------------------------------------------------------------
// Suites.

namespace {

constexpr std::size_t kMaxRecordedFailures = 40;

bool contains_dummy(const TermPtr& t) {
  if (!t) return false;
  if (t->kind == TermKind::Dummy) return true;
  return contains_dummy(t->a) || contains_dummy(t->b);
}

struct SuiteState {
  SuiteReport report;
  std::uint64_t unrecorded = 0;

  void fail(std::string what) {
    if (report.failures.size() < kMaxRecordedFailures)
      report.failures.push_back(std::move(what));
    else
      ++unrecorded;
  }
  void finish() {
    if (unrecorded)
      report.failures.push_back("... and " + std::to_string(unrecorded) +
                                " more failures");
  }
};

// tm_eq with bookkeeping: counts a case and fuel exhaustion.
bool eq_case(SuiteState& st, const Context& ctx, const TermPtr& a,
             const TermPtr& b, const TermPtr& ty, std::uint64_t fuel) {
  ++st.report.cases;
  EqResult r = tm_eq(ctx, a, b, ty, fuel);
  if (r.fuel_exhausted()) ++st.report.fuel_exhausted;
  return r.accepted();
}

std::string show(const Context& ctx, const TermPtr& t) {
  return print_in(ctx, t);
}

// Buckets judgements by type, merging ty_eq-equal types.
struct TypeGroups {
  std::vector<TermPtr> rep;                    // representative type
  std::vector<std::vector<std::size_t>> members;  // indices into env
};

TypeGroups group_by_type(const Context& ctx, const std::vector<Judgement>& env,
                         std::uint64_t fuel) {
  TypeGroups g;
  std::unordered_map<std::string, std::size_t> bucket_of_key;
  std::vector<TermPtr> bucket_rep;
  std::vector<std::vector<std::size_t>> bucket_members;
  for (std::size_t i = 0; i < env.size(); ++i) {
    std::string key = term_key(env[i].type);
    auto [it, inserted] = bucket_of_key.try_emplace(key, bucket_rep.size());
    if (inserted) {
      bucket_rep.push_back(env[i].type);
      bucket_members.emplace_back();
    }
    bucket_members[it->second].push_back(i);
  }
  // Union alpha-distinct but convertible types.
  std::vector<std::size_t> parent(bucket_rep.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < bucket_rep.size(); ++i)
    for (std::size_t j = i + 1; j < bucket_rep.size(); ++j) {
      if (find(i) == find(j)) continue;
      if (ty_eq(ctx, bucket_rep[i], bucket_rep[j], fuel).accepted())
        parent[find(j)] = find(i);
    }
  std::unordered_map<std::size_t, std::size_t> group_of_root;
  for (std::size_t i = 0; i < bucket_rep.size(); ++i) {
    std::size_t root = find(i);
    auto [it, inserted] = group_of_root.try_emplace(root, g.rep.size());
    if (inserted) {
      g.rep.push_back(bucket_rep[root]);
      g.members.emplace_back();
    }
    auto& ms = g.members[it->second];
    ms.insert(ms.end(), bucket_members[i].begin(), bucket_members[i].end());
  }
  return g;
}

unsigned pick_size(const SuiteOptions& opts, unsigned dflt) {
  return opts.size ? opts.size : dflt;
}

EnumBudget full_budget(const SuiteOptions& opts, unsigned size) {
  EnumBudget b;
  b.max_size = size;
  b.max_level = opts.max_level;
  b.fuel = opts.fuel;
  return b;
}

// --- per: reflexivity, symmetry, transitivity on well-typed terms ---------

SuiteReport suite_per(const SuiteOptions& opts) {
  SuiteState st;
  st.report.name = "per";
  unsigned size = pick_size(opts, 5);
  for (const Context& ctx : standard_contexts()) {
    Enumerator en(full_budget(opts, size));
    std::vector<Judgement> env = en.all(ctx);
    for (const auto& j : env) {
      if (!eq_case(st, ctx, j.term, j.term, j.type, opts.fuel))
        st.fail("reflexivity fails: " + show(ctx, j.term) + " : " +
                show(ctx, j.type));
    }
    TypeGroups groups = group_by_type(ctx, env, opts.fuel);
    for (std::size_t gi = 0; gi < groups.rep.size(); ++gi) {
      const auto& ms = groups.members[gi];
      const TermPtr& ty = groups.rep[gi];
      std::size_t n = ms.size();
      if (n < 2) continue;
      std::vector<bool> eq(n * n, false);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          bool acc = eq_case(st, ctx, env[ms[i]].term, env[ms[j]].term, ty,
                             opts.fuel);
          eq[i * n + j] = acc;
          if (acc) {
            // symmetry
            if (!eq_case(st, ctx, env[ms[j]].term, env[ms[i]].term, ty,
                         opts.fuel))
              st.fail("symmetry fails: " + show(ctx, env[ms[i]].term) +
                      " == " + show(ctx, env[ms[j]].term) + " : " +
                      show(ctx, ty));
          }
        }
      // transitivity: accepted pairs must form a partition
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (eq[i * n + j]) parent[find(j)] = find(i);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (find(i) == find(j) && !eq[i * n + j])
            st.fail("transitivity fails: " + show(ctx, env[ms[i]].term) +
                    " == " + show(ctx, env[ms[j]].term) + " : " +
                    show(ctx, ty));
    }
  }
  st.finish();
  return st.report;
}

// --- subject reduction + syntactic validity -------------------------------

SuiteReport suite_subject_reduction(const SuiteOptions& opts) {
  SuiteState st;
  st.report.name = "subject-reduction";
  unsigned size = pick_size(opts, 5);
  for (const Context& ctx : standard_contexts()) {
    Enumerator en(full_budget(opts, size));
    for (const auto& j : en.all(ctx)) {
      ++st.report.cases;
      try {
        Fuel fuel{opts.fuel};
        TermPtr red = whnf(j.term, fuel);
        check(ctx, red, j.type, CheckMode::Relevant, fuel);
        check_is_type(ctx, j.type, fuel);  // syntactic validity
        if (!eq_case(st, ctx, j.term, red, j.type, opts.fuel))
          st.fail("t != whnf(t): " + show(ctx, j.term));
      } catch (const TypeError& e) {
        st.fail("re-check after whnf fails: " + show(ctx, j.term) + " : " +
                show(ctx, j.type) + " (" + e.diag.message + ")");
      } catch (const FuelExhausted&) {
        ++st.report.fuel_exhausted;
        st.fail("fuel exhausted on " + show(ctx, j.term));
      }
    }
  }
  st.finish();
  return st.report;
}

// --- oracle: typed equality == untyped beta-eta on the plain fragment -----

SuiteReport suite_oracle(const SuiteOptions& opts) {
  SuiteState st;
  st.report.name = "oracle";
  unsigned size = pick_size(opts, 7);
  for (const Context& ctx : standard_contexts()) {
    EnumBudget b = full_budget(opts, size);
    b.relevant_only = true;
    b.extension_free = true;
    Enumerator en(b);
    std::vector<Judgement> env = en.all(ctx);
    // Normal forms of the erasures, computed once.
    std::vector<UTermPtr> nf(env.size());
    for (std::size_t i = 0; i < env.size(); ++i) {
      try {
        nf[i] = nf_beta_eta(erase_annotations(env[i].term), opts.fuel);
      } catch (const FuelExhausted&) {
        ++st.report.fuel_exhausted;
        st.fail("erasure of a well-typed term diverges: " +
                show(ctx, env[i].term));
      }
    }
    TypeGroups groups = group_by_type(ctx, env, opts.fuel);
    for (std::size_t gi = 0; gi < groups.rep.size(); ++gi) {
      const auto& ms = groups.members[gi];
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
          if (!nf[ms[i]] || !nf[ms[j]]) continue;
          bool typed = eq_case(st, ctx, env[ms[i]].term, env[ms[j]].term,
                               groups.rep[gi], opts.fuel);
          bool untyped = ualpha_eq(nf[ms[i]], nf[ms[j]]);
          if (typed != untyped)
            st.fail(std::string("oracle disagrees (typed ") +
                    (typed ? "yes" : "no") + ", untyped " +
                    (untyped ? "yes" : "no") + "): " +
                    show(ctx, env[ms[i]].term) + " vs " +
                    show(ctx, env[ms[j]].term) + " : " +
                    show(ctx, groups.rep[gi]));
        }
    }
  }
  st.finish();
  return st.report;
}

// --- irrelevance blindness -------------------------------------------------

SuiteReport suite_irrelevance(const SuiteOptions& opts) {
  SuiteState st;
  st.report.name = "irrelevance";
  unsigned size = pick_size(opts, 4);
  for (const Context& ctx : standard_contexts()) {
    Enumerator en(full_budget(opts, size));
    for (const auto& j : en.all(ctx)) {
      Fuel fuel{opts.fuel};
      TermPtr fty = whnf(j.type, fuel);
      if (fty->kind != TermKind::Pi || fty->ann != Ann::Irrelevant) continue;
      std::vector<TermPtr> args;
      for (unsigned s = 1; s <= size; ++s)
        for (const auto& u : en.checkable(ctx, fty->a, s, Ann::Irrelevant))
          args.push_back(u);
      for (const auto& u : args)
        for (const auto& v : args) {
          TermPtr lhs = mk_app(Ann::Irrelevant, j.term, u);
          TermPtr rhs = mk_app(Ann::Irrelevant, j.term, v);
          if (!eq_case(st, ctx, lhs, rhs, subst1(fty->b, u), opts.fuel))
            st.fail("irrelevant arguments distinguished: " + show(ctx, lhs) +
                    " vs " + show(ctx, rhs));
          if (!ualpha_eq(erase_external(lhs), erase_external(rhs)))
            st.fail("external erasures differ: " + show(ctx, lhs) + " vs " +
                    show(ctx, rhs));
        }
    }
  }
  st.finish();
  return st.report;
}

// --- consistency smoke -----------------------------------------------------

SuiteReport suite_consistency(const SuiteOptions& opts) {
  SuiteState st;
  st.report.name = "consistency";
  unsigned size = pick_size(opts, 7);
  Context ctx = Context().extended(Ann::Relevant, mk_sort(0), "X");
  Enumerator en(full_budget(opts, size));
  for (unsigned s = 1; s <= size; ++s) {
    st.report.cases += en.infer_set(ctx, s).size();
    for (const auto& t : en.checkable(ctx, mk_var(0), s, Ann::Relevant))
      st.fail("inhabitant of X found: " + show(ctx, t));
  }
  st.finish();
  return st.report;
}

// --- substitution admissibility -------------------------------------------

SuiteReport suite_substitution(const SuiteOptions& opts) {
  SuiteState st;
  st.report.name = "substitution";
  unsigned term_size = pick_size(opts, 4);
  unsigned entry_size = 3;
  for (const Context& src : standard_contexts()) {
    EnumBudget b = full_budget(opts, std::max(term_size, entry_size));
    Enumerator en(b);
    for (const Context& tgt : standard_contexts()) {
      // Enumerate substitutions src |- sigma : tgt, entry by entry,
      // outermost first. The empty target gives the trivial substitution,
      // which exercises weakening.
      std::vector<std::vector<TermPtr>> sigmas{{}};  // outermost-first entries
      bool overflow = false;
      for (std::size_t bi = 0; bi < tgt.size() && !overflow; ++bi) {
        const Binding& binding = tgt.bindings()[bi];
        std::vector<std::vector<TermPtr>> next;
        for (const auto& prefix : sigmas) {
          // Type of this binding under the substitution so far.
          std::vector<TermPtr> rev(prefix.rbegin(), prefix.rend());
          TermPtr ty = subst(binding.ty, Subst::of_map(rev));
          for (unsigned s = 1; s <= entry_size; ++s) {
            for (const auto& e : en.checkable(src, ty, s, binding.ann)) {
              // Entries are base-calculus terms with synthesizable types:
              // the dummy is the post-checking erasure extension, and
              // check-only forms (pairs) land in synthesis positions of the
              // motive-free eliminators, which no bidirectional checker can
              // re-infer.
              if (contains_dummy(e)) continue;
              try {
                Context entry_ctx =
                    binding.ann == Ann::Irrelevant ? resurrect(src) : src;
                Fuel fuel{opts.fuel};
                infer(entry_ctx, e, fuel);
              } catch (const TypeError&) {
                continue;
              }
              auto extended = prefix;
              extended.push_back(e);
              next.push_back(std::move(extended));
              if (next.size() > 4000) { overflow = true; break; }
            }
            if (overflow) break;
          }
          if (overflow) break;
        }
        sigmas = std::move(next);
      }
      Enumerator tgt_en(full_budget(opts, term_size));
      std::vector<Judgement> env = tgt_en.all(tgt);
      for (const auto& entries : sigmas) {
        std::vector<TermPtr> rev(entries.rbegin(), entries.rend());
        Subst sigma = Subst::of_map(rev);
        for (const auto& j : env) {
          ++st.report.cases;
          TermPtr t2 = subst(j.term, sigma);
          TermPtr ty2 = subst(j.type, sigma);
          try {
            Fuel fuel{opts.fuel};
            check(src, t2, ty2, CheckMode::Relevant, fuel);
          } catch (const TypeError& e) {
            st.fail("substituted judgement fails: " + show(src, t2) + " : " +
                    show(src, ty2) + " (" + e.diag.message + ")");
          } catch (const FuelExhausted&) {
            ++st.report.fuel_exhausted;
            st.fail("fuel exhausted: " + show(src, t2));
          }
        }
      }
    }
  }
  st.finish();
  return st.report;
}

// --- internal erasure ------------------------------------------------------

SuiteReport suite_erasure(const SuiteOptions& opts) {
  SuiteState st;
  st.report.name = "erasure";
  unsigned size = pick_size(opts, 4);
  for (const Context& ctx : standard_contexts()) {
    Enumerator en(full_budget(opts, size));
    for (const auto& j : en.all(ctx)) {
      ++st.report.cases;
      TermPtr erased = internal_erase(ctx, j.term, j.type, opts.fuel);
      try {
        Fuel fuel{opts.fuel};
        check(ctx, erased, j.type, CheckMode::Relevant, fuel);
      } catch (const TypeError& e) {
        st.fail("internal erasure does not re-check: " + show(ctx, erased) +
                " (" + e.diag.message + ")");
        continue;
      } catch (const FuelExhausted&) {
        ++st.report.fuel_exhausted;
        continue;
      }
      if (!alpha_eq(internal_erase(ctx, erased, j.type, opts.fuel), erased))
        st.fail("internal erasure is not idempotent on " + show(ctx, j.term));
      if (!eq_case(st, ctx, j.term, erased, j.type, opts.fuel))
        st.fail("internal erasure not equal to original: " +
                show(ctx, j.term) + " vs " + show(ctx, erased));
    }
  }
  st.finish();
  return st.report;
}

// --- generator cross-validation against brute force ------------------------

SuiteReport suite_enum_validate(const SuiteOptions& opts) {
  SuiteState st;
  st.report.name = "enum-validate";
  unsigned size = pick_size(opts, 4);
  for (const Context& ctx : standard_contexts()) {
    EnumBudget b = full_budget(opts, size);
    Enumerator en(b);
    for (unsigned s = 1; s <= size; ++s) {
      std::unordered_map<std::string, std::string> generated;
      for (const auto& [t, ty] : en.infer_set(ctx, s))
        generated.emplace(term_key(t), term_key(ty));
      std::size_t raw_ok = 0;
      enum_raw(s, static_cast<std::uint32_t>(ctx.size()), b,
               [&](const TermPtr& t) {
                 ++st.report.cases;
                 TermPtr ty;
                 try {
                   Fuel fuel{opts.fuel};
                   ty = infer(ctx, t, fuel);
                 } catch (const TypeError&) {
                   return;
                 } catch (const FuelExhausted&) {
                   ++st.report.fuel_exhausted;
                   return;
                 }
                 ++raw_ok;
                 auto it = generated.find(term_key(t));
                 if (it == generated.end())
                   st.fail("generator missed a well-typed term: " +
                           show(ctx, t));
                 else if (it->second != term_key(ty))
                   st.fail("generator type disagrees with infer on " +
                           show(ctx, t));
               });
      if (raw_ok != generated.size())
        st.fail("count mismatch at size " + std::to_string(s) + ": raw " +
                std::to_string(raw_ok) + " vs generated " +
                std::to_string(generated.size()));
    }
    // checkable() against brute force + check(), relevant and irrelevant.
    struct Probe {
      TermPtr type;
      Ann mode;
    };
    std::vector<Probe> probes;
    if (!b.extension_free) probes.push_back({mk_unit_ty(), Ann::Relevant});
    if (ctx.size() == 2 && ctx.lookup(0).ann == Ann::Irrelevant)
      probes.push_back({mk_var(1), Ann::Irrelevant});
    for (const auto& probe : probes) {
      for (unsigned s = 1; s <= size && s <= 3; ++s) {
        std::unordered_set<std::string> gen;
        for (const auto& t : en.checkable(ctx, probe.type, s, probe.mode))
          gen.insert(term_key(t));
        std::size_t raw_ok = 0;
        enum_raw(s, static_cast<std::uint32_t>(ctx.size()), b,
                 [&](const TermPtr& t) {
                   ++st.report.cases;
                   try {
                     Fuel fuel{opts.fuel};
                     CheckMode m = probe.mode == Ann::Irrelevant
                                       ? CheckMode::Irrelevant
                                       : CheckMode::Relevant;
                     check(ctx, t, probe.type, m, fuel);
                   } catch (const TypeError&) {
                     return;
                   } catch (const FuelExhausted&) {
                     ++st.report.fuel_exhausted;
                     return;
                   }
                   ++raw_ok;
                   if (!gen.count(term_key(t)))
                     st.fail("checkable() missed " + show(ctx, t));
                 });
        if (raw_ok != gen.size())
          st.fail("checkable count mismatch at size " + std::to_string(s));
      }
    }
  }
  st.finish();
  return st.report;
}

// --- de Bruijn substitution against the named oracle ------------------------

void enum_named(unsigned size, const std::function<void(const NTermPtr&)>& f) {
  static const std::vector<std::string> names = {"x", "y"};
  if (size == 0) return;
  if (size == 1) {
    f(nmk_var("x"));
    f(nmk_var("y"));
    f(nmk(TermKind::Sort));
    f(nmk(TermKind::UnitVal));
    return;
  }
  enum_named(size - 1, [&](const NTermPtr& t) {
    f(nnode(TermKind::SqVal, Ann::Relevant, "", t, nullptr));
  });
  for (unsigned i = 1; i + 1 < size; ++i) {
    enum_named(i, [&](const NTermPtr& left) {
      enum_named(size - 1 - i, [&](const NTermPtr& right) {
        for (const auto& n : names) {
          f(nnode(TermKind::Lam, Ann::Relevant, n, left, right));
          f(nnode(TermKind::Pi, Ann::Relevant, n, left, right));
        }
        f(nnode(TermKind::App, Ann::Relevant, "", left, right));
        f(nnode(TermKind::Split, Ann::Relevant, "x", left, right, "y"));
      });
    });
  }
}

SuiteReport suite_named_oracle(const SuiteOptions& opts) {
  SuiteState st;
  st.report.name = "named-oracle";
  unsigned size = pick_size(opts, 6);
  std::vector<NTermPtr> replacements = {
      nmk_var("y"),
      nmk(TermKind::UnitVal),
      nnode(TermKind::Lam, Ann::Relevant, "x", nmk(TermKind::UnitTy),
            nmk_var("x")),
      nnode(TermKind::Lam, Ann::Relevant, "z", nmk(TermKind::UnitTy),
            nmk_var("y")),
      nnode(TermKind::App, Ann::Relevant, "", nmk_var("y"), nmk_var("y")),
  };
  std::vector<std::string> outer_scope = {"y"};
  std::vector<std::string> full_scope = {"y", "x"};  // x innermost: index 0
  for (unsigned s = 1; s <= size; ++s) {
    enum_named(s, [&](const NTermPtr& named) {
      TermPtr db = from_named(named, full_scope);
      for (const auto& u : replacements) {
        ++st.report.cases;
        TermPtr du = from_named(u, outer_scope);
        TermPtr via_db = subst1(db, du);
        TermPtr via_named =
            from_named(named_subst(named, "x", u), outer_scope);
        if (!alpha_eq(via_db, via_named))
          st.fail("substitution oracle disagrees on " +
                  print(db, full_scope) + " [x := " +
                  print(du, outer_scope) + "]");
      }
    });
  }
  st.finish();
  return st.report;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"per",         "subject-reduction", "oracle",
          "irrelevance", "consistency",       "substitution",
          "erasure",     "enum-validate",     "named-oracle"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "per") return suite_per(opts);
  if (name == "subject-reduction") return suite_subject_reduction(opts);
  if (name == "oracle") return suite_oracle(opts);
  if (name == "irrelevance") return suite_irrelevance(opts);
  if (name == "consistency") return suite_consistency(opts);
  if (name == "substitution") return suite_substitution(opts);
  if (name == "erasure") return suite_erasure(opts);
  if (name == "enum-validate") return suite_enum_validate(opts);
  if (name == "named-oracle") return suite_named_oracle(opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace testkit
}  // namespace iitt
