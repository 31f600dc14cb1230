#include "iitt/term.hpp"

#include <stdexcept>
#include <utility>

namespace iitt {

const char* to_string(Ann ann) {
  return ann == Ann::Relevant ? ":" : "/";
}

unsigned binder_arity(TermKind kind) {
  switch (kind) {
    case TermKind::Pi:
    case TermKind::Lam:
    case TermKind::Sigma:
    case TermKind::SqElim:
      return 1;
    case TermKind::Split:
      return 2;
    default:
      return 0;
  }
}

namespace {

TermPtr make(TermKind k) { return std::make_shared<Term>(k); }

// UnitTy, UnitVal and Dummy are interned.
const TermPtr& unit_ty_singleton() {
  static const TermPtr t = make(TermKind::UnitTy);
  return t;
}
const TermPtr& unit_val_singleton() {
  static const TermPtr t = make(TermKind::UnitVal);
  return t;
}
const TermPtr& dummy_singleton() {
  static const TermPtr t = make(TermKind::Dummy);
  return t;
}

}  // namespace

TermPtr mk_sort(std::uint32_t level) {
  auto t = std::make_shared<Term>(TermKind::Sort);
  t->level = level;
  return t;
}

TermPtr mk_pi(Ann ann, TermPtr dom, TermPtr cod, std::string hint) {
  auto t = std::make_shared<Term>(TermKind::Pi);
  t->ann = ann;
  t->a = std::move(dom);
  t->b = std::move(cod);
  t->hint = std::move(hint);
  return t;
}

TermPtr mk_var(std::uint32_t index) {
  auto t = std::make_shared<Term>(TermKind::Var);
  t->index = index;
  return t;
}

TermPtr mk_lam(Ann ann, TermPtr dom, TermPtr body, std::string hint) {
  auto t = std::make_shared<Term>(TermKind::Lam);
  t->ann = ann;
  t->a = std::move(dom);
  t->b = std::move(body);
  t->hint = std::move(hint);
  return t;
}

TermPtr mk_app(Ann ann, TermPtr fn, TermPtr arg) {
  auto t = std::make_shared<Term>(TermKind::App);
  t->ann = ann;
  t->a = std::move(fn);
  t->b = std::move(arg);
  return t;
}

TermPtr mk_unit_ty() { return unit_ty_singleton(); }
TermPtr mk_unit_val() { return unit_val_singleton(); }

TermPtr mk_sigma(Ann ann, TermPtr dom, TermPtr cod, std::string hint) {
  auto t = std::make_shared<Term>(TermKind::Sigma);
  t->ann = ann;
  t->a = std::move(dom);
  t->b = std::move(cod);
  t->hint = std::move(hint);
  return t;
}

TermPtr mk_pair(Ann ann, TermPtr fst, TermPtr snd) {
  auto t = std::make_shared<Term>(TermKind::Pair);
  t->ann = ann;
  t->a = std::move(fst);
  t->b = std::move(snd);
  return t;
}

TermPtr mk_split(TermPtr scrut, TermPtr body, std::string hint,
                 std::string hint2) {
  auto t = std::make_shared<Term>(TermKind::Split);
  t->a = std::move(scrut);
  t->b = std::move(body);
  t->hint = std::move(hint);
  t->hint2 = std::move(hint2);
  return t;
}

TermPtr mk_sq_ty(TermPtr inner) {
  auto t = std::make_shared<Term>(TermKind::SqTy);
  t->a = std::move(inner);
  return t;
}

TermPtr mk_sq_val(TermPtr inner) {
  auto t = std::make_shared<Term>(TermKind::SqVal);
  t->a = std::move(inner);
  return t;
}

TermPtr mk_sq_elim(TermPtr scrut, TermPtr body, std::string hint) {
  auto t = std::make_shared<Term>(TermKind::SqElim);
  t->a = std::move(scrut);
  t->b = std::move(body);
  t->hint = std::move(hint);
  return t;
}

TermPtr mk_dummy() { return dummy_singleton(); }

std::size_t term_size(const TermPtr& t) {
  if (!t) return 0;
  return 1 + term_size(t->a) + term_size(t->b);
}

bool alpha_eq(const TermPtr& t, const TermPtr& u) {
  if (t == u) return true;
  if (!t || !u) return false;
  if (t->kind != u->kind) return false;
  switch (t->kind) {
    case TermKind::Sort:
      return t->level == u->level;
    case TermKind::Var:
      return t->index == u->index;
    case TermKind::UnitTy:
    case TermKind::UnitVal:
    case TermKind::Dummy:
      return true;
    default:
      break;
  }
  if (t->ann != u->ann) return false;
  return alpha_eq(t->a, u->a) && alpha_eq(t->b, u->b);
}

namespace {

// Rebuilds t with the same head but new children; keeps sharing when nothing
// changed.
TermPtr with_children(const TermPtr& t, TermPtr a, TermPtr b) {
  if (a == t->a && b == t->b) return t;
  auto n = std::make_shared<Term>(*t);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

TermPtr shift_at(const TermPtr& t, std::uint32_t by, std::uint32_t cutoff) {
  if (!t || by == 0) return t;
  switch (t->kind) {
    case TermKind::Var:
      return t->index >= cutoff ? mk_var(t->index + by) : t;
    case TermKind::Sort:
    case TermKind::UnitTy:
    case TermKind::UnitVal:
    case TermKind::Dummy:
      return t;
    default: {
      TermPtr a = shift_at(t->a, by, cutoff);
      TermPtr b = shift_at(t->b, by, cutoff + binder_arity(t->kind));
      return with_children(t, std::move(a), std::move(b));
    }
  }
}

TermPtr subst_at(const TermPtr& t, const Subst& s) {
  if (!t) return t;
  switch (t->kind) {
    case TermKind::Var:
      return s.apply_to_var(t->index);
    case TermKind::Sort:
    case TermKind::UnitTy:
    case TermKind::UnitVal:
    case TermKind::Dummy:
      return t;
    default: {
      unsigned arity = binder_arity(t->kind);
      TermPtr a = subst_at(t->a, s);
      TermPtr b;
      if (t->b) {
        Subst under = s;
        for (unsigned i = 0; i < arity; ++i) under = under.lift();
        b = subst_at(t->b, under);
      }
      return with_children(t, std::move(a), std::move(b));
    }
  }
}

}  // namespace

TermPtr shift(const TermPtr& t, std::uint32_t by, std::uint32_t cutoff) {
  return shift_at(t, by, cutoff);
}

bool occurs_free(const TermPtr& t, std::uint32_t index) {
  if (!t) return false;
  if (t->kind == TermKind::Var) return t->index == index;
  if (occurs_free(t->a, index)) return true;
  return t->b && occurs_free(t->b, index + binder_arity(t->kind));
}

std::optional<TermPtr> strengthen(const TermPtr& t, std::uint32_t by) {
  for (std::uint32_t i = 0; i < by; ++i)
    if (occurs_free(t, i)) return std::nullopt;
  // Map i -> i - by for i >= by; the low indices were just checked absent.
  std::vector<TermPtr> map;
  map.reserve(by);
  for (std::uint32_t i = 0; i < by; ++i) map.push_back(mk_var(0));  // unused
  return subst(t, Subst::of_map(std::move(map), 0));
}

Subst Subst::identity() { return Subst(); }

Subst Subst::singleton(TermPtr u) {
  Subst s;
  s.map_.push_back(std::move(u));
  return s;
}

Subst Subst::pair(TermPtr fst, TermPtr snd) {
  Subst s;
  s.map_.push_back(std::move(snd));  // index 0: second (innermost) binder
  s.map_.push_back(std::move(fst));  // index 1: first binder
  return s;
}

Subst Subst::of_map(std::vector<TermPtr> map, std::uint32_t shift) {
  Subst s;
  s.map_ = std::move(map);
  s.shift_ = shift;
  return s;
}

TermPtr Subst::apply_to_var(std::uint32_t index) const {
  if (index < map_.size()) return map_[index];
  return mk_var(index - static_cast<std::uint32_t>(map_.size()) + shift_);
}

Subst Subst::lift() const {
  Subst s;
  s.map_.reserve(map_.size() + 1);
  s.map_.push_back(mk_var(0));
  for (const auto& t : map_) s.map_.push_back(iitt::shift(t, 1));
  s.shift_ = shift_ + 1;
  return s;
}

Subst Subst::compose(const Subst& s, const Subst& r) {
  const auto n = static_cast<std::uint32_t>(s.map_.size());
  const auto m = static_cast<std::uint32_t>(r.map_.size());
  // (s;r)(i) = r-applied s(i) for explicit entries; beyond them s(i) is a
  // renumbered variable, which r may still map explicitly.
  std::uint32_t extra = m > s.shift_ ? m - s.shift_ : 0;
  Subst out;
  out.map_.reserve(n + extra);
  for (const auto& t : s.map_) out.map_.push_back(subst(t, r));
  for (std::uint32_t i = 0; i < extra; ++i)
    out.map_.push_back(r.apply_to_var(i + s.shift_));
  out.shift_ = m > s.shift_ ? r.shift_ : s.shift_ - m + r.shift_;
  return out;
}

TermPtr subst(const TermPtr& t, const Subst& s) { return subst_at(t, s); }

TermPtr subst1(const TermPtr& body, const TermPtr& u) {
  return subst(body, Subst::singleton(u));
}

TermPtr subst2(const TermPtr& body, const TermPtr& fst, const TermPtr& snd) {
  return subst(body, Subst::pair(fst, snd));
}

const Binding& Context::lookup(std::uint32_t index) const {
  if (index >= bindings_.size())
    throw std::out_of_range("context lookup: index " + std::to_string(index) +
                            " in context of length " +
                            std::to_string(bindings_.size()));
  return bindings_[bindings_.size() - 1 - index];
}

TermPtr Context::lookup_type(std::uint32_t index) const {
  return shift(lookup(index).ty, index + 1);
}

Context Context::extended(Binding b) const {
  std::vector<Binding> bs = bindings_;
  bs.push_back(std::move(b));
  return Context(std::move(bs));
}

Context Context::extended(Ann ann, TermPtr ty, std::string name) const {
  return extended(Binding{std::move(name), ann, std::move(ty)});
}

Context resurrect(const Context& ctx) {
  std::vector<Binding> bs = ctx.bindings();
  for (auto& b : bs) b.ann = Ann::Relevant;
  return Context(std::move(bs));
}

std::uint32_t sort_axiom(std::uint32_t k) { return k + 1; }

std::uint32_t sort_rule(std::uint32_t i, std::uint32_t j) {
  return i > j ? i : j;
}

}  // namespace iitt
