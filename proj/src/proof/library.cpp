#include "elw/proof.hpp"

namespace elw {

namespace {

using F = Formula;

const F p = F::var(0);
const F q = F::var(1);

F bx(const F& f) { return F::box(f); }
F kn(const F& f) { return F::know(f); }
F no(const F& f) { return F::neg(f); }
F imp(const F& a, const F& b) { return F::implies(a, b); }

// Axiom instances shared by several scripts.
std::size_t a2(ProofBuilder& b, const F& f) { return b.axiom(Axiom::A2, imp(bx(f), f)); }
std::size_t a4(ProofBuilder& b, const F& f) { return b.axiom(Axiom::A4, imp(bx(f), bx(bx(f)))); }
std::size_t a5(ProofBuilder& b, const F& f) {
  return b.axiom(Axiom::A5, imp(no(bx(f)), bx(no(bx(f)))));
}
std::size_t a7(ProofBuilder& b, const F& f) { return b.axiom(Axiom::A7, imp(bx(f), bx(kn(f)))); }
std::size_t a8(ProofBuilder& b, const F& f) { return b.axiom(Axiom::A8, imp(kn(f), no(no(f)))); }

ProofScript axiom_k() {
  ProofBuilder b;
  b.k_axiom(p, q);
  return b.build();
}

ProofScript box_and() {
  ProofBuilder b;
  const F pq = F::conj(p, q);
  const std::size_t left = b.k_apply(b.necessitate_int(imp(pq, p)));
  const std::size_t right = b.k_apply(b.necessitate_int(imp(pq, q)));
  const std::size_t pair = b.k_apply(b.necessitate_int(imp(p, imp(q, pq))));
  const std::size_t dist = b.k_axiom(q, pq);
  b.by_int({left, right, pair, dist}, F::iff(bx(pq), F::conj(bx(p), bx(q))));
  return b.build();
}

ProofScript box_iff_top_forward() {
  ProofBuilder b;
  const std::size_t to_top = b.necessitate_int(imp(p, F::top()));
  const std::size_t from_top = b.k_apply(b.necessitate_int(imp(p, imp(F::top(), p))));
  b.by_int({to_top, from_top}, imp(bx(p), F::ident(p, F::top())));
  return b.build();
}

ProofScript box_iff_top_backward() {
  ProofBuilder b;
  const std::size_t elim = b.k_apply(b.necessitate_int(imp(imp(F::top(), p), p)));
  b.by_int({elim}, imp(F::ident(p, F::top()), bx(p)));
  return b.build();
}

ProofScript reflection() {
  ProofBuilder b;
  const std::size_t refl = a8(b, p);
  const std::size_t tnd = b.tertium(p);
  b.by_int({refl, tnd}, imp(kn(p), p));
  return b.build();
}

ProofScript not_known_known_unproved() {
  ProofBuilder b;
  const std::vector<std::size_t> steps{a7(b, p), a2(b, kn(p)), a5(b, p), a7(b, no(bx(p))),
                                       a2(b, kn(no(bx(p))))};
  b.by_int(steps, imp(no(kn(p)), kn(no(bx(p)))));
  return b.build();
}

ProofScript impossible_boxk_impossible_box() {
  ProofBuilder b;
  const std::size_t boxed_a7 = b.an(a7(b, p));
  const F contra = imp(imp(bx(p), bx(kn(p))), imp(no(bx(kn(p))), no(bx(p))));
  const std::size_t lifted = b.k_apply(b.necessitate_int(contra));
  b.k_apply(b.mp(boxed_a7, lifted));
  return b.build();
}

// Lines deriving box p -> K box p; returns the premises for by_int.
std::vector<std::size_t> proved_known_steps(ProofBuilder& b) {
  return {a4(b, p), a7(b, bx(p)), a2(b, kn(bx(p)))};
}

std::vector<std::size_t> unproved_known_steps(ProofBuilder& b) {
  return {a5(b, p), a7(b, no(bx(p))), a2(b, kn(no(bx(p))))};
}

ProofScript proved_known_proved() {
  ProofBuilder b;
  b.by_int(proved_known_steps(b), imp(bx(p), kn(bx(p))));
  return b.build();
}

ProofScript unproved_known_unproved() {
  ProofBuilder b;
  b.by_int(unproved_known_steps(b), imp(no(bx(p)), kn(no(bx(p)))));
  return b.build();
}

ProofScript unknown_proved_iff_impossible() {
  ProofBuilder b;
  auto steps = proved_known_steps(b);
  steps.push_back(a5(b, p));
  steps.push_back(a8(b, bx(p)));
  steps.push_back(a2(b, no(bx(p))));
  b.by_int(steps, F::iff(no(kn(bx(p))), bx(no(bx(p)))));
  return b.build();
}

ProofScript no_proof_of_k_impossible_box() {
  ProofBuilder b;
  b.by_int({a7(b, p), a5(b, p)}, imp(no(bx(kn(p))), bx(no(bx(p)))));
  return b.build();
}

ProofScript proved_k_possible() {
  ProofBuilder b;
  const std::size_t lifted = b.k_apply(b.an(a8(b, p)));
  const std::size_t dist = b.k_axiom(no(p), F::bottom());
  const std::size_t drop = a2(b, F::bottom());
  b.by_int({lifted, dist, drop}, imp(bx(kn(p)), no(bx(no(p)))));
  return b.build();
}

ProofScript known_proved_or_known_unproved() {
  ProofBuilder b;
  const std::size_t proved = b.by_int(proved_known_steps(b), imp(bx(p), kn(bx(p))));
  const std::size_t unproved = b.by_int(unproved_known_steps(b), imp(no(bx(p)), kn(no(bx(p)))));
  const std::size_t tnd = b.tertium(bx(p));
  b.by_int({proved, unproved, tnd}, F::disj(kn(bx(p)), kn(no(bx(p)))));
  return b.build();
}

}  // namespace

std::map<std::string, LibraryEntry> theorem_library() {
  std::map<std::string, LibraryEntry> lib;
  auto add = [&](std::string name, ProofScript script, LogicId logic, std::optional<LogicId> weaker) {
    const std::string statement = render(script.conclusion());
    lib.emplace(name, LibraryEntry{name, statement, logic, weaker, std::move(script)});
  };
  add("axiom-k", axiom_k(), LogicId::L3, std::nullopt);
  add("box-and", box_and(), LogicId::L3, std::nullopt);
  add("box-iff-top.fwd", box_iff_top_forward(), LogicId::EL3minus, std::nullopt);
  add("box-iff-top.bwd", box_iff_top_backward(), LogicId::EL3minus, std::nullopt);
  add("reflection", reflection(), LogicId::EL3, LogicId::EL3minus);
  add("not-known-known-unproved", not_known_known_unproved(), LogicId::EL5, LogicId::EL4);
  add("impossible-boxk-impossible-box", impossible_boxk_impossible_box(), LogicId::EL3minus, LogicId::L3);
  add("proved-known-proved", proved_known_proved(), LogicId::EL4, LogicId::EL3);
  add("unproved-known-unproved", unproved_known_unproved(), LogicId::EL5, LogicId::EL4);
  add("unknown-proved-iff-impossible", unknown_proved_iff_impossible(), LogicId::EL5, LogicId::EL4);
  add("no-proof-of-k-impossible-box", no_proof_of_k_impossible_box(), LogicId::EL5, LogicId::EL4);
  add("proved-k-possible", proved_k_possible(), LogicId::EL3, LogicId::EL3minus);
  add("known-proved-or-known-unproved", known_proved_or_known_unproved(), LogicId::EL5, LogicId::EL4);

  const F a = p, c = q;
  const std::vector<std::pair<std::string, F>> sp_cases{
      {"sp.and", F::conj(F::var(2), c)},
      {"sp.or", F::disj(F::var(2), c)},
      {"sp.imp", imp(F::var(2), c)},
      {"sp.box", bx(F::var(2))},
      {"sp.k", kn(F::var(2))},
  };
  for (const auto& [name, chi] : sp_cases) {
    // Only the K case needs A6 and A7.
    const auto weaker = chi.kind() == Kind::Know ? std::optional(LogicId::L3) : std::nullopt;
    add(name, build_sp_proof(a, c, chi, 2), LogicId::EL3minus, weaker);
  }
  return lib;
}

}  // namespace elw
