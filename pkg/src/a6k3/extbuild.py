"""The four groups of shape A6.mu4, built as explicit permutation groups.

Each candidate lives inside N x mu4 for one of the four overgroups
N in {A6, S6, PGL(2,9), M10} of A6 inside Aut(A6): the group is generated
by A6 x {1} together with gtilde = (g, zeta4), with g as dictated by the
choice of N.  mu4 is realized as a 4-cycle on four fresh points appended
after N's points, so the candidates act on 6 + 4 = 10 or 10 + 4 = 14
points.  identify() recovers the construction from the bare group using
only isomorphism-invariant data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .permgrp import (
    Perm,
    PermGroup,
    FusionType,
    centralizer_of_subgroup,
    closure,
    conjugacy_classes,
    conjugation_image,
    derived_subgroup,
    fingerprint,
    fusion_type,
    is_a6_certified,
)
from .pgl9 import build_pgl29, build_psl29, classify_overgroups

KINDS = ("A6_4", "S6_2", "PGL29_2", "M10_2")

__all__ = [
    "KINDS",
    "ExtensionCandidate",
    "StructureReport",
    "alternating6",
    "mu4_cycle",
    "build_candidate",
    "build_all_candidates",
    "verify_extension_structure",
    "identify",
    "pairwise_nonisomorphic",
]


@cache
def alternating6() -> PermGroup:
    """A6 in its natural action on 6 points."""
    G = closure(
        [Perm.from_cycles([(0, 1, 2)], 6), Perm.from_cycles([(1, 2, 3, 4, 5)], 6)]
    )
    assert len(G) == 360 and is_a6_certified(G)
    return G


def mu4_cycle(total_degree: int) -> Perm:
    """The 4-cycle on the last four of total_degree points, representing zeta4."""
    d = total_degree - 4
    return Perm.from_cycles([(d, d + 1, d + 2, d + 3)], total_degree)


@dataclass(eq=False)
class ExtensionCandidate:
    """One concrete group of shape A6.mu4 with its distinguished data."""

    kind: str
    group: PermGroup
    a6: PermGroup
    gtilde: Perm
    alpha: dict  # element -> mu4 exponent in 0..3; a homomorphism with kernel a6
    conj_image_order: int
    fusion: FusionType

    def alpha_of(self, x: Perm) -> int:
        return self.alpha[x]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.group.degree,
            "generators": [g.cycle_string() for g in self.group.generators],
            "gtilde": self.gtilde.cycle_string(),
            "conj_image_order": self.conj_image_order,
            "fusion": {"swaps_3": self.fusion.swaps_3, "swaps_5": self.fusion.swaps_5},
            "fingerprint": fingerprint(self.group).to_json(),
        }


def _tail_exponent(x: Perm, base: int) -> int:
    # x must act on the 4 appended points as a power of the 4-cycle
    k = (x(base) - base) % 4
    for j in range(4):
        if x(base + j) != base + (j + k) % 4:
            raise AssertionError("element does not act as a mu4 power on the tail")
    return k


@cache
def build_candidate(kind: str, coset_choice: int = 0) -> ExtensionCandidate:
    """Build one of the four candidates.

    coset_choice selects among the canonical order-4 coset elements for
    M10_2 (0 = least); the resulting group is the same up to isomorphism.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "A6_4":
        N_act = alternating6()
        g = Perm.identity(6)
    elif kind == "S6_2":
        N_act = alternating6()
        g = Perm.from_cycles([(0, 1)], 6)
    elif kind == "PGL29_2":
        N_act = build_psl29()
        pgl = build_pgl29()
        h = min(x for x in pgl.elements if x.order() == 10)
        g = h ** 5
        assert g.order() == 2 and g not in N_act
    else:  # M10_2
        N_act = build_psl29()
        split = classify_overgroups()
        quads = sorted(x for x in split.m10.elements if x not in N_act and x.order() == 4)
        g = quads[coset_choice]
    if kind != "M10_2" and coset_choice != 0:
        raise ValueError("coset_choice only varies the M10_2 construction")

    base = N_act.degree
    total = base + 4
    a6_gens = tuple(p.embedded(total) for p in N_act.generators)
    gtilde = g.embedded(total) * mu4_cycle(total)
    group = closure(a6_gens + (gtilde,))
    assert len(group) == 1440, len(group)

    a6 = derived_subgroup(group)
    assert len(a6) == 360 and is_a6_certified(a6)
    assert a6 == closure(a6_gens)

    alpha = {x: _tail_exponent(x, base) for x in group.elements}
    assert alpha[gtilde] == 1
    image, _ = conjugation_image(group, a6)
    return ExtensionCandidate(
        kind=kind,
        group=group,
        a6=a6,
        gtilde=gtilde,
        alpha=alpha,
        conj_image_order=len(image),
        fusion=fusion_type(image),
    )


def build_all_candidates() -> dict[str, ExtensionCandidate]:
    return {kind: build_candidate(kind) for kind in KINDS}


@dataclass(eq=False)
class StructureReport:
    """Structural facts every group of shape A6.mu4 must satisfy."""

    kind: str
    injective: bool                 # (conjugation, alpha) separates elements
    central_involution: Perm        # f with trivial conjugation action, alpha = 2
    half_kernel_is_product: bool    # alpha^-1({0,2}) = a6 x <f>
    outer_alpha_odd: bool           # non-inner conjugation action forces alpha = +-1
    split_witnessed: bool           # <gtilde> has order 4 and meets a6 trivially

    @property
    def passed(self) -> bool:
        return (
            self.injective
            and self.half_kernel_is_product
            and self.outer_alpha_odd
            and self.split_witnessed
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "injective": self.injective,
            "central_involution": self.central_involution.cycle_string(),
            "half_kernel_is_product": self.half_kernel_is_product,
            "outer_alpha_odd": self.outer_alpha_odd,
            "split_witnessed": self.split_witnessed,
            "passed": self.passed,
        }


def verify_extension_structure(cand: ExtensionCandidate) -> StructureReport:
    """Check the structural facts shared by all four candidates."""
    G = cand.group
    if len(G) != 1440:
        raise ValueError(f"candidate group must have order 1440, got {len(G)}")
    a6 = cand.a6
    alpha = cand.alpha
    ident = G.identity

    cent = centralizer_of_subgroup(G, a6)
    # (conjugation, alpha) is injective iff its kernel Cent_G(a6) & ker(alpha)
    # is trivial
    injective = all(x == ident or alpha[x] != 0 for x in cent.elements)

    f_candidates = sorted(
        x for x in cent.elements if alpha[x] == 2 and (x * x) == ident
    )
    if not f_candidates:
        raise AssertionError("no central involution with alpha = -1 found")
    f = f_candidates[0]
    half_kernel = {x for x in G.elements if alpha[x] % 2 == 0}
    product = set(a6.elements) | {a * f for a in a6.elements}
    half_is_product = (f not in a6) and half_kernel == product

    inner_acting = {a * z for a in a6.elements for z in cent.elements}
    outer_ok = all(alpha[x] % 2 == 1 for x in G.elements if x not in inner_acting)

    powers = [cand.gtilde ** k for k in range(1, 4)]
    split = cand.gtilde.order() == 4 and all(p not in a6 for p in powers)

    return StructureReport(
        kind=cand.kind,
        injective=injective,
        central_involution=f,
        half_kernel_is_product=half_is_product,
        outer_alpha_odd=outer_ok,
        split_witnessed=split,
    )


def identify(obj) -> str:
    """Recover the kind of a candidate from isomorphism-invariant data only.

    Accepts an ExtensionCandidate or a bare PermGroup (possibly rebuilt from
    conjugated generators on shuffled points).  Uses the order of the
    conjugation image (360 vs 720) and, in the 720 case, the fusion pattern
    of that image on the order-3 / order-5 classes of the derived subgroup.
    """
    G = obj.group if isinstance(obj, ExtensionCandidate) else obj
    if len(G) != 1440:
        raise ValueError(f"expected a group of order 1440, got {len(G)}")
    a6 = derived_subgroup(G)
    if not is_a6_certified(a6):
        raise ValueError("derived subgroup does not carry the A6 certificate")
    cent = centralizer_of_subgroup(G, a6)
    image_order = len(G) // len(cent)  # conjugation kernel = centralizer
    if image_order == 360:
        return "A6_4"
    if image_order != 720:
        raise ValueError(f"unexpected conjugation image order {image_order}")

    classes = conjugacy_classes(a6)
    class_of = {x: k for k, c in enumerate(classes) for x in c.members}
    idx3 = [k for k, c in enumerate(classes) if c.element_order == 3]
    idx5 = [k for k, c in enumerate(classes) if c.element_order == 5]
    inner_acting = {a * z for a in a6.elements for z in cent.elements}
    outer = min(x for x in G.elements if x not in inner_acting)
    oi = outer.inverse()
    rep3 = classes[idx3[0]].representative
    rep5 = classes[idx5[0]].representative
    swaps_3 = class_of[outer * rep3 * oi] == idx3[1]
    swaps_5 = class_of[outer * rep5 * oi] == idx5[1]
    if swaps_3 and swaps_5:
        return "M10_2"
    if swaps_5:
        return "S6_2"
    if swaps_3:
        return "PGL29_2"
    raise RuntimeError("conjugation image of order 720 fixes all classes")


def pairwise_nonisomorphic(candidates) -> bool:
    """True iff the fingerprints are pairwise distinct and identify() agrees."""
    cands = list(candidates)
    prints = [fingerprint(c.group) for c in cands]
    for i in range(len(prints)):
        for j in range(i + 1, len(prints)):
            if prints[i] == prints[j]:
                return False
    return all(identify(c) == c.kind for c in cands)
