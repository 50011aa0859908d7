"""Unions of finitely many tagged components sharing one indeterminacy I.

A collection holds N components, each a finite magma or ring carrying a
declared kind tag (group / semigroup / groupoid / loop / ring) and a flag
saying whether the component is an indeterminacy extension.  Plain tags are
checked against the axioms; indeterminate tags only require the carrier to
mention I, because several stock carriers fail the stronger axioms their
tag advertises.  Subset checks work part-by-part.
"""

from dataclasses import dataclass

from .structures import (
    FiniteMagma,
    FiniteRing,
    label_is_neutro,
    verify_kind,
)
from .subsets import (
    Verdict,
    is_ideal,
    is_pseudo_subring,
    is_ring_ideal,
    is_strong_subgroupoid,
    is_subgroupoid,
    is_subring,
)

MAGMA_TAGS = ("group", "semigroup", "groupoid", "loop")
ALL_TAGS = MAGMA_TAGS + ("ring",)

MIXED = "Mixed"
MIXED_DUAL = "MixedDual"
WEAK_MIXED = "WeakMixed"
WEAK_MIXED_DUAL = "WeakMixedDual"


@dataclass
class Component:
    structure: object
    alg: str
    neutro: bool

    @property
    def name(self):
        return self.structure.name


class NCollection:
    def __init__(self, components, name=""):
        if len(components) < 2:
            raise ValueError("a collection needs at least two components")
        comps = []
        for c in components:
            comp = c if isinstance(c, Component) else Component(*c)
            if comp.alg not in ALL_TAGS:
                raise ValueError("unknown kind tag %r" % comp.alg)
            self._validate(comp)
            comps.append(comp)
        if not any(c.neutro for c in comps):
            raise ValueError("a collection needs an indeterminate component")
        self.components = comps
        self.name = name or "collection(%d)" % len(comps)

    @staticmethod
    def _validate(comp):
        want_ring = comp.alg == "ring"
        if want_ring != isinstance(comp.structure, FiniteRing):
            raise ValueError("component %s does not match tag %r"
                             % (comp.structure.name, comp.alg))
        has_i = any(label_is_neutro(x) for x in comp.structure.elements)
        if comp.neutro:
            if not has_i:
                raise ValueError("component %s declared indeterminate but has "
                                 "no I-labelled element" % comp.structure.name)
            return
        if has_i:
            raise ValueError("component %s declared plain but carries "
                             "I-labelled elements" % comp.structure.name)
        if want_ring:
            return
        rep = verify_kind(comp.structure)
        holds = {"group": rep.group, "semigroup": rep.semigroup,
                 "loop": rep.loop, "groupoid": True}[comp.alg]
        if not holds:
            raise ValueError("component %s fails its %r axioms: %r"
                             % (comp.structure.name, comp.alg, rep.witnesses))

    def __len__(self):
        return len(self.components)

    def order(self):
        return sum(len(c.structure) for c in self.components)

    def resolve_parts(self, parts):
        parts = [frozenset(p or ()) for p in parts]
        if len(parts) != len(self.components):
            raise ValueError("expected %d parts, got %d"
                             % (len(self.components), len(parts)))
        return parts


def _part_verdict(comp, labels, strong):
    s = comp.structure
    if isinstance(s, FiniteRing):
        v = is_pseudo_subring(s, labels) if strong else is_subring(s, labels)
        return v
    if strong:
        v = is_strong_subgroupoid(s, labels)
    else:
        v = is_subgroupoid(s, labels)
    if v.ok and comp.alg == "loop":
        pool = sorted(labels, key=s.idx)
        has_e = any(
            all(s.op(e, x) == x and s.op(x, e) == x for x in pool) for e in pool
        )
        if not has_e:
            return Verdict(False, flags=v.flags + ("no-part-identity",),
                           note="closed but has no two-sided identity inside")
    return v


def is_n_sub(ncol, parts, strong=False, require_neutro=True):
    """Part-by-part substructure check; strong demands purely indeterminate
    parts, plain only that some part carries I (unless require_neutro=False)."""
    parts = ncol.resolve_parts(parts)
    if any(not p for p in parts):
        raise ValueError("empty part: use the deficit check for partial subs")
    for i, (comp, labels) in enumerate(zip(ncol.components, parts)):
        v = _part_verdict(comp, labels, strong)
        if not v.ok:
            return Verdict(False, witness=(i, comp.name) + tuple(v.witness or ()),
                           flags=v.flags, note="part %d: %s" % (i, v.note))
    if require_neutro and not strong:
        if not any(any(label_is_neutro(x) for x in p) for p in parts):
            return Verdict(False, flags=("no-indeterminate",),
                           note="no part carries an indeterminate member")
    return Verdict(True)


def is_n_ideal(ncol, parts, require_neutro=True):
    """Every part a two-sided ideal of its component."""
    parts = ncol.resolve_parts(parts)
    if any(not p for p in parts):
        raise ValueError("empty part: use the deficit check for partial subs")
    for i, (comp, labels) in enumerate(zip(ncol.components, parts)):
        s = comp.structure
        v = is_ring_ideal(s, labels) if isinstance(s, FiniteRing) else is_ideal(s, labels)
        if not v.ok:
            return Verdict(False, witness=(i, comp.name) + tuple(v.witness or ()),
                           flags=v.flags, note="part %d: %s" % (i, v.note))
    if require_neutro:
        if not any(any(label_is_neutro(x) for x in p) for p in parts):
            return Verdict(False, flags=("no-indeterminate",),
                           note="no part carries an indeterminate member")
    return Verdict(True)


def is_deficit_sub(ncol, parts, require_neutro=True):
    """Substructure on strictly between one and N of the components."""
    parts = ncol.resolve_parts(parts)
    t = sum(1 for p in parts if p)
    if not 1 < t < len(parts):
        return Verdict(False, witness=(t, len(parts)),
                       note="needs strictly between 1 and N nonempty parts")
    for i, (comp, labels) in enumerate(zip(ncol.components, parts)):
        if not labels:
            continue
        v = _part_verdict(comp, labels, strong=False)
        if not v.ok:
            return Verdict(False, witness=(i, comp.name) + tuple(v.witness or ()),
                           flags=v.flags, note="part %d: %s" % (i, v.note))
    if require_neutro:
        if not any(any(label_is_neutro(x) for x in p) for p in parts):
            return Verdict(False, flags=("no-indeterminate",),
                           note="no part carries an indeterminate member")
    return Verdict(True, flags=("deficit-%d-of-%d" % (t, len(parts)),))


def classify_mixed(ncol):
    """Mixed-kind verdict from the declared component tags."""
    four = set(MAGMA_TAGS)
    neutro_kinds = {c.alg for c in ncol.components if c.neutro and c.alg != "ring"}
    plain_kinds = {c.alg for c in ncol.components if not c.neutro and c.alg != "ring"}
    has_neutro = any(c.neutro for c in ncol.components)
    n = len(ncol.components)
    if n >= 5 and four <= neutro_kinds:
        return MIXED
    if n >= 5 and four <= plain_kinds and has_neutro:
        return MIXED_DUAL
    if 2 <= len(neutro_kinds) <= 3:
        return WEAK_MIXED
    if 2 <= len(plain_kinds) <= 3 and has_neutro:
        return WEAK_MIXED_DUAL
    return None


def lagrange_mixed(ncol, parts, require_neutro=True):
    """Whether a sub-collection's total order divides the collection's."""
    v = is_n_sub(ncol, parts, require_neutro=require_neutro)
    if not v.ok:
        raise ValueError("not a sub-collection: %s" % (v.note,))
    k = sum(len(frozenset(p)) for p in parts)
    total = ncol.order()
    if total % k == 0:
        return Verdict(True)
    return Verdict(False, witness=(k, total),
                   note="order %d does not divide %d" % (k, total))
