"""Formal sums over a finite magma basis with coefficients mod r.

An element is a canonical tuple of (basis_index, coeff) pairs, sorted by
basis index, with zero coefficients dropped; the empty tuple is zero.
Multiplication is convolution through the basis table.
"""

import itertools
import re

from .structures import FiniteMagma, ResourceCap, label_is_neutro


class GroupRing:
    def __init__(self, r, basis, name=""):
        if r < 2:
            raise ValueError("coefficient modulus must be at least 2")
        if not isinstance(basis, FiniteMagma):
            raise ValueError("basis must be a finite magma")
        self.r = r
        self.basis = basis
        self.zero = ()
        self.name = name or "Z%d<%s>" % (r, basis.name)
        self.meta = {"kind": "group_ring", "r": r, "basis": dict(basis.meta)}

    def __len__(self):
        return self.r ** len(self.basis)

    def elements(self):
        idxs = range(len(self.basis))
        for coeffs in itertools.product(range(self.r), repeat=len(self.basis)):
            yield tuple((i, c) for i, c in zip(idxs, coeffs) if c)

    def monomial(self, label, coeff=1):
        c = coeff % self.r
        return ((self.basis.idx(label), c),) if c else ()

    def add(self, x, y):
        acc = dict(x)
        for i, c in y:
            v = (acc.get(i, 0) + c) % self.r
            if v:
                acc[i] = v
            else:
                acc.pop(i, None)
        return tuple(sorted(acc.items()))

    def neg(self, x):
        return tuple((i, -c % self.r) for i, c in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        table = self.basis.table
        acc = {}
        for i, c in x:
            row = table[i]
            for j, d in y:
                k = row[j]
                v = (acc.get(k, 0) + c * d) % self.r
                if v:
                    acc[k] = v
                else:
                    acc.pop(k, None)
        return tuple(sorted(acc.items()))

    def scale(self, c, x):
        c %= self.r
        out = []
        for i, v in x:
            w = c * v % self.r
            if w:
                out.append((i, w))
        return tuple(out)

    def support_labels(self, x):
        return tuple(self.basis.elements[i] for i, _ in x)

    def is_pure_neutro(self, x):
        """Nonzero and supported only on I-labelled basis elements."""
        return bool(x) and all(label_is_neutro(self.basis.elements[i]) for i, _ in x)

    def has_neutro_support(self, x):
        return any(label_is_neutro(self.basis.elements[i]) for i, _ in x)

    _TERM_RE = re.compile(r"^(\d+)?(.*)$")

    def parse(self, s):
        t = s.replace(" ", "")
        if t in ("0", ""):
            return ()
        acc = ()
        for term in t.split("+"):
            m = self._TERM_RE.match(term)
            coeff_s, rest = m.groups()
            coeff = int(coeff_s) if coeff_s is not None else 1
            if rest == "":
                label = "1"
            else:
                label = rest
            if label not in self.basis._index:
                raise ValueError("unknown basis element %r in %r" % (label, s))
            acc = self.add(acc, self.monomial(label, coeff))
        return acc

    def format(self, x):
        if not x:
            return "0"
        parts = []
        for i, c in x:
            label = self.basis.elements[i]
            if c == 1:
                parts.append(label)
            elif label == "1":
                parts.append(str(c))
            else:
                parts.append("%d%s" % (c, label))
        return "+".join(parts)

    def generated_ideal(self, gens, max_size=4096, max_rounds=64):
        """Two-sided ideal generated by `gens`: worklist fixpoint, then an
        independent recheck of the result."""
        current = {self.zero}
        current.update(gens)
        current.update(self.neg(g) for g in gens)
        monomials = [((i, 1),) for i in range(len(self.basis))]
        for _ in range(max_rounds):
            # close additively
            while True:
                fresh = set()
                items = sorted(current)
                for a in items:
                    for b in items:
                        s = self.add(a, b)
                        if s not in current:
                            fresh.add(s)
                    if len(current) + len(fresh) > max_size:
                        raise ResourceCap("generated ideal exceeds %d elements" % max_size)
                if not fresh:
                    break
                current |= fresh
            # absorb monomial multiples (scalar multiples follow additively)
            fresh = set()
            for s in sorted(current):
                for m in monomials:
                    for p in (self.mul(m, s), self.mul(s, m)):
                        if p not in current:
                            fresh.add(p)
            if not fresh:
                break
            current |= fresh
            if len(current) > max_size:
                raise ResourceCap("generated ideal exceeds %d elements" % max_size)
        else:
            raise ResourceCap("generated ideal did not stabilize in %d rounds" % max_rounds)

        result = frozenset(current)
        self._recheck_ideal(result)
        return result

    def _recheck_ideal(self, subset):
        for a in subset:
            if self.neg(a) not in subset:
                raise RuntimeError("ideal recheck failed: missing negation")
            for b in subset:
                if self.add(a, b) not in subset:
                    raise RuntimeError("ideal recheck failed: not additively closed")
        for a in subset:
            for i in range(len(self.basis)):
                m = ((i, 1),)
                if self.mul(m, a) not in subset or self.mul(a, m) not in subset:
                    raise RuntimeError("ideal recheck failed: not absorbing")


def group_ring(r, basis, name=""):
    return GroupRing(r, basis, name=name)
