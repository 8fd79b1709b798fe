"""Integral Cayley numbers: the classical real octonions at exact
half-integer precision, the 240 units of norm one, and the isomorphism of
their sign quotient with the Paige loop over GF(2).

The multiplication is the doubling construction applied three times from
the rationals with parameter -1, over the basis (1, i, j, k, e, ie, je, ke);
coordinates of stored elements are HalfInteger, all intermediate arithmetic
is exact rational."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .composition import QQ, cd_double, scalar_algebra
from .fields import HalfInteger
from .loops import ClosureCapExceeded, FiniteLoop, closure, find_isomorphism
from . import paige

OCTONIONS = cd_double(cd_double(cd_double(scalar_algebra(QQ), Fraction(-1)),
                                Fraction(-1)), Fraction(-1))


@dataclass(frozen=True)
class ClassicalOctonion:
    coords: tuple  # 8 HalfInteger over (1, i, j, k, e, ie, je, ke)

    @classmethod
    def from_fractions(cls, fracs):
        return cls(tuple(HalfInteger.from_fraction(Fraction(f)) for f in fracs))

    @classmethod
    def basis_unit(cls, index):
        fr = [Fraction(0)] * 8
        fr[index] = Fraction(1)
        return cls.from_fractions(fr)

    def fractions(self):
        return tuple(c.to_fraction() for c in self.coords)

    def __mul__(self, other):
        prod = OCTONIONS.mul(self.fractions(), other.fractions())
        return ClassicalOctonion.from_fractions(prod)

    def __add__(self, other):
        return ClassicalOctonion.from_fractions(
            OCTONIONS.add(self.fractions(), other.fractions()))

    def __sub__(self, other):
        return ClassicalOctonion.from_fractions(
            OCTONIONS.sub(self.fractions(), other.fractions()))

    def __neg__(self):
        return ClassicalOctonion(tuple(-c for c in self.coords))

    def conjugate(self):
        return ClassicalOctonion.from_fractions(OCTONIONS.conj(self.fractions()))

    def norm(self):
        return OCTONIONS.norm(self.fractions())

    def trace(self):
        """a + conj(a) as a rational (twice the real coordinate)."""
        return 2 * self.coords[0].to_fraction()

    def label(self):
        return "(%s)" % ",".join(str(c) for c in self.coords)

    def sort_key(self):
        return self.fractions()

    def __str__(self):
        return self.label()


ONE = ClassicalOctonion.basis_unit(0)
I_UNIT = ClassicalOctonion.basis_unit(1)
J_UNIT = ClassicalOctonion.basis_unit(2)
K_UNIT = ClassicalOctonion.basis_unit(3)
E_UNIT = ClassicalOctonion.basis_unit(4)
H_UNIT = ClassicalOctonion.from_fractions(
    [0, Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), 0, 0, 0])


def classical_mul(x, y):
    return x * y


def generate_unit_integrals():
    """Multiplicative closure of {+-1, +-i, +-j, h}; must come out at
    exactly 240 elements, all of norm one with integral norm and trace."""
    gens = [ONE, -ONE, I_UNIT, -I_UNIT, J_UNIT, -J_UNIT, H_UNIT]
    try:
        elements, _ = closure(gens, lambda a, b: a * b, ONE, cap=241,
                              sort_key=ClassicalOctonion.sort_key)
    except ClosureCapExceeded:
        raise AssertionError("closure of the unit integrals exceeded 240; "
                             "arithmetic bug")
    if len(elements) != 240:
        raise AssertionError("expected 240 unit integrals, found %d" % len(elements))
    for x in elements:
        if x.norm() != 1:
            raise AssertionError("element %s has norm %s" % (x, x.norm()))
        if x.trace().denominator != 1:
            raise AssertionError("element %s has non-integral trace" % (x,))
    return elements


def _sign_canonical(x):
    """The representative of {x, -x} whose first nonzero coordinate is
    positive."""
    for c in x.coords:
        if c.numerator > 0:
            return x
        if c.numerator < 0:
            return -x
    raise ValueError("zero octonion has no sign representative")


def quotient_mod_sign(elements=None):
    """The 120-element loop of +-classes of the unit integrals."""
    if elements is None:
        elements = generate_unit_integrals()
    reps = []
    seen = set()
    for x in elements:
        r = _sign_canonical(x)
        if r.coords not in seen:
            seen.add(r.coords)
            reps.append(r)
    reps.sort(key=ClassicalOctonion.sort_key)
    if len(reps) != 120:
        raise AssertionError("sign quotient has %d classes, expected 120" % len(reps))
    index = {r.coords: i for i, r in enumerate(reps)}

    def mult(i, j):
        return index[_sign_canonical(reps[i] * reps[j]).coords]

    import numpy as np
    table = np.empty((120, 120), dtype=np.int32)
    for i in range(120):
        for j in range(120):
            table[i, j] = mult(i, j)
    loop = FiniteLoop(120, labels=[r.label() for r in reps], table=table)
    loop.reps = reps
    return loop


def certify_paige2_iso(quotient=None):
    """Verified isomorphism of the sign quotient with M*(2), plus the check
    that the classes of i, j, h generate the quotient."""
    if quotient is None:
        quotient = quotient_mod_sign()
    from .loops import closure_indices
    gen_idx = []
    index = {r.coords: i for i, r in enumerate(quotient.reps)}
    for g in (I_UNIT, J_UNIT, H_UNIT):
        gen_idx.append(index[_sign_canonical(g).coords])
    sub = closure_indices(quotient, gen_idx)
    if len(sub) != quotient.n:
        raise AssertionError("i, j, h do not generate the sign quotient")
    target = paige.paige_loop(2)
    witness = find_isomorphism(quotient, target)
    if witness is None:
        raise AssertionError("no isomorphism with M*(2); build falsified")
    return witness
