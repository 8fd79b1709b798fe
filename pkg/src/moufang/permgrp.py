"""Permutation groups on {0..n-1} with deterministic Schreier-Sims chains.

Maps act on the right and compose left to right: (p * q)(i) = q(p(i)).
A PermGroup keeps its generators and builds a base/strong-generating-set
stabilizer chain on first use; orders and membership tests are exact, never
probabilistic.  The chain construction processes every Schreier generator
and the verification pass re-sifts all of them, so a completed chain is a
certificate, not a heuristic.
"""

from __future__ import annotations

import numpy as np


class Perm:
    """A permutation stored as its image array."""

    __slots__ = ("a", "_hash")

    def __init__(self, images, _checked=False):
        a = np.asarray(images, dtype=np.int32)
        if not _checked:
            n = len(a)
            if n and (np.bincount(a, minlength=n).max(initial=1) != 1 or a.min(initial=0) < 0
                      or a.max(initial=-1) >= n):
                raise ValueError("not a permutation of 0..%d" % (n - 1,))
        self.a = a
        self._hash = None

    @classmethod
    def identity(cls, n):
        return cls(np.arange(n, dtype=np.int32), _checked=True)

    @classmethod
    def from_cycles(cls, n, cycles):
        a = np.arange(n, dtype=np.int32)
        for cyc in cycles:
            for i, j in zip(cyc, cyc[1:]):
                a[i] = j
            if cyc:
                a[cyc[-1]] = cyc[0]
        return cls(a)

    @property
    def degree(self):
        return len(self.a)

    def __call__(self, i):
        return int(self.a[i])

    def __mul__(self, other):
        # apply self first, then other
        return Perm(other.a[self.a], _checked=True)

    def inverse(self):
        inv = np.empty_like(self.a)
        inv[self.a] = np.arange(len(self.a), dtype=np.int32)
        return Perm(inv, _checked=True)

    def conjugate_by(self, g):
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r = Perm.identity(self.degree)
        base = self
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    def is_identity(self):
        return bool((self.a == np.arange(len(self.a), dtype=np.int32)).all())

    def order(self):
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def __eq__(self, other):
        return isinstance(other, Perm) and np.array_equal(self.a, other.a)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.a.tobytes())
        return self._hash

    def text(self):
        return "%d: %s" % (self.degree, " ".join(str(int(i)) for i in self.a))

    @classmethod
    def parse(cls, s):
        head, _, body = s.partition(":")
        images = [int(t) for t in body.split()]
        if int(head) != len(images):
            raise ValueError("degree mismatch in %r" % (s,))
        return cls(images)

    def __repr__(self):
        return "Perm(%s)" % (list(map(int, self.a)),)


class _Level:
    __slots__ = ("base", "gens", "orbit_u", "orbit_uinv", "orbit_list",
                 "stale", "processed")

    def __init__(self, base):
        self.base = base
        self.gens = []          # strong generators introduced at this level
        self.orbit_u = {}       # point -> transversal perm u, u(base) = point
        self.orbit_uinv = {}
        self.orbit_list = []
        self.stale = True
        self.processed = set()  # (point, gen id) pairs already handled


class IncompleteChainError(RuntimeError):
    pass


class PermGroup:
    """Group generated by a list of permutations of one degree."""

    def __init__(self, degree, generators, build=False):
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree %d != group degree %d"
                                 % (g.degree, degree))
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.degree = degree
        self.gens = gens
        self._levels = None
        if build:
            self._chain()

    # -- stabilizer chain ---------------------------------------------------

    def _strong_gens(self, level):
        out = []
        for lv in self._levels[level:]:
            out.extend(lv.gens)
        return out

    def _recompute_orbit(self, idx):
        lv = self._levels[idx]
        gens = self._strong_gens(idx)
        ident = Perm.identity(self.degree)
        lv.orbit_u = {lv.base: ident}
        lv.orbit_uinv = {lv.base: ident}
        lv.orbit_list = [lv.base]
        head = 0
        while head < len(lv.orbit_list):
            x = lv.orbit_list[head]
            head += 1
            ux = lv.orbit_u[x]
            for s in gens:
                y = int(s.a[x])
                if y not in lv.orbit_u:
                    uy = ux * s
                    lv.orbit_u[y] = uy
                    lv.orbit_uinv[y] = uy.inverse()
                    lv.orbit_list.append(y)
        lv.stale = False

    def _sift(self, p, start=0):
        """Reduce p through the chain; returns (residue, level reached)."""
        for idx in range(start, len(self._levels)):
            lv = self._levels[idx]
            t = int(p.a[lv.base])
            if t not in lv.orbit_u:
                return p, idx
            if t != lv.base:
                p = p * lv.orbit_uinv[t]
        return p, len(self._levels)

    def _insert(self, h, idx):
        if idx == len(self._levels):
            base = int(np.nonzero(h.a != np.arange(self.degree, dtype=np.int32))[0][0])
            self._levels.append(_Level(base))
        self._levels[idx].gens.append(h)
        for lv in self._levels[: idx + 1]:
            lv.stale = True

    def _chain(self):
        if self._levels is not None:
            return self._levels
        self._levels = []
        for g in self.gens:
            r, idx = self._sift(g)
            if not r.is_identity():
                self._insert(r, idx)
        ptr = len(self._levels) - 1
        while ptr >= 0:
            lv = self._levels[ptr]
            if lv.stale:
                self._recompute_orbit(ptr)
            gens = self._strong_gens(ptr)
            gen_ids = [id(s) for s in gens]
            descended = False
            for t in list(lv.orbit_list):
                ut = lv.orbit_u[t]
                for s, sid in zip(gens, gen_ids):
                    key = (t, sid)
                    if key in lv.processed:
                        continue
                    lv.processed.add(key)
                    y = int(s.a[t])
                    schreier = ut * s * lv.orbit_uinv[y]
                    if schreier.is_identity():
                        continue
                    r, idx = self._sift(schreier, ptr + 1)
                    if not r.is_identity():
                        self._insert(r, idx)
                        ptr = idx
                        descended = True
                        break
                if descended:
                    break
            if descended:
                continue
            ptr -= 1
        self._verify()
        return self._levels

    def _verify(self):
        """Re-sift every Schreier generator and every input generator."""
        for g in self.gens:
            r, _ = self._sift(g)
            if not r.is_identity():
                raise IncompleteChainError("input generator fails to sift")
        for idx in range(len(self._levels)):
            lv = self._levels[idx]
            if lv.stale:
                self._recompute_orbit(idx)
            for s in self._strong_gens(idx):
                for t in lv.orbit_list:
                    schreier = lv.orbit_u[t] * s * lv.orbit_uinv[int(s.a[t])]
                    r, _ = self._sift(schreier, idx + 1)
                    if not r.is_identity():
                        raise IncompleteChainError("Schreier generator fails to sift")

    # -- queries --------------------------------------------------------------

    def order(self):
        levels = self._chain()
        n = 1
        for lv in levels:
            n *= len(lv.orbit_list)
        return n

    def contains(self, p):
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        self._chain()
        r, _ = self._sift(p)
        return r.is_identity()

    def is_subgroup(self, other):
        """Whether other <= self."""
        return all(self.contains(g) for g in other.gens)

    def base(self):
        return [lv.base for lv in self._chain()]

    def random_element(self, rng, word_length=20):
        """Product of uniformly chosen generators/inverses; deterministic
        for a seeded rng.  Used for sampling checks, never for orders."""
        if not self.gens:
            return Perm.identity(self.degree)
        p = Perm.identity(self.degree)
        for _ in range(word_length):
            g = self.gens[int(rng.integers(len(self.gens)))]
            if int(rng.integers(2)):
                g = g.inverse()
            p = p * g
        return p

    def elements(self, limit=200000):
        """Every group element by breadth-first closure; exact but only
        sensible for small groups."""
        ident = Perm.identity(self.degree)
        seen = {ident: None}
        out = [ident]
        head = 0
        while head < len(out):
            p = out[head]
            head += 1
            for g in self.gens:
                q = p * g
                if q not in seen:
                    if len(out) >= limit:
                        raise ValueError("group exceeds enumeration limit %d" % limit)
                    seen[q] = None
                    out.append(q)
        return out

    def __repr__(self):
        return "PermGroup(degree=%d, gens=%d)" % (self.degree, len(self.gens))


def schreier_sims(generators):
    """Stabilizer chain for the group generated by the given permutations."""
    if not generators:
        raise ValueError("need at least the degree; pass [Perm.identity(n)]")
    degree = generators[0].degree
    grp = PermGroup(degree, generators)
    grp._chain()
    return grp


def group_order(generators):
    return schreier_sims(list(generators)).order()


def homomorphism_kernel(group, images, verify=None):
    """Kernel of the homomorphism sending group.gens[i] -> images[i].

    The images live in a small symmetric group (degree 3 for line-class
    actions).  Kernel generators come from the Schreier construction on the
    coset action of the image group on itself.

    verify=None checks the assignment exactly (order of the diagonal
    embedding) when the degree is small enough for a second chain;
    verify=True forces the check, verify=False skips it for callers whose
    assignment is a genuine action read off the geometry.
    """
    gens = group.gens
    if len(images) != len(gens):
        raise ValueError("need one image per generator")
    if verify is None:
        verify = group.degree <= 2048
    if verify and gens:
        n, m = group.degree, images[0].degree
        combined = []
        for g, h in zip(gens, images):
            arr = np.concatenate([g.a, h.a + n])
            combined.append(Perm(arr, _checked=True))
        diag = PermGroup(n + m, combined)
        if diag.order() != group.order():
            raise ValueError("generator images do not define a homomorphism")

    ident_g = Perm.identity(group.degree)
    if not gens:
        return PermGroup(group.degree, [])
    ident_h = Perm.identity(images[0].degree)

    # BFS over the image subgroup; transversal element t_h satisfies img(t_h) = h
    transversal = {ident_h: ident_g}
    queue = [ident_h]
    head = 0
    while head < len(queue):
        h = queue[head]
        head += 1
        for g, img in zip(gens, images):
            h2 = h * img
            if h2 not in transversal:
                transversal[h2] = transversal[h] * g
                queue.append(h2)

    kernel_gens = []
    seen = set()
    for h in queue:
        t = transversal[h]
        for g, img in zip(gens, images):
            k = t * g * transversal[h * img].inverse()
            if not k.is_identity() and k not in seen:
                seen.add(k)
                kernel_gens.append(k)
    return PermGroup(group.degree, kernel_gens)
