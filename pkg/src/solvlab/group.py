"""Finite permutation groups with a base and strong generating set.

The engine keeps a deterministic stabilizer chain per group (classic
Schreier-Sims, no randomization), which gives membership tests and exact
orders without enumerating elements.  Element enumeration, centralizers,
normalizers and conjugacy classes are computed by exhaustive filtration at
desk scale; an explicit cap (default 20000) guards every enumeration.

Conventions: right action i^p, left-to-right products, conjugation
x^g = g^-1 x g.  Raw image tuples (0-based) are used in hot paths; public
boundaries speak Permutation objects and 1-based points.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .errors import (
    DegreeMismatch,
    DerivedDepthExceeded,
    NotInGroup,
    NotNormal,
    OrderExceedsCap,
)
from .perm import Permutation, Tup, _comm, _conj, _identity, _inv, _mul, _order

DEFAULT_CAP = 20000

_DERIVED_DEPTH_LIMIT = 64


class StabilizerChain:
    """Deterministic base/strong-generator structure for a permutation group.

    levels[i] holds the strong generators fixing bases[:i], the fundamental
    orbit of bases[i] under them, and transversal elements u with
    bases[i]^u = point (inverses cached for sifting).
    """

    __slots__ = ("degree", "bases", "gens", "orbits", "orbit_inv", "_order")

    def __init__(self, degree: int, gens: Iterable[Tup] = ()):
        self.degree = degree
        self.bases: list[int] = []
        self.gens: list[list[Tup]] = []
        self.orbits: list[dict[int, Tup]] = []
        self.orbit_inv: list[dict[int, Tup]] = []
        self._order: int | None = None
        idn = _identity(degree)
        inserted = False
        for g in gens:
            if g == idn:
                continue
            r = self._sift(g, 0)
            if r != idn:
                self._insert(r)
                inserted = True
        if inserted:
            self._verify_from(len(self.bases) - 1)

    def _sift(self, t: Tup, level: int) -> Tup:
        """Strip t through levels >= level; identity result means membership."""
        for i in range(level, len(self.bases)):
            beta = t[self.bases[i]]
            if beta == self.bases[i]:
                continue
            u_inv = self.orbit_inv[i].get(beta)
            if u_inv is None:
                return t
            t = _mul(t, u_inv)
        return t

    def _insert(self, t: Tup) -> int:
        """Record a new strong generator; returns the deepest level it joins."""
        m = 0
        for b in self.bases:
            if t[b] == b:
                m += 1
            else:
                break
        if m == len(self.bases):
            base = next(i for i, j in enumerate(t) if i != j)
            self.bases.append(base)
            self.gens.append([])
            self.orbits.append({})
            self.orbit_inv.append({})
        for j in range(m + 1):
            if t not in self.gens[j]:
                self.gens[j].append(t)
        self._order = None
        return m

    def _rebuild_orbit(self, i: int) -> dict[int, tuple[int, int]]:
        """BFS the fundamental orbit at level i; returns the tree edges."""
        base = self.bases[i]
        gens = self.gens[i]
        orbit = {base: _identity(self.degree)}
        inv = {base: _identity(self.degree)}
        edges: dict[int, tuple[int, int]] = {}
        queue = [base]
        for delta in queue:
            u = orbit[delta]
            for k, s in enumerate(gens):
                gamma = s[delta]
                if gamma not in orbit:
                    v = _mul(u, s)
                    orbit[gamma] = v
                    inv[gamma] = _inv(v)
                    edges[gamma] = (delta, k)
                    queue.append(gamma)
        self.orbits[i] = orbit
        self.orbit_inv[i] = inv
        return edges

    def _verify_level(self, i: int) -> Tup | None:
        """Sift all Schreier generators of level i; return a bad residual if any."""
        edges = self._rebuild_orbit(i)
        orbit = self.orbits[i]
        inv = self.orbit_inv[i]
        gens = self.gens[i]
        idn = _identity(self.degree)
        for delta in list(orbit):
            u = orbit[delta]
            for k, s in enumerate(gens):
                gamma = s[delta]
                if edges.get(gamma) == (delta, k):
                    continue
                sg = _mul(_mul(u, s), inv[gamma])
                if sg == idn:
                    continue
                r = self._sift(sg, i + 1)
                if r != idn:
                    return r
        return None

    def _verify_from(self, start: int) -> None:
        i = min(start, len(self.bases) - 1)
        while i >= 0:
            r = self._verify_level(i)
            if r is None:
                i -= 1
            else:
                i = self._insert(r)
        self._order = None

    def extend(self, t: Tup) -> bool:
        """Adjoin t to the generated group; True if the group grew."""
        idn = _identity(self.degree)
        if t == idn:
            return False
        r = self._sift(t, 0)
        if r == idn:
            return False
        m = self._insert(r)
        self._verify_from(m)
        return True

    def order(self) -> int:
        if self._order is None:
            out = 1
            for orb in self.orbits:
                out *= len(orb)
            self._order = out
        return self._order

    def contains(self, t: Tup) -> bool:
        if len(t) != self.degree:
            return False
        return self._sift(t, 0) == _identity(self.degree)


class ElementSet:
    """An immutable set of same-degree permutations with a stable sorted order."""

    __slots__ = ("degree", "_tuples", "_set")

    def __init__(self, degree: int, raw: Iterable[Tup]):
        self.degree = degree
        self._tuples: tuple[Tup, ...] = tuple(sorted(set(raw)))
        self._set = frozenset(self._tuples)

    @classmethod
    def from_permutations(cls, degree: int, perms: Iterable[Permutation]) -> "ElementSet":
        return cls(degree, (p._img for p in perms))

    def raw(self) -> tuple[Tup, ...]:
        """The member image tuples in canonical (lexicographic) order."""
        return self._tuples

    def raw_set(self) -> frozenset:
        return self._set

    def __len__(self) -> int:
        return len(self._tuples)

    def __iter__(self):
        for t in self._tuples:
            yield Permutation._from_tuple(t)

    def __contains__(self, item) -> bool:
        if isinstance(item, Permutation):
            return item._img in self._set
        return tuple(item) in self._set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ElementSet)
            and self.degree == other.degree
            and self._set == other._set
        )

    def __hash__(self) -> int:
        return hash((self.degree, self._set))

    def __repr__(self) -> str:
        return f"ElementSet(degree={self.degree}, size={len(self._tuples)})"


class PermGroup:
    """A permutation group given by generators, backed by a stabilizer chain.

    Instances are immutable after construction; the private cache only holds
    results of pure computations (element lists, class data, solubility).
    """

    __slots__ = ("degree", "generators", "_chain", "_cache")

    def __init__(self, degree: int, generators: Iterable[Permutation]):
        if degree < 1:
            raise DegreeMismatch("degree must be at least 1")
        gens = []
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}"
                )
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._chain = StabilizerChain(degree, [g._img for g in gens])
        self._cache: dict = {}

    @classmethod
    def _from_raw(cls, degree: int, raw_gens: list[Tup]) -> "PermGroup":
        return cls(degree, [Permutation._from_tuple(t) for t in raw_gens])

    @classmethod
    def from_elements(cls, degree: int, raw: Iterable[Tup]) -> "PermGroup":
        """Group generated by (and equal to) the given closed element set.

        Elements are scanned in canonical order and only chain-growing ones
        are kept as generators, so the generator list stays short.
        """
        members = sorted(set(raw))
        chain = StabilizerChain(degree)
        gens: list[Tup] = []
        idn = _identity(degree)
        for t in members:
            if t != idn and not chain.contains(t):
                chain.extend(t)
                gens.append(t)
        group = cls._from_raw(degree, gens)
        if group.order() != len(members):
            raise NotInGroup(
                "element collection is not closed under multiplication"
            )
        group._cache["elements"] = ElementSet(degree, members)
        return group

    def order(self) -> int:
        return self._chain.order()

    def __contains__(self, p: Permutation) -> bool:
        return p.degree == self.degree and self._chain.contains(p._img)

    def _contains_tuple(self, t: Tup) -> bool:
        return self._chain.contains(t)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()})"


class GroupHom:
    """A homomorphism between permutation groups given by an element map."""

    __slots__ = ("source", "target", "_map")

    def __init__(self, source: PermGroup, target: PermGroup, raw_map: Callable[[Tup], Tup]):
        self.source = source
        self.target = target
        self._map = raw_map

    def apply(self, p: Permutation) -> Permutation:
        if p not in self.source:
            raise NotInGroup("element outside the homomorphism's source group")
        return Permutation._from_tuple(self._map(p._img))

    def image_set(self, s: ElementSet) -> ElementSet:
        return ElementSet(self.target.degree, (self._map(t) for t in s.raw()))


def build_group(degree: int, generators: Iterable[Permutation]) -> PermGroup:
    """Construct a group (with its stabilizer chain) from generators."""
    return PermGroup(degree, generators)


def group_order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p: Permutation) -> bool:
    return p in G


def enumerate_elements(G: PermGroup, cap: int = DEFAULT_CAP) -> ElementSet:
    """All elements of G in canonical order; refuses when order() > cap."""
    order = G.order()
    if order > cap:
        raise OrderExceedsCap(order, cap)
    cached = G._cache.get("elements")
    if cached is not None:
        return cached
    idn = _identity(G.degree)
    gens = [g._img for g in G.generators]
    seen = {idn}
    queue = [idn]
    for t in queue:
        for s in gens:
            u = _mul(t, s)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) != order:
        raise NotInGroup("closure size disagrees with chain order (engine bug)")
    out = ElementSet(G.degree, seen)
    G._cache["elements"] = out
    return out


def generated_subgroup(G: PermGroup, elements: Iterable[Permutation]) -> PermGroup:
    """Subgroup of G generated by the given members."""
    elems = list(elements)
    for p in elems:
        if p not in G:
            raise NotInGroup(f"{p!r} is not a member of the ambient group")
    return PermGroup(G.degree, elems)


def normal_closure(G: PermGroup, seeds: Iterable[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing the seed elements."""
    seed_tuples = []
    for p in seeds:
        if p not in G:
            raise NotInGroup(f"{p!r} is not a member of the ambient group")
        seed_tuples.append(p._img)
    gens = [g._img for g in G.generators]
    closure_gens = _normal_closure_gens(G.degree, gens, seed_tuples)
    return PermGroup._from_raw(G.degree, closure_gens)


def _normal_closure_gens(degree: int, ambient_gens: list[Tup], seeds: list[Tup]) -> list[Tup]:
    """Generators of the normal closure of seeds under the ambient generators."""
    chain = StabilizerChain(degree)
    kept: list[Tup] = []
    for s in seeds:
        if chain.extend(s):
            kept.append(s)
    i = 0
    while i < len(kept):
        s = kept[i]
        i += 1
        for t in ambient_gens:
            c = _conj(s, t)
            if chain.extend(c):
                kept.append(c)
    return kept


def _derived_gens(degree: int, gens: list[Tup]) -> list[Tup]:
    """Generators of the derived subgroup of the group generated by gens."""
    idn = _identity(degree)
    comms = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            c = _comm(gens[i], gens[j])
            if c != idn and c not in comms:
                comms.append(c)
    return _normal_closure_gens(degree, gens, comms)


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Commutator subgroup: normal closure of generator commutators."""
    gens = [g._img for g in G.generators]
    return PermGroup._from_raw(G.degree, _derived_gens(G.degree, gens))


def derived_series(G: PermGroup) -> list[PermGroup]:
    """G >= G' >= G'' >= ... down to stabilization (trivial iff soluble)."""
    series = [G]
    for _ in range(_DERIVED_DEPTH_LIMIT):
        last = series[-1]
        if last.order() == 1:
            return series
        nxt = derived_subgroup(last)
        if nxt.order() == last.order():
            return series
        series.append(nxt)
    raise DerivedDepthExceeded("derived series did not stabilize in 64 steps")


def _soluble_from_gens(degree: int, gens: list[Tup], order: int) -> bool:
    """Derived-series solubility test on raw generators (order known)."""
    current_gens = [g for g in gens if g != _identity(degree)]
    current_order = order
    for _ in range(_DERIVED_DEPTH_LIMIT):
        if current_order == 1:
            return True
        nxt = _derived_gens(degree, current_gens)
        if not nxt:
            return True
        d_order = StabilizerChain(degree, nxt).order()
        if d_order == current_order:
            return False
        current_gens = nxt
        current_order = d_order
    raise DerivedDepthExceeded("derived series did not stabilize in 64 steps")


def is_soluble(G: PermGroup) -> bool:
    """True when the derived series of G reaches the trivial group."""
    cached = G._cache.get("soluble")
    if cached is None:
        cached = _soluble_from_gens(
            G.degree, [g._img for g in G.generators], G.order()
        )
        G._cache["soluble"] = cached
    return cached


def is_abelian(G: PermGroup) -> bool:
    cached = G._cache.get("abelian")
    if cached is None:
        gens = [g._img for g in G.generators]
        cached = all(
            _mul(a, b) == _mul(b, a)
            for i, a in enumerate(gens)
            for b in gens[i + 1 :]
        )
        G._cache["abelian"] = cached
    return cached


def centralizer(G: PermGroup, x: Permutation, cap: int = DEFAULT_CAP) -> PermGroup:
    """C_G(x), by exhaustive filtration of the element list."""
    if x not in G:
        raise NotInGroup("x is not a member of G")
    xt = x._img
    members = [
        t for t in enumerate_elements(G, cap).raw() if _mul(t, xt) == _mul(xt, t)
    ]
    return PermGroup.from_elements(G.degree, members)


def normalizer_of_cyclic(G: PermGroup, x: Permutation, cap: int = DEFAULT_CAP) -> PermGroup:
    """N_G(<x>), elements g with x^g a power of x, by exhaustive filtration."""
    if x not in G:
        raise NotInGroup("x is not a member of G")
    xt = x._img
    powers = set(_cyclic_tuples(xt))
    members = [
        t for t in enumerate_elements(G, cap).raw() if _conj(xt, t) in powers
    ]
    return PermGroup.from_elements(G.degree, members)


def _cyclic_tuples(x: Tup) -> list[Tup]:
    """All powers of x, identity included."""
    idn = _identity(len(x))
    out = [idn]
    t = x
    while t != idn:
        out.append(t)
        t = _mul(t, x)
    return out


def cyclic_subgroup(G: PermGroup, x: Permutation) -> PermGroup:
    """<x> as a subgroup of G."""
    if x not in G:
        raise NotInGroup("x is not a member of G")
    return PermGroup.from_elements(G.degree, _cyclic_tuples(x._img))


def conjugacy_class(G: PermGroup, x: Permutation) -> ElementSet:
    """The G-conjugacy class of x, grown by generator conjugation."""
    if x not in G:
        raise NotInGroup("x is not a member of G")
    gens = [g._img for g in G.generators]
    seen = {x._img}
    queue = [x._img]
    for t in queue:
        for g in gens:
            c = _conj(t, g)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return ElementSet(G.degree, seen)


def _class_partition(G: PermGroup, cap: int) -> tuple[list[Tup], dict[Tup, ElementSet]]:
    cached = G._cache.get("classes")
    if cached is not None:
        return cached
    elements = enumerate_elements(G, cap)
    gens = [g._img for g in G.generators]
    remaining = set(elements.raw())
    reps: list[Tup] = []
    classes: dict[Tup, ElementSet] = {}
    for t in elements.raw():
        if t not in remaining:
            continue
        seen = {t}
        queue = [t]
        for u in queue:
            for g in gens:
                c = _conj(u, g)
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
        # scanning in canonical order makes t the least member of its class
        reps.append(t)
        classes[t] = ElementSet(G.degree, seen)
        remaining -= seen
    reps.sort(key=lambda t: (_order(t), t))
    out = (reps, classes)
    G._cache["classes"] = out
    return out


def conjugacy_class_reps(G: PermGroup, cap: int = DEFAULT_CAP) -> list[Permutation]:
    """One representative per class: least member, sorted by order then encoding."""
    reps, _ = _class_partition(G, cap)
    return [Permutation._from_tuple(t) for t in reps]


def class_of_rep(G: PermGroup, x: Permutation, cap: int = DEFAULT_CAP) -> ElementSet:
    """Class lookup that reuses the cached partition when x is a stored rep."""
    _, classes = _class_partition(G, cap)
    found = classes.get(x._img)
    if found is not None:
        return found
    return conjugacy_class(G, x)


def first_element_of_order(G: PermGroup, k: int, cap: int = DEFAULT_CAP) -> Permutation | None:
    """The canonical first class representative of element order k, if any."""
    for rep in conjugacy_class_reps(G, cap):
        if rep.order() == k:
            return rep
    return None


def _member_set(G: PermGroup, cap: int = DEFAULT_CAP) -> frozenset:
    return enumerate_elements(G, cap).raw_set()


def is_subgroup_of(H: PermGroup, G: PermGroup) -> bool:
    """True when H is a subgroup of G: every generator of H lies in G."""
    if G.degree != H.degree:
        return False
    return all(g in G for g in H.generators)


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    """Whether H is normal in G (generator conjugation test)."""
    if not is_subgroup_of(H, G):
        raise NotInGroup("H is not a subgroup of G")
    for h in H.generators:
        ht = h._img
        for g in G.generators:
            if not H._contains_tuple(_conj(ht, g._img)):
                return False
    return True


def is_maximal(G: PermGroup, H: PermGroup, cap: int = DEFAULT_CAP) -> bool:
    """Whether a proper subgroup H is maximal: <H, g> = G for every g outside H.

    One witness per right coset of H suffices, since <H, g> = <H, hg>.
    """
    if not is_subgroup_of(H, G):
        raise NotInGroup("H is not a subgroup of G")
    n = G.order()
    h_order = H.order()
    if h_order == n:
        raise NotInGroup("H equals G; maximality is undefined")
    h_gens = [g._img for g in H.generators]
    h_members = _member_set(H, cap)
    covered = set(h_members)
    for t in enumerate_elements(G, cap).raw():
        if t in covered:
            continue
        grown = StabilizerChain(G.degree, h_gens + [t])
        if grown.order() != n:
            return False
        covered.update(_mul(h, t) for h in h_members)
    return True


def center(G: PermGroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """Z(G), elements commuting with every generator."""
    gens = [g._img for g in G.generators]
    members = [
        t
        for t in enumerate_elements(G, cap).raw()
        if all(_mul(t, g) == _mul(g, t) for g in gens)
    ]
    return PermGroup.from_elements(G.degree, members)


def quotient_by_normal(
    G: PermGroup, N: PermGroup, cap: int = DEFAULT_CAP
) -> tuple[PermGroup, GroupHom]:
    """The quotient G/N as the action on right cosets of N, with projection.

    The coset of the identity is point 1; remaining cosets are numbered by
    the canonical order of their least members.
    """
    if not is_normal(G, N):
        raise NotNormal("N is not normal in G")
    elements = enumerate_elements(G, cap)
    n_members = list(_member_set(N, cap))
    coset_of: dict[Tup, int] = {}
    reps: list[Tup] = []
    for t in elements.raw():
        if t in coset_of:
            continue
        idx = len(reps)
        reps.append(t)
        for n in n_members:
            coset_of[_mul(n, t)] = idx
    index = len(reps)

    def project(t: Tup) -> Tup:
        return tuple(coset_of[_mul(r, t)] for r in reps)

    quotient = PermGroup._from_raw(index, [project(g._img) for g in G.generators])
    if quotient.order() * N.order() != G.order():
        raise NotInGroup("coset action order mismatch (engine bug)")

    def raw_map(t: Tup) -> Tup:
        if not G._contains_tuple(t):
            raise NotInGroup("element outside the quotient's source group")
        return project(t)

    return quotient, GroupHom(G, quotient, raw_map)


def orbit_of_point(G: PermGroup, point: int) -> set[int]:
    """Orbit of a 1-based point under G."""
    if not 1 <= point <= G.degree:
        raise DegreeMismatch(f"point {point} outside 1..{G.degree}")
    gens = [g._img for g in G.generators]
    seen = {point - 1}
    queue = [point - 1]
    for p in queue:
        for g in gens:
            q = g[p]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return {p + 1 for p in seen}


def point_stabilizer(G: PermGroup, point: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """Stabilizer of a 1-based point, by filtration."""
    if not 1 <= point <= G.degree:
        raise DegreeMismatch(f"point {point} outside 1..{G.degree}")
    i = point - 1
    members = [t for t in enumerate_elements(G, cap).raw() if t[i] == i]
    return PermGroup.from_elements(G.degree, members)


def _abelian_invariants(G: PermGroup, cap: int) -> list[int]:
    """Invariant factors of an abelian group, largest first.

    For each prime p the counts #{x : x^(p^j) = 1} = p^(s_j) determine the
    partition shaping the p-primary component; aligned parts across primes
    multiply into the invariant factors.
    """
    from .numtheory import factorize

    n = G.order()
    if n == 1:
        return []
    orders = [_order(t) for t in enumerate_elements(G, cap).raw()]
    partitions: dict[int, list[int]] = {}
    for p in sorted(factorize(n)):
        s = [0]
        while True:
            pj = p ** len(s)
            count = sum(1 for o in orders if pj % o == 0)
            sj = 0
            while p**sj < count:
                sj += 1
            if p**sj != count:
                raise NotInGroup("abelian invariant computation out of step")
            if sj == s[-1]:
                break
            s.append(sj)
        counts_ge = [s[k] - s[k - 1] for k in range(1, len(s))]
        num_parts = counts_ge[0] if counts_ge else 0
        parts = [
            max(k for k in range(1, len(counts_ge) + 1) if counts_ge[k - 1] >= i)
            for i in range(1, num_parts + 1)
        ]
        partitions[p] = parts
    width = max(len(v) for v in partitions.values())
    factors = []
    for i in range(width):
        d = 1
        for p, parts in partitions.items():
            if i < len(parts):
                d *= p ** parts[i]
        factors.append(d)
    return factors


def structure_tag(G: PermGroup, cap: int = DEFAULT_CAP) -> str:
    """A short isomorphism-type label for small groups.

    Covers the shapes that occur as normalizers and solubilizers in this
    package: cyclic, abelian products, S_3, dihedral, metacyclic C_q:C_p,
    and A_5.  Anything else falls back to an order label.
    """
    from .numtheory import factorize

    n = G.order()
    if n == 1:
        return "1"
    if is_abelian(G):
        elements = enumerate_elements(G, cap)
        if max(_order(t) for t in elements.raw()) == n:
            return f"C_{n}"
        return "×".join(f"C_{d}" for d in _abelian_invariants(G, cap))
    if n == 6:
        return "S_3"
    if n % 2 == 0:
        half = n // 2
        rotation = next(
            (t for t in enumerate_elements(G, cap).raw() if _order(t) == half),
            None,
        )
        if rotation is not None:
            powers = set(_cyclic_tuples(rotation))
            rot_inv = _inv(rotation)
            for t in enumerate_elements(G, cap).raw():
                if t not in powers and _order(t) == 2 and _conj(rotation, t) == rot_inv:
                    return f"D_{n}"
    fac = sorted(factorize(n).items())
    if len(fac) == 2 and fac[0][1] == 1 and fac[1][1] == 1:
        p, q = fac[0][0], fac[1][0]
        return f"C_{q}:C_{p}"
    if n == 60 and derived_subgroup(G).order() == n:
        return "A_5"
    return f"G_{n}"
