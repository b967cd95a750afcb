"""Solubilizer sets and the identities that constrain them.

For x in a finite group G, the solubilizer of x is

    sol(G, x) = {g in G : the subgroup generated by x and g is soluble}.

This module computes that set by exhaustive scan (with a per-group memo of
two-generator solubility verdicts), aggregates per-element records, counts
conjugation orbits on the set two independent ways, and evaluates the exact
counting identities that a correct engine must satisfy: the weighted orbit
identity over a subgroup H between the centralizer and the cyclic
normalizer, its soluble-group corollary, the centralizer-index ratio whose
integrality the normalizer-divisibility conjecture predicts, and the
semiprime-solubilizer scan.  All arithmetic is exact; there is no floating
point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BurnsideNonIntegral,
    GroupSoluble,
    NormalizerIsWholeGroup,
    NotInGroup,
    NotInvariantSet,
    NotNormal,
    NotSoluble,
    SubgroupChainViolated,
)
from .group import (
    DEFAULT_CAP,
    ElementSet,
    PermGroup,
    StabilizerChain,
    _cyclic_tuples,
    _soluble_from_gens,
    centralizer,
    class_of_rep,
    conjugacy_class_reps,
    enumerate_elements,
    is_normal,
    is_soluble,
    is_subgroup_of,
    normalizer_of_cyclic,
    quotient_by_normal,
)
from .numtheory import factorize, is_prime
from .perm import Permutation, Tup, _conj, _identity, _inv, _mul, _order

__all__ = [
    "SolubilizerRecord",
    "FrobeniusFinding",
    "PqFinding",
    "sol_set",
    "sol_record",
    "soluble_radical",
    "orbit_count",
    "burnside_orbit_count",
    "n_value",
    "lemma32_check",
    "eq1_check",
    "theorem34_ratio",
    "frobenius_structure",
    "lemma_exp_bound",
    "quotient_sol_check",
    "pq_scan",
]


def _powers_set(G: PermGroup, t: Tup) -> frozenset:
    """Memoized element set of the cyclic group generated by t."""
    table = G._cache.setdefault("powers", {})
    s = table.get(t)
    if s is None:
        s = frozenset(_cyclic_tuples(t))
        table[t] = s
    return s


def _pair_soluble(G: PermGroup, a: Tup, b: Tup) -> bool:
    """Whether the subgroup of G generated by two elements is soluble.

    Verdicts are memoized per group, keyed by the unordered pair of image
    tuples.  Cheap sufficient conditions are tried before the derived-series
    test; each one is an exact implication, never a heuristic:
      - either element generates a subgroup containing the other: cyclic;
      - one element normalizes the cyclic group of the other: the pair group
        is cyclic-by-cyclic, hence soluble;
      - the pair generates all of G: answer is the solubility of G itself.
    """
    key = (a, b) if a <= b else (b, a)
    memo = G._cache.setdefault("pair_soluble", {})
    verdict = memo.get(key)
    if verdict is not None:
        return verdict
    idn = _identity(G.degree)
    if a == idn or b == idn:
        verdict = True
    elif _conj(a, b) in _powers_set(G, a) or _conj(b, a) in _powers_set(G, b):
        verdict = True
    else:
        chain = StabilizerChain(G.degree, [a, b])
        sub_order = chain.order()
        if sub_order == G.order():
            verdict = is_soluble(G)
        else:
            verdict = _soluble_from_gens(G.degree, [a, b], sub_order)
    memo[key] = verdict
    return verdict


def sol_set(G: PermGroup, x: Permutation, cap: int = DEFAULT_CAP) -> ElementSet:
    """All g in G such that the subgroup generated by x and g is soluble."""
    if x not in G:
        raise NotInGroup(f"{x!r} is not an element of {G!r}")
    elements = enumerate_elements(G, cap)
    if is_soluble(G):
        return elements
    xt = x._img
    if all(_mul(xt, g) == _mul(g, xt) for g in (h._img for h in G.generators)):
        # x is central, so every pair subgroup is abelian
        return elements
    return ElementSet(
        G.degree, (t for t in elements.raw() if _pair_soluble(G, xt, t))
    )


@dataclass(frozen=True)
class SolubilizerRecord:
    """Per-element summary joining the solubilizer with its acting subgroups.

    ell_cx and ell_nx are the conjugation-orbit counts of the centralizer
    and of the cyclic normalizer on the solubilizer.  ratio34 is the exact
    rational (|c_x| / |n_x|) * ell_cx; the divisibility conjecture predicts
    it is an integer.
    """

    x: Permutation
    sol: ElementSet
    sol_size: int
    n_x: PermGroup
    c_x: PermGroup
    ell_cx: int
    ell_nx: int
    conjecture_ok: bool
    ratio34: Fraction
    is_subgroup: bool
    equals_nx: bool


def _closed_under_product(degree: int, members: ElementSet) -> bool:
    """Closure test: the set is a subgroup iff it generates no new element."""
    chain = StabilizerChain(degree)
    for t in members.raw():
        chain.extend(t)
        if chain.order() > len(members):
            return False
    return chain.order() == len(members)


def sol_record(G: PermGroup, x: Permutation, cap: int = DEFAULT_CAP) -> SolubilizerRecord:
    """Compute the full solubilizer record for one element."""
    sol = sol_set(G, x, cap)
    n_x = normalizer_of_cyclic(G, x, cap)
    c_x = centralizer(G, x, cap)
    nx_order = n_x.order()
    cx_order = c_x.order()
    size = len(sol)
    ell_cx = orbit_count(c_x, sol)
    ell_nx = orbit_count(n_x, sol)
    record = SolubilizerRecord(
        x=x,
        sol=sol,
        sol_size=size,
        n_x=n_x,
        c_x=c_x,
        ell_cx=ell_cx,
        ell_nx=ell_nx,
        conjecture_ok=size % nx_order == 0,
        ratio34=Fraction(cx_order * ell_cx, nx_order),
        is_subgroup=_closed_under_product(G.degree, sol),
        equals_nx=size == nx_order,
    )
    # Facts that hold unconditionally; a violation is an engine bug.
    assert size % cx_order == 0, "centralizer order must divide the solubilizer size"
    assert x in sol and G.identity() in sol
    assert all(t in sol.raw_set() for t in enumerate_elements(n_x, cap).raw())
    return record


def soluble_radical(G: PermGroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """The subgroup generated by the elements whose solubilizer is all of G.

    Scans one representative per conjugacy class (the solubilizer of a
    conjugate is the conjugated solubilizer, so the property is
    class-constant) and collects whole classes.
    """
    whole = enumerate_elements(G, cap)
    member_tuples: list[Tup] = []
    for rep in conjugacy_class_reps(G, cap):
        if len(sol_set(G, rep, cap)) == len(whole):
            member_tuples.extend(class_of_rep(G, rep, cap).raw())
    radical = PermGroup.from_elements(G.degree, member_tuples or [_identity(G.degree)])
    assert is_normal(G, radical)
    assert is_soluble(radical)
    assert all(
        len(sol_set(G, Permutation._from_tuple(t), cap)) == len(whole)
        for t in member_tuples
    )
    return radical


def _check_invariant(H: PermGroup, Y: ElementSet) -> None:
    if H.degree != Y.degree:
        raise NotInvariantSet("acting group and set have different degrees")
    members = Y.raw_set()
    for h in H.generators:
        ht = h._img
        for y in members:
            if _conj(y, ht) not in members:
                raise NotInvariantSet(
                    "set is not closed under conjugation by the acting group"
                )


def orbit_count(H: PermGroup, Y: ElementSet) -> int:
    """Number of orbits of H acting on Y by conjugation (direct partition)."""
    _check_invariant(H, Y)
    gens = [h._img for h in H.generators]
    seen: set[Tup] = set()
    count = 0
    for start in Y.raw():
        if start in seen:
            continue
        count += 1
        frontier = [start]
        seen.add(start)
        while frontier:
            y = frontier.pop()
            for g in gens:
                z = _conj(y, g)
                if z not in seen:
                    seen.add(z)
                    frontier.append(z)
    return count


def burnside_orbit_count(H: PermGroup, Y: ElementSet, cap: int = DEFAULT_CAP) -> int:
    """Same count via the averaged fixed-point sum over all of H."""
    _check_invariant(H, Y)
    members = Y.raw()
    n = H.degree
    rng = range(n)
    total = 0
    for h in enumerate_elements(H, cap).raw():
        # y is fixed by conjugation with h iff y and h commute
        total += sum(
            1 for y in members if all(h[y[i]] == y[h[i]] for i in rng)
        )
    order = H.order()
    if total % order != 0:
        raise BurnsideNonIntegral(
            f"fixed-point sum {total} is not divisible by the group order {order}"
        )
    return total // order


def n_value(G: PermGroup, g: Permutation, x: Permutation, cap: int = DEFAULT_CAP) -> Fraction:
    """The reduced rational |sol restricted to C_G(g)| / |N_x meet C_G(g)|."""
    if x not in G:
        raise NotInGroup(f"{x!r} is not an element of {G!r}")
    xt = x._img
    n_x = normalizer_of_cyclic(G, x, cap)
    if g not in n_x:
        raise NotInGroup("the weighting element must normalize the cyclic group of x")
    cg = centralizer(G, g, cap)
    cg_elements = enumerate_elements(cg, cap).raw()
    numerator = sum(1 for t in cg_elements if _pair_soluble(G, xt, t))
    nx_members = enumerate_elements(n_x, cap).raw_set()
    denominator = sum(1 for t in cg_elements if t in nx_members)
    return Fraction(numerator, denominator)


def _chain_between(
    G: PermGroup, x: Permutation, H: PermGroup, cap: int
) -> tuple[ElementSet, PermGroup, PermGroup]:
    """Validate c_x <= H <= n_x and return (sol, c_x, n_x)."""
    sol = sol_set(G, x, cap)
    c_x = centralizer(G, x, cap)
    n_x = normalizer_of_cyclic(G, x, cap)
    if not is_subgroup_of(H, G):
        raise SubgroupChainViolated("H is not a subgroup of G")
    if not is_subgroup_of(c_x, H):
        raise SubgroupChainViolated("H does not contain the centralizer of x")
    if not is_subgroup_of(H, n_x):
        raise SubgroupChainViolated("H is not contained in the cyclic normalizer of x")
    return sol, c_x, n_x


def _nx_orbit_reps(n_x: PermGroup, H: PermGroup, cap: int) -> list[Permutation]:
    """Orbit representatives of n_x conjugating H minus the identity.

    H is normal in n_x (the quotient of n_x by the centralizer is abelian,
    and H sits between them), so the orbits partition H minus the identity.
    Each representative is the canonically least member of its orbit and the
    list is sorted, which keeps downstream sums deterministic.
    """
    gens = [h._img for h in n_x.generators]
    idn = _identity(H.degree)
    pending = set(enumerate_elements(H, cap).raw()) - {idn}
    reps: list[Tup] = []
    while pending:
        start = min(pending)
        orbit = {start}
        frontier = [start]
        while frontier:
            y = frontier.pop()
            for g in gens:
                z = _conj(y, g)
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        if not orbit <= pending:
            raise SubgroupChainViolated(
                "H is not invariant under conjugation by the cyclic normalizer"
            )
        reps.append(start)
        pending -= orbit
    return [Permutation._from_tuple(t) for t in reps]


def lemma32_check(G: PermGroup, x: Permutation, H: PermGroup, cap: int = DEFAULT_CAP) -> int:
    """Residual of the weighted orbit identity; zero on a correct engine.

    The identity:  |H| * (orbits of H on sol)  =  |sol| + |n_x| * S,
    where S sums the n_value weights over representatives of the n_x-orbits
    on H minus the identity.
    """
    sol, _c_x, n_x = _chain_between(G, x, H, cap)
    ell_h = orbit_count(H, sol)
    total = Fraction(0)
    for rep in _nx_orbit_reps(n_x, H, cap):
        total += n_value(G, rep, x, cap)
    weighted = n_x.order() * total
    if weighted.denominator != 1:
        raise BurnsideNonIntegral(
            f"weighted orbit sum {weighted} is not an integer"
        )
    return H.order() * ell_h - len(sol) - int(weighted)


def eq1_check(G: PermGroup, x: Permutation, H: PermGroup, cap: int = DEFAULT_CAP) -> int:
    """Residual of the soluble-group corollary of the orbit identity.

    For soluble G every solubilizer is the whole group and each n_value
    collapses to a centralizer index, giving

      orbits of H on G = [G : H] + [n_x : H] * sum [C_G(g_i) : n_x meet C_G(g_i)].
    """
    if not is_soluble(G):
        raise NotSoluble("the index form of the identity is asserted for soluble groups only")
    sol, _c_x, n_x = _chain_between(G, x, H, cap)
    ell_h = orbit_count(H, sol)
    nx_members = enumerate_elements(n_x, cap).raw_set()
    index_sum = 0
    for rep in _nx_orbit_reps(n_x, H, cap):
        cg = centralizer(G, rep, cap)
        cg_elements = enumerate_elements(cg, cap).raw()
        meet = sum(1 for t in cg_elements if t in nx_members)
        index, remainder = divmod(len(cg_elements), meet)
        assert remainder == 0, "intersection order must divide the centralizer order"
        index_sum += index
    h_order = H.order()
    return ell_h - G.order() // h_order - (n_x.order() // h_order) * index_sum


def theorem34_ratio(G: PermGroup, x: Permutation, cap: int = DEFAULT_CAP) -> Fraction:
    """The exact rational (|c_x| * ell_cx) / |n_x| for one element."""
    sol = sol_set(G, x, cap)
    c_x = centralizer(G, x, cap)
    n_x = normalizer_of_cyclic(G, x, cap)
    return Fraction(c_x.order() * orbit_count(c_x, sol), n_x.order())


@dataclass(frozen=True)
class FrobeniusFinding:
    """Whether the cyclic normalizer is Frobenius over the centralizer."""

    is_frobenius_over_cx: bool
    complement_order: int
    index_prime: bool
    kernel: PermGroup


def frobenius_structure(G: PermGroup, x: Permutation, cap: int = DEFAULT_CAP) -> FrobeniusFinding:
    """Detect a Frobenius normalizer: trivial centralizer action off the kernel.

    The finding is positive iff c_x is a proper normal subgroup of n_x and
    no element of c_x other than the identity commutes with any element of
    n_x outside c_x.
    """
    c_x = centralizer(G, x, cap)
    n_x = normalizer_of_cyclic(G, x, cap)
    cx_members = enumerate_elements(c_x, cap).raw_set()
    nx_members = enumerate_elements(n_x, cap).raw()
    index = n_x.order() // c_x.order()
    frobenius = index > 1 and is_normal(n_x, c_x)
    if frobenius:
        idn = _identity(G.degree)
        rng = range(G.degree)
        for h in nx_members:
            if h in cx_members:
                continue
            for c in cx_members:
                if c != idn and all(h[c[i]] == c[h[i]] for i in rng):
                    frobenius = False
                    break
            if not frobenius:
                break
    return FrobeniusFinding(
        is_frobenius_over_cx=frobenius,
        complement_order=index,
        index_prime=index > 1 and is_prime(index),
        kernel=c_x,
    )


def lemma_exp_bound(G: PermGroup, x: Permutation, cap: int = DEFAULT_CAP) -> tuple[int, bool]:
    """The dichotomy bound: sol equals n_x, or sol_size exceeds ell * |x|.

    ell is the least index [<x> : <x> meet <x^y>] over y outside n_x.
    """
    if x not in G:
        raise NotInGroup(f"{x!r} is not an element of {G!r}")
    n_x = normalizer_of_cyclic(G, x, cap)
    if n_x.order() == G.order():
        raise NormalizerIsWholeGroup(
            "every element normalizes the cyclic group of x; the bound is vacuous"
        )
    xt = x._img
    x_powers = _powers_set(G, xt)
    x_order = _order(xt)
    nx_members = enumerate_elements(n_x, cap).raw_set()
    ell = x_order
    for y in enumerate_elements(G, cap).raw():
        if y in nx_members:
            continue
        conj_powers = _powers_set(G, _conj(xt, y))
        meet = len(x_powers & conj_powers)
        ell = min(ell, x_order // meet)
    sol = sol_set(G, x, cap)
    n_x_set = ElementSet(G.degree, nx_members)
    ok = (sol == n_x_set) or (len(sol) > ell * x_order)
    return ell, ok


def quotient_sol_check(G: PermGroup, N: PermGroup, x: Permutation, cap: int = DEFAULT_CAP) -> bool:
    """Whether the solubilizer maps exactly onto the quotient's solubilizer.

    Requires N soluble and normal in G.  True iff the image of sol(G, x)
    under the quotient map equals sol(G/N, image of x) and |N| divides
    |sol(G, x)|.
    """
    if not is_normal(G, N):
        raise NotNormal("the subgroup is not normal in G")
    if not is_soluble(N):
        raise NotSoluble("the normal subgroup must be soluble")
    quotient, hom = quotient_by_normal(G, N)
    sol = sol_set(G, x, cap)
    image = ElementSet(quotient.degree, {hom._map(t) for t in sol.raw()})
    sol_in_quotient = sol_set(quotient, hom.apply(x), cap)
    return image == sol_in_quotient and len(sol) % N.order() == 0


@dataclass(frozen=True)
class PqFinding:
    """One semiprime-solubilizer instance found by pq_scan."""

    x: Permutation
    p: int
    q: int
    verdict: bool
    reasons: tuple[str, ...]


def pq_scan(G: PermGroup, cap: int = DEFAULT_CAP) -> list[PqFinding]:
    """Check every class representative whose solubilizer has order p*q.

    For an insoluble group, such an element must have order q > 3 with
    p dividing q - 1, p distinct from q, the solubilizer must be a subgroup
    equal to the cyclic normalizer, and its size must not be 6.  Returns one
    finding per semiprime instance; all verdicts are expected true.
    """
    if is_soluble(G):
        raise GroupSoluble("the semiprime analysis applies to insoluble groups only")
    findings: list[PqFinding] = []
    for x in conjugacy_class_reps(G, cap):
        if x.is_identity():
            continue
        record = sol_record(G, x, cap)
        fac = factorize(record.sol_size)
        if sum(fac.values()) != 2:
            continue
        primes = sorted(fac)
        p, q = (primes[0], primes[0]) if len(primes) == 1 else (primes[0], primes[1])
        reasons = []
        if x.order() != q:
            reasons.append(f"element order {x.order()} != larger prime {q}")
        if q <= 3:
            reasons.append(f"larger prime {q} is not > 3")
        if p == q:
            reasons.append(f"solubilizer size is the prime square {p * q}")
        elif (q - 1) % p != 0:
            reasons.append(f"{p} does not divide {q - 1}")
        if not record.is_subgroup:
            reasons.append("solubilizer is not a subgroup")
        if not record.equals_nx:
            reasons.append("solubilizer differs from the cyclic normalizer")
        if record.sol_size == 6:
            reasons.append("solubilizer size 6 is excluded")
        findings.append(PqFinding(x, p, q, not reasons, tuple(reasons)))
    return findings
