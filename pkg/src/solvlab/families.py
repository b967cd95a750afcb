"""Builtin group families, the desk-scale catalog, and group files.

Families are specified by name and integer parameters and built as explicit
permutation groups:

    cyclic(n)            C_n on n points
    dihedral(n)          D_2n (order 2n) on n points, n >= 3
    symmetric(n)         S_n
    alternating(n)       A_n
    agl1(p)              C_p : C_{p-1}, affine maps t -> a t + b on GF(p)
    frobenius_pq(p, q)   C_q : C_p with p | q - 1, affine maps with a of order p
    sl2(q)               SL(2, q) on the q^2 - 1 nonzero row vectors
    psl2(q)              PSL(2, q) on the q + 1 projective-line points, q >= 4
    psl3_2               PSL(3, 2) on 7 points, shipped as fixed generators

Every constructor checks the closed-form order of the result, so a wrong
generating set cannot slip through silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cycles import format_cycles, parse_cycles
from .errors import CycleSyntaxError, FormatError, InvalidParameter
from .fields import GF
from .group import PermGroup, is_soluble
from .numtheory import is_prime, is_prime_power, least_primitive_root
from .perm import Permutation

_FAMILY_NAMES = (
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "agl1",
    "frobenius_pq",
    "sl2",
    "psl2",
    "psl3_2",
)

_PSL32_GENS = ("(1,3)(5,7)", "(1,2,4)(3,6,5)")


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters."""

    family: str
    params: tuple[int, ...] = ()

    def validate(self) -> None:
        f, ps = self.family, self.params
        if f not in _FAMILY_NAMES:
            raise InvalidParameter(f"unknown family {f!r}")
        counts = {"frobenius_pq": 2, "psl3_2": 0}
        expected = counts.get(f, 1)
        if len(ps) != expected:
            raise InvalidParameter(
                f"family {f} takes {expected} parameter(s), got {len(ps)}"
            )
        if f == "cyclic" and ps[0] < 1:
            raise InvalidParameter("cyclic requires n >= 1")
        if f == "dihedral" and ps[0] < 3:
            raise InvalidParameter("dihedral requires n >= 3 (order 2n)")
        if f == "symmetric" and ps[0] < 1:
            raise InvalidParameter("symmetric requires n >= 1")
        if f == "alternating" and ps[0] < 3:
            raise InvalidParameter("alternating requires n >= 3")
        if f == "agl1" and not is_prime(ps[0]):
            raise InvalidParameter("agl1 requires a prime p")
        if f == "frobenius_pq":
            p, q = ps
            if not (is_prime(p) and is_prime(q)):
                raise InvalidParameter("frobenius_pq requires primes p, q")
            if p >= q or (q - 1) % p != 0:
                raise InvalidParameter("frobenius_pq requires p < q and p | q-1")
        if f == "sl2" and is_prime_power(ps[0]) is None:
            raise InvalidParameter("sl2 requires a prime power q >= 2")
        if f == "psl2":
            if is_prime_power(ps[0]) is None or ps[0] < 4:
                raise InvalidParameter("psl2 requires a prime power q >= 4")

    def order(self) -> int:
        """Closed-form order of the family member (no construction needed)."""
        self.validate()
        f, ps = self.family, self.params
        if f == "cyclic":
            return ps[0]
        if f == "dihedral":
            return 2 * ps[0]
        if f == "symmetric":
            return math.factorial(ps[0])
        if f == "alternating":
            return math.factorial(ps[0]) // 2
        if f == "agl1":
            return ps[0] * (ps[0] - 1)
        if f == "frobenius_pq":
            return ps[0] * ps[1]
        if f == "sl2":
            q = ps[0]
            return q * (q * q - 1)
        if f == "psl2":
            q = ps[0]
            return q * (q * q - 1) // math.gcd(2, q - 1)
        return 168

    def name(self) -> str:
        f, ps = self.family, self.params
        if f == "cyclic":
            return f"C{ps[0]}"
        if f == "dihedral":
            return f"D{2 * ps[0]}"
        if f == "symmetric":
            return f"S{ps[0]}"
        if f == "alternating":
            return f"A{ps[0]}"
        if f == "agl1":
            return f"AGL1({ps[0]})"
        if f == "frobenius_pq":
            return f"C{ps[1]}:C{ps[0]}"
        if f == "sl2":
            return f"SL(2,{ps[0]})"
        if f == "psl2":
            return f"PSL(2,{ps[0]})"
        return "PSL(3,2)"


def _affine_group(modulus: int, multipliers: list[int]) -> PermGroup:
    """Maps t -> a t + b on GF(modulus); point i is the field element i - 1."""
    n = modulus
    shift = Permutation((i % n) + 1 for i in range(1, n + 1))
    gens = [shift]
    for a in multipliers:
        gens.append(Permutation((a * i) % n + 1 for i in range(n)))
    return PermGroup(n, gens)


def _psl2_group(q: int) -> PermGroup:
    """Projective-line action of SL(2, q); point 1 is [1:0], point c+2 is [c:1]."""
    p, n = is_prime_power(q)
    K = GF(p, n)
    one = 1
    mats = [((one, one), (0, one)), ((0, one), (K.neg(one), 0))]
    if n > 1:
        # p encodes the polynomial x, a field generator over the prime field
        mats.append(((one, p), (0, one)))
    if q > 3:
        g = K.multiplicative_generator()
        mats.append(((g, 0), (0, K.inv(g))))

    def point_of(x: int, y: int) -> int:
        if y == 0:
            return 1
        return K.mul(x, K.inv(y)) + 2

    def act(m) -> Permutation:
        (a, b), (c, d) = m
        images = [0] * (q + 1)
        images[0] = point_of(a, b)
        for t in range(q):
            images[t + 1] = point_of(
                K.add(K.mul(t, a), c), K.add(K.mul(t, b), d)
            )
        return Permutation(images)

    group = PermGroup(q + 1, [act(m) for m in mats])
    return group


def _sl2_group(q: int) -> PermGroup:
    """SL(2, q) acting on nonzero row vectors, labelled by ascending codes."""
    p, n = is_prime_power(q)
    K = GF(p, n)
    vectors = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]
    index = {v: i + 1 for i, v in enumerate(vectors)}
    one = 1
    mats = [((one, one), (0, one)), ((0, one), (K.neg(one), 0))]
    if n > 1:
        mats.append(((one, p), (0, one)))
    if q > 3:
        g = K.multiplicative_generator()
        mats.append(((g, 0), (0, K.inv(g))))

    def act(m) -> Permutation:
        (a, b), (c, d) = m
        images = [0] * len(vectors)
        for v, i in index.items():
            x, y = v
            w = (K.add(K.mul(x, a), K.mul(y, c)), K.add(K.mul(x, b), K.mul(y, d)))
            images[i - 1] = index[w]
        return Permutation(images)

    return PermGroup(len(vectors), [act(m) for m in mats])


def make_family(spec: FamilySpec) -> PermGroup:
    """Build the permutation group for a validated family spec."""
    spec.validate()
    f, ps = spec.family, spec.params
    if f == "cyclic":
        n = ps[0]
        gens = [] if n == 1 else [Permutation((i % n) + 1 for i in range(1, n + 1))]
        group = PermGroup(n, gens)
    elif f == "dihedral":
        n = ps[0]
        rot = Permutation((i % n) + 1 for i in range(1, n + 1))
        refl = Permutation(1 if i == 1 else n + 2 - i for i in range(1, n + 1))
        group = PermGroup(n, [rot, refl])
    elif f == "symmetric":
        n = ps[0]
        if n == 1:
            group = PermGroup(1, [])
        else:
            gens = [Permutation([2, 1] + list(range(3, n + 1)))]
            if n > 2:
                gens.append(Permutation((i % n) + 1 for i in range(1, n + 1)))
            group = PermGroup(n, gens)
    elif f == "alternating":
        n = ps[0]
        gens = [Permutation([2, 3, 1] + list(range(4, n + 1)))]
        if n > 3:
            if n % 2 == 1:
                gens.append(Permutation((i % n) + 1 for i in range(1, n + 1)))
            else:
                gens.append(Permutation([1] + list(range(3, n + 1)) + [2]))
        group = PermGroup(n, gens)
    elif f == "agl1":
        p = ps[0]
        mult = [] if p == 2 else [least_primitive_root(p)]
        group = _affine_group(p, mult)
    elif f == "frobenius_pq":
        p, q = ps
        a0 = pow(least_primitive_root(q), (q - 1) // p, q)
        group = _affine_group(q, [a0])
    elif f == "sl2":
        group = _sl2_group(ps[0])
    elif f == "psl2":
        group = _psl2_group(ps[0])
    else:
        group = PermGroup(7, [parse_cycles(s, 7) for s in _PSL32_GENS])
    expected = spec.order()
    if group.order() != expected:
        raise InvalidParameter(
            f"constructed order {group.order()} != expected {expected} for {spec}"
        )
    return group


@dataclass
class CatalogEntry:
    """A named group ready for verification sweeps."""

    name: str
    group: PermGroup
    soluble: bool
    source: FamilySpec | str

    @classmethod
    def from_spec(cls, spec: FamilySpec) -> "CatalogEntry":
        group = make_family(spec)
        return cls(spec.name(), group, is_soluble(group), spec)


def builtin_specs(max_order: int = 1200) -> list[FamilySpec]:
    """Specs of the builtin catalog with order <= max_order, construction-free.

    Orders are known in closed form, so out-of-range members are skipped
    without being constructed.
    """
    specs: list[FamilySpec] = []
    specs += [FamilySpec("cyclic", (n,)) for n in range(1, 21)]
    specs += [FamilySpec("dihedral", (n,)) for n in range(3, 21)]
    specs += [FamilySpec("symmetric", (n,)) for n in range(3, 8)]
    specs += [FamilySpec("alternating", (n,)) for n in range(4, 8)]
    specs += [FamilySpec("agl1", (p,)) for p in (3, 5, 7, 11, 13)]
    specs.append(FamilySpec("frobenius_pq", (11, 23)))
    specs.append(FamilySpec("sl2", (5,)))
    specs += [FamilySpec("psl2", (q,)) for q in (4, 5, 7, 8, 9, 11, 13)]
    specs.append(FamilySpec("psl3_2"))
    return [spec for spec in specs if spec.order() <= max_order]


def builtin_catalog(max_order: int = 1200) -> list[CatalogEntry]:
    """The deterministic builtin catalog, restricted to order <= max_order."""
    return [CatalogEntry.from_spec(spec) for spec in builtin_specs(max_order)]


def save_group_file(path, name: str, group: PermGroup) -> None:
    """Write a group file: name, degree, one gen line per generator."""
    lines = [f"name: {name}", f"degree: {group.degree}"]
    for g in group.generators:
        lines.append(f"gen: {format_cycles(g)}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def load_group_file(path) -> CatalogEntry:
    """Read a group file written by save_group_file (comments allowed)."""
    with open(path, "r", encoding="utf-8") as fh:
        raw_lines = fh.read().splitlines()
    fields: list[tuple[int, str, str]] = []
    for lineno, line in enumerate(raw_lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        key, sep, value = text.partition(":")
        if not sep:
            raise FormatError(f"expected 'key: value', got {text!r}", lineno)
        fields.append((lineno, key.strip(), value.strip()))
    if not fields or fields[0][1] != "name":
        raise FormatError("first entry must be 'name:'", fields[0][0] if fields else 1)
    if len(fields) < 2 or fields[1][1] != "degree":
        raise FormatError("second entry must be 'degree:'", fields[1][0] if len(fields) > 1 else 1)
    name = fields[0][2]
    if not name:
        raise FormatError("empty group name", fields[0][0])
    try:
        degree = int(fields[1][2])
    except ValueError:
        raise FormatError(f"degree is not an integer: {fields[1][2]!r}", fields[1][0])
    if degree < 1:
        raise FormatError("degree must be at least 1", fields[1][0])
    gens = []
    for lineno, key, value in fields[2:]:
        if key != "gen":
            raise FormatError(f"unexpected key {key!r}", lineno)
        try:
            gens.append(parse_cycles(value, degree))
        except CycleSyntaxError as exc:
            raise FormatError(f"bad generator: {exc}", lineno) from exc
    group = PermGroup(degree, gens)
    return CatalogEntry(name, group, is_soluble(group), str(path))
