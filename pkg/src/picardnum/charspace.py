"""Character combinatorics of Fermat surfaces.

The primitive second cohomology of the degree-m Fermat surface splits into
one-dimensional eigenspaces indexed by triples (a1,a2,a3) of nonzero residues
mod m with nonzero sum.  Internally every character is stored as the 4-tuple
(a1,a2,a3,a0) with a0 = -(a1+a2+a3), each component by its canonical
representative in 1..m-1; the total then sums to m, 2m or 3m and the Hodge
weight is the coordinate-symmetric quantity sum/m - 1.

All functions below work on plain tuples for speed; `Character4` is the thin
validated wrapper used at API boundaries.  Orbits under the unit group
(Z/m)^x (coordinatewise multiplication) carry the Galois action, and
algebraicity of an orbit over C resp. over F_p-bar is a pure condition on the
weights of its members.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

MAX_MODULUS = 10**4  # |A_m| grows like m^3


class ModulusError(ValueError):
    pass


class BadReductionError(ValueError):
    """Raised when p divides m: the combinatorics needs good reduction."""


def _check_modulus(m):
    if not isinstance(m, int) or m < 2:
        raise ModulusError(f"modulus must be an integer >= 2, got {m!r}")
    if m > MAX_MODULUS:
        raise ModulusError(f"modulus {m} exceeds the supported bound {MAX_MODULUS}")


@dataclass(frozen=True)
class Character4:
    """A character of mu_m^3 in symmetric 4-tuple form."""

    m: int
    a: tuple

    def __post_init__(self):
        _check_modulus(self.m)
        if len(self.a) != 4:
            raise ValueError("character needs 4 components")
        if any(not 1 <= c <= self.m - 1 for c in self.a):
            raise ValueError(f"components of {self.a} not in 1..m-1")
        if sum(self.a) % self.m != 0:
            raise ValueError(f"components of {self.a} do not sum to 0 mod {self.m}")

    @classmethod
    def from_triple(cls, m, triple):
        """Build from the 3-tuple (a1,a2,a3); appends a0 = -sum."""
        a1, a2, a3 = (c % m for c in triple)
        a0 = (-(a1 + a2 + a3)) % m
        return cls(m, (a1, a2, a3, a0))

    def weight(self):
        return weight_tuple(self.a, self.m)


def from_triple(m, triple):
    """4-tuple form of a 3-tuple character; raises if any component dies."""
    a1, a2, a3 = (c % m for c in triple)
    a0 = (-(a1 + a2 + a3)) % m
    t = (a1, a2, a3, a0)
    if 0 in t:
        raise ValueError(f"{triple} mod {m} has a zero component or zero sum")
    return t


def weight_tuple(a, m):
    s = sum(a)
    if s % m != 0:
        raise ValueError("not a character tuple")
    return s // m - 1


def enumerate_characters(m):
    """All of A_m in 4-tuple form; |A_m| = (m-1)(m^2-3m+3)."""
    _check_modulus(m)
    out = []
    for a1 in range(1, m):
        for a2 in range(1, m):
            base = a1 + a2
            for a3 in range(1, m):
                a0 = (-(base + a3)) % m
                if a0:
                    out.append((a1, a2, a3, a0))
    return out


def units(m):
    return [t for t in range(1, m) if gcd(t, m) == 1]


def scale(a, t, m):
    return tuple((t * c) % m for c in a)


def galois_orbit(a, m):
    """Orbit of the 4-tuple under coordinatewise unit multiplication.

    Returns (representative, frozenset of members); the representative is the
    lexicographically smallest member, which makes enumeration deterministic.
    """
    members = {scale(a, t, m) for t in units(m)}
    return min(members), frozenset(members)


def orbit_algebraic_char0(orbit, m):
    """Algebraic over C iff every member has Hodge weight 1."""
    return all(weight_tuple(c, m) == 1 for c in orbit)


def orbit_algebraic_modp(orbit, m, p):
    """Algebraic over F_p-bar: weights average to 1 along p-power multiples.

    With o the order of p mod m the condition is sum_{j<o} |p^j c| = o for
    every member c of the orbit (the "for all t" of the average condition is
    read as ranging over the Galois conjugates).
    """
    if p % m == 0 or gcd(p, m) != 1:
        raise BadReductionError(f"p={p} shares a factor with m={m}")
    r = p % m
    o = 1
    rj = r
    while rj != 1:
        rj = rj * r % m
        o += 1
    for c in orbit:
        s = 0
        cur = c
        for _ in range(o):
            s += weight_tuple(cur, m)
            cur = scale(cur, r, m)
        if s != o:
            return False
    return True


def good_residues(orbit, m):
    """Residues r in (Z/m)^x whose primes make the orbit algebraic.

    For a fixed representative a the weights W(t) = |t.a| over the unit group
    determine everything: r is good iff every coset of <r> in (Z/m)^x has
    weight sum equal to ord(r).  This is the paper's H-set for the orbit.
    """
    rep = min(orbit)
    us = units(m)
    W = {t: weight_tuple(scale(rep, t, m), m) for t in us}
    good = set()
    for r in us:
        # cycle structure of multiplication by r on the unit group
        o = 1
        rj = r
        while rj != 1:
            rj = rj * r % m
            o += 1
        ok = True
        seen = set()
        for t in us:
            if t in seen:
                continue
            s = 0
            cur = t
            for _ in range(o):
                seen.add(cur)
                s += W[cur]
                cur = cur * r % m
            if s != o:
                ok = False
                break
        if ok:
            good.add(r)
    return good


def supersingular_witness(m, p):
    """Smallest nu with p^nu = -1 mod m, or None; implies rho = b2 mod p."""
    if gcd(p, m) != 1:
        raise BadReductionError(f"p={p} shares a factor with m={m}")
    if m <= 2:
        return None
    r = p % m
    nu = 1
    rj = r
    while True:
        if (rj + 1) % m == 0:
            return nu
        if rj == 1:
            return None
        rj = rj * r % m
        nu += 1


def b2_fermat(m):
    return m**3 - 4 * m**2 + 6 * m - 2


@dataclass(frozen=True)
class FermatInvariants:
    m: int
    b2: int
    lam: int
    rho: int
    pg: int
    field: str  # "char-zero" or "mod-p(<p>)"

    def __post_init__(self):
        assert self.b2 == self.lam + self.rho
        assert 1 <= self.rho <= self.b2


def orbit_partition(m):
    """Partition A_m into Galois orbits; list of frozensets."""
    _check_modulus(m)
    us = units(m)
    seen = set()
    orbits = []
    for a in enumerate_characters(m):
        if a in seen:
            continue
        orb = {scale(a, t, m) for t in us}
        seen |= orb
        orbits.append(frozenset(orb))
    return orbits


def fermat_invariants(m, field="char-zero", p=None):
    """Lefschetz/Picard split of b2 for the Fermat surface of degree m.

    field is "char-zero" or "mod-p"; for the latter p must be given and prime
    to m.  lam counts the characters in non-algebraic orbits, rho = b2 - lam,
    pg the weight-0 characters.
    """
    _check_modulus(m)
    if field == "mod-p":
        if p is None:
            raise ValueError("mod-p invariants need p")
        if gcd(p, m) != 1:
            raise BadReductionError(f"p={p} shares a factor with m={m}")
    chars = enumerate_characters(m)
    pg = sum(1 for a in chars if weight_tuple(a, m) == 0)
    lam = 0
    for orb in orbit_partition(m):
        if field == "char-zero":
            alg = orbit_algebraic_char0(orb, m)
        else:
            alg = orbit_algebraic_modp(orb, m, p)
        if not alg:
            lam += len(orb)
    b2 = b2_fermat(m)
    tag = "char-zero" if field == "char-zero" else f"mod-p({p})"
    return FermatInvariants(m=m, b2=b2, lam=lam, rho=b2 - lam, pg=pg, field=tag)
