"""Delsarte surface analysis via the covering Fermat surface.

A four-monomial surface in P^3 is encoded by its 4x4 exponent matrix (rows =
monomials, columns = coordinates x,y,z,w).  The surface is a birational
quotient of a Fermat surface S_m; its transcendental part is cut out by the
characters mod m that annihilate the exponent matrix.  Everything here is
integer linear algebra plus the weight combinatorics from `charspace`.

The covering degree is |det A|/d reduced by the content of the invariant
character kernel, which reproduces every degree quoted in the source data
(55, 64, 52, 35, 34, 45, 60, 36, 22, 20, 24, 20, 15).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from math import gcd

from . import charspace
from .snf import kernel_mod


class DegenerateSurfaceError(ValueError):
    pass


def _det4(rows):
    # fraction-free expansion is overkill at this size
    def det(m):
        if len(m) == 1:
            return m[0][0]
        s = 0
        for j in range(len(m)):
            if m[0][j]:
                minor = [r[:j] + r[j + 1 :] for r in m[1:]]
                s += (-1) ** j * m[0][j] * det(minor)
        return s

    return det([list(r) for r in rows])


@dataclass(frozen=True)
class ExponentMatrix:
    d: int
    rows: tuple  # 4 exponent 4-tuples, one per monomial

    def __post_init__(self):
        if len(self.rows) != 4 or any(len(r) != 4 for r in self.rows):
            raise ValueError("need a 4x4 exponent matrix")
        if any(e < 0 for r in self.rows for e in r):
            raise ValueError("exponents must be nonnegative")
        for r in self.rows:
            if sum(r) != self.d:
                raise ValueError(f"row {r} does not sum to the degree {self.d}")
        if any(min(row[j] for row in self.rows) > 0 for j in range(4)):
            raise ValueError("common monomial factor: some coordinate divides every monomial")
        det = _det4(self.rows)
        if det == 0:
            raise DegenerateSurfaceError("exponent matrix is singular")
        if det % self.d:
            raise ValueError("degree does not divide the determinant")

    @classmethod
    def from_monomials(cls, rows):
        rows = tuple(tuple(r) for r in rows)
        return cls(d=sum(rows[0]), rows=rows)

    def det(self):
        return _det4(self.rows)


def _raw_kernel(E, m):
    """Solutions c of c.A = 0 and sum(c) = 0 mod m (components unrestricted)."""
    # c.A = 0  <=>  (A^T | column of ones stacked) acting on c
    AT = [[E.rows[i][j] for i in range(4)] for j in range(4)]
    B = AT + [[1, 1, 1, 1]]
    return kernel_mod(B, m)


def fermat_cover_degree(E):
    """Covering Fermat degree m (content-reduced) plus the raw |det|/d."""
    m0 = abs(E.det()) // E.d
    if m0 < 2:
        raise DegenerateSurfaceError("covering degree collapses")
    ker = _raw_kernel(E, m0)
    s = m0
    for c in ker:
        for comp in c:
            s = gcd(s, comp)
        if s == 1:
            break
    s = max(s, 1)
    m = m0 // s
    if m < 2:
        # fully algebraic cover; keep the raw degree to stay in range
        m = m0
        s = 1
    return m, m0


def invariant_characters(E):
    """G-invariant characters of the covering Fermat surface.

    Returns (m, set of 4-tuples mod m): the kernel elements of c.A = 0,
    sum(c) = 0 with every component nonzero, indexed against the monomial
    order of the exponent rows.
    """
    m, m0 = fermat_cover_degree(E)
    s = m0 // m
    out = set()
    for c in _raw_kernel(E, m0):
        cc = tuple((comp // s) % m for comp in c)
        if all(comp % s == 0 for comp in c) and 0 not in cc:
            out.add(cc)
    return m, out


@dataclass(frozen=True)
class DelsarteInvariants:
    m: int
    b2: int
    pg: int
    lam: int
    rho: int
    field: str
    rdp_flag: bool


def b2_for_degree(d):
    return d**3 - 4 * d**2 + 6 * d - 2


def _invariant_orbits(E):
    m, inv = invariant_characters(E)
    seen = set()
    orbits = []
    for c in sorted(inv):
        if c in seen:
            continue
        rep, orb = charspace.galois_orbit(c, m)
        seen |= orb
        orbits.append(orb)
    return m, inv, orbits


def surface_invariants(E, field="char-zero", p=None):
    m, inv, orbits = _invariant_orbits(E)
    if field == "mod-p":
        if p is None:
            raise ValueError("mod-p invariants need p")
        if gcd(p, m) != 1:
            raise charspace.BadReductionError(f"p={p} shares a factor with m={m}")
    lam = 0
    for orb in orbits:
        if field == "char-zero":
            alg = charspace.orbit_algebraic_char0(orb, m)
        else:
            alg = charspace.orbit_algebraic_modp(orb, m, p)
        if not alg:
            lam += len(orb)
    pg = sum(1 for c in inv if charspace.weight_tuple(c, m) == 0)
    b2 = b2_for_degree(E.d)
    tag = "char-zero" if field == "char-zero" else f"mod-p({p})"
    return DelsarteInvariants(
        m=m, b2=b2, pg=pg, lam=lam, rho=b2 - lam, field=tag, rdp_flag=(E.d == 5 and pg == 4)
    )


def picard_profile(E):
    """Map residue class r in (Z/m)^x -> Picard number of reductions p = r mod m."""
    m, inv, orbits = _invariant_orbits(E)
    b2 = b2_for_degree(E.d)
    lam_at = {r: 0 for r in charspace.units(m)}
    for orb in orbits:
        good = charspace.good_residues(orb, m)
        for r in lam_at:
            if r not in good:
                lam_at[r] += len(orb)
    return {r: b2 - lam_at[r] for r in sorted(lam_at)}


# ---------------------------------------------------------------------------
# census of quintic Delsarte surfaces


def degree5_monomials():
    out = []
    for a in range(6):
        for b in range(6 - a):
            for c in range(6 - a - b):
                out.append((a, b, c, 5 - a - b - c))
    return out


def canonical_key(rows):
    """Minimal row-sorted matrix over the 24 coordinate permutations."""
    best = None
    for perm in permutations(range(4)):
        cand = tuple(sorted(tuple(r[j] for j in perm) for r in rows))
        if best is None or cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class CensusRecord:
    rows: tuple
    d: int
    m: int
    pg: int
    lam: int
    rho: int
    profile: tuple  # sorted ((residue, rho), ...) pairs

    def json_line(self):
        return json.dumps(
            {
                "matrix": [list(r) for r in self.rows],
                "d": self.d,
                "m": self.m,
                "pg": self.pg,
                "lambda": self.lam,
                "rho": self.rho,
                "profile": {str(r): v for r, v in self.profile},
            },
            sort_keys=True,
        )


def _census_keys():
    mons = degree5_monomials()
    keys = set()
    for combo in combinations(mons, 4):
        if any(min(row[j] for row in combo) > 0 for j in range(4)):
            continue
        if _det4(combo) == 0:
            continue
        keys.add(canonical_key(combo))
    return sorted(keys)


def census_quintics(with_profiles=False, progress=None):
    """All quintic 4-nomial surfaces with pg = 4, up to coordinate permutation.

    Returns (records, attained) where attained is the sorted set of complex
    Picard numbers.  The pg = 4 gate is the isolated-rational-double-point
    criterion; any mismatch with the expected attained set is the caller's
    hard failure to raise.
    """
    records = []
    attained = set()
    keys = _census_keys()
    for idx, key in enumerate(keys):
        if progress and idx % 2000 == 0:
            progress(idx, len(keys))
        E = ExponentMatrix.from_monomials(key)
        try:
            inv = surface_invariants(E)
        except DegenerateSurfaceError:
            # |det| = d: degree-1 cover, the surface is rational (pg = 0)
            continue
        if inv.pg != 4:
            continue
        profile = ()
        if with_profiles:
            profile = tuple(sorted(picard_profile(E).items()))
        records.append(
            CensusRecord(
                rows=key, d=5, m=inv.m, pg=inv.pg, lam=inv.lam, rho=inv.rho, profile=profile
            )
        )
        attained.add(inv.rho)
    return records, sorted(attained)


EXPECTED_ATTAINED = tuple(r for r in range(1, 46, 2) if r not in (3, 7, 9, 11, 15))
