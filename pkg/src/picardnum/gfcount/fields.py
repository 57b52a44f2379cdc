"""Exact arithmetic in F_{p^k} with reproducible construction.

Elements are packed integers: the field element sum c_i * t^i (c_i in 0..p-1,
t the class of x modulo the defining polynomial) is stored as sum c_i * p^i.
The defining polynomial is the lexicographically smallest monic irreducible
of degree k over F_p (coefficient tuple (a_{k-1},...,a_0) compared
lexicographically), and the multiplicative generator is the smallest packed
element of full order; both are recorded on the field object so every count
is reproducible.

For table fields (q <= 2^20) we build log/exp tables and a Zech logarithm
table z[e] = log(1 + g^e), which is what the counting kernels consume:
multiplication is index addition, addition is one Zech lookup.  Beyond the
table bound (only needed for F_{13^8}) `BigGF` provides vectorised
coefficient arithmetic on numpy arrays.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

TABLE_CAP = 1 << 20


def is_prime(n):
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % d == 0:
            return n == d
    d = 41
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mulmod(a, b, mod, p):
    """Product of coefficient lists mod (mod, p); mod is monic, ascending."""
    k = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, k - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(k):
                res[i - k + j] = (res[i - k + j] - c * mod[j]) % p
    res = res[:k]
    return res + [0] * (k - len(res))


def _poly_powmod(a, e, mod, p):
    k = len(mod) - 1
    res = [1] + [0] * (k - 1)
    base = a[:]
    while e:
        if e & 1:
            res = _poly_mulmod(res, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return res


def _is_irreducible(coeffs, p):
    """coeffs = ascending list of the monic poly (length k+1, last = 1)."""
    k = len(coeffs) - 1
    x = [0, 1] + [0] * (k - 2) if k >= 2 else [0, 1][: k + 1]
    x = ([0, 1] + [0] * max(0, k - 2))[:k]
    if k == 1:
        return True
    # x^(p^k) = x and gcd-free at proper divisors: use the Rabin test
    xp = x[:]
    for _ in range(k):
        xp = _poly_powmod(xp, p, coeffs, p)
    if xp != x:
        return False
    for r in _prime_divisors(k):
        xe = x[:]
        for _ in range(k // r):
            xe = _poly_powmod(xe, p, coeffs, p)
        # gcd(x^(p^(k/r)) - x, f) must be 1: enough that difference is a unit
        diff = [(a - b) % p for a, b in zip(xe, x)]
        if not _coprime_to_modulus(diff, coeffs, p):
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _coprime_to_modulus(a, mod, p):
    # gcd of a (ascending, len k) with the monic modulus, over F_p
    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    f = trim(list(mod))
    g = trim(list(a))
    while g:
        # f mod g
        f = f[:]
        inv = pow(g[-1], p - 2, p)
        while len(f) >= len(g):
            c = f[-1] * inv % p
            shift = len(f) - len(g)
            for i in range(len(g)):
                f[shift + i] = (f[shift + i] - c * g[i]) % p
            f = trim(f)
            if not f:
                break
        f, g = g, f
    return len(f) == 1  # gcd is a nonzero constant


@lru_cache(maxsize=None)
def min_irreducible(p, k):
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Returns the ascending coefficient tuple (a_0,...,a_{k-1},1); the order
    compares (a_{k-1},...,a_0).
    """
    if k == 1:
        return (0, 1)
    from itertools import product

    for high in product(range(p), repeat=k):
        # high = (a_{k-1}, ..., a_0)
        coeffs = list(reversed(high)) + [1]
        if coeffs[0] == 0:
            continue  # reducible: divisible by x
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError("no irreducible found (cannot happen)")


def _factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class GF:
    """Table-based F_{p^k}; packed-integer elements, log/exp/Zech tables."""

    def __init__(self, p, k):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        q = p**k
        if q > TABLE_CAP:
            raise ValueError(f"q={q} exceeds table bound; use BigGF")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = min_irreducible(p, k)
        self._mod_list = list(self.modulus)
        self.gen = self._find_generator()
        self._build_tables()

    # packed <-> coefficient vectors
    def unpack(self, a):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    def pack(self, coeffs):
        a = 0
        for c in reversed(coeffs[: self.k]):
            a = a * self.p + (c % self.p)
        return a

    def add(self, a, b):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul_slow(self, a, b):
        return self.pack(_poly_mulmod(self.unpack(a), self.unpack(b), self._mod_list, self.p))

    def _find_generator(self):
        q1 = self.q - 1
        prime_divs = list(_factor(q1))
        for g in range(2, self.q):
            if all(self._pow_slow(g, q1 // r) != 1 for r in prime_divs):
                return g
        raise RuntimeError("no generator found (cannot happen)")

    def _pow_slow(self, a, e):
        res = 1
        base = a
        while e:
            if e & 1:
                res = self.mul_slow(res, base)
            base = self.mul_slow(base, base)
            e >>= 1
        return res

    def _build_tables(self):
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        cur = 1
        for e in range(q - 1):
            exp[e] = cur
            log[cur] = e
            cur = self.mul_slow(cur, self.gen)
        if cur != 1:
            raise RuntimeError("generator order wrong")
        self.exp = exp
        self.log = log
        # zech[e] = log(1 + g^e); -1 marks 1 + g^e = 0
        zech = np.empty(q - 1, dtype=np.int64)
        for e in range(q - 1):
            s = self.add(1, int(exp[e]))
            zech[e] = log[s] if s else -1
        self.zech = zech
        # trace to F_p, indexed by log; trace of 0 is 0
        tr = np.empty(q - 1, dtype=np.int64)
        for e in range(q - 1):
            tr[e] = self._trace_packed(int(exp[e]))
        self.trace_log = tr

    def _trace_packed(self, a):
        acc = a
        cur = a
        for _ in range(self.k - 1):
            cur = self._pow_slow(cur, self.p)
            acc = self.add(acc, cur)
        # acc lies in the prime field
        v = self.unpack(acc)
        assert all(c == 0 for c in v[1:]), "trace left the prime field"
        return v[0]

    # convenience exact ops on packed ints (test/oracle scale)
    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(int(self.log[a]) + int(self.log[b])) % (self.q - 1)])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return int(self.exp[(-int(self.log[a])) % (self.q - 1)])

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError
            return 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def trace(self, a):
        if a == 0:
            return 0
        return int(self.trace_log[int(self.log[a])])

    def chi2(self, a):
        """Quadratic character; 0 on 0, +-1 otherwise (odd q only)."""
        if self.q % 2 == 0:
            raise ValueError("quadratic character needs odd q")
        if a == 0:
            return 0
        return 1 if int(self.log[a]) % 2 == 0 else -1

    def elements(self):
        return range(self.q)

    def embed_int(self, n):
        """Image of the integer n (prime-field element)."""
        return n % self.p

    def __repr__(self):
        return f"GF({self.p}^{self.k}; mod={self.modulus}, gen={self.gen})"


@lru_cache(maxsize=None)
def get_field(p, k):
    return GF(p, k)


class BigGF:
    """F_{p^k} beyond the table bound: numpy coefficient-vector arithmetic.

    Elements are int64 arrays of shape (..., k).  Uses the same deterministic
    modulus as GF.  Only what the twisted-count kernels need: batched mul,
    scalar ops, Frobenius, and powers.
    """

    def __init__(self, p, k):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = min_irreducible(p, k)
        # reduction matrix: row j = coefficient vector of x^(k+j) mod f, j = 0..k-2
        rows = []
        if k > 1:
            cur = [(-c) % p for c in self.modulus[:k]]  # x^k
            rows.append(cur[:])
            for _ in range(k - 2):
                over = cur[k - 1]
                cur = [0] + cur[: k - 1]
                if over:
                    cur = [(c + over * r) % p for c, r in zip(cur, rows[0])]
                rows.append(cur[:])
        self.red = np.array(rows, dtype=np.int64) if rows else np.zeros((0, k), dtype=np.int64)

    def zeros(self, shape):
        return np.zeros(tuple(shape) + (self.k,), dtype=np.int64)

    def from_int(self, n):
        v = np.zeros(self.k, dtype=np.int64)
        v[0] = n % self.p
        return v

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        """Batched product; a, b broadcastable (..., k) arrays."""
        p, k = self.p, self.k
        a = np.asarray(a)
        b = np.asarray(b)
        shape = np.broadcast_shapes(a.shape, b.shape)
        a = np.broadcast_to(a, shape)
        b = np.broadcast_to(b, shape)
        conv = np.zeros(shape[:-1] + (2 * k - 1,), dtype=np.int64)
        for i in range(k):
            conv[..., i : i + k] += a[..., i : i + 1] * b
            if (i + 1) % 4 == 0:
                conv %= p  # keep far from overflow
        conv %= p
        res = conv[..., :k].copy()
        high = conv[..., k:]
        if k > 1:
            res = (res + np.matmul(high, self.red)) % p
        return res

    def frob(self, a):
        """a^p, batched."""
        return self.pow_int(a, self.p)

    def pow_int(self, a, e):
        res = np.zeros_like(np.asarray(a))
        res[..., 0] = 1
        base = np.asarray(a)
        while e:
            if e & 1:
                res = self.mul(res, base)
            base = self.mul(base, base)
            e >>= 1
        return res

    def eq(self, a, b):
        return np.all(a == b, axis=-1)

    def is_zero(self, a):
        return np.all(a == 0, axis=-1)
