"""Finite fields GF(p^e) with integer-indexed elements.

Element i stands for the polynomial whose base-p digits are its
coefficients, constant term in the lowest digit.  Enumeration by index is
therefore the canonical element order used for projective point labels.
"""

from __future__ import annotations

from .errors import NotPrime

_Poly = tuple[int, ...]  # coefficients, ascending degree, no trailing zeros

_TABLE_LIMIT = 256  # precompute mul/inv tables below this field size


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _trim(coeffs: list[int]) -> _Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_from_int(i: int, p: int) -> _Poly:
    digits = []
    while i:
        i, r = divmod(i, p)
        digits.append(r)
    return tuple(digits)


def _poly_to_int(coeffs: _Poly, p: int) -> int:
    n = 0
    for c in reversed(coeffs):
        n = n * p + c
    return n


def _poly_mul(a: _Poly, b: _Poly, p: int) -> _Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def _poly_divmod(a: _Poly, b: _Poly, p: int) -> tuple[_Poly, _Poly]:
    """Quotient and remainder of a by b over GF(p); b must be nonzero."""
    rem = list(a)
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i]:
            f = rem[i] * lead_inv % p
            quot[i - db] = f
            for j, cb in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - f * cb) % p
    return _trim(quot), _trim(rem)


def _is_irreducible(f: _Poly, p: int) -> bool:
    """Trial division by all monic polynomials of degree up to deg(f)/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        # monic degree-d candidates, by ascending integer encoding
        for low in range(p ** d):
            g = _poly_from_int(low + p ** d, p)
            _, rem = _poly_divmod(f, g, p)
            if not rem:
                return False
    return True


def _poly_str(coeffs: _Poly) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}x" if i == 1 else f"{head}x^{i}")
    return "+".join(terms) if terms else "0"


class Field:
    """GF(p^e) with elements 0..q-1; read-only after construction."""

    __slots__ = ("p", "e", "q", "modulus", "_mul_table", "_inv_table")

    def __init__(self, p: int, e: int, modulus: _Poly):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        self._mul_table: list[int] | None = None
        self._inv_table: list[int] | None = None
        if self.q <= _TABLE_LIMIT and e > 1:
            self._build_tables()

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        shift = 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += (ra + rb) % p * shift
            shift *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        p = self.p
        out = 0
        shift = 1
        while a:
            a, r = divmod(a, p)
            out += -r % p * shift
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _poly_mul(_poly_from_int(a, self.p), _poly_from_int(b, self.p), self.p)
        _, rem = _poly_divmod(prod, self.modulus, self.p)
        return _poly_to_int(rem, self.p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def _build_tables(self) -> None:
        q = self.q
        table = [0] * (q * q)
        inv = [0] * q
        for a in range(q):
            row = a * q
            for b in range(a, q):
                v = self._mul_slow(a, b)
                table[row + b] = v
                table[b * q + a] = v
                if v == 1:
                    inv[a] = b
                    inv[b] = a
        self._mul_table = table
        self._inv_table = inv

    # -- structure -------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of element a, ascending degree, length e."""
        digits = list(_poly_from_int(a, self.p))
        digits += [0] * (self.e - len(digits))
        return tuple(digits)

    def modulus_str(self) -> str:
        return _poly_str(self.modulus)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.e == 1 else f"GF({self.q})[{self.modulus_str()}]"


def make_field(p: int, e: int = 1) -> Field:
    """GF(p^e) with the first irreducible monic modulus in element order.

    Candidates of degree e are scanned by ascending integer encoding of
    their coefficient vectors, so the choice is reproducible: p=2, e=3
    gives x^3+x+1, and p=3, e=2 gives x^2+1.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("exponent must be at least 1")
    if e == 1:
        return Field(p, 1, (0, 1))
    top = p ** e
    for low in range(top):
        candidate = _poly_from_int(low + top, p)
        if _is_irreducible(candidate, p):
            return Field(p, e, candidate)
    raise RuntimeError("unreachable: irreducibles of every degree exist")
