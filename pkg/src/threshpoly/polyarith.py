"""Exact dense polynomial arithmetic over arbitrary-precision integers.

A polynomial is stored low degree first: ``IntPolynomial((c0, c1, c2))``
is c0 + c1*λ + c2*λ².  Canonical form keeps the highest stored
coefficient nonzero; the zero polynomial stores no coefficients at all
and has degree ``NEG_INF``.

Multiplication is exact along two routes that must agree bit for bit:
schoolbook convolution, and Kronecker substitution once both factors are
long enough.  Kronecker substitution evaluates each polynomial at 2**s,
multiplies the two resulting integers, and reads the product
coefficients back out of the base-2**s digits.  Signed coefficients are
handled by adding 2**(s-1) to every slot and subtracting the combined
offset exactly afterwards, so the byte buffers only ever hold
nonnegative slot values.

That single big-integer product is the hot spot.  It goes through gmpy2
(GMP) when installed, since GMP multiplies very large integers much
faster than CPython does.  The THRESH_BIGINT environment variable picks
the backend: ``auto`` (default: gmpy2 if importable), ``gmpy2``, or
``python``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

NEG_INF = float("-inf")

# poly_mul switches from schoolbook to Kronecker substitution once the
# shorter factor has at least this many coefficients
DEFAULT_KRONECKER_CUTOFF = 32

_mpz = None
_backend = "python"


def set_bigint_backend(name: str) -> str:
    """Pick the big-integer multiply used by Kronecker substitution.

    ``name`` is ``"python"``, ``"gmpy2"``, or ``"auto"`` (gmpy2 when
    importable, python otherwise).  Returns the backend selected.  Both
    backends produce identical results; only speed differs.
    """
    global _mpz, _backend
    choice = name.strip().lower()
    if choice == "auto":
        try:
            import gmpy2
        except ImportError:
            _mpz, _backend = None, "python"
        else:
            _mpz, _backend = gmpy2.mpz, "gmpy2"
    elif choice == "gmpy2":
        import gmpy2

        _mpz, _backend = gmpy2.mpz, "gmpy2"
    elif choice == "python":
        _mpz, _backend = None, "python"
    else:
        raise ValueError(f"unknown bigint backend {name!r} (use auto, gmpy2, or python)")
    return _backend


set_bigint_backend(os.environ.get("THRESH_BIGINT", "auto"))


def bigint_backend() -> str:
    """Name of the active big-integer backend: 'python' or 'gmpy2'."""
    return _backend


def _bigmul(x: int, y: int) -> int:
    if _mpz is None:
        return x * y
    return int(_mpz(x) * _mpz(y))


class IntPolynomial:
    """Dense polynomial with exact integer coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _from_ints(cls, cs: list) -> "IntPolynomial":
        # internal fast path: callers guarantee a list of plain ints
        while cs and cs[-1] == 0:
            cs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @property
    def degree(self):
        """Degree, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_sub(self, other)

    def __neg__(self):
        return IntPolynomial._from_ints([-c for c in self.coeffs])

    def __mul__(self, other):
        return poly_mul(self, other)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
LAMBDA = IntPolynomial((0, 1))


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact coefficientwise sum."""
    ca, cb = a.coeffs, b.coeffs
    if len(ca) < len(cb):
        ca, cb = cb, ca
    out = list(ca)
    for i, c in enumerate(cb):
        out[i] += c
    return IntPolynomial._from_ints(out)


def poly_sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact coefficientwise difference a - b."""
    ca, cb = a.coeffs, b.coeffs
    if len(ca) >= len(cb):
        out = list(ca)
        for i, c in enumerate(cb):
            out[i] -= c
    else:
        out = [-c for c in cb]
        for i, c in enumerate(ca):
            out[i] += c
    return IntPolynomial._from_ints(out)


def _mul_schoolbook(a: tuple, b: tuple) -> list:
    # outer loop over the shorter factor: the recurrences feed in
    # degree-1/degree-2 factors, so this makes at most three passes
    if len(a) > len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _max_bits(coeffs: tuple) -> int:
    return max(abs(c).bit_length() for c in coeffs)


def _repeated_offset(slot_bytes: bytes, count: int) -> int:
    return int.from_bytes(slot_bytes * count, "little")


def _pack(coeffs: tuple, width: int, half: int, slot_bytes: bytes) -> int:
    buf = bytearray(len(coeffs) * width)
    for i, c in enumerate(coeffs):
        buf[i * width : (i + 1) * width] = (c + half).to_bytes(width, "little")
    return int.from_bytes(buf, "little") - _repeated_offset(slot_bytes, len(coeffs))


def _mul_kronecker(a: tuple, b: tuple) -> list:
    # Slot width: every product coefficient satisfies
    #   |c_k| <= min(len(a), len(b)) * max|a_i| * max|b_j| < 2**(s-2),
    # so c_k plus the 2**(s-1) sign offset stays inside one slot.  The
    # width is rounded up to whole bytes to keep slots byte-aligned.
    s = _max_bits(a) + _max_bits(b) + (min(len(a), len(b)) - 1).bit_length() + 2
    s += -s % 8
    width = s // 8
    half = 1 << (s - 1)
    slot_bytes = half.to_bytes(width, "little")

    prod = _bigmul(
        _pack(a, width, half, slot_bytes),
        _pack(b, width, half, slot_bytes),
    )

    m = len(a) + len(b) - 1
    # shift every product slot up by `half`, making all digits
    # nonnegative, then read them off the byte representation
    shifted = prod + _repeated_offset(slot_bytes, m)
    data = shifted.to_bytes(m * width, "little")
    return [
        int.from_bytes(data[i * width : (i + 1) * width], "little") - half
        for i in range(m)
    ]


def poly_mul(a: IntPolynomial, b: IntPolynomial, cutoff: int | None = None) -> IntPolynomial:
    """Exact product: schoolbook below the length cutoff, Kronecker above.

    Both routes return identical coefficients for every cutoff setting;
    ``cutoff`` merely moves the crossover (default
    DEFAULT_KRONECKER_CUTOFF, compared against the shorter factor).
    """
    ca, cb = a.coeffs, b.coeffs
    if not ca or not cb:
        return ZERO
    limit = DEFAULT_KRONECKER_CUTOFF if cutoff is None else cutoff
    if min(len(ca), len(cb)) < limit:
        out = _mul_schoolbook(ca, cb)
    else:
        out = _mul_kronecker(ca, cb)
    return IntPolynomial._from_ints(out)


def poly_eval(p: IntPolynomial, x: int) -> int:
    """Exact Horner evaluation at the integer x."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def max_coeff_bits(p: IntPolynomial) -> int:
    """Largest bit length among the coefficients (0 for the zero polynomial)."""
    return _max_bits(p.coeffs) if p.coeffs else 0


def to_decimal_strings(p: IntPolynomial) -> list[str]:
    """Coefficients low-to-high as decimal strings (the CLI/JSON form)."""
    return [str(c) for c in p.coeffs]


def from_decimal_strings(strings: Iterable[str]) -> IntPolynomial:
    """Inverse of to_decimal_strings."""
    return IntPolynomial(int(s) for s in strings)


def format_poly(p: IntPolynomial, var: str = "λ") -> str:
    """Human-readable rendering, highest degree first, e.g. 'λ^3 - 3λ - 2'."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            term = str(mag)
        elif k == 1:
            term = var if mag == 1 else f"{mag}{var}"
        else:
            term = f"{var}^{k}" if mag == 1 else f"{mag}{var}^{k}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


@dataclass(frozen=True)
class PolyMatrix2:
    """2x2 matrix of integer polynomials."""

    e11: IntPolynomial
    e12: IntPolynomial
    e21: IntPolynomial
    e22: IntPolynomial


IDENTITY2 = PolyMatrix2(ONE, ZERO, ZERO, ONE)


def matmul2(a: PolyMatrix2, b: PolyMatrix2) -> PolyMatrix2:
    """Standard 2x2 matrix product (eight polynomial multiplications)."""
    return PolyMatrix2(
        poly_add(poly_mul(a.e11, b.e11), poly_mul(a.e12, b.e21)),
        poly_add(poly_mul(a.e11, b.e12), poly_mul(a.e12, b.e22)),
        poly_add(poly_mul(a.e21, b.e11), poly_mul(a.e22, b.e21)),
        poly_add(poly_mul(a.e21, b.e12), poly_mul(a.e22, b.e22)),
    )


def apply_to_vector(
    a: PolyMatrix2, v: tuple[IntPolynomial, IntPolynomial]
) -> tuple[IntPolynomial, IntPolynomial]:
    """Matrix-vector product a @ (v1, v2)."""
    v1, v2 = v
    return (
        poly_add(poly_mul(a.e11, v1), poly_mul(a.e12, v2)),
        poly_add(poly_mul(a.e21, v1), poly_mul(a.e22, v2)),
    )
