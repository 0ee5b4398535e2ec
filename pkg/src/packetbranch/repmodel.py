"""Representations of O(p,q) in the two families indexed by a sign.

A :class:`Rep` with sign ``+`` is the family realized on ``O(p,q)/O(p-1,q)``;
sign ``-`` is its mirror on ``O(p,q)/O(p,q-1)``.  Both are stored in the
coordinates of their own signature ``(p, q)``; the mirror only swaps the role
of ``p`` and ``q`` in the K-type and zero conventions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParityError, RangeError, SignatureError, ZeroRepError
from .exactnum import HalfInt, binomial, half

PLUS = "+"
MINUS = "-"
SIGNS = (PLUS, MINUS)


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 0:
            raise SignatureError(f"signature ({self.p},{self.q}) needs p >= 1 and q >= 0")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def assumption_O(self) -> bool:
        return self.p >= 3 and self.q >= 2

    def subgroup(self) -> "Signature":
        """Signature of the stabilizer O(p-1, q)."""
        return Signature(self.p - 1, self.q)

    def regular_threshold(self) -> HalfInt:
        """Smallest admissible regular parameter, ``(p+q-2)/2``."""
        return half(self.n - 2)

    def parameters(self, upto: HalfInt, regular_only: bool = False) -> list[HalfInt]:
        """All positive parameters of the right parity that are ``<= upto``."""
        start = half(self.n % 2) if self.n % 2 else HalfInt.of(1)
        if regular_only:
            start = max(start, self.regular_threshold())
        out = []
        lam = start
        while lam <= upto:
            out.append(lam)
            lam = lam + 1
        return out

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class KType:
    """``H^a(R^p) [x] H^b(R^q)``; degree 0 is the trivial factor."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"K-type degrees must be >= 0, got ({self.a},{self.b})")


@dataclass(frozen=True)
class InfChar:
    """Harish-Chandra parameter in canonical form (non-negative, non-increasing)."""

    entries: tuple[HalfInt, ...]

    def __post_init__(self):
        es = self.entries
        if any(e < 0 for e in es) or any(es[i] < es[i + 1] for i in range(len(es) - 1)):
            raise ValueError(f"not canonical: {[str(e) for e in es]}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class Rep:
    sig: Signature
    sign: str
    lam: HalfInt
    is_zero: bool

    @property
    def p(self) -> int:
        return self.sig.p

    @property
    def q(self) -> int:
        return self.sig.q

    def __str__(self) -> str:
        return f"Pi^{self.sig}_{{{self.sign},{self.lam}}}"


@dataclass(frozen=True)
class Packet:
    sig: Signature
    lam: HalfInt
    plus: Rep
    minus: Rep

    @property
    def members(self) -> tuple[Rep, Rep]:
        return (self.plus, self.minus)


def make_rep(sig: Signature, sign: str, lam) -> Rep:
    if not isinstance(sig, Signature):
        sig = Signature(*sig)
    if sign not in SIGNS:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    lam = HalfInt.of(lam)
    if lam.twice_value % 2 != sig.n % 2:
        raise ParityError(f"lambda={lam} is not in Z + (p+q)/2 for signature {sig}")
    if lam <= 0:
        raise RangeError(f"lambda={lam} must be > 0")
    zero = (sign == PLUS and sig.p == 1) or (sign == MINUS and sig.q == 1)
    return Rep(sig, sign, lam, zero)


def make_packet(sig: Signature, lam) -> Packet:
    return Packet(sig, HalfInt.of(lam), make_rep(sig, PLUS, lam), make_rep(sig, MINUS, lam))


def is_regular(r: Rep) -> bool:
    return r.lam >= r.sig.regular_threshold()


def kappa(n: int) -> HalfInt:
    if n < 1:
        raise ValueError(f"kappa needs n >= 1, got {n}")
    return half(n % 2)


def canonicalize(raw: Iterable) -> InfChar:
    return InfChar(tuple(sorted((abs(HalfInt.of(x)) for x in raw), reverse=True)))


def _tail(n: int) -> list[HalfInt]:
    # (n-4)/2, (n-6)/2, ..., kappa(n): floor(n/2) - 1 entries
    return [half(n - 4 - 2 * j) for j in range(n // 2 - 1)]


def trivial_inf_char(sig: Signature) -> InfChar:
    if sig.n < 2:
        raise ValueError(f"trivial_inf_char needs p+q >= 2, got {sig.n}")
    return canonicalize([half(sig.n - 2)] + _tail(sig.n))


def inf_char(r: Rep) -> InfChar:
    if r.is_zero:
        raise ZeroRepError(f"{r} is the zero representation")
    if r.sig.n < 2:
        raise ValueError(f"infinitesimal character needs p+q >= 2, got {r.sig.n}")
    return canonicalize([r.lam] + _tail(r.sig.n))


def inf_char_tail(n: int) -> tuple[HalfInt, ...]:
    """The fixed trailing entries shared by every representation with ``p+q = n``."""
    return tuple(_tail(n))


def minimal_k_type(r: Rep) -> KType:
    if r.is_zero:
        raise ZeroRepError(f"{r} is the zero representation")
    p, q = r.p, r.q
    if r.sign == PLUS:
        b = r.lam - half(p - q - 2)
        return KType(int(b), 0) if b >= 0 else KType(0, 0)
    b = r.lam - half(q - p - 2)
    return KType(0, int(b)) if b >= 0 else KType(0, 0)


def harmonic_dim(n: int, b: int) -> int:
    """Dimension of the degree-``b`` spherical harmonics on ``R^n``."""
    if n < 1:
        raise ValueError(f"harmonic_dim needs n >= 1, got {n}")
    if b < 0:
        return 0
    return binomial(n + b - 1, b) - (binomial(n + b - 3, b - 2) if n + b >= 3 else 0)


def rep_to_json(r: Rep) -> dict:
    if r.is_zero or r.sig.n < 2:
        ic, kt = None, None
    else:
        ic = [str(e) for e in inf_char(r)]
        k = minimal_k_type(r)
        kt = {"a": k.a, "b": k.b}
    return {
        "p": r.p,
        "q": r.q,
        "sign": r.sign,
        "lambda": str(r.lam),
        "zero": r.is_zero,
        "regular": is_regular(r),
        "inf_char": ic,
        "min_k_type": kt,
    }
