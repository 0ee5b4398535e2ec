"""Branching multiplicities for the restriction O(p,q) -> O(p-1,q).

The two families behave differently.  Sign ``-`` restricts discretely with an
infinite sum ``mu = lambda + n + 1/2``; sign ``+`` has only finitely many
discrete summands ``mu = lambda - 1/2 - n`` with ``0 <= n < lambda - 1/2``.
Summands carry the O(1) character ``sgn**n``.  Cross-sign Hom spaces vanish.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    AssumptionError,
    DomainError,
    LengthError,
    RegularityError,
    SignatureMismatch,
)
from .exactnum import HalfInt, half
from .repmodel import (
    MINUS,
    PLUS,
    SIGNS,
    InfChar,
    Rep,
    Signature,
    canonicalize,
    inf_char,
    inf_char_tail,
    is_regular,
    make_rep,
    minimal_k_type,
)

DEFAULT_MAX_ENTRIES = 16


class OneChar(enum.Enum):
    TRIVIAL = "trivial"
    SGN = "sgn"

    @classmethod
    def power(cls, n: int) -> "OneChar":
        """``sgn**n``."""
        return cls.TRIVIAL if n % 2 == 0 else cls.SGN


@dataclass(frozen=True)
class SpectrumEntry:
    rep: Rep
    ochar: OneChar
    n: int

    def to_json(self) -> dict:
        return {"sign": self.rep.sign, "mu": str(self.rep.lam), "ochar": self.ochar.value, "n": self.n}


@dataclass(frozen=True)
class Spectrum:
    """Discrete spectrum of a restriction.

    ``omitted`` counts summands dropped because the subgroup representation is
    zero; ``truncated`` is set when the infinite ``-`` sum was cut off.
    """

    big: Rep
    entries: tuple[SpectrumEntry, ...]
    truncated: bool
    omitted: int

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[SpectrumEntry]:
        return iter(self.entries)

    def to_json(self) -> dict:
        return {
            "entries": [e.to_json() for e in self.entries],
            "truncated": self.truncated,
            "omitted": self.omitted,
        }


@dataclass
class BranchingReport:
    grid: dict
    checks_run: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, params: dict, expected, got) -> None:
        self.checks_run += 1
        if not ok:
            self.failures.append({"params": params, "expected": expected, "got": got})

    def to_json(self) -> dict:
        return {"grid": self.grid, "checks": self.checks_run, "failures": self.failures}

    @classmethod
    def merge(cls, grid: dict, reports) -> "BranchingReport":
        out = cls(grid)
        for r in reports:
            out.checks_run += r.checks_run
            out.failures.extend(r.failures)
        return out


def _witness_n(big: Rep, small: Rep) -> int | None:
    """The index ``n`` placing ``small`` in the discrete spectrum of ``big``, if any."""
    if small.sig != big.sig.subgroup():
        raise SignatureMismatch(f"{small.sig} is not the subgroup signature of {big.sig}")
    if big.is_zero or small.is_zero or big.sign != small.sign:
        return None
    if big.sign == MINUS:
        # mu = lambda + n + 1/2
        d = small.lam - big.lam - half(1)
        return int(d) if d >= 0 else None
    # mu = lambda - 1/2 - n with 0 <= n < lambda - 1/2, i.e. mu > 0
    d = big.lam - half(1) - small.lam
    return int(d) if d >= 0 and small.lam > 0 else None


def multiplicity(big: Rep, small: Rep) -> int:
    return 0 if _witness_n(big, small) is None else 1


def multiplicity_with_o1(big: Rep, small: Rep, chi: OneChar) -> int:
    n = _witness_n(big, small)
    return int(n is not None and OneChar.power(n) == chi)


def finite_type_parameters(lam: HalfInt) -> Iterator[tuple[int, HalfInt]]:
    """Pairs ``(n, lambda - 1/2 - n)`` for ``0 <= n < lambda - 1/2``."""
    n = 0
    while n < lam - half(1):
        yield n, lam - half(1) - n
        n += 1


def discrete_spectrum(big: Rep, max_entries: int = DEFAULT_MAX_ENTRIES) -> Spectrum:
    sub = big.sig.subgroup()
    entries = []
    omitted = 0
    truncated = False
    if big.is_zero:
        return Spectrum(big, (), False, 0)
    if big.sign == PLUS:
        terms = finite_type_parameters(big.lam)
    else:
        terms = ((n, big.lam + n + half(1)) for n in range(max_entries))
        truncated = True
    for n, mu in terms:
        small = make_rep(sub, big.sign, mu)
        if small.is_zero:
            omitted += 1
            continue
        entries.append(SpectrumEntry(small, OneChar.power(n), n))
    return Spectrum(big, tuple(entries), truncated, omitted)


def _split_leading(chi: InfChar, tail: tuple[HalfInt, ...], which: str) -> HalfInt:
    """Remove one copy of the fixed ``tail`` from ``chi``; return the leftover entry."""
    rest = list(chi.entries)
    for t in tail:
        try:
            rest.remove(t)
        except ValueError:
            raise DomainError(
                f"{which} infinitesimal character {chi} does not contain the expected tail "
                f"{[str(x) for x in tail]}"
            ) from None
    (lead,) = rest
    return lead


def interlacing_holds(chi_G, chi_H, variant: str) -> bool:
    """Interlacing of the leading entries of a G and an H infinitesimal character.

    ``variant`` is ``"disc"`` (``mu > lambda > (p+q-4)/2``) or ``"finite"``
    (``lambda > mu > (p+q-4)/2``).  The common rank ``p+q`` is recovered from
    the two lengths.
    """
    if variant not in ("disc", "finite"):
        raise ValueError(f"variant must be 'disc' or 'finite', got {variant!r}")
    chi_G = canonicalize(chi_G)
    chi_H = canonicalize(chi_H)
    m, k = len(chi_G), len(chi_H)
    if k == m:
        n = 2 * m + 1
    elif k == m - 1:
        n = 2 * m
    else:
        raise LengthError(f"lengths {m} and {k} do not come from a common p+q")
    if m < 1 or n < 3:
        raise LengthError(f"p+q = {n} is too small for interlacing")
    lam = _split_leading(chi_G, inf_char_tail(n), "G")
    mu = _split_leading(chi_H, inf_char_tail(n - 1), "H")
    t = half(n - 4)
    if variant == "disc":
        return mu > lam > t and lam > 0
    return lam > mu > t and mu > 0


def _require_O(sig: Signature) -> None:
    if not sig.assumption_O:
        raise AssumptionError(f"signature {sig} violates p >= 3 and q >= 2")


PAIRS = ((PLUS, PLUS), (PLUS, MINUS), (MINUS, PLUS), (MINUS, MINUS))


def packet_decomposition(sig: Signature, lam, mu) -> dict[tuple[str, str], int]:
    """Multiplicity for each (G-member sign, H-member sign) pair."""
    _require_O(sig)
    sub = sig.subgroup()
    return {
        (d, e): multiplicity(make_rep(sig, d, lam), make_rep(sub, e, mu)) for d, e in PAIRS
    }


def packet_multiplicity(sig: Signature, lam, mu) -> int:
    return sum(packet_decomposition(sig, lam, mu).values())


def packet_partner(sig: Signature, lam, mu) -> tuple[str, str]:
    """The unique pair ``(delta, epsilon)`` with multiplicity one; needs regular parameters."""
    _require_O(sig)
    big = make_rep(sig, PLUS, lam)
    small = make_rep(sig.subgroup(), PLUS, mu)
    if not is_regular(big):
        raise RegularityError(f"lambda={big.lam} is not regular for {sig}")
    if not is_regular(small):
        raise RegularityError(f"mu={small.lam} is not regular for {small.sig}")
    hits = [pair for pair, m in packet_decomposition(sig, lam, mu).items() if m]
    if len(hits) != 1:
        # unreachable for regular parameters; kept loud rather than silent
        raise AssertionError(f"expected exactly one partner, found {hits}")
    return hits[0]


def verify_versions(sig: Signature, lambda_max) -> BranchingReport:
    """Check spectrum-formula multiplicity against interlacing, and packet multiplicity one.

    Runs over every regular ``lambda <= lambda_max`` and regular
    ``mu <= lambda_max + 1``.
    """
    _require_O(sig)
    lambda_max = HalfInt.of(lambda_max)
    sub = sig.subgroup()
    report = BranchingReport({"p": sig.p, "q": sig.q, "lambda_max": str(lambda_max)})
    mus = sub.parameters(lambda_max + 1, regular_only=True)
    for lam in sig.parameters(lambda_max, regular_only=True):
        for mu in mus:
            for sign, variant in ((PLUS, "finite"), (MINUS, "disc")):
                big, small = make_rep(sig, sign, lam), make_rep(sub, sign, mu)
                m = multiplicity(big, small)
                inter = interlacing_holds(inf_char(big), inf_char(small), variant)
                report.check(
                    (m == 1) == inter,
                    {"p": sig.p, "q": sig.q, "sign": sign, "lambda": str(lam), "mu": str(mu)},
                    {"interlacing": inter},
                    {"multiplicity": m},
                )
            pm = packet_multiplicity(sig, lam, mu)
            report.check(
                pm == 1,
                {"p": sig.p, "q": sig.q, "lambda": str(lam), "mu": str(mu)},
                {"packet_multiplicity": 1},
                {"packet_multiplicity": pm},
            )
    return report


def verify_packet_members(sig: Signature, lambda_max) -> BranchingReport:
    """Both packet members share an infinitesimal character but not a minimal K-type."""
    lambda_max = HalfInt.of(lambda_max)
    report = BranchingReport({"p": sig.p, "q": sig.q, "lambda_max": str(lambda_max)})
    for lam in sig.parameters(lambda_max, regular_only=True):
        plus, minus = make_rep(sig, PLUS, lam), make_rep(sig, MINUS, lam)
        params = {"p": sig.p, "q": sig.q, "lambda": str(lam)}
        ic_p, ic_m = inf_char(plus), inf_char(minus)
        report.check(ic_p == ic_m, params, {"inf_char": str(ic_p)}, {"inf_char": str(ic_m)})
        kt_p, kt_m = minimal_k_type(plus), minimal_k_type(minus)
        report.check(
            kt_p != kt_m,
            params,
            {"min_k_types": "distinct"},
            {"plus": [kt_p.a, kt_p.b], "minus": [kt_m.a, kt_m.b]},
        )
    return report


__all__ = [
    "DEFAULT_MAX_ENTRIES",
    "PAIRS",
    "SIGNS",
    "BranchingReport",
    "OneChar",
    "Spectrum",
    "SpectrumEntry",
    "discrete_spectrum",
    "finite_type_parameters",
    "interlacing_holds",
    "multiplicity",
    "multiplicity_with_o1",
    "packet_decomposition",
    "packet_multiplicity",
    "packet_partner",
    "verify_packet_members",
    "verify_versions",
]
