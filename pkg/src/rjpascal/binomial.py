"""Generalized binomial coefficients and brute-force identity sweeps.

``binom`` accepts any integer upper parameter, positive or negative, and
returns zero whenever the lower parameter is negative.  The symmetry law
C(n, k) = C(n, n - k) is deliberately never applied: it fails for
negative n, and several checks below exist precisely to police that trap.

Each identity is evaluated over a finite summation range derived from
where its terms vanish; parameter combinations whose sums genuinely do
not terminate are rejected with InfiniteSupportError rather than being
silently truncated.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping


class InfiniteSupportError(ValueError):
    """The requested sum has no finite support under the given parameters."""


def binom(n: int, k: int) -> int:
    """C(n, k) for any integers n, k: zero if k < 0, else n(n-1)...(n-k+1)/k!."""
    if k < 0:
        return 0
    out = 1
    for i in range(1, k + 1):
        # any i consecutive integers multiply to a multiple of i!, so // is exact
        out = out * (n - i + 1) // i
    return out


def check_star(n: int, j: int, k: int) -> tuple[int, int]:
    """C(N-J, K) vs sum_r (-1)^r C(N-r, K-r) C(J, r).

    The summand vanishes for r < 0 (second factor) and for r > K (first
    factor has a negative lower parameter), so r runs over [0, K].
    """
    lhs = binom(n - j, k)
    rhs = sum((-1) ** r * binom(n - r, k - r) * binom(j, r) for r in range(0, k + 1))
    return lhs, rhs


def check_trinomial(i: int, j: int, k: int) -> tuple[int, int]:
    """C(I,J)·C(J,K) vs C(I,K)·C(I-K, J-K); valid for all integers."""
    lhs = binom(i, j) * binom(j, k)
    rhs = binom(i, k) * binom(i - k, j - k)
    return lhs, rhs


def check_trinomial_companion(i: int, j: int, k: int) -> tuple[int, int]:
    """C(I,J)·C(J,K) vs C(I,K)·C(I-K, I-J).

    Both sides are computed for any integers, but the identity itself only
    holds for I >= 0: the companion form swaps the lower parameter J-K for
    I-J by binomial symmetry, which is invalid for a negative upper
    argument.  E.g. I=-1, J=2, K=1 gives 2 on the left and 0 on the right.
    Sweeps therefore skip I < 0 (see COMPANION_DOMAIN_REASON).
    """
    lhs = binom(i, j) * binom(j, k)
    rhs = binom(i, k) * binom(i - k, i - j)
    return lhs, rhs


def check_vandermonde(m: int, n: int, l: int) -> tuple[int, int]:
    """sum_k C(M,k)·C(N,L-k) vs C(M+N, L), for M >= 0 or N >= 0.

    The summand vanishes for k < 0 and k > L, so k runs over [0, L].
    Pairs with both M < 0 and N < 0 are outside this check's supported
    domain and raise InfiniteSupportError; sweeps record them as skipped.
    """
    if m < 0 and n < 0:
        raise InfiniteSupportError(
            f"convolution with both upper parameters negative (M={m}, N={n}) is rejected"
        )
    lhs = sum(binom(m, k) * binom(n, l - k) for k in range(0, l + 1))
    rhs = binom(m + n, l)
    return lhs, rhs


def check_alternating_delta(n: int) -> tuple[int, int]:
    """sum_r (-1)^r C(N, r) over [0, N] vs delta(N, 0); needs N >= 0."""
    if n < 0:
        raise InfiniteSupportError(
            f"alternating row sum needs N >= 0 (got N={n}): C(N, r) never vanishes"
        )
    lhs = sum((-1) ** r * binom(n, r) for r in range(0, n + 1))
    rhs = 1 if n == 0 else 0
    return lhs, rhs


def check_double_delta(n: int, l: int) -> tuple[int, int]:
    """sum_u (-1)^u C(N, L-u)·C(N-L+u, u) vs delta(L, 0); all integer N.

    The summand vanishes for u < 0 and u > L, so u runs over [0, L].
    """
    lhs = sum(
        (-1) ** u * binom(n, l - u) * binom(n - l + u, u) for u in range(0, l + 1)
    )
    rhs = 1 if l == 0 else 0
    return lhs, rhs


class Identity(enum.Enum):
    """The six verified identities, keyed by their CLI names."""

    STAR = "star"
    TRINOMIAL = "trinomial"
    TRINOMIAL_COMPANION = "trinomial-companion"
    VANDERMONDE = "vandermonde"
    ALTERNATING_DELTA = "alternating"
    DOUBLE_DELTA = "double-delta"

    @property
    def param_names(self) -> tuple[str, ...]:
        return _PARAM_NAMES[self]


_PARAM_NAMES: dict[Identity, tuple[str, ...]] = {
    Identity.STAR: ("N", "J", "K"),
    Identity.TRINOMIAL: ("I", "J", "K"),
    Identity.TRINOMIAL_COMPANION: ("I", "J", "K"),
    Identity.VANDERMONDE: ("M", "N", "L"),
    Identity.ALTERNATING_DELTA: ("N",),
    Identity.DOUBLE_DELTA: ("N", "L"),
}

_CHECKS: dict[Identity, Callable[..., tuple[int, int]]] = {
    Identity.STAR: check_star,
    Identity.TRINOMIAL: check_trinomial,
    Identity.TRINOMIAL_COMPANION: check_trinomial_companion,
    Identity.VANDERMONDE: check_vandermonde,
    Identity.ALTERNATING_DELTA: check_alternating_delta,
    Identity.DOUBLE_DELTA: check_double_delta,
}

COMPANION_DOMAIN_REASON = (
    "companion trinomial form requires I >= 0 "
    "(binomial symmetry is invalid for a negative upper argument)"
)

#: Sweep boxes used by default; chosen to include the negative-upper
#: region where the symmetry trap bites while finishing in seconds.
DEFAULT_BOXES: dict[Identity, dict[str, tuple[int, int]]] = {
    Identity.STAR: {"N": (-6, 12), "J": (-6, 12), "K": (-6, 12)},
    Identity.TRINOMIAL: {"I": (-6, 12), "J": (-6, 12), "K": (-6, 12)},
    Identity.TRINOMIAL_COMPANION: {"I": (-6, 12), "J": (-6, 12), "K": (-6, 12)},
    Identity.VANDERMONDE: {"M": (-6, 12), "N": (-6, 12), "L": (-6, 12)},
    Identity.ALTERNATING_DELTA: {"N": (0, 40)},
    Identity.DOUBLE_DELTA: {"N": (-8, 12), "L": (0, 12)},
}


@dataclass
class IdentityCase:
    """One evaluated lattice point, recorded when the two sides disagree."""

    identity: Identity
    params: dict[str, int]
    lhs: int
    rhs: int

    def to_json(self) -> dict:
        return {"params": dict(self.params), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class SkippedCase:
    """A lattice point excluded from a sweep, with the reason."""

    params: dict[str, int]
    reason: str

    def to_json(self) -> dict:
        return {"params": dict(self.params), "reason": self.reason}


@dataclass
class IdentityReport:
    """Result of sweeping one identity over a parameter box."""

    identity: Identity
    box: dict[str, tuple[int, int]]
    cases_checked: int
    failures: list[IdentityCase] = field(default_factory=list)
    skipped: list[SkippedCase] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "identity": self.identity.value,
            "box": {name: list(rng) for name, rng in self.box.items()},
            "cases_checked": self.cases_checked,
            "failures": [f.to_json() for f in self.failures],
            "skipped": [s.to_json() for s in self.skipped],
        }

    @classmethod
    def from_json(cls, obj: dict) -> IdentityReport:
        ident = Identity(obj["identity"])
        return cls(
            identity=ident,
            box={name: (rng[0], rng[1]) for name, rng in obj["box"].items()},
            cases_checked=obj["cases_checked"],
            failures=[
                IdentityCase(ident, dict(f["params"]), f["lhs"], f["rhs"])
                for f in obj["failures"]
            ],
            skipped=[
                SkippedCase(dict(s["params"]), s["reason"])
                for s in obj.get("skipped", [])
            ],
        )


def _validate_box(identity: Identity, box: Mapping[str, tuple[int, int]]) -> None:
    names = identity.param_names
    if set(box) != set(names):
        raise ValueError(
            f"{identity.value} needs parameters {names}, got {tuple(box)}"
        )
    for name, (lo, hi) in box.items():
        if lo > hi:
            raise ValueError(f"empty range for {name}: {lo}..{hi}")
    if identity is Identity.ALTERNATING_DELTA and box["N"][0] < 0:
        raise ValueError(
            f"alternating sweep needs N >= 0, got range {box['N'][0]}..{box['N'][1]}"
        )


def sweep_identity(
    identity: Identity, box: Mapping[str, tuple[int, int]]
) -> IdentityReport:
    """Evaluate ``identity`` at every lattice point of ``box``.

    Points that violate a per-case domain condition are recorded as
    skipped with a reason; every disagreement between the two sides is
    recorded as a failure (none are expected).
    """
    _validate_box(identity, box)
    names = identity.param_names
    check = _CHECKS[identity]
    companion = identity is Identity.TRINOMIAL_COMPANION

    total = math.prod(box[name][1] - box[name][0] + 1 for name in names)
    failures: list[IdentityCase] = []
    skipped: list[SkippedCase] = []
    ranges = [range(box[name][0], box[name][1] + 1) for name in names]
    for combo in itertools.product(*ranges):
        params = dict(zip(names, combo))
        if companion and params["I"] < 0:
            skipped.append(SkippedCase(params, COMPANION_DOMAIN_REASON))
            continue
        try:
            lhs, rhs = check(*combo)
        except InfiniteSupportError as exc:
            skipped.append(SkippedCase(params, str(exc)))
            continue
        if lhs != rhs:
            failures.append(IdentityCase(identity, params, lhs, rhs))
    return IdentityReport(identity, dict(box), total, failures, skipped)
