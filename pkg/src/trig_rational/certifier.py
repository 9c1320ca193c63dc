"""Machine-checkable certificates for the trig classification.

A certificate spells out, number by number, why tan^2(r*pi) (or tan, cos,
cos^2) is a pole, an exact rational, or irrational, so that a verifier can
re-check the claim with no trust in the classifier:

  * base step: the reduced denominator is one of 1, 2, 3, 4, 6 and the value
    is the tabulated one.
  * chain step: successive angle doublings; if the original tan^2 were
    rational, so would be the value at the end of the chain.
  * poly step: for odd denominator q >= 5, one more doubling lands on a root
    s of a monic integer polynomial; the rational root theorem confines any
    rational s to the positive divisors of q, and each divisor is ruled out
    either by exact evaluation (not a root) or by a certified interval
    around s (a root, but a different one).
  * backward quadratic step: for denominators 8 * 2^a and 12 * 2^a the chain
    stops at 8 or 12, where one more doubling hits a known exact value D;
    a rational tan^2 would then be a rational root of an integer quadratic
    whose discriminant is not a perfect square.
  * identity and square-root steps tie tan, cos and cos^2 back to tan^2.

Serialization is strict JSON: arbitrary-precision integers and rationals
travel as decimal strings (rationals as "num/den" in lowest terms), and the
verifier rejects unknown fields, non-canonical numbers and version drift.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .angle import (
    ReducedAngle,
    doubling_chain,
    odd_part,
    reduce_for_cos,
    reduce_for_tan,
    tan_squared_base_value,
)
from .classifier import FUNCTIONS, IRRATIONAL, POLE, TrigVerdict
from .exact_core import divisors, gcd, rational_sqrt
from .highprec import MAX_BITS, MIN_BITS, eval_tan_squared
from .polynomial import tan_squared_poly

__all__ = [
    "WIRE_VERSION",
    "TAN_RELATION",
    "COS2_RELATION",
    "COS_RELATION",
    "BaseStep",
    "ChainStep",
    "Exclusion",
    "PolyStep",
    "BackwardQuadraticStep",
    "SqrtStep",
    "IdentityStep",
    "CertStep",
    "Certificate",
    "VerificationResult",
    "CertificateFormatError",
    "certify",
    "exclude_candidate",
    "verify_certificate",
    "verify_certificate_json",
    "certificate_to_tree",
    "certificate_from_tree",
    "to_json",
    "from_json",
]

WIRE_VERSION = 1

TAN_RELATION = "tan2 = tan^2"
COS2_RELATION = "cos2 = 1/(1+tan2)"
COS_RELATION = "cos2 = cos^2"


# ------------------------------------------------------------- steps ------


@dataclass(frozen=True)
class BaseStep:
    """Tabulated tan^2 value at a reduced denominator in {1, 2, 3, 4, 6}.

    value is None exactly at the pole (denominator 2).
    """

    angle: ReducedAngle
    value: Fraction | None


@dataclass(frozen=True)
class ChainStep:
    """Angle doublings from the input's reduction down to the working denominator."""

    angles: tuple[ReducedAngle, ...]

    def __post_init__(self) -> None:
        if not self.angles:
            raise ValueError("empty chain")


@dataclass(frozen=True)
class Exclusion:
    """Why one divisor candidate cannot equal s.

    nonroot records the exact polynomial value at the candidate (nonzero);
    separation records a certified interval around s that misses the
    candidate, together with the precision used.
    """

    candidate: Fraction
    method: str  # "nonroot" | "separation"
    q_value: Fraction | None = None
    interval_lo: Fraction | None = None
    interval_hi: Fraction | None = None
    bits: int | None = None

    def __post_init__(self) -> None:
        if self.method == "nonroot":
            ok = (
                self.q_value is not None
                and self.interval_lo is None
                and self.interval_hi is None
                and self.bits is None
            )
        elif self.method == "separation":
            ok = (
                self.q_value is None
                and self.interval_lo is not None
                and self.interval_hi is not None
                and self.bits is not None
            )
        else:
            raise ValueError(f"unknown exclusion method {self.method!r}")
        if not ok:
            raise ValueError(f"wrong fields for a {self.method} exclusion")


@dataclass(frozen=True)
class PolyStep:
    """s := tan^2 at the doubled chain end is a root of the monic polynomial.

    coeffs are ascending; candidates are the positive divisors of q, the only
    possible rational roots, and every one carries an exclusion.
    """

    q: int
    coeffs: tuple[int, ...]
    candidates: tuple[int, ...]
    exclusions: tuple[Exclusion, ...]


@dataclass(frozen=True)
class BackwardQuadraticStep:
    """A rational tan^2 at the chain end would be a rational root of this quadratic.

    D is the exact doubled-angle value (1 at denominator 8's double, 1/3 at
    12's); with D = u/v the quadratic is u x^2 - 2(u+2v) x + u and the
    discriminant 16 v (u+v) is checked for being a perfect square.
    """

    den: int
    d_value: Fraction
    quad_coeffs: tuple[int, int, int]
    discriminant: int
    square_witness: Fraction | None


@dataclass(frozen=True)
class SqrtStep:
    """Square-root extraction: the target value squares to radicand.

    square_test_result is the exact rational square root when one exists,
    None otherwise (which is what makes the target irrational).
    """

    radicand: Fraction
    square_test_result: Fraction | None


@dataclass(frozen=True)
class IdentityStep:
    """Algebraic relation connecting the certified function to tan^2."""

    relation: str

    def __post_init__(self) -> None:
        if self.relation not in (TAN_RELATION, COS2_RELATION, COS_RELATION):
            raise ValueError(f"unknown relation {self.relation!r}")


CertStep = (
    BaseStep | ChainStep | PolyStep | BackwardQuadraticStep | SqrtStep | IdentityStep
)


@dataclass(frozen=True)
class Certificate:
    input: Fraction
    function: str
    verdict: TrigVerdict
    steps: tuple[CertStep, ...]

    def __post_init__(self) -> None:
        if self.function not in FUNCTIONS:
            raise ValueError(f"unknown function {self.function!r}")


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------- generation ----


def certify(
    r: Fraction | int, function: str = "tan2", separation_bits: int = 128
) -> Certificate:
    """Build a certificate for the verdict on function(r * pi).

    separation_bits is the starting precision for interval separations
    (doubled as needed up to the global cap).
    """
    r = Fraction(r)
    if function not in FUNCTIONS:
        raise ValueError(f"unknown function {function!r}")
    red = reduce_for_tan(r)
    t_verdict, core = _tan2_steps(red, separation_bits)
    if function == "tan2":
        return Certificate(r, function, t_verdict, core)
    if function == "tan":
        steps: tuple[CertStep, ...] = (IdentityStep(TAN_RELATION), *core)
        if t_verdict.kind == "exact":
            root = rational_sqrt(t_verdict.value)
            if root is None:
                steps += (SqrtStep(t_verdict.value, None),)
                verdict = IRRATIONAL
            else:
                verdict = TrigVerdict.exact(red.sign * root)
        else:
            verdict = t_verdict
        return Certificate(r, function, verdict, steps)
    if function == "cos2":
        steps = (IdentityStep(COS2_RELATION), *core)
        verdict = _cos2_of(t_verdict)
        return Certificate(r, function, verdict, steps)
    # cos
    steps = (IdentityStep(COS2_RELATION), IdentityStep(COS_RELATION), *core)
    c2 = _cos2_of(t_verdict)
    if c2.kind == "exact":
        root = rational_sqrt(c2.value)
        if root is None:
            steps += (SqrtStep(c2.value, None),)
            verdict = IRRATIONAL
        else:
            redc = reduce_for_cos(r)
            sign = -1 if 2 * redc.d > redc.n else 1
            verdict = TrigVerdict.exact(sign * root)
    else:
        verdict = IRRATIONAL
    return Certificate(r, function, verdict, steps)


def _cos2_of(t_verdict: TrigVerdict) -> TrigVerdict:
    # cos^2 = 1/(1+tan^2); the tan^2 pole maps to the value 0
    if t_verdict.kind == "pole":
        return TrigVerdict.exact(0)
    if t_verdict.kind == "exact":
        return TrigVerdict.exact(1 / (1 + t_verdict.value))
    return IRRATIONAL


def _tan2_steps(
    red: ReducedAngle, separation_bits: int
) -> tuple[TrigVerdict, tuple[CertStep, ...]]:
    if red.n in (1, 2, 3, 4, 6):
        value = tan_squared_base_value(red.n)
        verdict = POLE if value is None else TrigVerdict.exact(value)
        return verdict, (BaseStep(red, value),)
    _, q = odd_part(red.n)
    start = ReducedAngle(red.d, red.n)
    if q >= 5:
        chain = doubling_chain(start, q)
        d_prime = chain.angles[-1].d
        poly = tan_squared_poly(q)
        step = PolyStep(
            q,
            poly.coeffs,
            tuple(divisors(q)),
            _exclusions_for(q, d_prime, separation_bits),
        )
        return IRRATIONAL, (ChainStep(chain.angles), step)
    # odd part 1 or 3: stop at denominator 8 or 12, where doubling hits an
    # exact value and the double-angle preimage quadratic takes over
    stop = 8 if q == 1 else 12
    chain = doubling_chain(start, stop)
    d_value = tan_squared_base_value(stop // 2)
    assert d_value is not None
    u, v = d_value.numerator, d_value.denominator
    coeffs = (u, -2 * (u + 2 * v), u)
    disc = 4 * (u + 2 * v) ** 2 - 4 * u * u
    step = BackwardQuadraticStep(stop, d_value, coeffs, disc, rational_sqrt(disc))
    return IRRATIONAL, (ChainStep(chain.angles), step)


def exclude_candidate(
    q: int, d_prime: int, candidate: Fraction | int, bits: int = 64
) -> Exclusion:
    """Rule out one rational-root candidate for s = tan^2(2 d' pi / q).

    Exact evaluation settles non-roots; for a genuine root of the polynomial
    (necessarily a different one than s), the interval around s is refined,
    doubling the precision from bits up to the cap, until it excludes the
    candidate.
    """
    candidate = Fraction(candidate)
    if q < 5 or q % 2 == 0:
        raise ValueError("q must be odd and at least 5")
    if not 0 < d_prime < q or gcd(d_prime, q) != 1:
        raise ValueError("d_prime must be in (0, q) and coprime to q")
    if candidate <= 0:
        raise ValueError("candidates are positive")
    value = _poly_value_at(q, candidate)
    if value != 0:
        return Exclusion(candidate, "nonroot", q_value=value)
    angle = reduce_for_tan(Fraction(2 * d_prime, q))
    b = bits
    while b <= MAX_BITS:
        iv = eval_tan_squared(angle, b)
        if iv.excludes(candidate):
            return Exclusion(
                candidate,
                "separation",
                interval_lo=iv.lo,
                interval_hi=iv.hi,
                bits=b,
            )
        b *= 2
    raise ArithmeticError(
        f"separation of {candidate} at angle 2*{d_prime}/{q} exceeded {MAX_BITS} bits"
    )


@lru_cache(maxsize=None)
def _poly_value_at(q: int, candidate: Fraction) -> Fraction:
    return tan_squared_poly(q).eval(candidate)


@lru_cache(maxsize=None)
def _exclusions_for(q: int, d_prime: int, bits: int) -> tuple[Exclusion, ...]:
    return tuple(exclude_candidate(q, d_prime, c, bits) for c in divisors(q))


# --------------------------------------------------------- verification ---


class _Fail(Exception):
    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


def verify_certificate(cert: Certificate) -> VerificationResult:
    """Re-check every number in the certificate and the claimed verdict.

    Angle reductions, chains, polynomial coefficients, divisor lists, exact
    evaluations, separation intervals (at the recorded precision) and square
    tests are all recomputed; the classifier is never consulted.
    """
    try:
        entailed = _entailed_verdict(cert)
    except _Fail as f:
        return VerificationResult(False, f.reason)
    if entailed != cert.verdict:
        return VerificationResult(False, "verdict not entailed")
    return VerificationResult(True)


def _entailed_verdict(cert: Certificate) -> TrigVerdict:
    r = cert.input
    steps = cert.steps
    if cert.function == "tan2":
        return _core_tan2(r, steps)
    if cert.function == "tan":
        _expect_identity(steps, 0, TAN_RELATION)
        return _tan_from_core(r, steps[1:])
    if cert.function == "cos2":
        _expect_identity(steps, 0, COS2_RELATION)
        return _cos2_of(_core_tan2(r, steps[1:]))
    _expect_identity(steps, 0, COS2_RELATION)
    _expect_identity(steps, 1, COS_RELATION)
    return _cos_from_core(r, steps[2:])


def _expect_identity(steps: tuple[CertStep, ...], i: int, relation: str) -> None:
    if len(steps) <= i or steps[i] != IdentityStep(relation):
        raise _Fail(f"missing identity step {relation!r}")


def _core_tan2(r: Fraction, steps: tuple[CertStep, ...]) -> TrigVerdict:
    """Check the tan^2 portion of the step list and return what it proves."""
    red = reduce_for_tan(r)
    if red.n in (1, 2, 3, 4, 6):
        if len(steps) != 1 or not isinstance(steps[0], BaseStep):
            raise _Fail("expected a single base step")
        step = steps[0]
        if step.angle != red:
            raise _Fail("base step angle mismatch")
        value = tan_squared_base_value(red.n)
        if step.value != value:
            raise _Fail("base value mismatch")
        return POLE if value is None else TrigVerdict.exact(value)
    if len(steps) != 2 or not isinstance(steps[0], ChainStep):
        raise _Fail("expected a chain step and a concluding step")
    _, q = odd_part(red.n)
    second = steps[1]
    if q >= 5:
        if not isinstance(second, PolyStep):
            raise _Fail("expected a poly step")
        stop = q
    else:
        if not isinstance(second, BackwardQuadraticStep):
            raise _Fail("expected a backward quadratic step")
        stop = 8 if q == 1 else 12
    expected = doubling_chain(ReducedAngle(red.d, red.n), stop)
    if steps[0].angles != expected.angles:
        raise _Fail("chain mismatch")
    if any(a.n in (2, 4) for a in expected.angles):
        # never true for these stops; guards the doubling identity's pole
        raise _Fail("chain passes through denominator 2 or 4")
    d_prime = expected.angles[-1].d
    if isinstance(second, PolyStep):
        _check_poly_step(second, q, d_prime)
    else:
        _check_quadratic_step(second, stop)
    return IRRATIONAL


def _check_poly_step(step: PolyStep, q: int, d_prime: int) -> None:
    if step.q != q:
        raise _Fail("odd part mismatch")
    if step.coeffs != tan_squared_poly(q).coeffs:
        raise _Fail("polynomial coefficients mismatch")
    cands = tuple(divisors(q))
    if step.candidates != cands:
        raise _Fail("candidate list mismatch")
    if len(step.exclusions) != len(cands):
        raise _Fail("exclusion count mismatch")
    s_angle = reduce_for_tan(Fraction(2 * d_prime, q))
    for cand, exc in zip(cands, step.exclusions):
        if exc.candidate != cand:
            raise _Fail("exclusion candidate mismatch")
        if exc.method == "nonroot":
            value = _poly_value_at(q, Fraction(cand))
            if exc.q_value != value:
                raise _Fail("exact evaluation mismatch")
            if value == 0:
                raise _Fail("candidate is a root but marked nonroot")
        else:
            bits = exc.bits
            assert bits is not None
            if not MIN_BITS <= bits <= MAX_BITS:
                raise _Fail("separation bits out of range")
            iv = eval_tan_squared(s_angle, bits)
            if iv.lo != exc.interval_lo or iv.hi != exc.interval_hi:
                raise _Fail("separation interval mismatch")
            if not iv.excludes(cand):
                raise _Fail("candidate not separated")


def _check_quadratic_step(step: BackwardQuadraticStep, stop: int) -> None:
    if step.den != stop:
        raise _Fail("landing denominator mismatch")
    d_value = tan_squared_base_value(stop // 2)
    assert d_value is not None
    if step.d_value != d_value:
        raise _Fail("doubled-angle value mismatch")
    u, v = d_value.numerator, d_value.denominator
    if step.quad_coeffs != (u, -2 * (u + 2 * v), u):
        raise _Fail("quadratic coefficients mismatch")
    disc = 4 * (u + 2 * v) ** 2 - 4 * u * u
    if step.discriminant != disc:
        raise _Fail("discriminant mismatch")
    witness = rational_sqrt(disc)
    if step.square_witness != witness:
        raise _Fail("square test mismatch")
    if witness is not None:
        raise _Fail("verdict not entailed")


def _tan_from_core(r: Fraction, rest: tuple[CertStep, ...]) -> TrigVerdict:
    red = reduce_for_tan(r)
    if rest and isinstance(rest[-1], SqrtStep):
        sq = rest[-1]
        t = _core_tan2(r, rest[:-1])
        if t.kind != "exact":
            raise _Fail("square-root step without an exact square")
        _check_sqrt_step(sq, t.value)
        return IRRATIONAL
    t = _core_tan2(r, rest)
    if t.kind != "exact":
        return t
    root = rational_sqrt(t.value)
    if root is None:
        raise _Fail("missing square-root step")
    return TrigVerdict.exact(red.sign * root)


def _cos_from_core(r: Fraction, rest: tuple[CertStep, ...]) -> TrigVerdict:
    if rest and isinstance(rest[-1], SqrtStep):
        sq = rest[-1]
        c2 = _cos2_of(_core_tan2(r, rest[:-1]))
        if c2.kind != "exact":
            raise _Fail("square-root step without an exact square")
        _check_sqrt_step(sq, c2.value)
        return IRRATIONAL
    c2 = _cos2_of(_core_tan2(r, rest))
    if c2.kind != "exact":
        return IRRATIONAL
    root = rational_sqrt(c2.value)
    if root is None:
        raise _Fail("missing square-root step")
    redc = reduce_for_cos(r)
    sign = -1 if 2 * redc.d > redc.n else 1
    return TrigVerdict.exact(sign * root)


def _check_sqrt_step(step: SqrtStep, radicand: Fraction) -> None:
    if step.radicand != radicand:
        raise _Fail("radicand mismatch")
    witness = rational_sqrt(radicand)
    if step.square_test_result != witness:
        raise _Fail("square test mismatch")
    if witness is not None:
        raise _Fail("verdict not entailed")


# ------------------------------------------------------------ wire --------


class CertificateFormatError(ValueError):
    """Malformed certificate tree or JSON text."""


_INT_RE = re.compile(r"-?[0-9]+\Z")
_RAT_RE = re.compile(r"-?[0-9]+/[0-9]+\Z")


def _int_to_wire(v: int) -> str:
    return str(v)


def _rat_to_wire(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _int_from_wire(v: object, what: str) -> int:
    if not isinstance(v, str) or not _INT_RE.match(v):
        raise CertificateFormatError(f"{what}: expected a decimal integer string")
    parsed = int(v)
    if str(parsed) != v:
        raise CertificateFormatError(f"{what}: not in canonical form")
    return parsed


def _rat_from_wire(v: object, what: str) -> Fraction:
    if not isinstance(v, str) or not _RAT_RE.match(v):
        raise CertificateFormatError(f"{what}: expected a num/den string")
    num_s, den_s = v.split("/")
    den = int(den_s)
    if den == 0:
        raise CertificateFormatError(f"{what}: zero denominator")
    x = Fraction(int(num_s), den)
    if _rat_to_wire(x) != v:
        raise CertificateFormatError(f"{what}: not in lowest terms")
    return x


def _json_int(v: object, what: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise CertificateFormatError(f"{what}: expected an integer")
    return v


def _expect_keys(tree: object, keys: set[str], what: str) -> dict:
    if not isinstance(tree, dict):
        raise CertificateFormatError(f"{what}: expected an object")
    if set(tree) != keys:
        raise CertificateFormatError(
            f"{what}: fields must be exactly {sorted(keys)}, got {sorted(tree)}"
        )
    return tree


def _angle_to_tree(a: ReducedAngle) -> dict:
    return {"d": _int_to_wire(a.d), "n": _int_to_wire(a.n), "sign": a.sign}


def _angle_from_tree(tree: object, what: str) -> ReducedAngle:
    t = _expect_keys(tree, {"d", "n", "sign"}, what)
    sign = _json_int(t["sign"], f"{what}.sign")
    try:
        return ReducedAngle(
            _int_from_wire(t["d"], f"{what}.d"),
            _int_from_wire(t["n"], f"{what}.n"),
            sign,
        )
    except ValueError as e:
        raise CertificateFormatError(f"{what}: {e}") from None


def _opt_rat_to_wire(x: Fraction | None) -> str | None:
    return None if x is None else _rat_to_wire(x)


def _opt_rat_from_wire(v: object, what: str) -> Fraction | None:
    return None if v is None else _rat_from_wire(v, what)


def _exclusion_to_tree(e: Exclusion) -> dict:
    if e.method == "nonroot":
        assert e.q_value is not None
        return {
            "candidate": _int_to_wire(_as_int(e.candidate)),
            "method": "nonroot",
            "Q_value": _int_to_wire(_as_int(e.q_value)),
        }
    assert e.interval_lo is not None and e.interval_hi is not None
    return {
        "candidate": _int_to_wire(_as_int(e.candidate)),
        "method": "separation",
        "interval_lo": _rat_to_wire(e.interval_lo),
        "interval_hi": _rat_to_wire(e.interval_hi),
        "bits": e.bits,
    }


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"{x} is not an integer")
    return x.numerator


def _exclusion_from_tree(tree: object, what: str) -> Exclusion:
    if not isinstance(tree, dict):
        raise CertificateFormatError(f"{what}: expected an object")
    method = tree.get("method")
    if method == "nonroot":
        t = _expect_keys(tree, {"candidate", "method", "Q_value"}, what)
        return Exclusion(
            Fraction(_int_from_wire(t["candidate"], f"{what}.candidate")),
            "nonroot",
            q_value=Fraction(_int_from_wire(t["Q_value"], f"{what}.Q_value")),
        )
    if method == "separation":
        t = _expect_keys(
            tree, {"candidate", "method", "interval_lo", "interval_hi", "bits"}, what
        )
        bits = _json_int(t["bits"], f"{what}.bits")
        return Exclusion(
            Fraction(_int_from_wire(t["candidate"], f"{what}.candidate")),
            "separation",
            interval_lo=_rat_from_wire(t["interval_lo"], f"{what}.interval_lo"),
            interval_hi=_rat_from_wire(t["interval_hi"], f"{what}.interval_hi"),
            bits=bits,
        )
    raise CertificateFormatError(f"{what}: unknown exclusion method {method!r}")


def _step_to_tree(step: CertStep) -> dict:
    if isinstance(step, BaseStep):
        return {
            "type": "base",
            "angle": _angle_to_tree(step.angle),
            "value": _opt_rat_to_wire(step.value),
        }
    if isinstance(step, ChainStep):
        return {"type": "chain", "angles": [_angle_to_tree(a) for a in step.angles]}
    if isinstance(step, PolyStep):
        return {
            "type": "poly",
            "q": _int_to_wire(step.q),
            "coeffs": [_int_to_wire(c) for c in step.coeffs],
            "candidates": [_int_to_wire(c) for c in step.candidates],
            "exclusions": [_exclusion_to_tree(e) for e in step.exclusions],
        }
    if isinstance(step, BackwardQuadraticStep):
        return {
            "type": "backward_quadratic",
            "den": _int_to_wire(step.den),
            "D": _rat_to_wire(step.d_value),
            "quad_coeffs": [_int_to_wire(c) for c in step.quad_coeffs],
            "discriminant": _int_to_wire(step.discriminant),
            "square_witness": _opt_rat_to_wire(step.square_witness),
        }
    if isinstance(step, SqrtStep):
        return {
            "type": "sqrt_step",
            "radicand": _rat_to_wire(step.radicand),
            "square_test_result": _opt_rat_to_wire(step.square_test_result),
        }
    return {"type": "identity_step", "relation": step.relation}


def _step_from_tree(tree: object, what: str) -> CertStep:
    if not isinstance(tree, dict):
        raise CertificateFormatError(f"{what}: expected an object")
    tag = tree.get("type")
    try:
        if tag == "base":
            t = _expect_keys(tree, {"type", "angle", "value"}, what)
            return BaseStep(
                _angle_from_tree(t["angle"], f"{what}.angle"),
                _opt_rat_from_wire(t["value"], f"{what}.value"),
            )
        if tag == "chain":
            t = _expect_keys(tree, {"type", "angles"}, what)
            if not isinstance(t["angles"], list):
                raise CertificateFormatError(f"{what}.angles: expected a list")
            return ChainStep(
                tuple(
                    _angle_from_tree(a, f"{what}.angles[{i}]")
                    for i, a in enumerate(t["angles"])
                )
            )
        if tag == "poly":
            t = _expect_keys(
                tree, {"type", "q", "coeffs", "candidates", "exclusions"}, what
            )
            for key in ("coeffs", "candidates", "exclusions"):
                if not isinstance(t[key], list):
                    raise CertificateFormatError(f"{what}.{key}: expected a list")
            return PolyStep(
                _int_from_wire(t["q"], f"{what}.q"),
                tuple(
                    _int_from_wire(c, f"{what}.coeffs[{i}]")
                    for i, c in enumerate(t["coeffs"])
                ),
                tuple(
                    _int_from_wire(c, f"{what}.candidates[{i}]")
                    for i, c in enumerate(t["candidates"])
                ),
                tuple(
                    _exclusion_from_tree(e, f"{what}.exclusions[{i}]")
                    for i, e in enumerate(t["exclusions"])
                ),
            )
        if tag == "backward_quadratic":
            t = _expect_keys(
                tree,
                {"type", "den", "D", "quad_coeffs", "discriminant", "square_witness"},
                what,
            )
            if not isinstance(t["quad_coeffs"], list) or len(t["quad_coeffs"]) != 3:
                raise CertificateFormatError(
                    f"{what}.quad_coeffs: expected three coefficients"
                )
            c0, c1, c2 = (
                _int_from_wire(c, f"{what}.quad_coeffs[{i}]")
                for i, c in enumerate(t["quad_coeffs"])
            )
            return BackwardQuadraticStep(
                _int_from_wire(t["den"], f"{what}.den"),
                _rat_from_wire(t["D"], f"{what}.D"),
                (c0, c1, c2),
                _int_from_wire(t["discriminant"], f"{what}.discriminant"),
                _opt_rat_from_wire(t["square_witness"], f"{what}.square_witness"),
            )
        if tag == "sqrt_step":
            t = _expect_keys(tree, {"type", "radicand", "square_test_result"}, what)
            return SqrtStep(
                _rat_from_wire(t["radicand"], f"{what}.radicand"),
                _opt_rat_from_wire(
                    t["square_test_result"], f"{what}.square_test_result"
                ),
            )
        if tag == "identity_step":
            t = _expect_keys(tree, {"type", "relation"}, what)
            if not isinstance(t["relation"], str):
                raise CertificateFormatError(f"{what}.relation: expected a string")
            return IdentityStep(t["relation"])
    except ValueError as e:
        if isinstance(e, CertificateFormatError):
            raise
        raise CertificateFormatError(f"{what}: {e}") from None
    raise CertificateFormatError(f"{what}: unknown step type {tag!r}")


def _verdict_to_tree(v: TrigVerdict) -> dict:
    if v.kind == "exact":
        return {"kind": "exact", "value": _rat_to_wire(v.value)}
    return {"kind": v.kind}


def _verdict_from_tree(tree: object) -> TrigVerdict:
    if not isinstance(tree, dict):
        raise CertificateFormatError("verdict: expected an object")
    kind = tree.get("kind")
    if kind == "exact":
        t = _expect_keys(tree, {"kind", "value"}, "verdict")
        return TrigVerdict.exact(_rat_from_wire(t["value"], "verdict.value"))
    if kind in ("pole", "irrational"):
        _expect_keys(tree, {"kind"}, "verdict")
        return POLE if kind == "pole" else IRRATIONAL
    raise CertificateFormatError(f"verdict: unknown kind {kind!r}")


def certificate_to_tree(cert: Certificate) -> dict:
    """JSON-compatible tree with all big numbers as decimal strings."""
    return {
        "version": WIRE_VERSION,
        "input": _rat_to_wire(cert.input),
        "function": cert.function,
        "verdict": _verdict_to_tree(cert.verdict),
        "steps": [_step_to_tree(s) for s in cert.steps],
    }


def certificate_from_tree(tree: object) -> Certificate:
    """Strict inverse of certificate_to_tree; raises CertificateFormatError."""
    t = _expect_keys(
        tree, {"version", "input", "function", "verdict", "steps"}, "certificate"
    )
    if _json_int(t["version"], "version") != WIRE_VERSION:
        raise CertificateFormatError(f"unsupported version {t['version']!r}")
    function = t["function"]
    if function not in FUNCTIONS:
        raise CertificateFormatError(f"unknown function {function!r}")
    if not isinstance(t["steps"], list):
        raise CertificateFormatError("steps: expected a list")
    return Certificate(
        _rat_from_wire(t["input"], "input"),
        function,
        _verdict_from_tree(t["verdict"]),
        tuple(_step_from_tree(s, f"steps[{i}]") for i, s in enumerate(t["steps"])),
    )


def to_json(cert: Certificate, indent: int | None = None) -> str:
    return json.dumps(certificate_to_tree(cert), sort_keys=True, indent=indent)


def from_json(text: str) -> Certificate:
    try:
        tree = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateFormatError(f"invalid JSON: {e}") from None
    return certificate_from_tree(tree)


def verify_certificate_json(text: str) -> VerificationResult:
    """Parse and verify; malformed input is a verification failure, not a crash."""
    try:
        cert = from_json(text)
    except CertificateFormatError as e:
        return VerificationResult(False, str(e))
    return verify_certificate(cert)
