"""Symmetry identities in three weights for generalized Bernoulli polynomials.

Three families of quotient generating functions, each symmetric under all
permutations of positive integer weights (w1, w2, w3), are built here as
truncated series over Q(zeta_r):

* family L23 (index i = 0..3): the three character variables carry the
  complementary weight pairs w2*w3, w1*w3, w1*w2, and i of the three
  factors are divided by the plain exponential integral at d*w1*w2*w3,

      (w1 w2 w3)^(2-i) t^(3-i) e^(w1 w2 w3 (y_1+..+y_{3-i}) t)
          * (e^(d w1 w2 w3 t) - 1)^i
      / [(e^(d w2 w3 t)-1)(e^(d w1 w3 t)-1)(e^(d w1 w2 t)-1)]
      * prod of the three character sums at scales w2 w3, w1 w3, w1 w2;

* family L13 (index i = 0..3): same shape with the variables carrying the
  single weights w1, w2, w3 (prefactor power 1-i, character sums at the
  single weights).  Substituting pair weights for single weights turns an
  L13 series into the matching L23 series with t rescaled by w1*w2*w3,
  so this family yields no further identities and is kept for that
  reduction property;

* family L12 (index 0): single weights with the common shift
  (w2 w3 + w1 w3 + w1 w2) y; (index 1): the pair-weight denominators
  divided by the single-weight ones, with no exponential shift.

Expanding a family coefficient-wise in different ways produces finite
closed sums over Bernoulli polynomial values B_{n,chi}(x) and power sums
S_k(n, chi); each way is available under a label such as "L23.2b"
(family L23, index 2, expansion route b).  Because the series are weight
symmetric, the routes evaluated at permuted weights must agree exactly;
the theorem table T1..T8 records which routes give 6, 3 or 2 distinct
expressions, and verify_theorem checks the resulting equalities at exact
rational/cyclotomic precision.

Verification of distinct instances is embarrassingly parallel: every
evaluation is pure given the per-process Bernoulli memo tables, and
sweep_verify preserves grid order for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bernoulli import char_exp_sum, gen_bernoulli_poly, power_sum
from .characters import DirichletChar, char_value
from .cyclotomic import CycloElement
from .series import TruncatedSeries, exp_series

__all__ = [
    "LambdaSpec",
    "TheoremInstance",
    "VerificationReport",
    "THEOREM_IDS",
    "EXPANSION_LABELS",
    "multinomial",
    "lambda_series",
    "lambda_series_from_integrals",
    "spec_for_label",
    "expansion_sum",
    "theorem_y_arity",
    "theorem_expressions",
    "verify_theorem",
    "sweep_verify",
]


def multinomial(n: int, k: int, l: int, m: int) -> int:
    """Trinomial coefficient n!/(k! l! m!) with k + l + m = n."""
    if min(k, l, m) < 0 or k + l + m != n:
        raise ValueError(f"invalid multinomial index ({n}; {k}, {l}, {m})")
    return comb(n, k) * comb(n - k, l)


# ---------------------------------------------------------------------------
# quotient generating functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LambdaSpec:
    """Which quotient family/index to build, with weights and y-arguments.

    y-argument arity: families L23 and L13 take 3 - index arguments,
    L12 index 0 takes one, L12 index 1 takes none.
    """

    family: str
    index: int
    weights: tuple[int, int, int]
    ys: tuple[Fraction, ...]

    def __post_init__(self):
        if self.family not in ("L23", "L13", "L12"):
            raise ValueError(f"unknown family {self.family!r}")
        top = 3 if self.family in ("L23", "L13") else 1
        if not 0 <= self.index <= top:
            raise ValueError(f"index {self.index} out of range for {self.family}")
        w = tuple(int(x) for x in self.weights)
        if len(w) != 3 or min(w) < 1:
            raise ValueError("weights must be three positive integers")
        ys = tuple(Fraction(y) for y in self.ys)
        arity = self.y_arity(self.family, self.index)
        if len(ys) != arity:
            raise ValueError(
                f"{self.family} index {self.index} takes {arity} y-arguments, got {len(ys)}"
            )
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "ys", ys)

    @staticmethod
    def y_arity(family: str, index: int) -> int:
        if family in ("L23", "L13"):
            return 3 - index
        return 1 if index == 0 else 0


def _product(series_list):
    result = series_list[0]
    for s in series_list[1:]:
        result = result * s
    return result


def _exp_minus_one_over_t(c, order: int) -> TruncatedSeries:
    return (exp_series(c, order + 1) - 1).shift_down(1)


def lambda_series(spec: LambdaSpec, chi: DirichletChar, order: int) -> TruncatedSeries:
    """Truncated series of the quotient's explicit closed form.

    Every denominator factor e^(c t) - 1 is divided by t (shift_down)
    before inversion, so the t-power cancellation between numerator and
    denominator is handled structurally and asserted, never left to a
    division that could silently drop terms.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    d = chi.modulus
    w1, w2, w3 = spec.weights
    big = w1 * w2 * w3
    pairs = (w2 * w3, w1 * w3, w1 * w2)
    i = spec.index
    if spec.family in ("L23", "L13"):
        scales = pairs if spec.family == "L23" else (w1, w2, w3)
        pref_power = (2 if spec.family == "L23" else 1) - i
        # numerator carries t^(3-i) explicitly plus valuation i from the
        # (e^(d*big*t)-1)^i factor; the denominator product has valuation 3
        assert (3 - i) + i - 3 == 0, "t-degree bookkeeping violated"
        shift = big * sum(spec.ys, Fraction(0))
        num = exp_series(shift, order)
        if i:
            num = num * _exp_minus_one_over_t(d * big, order).pow(i)
        den = _product([_exp_minus_one_over_t(d * s, order) for s in scales])
        result = num * den.invert()
        result = _product([result] + [char_exp_sum(chi, s, order) for s in scales])
        return result.scale(Fraction(big) ** pref_power)
    if i == 0:
        # single weights, common shift (w2 w3 + w1 w3 + w1 w2) * y
        shift = sum(pairs) * spec.ys[0]
        num = exp_series(shift, order)
        den = _product([_exp_minus_one_over_t(d * w, order) for w in (w1, w2, w3)])
        result = num * den.invert()
        result = _product([result] + [char_exp_sum(chi, w, order) for w in (w1, w2, w3)])
        return result.scale(big)
    # pair-weight numerators over single-weight denominators, no shift
    assert 3 - 3 == 0, "t-degree bookkeeping violated"
    num = _product([_exp_minus_one_over_t(d * p, order) for p in pairs])
    den = _product([_exp_minus_one_over_t(d * w, order) for w in (w1, w2, w3)])
    result = num * den.invert()
    result = _product([result] + [char_exp_sum(chi, w, order) for w in (w1, w2, w3)])
    return result.scale(Fraction(1, big))


def _char_integral(chi: DirichletChar, scale: int, shift, order: int) -> TruncatedSeries:
    # Closed form of the character-weighted exponential integral:
    # scale * e^(scale*shift*t) * t/(e^(d*scale*t) - 1) * charsum(scale).
    d = chi.modulus
    result = _exp_minus_one_over_t(d * scale, order).invert()
    result = result * char_exp_sum(chi, scale, order)
    shift = Fraction(shift)
    if shift:
        result = result * exp_series(scale * shift, order)
    return result.scale(scale)


def _plain_integral(c: int, order: int) -> TruncatedSeries:
    # Closed form of the plain exponential integral: c*t/(e^(c*t) - 1).
    return _exp_minus_one_over_t(c, order).invert().scale(c)


def lambda_series_from_integrals(
    spec: LambdaSpec, chi: DirichletChar, order: int
) -> TruncatedSeries:
    """Same quotient, built as a product of per-variable integral factors.

    Independent construction route: each integration variable contributes
    its own closed-form factor and the denominators divide as inverted
    series, instead of assembling one global closed form.  Must agree
    with lambda_series coefficient-for-coefficient.
    """
    d = chi.modulus
    w1, w2, w3 = spec.weights
    big = w1 * w2 * w3
    pairs = (w2 * w3, w1 * w3, w1 * w2)
    singles = (w1, w2, w3)
    i = spec.index
    ys = spec.ys
    if spec.family in ("L23", "L13"):
        scales = pairs if spec.family == "L23" else singles
        # the y_j shift belongs to variable j: scale_j * shift_j = big * y_j
        factors = []
        for j, s in enumerate(scales):
            shift = Fraction(big, s) * ys[j] if j < 3 - i else Fraction(0)
            factors.append(_char_integral(chi, s, shift, order))
        result = _product(factors)
        if i:
            result = result * _plain_integral(d * big, order).invert().pow(i)
            result = result.scale(d**i)
        return result
    if i == 0:
        shifts = (w2 * ys[0], w3 * ys[0], w1 * ys[0])
        return _product(
            [_char_integral(chi, w, s, order) for w, s in zip(singles, shifts)]
        )
    factors = [_char_integral(chi, w, 0, order) for w in singles]
    factors += [_plain_integral(d * p, order).invert() for p in pairs]
    return _product(factors).scale(d**3)


# ---------------------------------------------------------------------------
# coefficient expansions
# ---------------------------------------------------------------------------

EXPANSION_LABELS = (
    "L23.0",
    "L23.1a",
    "L23.1b",
    "L23.2a",
    "L23.2b",
    "L23.2c",
    "L23.3",
    "L12.0",
    "L12.1",
)

_LABEL_FAMILY = {
    "L23.0": ("L23", 0),
    "L23.1a": ("L23", 1),
    "L23.1b": ("L23", 1),
    "L23.2a": ("L23", 2),
    "L23.2b": ("L23", 2),
    "L23.2c": ("L23", 2),
    "L23.3": ("L23", 3),
    "L12.0": ("L12", 0),
    "L12.1": ("L12", 1),
}


def spec_for_label(label: str, weights, ys) -> LambdaSpec:
    """LambdaSpec whose series has the labeled expansion as egf coefficients."""
    if label not in _LABEL_FAMILY:
        raise ValueError(f"unknown expansion label {label!r}")
    family, index = _LABEL_FAMILY[label]
    return LambdaSpec(family, index, tuple(weights), tuple(ys))


def _triples(n: int):
    for k in range(n + 1):
        for l in range(n - k + 1):
            yield k, l, n - k - l


def _wpows(w: int, lo: int, hi: int) -> dict[int, Fraction]:
    f = Fraction(w)
    return {e: f**e for e in range(lo, hi + 1)}


def expansion_sum(
    label: str,
    n: int,
    chi: DirichletChar,
    weights,
    ys,
    perturb: bool = False,
) -> CycloElement:
    """Exact value of one closed-sum expansion route at degree n.

    The nine routes expand the quotient families into finite sums of
    multinomial-weighted products of B_{k,chi}(x) values and power sums,
    exactly as the series coefficients factor; negative weight exponents
    (k + l - 1 with k = l = 0 and similar) are exact rationals.

    perturb adds one to a single weight exponent and exists only as a
    sensitivity hook for mutation tests: a perturbed route must break at
    least one symmetry instance, guarding against vacuously green checks.
    """
    if label not in _LABEL_FAMILY:
        raise ValueError(f"unknown expansion label {label!r}")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    w1, w2, w3 = (int(w) for w in weights)
    ys = tuple(Fraction(y) for y in ys)
    arity = LambdaSpec.y_arity(*_LABEL_FAMILY[label])
    if len(ys) != arity:
        raise ValueError(f"label {label} takes {arity} y-arguments, got {len(ys)}")
    d = chi.modulus
    bump = 1 if perturb else 0
    acc = CycloElement.zero(chi.order)

    def B(k, x):
        return gen_bernoulli_poly(chi, k, x)

    def S(k, limit):
        return power_sum(chi, k, limit)

    if label == "L23.0":
        y1, y2, y3 = ys
        p1, p2, p3 = _wpows(w1, 0, n + bump), _wpows(w2, 0, n), _wpows(w3, 0, n)
        bk = [B(k, w1 * y1) for k in range(n + 1)]
        bl = [B(l, w2 * y2) for l in range(n + 1)]
        bm = [B(m, w3 * y3) for m in range(n + 1)]
        for k, l, m in _triples(n):
            scalar = multinomial(n, k, l, m) * p1[l + m + bump] * p2[k + m] * p3[k + l]
            acc = acc + (bk[k] * bl[l] * bm[m]).scale(scalar)
        return acc

    if label == "L23.1a":
        y1, y2 = ys
        p1, p2, p3 = _wpows(w1, 0, n + bump), _wpows(w2, 0, n), _wpows(w3, -1, n)
        bk = [B(k, w1 * y1) for k in range(n + 1)]
        bl = [B(l, w2 * y2) for l in range(n + 1)]
        sm = [S(m, w3 * d - 1) for m in range(n + 1)]
        for k, l, m in _triples(n):
            scalar = (
                multinomial(n, k, l, m) * p1[l + m + bump] * p2[k + m] * p3[k + l - 1]
            )
            acc = acc + (bk[k] * bl[l] * sm[m]).scale(scalar)
        return acc

    if label == "L23.1b":
        # folded route: the third variable's quotient is absorbed into a
        # character sum over a < w3*d shifting the second argument
        y1, y2 = ys
        r = Fraction(w2, w3)
        p1, p2 = _wpows(w1, 0, n), _wpows(w2, 0, n)
        for k in range(n + 1):
            inner = CycloElement.zero(chi.order)
            for a in range(w3 * d):
                ca = char_value(chi, a)
                if not ca.is_zero():
                    inner = inner + ca * B(n - k, w2 * y2 + r * a)
            term = B(k, w1 * y1) * inner
            acc = acc + term.scale(comb(n, k) * p1[n - k] * p2[k])
        return acc.scale(Fraction(w3) ** (n - 1 + bump))

    if label == "L23.2a":
        (y1,) = ys
        p1, p2, p3 = _wpows(w1, 0, n + bump), _wpows(w2, -1, n), _wpows(w3, -1, n)
        bk = [B(k, w1 * y1) for k in range(n + 1)]
        sl = [S(l, w2 * d - 1) for l in range(n + 1)]
        sm = [S(m, w3 * d - 1) for m in range(n + 1)]
        for k, l, m in _triples(n):
            scalar = (
                multinomial(n, k, l, m)
                * p1[l + m + bump]
                * p2[k + m - 1]
                * p3[k + l - 1]
            )
            acc = acc + (bk[k] * sl[l] * sm[m]).scale(scalar)
        return acc

    if label == "L23.2b":
        (y1,) = ys
        r = Fraction(w1, w2)
        p1, p3 = _wpows(w1, 0, n), _wpows(w3, -1, n)
        for k in range(n + 1):
            inner = CycloElement.zero(chi.order)
            for a in range(w2 * d):
                ca = char_value(chi, a)
                if not ca.is_zero():
                    inner = inner + ca * B(k, w1 * y1 + r * a)
            term = inner * S(n - k, w3 * d - 1)
            acc = acc + term.scale(comb(n, k) * p1[n - k] * p3[k - 1])
        return acc.scale(Fraction(w2) ** (n - 1 + bump))

    if label == "L23.2c":
        (y1,) = ys
        r2, r3 = Fraction(w1, w2), Fraction(w1, w3)
        for a in range(w2 * d):
            for b in range(w3 * d):
                cab = char_value(chi, a * b)
                if not cab.is_zero():
                    acc = acc + cab * B(n, w1 * y1 + r2 * a + r3 * b)
        return acc.scale(Fraction(w2 * w3) ** (n - 1 + bump))

    if label == "L23.3":
        p1 = _wpows(w1, -1, n + bump)
        p2, p3 = _wpows(w2, -1, n), _wpows(w3, -1, n)
        sk = [S(k, w1 * d - 1) for k in range(n + 1)]
        sl = [S(l, w2 * d - 1) for l in range(n + 1)]
        sm = [S(m, w3 * d - 1) for m in range(n + 1)]
        for k, l, m in _triples(n):
            scalar = (
                multinomial(n, k, l, m)
                * p1[l + m - 1 + bump]
                * p2[k + m - 1]
                * p3[k + l - 1]
            )
            acc = acc + (sk[k] * sl[l] * sm[m]).scale(scalar)
        return acc

    if label == "L12.0":
        (y,) = ys
        p1, p2, p3 = _wpows(w1, 0, n + bump), _wpows(w2, 0, n), _wpows(w3, 0, n)
        bk = [B(k, w2 * y) for k in range(n + 1)]
        bl = [B(l, w3 * y) for l in range(n + 1)]
        bm = [B(m, w1 * y) for m in range(n + 1)]
        for k, l, m in _triples(n):
            scalar = multinomial(n, k, l, m) * p1[k + bump] * p2[l] * p3[m]
            acc = acc + (bk[k] * bl[l] * bm[m]).scale(scalar)
        return acc

    # L12.1
    p1 = _wpows(w1, -1, n + bump)
    p2, p3 = _wpows(w2, -1, n), _wpows(w3, -1, n)
    sk = [S(k, w2 * d - 1) for k in range(n + 1)]
    sl = [S(l, w3 * d - 1) for l in range(n + 1)]
    sm = [S(m, w1 * d - 1) for m in range(n + 1)]
    for k, l, m in _triples(n):
        scalar = (
            multinomial(n, k, l, m) * p1[k - 1 + bump] * p2[l - 1] * p3[m - 1]
        )
        acc = acc + (sk[k] * sl[l] * sm[m]).scale(scalar)
    return acc


# ---------------------------------------------------------------------------
# theorem orbits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _TheoremDef:
    label: str
    perms: tuple[tuple[int, int, int], ...]
    y_arity: int
    # permuted variants that collapse onto a displayed expression by an
    # index renaming of the summation variables, and which one each equals
    collapsed: tuple[tuple[int, int, int], ...] = ()
    collapsed_into: tuple[int, ...] = ()


# Display order of the expressions follows the identity statements: each
# theorem lists the base route evaluated at these weight substitutions
# (i, j, k) meaning (w1, w2, w3) -> (w_i, w_j, w_k).
_THEOREMS: dict[str, _TheoremDef] = {
    "T1": _TheoremDef(
        "L23.0",
        ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)),
        3,
    ),
    "T2": _TheoremDef(
        "L23.1a",
        ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 2, 1), (3, 1, 2)),
        2,
    ),
    "T3": _TheoremDef(
        "L23.1b",
        ((3, 2, 1), (2, 3, 1), (3, 1, 2), (1, 3, 2), (2, 1, 3), (1, 2, 3)),
        2,
    ),
    "T4": _TheoremDef(
        "L23.2a",
        ((1, 2, 3), (2, 3, 1), (3, 1, 2)),
        1,
        collapsed=((1, 3, 2), (2, 1, 3), (3, 2, 1)),
        collapsed_into=(0, 1, 2),
    ),
    "T5": _TheoremDef(
        "L23.2b",
        ((2, 1, 3), (3, 1, 2), (1, 2, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1)),
        1,
    ),
    "T6": _TheoremDef("L23.2c", ((3, 1, 2), (1, 2, 3), (2, 3, 1)), 1),
    "T7": _TheoremDef("L12.0", ((3, 1, 2), (2, 1, 3)), 1),
    "T8": _TheoremDef(
        "L12.1",
        ((3, 1, 2), (2, 1, 3)),
        0,
        collapsed=((1, 2, 3), (2, 3, 1), (1, 3, 2), (3, 2, 1)),
        collapsed_into=(0, 0, 1, 1),
    ),
}

THEOREM_IDS = tuple(_THEOREMS)


def theorem_y_arity(theorem: str) -> int:
    return _THEOREMS[theorem].y_arity


def _permute(weights, perm):
    return tuple(weights[p - 1] for p in perm)


@dataclass(frozen=True)
class TheoremInstance:
    """One concrete check: a theorem at fixed character, degree, weights, ys."""

    theorem: str
    chi: DirichletChar
    n: int
    weights: tuple[int, int, int]
    ys: tuple[Fraction, ...]

    def __post_init__(self):
        if self.theorem not in _THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem!r}")
        if self.n < 0:
            raise ValueError("degree must be nonnegative")
        w = tuple(int(x) for x in self.weights)
        if len(w) != 3 or min(w) < 1:
            raise ValueError("weights must be three positive integers")
        ys = tuple(Fraction(y) for y in self.ys)
        arity = _THEOREMS[self.theorem].y_arity
        if len(ys) != arity:
            raise ValueError(
                f"{self.theorem} takes {arity} y-arguments, got {len(ys)}"
            )
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "ys", ys)


@dataclass
class VerificationReport:
    """Exact expression values for one instance plus the equality verdict."""

    instance: TheoremInstance
    values: list[CycloElement]
    all_equal: bool
    first_mismatch: tuple[int, int] | None
    extras: dict

    @property
    def passed(self) -> bool:
        return self.all_equal


def theorem_expressions(
    instance: TheoremInstance, perturb: bool = False
) -> list[CycloElement]:
    """The theorem's expressions in display order, each evaluated exactly."""
    spec = _THEOREMS[instance.theorem]
    return [
        expansion_sum(
            spec.label,
            instance.n,
            instance.chi,
            _permute(instance.weights, perm),
            instance.ys,
            perturb=perturb,
        )
        for perm in spec.perms
    ]


def _t3_printed_line5(instance: TheoremInstance) -> CycloElement:
    # The fifth displayed expression of the six-expression folded-route
    # identity, with the inner shift ratio written w1/w2 instead of the
    # orbit-consistent w1/w3.  Evaluated verbatim so the discrepancy can
    # be reported empirically instead of guessed at.
    chi = instance.chi
    n = instance.n
    w1, w2, w3 = instance.weights
    y1, y2 = instance.ys
    d = chi.modulus
    r = Fraction(w1, w2)
    acc = CycloElement.zero(chi.order)
    for k in range(n + 1):
        inner = CycloElement.zero(chi.order)
        for a in range(w3 * d):
            ca = char_value(chi, a)
            if not ca.is_zero():
                inner = inner + ca * gen_bernoulli_poly(chi, n - k, w1 * y2 + r * a)
        term = gen_bernoulli_poly(chi, k, w2 * y1) * inner
        acc = acc + term.scale(comb(n, k) * Fraction(w2) ** (n - k) * Fraction(w1) ** k)
    return acc.scale(Fraction(w3) ** (n - 1))


def verify_theorem(instance: TheoremInstance, perturb: bool = False) -> VerificationReport:
    """Evaluate all expressions of one instance and report exact equality.

    Also confirms the orbit collapses: the permuted variants that a
    summation-index renaming folds onto a displayed expression (three for
    T4, four for T8) are evaluated and compared, and for T3 the printed
    fifth-line variant with the off-pattern shift ratio is probed whenever
    w2 != w3.  Inequality is reported, never raised.
    """
    values = theorem_expressions(instance, perturb=perturb)
    all_equal = True
    first_mismatch = None
    for idx in range(1, len(values)):
        if not (values[idx] == values[0]):
            all_equal = False
            first_mismatch = (0, idx)
            break
    extras: dict = {}
    spec = _THEOREMS[instance.theorem]
    if spec.collapsed:
        collapsed_vals = [
            expansion_sum(
                spec.label,
                instance.n,
                instance.chi,
                _permute(instance.weights, perm),
                instance.ys,
                perturb=perturb,
            )
            for perm in spec.collapsed
        ]
        extras["collapsed_variants_equal"] = all(
            v == values[t] for v, t in zip(collapsed_vals, spec.collapsed_into)
        )
    if instance.theorem == "T3" and not perturb:
        w1, w2, w3 = instance.weights
        applies = w2 != w3
        extras["printed_line5_applies"] = applies
        if applies:
            printed = _t3_printed_line5(instance)
            extras["printed_line5_matches"] = bool(printed == values[4])
    return VerificationReport(
        instance=instance,
        values=values,
        all_equal=all_equal,
        first_mismatch=first_mismatch,
        extras=extras,
    )


def _verify_star(args):
    instance, perturb = args
    return verify_theorem(instance, perturb=perturb)


def sweep_verify(
    instances, jobs: int = 1, perturb: bool = False
) -> list[VerificationReport]:
    """Verify a finite grid of instances, preserving input order.

    With jobs > 1 the instances are checked in a process pool; each worker
    warms its own memo tables.  Report order matches instance order for
    any worker count.
    """
    instances = list(instances)
    if not instances:
        return []
    if jobs <= 1 or len(instances) == 1:
        return [verify_theorem(inst, perturb=perturb) for inst in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, len(instances) // (jobs * 4))
        return list(
            pool.map(
                _verify_star,
                [(inst, perturb) for inst in instances],
                chunksize=chunk,
            )
        )
