"""Laurent binomial difference ideals presented by partial characters.

A proper ideal is stored as its support lattice (a canonical GHNF) with
one constant per basis column; the generators Y^g_i - d_i then form a
regular coherent chain.  All pseudo-remainder arithmetic happens on
supports with constant tracking, so ideal elements are never expanded
into polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .constants import (
    FieldConst,
    SigmaConfig,
    kth_roots,
    o_m,
    pow_zx,
    sigma_inv_pow,
)
from .polyzx import IntPoly
from .zx_lattice import (
    GhnfBasis,
    LatVec,
    DimensionError,
    ghnf_track,
    gker,
    grem_track,
    lattice_equal,
)
from . import saturation

__all__ = [
    "NotABinomial",
    "NotReflexivePrime",
    "UNIT",
    "UnitIdeal",
    "LaurentBinomial",
    "PartialCharacter",
    "is_unit",
    "normalize_binomial",
    "make_character",
    "charset",
    "member",
    "prem_binomial",
    "is_prime",
    "is_reflexive",
    "is_wellmixed",
    "is_perfect",
    "reflexive_closure",
    "wellmixed_closure",
    "perfect_closure",
    "dec_laurent",
    "dimension",
]


class NotABinomial(ValueError):
    """Raised when two terms collapse to fewer than two monomials."""


class NotReflexivePrime(ValueError):
    """Raised when an operation needs a reflexive prime ideal."""


class UnitIdeal:
    """Marker for the unit ideal [1]."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNIT"


UNIT = UnitIdeal()


def is_unit(result) -> bool:
    return isinstance(result, UnitIdeal)


@dataclass(frozen=True)
class LaurentBinomial:
    """A normal-form Laurent binomial Y^support - constant.

    The support is normal (positive leading coefficient in its last
    nonzero coordinate) or zero; a zero support encodes the constant
    binomial 1 - c, which is only proper when c = 1.
    """

    support: LatVec
    constant: FieldConst

    def __str__(self) -> str:
        from .textio import laurent_binomial_to_str

        return laurent_binomial_to_str(self)


def normalize_binomial(
    a_coeff: FieldConst, a_exp: LatVec, b_coeff: FieldConst, b_exp: LatVec
) -> LaurentBinomial:
    """Normal form of a*Y^a_exp + b*Y^b_exp."""
    if a_exp.n != b_exp.n:
        raise DimensionError("mixed dimensions in binomial terms")
    diff = a_exp - b_exp
    if not diff:
        raise NotABinomial("the two terms share one monomial")
    if diff.is_normal():
        return LaurentBinomial(diff, (b_coeff / a_coeff) * FieldConst.root_of_unity(2))
    return LaurentBinomial(-diff, (a_coeff / b_coeff) * FieldConst.root_of_unity(2))


class PartialCharacter:
    """A proper Laurent binomial ideal: lattice basis plus constants."""

    __slots__ = ("n", "sigma", "basis", "constants")

    def __init__(
        self,
        n: int,
        sigma: SigmaConfig,
        basis: GhnfBasis,
        constants: tuple[FieldConst, ...],
    ):
        if len(constants) != len(basis.columns):
            raise ValueError("one constant per basis column required")
        self.n = n
        self.sigma = sigma
        self.basis = basis
        self.constants = constants

    @property
    def binomials(self) -> tuple[LaurentBinomial, ...]:
        return tuple(
            LaurentBinomial(g, d) for g, d in zip(self.basis.columns, self.constants)
        )

    def value(self, v: LatVec) -> FieldConst | None:
        """rho(v) when v lies in the support lattice, else None."""
        r, qs = grem_track(v, self.basis)
        if r:
            return None
        out = FieldConst.one()
        for q, d in zip(qs, self.constants):
            if q:
                out = out * pow_zx(d, q, self.sigma)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PartialCharacter)
            and self.n == other.n
            and self.sigma == other.sigma
            and self.basis == other.basis
            and self.constants == other.constants
        )

    def __hash__(self) -> int:
        return hash((self.n, self.sigma, self.basis, self.constants))

    def __repr__(self) -> str:
        return "PartialCharacter(%s)" % "; ".join(str(b) for b in self.binomials)


def make_character(binomials, sigma: SigmaConfig, n: int | None = None):
    """Present [binomials] by a partial character, or UNIT if improper.

    The properness test is the kernel criterion: the ideal is proper
    exactly when every Z[x]-relation of the supports sends the constants
    to 1.  The character's basis is the canonical GHNF of the supports
    with constants pushed through the change of generators.
    """
    binomials = list(binomials)
    if n is None:
        if not binomials:
            raise ValueError("ambient dimension required for an empty system")
        n = binomials[0].support.n
    supports = []
    consts = []
    for b in binomials:
        if b.support.n != n:
            raise DimensionError("mixed dimensions in binomial system")
        if not b.support:
            if b.constant.is_one():
                continue
            return UNIT
        supports.append(b.support)
        consts.append(b.constant)
    for rel in gker(supports):
        acc = FieldConst.one()
        for q, c in zip(rel.entries, consts):
            if q:
                acc = acc * pow_zx(c, q, sigma)
        if not acc.is_one():
            return UNIT
    basis, exprs = ghnf_track(supports, n)
    out_consts = []
    for expr in exprs:
        acc = FieldConst.one()
        for q, c in zip(expr, consts):
            if q:
                acc = acc * pow_zx(c, q, sigma)
        out_consts.append(acc)
    return PartialCharacter(n, sigma, basis, tuple(out_consts))


def charset(binomials, sigma: SigmaConfig, n: int | None = None):
    """Characteristic set of [binomials]: the character's chain, or UNIT."""
    return make_character(binomials, sigma, n)


def member(b: LaurentBinomial, rho: PartialCharacter) -> bool:
    """Y^f - c lies in the ideal iff f is in the lattice and c = rho(f)."""
    if not b.support:
        return b.constant.is_one()
    value = rho.value(b.support)
    return value is not None and value == b.constant


def prem_binomial(b: LaurentBinomial, rho: PartialCharacter) -> LaurentBinomial:
    """Pseudo-remainder of a binomial against the character's chain.

    The support reduces by grem; the constant divides out the chain
    constants raised to the same cofactors.
    """
    r, qs = grem_track(b.support, rho.basis)
    c = b.constant
    for q, d in zip(qs, rho.constants):
        if q:
            c = c / pow_zx(d, q, rho.sigma)
    return LaurentBinomial(r, c)


def is_prime(rho: PartialCharacter) -> bool:
    return saturation.is_saturated(rho.basis, "z")


def is_reflexive(rho: PartialCharacter) -> bool:
    return saturation.is_saturated(rho.basis, "x")


def _forced_wellmixed_binomials(rho: PartialCharacter):
    """For each sat_Z generator (g, m), the binomial forced into any
    well-mixed ideal containing I(rho): support (x - o_m) g with constant
    a^(x - o_m) for a the principal m-th root of rho(m g).

    The root choice is irrelevant because zeta_m^(x - o_m) = 1.
    """
    tracked = saturation.sat_z(rho.basis)
    forced = []
    for g, m in zip(tracked.basis.columns, tracked.multipliers):
        if m == 1:
            continue
        value = rho.value(m * g)
        if value is None:
            raise AssertionError("multiplier certificate violated")
        root = kth_roots(value, m)[0]
        shift = IntPoly((-o_m(m, rho.sigma), 1))
        support = shift * g
        forced.append(LaurentBinomial(support, pow_zx(root, shift, rho.sigma)))
    return forced


def is_wellmixed(rho: PartialCharacter) -> bool:
    """M-saturated support lattice plus generator-level constant agreement."""
    if not saturation.is_saturated(rho.basis, "m", rho.sigma):
        return False
    for forced in _forced_wellmixed_binomials(rho):
        if not member(forced, rho):
            return False
    return not is_unit(wellmixed_closure(rho.binomials, rho.sigma, rho.n))


def is_perfect(rho: PartialCharacter) -> bool:
    if not saturation.is_saturated(rho.basis, "p", rho.sigma):
        return False
    return not is_unit(perfect_closure(rho.binomials, rho.sigma, rho.n))


def reflexive_closure(binomials, sigma: SigmaConfig, n: int | None = None):
    """Reflexive closure: adjoin sigma^{-1}-preimages of XFactor witnesses."""
    result = charset(binomials, sigma, n)
    while True:
        if is_unit(result):
            return UNIT
        wits = saturation.xfactor(result.basis)
        if not wits:
            return result
        new = list(result.binomials)
        for w in wits:
            c = FieldConst.one()
            for coeff, d in zip(w.e, result.constants):
                if coeff:
                    c = c * d**coeff
            new.append(LaurentBinomial(w.h, sigma_inv_pow(c, 1, sigma)))
        result = charset(new, sigma, result.n)


def wellmixed_closure(binomials, sigma: SigmaConfig, n: int | None = None):
    """Well-mixed closure: force (x - o_m)-multiples until stable or unit."""
    result = charset(binomials, sigma, n)
    while True:
        if is_unit(result):
            return UNIT
        forced = _forced_wellmixed_binomials(result)
        new = charset(list(result.binomials) + forced, sigma, result.n)
        if is_unit(new):
            return UNIT
        if new == result:
            return result
        result = new


def perfect_closure(binomials, sigma: SigmaConfig, n: int | None = None):
    """Perfect closure: well-mixed closure of the reflexive closure."""
    result = charset(binomials, sigma, n)
    while True:
        if is_unit(result):
            return UNIT
        step = reflexive_closure(result.binomials, sigma, result.n)
        if is_unit(step):
            return UNIT
        step = wellmixed_closure(step.binomials, sigma, step.n)
        if is_unit(step):
            return UNIT
        if step == result:
            return result
        result = step


def _character_sort_key(rho: PartialCharacter):
    return tuple(
        (tuple(str(e) for e in g.entries), str(d))
        for g, d in zip(rho.basis.columns, rho.constants)
    )


def dec_laurent(binomials, sigma: SigmaConfig, n: int | None = None) -> list[PartialCharacter]:
    """Decompose the perfect closure into reflexive prime characters.

    Empty output means the perfect closure is the unit ideal.  Branching
    adjoins, for every ZFactor witness (h, k, e), each k-th root of
    rho(k h) as the constant of a new generator with support h.
    """
    start = reflexive_closure(binomials, sigma, n)
    if is_unit(start):
        return []
    components: list[PartialCharacter] = []
    work = [list(start.binomials)]
    while work:
        system = work.pop()
        rho = charset(system, sigma, start.n)
        if is_unit(rho):
            continue
        wits = saturation.zfactor(rho.basis)
        if not wits:
            if rho not in components:
                components.append(rho)
            continue
        root_lists = []
        for w in wits:
            c = FieldConst.one()
            for q, d in zip(w.e, rho.constants):
                if q:
                    c = c * pow_zx(d, q, rho.sigma)
            root_lists.append([(w.h, r) for r in kth_roots(c, w.k)])
        for choice in itertools.product(*root_lists):
            work.append(
                list(rho.binomials)
                + [LaurentBinomial(h, r) for h, r in choice]
            )
    components.sort(key=_character_sort_key)
    return components


def dimension(rho: PartialCharacter) -> int:
    """Difference dimension n - rank for a reflexive prime character."""
    if not (is_reflexive(rho) and is_prime(rho)):
        raise NotReflexivePrime("dimension needs a reflexive prime ideal")
    return rho.n - rho.basis.rank
