"""Genus exponents, descent bounds and exact descent structure for
cyclic prime-degree extensions of Q.

The genus exponent is the exponent of p in the ratio of the order of
the coinvariant tame kernel of the top field to the order of the base
tame kernel.  Over Q it collapses to counting tame ramified primes
minus the rank of their Frobenius vectors on the appropriate radical,
with mod-8 corrections at p = 2 coming from the real place and the
comparison between K-theory and motivic cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import ktable
from .exactnum import FactoredInteger
from .kummer import KummerRadical, primitivity_rank, radical
from .localdata import CyclicExtensionOfQ, local_invariants

H_I = "H_i"
VANDIVER = "vandiver"
UNRAMIFIED_AT_INFINITY = "unramified_at_infinity"


@dataclass(frozen=True)
class GenusReport:
    """Outcome of a genus computation for one extension shape and twist.

    exponent_low == exponent_high always holds here: every case the
    library evaluates either needs no hypothesis or is pinned by the
    recorded ones (listed under assumptions, never silently used).
    norm_index is p**t for the rank t of the tame Frobenius vectors.
    """

    ext: CyclicExtensionOfQ
    i: int
    per_prime: tuple[tuple[int, tuple[int, int]], ...]  # ell -> (e_i, e_prime)
    t: int
    r: int
    s_i: int
    delta_variant_used: bool
    exponent_low: int
    exponent_high: int
    norm_index: int
    assumptions: frozenset[str]

    def __post_init__(self):
        if self.exponent_low > self.exponent_high:
            raise ValueError("empty exponent interval")
        if not self.ext.infinity_ramified and self.exponent_low != self.exponent_high:
            raise ValueError("exponent is exact when infinity is unramified")

    @property
    def exponent(self) -> int:
        return self.exponent_low


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Finite abelian group as an ascending divisibility chain of cyclic
    orders; the empty chain is the trivial group."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.cyclic_orders, self.cyclic_orders[1:]):
            if b % a != 0:
                raise ValueError("orders must form a divisibility chain")
        if any(n < 2 for n in self.cyclic_orders):
            raise ValueError("cyclic orders must be >= 2")

    @property
    def order(self) -> int:
        n = 1
        for d in self.cyclic_orders:
            n *= d
        return n


@dataclass(frozen=True)
class NotApplicable:
    reason: str


@dataclass(frozen=True)
class DescentBounds:
    """Lower bounds for the kernel and cokernel of the restriction map
    on tame kernels.  Each bound is a prime-power product over the
    maximal primitive tame set T, times a signed 2-power kept in its own
    exponent field; the *_lower values are clamped at 1 but the 2-power
    is never silently dropped."""

    coker_lower: FactoredInteger
    ker_lower: FactoredInteger
    T_used: frozenset[int]
    coker_two_exponent: int
    ker_two_exponent: int
    assumptions: frozenset[str]


def _signature_corank(i: int, r: int) -> int:
    # cokernel rank s_i of the partial signature map over Q: -1 is a
    # 2-unit with negative sign, so s_i = 0 at odd twists; at even twists
    # the map is trivial and s_i = r
    return 0 if i % 2 else r


def _per_prime(ext: CyclicExtensionOfQ, i: int):
    rows = []
    for ell in ext.ramified_finite:
        data = local_invariants(ext, ell, i)
        rows.append((ell, (data.e_i, data.e_prime)))
    return tuple(rows)


def genus_exponent(ext: CyclicExtensionOfQ, i: int) -> GenusReport:
    """Exponent of p in |H2_M(o_L, Z(i))_G| / |H2_M(Z, Z(i))|.

    Odd p: #tame - t.  p = 2, even i: #tame - t - r.  p = 2, odd i:
    #tame - t unconditionally when infinity is unramified, and
    #tame + s_i - t_plus under hypothesis (H_i) otherwise, with t_plus
    the rank on the totally positive radical.  (H_i) is recorded as an
    assumption, never verified.
    """
    if i < 2:
        raise ValueError("twist i must be >= 2")
    p = ext.p
    tame = sorted(ext.tame_ramified)
    r = ext.r
    s_i = _signature_corank(i, r)
    assumptions: set[str] = set()
    plus = False
    if p == 2 and i % 2 == 1:
        if ext.infinity_ramified:
            plus = True
            assumptions.add(H_I)
            rad = radical(2, i, plus_variant=True)
            t = primitivity_rank(rad, tame).t
            exponent = len(tame) + s_i - t
        else:
            assumptions.add(UNRAMIFIED_AT_INFINITY)
            rad = radical(2, i)
            t = primitivity_rank(rad, tame).t
            exponent = len(tame) - t
    elif p == 2:
        rad = radical(2, i)
        t = primitivity_rank(rad, tame).t
        exponent = len(tame) - t - r
    else:
        rad = radical(p, i)
        if rad.conditional_on_vandiver:
            assumptions.add(VANDIVER)
        t = primitivity_rank(rad, tame).t
        exponent = len(tame) - t
    return GenusReport(
        ext=ext, i=i, per_prime=_per_prime(ext, i), t=t, r=r, s_i=s_i,
        delta_variant_used=plus, exponent_low=exponent, exponent_high=exponent,
        norm_index=p**t, assumptions=frozenset(assumptions),
    )


def k_genus_ratio(ext: CyclicExtensionOfQ, i: int) -> GenusReport:
    """Exponent of p in |K_{2i-2}(o_L)_G| / |K_{2i-2}(Z)|.

    For odd p this is the genus exponent.  For p = 2 the motivic value
    is corrected by the comparison table on 2i-2 mod 8: untouched at
    2 mod 8, shifted by r at 6 mod 8, and expressed through the totally
    positive rank (under (H_i)) at odd twists, except that an odd twist
    with 2i-2 = 0 mod 8 and no real ramification stays unconditional.
    """
    base = genus_exponent(ext, i)
    if ext.p != 2:
        return base
    tame = sorted(ext.tame_ramified)
    r = ext.r
    m8 = (2 * i - 2) % 8
    assumptions = set(base.assumptions)
    if m8 == 2:
        exponent, t, plus = base.exponent, base.t, False
    elif m8 == 6:
        exponent, t, plus = base.exponent + r, base.t, False
    elif m8 == 0 and not ext.infinity_ramified:
        exponent, t, plus = base.exponent, base.t, False
    else:
        # odd twist: the K norm index has the 2-part of the totally
        # positive one, so the plus rank applies whatever r is
        t = primitivity_rank(radical(2, i, plus_variant=True), tame).t
        exponent = len(tame) + base.s_i - t
        plus = True
        assumptions.add(H_I)
        assumptions.discard(UNRAMIFIED_AT_INFINITY)
    return GenusReport(
        ext=ext, i=i, per_prime=base.per_prime, t=t, r=r, s_i=base.s_i,
        delta_variant_used=plus, exponent_low=exponent, exponent_high=exponent,
        norm_index=2**t, assumptions=frozenset(assumptions),
    )


def descent_bounds(ext: CyclicExtensionOfQ, i: int) -> DescentBounds:
    """Lower bounds |coker f_i| >= prod_T e_v^(i-1) (times 2^(s_i - r)
    at odd twists) and |ker f_i| >= 2^(+/-r) prod_T e_v', where T is the
    maximal primitive subset of the tame ramified primes."""
    if i < 2:
        raise ValueError("twist i must be >= 2")
    p = ext.p
    rad = radical(p, i)
    report = primitivity_rank(rad, sorted(ext.tame_ramified))
    T = report.maximal_subset
    r = ext.r
    s_i = _signature_corank(i, r)
    coker_prod = 1
    for ell in T:
        coker_prod *= gcd(p, ell ** (i - 1) - 1)
    ker_prod = p ** len(T)  # e_v' = p at every tame prime
    coker_two = s_i - r if i % 2 else 0
    ker_two = -r if i % 2 else r
    assumptions = frozenset({VANDIVER} if rad.conditional_on_vandiver else ())
    return DescentBounds(
        coker_lower=_clamped(coker_prod, coker_two),
        ker_lower=_clamped(ker_prod, ker_two),
        T_used=T,
        coker_two_exponent=coker_two,
        ker_two_exponent=ker_two,
        assumptions=assumptions,
    )


def _clamped(product: int, two_exponent: int) -> FactoredInteger:
    value = Fraction(product) * Fraction(2) ** two_exponent
    return FactoredInteger.from_int(max(1, int(value)))


def exact_descent_structure(ext: CyclicExtensionOfQ, i: int,
                            assume_vandiver: bool = False):
    """Exact kernel/cokernel structure of the restriction map f_i when
    descent is fully controlled: both are the direct sum of Z/e_v' over
    the ramified finite primes.

    Applicable only when p does not divide the base order and the whole
    tame set is primitive; otherwise a NotApplicable naming the violated
    condition is returned.  Requires no real ramification.
    """
    if i < 2:
        raise ValueError("twist i must be >= 2")
    if ext.infinity_ramified:
        raise ValueError("exact descent structure needs infinity unramified")
    p = ext.p
    if i % 2 == 1 and p != 2 and not assume_vandiver:
        return NotApplicable(
            "odd part of the base order is conjectural at odd twists; "
            "pass assume_vandiver to proceed"
        )
    base = ktable.h2_order_Z(i, assume_vandiver)
    if base.h2_order.value % p == 0:
        return NotApplicable(f"{p} divides the base order {base.h2_order.value}")
    report = primitivity_rank(radical(p, i), sorted(ext.tame_ramified))
    if not report.independent:
        return NotApplicable(
            f"tame set is not primitive (rank {report.t} of {len(ext.tame_ramified)})"
        )
    orders = tuple(
        data[1][1] for data in _per_prime(ext, i) if data[1][1] > 1
    )
    return AbelianGroupStructure(cyclic_orders=orders)
