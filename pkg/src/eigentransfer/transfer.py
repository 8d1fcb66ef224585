"""Transfer maps from a product of general linear blocks to a single block.

The source group is a product of general linear groups with block sizes
``(n_1, ..., n_r)``; the target is a single block of size ``n = sum(n_i)``.
Both share a diagonal torus of rank ``n``, so every map here is plain exact
arithmetic on length-``n`` tuples:

* ``refinement_pullback`` moves each source character value to the target slot
  chosen by a block-order-preserving permutation ``sigma`` and multiplies in
  the unramified twist ``M`` on blocks whose complementary size ``n - n_i`` is
  odd (the twist symbol is trivial on even blocks).
* ``refinement_pullback_normalized`` additionally multiplies by the source
  half-modulus at the source slot and divides by the target half-modulus at
  the target slot, so that induction normalisations match on both sides.
* ``weight_shift`` / ``weight_pullback`` implement the affine map on integer
  weights: entry ``p`` of the result is ``shift[p] + k[sigma^-1(p)]`` where
  the shift depends only on the source block occupying flat position ``p``,
  via ``alpha·[n - n_i odd] + (n_i - n)/2 + offset_i``.
* ``atkin_lehner_pullback`` combines the normalized refinement map with the
  uniformizer power ``W^shift``, giving the transfer of eigenvalue systems on
  the commutative double-coset algebra.
* ``archimedean_transfer`` is the discrete-series recipe: shift each weight
  entry by the half-sum data of its block, sort strictly descending, and
  unshift with the target half-sum; collisions mean no transfer exists.

``verify_transfer_compatibility`` checks, with fully generic character
symbols, that these maps fit together: the combined map factors as
(refinement part) x (weight part) on all dominant generator cocharacters, the
two routes through the modulus normalisation agree, and the weight shifts are
integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

from .errors import (
    InvalidSigma,
    NonIntegralShift,
    NotRelevant,
    NotSymmetric,
    SizeMismatch,
)
from .laurent import LaurentPoly
from .monomial import (
    Monomial,
    RESIDUE_SYMBOL,
    UNIFORMIZER_SYMBOL,
    valid_symbol,
)
from .tori import (
    AlgebraicWeight,
    CocharVector,
    GroupShape,
    UnramifiedCharacter,
    modulus_half,
)

__all__ = [
    "DEFAULT_TWIST_SYMBOL",
    "TransferConfig",
    "CheckResult",
    "TransferReport",
    "ArchimedeanTransfer",
    "invert_permutation",
    "block_order_preserving_permutations",
    "dominant_generators",
    "iota_sigma_pullback",
    "refinement_pullback",
    "refinement_pullback_normalized",
    "weight_shift",
    "weight_pullback",
    "weight_character_pullback",
    "atkin_lehner_pullback",
    "archimedean_transfer",
    "archimedean_sigma",
    "satake_transfer",
    "satake_param_transfer",
    "weight_map_check",
    "verify_transfer_compatibility",
]

DEFAULT_TWIST_SYMBOL = "M"


def invert_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for u, p in enumerate(sigma):
        inv[p] = u
    return tuple(inv)


def block_order_preserving_permutations(shape: GroupShape) -> Iterator[tuple[int, ...]]:
    """All permutations that are strictly increasing on each block of ``shape``.

    Yielded as tuples ``sigma`` with ``sigma[u]`` the target of flat source
    position ``u``, in lexicographic order of the chosen target sets; the
    identity comes first.  There are ``n! / prod(n_i!)`` of them.
    """

    def rec(i: int, remaining: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == shape.r:
            yield ()
            return
        for chosen in combinations(remaining, shape.blocks[i]):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(i + 1, rest):
                yield chosen + tail

    yield from rec(0, tuple(range(shape.n)))


def dominant_generators(shape: GroupShape) -> tuple[CocharVector, ...]:
    """Monoid generators of the antidominant-ordered cocharacters.

    Per block: the partial indicator vectors (1,..,1,0,..,0) of each length,
    plus the negated full-block vector.
    """
    gens = []
    for i in range(shape.r):
        block = list(shape.block_range(i))
        for j in range(1, shape.blocks[i] + 1):
            exps = [0] * shape.n
            for u in block[:j]:
                exps[u] = 1
            gens.append(CocharVector(shape, tuple(exps)))
        exps = [0] * shape.n
        for u in block:
            exps[u] = -1
        gens.append(CocharVector(shape, tuple(exps)))
    return tuple(gens)


@dataclass(frozen=True)
class TransferConfig:
    """A transfer datum: source blocks, slot permutation, half-integer alpha, twist symbol.

    ``sigma`` maps flat source positions to target positions (0-based) and must
    be strictly increasing on each source block.  ``alpha`` is the archimedean
    half-integer entering the weight shifts; values outside ``Z + 1/2`` are
    accepted and flagged per-operation when they make a shift non-integral.
    ``p_places`` and ``tracked`` are the place tags used by point-level data.
    """

    source: GroupShape
    sigma: tuple[int, ...]
    alpha: Fraction
    mu: str = DEFAULT_TWIST_SYMBOL
    p_places: tuple[str, ...] = ("p",)
    tracked: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.source, GroupShape):
            object.__setattr__(self, "source", GroupShape(tuple(self.source)))
        sigma = tuple(int(s) for s in self.sigma)
        object.__setattr__(self, "sigma", sigma)
        n = self.source.n
        if len(sigma) != n or sorted(sigma) != list(range(n)):
            raise InvalidSigma(f"sigma must be a permutation of 0..{n - 1}, got {sigma}")
        for i in range(self.source.r):
            images = [sigma[u] for u in self.source.block_range(i)]
            if any(a >= b for a, b in zip(images, images[1:])):
                raise InvalidSigma(
                    f"sigma must be strictly increasing on block {i + 1}; images {images}"
                )
        alpha = self.alpha if isinstance(self.alpha, Fraction) else Fraction(self.alpha)
        if alpha.denominator not in (1, 2):
            raise ValueError(f"alpha must be a half-integer, got {alpha}")
        object.__setattr__(self, "alpha", alpha)
        if not valid_symbol(self.mu) or self.mu in (RESIDUE_SYMBOL, UNIFORMIZER_SYMBOL):
            raise ValueError(f"mu must be a fresh symbol name, got {self.mu!r}")
        p_places = tuple(str(tag) for tag in self.p_places)
        tracked = tuple(str(tag) for tag in self.tracked)
        tags = p_places + tracked
        if len(set(tags)) != len(tags):
            raise ValueError("place tags must be pairwise distinct")
        object.__setattr__(self, "p_places", p_places)
        object.__setattr__(self, "tracked", tracked)

    @property
    def n(self) -> int:
        return self.source.n

    @cached_property
    def target(self) -> GroupShape:
        return GroupShape((self.n,))

    @cached_property
    def sigma_inverse(self) -> tuple[int, ...]:
        return invert_permutation(self.sigma)

    def twist_exponent(self, i: int) -> int:
        """1 when ``n - n_i`` is odd (the twist symbol appears), else 0."""
        return (self.n - self.source.blocks[i]) % 2

    def twist_monomial(self, i: int) -> Monomial:
        return Monomial(1, {self.mu: self.twist_exponent(i)})


def _require_source(data, cfg: TransferConfig) -> None:
    if data.shape != cfg.source:
        raise SizeMismatch(
            f"data lives on shape {data.shape} but the config source is {cfg.source}"
        )


def iota_sigma_pullback(chi: UnramifiedCharacter, sigma: Sequence[int]) -> UnramifiedCharacter:
    """Permutation action on single-block characters: value ``p`` becomes value ``sigma^-1(p)``."""
    if chi.shape.r != 1:
        raise SizeMismatch("permutation pullback acts on single-block characters")
    n = chi.shape.n
    sigma = tuple(int(s) for s in sigma)
    if len(sigma) != n:
        raise SizeMismatch(f"permutation has length {len(sigma)}, character has rank {n}")
    if sorted(sigma) != list(range(n)):
        raise InvalidSigma(f"not a permutation of 0..{n - 1}: {sigma}")
    inv = invert_permutation(sigma)
    return UnramifiedCharacter(chi.shape, tuple(chi.values[inv[p]] for p in range(n)))


def refinement_pullback(chi: UnramifiedCharacter, cfg: TransferConfig) -> UnramifiedCharacter:
    """Target value at ``p`` is ``M^[n - n_i odd] * chi(e_u)`` for ``u = sigma^-1(p)``."""
    _require_source(chi, cfg)
    values = []
    for p in range(cfg.n):
        u = cfg.sigma_inverse[p]
        i, _ = cfg.source.block_of(u)
        values.append(cfg.twist_monomial(i) * chi.values[u])
    return UnramifiedCharacter(cfg.target, tuple(values))


def refinement_pullback_normalized(
    chi: UnramifiedCharacter, cfg: TransferConfig
) -> UnramifiedCharacter:
    """Refinement transfer carrying the modulus normalisation.

    Target value at ``p`` is the plain transferred value multiplied by the
    source half-modulus at the source slot and the inverse target half-modulus
    at ``p``; equivalently the plain transfer of ``chi * delta_source^(1/2)``
    times ``delta_target^(-1/2)``.
    """
    _require_source(chi, cfg)
    half_source = modulus_half(cfg.source, 1)
    inv_half_target = modulus_half(cfg.target, -1)
    values = []
    for p in range(cfg.n):
        u = cfg.sigma_inverse[p]
        i, _ = cfg.source.block_of(u)
        values.append(
            cfg.twist_monomial(i)
            * chi.values[u]
            * half_source.values[u]
            * inv_half_target.values[p]
        )
    return UnramifiedCharacter(cfg.target, tuple(values))


def weight_shift(cfg: TransferConfig, permuted: bool = False) -> tuple[int, ...]:
    """The integer shift vector of the affine weight map.

    In flat source layout the entry at every position of block ``i`` is
    ``alpha·[n - n_i odd] + (n_i - n)/2 + offset_i``.  With ``permuted=True``
    the vector is reindexed by ``sigma`` (entry at ``sigma(u)`` is the entry at
    ``u``).  Raises when a shift fails to be an integer, which happens exactly
    when some ``n - n_i`` is odd and ``alpha`` is not in ``Z + 1/2``.
    """
    shifts: list[int] = []
    for i in range(cfg.source.r):
        c = (
            cfg.alpha * cfg.twist_exponent(i)
            + Fraction(cfg.source.blocks[i] - cfg.n, 2)
            + cfg.source.offsets[i]
        )
        if c.denominator != 1:
            raise NonIntegralShift(
                f"weight shift {c} at block {i + 1} is not an integer (alpha = {cfg.alpha})"
            )
        shifts.extend([int(c)] * cfg.source.blocks[i])
    if permuted:
        out = [0] * cfg.n
        for u, s in enumerate(shifts):
            out[cfg.sigma[u]] = s
        return tuple(out)
    return tuple(shifts)


def weight_pullback(weight: AlgebraicWeight, cfg: TransferConfig) -> AlgebraicWeight:
    """Affine weight transfer: entry ``p`` is ``shift[p] + k[sigma^-1(p)]``.

    The shift stays attached to the flat position ``p`` while the weight entry
    moves with ``sigma``; this is the convention under which the archimedean
    recipe is reproduced whenever it can be.
    """
    _require_source(weight, cfg)
    shifts = weight_shift(cfg)
    exps = tuple(
        shifts[p] + weight.exps[cfg.sigma_inverse[p]] for p in range(cfg.n)
    )
    return AlgebraicWeight(cfg.target, exps)


def weight_character_pullback(
    chi: UnramifiedCharacter, cfg: TransferConfig
) -> UnramifiedCharacter:
    """Character form of the weight map: value at ``p`` is ``W^shift[p] * chi(e_u)``."""
    _require_source(chi, cfg)
    shifts = weight_shift(cfg)
    values = tuple(
        Monomial(1, {UNIFORMIZER_SYMBOL: shifts[p]}) * chi.values[cfg.sigma_inverse[p]]
        for p in range(cfg.n)
    )
    return UnramifiedCharacter(cfg.target, values)


def atkin_lehner_pullback(
    chi: UnramifiedCharacter, cfg: TransferConfig, normalized: bool = True
) -> UnramifiedCharacter:
    """Eigenvalue-system transfer: the (normalized) refinement transfer times ``W^shift``.

    ``normalized=False`` drops the modulus normalisation and is provided as a
    negative control for the compatibility verifier.
    """
    shifts = weight_shift(cfg)
    base = refinement_pullback_normalized(chi, cfg) if normalized else refinement_pullback(chi, cfg)
    values = tuple(
        Monomial(1, {UNIFORMIZER_SYMBOL: shifts[p]}) * base.values[p]
        for p in range(cfg.n)
    )
    return UnramifiedCharacter(cfg.target, values)


@dataclass(frozen=True)
class CheckResult:
    """One named identity check; ``residuals`` lists the non-trivial ratios on failure."""

    name: str
    passed: bool
    residuals: tuple[str, ...] = ()


@dataclass(frozen=True)
class TransferReport:
    """Outcome of the compatibility verifier; passes iff every check has no residual."""

    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def _generic_character(shape: GroupShape, prefix: str, avoid: set[str]) -> UnramifiedCharacter:
    values = []
    for u in range(shape.n):
        name = f"{prefix}{u + 1}"
        while name in avoid or name in (RESIDUE_SYMBOL, UNIFORMIZER_SYMBOL):
            name += "_"
        values.append(Monomial(1, {name: 1}))
    return UnramifiedCharacter(shape, tuple(values))


def verify_transfer_compatibility(
    cfg: TransferConfig, drop_normalization: bool = False
) -> TransferReport:
    """Symbolic consistency suite for one transfer datum.

    Runs three exact checks with fully generic character symbols:

    * ``shift-integrality`` — every weight shift is an integer, so the affine
      weight map is a bijection of the integer lattice;
    * ``atkin-lehner-factorization`` — on every dominant generator
      cocharacter of the target, the eigenvalue-system transfer of a product
      ``chi * zeta`` equals the normalized refinement transfer of ``chi``
      times the weight-character transfer of ``zeta``;
    * ``modulus-duality`` — the normalized transfer of
      ``chi * delta_source^(-1/2)`` equals the plain transfer of ``chi`` times
      ``delta_target^(-1/2)``, comparing all basis values.

    ``drop_normalization=True`` replaces the eigenvalue-system transfer by its
    unnormalized variant; for more than one source block this must fail.
    """
    checks: list[CheckResult] = []
    try:
        weight_shift(cfg)
        shifts_ok = True
        checks.append(CheckResult("shift-integrality", True))
    except NonIntegralShift as err:
        shifts_ok = False
        checks.append(CheckResult("shift-integrality", False, (str(err),)))

    avoid = {cfg.mu}
    chi = _generic_character(cfg.source, "x", avoid)
    zeta = _generic_character(cfg.source, "z", avoid)

    if shifts_ok:
        lhs_char = atkin_lehner_pullback(chi * zeta, cfg, normalized=not drop_normalization)
        rhs_char = refinement_pullback_normalized(chi, cfg) * weight_character_pullback(zeta, cfg)
        residuals = []
        for gen in dominant_generators(cfg.target):
            ratio = lhs_char.eval(gen) * rhs_char.eval(gen).inverse()
            if not ratio.is_one():
                residuals.append(f"t={gen.exps}: {ratio.text()}")
        checks.append(
            CheckResult("atkin-lehner-factorization", not residuals, tuple(residuals))
        )
    else:
        checks.append(
            CheckResult(
                "atkin-lehner-factorization",
                False,
                ("skipped: weight shifts are not integral",),
            )
        )

    lhs = refinement_pullback_normalized(chi * modulus_half(cfg.source, -1), cfg)
    rhs = refinement_pullback(chi, cfg) * modulus_half(cfg.target, -1)
    residuals = tuple(
        f"e_{p + 1}: {(lhs.values[p] * rhs.values[p].inverse()).text()}"
        for p in range(cfg.n)
        if lhs.values[p] != rhs.values[p]
    )
    checks.append(CheckResult("modulus-duality", not residuals, residuals))
    return TransferReport(tuple(checks))


@dataclass(frozen=True)
class ArchimedeanTransfer:
    """Result of the archimedean recipe: the target weight and the sorting permutation.

    ``sigma[u]`` is the descending rank of the shifted parameter of source
    position ``u``; it is always strictly increasing on each source block.
    """

    weight: AlgebraicWeight
    sigma: tuple[int, ...]


def archimedean_transfer(weight: AlgebraicWeight, alpha) -> ArchimedeanTransfer:
    """Discrete-series weight transfer.

    Shift each entry to ``m_{i,j} = k_{i,j} + (n_i + 1)/2 - j + alpha·[n - n_i
    odd]`` (1-based ``j``), require the ``m`` to be pairwise distinct, sort
    strictly descending, and set ``k'_p = m'_p - (n + 1)/2 + p`` (1-based
    ``p``).  The output is automatically dominant.  Collisions raise
    ``NotRelevant``; non-integral outputs raise ``NonIntegralShift``.
    """
    shape = weight.shape
    if weight.classify() == "neither":
        raise ValueError("archimedean transfer needs a dominant weight")
    alpha = alpha if isinstance(alpha, Fraction) else Fraction(alpha)
    if alpha.denominator not in (1, 2):
        raise ValueError(f"alpha must be a half-integer, got {alpha}")
    n = shape.n
    ms = []
    for u in range(n):
        i, j = shape.block_of(u)
        twist = (n - shape.blocks[i]) % 2
        ms.append(
            weight.exps[u] + Fraction(shape.blocks[i] + 1, 2) - (j + 1) + alpha * twist
        )
    if len(set(ms)) != n:
        raise NotRelevant(
            "archimedean parameters collide: " + ", ".join(str(m) for m in sorted(ms))
        )
    order = sorted(range(n), key=lambda u: ms[u], reverse=True)
    exps = []
    for p in range(n):
        k = ms[order[p]] - Fraction(n + 1, 2) + (p + 1)
        if k.denominator != 1:
            raise NonIntegralShift(f"transferred weight entry {k} is not an integer")
        exps.append(int(k))
    target = GroupShape((n,))
    return ArchimedeanTransfer(AlgebraicWeight(target, tuple(exps)), invert_permutation(tuple(order)))


def archimedean_sigma(weight: AlgebraicWeight, alpha) -> tuple[int, ...]:
    """A block-order-preserving permutation realizing the archimedean transfer.

    Tries the sorting permutation first, then the remaining block-order-
    preserving permutations; raises ``NotRelevant`` when no permutation makes
    ``weight_pullback`` reproduce ``archimedean_transfer`` (which does happen
    for some mixed shapes).
    """
    art = archimedean_transfer(weight, alpha)
    shape = weight.shape

    def realizes(sigma: tuple[int, ...]) -> bool:
        cfg = TransferConfig(source=shape, sigma=sigma, alpha=alpha)
        return weight_pullback(weight, cfg) == art.weight

    if realizes(art.sigma):
        return art.sigma
    for sigma in block_order_preserving_permutations(shape):
        if sigma != art.sigma and realizes(sigma):
            return sigma
    raise NotRelevant(
        f"no block-order-preserving permutation realizes the transferred weight "
        f"{art.weight.exps} from {weight.exps}"
    )


def satake_transfer(poly: LaurentPoly, cfg: TransferConfig) -> LaurentPoly:
    """Spherical transfer: substitute target variable ``y_p`` by ``M^[...] * x_u``, ``p = sigma(u)``.

    The input must be symmetric on the single target block; the output is then
    symmetric on each source block, and the map is a ring homomorphism.
    """
    if poly.blocks != (cfg.n,):
        raise SizeMismatch(
            f"input must live on the single target block of size {cfg.n}, got blocks {poly.blocks}"
        )
    if not poly.is_block_symmetric():
        raise NotSymmetric("input polynomial is not symmetric in the target variables")
    out: dict[tuple[int, ...], Monomial] = {}
    for exps, mono in poly.terms():
        pulled = tuple(exps[cfg.sigma[u]] for u in range(cfg.n))
        twist = 0
        for u, e in enumerate(pulled):
            if e:
                i, _ = cfg.source.block_of(u)
                twist += e * cfg.twist_exponent(i)
        out[pulled] = mono * Monomial(1, {cfg.mu: twist})
    return LaurentPoly(cfg.source.blocks, out)


def satake_param_transfer(
    params: Sequence[Sequence[Monomial]], cfg: TransferConfig
) -> tuple[Monomial, ...]:
    """Union of the per-block parameter multisets, each twisted by its ``M`` power.

    Returned sorted by canonical text, since only the multiset is meaningful.
    """
    blocks = tuple(tuple(block) for block in params)
    if len(blocks) != cfg.source.r or any(
        len(block) != cfg.source.blocks[i] for i, block in enumerate(blocks)
    ):
        raise SizeMismatch(
            f"parameter blocks must have sizes {cfg.source.blocks}, got "
            f"{tuple(len(block) for block in blocks)}"
        )
    out: list[Monomial] = []
    for i, block in enumerate(blocks):
        twist = cfg.twist_monomial(i)
        out.extend(twist * value for value in block)
    return tuple(sorted(out, key=lambda m: m.text()))


def weight_map_check(cfg: TransferConfig) -> bool:
    """True iff the affine weight map is a bijection of the integer lattice."""
    try:
        weight_shift(cfg)
    except NonIntegralShift:
        return False
    return True
