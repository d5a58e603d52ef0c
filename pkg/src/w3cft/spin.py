"""Search for spin fields: charges whose self- or conjugate-fusion with given
degenerate fields closes on the Weyl orbit of the target.

The generic regime solves, for every Weyl element ``x`` and weights
``lam' in [lam]``, ``mu' in [mu]``, the exact linear system

    x(P + lam') = P~,   x(R + mu') = R~

in the four unknown Kac indices. ``(P~, R~)`` is the split form of ``alpha*``
(self mode) or ``alpha`` (conjugate mode). Solution sets are affine
subspaces of Q^4; the intersection over all requested pairs is returned,
with positive-dimensional pieces reported as families rather than sampled.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from . import sl3
from .charges import (
    FieldClass,
    KacCharge,
    canonical_representative,
    central_charge,
    classify,
    conjugate,
    h_of,
    w_of,
    weyl_images,
)
from .fusion import MODES, Mode, _degenerate_contains, degenerate_spectrum, generic_witnesses
from .laurent import B, BINV, LaurentPoly, as_fraction
from .linalg import AffineSubspace
from .rational import DegenerateField, ModelError, RationalModel, field_of, generalized_z3
from .sl3 import Weight, WeylElement

INDEX_NAMES = ("n1", "n2", "m1", "m2")

SIGMA = KacCharge.from_table([[Fraction(2, 3), Fraction(1, 3)], [Fraction(-1, 3), Fraction(1, 3)]])
SIGMA1 = KacCharge.from_table([[1, Fraction(1, 2)], [0, Fraction(1, 2)]])
SIGMA2 = KacCharge.from_table([[1, 2], [1, 1]])
PSI = KacCharge.from_table([[1, 1], [1, 3]])
PSI1 = KacCharge.from_table([[2, 1], [1, 1]])
EPS = KacCharge.from_table([[1, 2], [1, 2]])

FIELDS = {
    "sigma": SIGMA,
    "sigma1": SIGMA1,
    "sigma2": SIGMA2,
    "psi": PSI,
    "psi1": PSI1,
    "eps": EPS,
}

_Q2 = (BINV - B) ** 2
CLOSED_FORMS: dict[str, LaurentPoly] = {
    "sigma": (1 - 8 * _Q2) / 9,
    "psi": -2 + Fraction(10, 3) * B**2,
    "psi1": Fraction(4, 3) * BINV**2 - 1,
    "sigma1": BINV**2 / 12 - Fraction(3, 4) * _Q2,
    "sigma2": (4 * B**2 - 3) / 3,
    "eps": -2 + 3 * B**2,
}
# w / (beta sqrt3) for sigma
W_SIGMA_FACTOR = Fraction(-2, 27) * (BINV - B)


# --------------------------------------------------------------------------
# constraint specs


@dataclass(frozen=True)
class ConstraintSpec:
    """What a spin field must satisfy.

    ``regime="degenerate"`` replaces the linear solve by a scan over
    completely degenerate candidates ``Phi_{lam0, mu0}`` with
    ``lam0, mu0`` up to ``cutoff``; ``require_own_conjugate`` then also asks
    for ``alpha*`` in ``alpha x alpha`` and ``minimal`` keeps only the
    candidates of smallest ``dim(lam0) * dim(mu0)``.
    """

    rep_pairs: tuple[tuple[Weight, Weight], ...]
    mode: Mode = "self"
    charge_filter: Fraction | None = None
    regime: str = "generic"
    cutoff: int = 3
    require_own_conjugate: bool = False
    minimal: bool = False
    name: str = ""

    def __post_init__(self):
        if not self.rep_pairs:
            raise ValueError("rep_pairs must be non-empty")
        pairs = []
        for lam, mu in self.rep_pairs:
            lam, mu = Weight(*lam), Weight(*mu)
            for w in (lam, mu):
                if not (w.is_integral() and w.is_dominant()):
                    raise ValueError(f"weight {tuple(w)} is not dominant integral")
            pairs.append((lam.normalized(), mu.normalized()))
        object.__setattr__(self, "rep_pairs", tuple(pairs))
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.regime not in ("generic", "degenerate"):
            raise ValueError(f"regime must be 'generic' or 'degenerate', got {self.regime!r}")
        if self.charge_filter is not None:
            object.__setattr__(self, "charge_filter", as_fraction(self.charge_filter))
        if self.cutoff < 1:
            raise ValueError("cutoff must be at least 1")

    @classmethod
    def from_dict(cls, data: dict) -> "ConstraintSpec":
        """Build from the declarative form used by spec files.

        ``rep_pairs`` is a list of integer quadruples ``[l1, l2, m1, m2]``;
        ``charge_filter`` is an integer or a ``"num/den"`` string.
        """
        known = {"name", "rep_pairs", "mode", "charge_filter", "regime", "cutoff",
                 "require_own_conjugate", "minimal", "description"}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown spec keys: {sorted(extra)}")
        if "rep_pairs" not in data:
            raise ValueError("spec needs 'rep_pairs'")
        pairs = []
        for quad in data["rep_pairs"]:
            if len(quad) != 4 or not all(isinstance(v, int) and not isinstance(v, bool) for v in quad):
                raise ValueError(f"rep pair must be four integers, got {quad!r}")
            pairs.append((Weight(quad[0], quad[1]), Weight(quad[2], quad[3])))
        cf = data.get("charge_filter")
        if cf is not None:
            if isinstance(cf, float):
                raise ValueError("charge_filter must be an integer or a 'num/den' string")
            cf = Fraction(cf)
        return cls(
            rep_pairs=tuple(pairs),
            mode=data.get("mode", "self"),
            charge_filter=cf,
            regime=data.get("regime", "generic"),
            cutoff=int(data.get("cutoff", 3)),
            require_own_conjugate=bool(data.get("require_own_conjugate", False)),
            minimal=bool(data.get("minimal", False)),
            name=data.get("name", ""),
        )

    @classmethod
    def load(cls, path) -> "ConstraintSpec":
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError(f"malformed spec file {path}: {exc}") from None
        if not isinstance(data, dict):
            raise ValueError("spec file must hold a JSON object")
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "rep_pairs": [[int(l[0]), int(l[1]), int(m[0]), int(m[1])] for l, m in self.rep_pairs],
            "mode": self.mode,
            "regime": self.regime,
        }
        if self.charge_filter is not None:
            out["charge_filter"] = str(self.charge_filter)
        if self.regime == "degenerate":
            out.update(cutoff=self.cutoff, require_own_conjugate=self.require_own_conjugate,
                       minimal=self.minimal)
        return out


SPEC_DIR = Path(__file__).with_name("specs")


def bundled_spec(name: str) -> ConstraintSpec:
    """One of the shipped spec files: ``sigma``, ``sigma1`` or ``sigma2``."""
    path = SPEC_DIR / f"{name}.json"
    if not path.exists():
        raise ValueError(f"no bundled spec named {name!r}")
    return ConstraintSpec.load(path)


# --------------------------------------------------------------------------
# solutions


@dataclass(frozen=True)
class DegenerateWitness:
    """Tensor-product coefficients showing a pair in the fusion of a degenerate field."""

    lam_coefficient: int
    mu_coefficient: int

    def as_dict(self) -> dict:
        return {"N_lam": self.lam_coefficient, "N_mu": self.mu_coefficient}


@dataclass(frozen=True)
class SpinSolution:
    charge: KacCharge
    witnesses: tuple
    classification: FieldClass
    h: LaurentPoly
    w: LaurentPoly

    @classmethod
    def build(cls, charge: KacCharge, witnesses) -> "SpinSolution":
        return cls(charge, tuple(witnesses), classify(charge), h_of(charge), w_of(charge))


@dataclass(frozen=True)
class SpinFamily:
    """A positive-dimensional solution set, kept as an exact affine subspace."""

    subspace: AffineSubspace
    witnesses: tuple

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def describe(self) -> str:
        return self.subspace.describe(INDEX_NAMES)

    def contains(self, charge: KacCharge) -> bool:
        return any(self.subspace.contains(c.indices) for c in weyl_images(charge))


@dataclass
class SolveResult:
    spec: ConstraintSpec
    solutions: list[SpinSolution] = field(default_factory=list)
    families: list[SpinFamily] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.families:
            return "family"
        return {0: "none", 1: "unique"}.get(len(self.solutions), "finite")

    def charges(self) -> list[KacCharge]:
        return [s.charge for s in self.solutions]


def _target(P: Weight, R: Weight, mode: Mode) -> tuple[Weight, Weight]:
    return (P.conjugate(), R.conjugate()) if mode == "self" else (P, R)


def verify_witness(charge: KacCharge, pair, witness, mode: Mode) -> bool:
    """Re-substitute a witness and check it reproduces the target exactly."""
    lam, mu = (Weight(*w) for w in pair)
    if isinstance(witness, DegenerateWitness):
        return witness.lam_coefficient > 0 and witness.mu_coefficient > 0 and _degenerate_contains(
            lam, mu, charge, mode
        )
    tp, tr = _target(charge.P, charge.R, mode)
    x = witness.x
    return (
        witness.lam_weight in sl3.weight_system(lam)
        and witness.mu_weight in sl3.weight_system(mu)
        and x(charge.P + witness.lam_weight) == tp
        and x(charge.R + witness.mu_weight) == tr
    )


_SWAP = ((0, 1), (1, 0))
_IDENT = ((1, 0), (0, 1))


def _piece(x: WeylElement, lp: Weight, mp: Weight, mode: Mode) -> AffineSubspace | None:
    """Solutions of ``x(P + lp) = P~``, ``x(R + mp) = R~`` as a subspace of Q^4."""
    t = _SWAP if mode == "self" else _IDENT
    m = x.matrix
    rows = []
    for block, shift in ((0, lp), (2, mp)):
        xs = x(shift)
        for i in range(2):
            row = [0, 0, 0, 0]
            for j in range(2):
                row[block + j] = m[i][j] - t[i][j]
            rows.append(row + [-xs[i]])
    return AffineSubspace.from_equations(4, rows)


def _pieces(pair, mode: Mode) -> dict[tuple, AffineSubspace]:
    lam, mu = pair
    out = {}
    for x in sl3.weyl_elements():
        for lp in sl3.weight_system(lam).table:
            for mp in sl3.weight_system(mu).table:
                s = _piece(x, lp, mp, mode)
                if s is not None:
                    out[s.rows] = s
    return out


def _block_matrix(x: WeylElement) -> list[list[int]]:
    (a, b), (c, d) = x.matrix
    return [[a, b, 0, 0], [c, d, 0, 0], [0, 0, a, b], [0, 0, c, d]]


def _weyl_images_of(s: AffineSubspace) -> list[AffineSubspace]:
    return [s.linear_image(_block_matrix(x)) for x in sl3.weyl_elements()]


def _maximal(spaces: Iterable[AffineSubspace]) -> list[AffineSubspace]:
    """Drop every space lying inside a Weyl image of a larger (or earlier) one."""
    spaces = sorted(set(spaces), key=lambda s: (-s.dim, s.rows))
    kept: list[AffineSubspace] = []
    covered: list[AffineSubspace] = []
    for s in spaces:
        if not any(s.is_subset_of(k) for k in covered):
            kept.append(s)
            covered.extend(_weyl_images_of(s))
    return kept


def _solve_generic(spec: ConstraintSpec) -> SolveResult:
    current: dict[tuple, AffineSubspace] = {(): AffineSubspace.whole(4)}
    for pair in spec.rep_pairs:
        pieces = _pieces(pair, spec.mode)
        nxt = {}
        for s in current.values():
            for t in pieces.values():
                u = s.intersect(t)
                if u is not None:
                    nxt[u.rows] = u
        current = nxt
        if not current:
            break
    if spec.charge_filter is not None:
        q_row = AffineSubspace.from_equations(4, [[1, -1, 1, -1, spec.charge_filter]])
        current = {k: u for k, u in ((k, s.intersect(q_row)) for k, s in current.items()) if u is not None}
    result = SolveResult(spec)
    seen_points: set[KacCharge] = set()
    for s in _maximal(current.values()):
        if s.dim:
            # the representative is kept as found: the charge filter is not Weyl invariant
            result.families.append(SpinFamily(s, ()))
            continue
        rep = canonical_representative(KacCharge(*s.point()))
        if rep in seen_points:
            continue
        seen_points.add(rep)
        wit = []
        for pair in spec.rep_pairs:
            ws = generic_witnesses(pair[0], pair[1], rep, spec.mode)
            if not ws:
                raise AssertionError(f"solution {rep} lost its witness for {pair}")
            wit.append(ws[0])
        result.solutions.append(SpinSolution.build(rep, wit))
    result.solutions.sort(key=lambda sol: sol.charge.indices)
    return result


def _solve_degenerate(spec: ConstraintSpec) -> SolveResult:
    found = []
    reps = sl3.dominant_weights(spec.cutoff)
    for l0 in reps:
        for m0 in reps:
            alpha = KacCharge.degenerate(l0, m0)
            if spec.charge_filter is not None and generalized_z3(alpha) != spec.charge_filter:
                continue
            wit = []
            for lam, mu in spec.rep_pairs:
                if spec.mode == "self":
                    nl = sl3.fusion_coefficient(l0, l0, lam.conjugate())
                    nm = sl3.fusion_coefficient(m0, m0, mu.conjugate())
                else:
                    nl = sl3.fusion_coefficient(l0, l0.conjugate(), lam)
                    nm = sl3.fusion_coefficient(m0, m0.conjugate(), mu)
                if not (nl and nm):
                    break
                wit.append(DegenerateWitness(nl, nm))
            else:
                if spec.require_own_conjugate and not (
                    sl3.fusion_coefficient(l0, l0, l0.conjugate())
                    and sl3.fusion_coefficient(m0, m0, m0.conjugate())
                ):
                    continue
                size = sl3.weyl_dimension(*l0) * sl3.weyl_dimension(*m0)
                found.append((size, alpha, wit))
    if spec.minimal and found:
        smallest = min(f[0] for f in found)
        found = [f for f in found if f[0] == smallest]
    result = SolveResult(spec)
    for _, alpha, wit in sorted(found, key=lambda f: (f[0], f[1].indices)):
        result.solutions.append(SpinSolution.build(alpha, wit))
    return result


def solve(spec: ConstraintSpec) -> SolveResult:
    """All charges satisfying ``spec``, one per Weyl orbit, plus flagged families."""
    if spec.regime == "degenerate":
        return _solve_degenerate(spec)
    return _solve_generic(spec)


# --------------------------------------------------------------------------
# sector coverage


@dataclass(frozen=True)
class Sector:
    """A predicted set of ``(lam, mu)`` pairs.

    ``kind`` is ``"total"`` (``q_lam + q_mu = r mod 3``), ``"split"``
    (``q_lam = a``, ``q_mu = b``) or ``"explicit"``.
    """

    kind: str
    data: tuple

    @classmethod
    def total(cls, r: int) -> "Sector":
        return cls("total", (sl3.balanced_mod3(r),))

    @classmethod
    def split(cls, a: int, b: int) -> "Sector":
        return cls("split", (sl3.balanced_mod3(a), sl3.balanced_mod3(b)))

    @classmethod
    def explicit(cls, pairs) -> "Sector":
        return cls("explicit", tuple(sorted((Weight(*l), Weight(*m)) for l, m in pairs)))

    def contains(self, lam, mu) -> bool:
        ql, qm = sl3.z3_charge(lam), sl3.z3_charge(mu)
        if self.kind == "total":
            return sl3.balanced_mod3(ql + qm) == self.data[0]
        if self.kind == "split":
            return (ql, qm) == self.data
        return (Weight(*lam), Weight(*mu)) in self.data

    def __str__(self) -> str:
        if self.kind == "total":
            return f"q_lam+q_mu={self.data[0]} mod 3"
        if self.kind == "split":
            return f"q_lam={self.data[0]}, q_mu={self.data[1]}"
        return "{" + ", ".join(f"({tuple(l)},{tuple(m)})" for l, m in self.data) + "}"


PREDICTED_SECTORS: dict[tuple[str, str], Sector] = {
    ("sigma", "self"): Sector.total(1),
    ("sigma", "conjugate"): Sector.total(0),
    ("sigma1", "self"): Sector.split(1, 0),
    ("sigma1", "conjugate"): Sector.split(0, 0),
    # sigma2 x sigma2 -> sigma2* + psi*, and sigma2 x sigma2* -> 1 + eps
    ("sigma2", "self"): Sector.explicit([((0, 0), (1, 0)), ((0, 0), (0, 2))]),
    ("sigma2", "conjugate"): Sector.explicit([((0, 0), (0, 0)), ((0, 0), (1, 1))]),
}


@dataclass(frozen=True)
class CoverageReport:
    sector: Sector
    expected: tuple
    found: tuple
    missing: tuple
    unexpected: tuple

    @property
    def passed(self) -> bool:
        return not self.missing and not self.unexpected


def sector_coverage(charge, mode: Mode, cutoff: int, sector: Sector | None = None) -> CoverageReport:
    """Compare ``degenerate_spectrum`` with a predicted sector up to ``cutoff``.

    ``charge`` may be a :class:`KacCharge`, a :class:`SpinSolution` or one
    of the names in :data:`FIELDS`; for names the predicted sector defaults
    to the one in :data:`PREDICTED_SECTORS`.
    """
    if isinstance(charge, str):
        if sector is None:
            sector = PREDICTED_SECTORS[(charge, mode)]
        charge = FIELDS[charge]
    elif isinstance(charge, SpinSolution):
        charge = charge.charge
    if sector is None:
        raise ValueError("a sector is needed for an unnamed charge")
    reps = sl3.dominant_weights(cutoff)
    expected = tuple((l, m) for l in reps for m in reps if sector.contains(l, m))
    found = tuple(degenerate_spectrum(charge, cutoff, mode))
    es, fs = set(expected), set(found)
    return CoverageReport(
        sector,
        expected,
        found,
        tuple(p for p in expected if p not in fs),
        tuple(p for p in found if p not in es),
    )


# --------------------------------------------------------------------------
# rational specialisation


class SpecializationError(ModelError):
    pass


@dataclass(frozen=True)
class Specialization:
    """A spin field placed in a Kac table.

    ``indices`` is the member of the field's triple reached from a Weyl image
    ``x`` by the shift ``(u, v)``; the closed form is preferred when it
    applies.
    """

    indices: KacCharge
    field: DegenerateField
    x: str
    u: Fraction
    v: Fraction


def rational_specialization(sol, p: int, pp: int) -> Specialization:
    """Land a spin field on the Kac table of M(p, p').

    Searches Weyl images and index shifts ``(u, v)`` (which leave the vertex
    charge unchanged at ``b^2 = p/p'``) for positive integer indices inside
    the table.

    Raises
    ------
    SpecializationError
        For the spin field when ``p + p'`` is not divisible by 3, or whenever
        no image lands in the table.
    """
    charge = sol.charge if isinstance(sol, SpinSolution) else sol
    model = RationalModel(p, pp)
    if weyl_equivalent_to_sigma(charge) and (p + pp) % 3:
        raise SpecializationError(
            f"the spin field needs p+p' = 0 mod 3; here p+p' = {p + pp} = {(p + pp) % 3} mod 3"
        )
    found: dict[KacCharge, Specialization] = {}
    for x in sl3.weyl_elements():
        c = KacCharge.from_split(x(charge.P), x(charge.R))
        for n1, u in _shifts(c.n1, c.m1, p, pp):
            for n2, v in _shifts(c.n2, c.m2, p, pp):
                cand = KacCharge(n1, n2, c.m1 + u * pp, c.m2 + v * pp)
                if model.in_table(cand) and cand not in found:
                    found[cand] = Specialization(cand, field_of(cand, model), x.label, u, v)
    if not found:
        raise SpecializationError(f"{charge} has no Kac-table image in {model}")
    try:
        preferred = sigma_formula(p, pp) if weyl_equivalent_to_sigma(charge) else None
    except SpecializationError:
        preferred = None
    if preferred in found:
        return found[preferred]
    return found[min(found, key=lambda c: c.indices)]


def weyl_equivalent_to_sigma(charge: KacCharge) -> bool:
    return canonical_representative(charge) == SIGMA


def _shifts(n, m, p, pp):
    """``(n + u p, u)`` for the shifts making both ``n + u p`` and ``m + u p'`` integers."""
    for target in range(1, p):
        u = (target - n) / p
        if (m + u * pp).denominator == 1:
            yield target, u


def sigma_formula(p: int, pp: int) -> KacCharge:
    """Closed-form Kac indices of the spin field in M(p, p')."""
    r = (sl3.balanced_mod3(p), sl3.balanced_mod3(pp))
    if r == (1, -1):
        return KacCharge.from_table([[(p + 2) // 3, (pp + 1) // 3], [(p - 1) // 3, (pp + 1) // 3]])
    if r == (-1, 1):
        return KacCharge.from_table([[(p + 1) // 3, (pp - 1) // 3], [(p - 2) // 3, (pp - 1) // 3]])
    raise SpecializationError(f"no closed form for (p, p') = ({p}, {pp}) = {r} mod 3")


# --------------------------------------------------------------------------
# orbit geometry


@dataclass(frozen=True)
class OrbitPoint:
    label: str
    x: float
    y: float


def orbit_points(charge: KacCharge, b: float) -> list[OrbitPoint]:
    """The 12 points ``x(alpha - Q)`` and ``x(alpha* - Q)`` in the plane."""
    b = float(b)
    if not b > 0 or math.isinf(b):
        raise ValueError(f"b must be a positive real, got {b}")
    out = []
    for star, c in (("", charge), ("*", conjugate(charge))):
        v = Weight(*(comp(b) for comp in c.shifted()))
        for x in sl3.weyl_elements():
            px, py = x(v).cartesian()
            out.append(OrbitPoint(x.label + star, float(px), float(py)))
    return out


def orbit_b(p: int) -> float:
    """``b`` with ``b^2 = p / (p + 1)``."""
    return math.sqrt(p / (p + 1))


def shared_points(orbits: Sequence[list[OrbitPoint]], tol: float = 1e-10) -> list[tuple[float, float]]:
    """Points present (within ``tol``) in every one of the given orbits."""
    first, *rest = orbits
    out = []
    for pt in first:
        if all(any(math.hypot(pt.x - q.x, pt.y - q.y) < tol for q in o) for o in rest):
            if not any(math.hypot(pt.x - s[0], pt.y - s[1]) < tol for s in out):
                out.append((pt.x, pt.y))
    return out


_ROOT_DIRS = tuple(sl3.Weight(*r).cartesian() for r in sl3.POSITIVE_ROOTS)


def on_wall(point, tol: float = 1e-10) -> bool:
    """Whether a plane point is orthogonal to some root."""
    x, y = point
    return any(abs(x * rx + y * ry) < tol for rx, ry in _ROOT_DIRS)


# --------------------------------------------------------------------------
# curves


CURVE_COLUMNS = ("c", "h_sigma", "h_psi", "h_psi1", "h_sigma1", "h_sigma2", "h_eps")


def curve_forms() -> dict[str, LaurentPoly]:
    """Exact Laurent data for the curve columns, each derived through ``h_of``."""
    out = {"c": central_charge()}
    for name in ("sigma", "psi", "psi1", "sigma1", "sigma2", "eps"):
        out[f"h_{name}"] = h_of(FIELDS[name])
    return out


def curve_tables(grid: Iterable, squared: bool = False, exact: bool = False) -> list[dict]:
    """One row per grid point with ``c`` and the dimensions of the named fields.

    Grid values are ``b`` (or ``b^2`` if ``squared``). With ``exact`` every
    value must give a rational ``b^2`` and the columns are Fractions.
    """
    forms = curve_forms()
    rows = []
    for g in grid:
        if exact:
            g = as_fraction(g)
            b2 = g if squared else g * g
            if b2 <= 0:
                raise ValueError("grid values must be positive")
            row = {"b2": b2}
            row.update({k: f.at_b2(b2) for k, f in forms.items()})
        else:
            g = float(g)
            if g <= 0:
                raise ValueError("grid values must be positive")
            b = math.sqrt(g) if squared else g
            row = {"b": b}
            row.update({k: f(b) for k, f in forms.items()})
        rows.append(row)
    return rows


def eps_sigma1_slope() -> Fraction:
    """``d(h_eps - 4 h_sigma1) / d(b^2)`` at ``b^2 = 2/3``."""
    diff = h_of(EPS) - 4 * h_of(SIGMA1)
    # d/d(b^2) = (1 / 2b) d/db; evaluate b * d/db at b^2 and divide by 2 b^2
    b2 = Fraction(2, 3)
    return (diff.derivative().shift(1)).at_b2(b2) / (2 * b2)
