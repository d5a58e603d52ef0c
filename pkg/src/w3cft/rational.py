"""Rational W3 models M(p, p'): Kac tables, triple identification, Z3 charges."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .charges import KacCharge, beta_at, central_charge, h_of, w_of
from .laurent import as_fraction
from .sl3 import balanced_mod3


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class RationalModel:
    """Model at ``b^2 = p/p'`` with coprime positive ``p, p'``."""

    p: int
    pp: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.pp, int)):
            raise ModelError("p and p' must be integers")
        if self.p < 1 or self.pp < 1:
            raise ModelError(f"p, p' must be positive, got ({self.p}, {self.pp})")
        if math.gcd(self.p, self.pp) != 1:
            raise ModelError(f"p={self.p} and p'={self.pp} are not coprime")

    @property
    def b2(self) -> Fraction:
        return Fraction(self.p, self.pp)

    @property
    def b(self) -> float:
        return math.sqrt(self.p / self.pp)

    @property
    def central_charge(self) -> Fraction:
        return central_charge().at_b2(self.b2)

    @property
    def z3_case(self) -> str:
        """Which of p, p', p+p', p-p' is divisible by 3."""
        p, pp = self.p, self.pp
        if p % 3 == 0:
            return "p"
        if pp % 3 == 0:
            return "p'"
        if (p + pp) % 3 == 0:
            return "p+p'"
        return "p-p'"

    def in_table(self, charge: KacCharge) -> bool:
        return (
            charge.is_positive_integral()
            and charge.n1 + charge.n2 < self.p
            and charge.m1 + charge.m2 < self.pp
        )

    def __str__(self) -> str:
        return f"M({self.p},{self.pp})"


def rotate(charge: KacCharge, model: RationalModel) -> KacCharge:
    """``[[n1,m1],[n2,m2]] -> [[p-n1-n2, p'-m1-m2],[n1,m1]]``; order three."""
    n1, n2, m1, m2 = charge.indices
    return KacCharge(model.p - n1 - n2, n1, model.pp - m1 - m2, m1)


def triple(charge: KacCharge, model: RationalModel) -> tuple[KacCharge, KacCharge, KacCharge]:
    once = rotate(charge, model)
    return (charge, once, rotate(once, model))


@dataclass(frozen=True, order=True)
class DegenerateField:
    """A field of the Kac table, labelled by the lexicographically smallest
    index quadruple ``(n1, n2, m1, m2)`` of its triple."""

    indices: KacCharge
    model: RationalModel

    @cached_property
    def alternates(self) -> tuple[KacCharge, KacCharge]:
        _, a, b = triple(self.indices, self.model)
        return (a, b)

    @property
    def triple(self) -> tuple[KacCharge, KacCharge, KacCharge]:
        return (self.indices, *self.alternates)

    @property
    def h(self) -> Fraction:
        return h_of(self.indices).at_b2(self.model.b2)

    @property
    def w_factor_over_b(self) -> Fraction:
        """``w_of / b``, an even Laurent polynomial, so exact at rational ``b^2``."""
        return w_of(self.indices).shift(-1).at_b2(self.model.b2)

    @property
    def w_factor(self) -> float:
        return float(self.w_factor_over_b) * self.model.b

    @property
    def w(self) -> float:
        return beta_at(self.model.b) * math.sqrt(3) * self.w_factor

    @property
    def q(self) -> int:
        return z3_charge_of(self, self.model)

    def __str__(self) -> str:
        return str(self.indices)


def field_of(charge: KacCharge, model: RationalModel) -> DegenerateField | None:
    """The table field containing ``charge`` in its triple, or None if out of table."""
    if not model.in_table(charge):
        return None
    return DegenerateField(min(triple(charge, model), key=lambda c: c.indices), model)


def kac_table(model: RationalModel) -> list[DegenerateField]:
    """All fields of M(p, p'), one canonical representative per triple.

    Raises
    ------
    ModelError
        If ``p < 2`` or ``p' < 2``.
    """
    if model.p < 2 or model.pp < 2:
        raise ModelError(f"Kac table needs p, p' >= 2, got {model}")
    p, pp = model.p, model.pp
    fields = set()
    for n1 in range(1, p):
        for n2 in range(1, p - n1):
            for m1 in range(1, pp):
                for m2 in range(1, pp - m1):
                    fields.add(field_of(KacCharge(n1, n2, m1, m2), model))
    return sorted(fields)


def z3_charge_of(field, model: RationalModel | None = None) -> int:
    """Z3 charge of a degenerate field, by which of p, p', p+/-p' is 0 mod 3."""
    if isinstance(field, DegenerateField):
        model = model or field.model
        field = field.indices
    if model is None:
        raise ModelError("a model is needed for the Z3 charge of a bare charge")
    dn = field.n1 - field.n2
    dm = field.m1 - field.m2
    value = {"p": dn, "p'": dm, "p+p'": dn + dm, "p-p'": dn - dm}[model.z3_case]
    return balanced_mod3(value)


def generalized_z3(charge: KacCharge) -> Fraction:
    """``(n1 - n2) + (m1 - m2)``; rational for rational indices."""
    return (charge.n1 - charge.n2) + (charge.m1 - charge.m2)


def index_shift(charge: KacCharge, u, v, model: RationalModel) -> KacCharge:
    """``(n1, m1, n2, m2) -> (n1 + u p, m1 + u p', n2 + v p, m2 + v p')``.

    The vertex charge is unchanged at ``b^2 = p/p'``.
    """
    u, v = as_fraction(u), as_fraction(v)
    return KacCharge(
        charge.n1 + u * model.p,
        charge.n2 + v * model.p,
        charge.m1 + u * model.pp,
        charge.m2 + v * model.pp,
    )


POTTS = RationalModel(4, 5)

# labels as they are usually written; each is one member of its triple
POTTS_LABELS = {
    "1": KacCharge.from_table([[1, 1], [1, 1]]),
    "sigma": KacCharge.from_table([[1, 2], [1, 1]]),
    "sigma*": KacCharge.from_table([[1, 1], [1, 2]]),
    "psi": KacCharge.from_table([[1, 1], [1, 3]]),
    "psi*": KacCharge.from_table([[1, 3], [1, 1]]),
    "eps": KacCharge.from_table([[1, 2], [1, 2]]),
}


@dataclass(frozen=True)
class PottsReport:
    fields: dict[str, DegenerateField]
    fusions: dict[str, dict[str, int]]

    def rows(self) -> list[dict]:
        out = []
        for name, f in self.fields.items():
            out.append(
                {
                    "name": name,
                    "triple": " = ".join(str(c) for c in f.triple),
                    "q": f.q,
                    "h": f.h,
                    "w": f.w,
                }
            )
        return out


def potts_content() -> PottsReport:
    """Operator content and spin-field fusions of the three-state Potts model."""
    from .fusion import fuse_deg_deg

    fields = {name: field_of(c, POTTS) for name, c in POTTS_LABELS.items()}
    names = {f: name for name, f in fields.items()}

    def fuse(a: str, b: str) -> dict[str, int]:
        out = fuse_deg_deg(fields[a], fields[b], model=POTTS)
        return {names[t]: n for t, n in out.terms.items()}

    fusions = {"sigma x sigma": fuse("sigma", "sigma"), "sigma x sigma*": fuse("sigma", "sigma*")}
    return PottsReport(fields, fusions)
