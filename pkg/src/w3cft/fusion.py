"""Fusion of completely degenerate fields with generic and degenerate fields.

Membership questions ("does Phi_{lam,mu} appear in V x V?") are decided by
finite enumeration over the six Weyl elements; everything is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Literal

from . import sl3
from .charges import FieldClass, KacCharge, classify, conjugate, degenerate_image
from .rational import DegenerateField, RationalModel, field_of
from .sl3 import Weight, WeylElement

Mode = Literal["self", "conjugate"]
MODES = ("self", "conjugate")


@dataclass
class FusionOutcome:
    """Fusion products with their multiplicities."""

    terms: dict[Hashable, int] = field(default_factory=dict)

    def add(self, key, n: int) -> None:
        self.terms[key] = self.terms.get(key, 0) + n

    @property
    def total(self) -> int:
        return sum(self.terms.values())

    def __contains__(self, key) -> bool:
        return key in self.terms

    def __len__(self) -> int:
        return len(self.terms)


def _dominant(w, what: str) -> Weight:
    w = Weight(*w)
    if not (w.is_integral() and w.is_dominant()):
        raise ValueError(f"{what} = {tuple(w)} must be integral dominant")
    return w.normalized()


def fuse_deg_generic(lam, mu, alpha: KacCharge) -> FusionOutcome:
    """Phi_{lam,mu} x V_alpha as a sum of V_{alpha - lam'/b + b mu'}.

    Shifting the vertex charge by ``-lam'/b + b mu'`` adds ``lam'`` to
    ``(n1, n2)`` and ``mu'`` to ``(m1, m2)``. Multiplicities are
    ``m_lam(lam') * m_mu(mu')``.
    """
    lam = sl3.weight_system(_dominant(lam, "lam"))
    mu = sl3.weight_system(_dominant(mu, "mu"))
    out = FusionOutcome()
    for lp, ml in lam.table.items():
        for mp, mm in mu.table.items():
            term = KacCharge(alpha.n1 + lp[0], alpha.n2 + lp[1], alpha.m1 + mp[0], alpha.m2 + mp[1])
            out.add(term, ml * mm)
    return out


def _reps_of(f) -> tuple[Weight, Weight]:
    if isinstance(f, DegenerateField):
        f = f.indices
    img = degenerate_image(f)
    if img is None:
        raise ValueError(f"{f} is not completely degenerate")
    return img.reps()


def fuse_deg_deg(f1, f2, model: RationalModel | None = None) -> FusionOutcome:
    """Phi_{lam,mu} x Phi_{lam',mu'} with coefficients ``N_{lam lam'}^{lam''} N_{mu mu'}^{mu''}``.

    With a model, every product is mapped to its Kac-table field and products
    falling outside the table are dropped.
    """
    l1, m1 = _reps_of(f1)
    l2, m2 = _reps_of(f2)
    out = FusionOutcome()
    for lam, nl in sl3.tensor_decompose(l1, l2).items():
        for mu, nm in sl3.tensor_decompose(m1, m2).items():
            term = KacCharge.degenerate(lam, mu)
            if model is not None:
                term = field_of(term, model)
                if term is None:
                    continue
            out.add(term, nl * nm)
    return out


@dataclass(frozen=True)
class Witness:
    """Weyl element and weights realising a fusion membership."""

    x: WeylElement
    lam_weight: Weight
    mu_weight: Weight

    def as_dict(self) -> dict:
        return {"x": self.x.label, "lam'": tuple(self.lam_weight), "mu'": tuple(self.mu_weight)}


def _target(alpha: KacCharge, mode: Mode) -> tuple[Weight, Weight]:
    if mode == "self":
        t = conjugate(alpha)
    elif mode == "conjugate":
        t = alpha
    else:
        raise ValueError(f"mode must be 'self' or 'conjugate', got {mode!r}")
    return t.P, t.R


def _integral(w: Weight) -> Weight | None:
    if all(Fraction(c).denominator == 1 for c in w):
        return w.normalized()
    return None


def generic_witnesses(lam, mu, alpha: KacCharge, mode: Mode) -> list[Witness]:
    """All ``(x, lam', mu')`` with ``x(P + lam') = P~`` and ``x(R + mu') = R~``.

    ``(P~, R~)`` are the split coordinates of ``alpha*`` in self mode and of
    ``alpha`` in conjugate mode. For a given ``x`` the weights are forced:
    ``lam' = x^-1 P~ - P``.
    """
    lam = sl3.weight_system(_dominant(lam, "lam"))
    mu = sl3.weight_system(_dominant(mu, "mu"))
    tp, tr = _target(alpha, mode)
    out = []
    for x in sl3.weyl_elements():
        xi = x.inverse
        lp = _integral(xi(tp) - alpha.P)
        mp = _integral(xi(tr) - alpha.R)
        if lp is not None and mp is not None and lp in lam and mp in mu:
            out.append(Witness(x, lp, mp))
    return out


def _degenerate_contains(lam, mu, alpha: KacCharge, mode: Mode) -> bool:
    l0, m0 = degenerate_image(alpha).reps()
    lam = _dominant(lam, "lam")
    mu = _dominant(mu, "mu")
    if mode == "self":
        # Phi*_{lam,mu} in alpha x alpha
        return bool(
            sl3.fusion_coefficient(l0, l0, lam.conjugate())
            and sl3.fusion_coefficient(m0, m0, mu.conjugate())
        )
    return bool(
        sl3.fusion_coefficient(l0, l0.conjugate(), lam)
        and sl3.fusion_coefficient(m0, m0.conjugate(), mu)
    )


def contains(lam, mu, alpha: KacCharge, mode: Mode) -> bool:
    """Whether ``Phi_{lam,mu} x V_alpha`` contains ``V_alpha*`` (self) or ``V_alpha`` (conjugate).

    Equivalently, whether ``Phi*_{lam,mu}`` appears in ``alpha x alpha`` or
    ``Phi_{lam,mu}`` in ``alpha x alpha*``. When ``alpha`` is itself completely
    degenerate the degenerate-degenerate rule applies instead of the
    generic-charge rule.
    """
    _target(alpha, mode)
    if classify(alpha) is FieldClass.COMPLETELY_DEGENERATE:
        return _degenerate_contains(lam, mu, alpha, mode)
    return bool(generic_witnesses(lam, mu, alpha, mode))


def contains_in_self_fusion(lam, mu, alpha: KacCharge) -> bool:
    return contains(lam, mu, alpha, "self")


def contains_in_conjugate_fusion(lam, mu, alpha: KacCharge) -> bool:
    return contains(lam, mu, alpha, "conjugate")


def degenerate_spectrum(alpha: KacCharge, cutoff: int, mode: Mode) -> list[tuple[Weight, Weight]]:
    """Completely degenerate ``(lam, mu)`` up to ``cutoff`` passing the membership test.

    Only the completely degenerate part of the fusion is reported; other
    products are not enumerated.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    reps = sl3.dominant_weights(cutoff)
    return [(lam, mu) for lam in reps for mu in reps if contains(lam, mu, alpha, mode)]


@dataclass(frozen=True)
class BlockCount:
    s_channel: int
    t_channel: int

    @property
    def consistent(self) -> bool:
        return self.s_channel == self.t_channel


def block_counts(lam, mu) -> BlockCount:
    """Number of conformal blocks of <Phi* V* V Phi> in the two channels."""
    lam = _dominant(lam, "lam")
    mu = _dominant(mu, "mu")
    s = sl3.sum_squared_multiplicities(lam) * sl3.sum_squared_multiplicities(mu)
    t = sl3.neutral_multiplicity_sum(lam) * sl3.neutral_multiplicity_sum(mu)
    return BlockCount(s, t)
