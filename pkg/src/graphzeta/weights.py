"""Arc weights and the two-arc weight ``theta``.

A :class:`WeightScheme` stores one ``tau`` and one ``upsilon`` value per arc.
The weight of a consecutive pair of arcs is

    theta(a, a') = tau(a') [head(a) == tail(a')] - upsilon(a') [a' in S(a)]

where ``S(a)`` is the inverse set of ``a``.  Presets pin ``tau``/``upsilon``
to the classical zeta variants.  The Bartholdi variants store the already
multiplied ``(1 - q) * upsilon`` so the formula above is uniform.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .algebra import QQ, QQ_q, Matrix, Ring, evaluate_q
from .digraph import Digraph


class Preset(enum.Enum):
    GENERAL = "GENERAL"
    IHARA = "IHARA"
    BOWEN_LANFORD = "BOWEN_LANFORD"
    MIZUNO_SATO = "MIZUNO_SATO"
    SATO = "SATO"
    BARTHOLDI = "BARTHOLDI"


class AdjacencyKind(enum.Enum):
    NEITHER = 0
    ADJACENCY = 1
    REDUCED_ADJACENCY = 2


class PresetViolation(ValueError):
    """Weights contradict the constraints of the chosen preset."""


@dataclass(frozen=True)
class WeightScheme:
    tau: tuple
    upsilon: tuple
    preset: Preset = Preset.GENERAL
    field: Ring = QQ
    #: value substituted for q when a Bartholdi scheme is evaluated numerically
    q: object = None

    def __post_init__(self):
        f = self.field
        object.__setattr__(self, "tau", tuple(f.coerce(x) for x in self.tau))
        object.__setattr__(self, "upsilon", tuple(f.coerce(x) for x in self.upsilon))
        if len(self.tau) != len(self.upsilon):
            raise ValueError("tau and upsilon must have one entry per arc")
        self._validate()

    def _validate(self):
        f = self.field
        one, zero = f.one, f.zero
        p = self.preset
        if p is Preset.IHARA:
            bad = any(x != one for x in self.tau + self.upsilon)
            msg = "IHARA requires tau = upsilon = 1"
        elif p is Preset.BOWEN_LANFORD:
            bad = any(x != zero for x in self.upsilon)
            msg = "BOWEN_LANFORD requires upsilon = 0"
        elif p is Preset.MIZUNO_SATO:
            bad = self.tau != self.upsilon
            msg = "MIZUNO_SATO requires tau = upsilon"
        elif p is Preset.SATO:
            bad = any(x != one for x in self.upsilon)
            msg = "SATO requires upsilon = 1"
        elif p is Preset.BARTHOLDI:
            one_minus_q = _one_minus_q(f, self.q)
            bad = (any(x != one for x in self.tau)
                   or any(x != one_minus_q for x in self.upsilon))
            msg = "BARTHOLDI requires tau = 1 and upsilon = 1 - q"
        else:
            bad = False
            msg = ""
        if bad:
            raise PresetViolation(msg)

    @property
    def arc_count(self) -> int:
        return len(self.tau)

    @property
    def is_symbolic(self) -> bool:
        return self.field == QQ_q

    def describe(self) -> str:
        if self.preset is Preset.BARTHOLDI and self.q is not None:
            return f"BARTHOLDI(q={QQ.format(self.q)})"
        return self.preset.value

    # -- constructors ------------------------------------------------------
    @classmethod
    def general(cls, tau, upsilon, field: Ring = QQ) -> "WeightScheme":
        return cls(tuple(tau), tuple(upsilon), Preset.GENERAL, field)

    @classmethod
    def ihara(cls, d: Digraph, field: Ring = QQ) -> "WeightScheme":
        n = d.arc_count
        return cls((1,) * n, (1,) * n, Preset.IHARA, field)

    @classmethod
    def bowen_lanford(cls, d: Digraph, tau=None, field: Ring = QQ) -> "WeightScheme":
        n = d.arc_count
        tau = (1,) * n if tau is None else tuple(tau)
        return cls(tau, (0,) * n, Preset.BOWEN_LANFORD, field)

    @classmethod
    def mizuno_sato(cls, d: Digraph, tau, field: Ring = QQ) -> "WeightScheme":
        tau = tuple(tau)
        return cls(tau, tau, Preset.MIZUNO_SATO, field)

    @classmethod
    def sato(cls, d: Digraph, tau, field: Ring = QQ) -> "WeightScheme":
        return cls(tuple(tau), (1,) * d.arc_count, Preset.SATO, field)

    @classmethod
    def bartholdi(cls, d: Digraph, q=None) -> "WeightScheme":
        """Bartholdi weights ``tau = 1``, ``upsilon = 1 - q``.

        With ``q=None`` the scheme lives over ``Q(q)``; otherwise ``q`` is a
        rational and the scheme lives over ``Q``.
        """
        n = d.arc_count
        if q is None:
            qq = QQ_q.gen()
            return cls((1,) * n, (1 - qq,) * n, Preset.BARTHOLDI, QQ_q)
        q = QQ.coerce(q)
        return cls((1,) * n, (1 - q,) * n, Preset.BARTHOLDI, QQ, q)

    @classmethod
    def bartholdi_type(cls, tau, upsilon) -> "WeightScheme":
        """Generalized Bartholdi weights over ``Q(q)``: ``upsilon`` becomes ``(1 - q) upsilon``."""
        one_minus_q = 1 - QQ_q.gen()
        return cls(tuple(tau), tuple(one_minus_q * QQ_q.coerce(u) for u in upsilon),
                   Preset.GENERAL, QQ_q)

    def at_q(self, value) -> "WeightScheme":
        """Substitute ``q = value`` into a symbolic scheme."""
        if not self.is_symbolic:
            raise ValueError("scheme has no q to substitute")
        value = QQ.coerce(value)
        tau = tuple(evaluate_q(x, value) for x in self.tau)
        ups = tuple(evaluate_q(x, value) for x in self.upsilon)
        q = value if self.preset is Preset.BARTHOLDI else None
        return WeightScheme(tau, ups, self.preset, QQ, q)

    def with_preset(self, preset: Preset) -> "WeightScheme":
        return replace(self, preset=preset)


def _one_minus_q(field, q):
    if q is not None:
        return field.one - field.coerce(q)
    return field.one - field.gen()


def theta_eval(d: Digraph, scheme: WeightScheme, a: int, a2: int):
    f = scheme.field
    val = f.zero
    if d.head(a) == d.tail(a2):
        val = val + scheme.tau[a2]
    if a2 in d.inverse_sets[a]:
        val = val - scheme.upsilon[a2]
    return val


def edge_matrix(d: Digraph, scheme: WeightScheme) -> Matrix:
    """Arc-indexed matrix of ``theta`` values, ascending arc ids."""
    if scheme.arc_count != d.arc_count:
        raise ValueError("weight scheme and digraph disagree on the number of arcs")
    n = d.arc_count
    f = scheme.field
    entries = [f.zero] * (n * n)
    for a in range(n):
        for a2 in d.successors[a]:
            entries[a * n + a2] = theta_eval(d, scheme, a, a2)
    return Matrix._raw(f, n, n, entries)


def check_adjacency_condition(d: Digraph, m: Matrix) -> AdjacencyKind:
    """Classify an arc-indexed weight matrix by the adjacency conditions it meets."""
    n = d.arc_count
    kind = AdjacencyKind.REDUCED_ADJACENCY
    for a in range(n):
        for a2 in range(n):
            if m.ring.is_zero(m[a, a2]):
                continue
            if d.head(a) != d.tail(a2):
                return AdjacencyKind.NEITHER
            if a2 in d.inverse_sets[a]:
                kind = AdjacencyKind.ADJACENCY
    return kind
