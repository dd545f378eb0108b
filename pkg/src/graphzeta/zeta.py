"""Hashimoto and Ihara expressions, the main identity, and classical closed forms.

Everything here returns the *reciprocal* of a zeta function, i.e. the
polynomial ``det(I - tM)`` and its vertex-indexed counterpart
``f(t) det(I - t A_w + t^2 D_w)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import (
    QQ,
    QQ_q,
    Matrix,
    PolynomialRing,
    RatFunc,
    UniPoly,
    det_bareiss,
    det_over_field,
    poly_gcd,
    rational_functions_in_t,
)
from .digraph import Digraph, Graph, phi_partition, symmetric_digraph
from .paths import reciprocal_char_poly
from .weights import Preset, WeightScheme, edge_matrix


class IharaConsistencyError(ArithmeticError):
    """The Ihara expression failed to reduce to a polynomial."""


class NotSimpleGraphError(ValueError):
    pass


# -- Hashimoto side ----------------------------------------------------------

def hashimoto_polynomial(d: Digraph, scheme: WeightScheme) -> UniPoly:
    """``det(I - t M)`` for the edge matrix ``M`` of ``scheme``."""
    return reciprocal_char_poly(edge_matrix(d, scheme))


# -- Ihara side ----------------------------------------------------------------

def _sum(field, values):
    acc = field.zero
    for x in values:
        acc = acc + x
    return acc


def f_pair(d: Digraph, scheme: WeightScheme, pair) -> UniPoly:
    u, v = pair
    if u > v:
        u, v = v, u
    K = scheme.field
    ups = scheme.upsilon
    if u == v:
        s = _sum(K, (ups[a] for a in d.arcs_from_to(u, u)))
        return UniPoly(K, [K.one, s])
    s1 = _sum(K, (ups[a] for a in d.arcs_from_to(u, v)))
    s2 = _sum(K, (ups[a] for a in d.arcs_from_to(v, u)))
    return UniPoly(K, [K.one, K.zero, -(s1 * s2)])


@dataclass(frozen=True)
class IharaData:
    pairs: tuple
    f_pairs: dict
    f_delta: UniPoly
    a_counts: Matrix
    d_pairs: dict
    A_w: Matrix
    D_w: Matrix

    def f(self, u, v) -> UniPoly:
        key = (min(u, v), max(u, v))
        return self.f_pairs.get(key, UniPoly.constant(self.f_delta.field, 1))


def ihara_data(d: Digraph, scheme: WeightScheme) -> IharaData:
    K = scheme.field
    tf = rational_functions_in_t(K)
    n = d.vertex_count
    tau, ups = scheme.tau, scheme.upsilon
    phi = phi_partition(d)

    f_pairs = {p: f_pair(d, scheme, p) for p in phi.pairs}
    f_delta = UniPoly.constant(K, 1)
    for p in phi.pairs:
        f_delta = f_delta * f_pairs[p]
    f_inv = {p: tf.one / tf.coerce(f) for p, f in f_pairs.items()}

    counts = [[_sum(K, (tau[a] for a in d.arcs_from_to(w, w2))) for w2 in range(n)]
              for w in range(n)]
    a_counts = Matrix.from_rows(K, counts) if n else Matrix.zeros(K, 0)

    d_pairs = {}
    for u, v in phi.phi3:
        for x, y in ((u, v), (v, u)):
            d_pairs[(x, y)] = _sum(K, (tau[a] * ups[a2]
                                       for a in d.arcs_from_to(x, y)
                                       for a2 in d.arcs_from_to(y, x)))

    A_entries = [tf.zero] * (n * n)
    for w in range(n):
        for w2 in range(n):
            c = counts[w][w2]
            if not K.is_zero(c):
                A_entries[w * n + w2] = f_inv[(min(w, w2), max(w, w2))] * tf.coerce(c)
    diag = [tf.zero] * n
    for u, v in phi.phi3:
        inv = f_inv[(u, v)]
        diag[u] = diag[u] + inv * tf.coerce(d_pairs[(u, v)])
        diag[v] = diag[v] + inv * tf.coerce(d_pairs[(v, u)])
    A_w = Matrix._raw(tf, n, n, A_entries)
    D_w = Matrix.diagonal(tf, diag) if n else Matrix.zeros(tf, 0)
    return IharaData(phi.pairs, f_pairs, f_delta, a_counts, d_pairs, A_w, D_w)


def ihara_matrix(data: IharaData) -> Matrix:
    """``I - t A_w + t^2 D_w`` over ``K(t)``."""
    tf = data.A_w.ring
    n = data.A_w.rows
    t = tf.gen()
    return Matrix.identity(tf, n) - data.A_w * t + data.D_w * (t * t)


def _lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def _det_fraction_free(m: Matrix) -> tuple[UniPoly, UniPoly]:
    """Clear each row's denominators and run Bareiss over ``K[t]``.

    Returns ``(det_scaled, scale)`` with ``det(m) = det_scaled / scale``.
    """
    tf = m.ring
    ring = PolynomialRing(tf.base, tf.var)
    entries = []
    scale = ring.one
    for i in range(m.rows):
        row = m.row(i)
        mult = ring.one
        for x in row:
            if x.den.degree > 0:
                mult = _lcm(mult, x.den)
        for x in row:
            entries.append(x.num * mult.exact_div(x.den))
        scale = scale * mult
    return det_bareiss(Matrix._raw(ring, m.rows, m.cols, entries)), scale


def ihara_polynomial(d: Digraph, scheme: WeightScheme, method: str = "auto",
                     data: IharaData | None = None) -> UniPoly:
    """``f_Delta(t) det(I - t A_w + t^2 D_w)``, reduced to a polynomial.

    ``method="field"`` eliminates over ``K(t)``; ``method="fraction_free"``
    clears row denominators, uses Bareiss over ``K[t]`` and divides the
    multipliers back out exactly.  ``"auto"`` picks the field route over
    ``Q`` and the fraction-free route over ``Q(q)``, where nested gcds make
    field elimination slow.
    """
    data = data or ihara_data(d, scheme)
    m = ihara_matrix(data)
    if method == "auto":
        method = "fraction_free" if scheme.is_symbolic else "field"
    if method == "field":
        det = det_over_field(m) if m.rows else m.ring.one
        prod = det * m.ring.coerce(data.f_delta)
        if not prod.is_polynomial():
            raise IharaConsistencyError(
                f"Ihara expression left a denominator {prod.den}; this is a bug")
        return prod.num
    if method == "fraction_free":
        if not m.rows:
            return data.f_delta
        det, scale = _det_fraction_free(m)
        try:
            return (det * data.f_delta).exact_div(scale)
        except ArithmeticError:
            raise IharaConsistencyError(
                "Ihara expression is not a polynomial; this is a bug") from None
    raise ValueError(f"unknown method {method!r}")


@dataclass
class ZetaReport:
    hashimoto: UniPoly
    ihara: UniPoly
    identity_holds: bool
    scheme: str
    timings: dict = field(default_factory=dict, compare=False)


def verify_main_theorem(d: Digraph, scheme: WeightScheme) -> ZetaReport:
    t0 = time.perf_counter()
    h = hashimoto_polynomial(d, scheme)
    t1 = time.perf_counter()
    i = ihara_polynomial(d, scheme)
    t2 = time.perf_counter()
    return ZetaReport(h, i, h == i, scheme.describe(),
                      {"hashimoto": t1 - t0, "ihara": t2 - t1})


def q_degree_bound(d: Digraph, scheme: WeightScheme) -> int:
    """Upper bound for the q-degree of the coefficients of ``det(I - tM)``."""
    deg = 0
    for x in scheme.tau + scheme.upsilon:
        if isinstance(x, RatFunc):
            deg = max(deg, x.num.degree, x.den.degree)
    return 2 * d.arc_count * max(deg, 1)


def verify_by_q_evaluation(d: Digraph, scheme: WeightScheme, points=None) -> bool:
    """Certify the identity for a ``Q(q)`` scheme by checking enough rational ``q``."""
    if not scheme.is_symbolic:
        return verify_main_theorem(d, scheme).identity_holds
    if points is None:
        points = []
        k = 0
        need = q_degree_bound(d, scheme) + 1
        while len(points) < need:
            try:
                s = scheme.at_q(k)
            except ZeroDivisionError:
                k += 1
                continue
            points.append(s)
            k += 1
    else:
        points = [scheme.at_q(p) for p in points]
    return all(verify_main_theorem(d, s).identity_holds for s in points)


# -- proof-side matrices -------------------------------------------------------

@dataclass(frozen=True)
class ProofMatrices:
    H: Matrix
    J: Matrix
    K: Matrix
    L: Matrix


def proof_matrices(d: Digraph, scheme: WeightScheme) -> ProofMatrices:
    """``H = KL`` and ``J`` with ``M = H - J``."""
    F = scheme.field
    n, m = d.vertex_count, d.arc_count
    tau, ups = scheme.tau, scheme.upsilon
    inv = d.inverse_sets
    J = Matrix.from_function(F, m, m, lambda a, b: ups[b] if b in inv[a] else F.zero)
    Km = Matrix.from_function(F, m, n, lambda a, v: F.one if d.head(a) == v else F.zero)
    Lm = Matrix.from_function(F, n, m, lambda u, b: tau[b] if d.tail(b) == u else F.zero)
    return ProofMatrices(Km @ Lm, J, Km, Lm)


def block_arcs(d: Digraph, pair) -> tuple[int, ...]:
    """Arcs between ``u`` and ``v``: ``A_uv`` then ``A_vu``, ascending ids within each."""
    u, v = pair
    if u == v:
        return d.arcs_from_to(u, u)
    return d.arcs_from_to(u, v) + d.arcs_from_to(v, u)


def pair_blocks(d: Digraph, scheme: WeightScheme, pair):
    """``(J(u,v), K(u,v), L(u,v))`` restricted to the arcs between ``u`` and ``v``."""
    pm = proof_matrices(d, scheme)
    arcs = block_arcs(d, pair)
    verts = range(d.vertex_count)
    return (pm.J.submatrix(arcs, arcs),
            pm.K.submatrix(arcs, verts),
            pm.L.submatrix(verts, arcs))


def block_A(d: Digraph, scheme: WeightScheme, pair) -> Matrix:
    _, k, l = pair_blocks(d, scheme, pair)
    return l @ k


def block_D(d: Digraph, scheme: WeightScheme, pair) -> Matrix:
    j, k, l = pair_blocks(d, scheme, pair)
    return l @ j @ k


# -- classical closed forms ----------------------------------------------------

CLASSICAL_VARIANTS = ("IHARA", "BOWEN_LANFORD", "MIZUNO_SATO", "SATO", "BARTHOLDI")


def _require_simple(g: Graph):
    if not g.is_simple():
        raise NotSimpleGraphError("this closed form needs a simple graph")


def _reciprocal(field, prefactors, mat: Matrix) -> UniPoly:
    """``prod(base^exp) * det(mat)`` where ``mat`` is polynomial in ``t``.

    ``prefactors`` is a list of ``(UniPoly, exponent)``; negative exponents are
    handled in ``field(t)`` and the result must come out polynomial.
    """
    tf = rational_functions_in_t(field)
    det = det_bareiss(mat) if mat.rows else PolynomialRing(field, "t").one
    acc = tf.coerce(det)
    for base, e in prefactors:
        acc = acc * tf.coerce(base) ** e
    if not acc.is_polynomial():
        raise IharaConsistencyError(f"closed form is not a polynomial: {tf.format(acc)}")
    return acc.num


def _tpoly(field, coeffs) -> UniPoly:
    return UniPoly(field, coeffs, "t")


def _quadratic_matrix(field, c1: Matrix, c2: Matrix) -> Matrix:
    """``I - t c1 + t^2 c2`` as a matrix over ``field[t]``."""
    ring = PolynomialRing(field, "t")
    n = c1.rows
    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(_tpoly(field, [field.one if i == j else field.zero,
                                          -field.coerce(c1[i, j]), field.coerce(c2[i, j])]))
    return Matrix._raw(ring, n, n, entries)


def bass_ihara_classical(g: Graph) -> UniPoly:
    """``(1 - t^2)^(|E|-|V|) det(I - tA + t^2(D - I))`` for a simple graph."""
    _require_simple(g)
    n = g.vertex_count
    A = g.adjacency_matrix().change_ring(QQ)
    D = g.degree_matrix().change_ring(QQ)
    mat = _quadratic_matrix(QQ, A, D - Matrix.identity(QQ, n))
    return _reciprocal(QQ, [(_tpoly(QQ, [1, 0, -1]), len(g.edges) - n)], mat)


def weighted_matrix(g: Graph, weights, field=QQ) -> Matrix:
    """``W[u][v]`` from a mapping of ordered vertex pairs to weights.

    Unlisted pairs joined by an edge default to 1; non-edges are 0.
    """
    _require_simple(g)
    n = g.vertex_count
    W = [[field.zero] * n for _ in range(n)]
    for u, v in g.edges:
        W[u][v] = field.coerce(weights.get((u, v), 1))
        W[v][u] = field.coerce(weights.get((v, u), 1))
    return Matrix.from_rows(field, W) if n else Matrix.zeros(field, 0)


def weighted_matrix_from_scheme(g: Graph, scheme: WeightScheme) -> Matrix:
    """``W[u][v] = tau(a_uv)`` for a scheme on ``symmetric_digraph(g)``."""
    d, _ = symmetric_digraph(g)
    return weighted_matrix(g, {arc: scheme.tau[a] for a, arc in enumerate(d.arcs)},
                           scheme.field)


def classical_closed_forms(g: Graph, variant: str, W: Matrix | None = None,
                           q=None, tau=None) -> UniPoly:
    """Reciprocal of the classical Ihara expression of ``variant`` for ``g``.

    * ``IHARA``: Bass-Ihara.
    * ``MIZUNO_SATO``: ``(1-t^2)^(|E|-|V|) det(I - tW + t^2(D - I))``.
    * ``SATO``: as above with ``D`` replaced by the row sums of ``W``.
    * ``BARTHOLDI``: any graph; ``q=None`` works over ``Q(q)``.  A loop adds
      1 to the adjacency diagonal and 1 to the degree.
    * ``BOWEN_LANFORD``: ``det(I - tW)`` (``W`` defaults to the adjacency matrix).
    """
    variant = variant.upper()
    n = g.vertex_count
    if variant == "IHARA":
        return bass_ihara_classical(g)
    if variant in ("MIZUNO_SATO", "SATO"):
        _require_simple(g)
        W = W if W is not None else g.adjacency_matrix().change_ring(QQ)
        F = W.ring
        if variant == "MIZUNO_SATO":
            D = g.degree_matrix().change_ring(F)
        else:
            D = Matrix.diagonal(F, [_sum(F, W.row(u)) for u in range(n)]) if n else Matrix.zeros(F, 0)
        mat = _quadratic_matrix(F, W, D - Matrix.identity(F, n))
        return _reciprocal(F, [(_tpoly(F, [1, 0, -1]), len(g.edges) - n)], mat)
    if variant == "BARTHOLDI":
        if q is None:
            F, qv = QQ_q, QQ_q.gen()
        else:
            F, qv = QQ, QQ.coerce(q)
        p = F.one - qv
        A = Matrix.from_rows(F, g.adjacency_matrix().to_rows()) if n else Matrix.zeros(F, 0)
        deg = [0] * n
        for u, v in g.edges:
            deg[u] += 1
            if u != v:
                deg[v] += 1
        Dm = Matrix.diagonal(F, [F.coerce(x) - p for x in deg]) if n else Matrix.zeros(F, 0)
        mat = _quadratic_matrix(F, A, Dm * p)
        loops = g.loop_count
        return _reciprocal(F, [(_tpoly(F, [F.one, p]), loops),
                               (_tpoly(F, [F.one, F.zero, -(p * p)]), len(g.edges) - loops - n)],
                           mat)
    if variant == "BOWEN_LANFORD":
        W = W if W is not None else g.adjacency_matrix().change_ring(QQ)
        return reciprocal_char_poly(W)
    raise ValueError(f"unknown classical variant {variant!r}; expected one of {CLASSICAL_VARIANTS}")


def preset_scheme(d: Digraph, preset: Preset, q=None) -> WeightScheme:
    """The all-ones representative of a preset (Bartholdi takes ``q``)."""
    if preset is Preset.BARTHOLDI:
        return WeightScheme.bartholdi(d, q)
    if preset is Preset.BOWEN_LANFORD:
        return WeightScheme.bowen_lanford(d)
    n = d.arc_count
    return WeightScheme((1,) * n, (1,) * n, preset)
