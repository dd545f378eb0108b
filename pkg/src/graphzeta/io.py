"""Reading and writing digraph/weight documents and formatting results.

A digraph document is JSON::

    {"version": 1,
     "vertices": ["v1", "v2"],
     "arcs": [{"id": "a1", "tail": "v1", "head": "v2", "tau": "1/2", "upsilon": "1 - q"}],
     "scheme": {"preset": "GENERAL", "q": "2/3", "bartholdi_type": false}}

Weights are exact strings: rationals ``"p/r"`` or polynomial/rational
expressions in ``q``.  Integers are accepted as JSON numbers, floats never.
A graph document (for classical closed forms) has ``"edges"`` instead of
``"arcs"``; each edge is ``["u", "v"]`` or
``{"u": .., "v": .., "tau_uv": .., "tau_vu": ..}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .algebra import QQ, QQ_q, RatFunc, evaluate_q
from .digraph import Digraph, Graph
from .weights import Preset, PresetViolation, WeightScheme

FORMAT_VERSION = 1


class SpecError(ValueError):
    """Malformed or inconsistent input document."""


# -- q-expressions -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|([-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SpecError(f"unexpected character in weight {text!r} at position {pos}")
        num, q, op = m.groups()
        out.append(("num", int(num)) if num else ("q", None) if q else ("op", op))
        pos = m.end()
    return out


class _Parser:
    # expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
    # unary := ('+'|'-') unary | power ; power := atom ('^' int)?
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.uses_q = False

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take_op(self, *ops):
        kind, val = self.peek()
        if kind == "op" and val in ops:
            self.i += 1
            return val
        return None

    def parse(self):
        if not self.toks:
            raise SpecError("empty weight string")
        v = self.expr()
        if self.i != len(self.toks):
            raise SpecError(f"trailing input in weight {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while (op := self.take_op("+", "-")):
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while (op := self.take_op("*", "/")):
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if QQ_q.is_zero(w):
                    raise SpecError(f"division by zero in weight {self.text!r}")
                v = v / w
        return v

    def unary(self):
        op = self.take_op("+", "-")
        if op == "-":
            return -self.unary()
        if op == "+":
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.take_op("^"):
            kind, n = self.peek()
            if kind != "num":
                raise SpecError(f"exponent must be a non-negative integer in {self.text!r}")
            self.i += 1
            v = v ** n
        return v

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.i += 1
            return QQ_q.coerce(val)
        if kind == "q":
            self.i += 1
            self.uses_q = True
            return QQ_q.gen()
        if self.take_op("("):
            v = self.expr()
            if not self.take_op(")"):
                raise SpecError(f"unbalanced parentheses in {self.text!r}")
            return v
        raise SpecError(f"malformed weight {self.text!r}")


def parse_weight(value):
    """Parse a weight into ``(element, uses_q)``; the element is in ``Q`` unless ``q`` occurs."""
    if isinstance(value, bool) or isinstance(value, float):
        raise SpecError(f"weights must be exact strings or integers, got {value!r}")
    if isinstance(value, int):
        return QQ.coerce(value), False
    if not isinstance(value, str):
        raise SpecError(f"weights must be strings, got {type(value).__name__}")
    p = _Parser(value)
    v = p.parse()
    if p.uses_q:
        return v, True
    return v.num.coeff(0), False


# -- documents -------------------------------------------------------------------

@dataclass(frozen=True)
class DigraphSpec:
    digraph: Digraph
    scheme: WeightScheme
    arc_names: tuple[str, ...]
    bartholdi_type: bool = False

    @property
    def vertex_names(self):
        return self.digraph.vertex_names


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise SpecError("document must be a JSON object")
    version = doc.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise SpecError(f"unsupported document version {version!r}")
    return doc


def _vertices(doc) -> tuple[tuple[str, ...], dict]:
    names = doc.get("vertices")
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise SpecError("'vertices' must be a list of names")
    index = {}
    for k, name in enumerate(names):
        if name in index:
            raise SpecError(f"duplicate vertex name {name!r}")
        index[name] = k
    return tuple(names), index


def _resolve(index, name):
    try:
        return index[name]
    except (KeyError, TypeError):
        raise SpecError(f"unknown vertex {name!r}") from None


def _parse_preset(name) -> Preset:
    try:
        return Preset(str(name).upper())
    except ValueError:
        raise SpecError(f"unknown preset {name!r}; expected one of "
                        f"{', '.join(p.value for p in Preset)}") from None


def parse_spec(text: str, preset: Preset | str | None = None, eval_q=None) -> DigraphSpec:
    """Parse a digraph document into a digraph and weight scheme.

    ``preset`` overrides the document's scheme; omitted weights are filled
    with the preset's defaults.  ``eval_q`` substitutes a rational for ``q``
    in Bartholdi presets; it cannot be combined with literal ``q`` weights.
    """
    doc = _load(text)
    names, index = _vertices(doc)
    arcs_doc = doc.get("arcs")
    if not isinstance(arcs_doc, list):
        raise SpecError("'arcs' must be a list")
    sdoc = doc.get("scheme", {}) or {}
    if not isinstance(sdoc, dict):
        raise SpecError("'scheme' must be an object")
    if isinstance(preset, Preset):
        p = preset
    else:
        p = _parse_preset(preset if preset is not None else sdoc.get("preset", "GENERAL"))
    btype = bool(sdoc.get("bartholdi_type", False))

    arcs, arc_names, taus, upss = [], [], [], []
    literal_q = False
    seen_ids = set()
    for k, item in enumerate(arcs_doc):
        if not isinstance(item, dict):
            raise SpecError(f"arc #{k + 1} must be an object")
        aid = str(item.get("id", f"a{k + 1}"))
        if aid in seen_ids:
            raise SpecError(f"duplicate arc id {aid!r}")
        seen_ids.add(aid)
        arcs.append((_resolve(index, item.get("tail")), _resolve(index, item.get("head"))))
        arc_names.append(aid)
        for key, store in (("tau", taus), ("upsilon", upss)):
            if key in item:
                v, uses_q = parse_weight(item[key])
                literal_q |= uses_q
                store.append(v)
            else:
                store.append(None)
    d = Digraph(len(names), tuple(arcs), names)

    q_doc = sdoc.get("q")
    if eval_q is not None and literal_q:
        raise SpecError("--eval-q cannot be combined with weights that mention q")
    if eval_q is not None and q_doc is not None:
        raise SpecError("--eval-q conflicts with the q fixed in the document")
    qval = eval_q if eval_q is not None else q_doc
    if qval is not None:
        if literal_q:
            raise SpecError("a fixed q cannot be combined with weights that mention q")
        qval, uses_q = parse_weight(qval)
        if uses_q or isinstance(qval, RatFunc):
            raise SpecError("q must be a rational number")

    symbolic = literal_q or (qval is None and (p is Preset.BARTHOLDI or btype))
    field = QQ_q if symbolic else QQ
    try:
        scheme = _build_scheme(d, p, taus, upss, field, qval, btype)
    except PresetViolation as e:
        raise SpecError(str(e)) from None
    return DigraphSpec(d, scheme, tuple(arc_names), btype)


def _build_scheme(d, p, taus, upss, field, qval, btype) -> WeightScheme:
    if field is QQ_q:
        qsym = QQ_q.gen()
        one_minus_q = QQ_q.one - qsym
    else:
        one_minus_q = QQ.one - qval if qval is not None else None

    def lift(x):
        return None if x is None else field.coerce(x)

    taus = [lift(x) for x in taus]
    upss = [lift(x) for x in upss]
    if p is Preset.BARTHOLDI:
        if one_minus_q is None:
            raise SpecError("BARTHOLDI over Q needs a value for q")
        tau = [field.one if t is None else t for t in taus]
        ups = [one_minus_q if u is None else u for u in upss]
        return WeightScheme(tuple(tau), tuple(ups), p, field, qval if field is QQ else None)
    if p is Preset.BOWEN_LANFORD:
        default_u = field.zero
    else:
        default_u = None
    tau = [field.one if t is None else t for t in taus]
    ups = []
    for t, u in zip(tau, upss):
        if u is not None:
            ups.append(u)
        elif p is Preset.MIZUNO_SATO:
            ups.append(t)
        elif default_u is not None:
            ups.append(default_u)
        else:
            ups.append(field.one)
    if btype:
        if one_minus_q is None:
            raise SpecError("bartholdi_type needs q (symbolic or numeric)")
        ups = [one_minus_q * u for u in ups]
    return WeightScheme(tuple(tau), tuple(ups), p, field, None)


def serialize_spec(spec: DigraphSpec) -> str:
    """Canonical document: every weight explicit, sorted keys, two-space indent.

    Bartholdi-type upsilons are written before the ``(1 - q)`` factor is applied.
    """
    d, s = spec.digraph, spec.scheme
    names = d.vertex_names or tuple(d.vertex_name(v) for v in range(d.vertex_count))
    f = s.field
    ups = list(s.upsilon)
    if spec.bartholdi_type:
        factor = f.one - (QQ_q.gen() if f is QQ_q else f.coerce(s.q))
        ups = [u / factor for u in ups]
    arcs = []
    for a, (u, v) in enumerate(d.arcs):
        arcs.append({"id": spec.arc_names[a], "tail": names[u], "head": names[v],
                     "tau": f.format(s.tau[a]), "upsilon": f.format(ups[a])})
    scheme = {"preset": s.preset.value}
    if s.q is not None:
        scheme["q"] = QQ.format(s.q)
    if spec.bartholdi_type:
        scheme["bartholdi_type"] = True
    doc = {"version": FORMAT_VERSION, "vertices": list(names), "arcs": arcs, "scheme": scheme}
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class GraphSpec:
    graph: Graph
    vertex_names: tuple[str, ...]
    weights: dict  # (u, v) -> weight of the arc u -> v, only where given
    field: object


def parse_graph_spec(text: str) -> GraphSpec:
    doc = _load(text)
    names, index = _vertices(doc)
    edges_doc = doc.get("edges")
    if not isinstance(edges_doc, list):
        raise SpecError("'edges' must be a list")
    edges, weights = [], {}
    literal_q = False
    for k, item in enumerate(edges_doc):
        if isinstance(item, list) and len(item) == 2:
            u, v = (_resolve(index, x) for x in item)
        elif isinstance(item, dict):
            u, v = _resolve(index, item.get("u")), _resolve(index, item.get("v"))
            for key, pair in (("tau_uv", (u, v)), ("tau_vu", (v, u))):
                if key in item:
                    w, uses_q = parse_weight(item[key])
                    literal_q |= uses_q
                    weights[pair] = w
        else:
            raise SpecError(f"edge #{k + 1} must be [u, v] or an object")
        edges.append((u, v))
    field = QQ_q if literal_q else QQ
    weights = {k: field.coerce(w) for k, w in weights.items()}
    return GraphSpec(Graph(len(names), tuple(edges)), names, weights, field)


def fixture_path(name: str = "worked_example"):
    """Path of a document shipped with the package."""
    return resources.files("graphzeta") / "data" / f"{name}.json"


def load_fixture(name: str = "worked_example", **kw) -> DigraphSpec:
    return parse_spec(fixture_path(name).read_text(encoding="utf-8"), **kw)


def evaluate_spec_q(spec: DigraphSpec, value) -> DigraphSpec:
    """Substitute a rational for ``q`` in a symbolic spec."""
    s = spec.scheme
    if not s.is_symbolic:
        return spec
    return DigraphSpec(spec.digraph, s.at_q(value), spec.arc_names, spec.bartholdi_type)


__all__ = [
    "SpecError", "DigraphSpec", "GraphSpec", "parse_spec", "parse_graph_spec", "parse_weight",
    "serialize_spec", "fixture_path", "load_fixture", "evaluate_spec_q", "evaluate_q",
]
