"""Named graph families with documented vertex labellings.

Labelling conventions
---------------------
* ``path(n)``: ``0 - 1 - ... - n-1``.  ``cycle(n)`` adds ``n-1 - 0``.
* ``star(n)``: centre ``0``, leaves ``1..n-1``.
* ``spider(legs)``: centre ``0``; each leg is appended in order, nearest
  vertex first.
* :func:`make_gpsq`: core vertices first, then the interior of the
  ``u``-``v`` connecting path, then the path hung at ``u``, then the path
  hung at ``v``.  Each hung path is added by :func:`attach_path`, so its first
  new vertex touches the anchor and its last one is the leaf.
* :func:`make_gnk`: clique ``0..n-k-1``; pendant paths follow, longest first.
* :func:`make_ank`: centre ``0``, star leaves ``1..n-k``, pendant ``n-k+i``
  hangs on leaf ``i`` for ``i = 1..k-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .graph import Graph, GraphError, attach_path, edit, new_graph

SMITH_IDS = ("H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8")
# which Smith members sit strictly below 2 at alpha = 0
SMITH_BELOW_TWO = ("H1", "H2", "H3", "H4")


class FamilyError(ValueError):
    """Bad family parameters or unparseable family text."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"path needs n >= 1, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError(f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"star needs n >= 1, got {n}")
    return new_graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"complete graph needs n >= 1, got {n}")
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


_BASIC = {"path": path, "cycle": cycle, "star": star, "complete": complete}


def make_basic(kind: str, n: int) -> Graph:
    try:
        return _BASIC[kind.lower()](n)
    except KeyError:
        raise FamilyError(f"unknown basic family {kind!r}") from None


def spider(*legs: int) -> Graph:
    """Tree with one centre and legs of the given lengths (``T(a, b, c)`` etc.)."""
    if any(leg < 1 for leg in legs):
        raise FamilyError(f"spider legs must be positive, got {legs}")
    g = new_graph(1)
    for leg in legs:
        g = attach_path(g, 0, leg)
    return g


def double_fork(n: int) -> Graph:
    """Path with two pendant vertices at each end; ``n = 5`` gives ``K_{1,4}``."""
    if n < 5:
        raise FamilyError(f"double fork needs n >= 5, got {n}")
    spine = n - 4
    g = path(spine)
    for end in (0, spine - 1):
        g = attach_path(attach_path(g, end, 1), end, 1)
    return g


def smith_min_size(sid: str) -> int:
    return {"H1": 4, "H5": 5}.get(sid, 0)


def make_smith(sid: str, size: int | None = None) -> Graph:
    """Smith graphs other than paths and cycles.

    H1 = T(1,1,m) with ``size`` vertices, H2-H4 = T(1,2,2..4);
    H5 = double fork with ``size`` vertices, H6 = T(2,2,2), H7 = T(1,3,3),
    H8 = T(1,2,5).  ``size`` is ignored by the fixed members.
    """
    sid = sid.upper()
    if sid == "H1":
        if size is None or size < 4:
            raise FamilyError(f"H1 needs size >= 4, got {size}")
        return spider(1, 1, size - 3)
    if sid == "H5":
        if size is None or size < 5:
            raise FamilyError(f"H5 needs size >= 5, got {size}")
        return double_fork(size)
    fixed = {
        "H2": (1, 2, 2),
        "H3": (1, 2, 3),
        "H4": (1, 2, 4),
        "H6": (2, 2, 2),
        "H7": (1, 3, 3),
        "H8": (1, 2, 5),
    }
    if sid not in fixed:
        raise FamilyError(f"unknown Smith graph {sid!r}")
    return spider(*fixed[sid])


def smith_members(max_n: int) -> list[tuple[str, Graph]]:
    """All H1-H8 members, paths and cycles with at most ``max_n`` vertices.

    Labels are ``"H1"``..``"H8"``, ``"P"`` and ``"C"``.
    """
    out: list[tuple[str, Graph]] = []
    for sid in SMITH_IDS:
        if sid in ("H1", "H5"):
            for size in range(smith_min_size(sid), max_n + 1):
                out.append((sid, make_smith(sid, size)))
        else:
            g = make_smith(sid)
            if g.n <= max_n:
                out.append((sid, g))
    out += [("P", path(n)) for n in range(1, max_n + 1)]
    out += [("C", cycle(n)) for n in range(3, max_n + 1)]
    return out


# -- G_{p,s,q}(u, v) ----------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()
    options: tuple[tuple[str, int], ...] = ()

    def option(self, name: str) -> int:
        return dict(self.options)[name]

    def to_text(self) -> str:
        if self.kind == "gpsq":
            core = self.params[0]
            opts = ",".join(f"{k}={v}" for k, v in self.options)
            return f"gpsq:{core.kind}{core.params[0]},{opts}"
        if self.kind == "smith":
            return "smith:" + ",".join(str(p) for p in self.params)
        return f"{self.kind}:" + ",".join(str(p) for p in self.params)

    def __str__(self) -> str:
        return self.to_text()


def Cycle(c: int) -> FamilySpec:
    return FamilySpec("cycle", (c,))


def Complete(c: int) -> FamilySpec:
    return FamilySpec("complete", (c,))


@dataclass(frozen=True)
class PendantPathGraph:
    """``G_{p,s,q}(u, v)`` together with the named vertices used in proofs.

    ``u_path`` is ``u_1..u_p`` (``u_1`` the leaf, ``u_p`` next to ``u``),
    ``v_path`` likewise, and ``w_path`` is ``w_0 = v, ..., w_s = u``.
    """

    graph: Graph
    u: int
    v: int
    p: int
    s: int
    q: int
    u_path: tuple[int, ...]
    v_path: tuple[int, ...]
    w_path: tuple[int, ...]
    core: FamilySpec | None = field(default=None, compare=False)


def _host_with_link(core: FamilySpec, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Core graph with a ``v``-``u`` path of ``s`` edges whose interior has degree 2."""
    kind, c = core.kind, core.params[0]
    if kind == "cycle":
        host = cycle(c)
    elif kind == "complete":
        host = complete(c)
    else:
        raise FamilyError(f"G_psq core must be a cycle or complete graph, got {kind!r}")
    if s == 0:
        return host, (0,)
    v, u = 0, 1
    if s == 1:
        return host, (v, u)
    n0 = host.n
    interior = tuple(range(n0, n0 + s - 1))
    chain = (v,) + interior + (u,)
    g = Graph(n0 + s - 1, host.adj + ((),) * (s - 1))
    g = edit(g, remove=[(v, u)], add=list(zip(chain, chain[1:])))
    return g, chain


def make_gpsq_on(host: Graph, w_path: tuple[int, ...], p: int, q: int,
                 core: FamilySpec | None = None) -> PendantPathGraph:
    """Attach ``P_p`` at ``u = w_path[-1]`` and ``P_q`` at ``v = w_path[0]`` on any host."""
    if p < 0 or q < 0:
        raise FamilyError("path lengths must be non-negative")
    v, u = w_path[0], w_path[-1]
    s = len(w_path) - 1
    if s == 0 and u != v:
        raise FamilyError("s = 0 requires u == v")
    if s > 0 and u == v:
        raise FamilyError("s > 0 requires distinct u and v")
    for end in {u, v}:
        if host.degree(end) < 2:
            raise FamilyError(f"anchor {end} has host degree {host.degree(end)} < 2")
    for a, b in zip(w_path, w_path[1:]):
        if not host.has_edge(a, b):
            raise FamilyError(f"({a}, {b}) is not a host edge")
    for w in w_path[1:-1]:
        if host.degree(w) != 2:
            raise FamilyError(f"interior vertex {w} has degree {host.degree(w)} != 2")
    g = attach_path(host, u, p)
    u_path = tuple(reversed(range(host.n, host.n + p)))
    n1 = g.n
    g = attach_path(g, v, q)
    v_path = tuple(reversed(range(n1, n1 + q)))
    return PendantPathGraph(g, u, v, p, s, q, u_path, v_path, tuple(w_path), core)


def make_gpsq(core: FamilySpec, p: int, s: int, q: int) -> PendantPathGraph:
    """``G_{p,s,q}(u, v)`` over a cycle or complete core.

    With ``s = 0`` both paths hang at core vertex 0.  Otherwise ``v = 0`` and
    ``u = 1``; the edge between them is subdivided into ``s`` edges (for a
    complete core the new route replaces the edge ``uv``).
    """
    if s < 0:
        raise FamilyError(f"s must be non-negative, got {s}")
    c = core.params[0]
    if core.kind == "cycle" and c < 3 or core.kind == "complete" and c < 3:
        raise FamilyError(f"core {core} leaves an anchor with degree < 2")
    host, chain = _host_with_link(core, s)
    return make_gpsq_on(host, chain, p, q, core)


def almost_equal_lengths(total: int, parts: int) -> list[int]:
    base, extra = divmod(total, parts)
    return [base + 1] * extra + [base] * (parts - extra)


def make_gnk(n: int, k: int) -> Graph:
    """``K_{n-k}`` with pendant paths of almost equal lengths, ``k`` new vertices in all."""
    if k < 0 or n - k < 2:
        raise FamilyError(f"G_(n,k) needs k >= 0 and n - k >= 2, got n={n}, k={k}")
    g = complete(n - k)
    for v, length in enumerate(almost_equal_lengths(k, n - k)):
        g = attach_path(g, v, length)
    return g


def make_ank(n: int, k: int) -> Graph:
    """Star on ``n-k+1`` vertices with a pendant edge on ``k-1`` of its leaves."""
    if k < 1 or n < 2 * k:
        raise FamilyError(f"A(n,k) needs n >= 2k >= 2, got n={n}, k={k}")
    g = star(n - k + 1)
    for leaf in range(1, k):
        g = attach_path(g, leaf, 1)
    return g


# -- text form ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<sym>[:,=]))")


class _Parser:
    """Recursive-descent parser for family text such as ``gpsq:cycle4,p=3,s=1,q=1``."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.end() == m.start():
            return None, None, self.pos
        kind = m.lastgroup
        return kind, m.group(kind), m.start(kind)

    def _next(self, want: str | None = None, value: str | None = None):
        kind, tok, start = self._peek()
        if kind is None:
            where = self.pos
            while where < len(self.text) and self.text[where].isspace():
                where += 1
            if where < len(self.text):
                raise FamilyError(f"unexpected character {self.text[where]!r}", where)
            raise FamilyError(f"unexpected end of input, expected {value!r}" if value
                             else f"unexpected end of input, expected {want}", where)
        if (want and kind != want) or (value and tok != value):
            raise FamilyError(f"expected {value!r}, found {tok!r}" if value
                             else f"expected {want}, found {tok!r}", start)
        self.pos = _TOKEN.match(self.text, self.pos).end()
        return tok, start

    def _at_end(self) -> bool:
        return self.text[self.pos:].strip() == ""

    def _int(self) -> int:
        tok, _ = self._next("num")
        return int(tok)

    def _int_list(self) -> list[int]:
        vals = [self._int()]
        while not self._at_end():
            self._next("sym", ",")
            vals.append(self._int())
        return vals

    def parse(self) -> FamilySpec:
        name, start = self._next("name")
        name = name.lower()
        self._next("sym", ":")
        if name in _BASIC:
            vals = self._int_list()
            if len(vals) != 1:
                raise FamilyError(f"{name} takes one parameter", start)
            return FamilySpec(name, tuple(vals))
        if name in ("gnk", "ank"):
            vals = self._int_list()
            if len(vals) != 2:
                raise FamilyError(f"{name} takes two parameters n,k", start)
            return FamilySpec(name, tuple(vals))
        if name == "smith":
            sid, sid_pos = self._next("name")
            sid = sid.upper()
            if sid not in SMITH_IDS:
                raise FamilyError(f"unknown Smith graph {sid!r}", sid_pos)
            params: tuple = (sid,)
            if not self._at_end():
                self._next("sym", ",")
                params += (self._int(),)
            return FamilySpec("smith", params)
        if name == "gpsq":
            core_tok, core_pos = self._next("name")
            m = re.fullmatch(r"([A-Za-z]+)(\d*)", core_tok)
            core_kind = m.group(1).lower()
            if core_kind not in ("cycle", "complete"):
                raise FamilyError(f"unknown core {m.group(1)!r}", core_pos)
            if not m.group(2):
                raise FamilyError("core needs a size, e.g. cycle4", core_pos + len(core_tok))
            core = FamilySpec(core_kind, (int(m.group(2)),))
            opts = {}
            while not self._at_end():
                self._next("sym", ",")
                key, key_pos = self._next("name")
                if key not in ("p", "s", "q"):
                    raise FamilyError(f"unknown option {key!r}", key_pos)
                if key in opts:
                    raise FamilyError(f"duplicate option {key!r}", key_pos)
                self._next("sym", "=")
                opts[key] = self._int()
            missing = [k for k in "psq" if k not in opts]
            if missing:
                raise FamilyError(f"gpsq is missing {','.join(missing)}", len(self.text))
            return FamilySpec("gpsq", (core,), tuple((k, opts[k]) for k in "psq"))
        raise FamilyError(f"unknown family {name!r}", start)


def parse_family(text: str) -> FamilySpec:
    parser = _Parser(text)
    spec = parser.parse()
    if not parser._at_end():
        raise FamilyError("trailing input", parser.pos)
    return spec


def build(spec: FamilySpec | str) -> Graph:
    """Materialise a :class:`FamilySpec` (or its text form) as a graph."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.kind in _BASIC:
        return make_basic(spec.kind, spec.params[0])
    if spec.kind == "gnk":
        return make_gnk(*spec.params)
    if spec.kind == "ank":
        return make_ank(*spec.params)
    if spec.kind == "smith":
        return make_smith(*spec.params)
    if spec.kind == "gpsq":
        return make_gpsq(spec.params[0], spec.option("p"), spec.option("s"), spec.option("q")).graph
    raise FamilyError(f"unknown family kind {spec.kind!r}")
