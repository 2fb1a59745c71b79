"""Synthetic core/gateway topologies, the two degree-preserving rewiring
presets used for sensitivity studies, before/after sensitivity reports, and
DOT rendering.

The bundled 65-node "abilene" preset mimics an Abilene-style backbone: a
small ring core through which everything interconnects, ten gateway nodes
attached round-robin to the core, and one star subnet per gateway. The first
two gateways carry 9-node subnets whose border node pairs are cross-linked
for redundancy, giving both gateways degree 10. The exact interior wiring
beyond those constraints follows the deterministic fill rule implemented
here; the constraints themselves are machine-checked at generation time.
"""

from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass, replace

import numpy as np

from .graph import Graph, GraphError, components, degree_sequence, rewire
from .zoo import centrality_report

DIRECTION_DEADBAND = 1e-12
UP, DOWN, FLAT = "↑", "↓", "↔"


class ConstraintError(GraphError):
    """Generated topology violates a stated constraint."""


@dataclass(frozen=True)
class TopologySpec:
    """Core ring size, gateway count, per-gateway subnet sizes, extra
    redundancy edges (by node id), and the recorded seed."""

    core_size: int
    gateway_count: int
    subnet_sizes: tuple
    redundant_pairs: tuple = ()
    seed: int = 42


ABILENE_PRESET = TopologySpec(
    core_size=4,
    gateway_count=10,
    subnet_sizes=(9, 9, 5, 4, 4, 4, 4, 4, 4, 4),
    redundant_pairs=((21, 22), (23, 24)),
    seed=42,
)


def gen_core_gateway(spec: TopologySpec) -> Graph:
    """Deterministic topology for a spec: ring core, round-robin gateways,
    star subnets, plus the spec's redundancy edges. Same spec + seed gives a
    byte-identical edge list."""
    c, m = spec.core_size, spec.gateway_count
    if c < 1:
        raise ConstraintError("core_size must be >= 1")
    if m < 1:
        raise ConstraintError("gateway_count must be >= 1")
    if len(spec.subnet_sizes) != m:
        raise ConstraintError(
            f"expected {m} subnet sizes, got {len(spec.subnet_sizes)}"
        )
    if any(s < 1 for s in spec.subnet_sizes):
        raise ConstraintError("subnet sizes must be >= 1")
    n = c + m + sum(spec.subnet_sizes)
    edges = []
    if c == 2:
        edges.append((0, 1))
    elif c > 2:
        edges.extend((i, (i + 1) % c) for i in range(c))
    for i in range(1, m + 1):
        gw = c + i - 1
        core = math.ceil(i * c / m) - 1
        edges.append((gw, core))
    nxt = c + m
    for gi, size in enumerate(spec.subnet_sizes):
        gw = c + gi
        edges.extend((gw, nxt + k) for k in range(size))
        nxt += size
    present = {(min(u, v), max(u, v)) for u, v in edges}
    for u, v in spec.redundant_pairs:
        key = (min(u, v), max(u, v))
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ConstraintError(f"redundant pair ({u},{v}) is not a valid edge")
        if key in present:
            raise ConstraintError(f"redundant pair ({u},{v}) already wired")
        present.add(key)
        edges.append((u, v))
    labels = [f"v{i + 1}" for i in range(n)]
    return Graph(n, edges, labels=labels)


def abilene_topology(seed: int = 42) -> Graph:
    """The 65-node preset, with its stated constraints machine-checked."""
    g = gen_core_gateway(replace(ABILENE_PRESET, seed=seed))
    check_abilene_constraints(g)
    return g


def _resolve(g: Graph, k: int) -> int:
    """Map preset label number k (v-k) to a node id."""
    if g.labels is not None:
        return g.index_of(f"v{k}")
    if not (1 <= k <= g.n):
        raise GraphError(f"node v{k} outside graph of {g.n} nodes")
    return k - 1


def check_abilene_constraints(g: Graph):
    """Assert every stated property of the 65-node preset; raise naming the
    first violated constraint."""
    def fail(msg):
        raise ConstraintError(f"preset constraint violated: {msg}")

    if g.n != 65:
        fail(f"expected 65 nodes, got {g.n}")
    if len(components(g)) != 1:
        fail("topology must be connected")
    v = lambda k: _resolve(g, k)
    deg = g.degrees
    for k in (5, 6):
        if deg[v(k)] != 10:
            fail(f"d(v{k}) must be 10, got {deg[v(k)]:g}")
    for k in range(15, 24):
        if not g.has_edge(v(5), v(k)):
            fail(f"v{k} must sit in v5's star subnet")
    if not g.has_edge(v(22), v(23)):
        fail("v22-v23 redundancy edge missing")
    if not g.has_edge(v(24), v(25)):
        fail("v24-v25 redundancy edge missing")
    for a, b in ((15, 5), (6, 1)):
        if not g.has_edge(v(a), v(b)):
            fail(f"edge e_{a},{b} needed for the first rewiring preset")
    # failure of e_{5,1} must strand 10 nodes before PERT-I and 19 after
    for expect, graph in ((10, g), (19, pert_preset(g, "pert1"))):
        cut = rewire(graph, remove=[(v(5), v(1))], add=[], check_connected=False)
        comps = components(cut)
        if len(comps) != 2:
            fail("removing e_5,1 must split the graph in exactly two")
        stranded = min(len(c) for c in comps)
        if stranded != expect:
            fail(f"removing e_5,1 must strand {expect} nodes, got {stranded}")


PRESET_MOVES = {
    "pert1": (((15, 5), (6, 1)), ((15, 1), (6, 5))),
    "pert2": (((22, 23), (24, 25)), ((22, 25), (23, 24))),
}
_PRESET_ALIASES = {
    "pert1": "pert1", "pert-i": "pert1", "i": "pert1", "1": "pert1",
    "pert2": "pert2", "pert-ii": "pert2", "ii": "pert2", "2": "pert2",
}


def pert_preset(g: Graph, which: str) -> Graph:
    """Apply one of the named degree-preserving rewirings (by node label,
    so relabelings commute with the preset)."""
    key = _PRESET_ALIASES.get(str(which).strip().lower())
    if key is None:
        raise GraphError(f"unknown perturbation preset {which!r}")
    removes, adds = PRESET_MOVES[key]
    try:
        rm = [(_resolve(g, a), _resolve(g, b)) for a, b in removes]
        ad = [(_resolve(g, a), _resolve(g, b)) for a, b in adds]
    except GraphError as exc:
        raise GraphError(f"{key} preset not applicable: {exc}") from exc
    out = rewire(g, rm, ad)
    if degree_sequence(out) != degree_sequence(g):
        raise GraphError(f"{key} preset failed to preserve the degree sequence")
    return out


# -- sensitivity --------------------------------------------------------

DESCRIPTOR_KEYS = ("kstar", "randic", "gc_mean", "sc_mean", "gb_mean",
                   "rb_mean", "cstar_mean", "kirchhoff")


def graph_descriptors(g: Graph) -> dict:
    """Graph-level descriptors: K*, Randic index, and index averages."""
    rep = centrality_report(g)
    avg = rep.averages()
    return {
        "kstar": rep.kstar,
        "randic": rep.randic,
        "gc_mean": avg["gc"],
        "sc_mean": avg["sc"],
        "gb_mean": avg["gb"],
        "rb_mean": avg["rb"],
        "cstar_mean": avg["cstar"],
        "kirchhoff": rep.kirchhoff,
    }


@dataclass(frozen=True)
class SensitivityReport:
    before: dict
    after: dict
    deltas: dict
    directions: dict

    def to_dict(self):
        return {"before": self.before, "after": self.after,
                "deltas": self.deltas, "directions": self.directions}


def _direction(delta: float) -> str:
    if abs(delta) < DIRECTION_DEADBAND:
        return FLAT
    return UP if delta > 0 else DOWN


def sensitivity_report(before: Graph, after: Graph) -> SensitivityReport:
    """Relative descriptor changes (after - before) / before with direction
    arrows; the K* delta is cross-checked against the K delta."""
    if before.n != after.n:
        raise GraphError(
            f"graphs differ in size ({before.n} vs {after.n} nodes)"
        )
    db = graph_descriptors(before)
    da = graph_descriptors(after)
    deltas = {}
    for key in DESCRIPTOR_KEYS:
        base, new = db[key], da[key]
        if base == 0.0:
            deltas[key] = 0.0 if new == 0.0 else math.copysign(math.inf, new - base)
        else:
            deltas[key] = (new - base) / base
    expected_kstar = -deltas["kirchhoff"] * db["kirchhoff"] / da["kirchhoff"]
    if abs(deltas["kstar"] - expected_kstar) > 1e-9 * max(1.0, abs(deltas["kstar"])):
        raise ArithmeticError("K* delta inconsistent with K delta")
    directions = {key: _direction(deltas[key]) for key in DESCRIPTOR_KEYS}
    return SensitivityReport(before=db, after=da, deltas=deltas, directions=directions)


# -- rendering -----------------------------------------------------------

_HUE_MAX = 0.4833  # turquoise; 0.0 is red
_SATURATION = 0.78
_VALUE = 0.92


def _ramp_color(t: float) -> str:
    """t = 1 maps to red (largest value), t = 0 to turquoise."""
    hue = (1.0 - t) * _HUE_MAX
    r, g, b = colorsys.hsv_to_rgb(hue, _SATURATION, _VALUE)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def export_dot(g: Graph, values, metric: str = "metric") -> str:
    """DOT text with nodes filled on a red-to-turquoise ramp by descending
    value. Deterministic bytes for fixed input."""
    values = np.asarray(values, dtype=float)
    if values.shape != (g.n,):
        raise GraphError(f"expected {g.n} values, got {values.shape}")
    lo, hi = float(values.min()), float(values.max())
    span = hi - lo
    lines = [
        f"graph {metric} {{",
        "  node [shape=circle, style=filled];",
    ]
    for i in range(g.n):
        t = 1.0 if span == 0.0 else (values[i] - lo) / span
        lines.append(
            f'  {i} [label="{g.label_of(i)}", fillcolor="{_ramp_color(t)}"];'
        )
    weighted = not g.unweighted
    for u, v, w in g.edges:
        if weighted:
            lines.append(f'  {u} -- {v} [label="{w:.12g}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
