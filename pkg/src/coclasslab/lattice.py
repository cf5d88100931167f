"""Predicted normal-subgroup lattices: the heading diamond over a rectangle
of trailing diamonds, the counting formula, central-series structure, the
brute-force verifier, and a DOT emitter.

For defect-0 groups of coclass r >= 2 the normal lattice consists of the
group, its p+1 maximal subgroups, the derived subgroup, and the direct
products P(j,l) indexed by a (c-1) x r grid together with p-1 inner
vertices per trailing diamond.  The prime stays symbolic in the counting
formulas even though only p = 3 groups are realizable by the engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import ConcreteGroup, Subgroup, descriptor
from .errors import PreconditionDefect, UnsupportedShape
from .invariants import AbelianType, ati_from_order_counts
from collections import Counter

NodeKey = tuple


def _odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, int(p ** 0.5) + 1, 2))


def _check_shape(p: int, c: int, r: int) -> None:
    if not _odd_prime(p):
        raise UnsupportedShape(f"p must be an odd prime >= 3, got {p}")
    if r < 2:
        raise UnsupportedShape(
            "coclass 1 lattices are chains; use maximal_class_lattice")
    if c < r + 1:
        raise UnsupportedShape(f"need c >= r + 1, got c={c}, r={r}")


def normal_count(p: int, c: int, r: int) -> int:
    """Total number of normal subgroups: 1 + c + r + p(3 + cr - c - 2r)."""
    _check_shape(p, c, r)
    return 1 + c + r + p * (3 + c * r - c - 2 * r)


@dataclass
class LatticeModel:
    p: int
    c: int
    r: int
    nodes: dict[NodeKey, int]                  # node -> logarithmic order
    edges: set[tuple[NodeKey, NodeKey]]        # covering relations, upper first
    diamonds: list[tuple[NodeKey, NodeKey]]    # (upper, lower) pairs
    lcs_terms: dict[int, NodeKey] = field(default_factory=dict)   # j = 1..c+1
    ucs_terms: dict[int, NodeKey] = field(default_factory=dict)   # j = 0..c

    @property
    def node_count(self) -> int:
        return len(self.nodes)


def _grid_lo(c: int, r: int, j: int, l: int) -> int:
    return (c + 1 - j) + (r + 2 - l)


def predicted_lattice(p: int, c: int, r: int) -> LatticeModel:
    """The lattice model for defect-0 groups of coclass r >= 2."""
    _check_shape(p, c, r)
    n = c + r
    nodes: dict[NodeKey, int] = {("G",): n, ("G'",): n - 2}
    for i in range(1, p + 2):
        nodes[("M", i)] = n - 1
    for j in range(3, c + 2):
        for l in range(3, r + 3):
            nodes[("P", j, l)] = _grid_lo(c, r, j, l)
    edges: set[tuple[NodeKey, NodeKey]] = set()
    diamonds: list[tuple[NodeKey, NodeKey]] = [(("G",), ("G'",))]
    for i in range(1, p + 2):
        edges.add((("G",), ("M", i)))
        edges.add((("M", i), ("G'",)))
    edges.add(((("G'",)), ("P", 3, 3)))
    for j in range(3, c + 1):
        for l in range(3, r + 2):
            upper, lower = ("P", j, l), ("P", j + 1, l + 1)
            diamonds.append((upper, lower))
            mids = [("P", j + 1, l), ("P", j, l + 1)]
            for i in range(1, p):
                mid = ("D", j, l, i)
                nodes[mid] = nodes[upper] - 1
                mids.append(mid)
            for mid in mids:
                edges.add((upper, mid))
                edges.add((mid, lower))

    lcs = {1: ("G",), 2: ("G'",)}
    for j in range(3, r + 2):
        lcs[j] = ("P", j, j)
    for j in range(r + 2, c + 1):
        lcs[j] = ("P", j, r + 2)
    lcs[c + 1] = ("P", c + 1, r + 2)
    ucs = {0: ("P", c + 1, r + 2), c - 1: ("G'",), c: ("G",)}
    for j in range(1, r):
        ucs[j] = ("P", c + 1 - j, r + 2 - j)
    for j in range(r, c - 1):
        ucs[j] = ("P", c + 1 - j, 3)

    model = LatticeModel(p, c, r, nodes, edges, diamonds, lcs, ucs)
    assert model.node_count == normal_count(p, c, r)
    return model


def maximal_class_lattice(p: int, c: int) -> LatticeModel:
    """Degenerate chain lattice of maximal-class (coclass 1) groups: the
    heading diamond over the lower central chain; the upper central series
    is the reverse of the lower one."""
    if not _odd_prime(p):
        raise UnsupportedShape(f"p must be an odd prime >= 3, got {p}")
    if c < 1:
        raise UnsupportedShape(f"need class >= 1, got {c}")
    n = c + 1
    nodes: dict[NodeKey, int] = {("G",): n}
    for i in range(1, p + 2):
        nodes[("M", i)] = n - 1
    for j in range(2, c + 2):
        nodes[("g", j)] = n - j
    edges: set[tuple[NodeKey, NodeKey]] = set()
    for i in range(1, p + 2):
        edges.add((("G",), ("M", i)))
        edges.add((("M", i), ("g", 2)))
    for j in range(2, c + 1):
        edges.add((("g", j), ("g", j + 1)))
    lcs = {1: ("G",)}
    for j in range(2, c + 2):
        lcs[j] = ("g", j)
    ucs = {c: ("G",)}
    for j in range(0, c):
        ucs[j] = ("g", c + 1 - j)
    return LatticeModel(p, c, 1, nodes, edges, [(("G",), ("g", 2))], lcs, ucs)


# --------------------------------------------------------------------------
# Central series structure
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CentralSeriesSpec:
    """Expected factor types and grid positions of both central series."""

    p: int
    c: int
    r: int
    gamma_factors: tuple[AbelianType, ...]    # gamma_j / gamma_{j+1}, j = 1..c
    zeta_factors: tuple[AbelianType, ...]     # zeta_j / zeta_{j-1}, j = 1..c
    gamma_terms: dict[int, NodeKey]
    zeta_terms: dict[int, NodeKey]

    def chi(self, j: int) -> str:
        """Two-step centralizer chi_j: the derived subgroup up to j = r, the
        distinguished maximal subgroup before the class is reached, then
        the whole group.  No maximal subgroup occurs when c = r + 1."""
        if j < 1:
            raise UnsupportedShape(f"chi index must be >= 1, got {j}")
        if j <= self.r:
            return "derived"
        if j <= self.c - 1:
            return "maximal"
        return "group"


def central_series_spec(p: int, c: int, r: int) -> CentralSeriesSpec:
    _check_shape(p, c, r)
    pp = AbelianType((1, 1))
    cyc = AbelianType((1,))
    gamma = [pp if (j == 1 or 3 <= j <= r + 1) else cyc for j in range(1, c + 1)]
    zeta = [pp if (j <= r - 1 or j == c) else cyc for j in range(1, c + 1)]
    model = predicted_lattice(p, c, r)
    return CentralSeriesSpec(p, c, r, tuple(gamma), tuple(zeta),
                             dict(model.lcs_terms), dict(model.ucs_terms))


# --------------------------------------------------------------------------
# Verification against brute force
# --------------------------------------------------------------------------

@dataclass
class LatticeCheck:
    name: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        return f"[{'ok' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


@dataclass
class LatticeReport:
    group_order: int
    c: int
    r: int
    checks: list[LatticeCheck]

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def __str__(self) -> str:
        head = (f"normal lattice verification: order 3^"
                f"{self.c + self.r}, c={self.c}, r={self.r}")
        return "\n".join([head] + [str(ch) for ch in self.checks])


def _factor_type(g: ConcreteGroup, upper: Subgroup, lower: Subgroup) -> AbelianType:
    return ati_from_order_counts(g.quotient_census(upper, lower))


def verify_lattice(g: ConcreteGroup) -> LatticeReport:
    """Compare the brute-force normal lattice of a realized group against
    the predicted model: subgroup count, node orders, covering relations,
    diamond structure, central series factors and terms, two-step
    centralizers."""
    d = descriptor(g)
    if d.k != 0:
        raise PreconditionDefect(
            f"lattice prediction requires defect 0, group has k = {d.k}")
    p, c, r = 3, d.c, d.r
    model = predicted_lattice(p, c, r)
    spec = central_series_spec(p, c, r)
    normals = g.normal_subgroups
    checks: list[LatticeCheck] = []

    def add(name, passed, detail):
        checks.append(LatticeCheck(name, bool(passed), detail))

    expected = normal_count(p, c, r)
    add("normal subgroup count", len(normals) == expected,
        f"brute force {len(normals)} vs formula {expected}")

    def lo(m: int) -> int:
        e = 0
        while m % 3 == 0:
            m //= 3
            e += 1
        return e

    got_nodes = Counter(lo(h.order) for h in normals)
    want_nodes = Counter(model.nodes.values())
    add("node orders", got_nodes == want_nodes,
        f"multiset of logarithmic orders {dict(sorted(got_nodes.items()))}")

    covers = []
    for upper in normals:
        for lower in normals:
            if lower.order >= upper.order or not lower <= upper:
                continue
            strictly_between = [m for m in normals
                                if lower.order < m.order < upper.order
                                and lower <= m and m <= upper]
            if not strictly_between:
                covers.append((upper, lower))
    got_edges = Counter((lo(u.order), lo(v.order)) for u, v in covers)
    want_edges = Counter((model.nodes[a], model.nodes[b]) for a, b in model.edges)
    add("covering relations", got_edges == want_edges,
        f"{sum(got_edges.values())} covering pairs vs model {len(model.edges)}")

    # the model's heading-plus-rectangle skeleton must occur among the
    # actual diamonds; the lattice may contain further diamond pairs (any
    # elementary index-9 quotient qualifies), so this is a containment test
    got_diamonds = _diamond_pairs(g, normals)
    want_tops = Counter(model.nodes[a] for a, _ in model.diamonds)
    got_tops = Counter(lo(u.order) for u, _ in got_diamonds)
    contained = all(got_tops[lo_val] >= mult for lo_val, mult in want_tops.items())
    add("diamonds", contained,
        f"{len(got_diamonds)} diamond pairs contain the {len(model.diamonds)} "
        "of the skeleton")

    lcs = g.lower_central_series
    gamma_types = tuple(_factor_type(g, lcs[j], lcs[j + 1]) for j in range(c))
    add("lower central factors", gamma_types == spec.gamma_factors,
        " ".join(str(t) for t in gamma_types))
    ucs = g.upper_central_series
    zeta_types = tuple(_factor_type(g, ucs[j], ucs[j - 1]) for j in range(1, c + 1))
    add("upper central factors", zeta_types == spec.zeta_factors,
        " ".join(str(t) for t in zeta_types))

    ok_gamma = len(lcs) == c + 1 and all(
        lo(lcs[j - 1].order) == model.nodes[spec.gamma_terms[j]]
        for j in range(1, c + 2))
    add("lower central terms on the grid", ok_gamma,
        "orders " + " ".join(str(h.order) for h in lcs))
    ok_zeta = len(ucs) == c + 1 and all(
        lo(ucs[j].order) == model.nodes[spec.zeta_terms[j]]
        for j in range(0, c + 1))
    add("upper central terms on the grid", ok_zeta,
        "orders " + " ".join(str(h.order) for h in ucs))
    add("zeta_{c-1} equals the derived subgroup",
        ucs[c - 1] == g.derived_subgroup,
        f"|zeta_{c - 1}| = {ucs[c - 1].order}, |G'| = {g.derived_subgroup.order}")

    bicyclic = sum(1 for t in gamma_types if t == AbelianType((1, 1)))
    add("coclass as bicyclic factor count", bicyclic == r,
        f"{bicyclic} bicyclic factors vs coclass {r}")

    chi_ok, chi_detail = _check_two_step_centralizers(g, lcs, spec)
    add("two-step centralizers", chi_ok, chi_detail)

    return LatticeReport(g.order, c, r, checks)


def _diamond_pairs(g: ConcreteGroup, normals) -> list:
    """All diamonds (U, V): normal pairs with V < U, (U:V) = 9 and U/V of
    exponent 3 (hence elementary bicyclic)."""
    out = []
    for upper in normals:
        for lower in normals:
            if upper.order != 9 * lower.order or not lower <= upper:
                continue
            if all(g.cube(int(e)) in lower for e in upper.elems):
                out.append((upper, lower))
    return out


def _check_two_step_centralizers(g: ConcreteGroup, lcs, spec) -> tuple[bool, str]:
    gp = g.derived_subgroup
    candidates = [(gp, "derived")] + [(h, "maximal") for h in g.maximal_subgroups] \
        + [(g.full_subgroup(), "group")]
    c = spec.c
    kinds = []
    for j in range(2, c + 1):
        gam_j = lcs[j - 1]
        gam_j2 = lcs[j + 1] if j + 1 < len(lcs) else lcs[-1]
        best = None
        for h, kind in candidates:
            good = all(g.comm(int(a), int(b)) in gam_j2
                       for a in h.gens for b in gam_j.gens)
            if good and (best is None or h.order > best[0].order):
                best = (h, kind)
        kinds.append((j, best[1] if best else "none"))
    want = [(j, spec.chi(j)) for j in range(2, c + 1)]
    return kinds == want, " ".join(f"chi_{j}={k}" for j, k in kinds)


# --------------------------------------------------------------------------
# DOT emission
# --------------------------------------------------------------------------

def _node_name(key: NodeKey) -> str:
    if key == ("G",):
        return "G"
    if key == ("G'",):
        return "Gp"
    return "_".join(str(part) for part in key).replace("'", "p")


def _node_label(model: LatticeModel, key: NodeKey) -> str:
    if key == ("G",):
        base = "G"
    elif key == ("G'",):
        base = "G'"
    elif key[0] == "M":
        base = f"H{key[1]}"
    elif key[0] == "P":
        base = f"P({key[1]},{key[2]})"
    elif key[0] == "g":
        base = f"gamma{key[1]}"
    else:
        base = ""
    marks = []
    for j, k in sorted(model.lcs_terms.items()):
        if k == key:
            marks.append(f"gamma{j}")
    for j, k in sorted(model.ucs_terms.items()):
        if k == key:
            marks.append(f"zeta{j}")
    if key[0] == "g":
        marks = [m for m in marks if m != base]
    text = base
    if marks:
        text = (base + r"\n" if base else "") + " = ".join(marks)
    return text


def emit_diagram(model: LatticeModel) -> str:
    """Deterministic DOT rendering: one rank per logarithmic order, lower
    central series nodes filled, upper-series-only nodes as open double
    circles (the usual drawing convention for these lattices)."""
    lcs_keys = set(model.lcs_terms.values())
    ucs_keys = set(model.ucs_terms.values())
    lines = [
        "digraph normal_lattice {",
        f'  label="normal lattice: p={model.p}, c={model.c}, r={model.r}";',
        "  rankdir=TB;",
        "  node [shape=circle, fontsize=10];",
        "  edge [arrowhead=none];",
    ]
    ordered = sorted(model.nodes, key=lambda k: (-model.nodes[k], _node_name(k)))
    for key in ordered:
        style = []
        if key in lcs_keys:
            style.append('style=filled, fillcolor=gray75')
        elif key in ucs_keys:
            style.append("shape=doublecircle")
        attr = ", ".join([f'label="{_node_label(model, key)}"'] + style)
        lines.append(f"  {_node_name(key)} [{attr}];")
    levels: dict[int, list[str]] = {}
    for key in ordered:
        levels.setdefault(model.nodes[key], []).append(_node_name(key))
    for lo_val in sorted(levels, reverse=True):
        members = "; ".join(levels[lo_val])
        lines.append(f'  {{ rank=same; lo{lo_val} [shape=plaintext, label="3^{lo_val}"]; {members}; }}')
    spine = [f"lo{v}" for v in sorted(levels, reverse=True)]
    if len(spine) > 1:
        lines.append("  " + " -> ".join(spine) + " [style=invis];")
    for a, b in sorted(model.edges, key=lambda e: (_node_name(e[0]), _node_name(e[1]))):
        lines.append(f"  {_node_name(a)} -> {_node_name(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


FIGURE_PARAMS: dict[int, tuple[tuple[int, int], ...]] = {
    # (c, r) per sub-lattice of the survey figures; r = 1 entries are chains
    2: ((9, 1), (7, 1), (5, 1), (3, 1), (1, 1)),
    3: ((7, 6), (5, 4), (3, 2)),
    4: ((7, 2), (6, 2), (5, 2), (4, 2)),
    5: ((7, 4), (6, 4), (5, 3)),
    6: ((11, 8),),
}


def figure_models(figure: int, p: int = 3) -> list[LatticeModel]:
    """The lattice models behind one of the survey figures (2..6)."""
    if figure not in FIGURE_PARAMS:
        raise UnsupportedShape(f"no figure {figure}; choose 2..6")
    out = []
    for c, r in FIGURE_PARAMS[figure]:
        out.append(maximal_class_lattice(p, c) if r == 1
                   else predicted_lattice(p, c, r))
    return out
