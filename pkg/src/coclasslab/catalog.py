"""Validated presentations for the named groups, plus presentation builders.

Three parametrized families produce every catalog group:

* the two-parameter maximal-class family on generators x, y with the
  commutator chain s_2 = [y,x], s_j = [s_{j-1}, x] and power relations
  x^3 = s_{m-1}^w, y^3 s_2^3 s_3 = s_{m-1}^z, [y, s_2] = s_{m-1}^a;

* the coclass >= 2 family with the four commutator series s_j, t_j,
  sigma_j, tau_j and relational parameters alpha..rho in {-1, 0, 1};

* generic power-commutator forms of class 3 (order 243) and their
  one-dimensional central covers of class 4 (order 729), used for the
  sporadic groups the normalized family does not reach.

The shipped catalog file freezes one presentation per SmallGroups id
together with the expected invariants; identifications were established
empirically by matching Artin patterns and are annotated with their
evidence.  Where several ids share one table row, the assignment inside
the range is conventional and flagged as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import artin
from .engine import DEFAULT_ORDER_BOUND, GroupDescriptor, descriptor, realize
from .errors import UnknownId, UnsupportedParams
from .invariants import AbelianType, parse_log
from .presentations import (
    Presentation,
    Word,
    commutator,
    parse_word,
    winv,
    wmul,
    wpow,
)

_X: Word = (1,)
_Y: Word = (2,)


@dataclass(frozen=True)
class PresentationParams:
    """Relational parameters of the coclass >= 2 family."""

    c: int
    r: int
    alpha: int = 0
    beta: int = 0
    gamma: int = 0
    delta: int = 0
    rho: int = 0

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "rho"):
            if getattr(self, name) not in (-1, 0, 1):
                raise UnsupportedParams(f"{name} must be in -1..1")
        if self.r < 2 or self.c < self.r + 1:
            raise UnsupportedParams(
                f"family needs coclass >= 2 and c >= r + 1, got c={self.c}, r={self.r}")


def _series(c: int, r: int):
    s = {2: commutator(_Y, _X)}
    for j in range(3, c + 2):
        s[j] = commutator(s[j - 1], _X)
    t = {2: s[2]}
    for j in range(3, r + 4):
        t[j] = commutator(t[j - 1], _Y)
    sigma = {3: wpow(_Y, 3)}
    for j in range(4, c + 2):
        sigma[j] = commutator(sigma[j - 1], _X)
    tau = {3: wpow(_X, 3)}
    for j in range(4, r + 4):
        tau[j] = commutator(tau[j - 1], _Y)
    return s, t, sigma, tau


def parametrized_presentation(params: PresentationParams) -> Presentation:
    """The coclass >= 2 presentation with the given relational parameters.

    Series terms with index below their starting point (only sigma_{c-1}
    at c = 3) are legal solely with exponent zero; a nonzero exponent on
    an undefined term raises UnsupportedParams.
    """
    c, r = params.c, params.r
    s, t, sigma, tau = _series(c, r)

    def power(series, j, e):
        if e % 3 == 0:
            return ()
        if j not in series:
            raise UnsupportedParams(
                f"series index {j} undefined at (c={c}, r={r}) with nonzero exponent")
        return wpow(series[j], e)

    rb, rd = params.rho * params.beta, params.rho * params.delta
    rels = [
        s[c + 1], sigma[c + 1], t[r + 3], tau[r + 3],
        wmul(wpow(s[2], 3),
             winv(wmul(sigma[4], power(sigma, c, -rb), winv(tau[4])))),
        wmul(s[3], sigma[3], sigma[4],
             winv(wmul(power(sigma, c - 1, rb), power(sigma, c, params.gamma),
                       power(tau, r + 1, params.delta)))),
        wmul(winv(t[3]), tau[3], tau[4],
             winv(wmul(power(sigma, c - 1, rd), power(sigma, c, params.alpha),
                       power(tau, r + 1, params.beta)))),
        wmul(tau[r + 2], winv(power(sigma, c, -params.rho))),
    ]
    return Presentation(2, tuple(rel for rel in rels if rel), ("x", "y"))


def maximal_class_presentation(m: int, a: int = 0, z: int = 0, w: int = 0) -> Presentation:
    """Maximal-class (coclass 1) family of logarithmic order m >= 2.

    m = 2 is the abelian root; for m >= 3 the defect parameter a is 0 or 1
    (nonzero defect needs m >= 5) and z, w range over -1..1.
    """
    if m < 2:
        raise UnsupportedParams(f"need logarithmic order >= 2, got {m}")
    if a not in (0, 1) or z not in (-1, 0, 1) or w not in (-1, 0, 1):
        raise UnsupportedParams(f"parameters (a,z,w)=({a},{z},{w}) out of range")
    if m == 2:
        if (a, z, w) != (0, 0, 0):
            raise UnsupportedParams("the abelian root admits no parameters")
        return Presentation(
            2, (wpow(_X, 3), wpow(_Y, 3), commutator(_Y, _X)), ("x", "y"))
    if a == 1 and m < 5:
        raise UnsupportedParams("positive defect needs class >= 4")
    s = {2: commutator(_Y, _X)}
    for j in range(3, m + 1):
        s[j] = commutator(s[j - 1], _X)
    top = s[m - 1]
    rels = [s[m],
            wmul(commutator(_Y, s[2]), winv(wpow(top, a))),
            wmul(wpow(_X, 3), winv(wpow(top, w))),
            wmul(wpow(_Y, 3), wpow(s[2], 3), s.get(3, ()), winv(wpow(top, z)))]
    for j in range(2, m - 2):
        rels.append(wmul(wpow(s[j], 3), wpow(s[j + 1], 3), s.get(j + 2, ())))
    for i in range(2, m):
        for j in range(i + 1, m):
            rels.append(commutator(s[i], s[j]))
        if i >= 3:
            rels.append(commutator(s[i], _Y))
    return Presentation(2, tuple(rel for rel in rels if rel), ("x", "y"))


# --------------------------------------------------------------------------
# Generic power-commutator forms for the sporadic groups
# --------------------------------------------------------------------------

_S2 = commutator(_Y, _X)
_S3 = commutator(_S2, _X)
_T3 = commutator(_S2, _Y)


def _span(coeffs, base) -> Word:
    return wmul(*[wpow(word, e) for word, e in zip(base, coeffs)])


def class3_pc_presentation(xc, yc, sc) -> Presentation:
    """Class-3 group of order up to 243 with elementary derived subgroup
    <s2, s3, t3>: the cubes of x, y, s2 are prescribed inside <s3, t3> by
    the coefficient pairs xc, yc, sc."""
    rels = [
        commutator(_S3, _X), commutator(_S3, _Y),
        commutator(_T3, _X), commutator(_T3, _Y),
        commutator(_S2, _S3), commutator(_S2, _T3),
        wpow(_S3, 3), wpow(_T3, 3),
        wmul(wpow(_X, 3), winv(_span(xc, (_S3, _T3)))),
        wmul(wpow(_Y, 3), winv(_span(yc, (_S3, _T3)))),
        wmul(wpow(_S2, 3), winv(_span(sc, (_S3, _T3)))),
    ]
    return Presentation(2, tuple(rel for rel in rels if rel), ("x", "y"))


def class4_cover_presentation(xc, yc, sc, a, i: int, j: int,
                              k: int = 0, c1: int = 0, c2: int = 0) -> Presentation:
    """One-dimensional central extension of a class-3 form: a fourth lower
    central term <w> is adjoined, the weight-4 commutators [s3,x], [s3,y],
    [t3,x], [t3,y] become the powers of w prescribed by a (not all zero),
    and the parent's power relations pick up w-corrections i, j, k and the
    cube corrections c1, c2 for s3, t3."""
    pivot = next((idx for idx, av in enumerate(a) if av % 3), None)
    if pivot is None:
        raise UnsupportedParams("the fourth lower central term would be trivial")
    weight4 = [commutator(_S3, _X), commutator(_S3, _Y),
               commutator(_T3, _X), commutator(_T3, _Y)]
    w = wpow(weight4[pivot], a[pivot] % 3)
    rels = []
    for idx, word in enumerate(weight4):
        rels.append(wmul(word, winv(wpow(w, (a[idx] * (a[pivot] % 3)) % 3))))
    rels += [
        commutator(w, _X), commutator(w, _Y), wpow(w, 3),
        commutator(_S2, _S3), commutator(_S2, _T3), commutator(_S3, _T3),
        wmul(wpow(_S3, 3), winv(wpow(w, c1))),
        wmul(wpow(_T3, 3), winv(wpow(w, c2))),
        wmul(wpow(_X, 3), winv(wmul(_span(xc, (_S3, _T3)), wpow(w, i)))),
        wmul(wpow(_Y, 3), winv(wmul(_span(yc, (_S3, _T3)), wpow(w, j)))),
        wmul(wpow(_S2, 3), winv(wmul(_span(sc, (_S3, _T3)), wpow(w, k)))),
    ]
    return Presentation(2, tuple(rel for rel in rels if rel), ("x", "y"))


# --------------------------------------------------------------------------
# The frozen catalog
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    small_groups_id: tuple[int, int]
    presentation: Presentation
    expected: GroupDescriptor
    expected_tau1: tuple[AbelianType, AbelianType, AbelianType, AbelianType]
    expected_tau2: AbelianType
    expected_kappa: tuple[int, int, int, int] | None
    ct: str
    source: str
    evidence: str
    in_table: bool


@dataclass
class EntryVerification:
    entry: CatalogEntry
    descriptor: GroupDescriptor
    pattern: artin.ArtinPattern
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


@lru_cache(maxsize=1)
def _load_catalog() -> dict[tuple[int, int], CatalogEntry]:
    text = resources.files("coclasslab.data").joinpath("catalog.txt").read_text()
    entries: dict[tuple[int, int], CatalogEntry] = {}
    block: dict | None = None
    rels: list[Word] = []
    names: tuple[str, ...] = ("x", "y")
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "group":
            order, index = rest.split(",")
            block = {"id": (int(order), int(index)), "kappa": None, "ct": "",
                     "source": "", "evidence": "", "table": False}
            rels = []
        elif block is None:
            raise UnknownId(f"stray line before first group block: {line!r}")
        elif key == "gens":
            names = tuple(rest.split())
        elif key == "rel":
            rels.append(parse_word(rest, names))
        elif key in ("c", "r", "k"):
            block[key] = int(rest)
        elif key == "tau1":
            block["tau1"] = tuple(parse_log(tok) for tok in rest.split())
        elif key == "tau2":
            block["tau2"] = parse_log(rest)
        elif key == "kappa":
            block["kappa"] = tuple(int(ch) for ch in rest)
        elif key == "ct":
            block["ct"] = rest
        elif key == "source":
            block["source"] = rest
        elif key == "evidence":
            block["evidence"] = rest
        elif key == "table":
            block["table"] = rest == "yes"
        elif key == "end":
            gid = block["id"]
            entries[gid] = CatalogEntry(
                small_groups_id=gid,
                presentation=Presentation(len(names), tuple(rels), names),
                expected=GroupDescriptor(block["c"] + block["r"], block["c"],
                                         block["r"], block["k"]),
                expected_tau1=block["tau1"],
                expected_tau2=block["tau2"],
                expected_kappa=block["kappa"],
                ct=block["ct"],
                source=block["source"],
                evidence=block["evidence"],
                in_table=block["table"])
            block = None
        else:
            raise UnknownId(f"unknown catalog directive {key!r}")
    return entries


def lookup(group_id) -> CatalogEntry:
    gid = (int(group_id[0]), int(group_id[1]))
    entry = _load_catalog().get(gid)
    if entry is None:
        raise UnknownId(f"group {gid[0]},{gid[1]} is not in the catalog")
    return entry


def catalog_ids() -> tuple[tuple[int, int], ...]:
    return tuple(sorted(_load_catalog()))


def all_entries() -> tuple[CatalogEntry, ...]:
    return tuple(_load_catalog()[gid] for gid in catalog_ids())


def verify_entry(entry: CatalogEntry,
                 order_bound: int = DEFAULT_ORDER_BOUND) -> EntryVerification:
    """Realize the entry and compare all stored expectations: order, class,
    coclass, defect, tau1 as a multiset, tau2 exactly, and kappa up to
    pattern equivalence when recorded."""
    g = realize(entry.presentation, order_bound)
    failures: list[str] = []
    d = descriptor(g)
    if g.order != 3 ** entry.expected.n:
        failures.append(f"order {g.order} != 3^{entry.expected.n}")
    if d != entry.expected:
        failures.append(f"descriptor {d} != expected {entry.expected}")
    ap = artin.artin_pattern(g)
    if sorted(ap.tau1) != sorted(entry.expected_tau1):
        failures.append(f"tau1 {[str(t) for t in ap.tau1]} != "
                        f"expected {[str(t) for t in entry.expected_tau1]}")
    if ap.tau2 != entry.expected_tau2:
        failures.append(f"tau2 {ap.tau2} != expected {entry.expected_tau2}")
    if entry.expected_kappa is not None:
        want = artin.ArtinPattern(ap.tau0, entry.expected_tau1,
                                  entry.expected_tau2, entry.expected_kappa)
        if not artin.equivalent(ap, want):
            failures.append(f"kappa {ap.kappa_string()} not equivalent to "
                            f"expected {want.kappa_string()}")
    return EntryVerification(entry, d, ap, failures)
