"""Concrete finite 3-groups realized from presentations.

Realization runs Todd-Coxeter coset enumeration over the trivial subgroup,
so every group is carried as its regular action: element i times generator
g is a table lookup, and arbitrary products compose generator actions
along stored factorization words.  That keeps everything exact and makes
brute-force checks (normal-subgroup enumeration, censuses) affordable at
order <= 3^8, which is all this package needs.

The enumerator is the vertex-unification variant of Todd-Coxeter: relator
paths are traced from every live coset and forced to close by merging
endpoints in a union-find; rows are filled after tracing so the final
table is complete.  A verification pass re-checks closure and bijectivity
before any group is handed out.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    EnumerationOverflow,
    InvalidPresentation,
    WrongAbelianization,
)
from .invariants import AbelianType, ati_from_order_counts
from .presentations import Presentation, Word

DEFAULT_ORDER_BOUND = 3 ** 8


# --------------------------------------------------------------------------
# Todd-Coxeter over the trivial subgroup
# --------------------------------------------------------------------------

def _column(letter: int) -> int:
    # +g -> 2(g-1), -g -> 2(g-1)+1; the inverse column is col ^ 1.
    g = abs(letter) - 1
    return 2 * g + (letter < 0)


def _enumerate_regular(pres: Presentation, order_bound: int) -> list[np.ndarray]:
    """Run the enumeration; return one right-multiplication permutation per
    generator, on 0..N-1 with 0 the identity, in BFS-standard numbering."""
    ncols = 2 * pres.generator_count
    rel_cols = [tuple(_column(letter) for letter in rel) for rel in pres.relators if rel]
    # transient vertex budget: the tracing strategy can allocate far more
    # cosets than survive (the order-3^8 mainline presentations peak around
    # fifty times the final order before collapsing)
    max_total = 60 * order_bound + 100_000

    labels: list[int] = []
    neighbors: list[list[int]] = []

    def add_vertex() -> int:
        v = len(labels)
        labels.append(v)
        neighbors.append([-1] * ncols)
        return v

    def find(v: int) -> int:
        root = v
        while labels[root] != root:
            root = labels[root]
        while labels[v] != root:
            labels[v], v = root, labels[v]
        return root

    def follow(v: int, c: int) -> int:
        v = find(v)
        n = neighbors[v][c]
        if n == -1:
            n = add_vertex()
            neighbors[v][c] = n
            neighbors[n][c ^ 1] = v
            return n
        return find(n)

    def unify(a: int, b: int) -> None:
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            labels[b] = a
            row_a, row_b = neighbors[a], neighbors[b]
            for c in range(ncols):
                n = row_b[c]
                if n == -1:
                    continue
                if row_a[c] == -1:
                    row_a[c] = n
                else:
                    stack.append((row_a[c], n))

    add_vertex()
    v = 0
    while v < len(labels):
        if find(v) == v:
            for rel in rel_cols:
                w = v
                for c in rel:
                    w = follow(w, c)
                unify(w, v)
                if find(v) != v:
                    break
            v_live = find(v)
            if v_live == v:
                for c in range(ncols):
                    if neighbors[v][c] == -1:
                        follow(v, c)
        v += 1
        if len(labels) > max_total:
            raise EnumerationOverflow(
                f"coset enumeration exceeded {max_total} cosets "
                f"(order bound {order_bound}): group infinite or too large")

    live = [u for u in range(len(labels)) if find(u) == u]
    n = len(live)
    if n > order_bound:
        raise EnumerationOverflow(
            f"presented group has order {n} > bound {order_bound}")
    renumber = {u: i for i, u in enumerate(live)}
    cols = []
    for c in range(ncols):
        col = np.empty(n, dtype=np.int64)
        for i, u in enumerate(live):
            t = neighbors[u][c]
            if t == -1:
                raise EnumerationOverflow("enumeration closed with incomplete table")
            col[i] = renumber[find(t)]
        cols.append(col)

    idx = np.arange(n)
    for c in range(ncols):
        if not np.array_equal(np.sort(cols[c]), idx):
            raise EnumerationOverflow("generator action is not a bijection")
        if not np.array_equal(cols[c][cols[c ^ 1]], idx):
            raise EnumerationOverflow("inverse tables are inconsistent")
    for rel in rel_cols:
        path = idx
        for c in rel:
            path = cols[c][path]
        if not np.array_equal(path, idx):
            raise EnumerationOverflow("relator fails to close on the coset table")

    gens = [cols[2 * g] for g in range(pres.generator_count)]
    return _standardize(gens, n)


def _standardize(gens: list[np.ndarray], n: int) -> list[np.ndarray]:
    """Renumber cosets in BFS order from the identity so equal presentations
    always yield byte-identical tables (and hence reproducible subgroup
    orderings downstream)."""
    order = np.full(n, -1, dtype=np.int64)
    order[0] = 0
    queue = [0]
    count = 1
    while queue:
        nxt = []
        for v in queue:
            for tab in gens:
                w = int(tab[v])
                if order[w] == -1:
                    order[w] = count
                    count += 1
                    nxt.append(w)
        queue = nxt
    if count != n:
        raise EnumerationOverflow("generators do not act transitively")
    inv_order = np.empty(n, dtype=np.int64)
    inv_order[order] = np.arange(n)
    return [order[tab[inv_order]] for tab in gens]


# --------------------------------------------------------------------------
# Subgroups
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    """A subgroup carried as its sorted element-index set plus generators."""

    group: "ConcreteGroup"
    elems: np.ndarray
    gens: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elems)

    @property
    def index(self) -> int:
        return self.group.order // self.order

    def key(self) -> bytes:
        return self.elems.tobytes()

    def mask(self) -> np.ndarray:
        m = np.zeros(self.group.order, dtype=bool)
        m[self.elems] = True
        return m

    def contains(self, items) -> np.ndarray:
        return np.isin(items, self.elems)

    def __contains__(self, e: int) -> bool:
        i = int(np.searchsorted(self.elems, e))
        return i < len(self.elems) and self.elems[i] == e

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.group is other.group \
            and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __le__(self, other: "Subgroup") -> bool:
        return bool(np.isin(self.elems, other.elems).all())

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in group of order {self.group.order}>"

    def is_abelian(self) -> bool:
        g = self.group
        return all(g.mul(a, b) == g.mul(b, a)
                   for i, a in enumerate(self.gens) for b in self.gens[i:])

    def is_normal(self) -> bool:
        g = self.group
        for c in g._conj:
            if not np.isin(c[self.elems], self.elems).all():
                return False
        return True


# --------------------------------------------------------------------------
# The group itself
# --------------------------------------------------------------------------

class ConcreteGroup:
    """Finite 3-group in its regular action.

    Elements are 0..order-1 with 0 the identity.  ``right[g]`` is the
    permutation i -> i*gen_g; products fold factorization words over these
    tables, so the full multiplication table never materializes.

    Instances are immutable after construction apart from internal memo
    dictionaries, so sharing one group across concurrent analyses is safe
    (worst case under contention is duplicated cache work).
    """

    def __init__(self, right_tables: list[np.ndarray], names: tuple[str, ...],
                 presentation: Presentation | None = None):
        self.right = [np.asarray(t, dtype=np.int64) for t in right_tables]
        self.ngens = len(self.right)
        self.order = len(self.right[0])
        self.names = names
        self.presentation = presentation
        if 3 ** self.log_order != self.order:
            raise InvalidPresentation(
                f"presented group has order {self.order}, not a power of 3")
        self._build_tables()

    @property
    def log_order(self) -> int:
        n, lo = self.order, 0
        while n % 3 == 0:
            n //= 3
            lo += 1
        return lo if n == 1 else -1

    # -- construction of the derived tables --------------------------------

    def _build_tables(self) -> None:
        n = self.order
        parent = np.full(n, -1, dtype=np.int64)
        letter = np.full(n, -1, dtype=np.int64)
        bfs = [0]
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        for v in bfs:
            for g, tab in enumerate(self.right):
                w = int(tab[v])
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    letter[w] = g
                    bfs.append(w)
        self._parent, self._letter = parent, letter
        self._bfs = bfs

        words: list[tuple[int, ...]] = [()] * n
        for v in bfs[1:]:
            words[v] = words[parent[v]] + (int(letter[v]),)
        self.words = words

        # element index of each generator and its inverse
        self.gen_elem = [int(tab[0]) for tab in self.right]
        self.right_inv = [np.argsort(tab, kind="stable") for tab in self.right]
        self.geninv_elem = [int(np.flatnonzero(tab == 0)[0]) for tab in self.right]

        # left multiplication by g^-1 via the BFS tree, then inverses and
        # conjugation/commutator tables for each generator
        self._left_cache: dict[int, np.ndarray] = {}
        inv = np.empty(n, dtype=np.int64)
        inv[0] = 0
        left_geninv = [self.left_table(e) for e in self.geninv_elem]
        for v in bfs[1:]:
            inv[v] = left_geninv[letter[v]][inv[parent[v]]]
        self.inv = inv

        self._conj = [self.right[g][left_geninv[g]] for g in range(self.ngens)]
        self._com = [self._pairwise_mul(inv, c[np.arange(n)]) for c in self._conj]
        self._rmul_cache: dict[int, np.ndarray] = {}

    def left_table(self, a: int) -> np.ndarray:
        """Array of a*i for all i, built in O(n) along the BFS tree."""
        cached = self._left_cache.get(a)
        if cached is not None:
            return cached
        n = self.order
        out = np.empty(n, dtype=np.int64)
        out[0] = a
        for v in self._bfs[1:]:
            out[v] = self.right[self._letter[v]][out[self._parent[v]]]
        self._left_cache[a] = out
        return out

    def rmul_table(self, s: int) -> np.ndarray:
        """Array of i*s for all i."""
        cached = self._rmul_cache.get(s)
        if cached is not None:
            return cached
        out = np.arange(self.order)
        for g in self.words[s]:
            out = self.right[g][out]
        self._rmul_cache[s] = out
        return out

    def _pairwise_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = np.empty(len(a), dtype=np.int64)
        for i in range(len(a)):
            out[i] = self.mul(int(a[i]), int(b[i]))
        return out

    # -- basic arithmetic ----------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        for g in self.words[j]:
            i = int(self.right[g][i])
        return i

    def conj(self, i: int, j: int) -> int:
        """j^-1 * i * j."""
        return self.mul(self.mul(int(self.inv[j]), i), j)

    def comm(self, i: int, j: int) -> int:
        """[i, j] = i^-1 j^-1 i j."""
        return self.mul(int(self.inv[self.mul(j, i)]), self.mul(i, j))

    def cube(self, i: int) -> int:
        return self.mul(self.mul(i, i), i)

    def power(self, i: int, e: int) -> int:
        if e < 0:
            return self.power(int(self.inv[i]), -e)
        acc = 0
        for _ in range(e):
            acc = self.mul(acc, i)
        return acc

    def element_order(self, i: int) -> int:
        o = 1
        while i != 0:
            i = self.cube(i)
            o *= 3
        return o

    def eval_word(self, word: Word) -> int:
        e = 0
        for letter in word:
            g = abs(letter) - 1
            e = int(self.right[g][e]) if letter > 0 else int(self.right_inv[g][e])
        return e

    def word_of(self, e: int) -> Word:
        """Factorization of an element as a presentation word (1-based
        positive letters); the internal BFS words are 0-based."""
        return tuple(g + 1 for g in self.words[e])

    # -- subgroup machinery ---------------------------------------------------

    def subgroup(self, gens) -> Subgroup:
        gens = tuple(sorted({int(g) for g in gens if int(g) != 0}))
        member = np.zeros(self.order, dtype=bool)
        member[0] = True
        frontier = np.array([0], dtype=np.int64)
        tables = [self.rmul_table(g) for g in gens]
        while len(frontier):
            new = []
            for tab in tables:
                imgs = tab[frontier]
                fresh = imgs[~member[imgs]]
                if len(fresh):
                    member[fresh] = True
                    new.append(fresh)
            frontier = np.unique(np.concatenate(new)) if new else np.array([], dtype=np.int64)
        return Subgroup(self, np.flatnonzero(member), gens)

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, np.array([0], dtype=np.int64), ())

    def full_subgroup(self) -> Subgroup:
        return Subgroup(self, np.arange(self.order), tuple(self.gen_elem))

    def small_generating_set(self, elems) -> tuple[int, ...]:
        gens: list[int] = []
        member = np.zeros(self.order, dtype=bool)
        member[0] = True
        for e in np.sort(np.asarray(elems)):
            e = int(e)
            if not member[e]:
                gens.append(e)
                member |= self.subgroup(gens).mask()
        return tuple(gens)

    def normal_closure(self, elems, seed_gens=()) -> Subgroup:
        """Smallest normal subgroup of the whole group containing elems."""
        gens = list(seed_gens) + [int(e) for e in elems]
        h = self.subgroup(gens)
        while True:
            extra = []
            for c in self._conj:
                imgs = c[h.elems]
                missing = imgs[~np.isin(imgs, h.elems)]
                if len(missing):
                    extra.append(missing)
            if not extra:
                return h
            seeds = np.unique(np.concatenate(extra))
            h = self.subgroup(h.gens + tuple(int(s) for s in seeds))

    def derived_of(self, h: Subgroup) -> Subgroup:
        """Derived subgroup of a subgroup: commutators of its generators,
        normally closed inside the subgroup."""
        seeds = {self.comm(a, b) for i, a in enumerate(h.gens) for b in h.gens[i + 1:]}
        seeds.discard(0)
        cur = self.subgroup(self.small_generating_set(np.array(sorted(seeds), dtype=np.int64))
                            if seeds else ())
        while True:
            extra = set()
            for g in h.gens:
                tab_g = self.rmul_table(g)
                tab_ginv = self.left_table(int(self.inv[g]))
                imgs = tab_g[tab_ginv[cur.elems]]
                out = imgs[~np.isin(imgs, cur.elems)]
                extra.update(int(v) for v in out)
            if not extra:
                return cur
            cur = self.subgroup(cur.gens + tuple(sorted(extra)))

    @cached_property
    def derived_subgroup(self) -> Subgroup:
        seeds = [self.comm(a, b)
                 for i, a in enumerate(self.gen_elem) for b in self.gen_elem[i + 1:]]
        return self.normal_closure([s for s in seeds if s != 0])

    @cached_property
    def centre(self) -> Subgroup:
        idx = np.arange(self.order)
        mask = np.ones(self.order, dtype=bool)
        for c in self._conj:
            mask &= c == idx
        elems = np.flatnonzero(mask)
        return Subgroup(self, elems, self.small_generating_set(elems))

    @cached_property
    def conjugacy_classes(self) -> list[np.ndarray]:
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for e in range(self.order):
            if seen[e]:
                continue
            orbit = {e}
            frontier = [e]
            while frontier:
                nxt = []
                for v in frontier:
                    for c in self._conj:
                        w = int(c[v])
                        if w not in orbit:
                            orbit.add(w)
                            nxt.append(w)
                frontier = nxt
            orbit_arr = np.array(sorted(orbit), dtype=np.int64)
            seen[orbit_arr] = True
            classes.append(orbit_arr)
        return classes

    # -- central series -------------------------------------------------------

    @cached_property
    def lower_central_series(self) -> list[Subgroup]:
        """gamma_1 = G, gamma_j = [gamma_{j-1}, G], down to the trivial group."""
        series = [self.full_subgroup()]
        cur = series[0]
        while cur.order > 1:
            seeds = np.unique(np.concatenate([c[cur.elems] for c in self._com]))
            seeds = seeds[seeds != 0]
            nxt = self.normal_closure(self.small_generating_set(seeds)) \
                if len(seeds) else self.trivial_subgroup()
            if nxt.order >= cur.order:
                raise RuntimeError("lower central series did not descend")
            series.append(nxt)
            cur = nxt
        return series

    @cached_property
    def upper_central_series(self) -> list[Subgroup]:
        """zeta_0 = 1 up to zeta_c = G; zeta_j/zeta_{j-1} is the centre of
        the quotient, detected through commutators with the generators."""
        series = [self.trivial_subgroup()]
        cur = series[0]
        while cur.order < self.order:
            mask = np.ones(self.order, dtype=bool)
            for c in self._com:
                mask &= np.isin(c, cur.elems)
            elems = np.flatnonzero(mask)
            if len(elems) <= cur.order:
                raise RuntimeError("upper central series did not ascend")
            nxt = Subgroup(self, elems, self.small_generating_set(elems))
            series.append(nxt)
            cur = nxt
        return series

    @property
    def nilpotency_class(self) -> int:
        return len(self.lower_central_series) - 1

    # -- quotient censuses and abelian invariants ------------------------------

    def quotient_census(self, h: Subgroup, hp: Subgroup) -> dict[int, int]:
        """Order census of the abelian quotient h/hp: counts[k] is the
        number of cosets q with q^(3^k) trivial."""
        t = h.elems.copy()
        depth = np.zeros(len(t), dtype=np.int64)
        pending = ~np.isin(t, hp.elems)
        k = 0
        while pending.any():
            k += 1
            for i in np.flatnonzero(pending):
                t[i] = self.cube(int(t[i]))
            depth[pending] = k
            pending &= ~np.isin(t, hp.elems)
        kmax = int(depth.max()) if len(depth) else 0
        return {k: int((depth <= k).sum()) // hp.order for k in range(kmax + 2)}

    def abelian_quotient_invariants(self, h: Subgroup) -> AbelianType:
        hp = self.derived_of(h)
        return ati_from_order_counts(self.quotient_census(h, hp))

    @cached_property
    def abelianization(self) -> AbelianType:
        return ati_from_order_counts(
            self.quotient_census(self.full_subgroup(), self.derived_subgroup))

    # -- the four maximal subgroups --------------------------------------------

    def _require_bicyclic_abelianization(self) -> None:
        if self.abelianization != AbelianType((1, 1)):
            raise WrongAbelianization(
                f"G/G' is {self.abelianization}, need (1^2)")

    @cached_property
    def maximal_subgroups(self) -> list[Subgroup]:
        """The four subgroups of index 3 above G', canonically ordered:
        descending log-order of H/H', ties broken by the lexicographically
        least element-index set."""
        self._require_bicyclic_abelianization()
        gp = self.derived_subgroup
        x, y = self.gen_elem[0], self.gen_elem[1]
        tops = [x, y, self.mul(x, y), self.mul(x, self.mul(y, y))]
        subs = []
        for w in tops:
            h = self.subgroup(gp.gens + (w,))
            if h.order * 3 != self.order:
                raise WrongAbelianization("index-3 overgroup construction failed")
            subs.append(h)
        if len({s.key() for s in subs}) != 4:
            raise WrongAbelianization("expected four distinct maximal subgroups")
        keyed = sorted(
            subs, key=lambda h: (-self.abelian_quotient_invariants(h).log_order,
                                 tuple(h.elems.tolist())))
        return keyed

    # -- brute-force normal subgroup lattice -------------------------------------

    @cached_property
    def normal_subgroups(self) -> list[Subgroup]:
        """Every normal subgroup, by closing {1} under joins with normal
        closures of single elements (one per conjugacy class)."""
        ncls: dict[bytes, Subgroup] = {}
        for cls in self.conjugacy_classes:
            rep = int(cls[0])
            if rep == 0:
                continue
            n = self.normal_closure([rep])
            ncls.setdefault(n.key(), n)
        uniq = list(ncls.values())
        found: dict[bytes, Subgroup] = {}
        triv = self.trivial_subgroup()
        found[triv.key()] = triv
        queue = [triv]
        while queue:
            s = queue.pop()
            for n in uniq:
                if n <= s:
                    continue
                j = self.subgroup(s.gens + n.gens)
                if j.key() not in found:
                    found[j.key()] = j
                    queue.append(j)
        return sorted(found.values(), key=lambda h: (h.order, tuple(h.elems.tolist())))


# --------------------------------------------------------------------------
# Descriptor
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupDescriptor:
    """(log order, class, coclass, defect) of a group with G/G' = (3,3)."""

    n: int
    c: int
    r: int
    k: int

    def __post_init__(self):
        if self.n != self.c + self.r:
            raise ValueError("log order must equal class + coclass")
        if self.c < 1 or self.r < 1 or self.k not in (0, 1):
            raise ValueError(f"invalid descriptor {self}")

    @property
    def nilpotency_index(self) -> int:
        """m = c + 1."""
        return self.c + 1

    @property
    def cf_invariant(self) -> int:
        """e = r + 1, the log-order of the co-polarization."""
        return self.r + 1

    def __str__(self) -> str:
        return f"(n={self.n}, c={self.c}, r={self.r}, k={self.k})"


def descriptor(g: ConcreteGroup) -> GroupDescriptor:
    """Class, coclass and defect of commutativity.

    The defect follows the centre criterion for coclass >= 2 (bicyclic
    (3,3) centre means k = 0, cyclic centre of order 3 means k = 1) and
    the abelian-maximal-subgroup criterion at maximal class.
    """
    g._require_bicyclic_abelianization()
    n = g.log_order
    c = g.nilpotency_class
    r = n - c
    if r == 1:
        k = 0 if any(h.is_abelian() for h in g.maximal_subgroups) else 1
    else:
        z = g.centre
        if z.order == 9 and all(g.cube(int(e)) == 0 for e in z.elems):
            k = 0
        elif z.order == 3:
            k = 1
        else:
            raise WrongAbelianization(
                f"centre of order {z.order} incompatible with coclass {r}")
    return GroupDescriptor(n, c, r, k)


def realize(pres: Presentation, order_bound: int = DEFAULT_ORDER_BOUND) -> ConcreteGroup:
    """Realize a finite presentation as a concrete group of order <= bound.

    The default bound 3^8 guards against accidentally infinite
    presentations; it can be overridden, though nothing in this package
    needs groups beyond that order.
    """
    tables = _enumerate_regular(pres, order_bound)
    return ConcreteGroup(tables, pres.names, pres)
