"""Artin transfers to the four maximal subgroups and the resulting pattern.

For H of index 3 in G with G' <= H, the transfer T: G/G' -> H/H' sends g
to the product of r_i g r_{pi(i)}^(-1) over a transversal {r_0, r_1, r_2},
where H r_i g = H r_{pi(i)}.  The map is independent of the transversal
and a homomorphism into the abelian H/H'; both facts are cheap to check
here and the test suite does.

The pattern of a group collects the layered transfer targets
tau = [tau0; tau1; tau2] together with the four layer-1 kernels kappa,
each kernel encoded as a digit: 0 for the total kernel G/G', j if the
kernel is H_j/G' in the canonical subgroup order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .engine import ConcreteGroup, Subgroup
from .errors import DerivedNotContained, NotIndexThree
from .invariants import AbelianType, format_log

TRIVIAL_KERNEL = -1  # rendered '*'; cannot occur for the groups in scope


@dataclass(frozen=True)
class TransferMap:
    """The transfer on G/G' cosets, tabulated on canonical coset reps."""

    group: ConcreteGroup
    subgroup: Subgroup
    domain_reps: tuple[int, ...]          # min-index rep per G'-coset
    images: tuple[int, ...]               # min-index rep of image H'-coset
    kernel_reps: tuple[int, ...]          # domain reps with trivial image

    def image_of(self, rep: int) -> int:
        return self.images[self.domain_reps.index(rep)]


def transfer(g: ConcreteGroup, h: Subgroup, transversal=None) -> TransferMap:
    """The Artin transfer from G to an index-3 subgroup containing G'."""
    if h.index != 3:
        raise NotIndexThree(f"subgroup has index {h.index}, need 3")
    gp = g.derived_subgroup
    if not gp <= h:
        raise DerivedNotContained("transfer target must contain G'")

    h_mask = h.mask()
    if transversal is None:
        u = int(np.flatnonzero(~h_mask)[0])
        transversal = [0, u, g.mul(u, u)]
    reps = [int(t) for t in transversal]
    if len(reps) != 3:
        raise NotIndexThree("transversal must have three entries")

    def coset_index(e: int) -> int:
        for j, r in enumerate(reps):
            if h_mask[g.mul(e, int(g.inv[r]))]:
                return j
        raise NotIndexThree("transversal does not cover all cosets")

    if len({coset_index(r) for r in reps}) != 3:
        raise NotIndexThree("transversal entries are not in distinct cosets")

    hp = g.derived_of(h)

    def image(e: int) -> int:
        out = 0
        for r in reps:
            j = coset_index(g.mul(r, e))
            out = g.mul(out, g.mul(g.mul(r, e), int(g.inv[reps[j]])))
        return out

    # tabulate on the nine G'-cosets
    gp_elems = gp.elems
    seen: set[int] = set()
    domain_reps: list[int] = []
    for e in range(g.order):
        if e in seen:
            continue
        coset = sorted(g.mul(int(a), e) for a in gp_elems)
        seen.update(coset)
        domain_reps.append(coset[0])
    domain_reps.sort()

    hp_elems = hp.elems
    images = []
    kernel_reps = []
    for e in domain_reps:
        t = image(e)
        img_rep = min(g.mul(int(a), t) for a in hp_elems)
        images.append(img_rep)
        if img_rep == 0:
            kernel_reps.append(e)
    return TransferMap(g, h, tuple(domain_reps), tuple(images), tuple(kernel_reps))


def transfer_kernel(g: ConcreteGroup, h: Subgroup) -> Subgroup:
    """Kernel of the transfer, as the subgroup of G it pulls back to."""
    tm = transfer(g, h)
    gp = g.derived_subgroup
    return g.subgroup(gp.gens + tm.kernel_reps)


# --------------------------------------------------------------------------
# Artin pattern
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ArtinPattern:
    tau0: AbelianType
    tau1: tuple[AbelianType, AbelianType, AbelianType, AbelianType]
    tau2: AbelianType
    kappa: tuple[int, int, int, int]

    def ipad(self) -> tuple[AbelianType, tuple[AbelianType, ...]]:
        """[tau0; tau1], the first-order approximation of the full tau."""
        return (self.tau0, self.tau1)

    def kappa_string(self) -> str:
        return "(" + "".join("*" if d == TRIVIAL_KERNEL else str(d)
                             for d in self.kappa) + ")"

    def __str__(self) -> str:
        t1 = ",".join(format_log(t).strip("()") or "()" for t in self.tau1)
        return (f"tau = [{format_log(self.tau0)}; ({t1}); {format_log(self.tau2)}]"
                f"  kappa = {self.kappa_string()}")


def artin_pattern(g: ConcreteGroup) -> ArtinPattern:
    """Layered transfer targets and layer-1 kernels, in canonical H order."""
    g._require_bicyclic_abelianization()
    maximals = g.maximal_subgroups
    tau0 = g.abelianization
    tau1 = tuple(g.abelian_quotient_invariants(h) for h in maximals)
    tau2 = g.abelian_quotient_invariants(g.derived_subgroup)
    kappa = []
    for h in maximals:
        ker = transfer_kernel(g, h)
        if ker.order == g.order:
            kappa.append(0)
        elif ker.order == g.derived_subgroup.order:
            warnings.warn("trivial transfer kernel: outside the metabelian "
                          "catalog's range", RuntimeWarning)
            kappa.append(TRIVIAL_KERNEL)
        else:
            digit = next(j + 1 for j, hj in enumerate(maximals) if hj == ker)
            kappa.append(digit)
    return ArtinPattern(tau0, tau1, tau2, tuple(kappa))


# --------------------------------------------------------------------------
# Equivalence under relabeling of the four subgroups
# --------------------------------------------------------------------------

def _kappa_matches(a, b, pi) -> bool:
    for i in range(4):
        d = a[i]
        image = d if d in (0, TRIVIAL_KERNEL) else pi[d - 1] + 1
        if b[pi[i]] != image:
            return False
    return True


def kappa_equivalent(a, b) -> bool:
    """True iff some relabeling pi of the four subgroups carries kappa a
    to kappa b (pi acts on positions and on nonzero digit values alike)."""
    a, b = tuple(a), tuple(b)
    return any(_kappa_matches(a, b, pi) for pi in permutations(range(4)))


def equivalent(a: ArtinPattern, b: ArtinPattern) -> bool:
    """Pattern equality up to a simultaneous relabeling of H_1..H_4."""
    if a.tau0 != b.tau0 or a.tau2 != b.tau2:
        return False
    for pi in permutations(range(4)):
        if all(b.tau1[pi[i]] == a.tau1[i] for i in range(4)) \
                and _kappa_matches(a.kappa, b.kappa, pi):
            return True
    return False


# --------------------------------------------------------------------------
# Named capitulation types, keyed by kappa equivalence class
# --------------------------------------------------------------------------

CT_LABELS = (
    ("a.1", (0, 0, 0, 0)),
    ("a.3", (0, 1, 0, 0)),
    ("A.1", (1, 1, 1, 1)),
    ("b.10", (0, 0, 4, 3)),
    ("c.18", (0, 3, 1, 3)),
    ("c.21", (0, 2, 3, 1)),
    ("D.5", (4, 2, 2, 4)),
    ("D.10", (2, 2, 4, 1)),
    ("G.19", (2, 1, 4, 3)),
    ("H.4", (4, 4, 4, 3)),
    ("F.11", (4, 3, 3, 1)),
    ("F.12", (1, 4, 2, 2)),
    ("F.13", (3, 4, 1, 3)),
)


def ct_label(kappa) -> str | None:
    """Named capitulation type of a kappa string, when the table knows it."""
    for label, rep in CT_LABELS:
        if kappa_equivalent(kappa, rep):
            return label
    return None
