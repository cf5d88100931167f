"""Abelian type invariants of finite abelian 3-groups, in logarithmic form.

An abelian 3-group (Z/3^m1) x ... x (Z/3^mk) is recorded as the descending
exponent tuple (m1, ..., mk); the empty tuple is the trivial group.  The
compact text form writes the exponents as digits with repetition counts as
formal exponents, e.g. (9,3,3,3,3) <-> "(21^4)".  Exponents >= 10 fall back
to a comma-separated extended form so nothing is silently truncated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

from .errors import NonRealizableCounts, ParseError


@dataclass(frozen=True, order=True)
class AbelianType:
    """Multiset of cyclic 3-power factors, stored as descending exponents."""

    exponents: tuple[int, ...] = ()

    def __post_init__(self):
        exps = tuple(int(m) for m in self.exponents)
        if any(m <= 0 for m in exps):
            raise ValueError(f"exponents must be positive, got {exps}")
        if list(exps) != sorted(exps, reverse=True):
            exps = tuple(sorted(exps, reverse=True))
        object.__setattr__(self, "exponents", exps)

    @property
    def log_order(self) -> int:
        return sum(self.exponents)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def is_trivial(self) -> bool:
        return not self.exponents

    def __mul__(self, other: "AbelianType") -> "AbelianType":
        return direct_product(self, other)

    def __str__(self) -> str:
        return format_log(self)

    def __repr__(self) -> str:
        return f"AbelianType({format_log(self)!r})"

    def orders(self) -> tuple[int, ...]:
        """Cyclic factor orders in power form, e.g. (9, 3)."""
        return tuple(3 ** m for m in self.exponents)


TRIVIAL = AbelianType(())


def ati(*exponents: int) -> AbelianType:
    """Shorthand constructor: ati(2, 1) is the type of (9, 3)."""
    return AbelianType(tuple(exponents))


def nearly_homocyclic(n: int) -> AbelianType:
    """The rank-<=2 abelian 3-group of order 3^n with near-equal exponents.

    For n = 2m + s with s in {0, 1} the result has s factors of exponent
    m+1 and 2-s factors of exponent m, zero exponents dropped; so n = 0
    gives the trivial group and n = 1 the cyclic group of order 3.
    """
    if n < 0:
        raise ValueError(f"order exponent must be non-negative, got {n}")
    m, s = divmod(n, 2)
    exps = [m + 1] * s + [m] * (2 - s)
    return AbelianType(tuple(e for e in exps if e > 0))


def direct_product(a: AbelianType, b: AbelianType) -> AbelianType:
    return AbelianType(a.exponents + b.exponents)


def product(types) -> AbelianType:
    return reduce(direct_product, types, TRIVIAL)


def ati_from_order_counts(counts) -> AbelianType:
    """Decode an abelian 3-group from its order census.

    ``counts`` maps k >= 0 to the number of elements x with x^(3^k) = 1.
    The unique matching type has counts[k] = 3^(sum_i min(m_i, k)); the
    increments of log3(counts) therefore count the exponents >= k.  Any
    census an actual abelian 3-group cannot produce raises
    NonRealizableCounts, which in practice signals a non-abelian or
    corrupt input group.
    """
    if not counts:
        raise NonRealizableCounts("empty census")
    ks = sorted(counts)
    if ks != list(range(len(ks))):
        raise NonRealizableCounts(f"census keys must be 0..K, got {ks}")
    logs = []
    for k in ks:
        v = counts[k]
        lg = _log3_exact(v)
        if lg is None:
            raise NonRealizableCounts(f"count {v} at k={k} is not a power of 3")
        logs.append(lg)
    if logs[0] != 0:
        raise NonRealizableCounts(f"counts[0] must be 1, got {counts[0]}")
    if any(b < a for a, b in zip(logs, logs[1:])):
        raise NonRealizableCounts("census must be non-decreasing in k")
    diffs = [b - a for a, b in zip(logs, logs[1:])]
    if len(ks) < 2 or diffs[-1] != 0:
        raise NonRealizableCounts("census does not stabilize at the group order")
    if any(d2 > d1 for d1, d2 in zip(diffs, diffs[1:])):
        # #\{m_i >= k\} must fall as k grows; otherwise no abelian group fits.
        raise NonRealizableCounts("census increments increase: not realizable")
    exps = []
    diffs.append(0)
    for k in range(len(diffs) - 1, 0, -1):
        exps.extend([k] * (diffs[k - 1] - diffs[k]))
    return AbelianType(tuple(exps))


def _log3_exact(v):
    if v < 1:
        return None
    lg = 0
    while v % 3 == 0:
        v //= 3
        lg += 1
    return lg if v == 1 else None


# --- text form -------------------------------------------------------------
#
# Grammar (compact):   ATI  := "(" item* ")"     item := digit ("^" count)?
# Grammar (extended):  ATI  := "(" number ("," number)* ")"
# Items appear in non-increasing digit order; "(0)" is accepted on input
# only, as an alias for the trivial group.

# Counts are single digits, like the superscripts they transcribe:
# "4^23^2" reads as 4^2 3^2.  Larger ranks or exponents use the
# unambiguous comma form.
_ITEM = re.compile(r"(\d)(?:\^(\d))?")


def format_log(a: AbelianType) -> str:
    """Render in the compact logarithmic grammar, e.g. "(21^4)".

    Exponents >= 10 and repetition counts >= 10 do not fit the
    single-digit convention, so such types render in the comma-separated
    extended form instead.
    """
    if not a.exponents:
        return "()"
    runs = []
    run_val, run_len = a.exponents[0], 0
    for m in a.exponents + (0,):
        if m == run_val:
            run_len += 1
            continue
        runs.append((run_val, run_len))
        run_val, run_len = m, 1
    if a.exponents[0] >= 10 or any(count > 9 for _, count in runs):
        # multi-digit pieces would be ambiguous in the compact grammar; a
        # lone entry keeps a trailing comma so "(21,)" cannot be read as
        # the compact (2,1)
        body = ",".join(str(m) for m in a.exponents)
        if len(a.exponents) == 1:
            body += ","
        return f"({body})"
    return "(" + "".join(str(v) if c == 1 else f"{v}^{c}" for v, c in runs) + ")"


def parse_log(text: str) -> AbelianType:
    """Parse either grammar; inverse of format_log on its image."""
    s = text.strip()
    if not s:
        raise ParseError("empty abelian type", 0)
    body = s
    if s.startswith("("):
        if not s.endswith(")"):
            raise ParseError(f"unbalanced parentheses in {text!r}", len(s) - 1)
        body = s[1:-1].strip()
    elif s.endswith(")"):
        raise ParseError(f"unbalanced parentheses in {text!r}", 0)
    if body == "":
        return TRIVIAL
    if body == "0":
        return TRIVIAL
    if "," in body:
        parts = [part.strip() for part in body.split(",")]
        if len(parts) > 1 and parts[-1] == "":
            parts.pop()   # one trailing comma is legal (and required for a
            #               lone multi-digit entry such as "(21,)")
        exps = []
        for part in parts:
            if not part.isdigit():
                raise ParseError(f"bad entry {part!r} in {text!r}", s.find(part))
            exps.append(int(part))
        exps = [m for m in exps if m != 0]
        if exps != sorted(exps, reverse=True):
            raise ParseError(f"exponents not in non-increasing order in {text!r}", 0)
        return AbelianType(tuple(exps))
    try:
        return _parse_compact(body, text)
    except ParseError:
        # a lone multi-digit entry is the single-element extended form,
        # e.g. "(40)" for one cyclic factor of order 3^40
        if body.isdigit() and int(body) >= 10:
            return AbelianType((int(body),))
        raise


def _parse_compact(body: str, text: str) -> AbelianType:
    pos = 0
    exps = []
    while pos < len(body):
        m = _ITEM.match(body, pos)
        if not m:
            raise ParseError(f"unexpected character {body[pos]!r} in {text!r}", pos)
        digit = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        pos = m.end()
        if digit == 0:
            raise ParseError(f"zero exponent only allowed as '(0)' in {text!r}", pos)
        if count < 1:
            raise ParseError(f"count must be positive in {text!r}", pos)
        exps.extend([digit] * count)
    if exps != sorted(exps, reverse=True):
        raise ParseError(f"digits not in non-increasing order in {text!r}", 0)
    return AbelianType(tuple(exps))
