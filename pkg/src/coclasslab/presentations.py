"""Finite presentations and the word algebra over signed generator indices.

A word is a tuple of nonzero ints: +i is the i-th generator (1-based), -i
its inverse.  The text format declares generators on a ``gens`` line and
then one relator per line:

    gens x y
    x^3
    [y,x]^3
    [[y,x],x]

Lowercase letters name generators, the matching uppercase letter is the
inverse, ``[a,b]`` is the commutator a^-1 b^-1 a b, ``^n`` repeats (or
inverts, for negative n), and ``w1 = w2`` abbreviates the relator
w1 w2^-1.  Parentheses group subwords.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidPresentation, ParseError

Word = tuple[int, ...]

EMPTY: Word = ()


def winv(w: Word) -> Word:
    return tuple(-g for g in reversed(w))


def wmul(*ws: Word) -> Word:
    out: list[int] = []
    for w in ws:
        for g in w:
            if out and out[-1] == -g:
                out.pop()
            else:
                out.append(g)
    return tuple(out)


def wpow(w: Word, n: int) -> Word:
    if n < 0:
        return wpow(winv(w), -n)
    return wmul(*([w] * n))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a^-1 b^-1 a b."""
    return wmul(winv(a), winv(b), a, b)


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[Word, ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.generator_count < 1:
            raise InvalidPresentation("need at least one generator")
        if not self.relators:
            raise InvalidPresentation("relator list is empty")
        for rel in self.relators:
            for g in rel:
                if g == 0 or abs(g) > self.generator_count:
                    raise InvalidPresentation(
                        f"letter {g} outside declared generators in {rel}")
        if not self.names:
            object.__setattr__(self, "names", default_names(self.generator_count))
        elif len(self.names) != self.generator_count:
            raise InvalidPresentation("one name per generator required")

    def __str__(self) -> str:
        return render_presentation(self)


def default_names(n: int) -> tuple[str, ...]:
    base = "xyzabcdefghijklmnopqrstuvw"
    if n > len(base):
        raise InvalidPresentation(f"too many generators ({n})")
    return tuple(base[:n])


# --- rendering ---------------------------------------------------------------

def render_word(w: Word, names) -> str:
    if not w:
        return "1"
    out = []
    i = 0
    while i < len(w):
        g = w[i]
        j = i
        while j < len(w) and w[j] == g:
            j += 1
        letter = names[abs(g) - 1]
        letter = letter.upper() if g < 0 else letter
        out.append(letter if j - i == 1 else f"{letter}^{j - i}")
        i = j
    return "".join(out)


def render_presentation(p: Presentation) -> str:
    lines = ["gens " + " ".join(p.names)]
    lines.extend(render_word(rel, p.names) for rel in p.relators)
    return "\n".join(lines)


# --- parsing -----------------------------------------------------------------

def parse_word(text: str, names) -> Word:
    """Parse a single word in the relator grammar."""
    index = {nm: i + 1 for i, nm in enumerate(names)}
    word, pos = _parse_seq(text, 0, index, stop=set())
    if pos != len(text):
        raise ParseError(f"unexpected {text[pos]!r} in word {text!r}", pos)
    return word


def _parse_seq(s: str, pos: int, index, stop) -> tuple[Word, int]:
    out: Word = EMPTY
    while pos < len(s):
        ch = s[pos]
        if ch in stop:
            break
        if ch.isspace():
            pos += 1
            continue
        if ch == "1":
            pos += 1
            atom = EMPTY
        elif ch == "(":
            atom, pos = _parse_seq(s, pos + 1, index, stop={")"})
            if pos >= len(s) or s[pos] != ")":
                raise ParseError(f"missing ')' in {s!r}", pos)
            pos += 1
        elif ch == "[":
            left, pos = _parse_seq(s, pos + 1, index, stop={","})
            if pos >= len(s) or s[pos] != ",":
                raise ParseError(f"missing ',' in commutator in {s!r}", pos)
            right, pos = _parse_seq(s, pos + 1, index, stop={"]"})
            if pos >= len(s) or s[pos] != "]":
                raise ParseError(f"missing ']' in commutator in {s!r}", pos)
            pos += 1
            atom = commutator(left, right)
        elif ch.lower() in index:
            g = index[ch.lower()]
            atom = (g,) if ch.islower() else (-g,)
            pos += 1
        else:
            raise ParseError(f"unknown letter {ch!r} in {s!r}", pos)
        if pos < len(s) and s[pos] == "^":
            pos += 1
            sign = 1
            if pos < len(s) and s[pos] == "-":
                sign = -1
                pos += 1
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if pos == start:
                raise ParseError(f"missing exponent after '^' in {s!r}", pos)
            atom = wpow(atom, sign * int(s[start:pos]))
        out = wmul(out, atom)
    return out, pos


def parse_presentation(text: str) -> Presentation:
    """Parse the multi-line presentation format."""
    names = None
    relators = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens"):
            if names is not None:
                raise ParseError("duplicate gens line", 0)
            names = tuple(line.split()[1:])
            if not names or len(set(names)) != len(names):
                raise ParseError(f"bad generator declaration {line!r}", 0)
            for nm in names:
                if len(nm) != 1 or not nm.isalpha() or not nm.islower():
                    raise ParseError(f"generator names are single lowercase letters, got {nm!r}", 0)
            continue
        if names is None:
            raise ParseError("relators before gens line", 0)
        if "=" in line:
            lhs, rhs = line.split("=", 1)
            rel = wmul(parse_word(lhs.strip(), names), winv(parse_word(rhs.strip(), names)))
        else:
            rel = parse_word(line, names)
        relators.append(rel)
    if names is None:
        raise ParseError("missing gens line", 0)
    if not relators:
        raise InvalidPresentation("no relators given")
    return Presentation(len(names), tuple(relators), names)
