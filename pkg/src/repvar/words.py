"""Words in free groups, group presentations, and exponent-sum parity tests.

Words are stored over generator *indices* as freely reduced syllable tuples
``((index, exponent), ...)``.  The commutator convention is
``[a, b] = a b a^-1 b^-1``; the opposite convention changes profiles, so it is
fixed here and nowhere else.

Grammar accepted by :func:`parse_word`::

    word  := term { ('*' | ws) term }
    term  := atom [ '^' int ]
    atom  := ident | '1' | '(' word ')' | '[' word ',' word ']'
    ident := letter { letter | digit }
    int   := ['-'] digit+

Separators between terms are optional where the boundary is unambiguous
(``[x,y]y^2`` parses as two terms).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "Generator",
    "FreeWord",
    "ExponentProfile",
    "Presentation",
    "WordSyntaxError",
    "PresentationError",
    "free_reduce",
    "commutator",
    "parse_relation",
    "parse_word",
    "format_word",
    "exponent_profile",
    "in_commutator_subgroup",
    "pm_condition_holds",
    "minus_condition_holds",
    "central_flip_factor",
    "has_even_nonzero_sum",
    "parse_presentation",
    "load_presentation",
    "format_presentation",
]

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


class WordSyntaxError(ValueError):
    """Raised for malformed word text; ``offset`` is a byte offset into the input."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} (at byte {offset})")


class PresentationError(ValueError):
    """Raised for malformed presentation files; carries file, line and byte offset."""

    def __init__(self, message: str, source: str = "<string>", line: int = 0,
                 offset: int | None = None):
        self.source = source
        self.line = line
        self.offset = offset
        where = f"{source}:{line}"
        if offset is not None:
            where += f":{offset}"
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class Generator:
    name: str

    def __post_init__(self):
        if not _IDENT_RE.match(self.name):
            raise ValueError(f"invalid generator name {self.name!r}")

    def __str__(self):
        return self.name


def free_reduce(raw: Iterable[tuple[int, int]]) -> "FreeWord":
    """Freely reduce a raw syllable sequence.

    Adjacent syllables on the same generator merge, zero exponents vanish, and
    cancellation cascades through the stack.

    >>> free_reduce([(0, 1), (1, 2), (1, -2), (0, -1)]).letters
    ()
    >>> free_reduce([(0, 2), (0, 3)]).letters
    ((0, 5),)
    """
    stack: list[list[int]] = []
    for index, exp in raw:
        index, exp = int(index), int(exp)
        if index < 0:
            raise ValueError(f"negative generator index {index}")
        if exp == 0:
            continue
        if stack and stack[-1][0] == index:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([index, exp])
    return FreeWord._from_reduced(tuple((i, e) for i, e in stack))


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word; the empty tuple is the identity."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for k, (i, e) in enumerate(letters):
            if i < 0 or e == 0:
                raise ValueError(f"bad syllable {(i, e)}")
            if k and letters[k - 1][0] == i:
                raise ValueError("adjacent syllables share a generator; use free_reduce")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _from_reduced(cls, letters):
        obj = object.__new__(cls)
        object.__setattr__(obj, "letters", letters)
        return obj

    @classmethod
    def gen(cls, index: int, exp: int = 1) -> "FreeWord":
        return free_reduce([(index, exp)])

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return free_reduce(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord._from_reduced(tuple((i, -e) for i, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeWord":
        if k < 0:
            return self.inverse() ** (-k)
        return free_reduce(self.letters * k)

    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self):
        """Number of letters counted with multiplicity."""
        return sum(abs(e) for _, e in self.letters)

    def max_index(self) -> int:
        return max((i for i, _ in self.letters), default=-1)

    def cyclic_reduce(self) -> "FreeWord":
        """Conjugate away matching first/last syllables."""
        letters = self.letters
        while len(letters) >= 2 and letters[0][0] == letters[-1][0]:
            i = letters[0][0]
            total = letters[0][1] + letters[-1][1]
            letters = letters[1:-1]
            if total:
                return FreeWord._from_reduced(((i, total),) + letters)
        return FreeWord._from_reduced(letters)

    def rotations(self) -> list["FreeWord"]:
        """All cyclic permutations of the cyclic reduction, by syllable and letter."""
        core = self.cyclic_reduce()
        flat = [(i, 1 if e > 0 else -1) for i, e in core.letters for _ in range(abs(e))]
        return [free_reduce(flat[k:] + flat[:k]) for k in range(max(len(flat), 1))]


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v * u.inverse() * v.inverse()


@dataclass(frozen=True)
class ExponentProfile:
    sums: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.sums)


def exponent_profile(w: FreeWord, n_generators: int) -> ExponentProfile:
    if w.max_index() >= n_generators:
        raise ValueError(
            f"word uses generator index {w.max_index()} but only {n_generators} declared")
    sums = [0] * n_generators
    for i, e in w.letters:
        sums[i] += e
    return ExponentProfile(tuple(sums))


def _sums(w: FreeWord, n: int | None) -> tuple[int, ...]:
    if n is None:
        n = w.max_index() + 1
    return exponent_profile(w, n).sums


def in_commutator_subgroup(w: FreeWord, n: int | None = None) -> bool:
    """True iff ``w`` lies in [F_n, F_n], i.e. every exponent sum vanishes."""
    return all(s == 0 for s in _sums(w, n))


def pm_condition_holds(w: FreeWord, n: int | None = None) -> bool:
    """True iff the solution sets of ``w = I`` and ``w = -I`` in SL(2,C)^n are
    stable under every coordinatewise sign flip.

    A flip of generator ``i`` scales the value of ``w`` by ``(-1)**s_i``, so the
    condition is exactly that every exponent sum is even.  Necessity: at the
    identity tuple, flipping an odd-sum coordinate moves ``w = I`` to ``w = -I``.
    """
    return all(s % 2 == 0 for s in _sums(w, n))


def minus_condition_holds(w: FreeWord, n: int | None = None) -> bool:
    """True iff the global flip ``m -> -m`` swaps the solution sets of ``w = I``
    and ``w = -I``; the flip scales ``w`` by ``(-1)**sum(s_i)``."""
    return sum(_sums(w, n)) % 2 == 1


def has_even_nonzero_sum(w: FreeWord, n: int | None = None) -> bool:
    return any(s != 0 and s % 2 == 0 for s in _sums(w, n))


def central_flip_factor(w: FreeWord, signs: Sequence[int]) -> int:
    """Scalar by which ``w`` changes when generator ``i`` is multiplied by ``signs[i]*I``."""
    for s in signs:
        if s not in (1, -1):
            raise ValueError(f"signs must be +1 or -1, got {s}")
    sums = exponent_profile(w, len(signs)).sums
    odd = sum(1 for s, e in zip(signs, sums) if s == -1 and e % 2)
    return -1 if odd % 2 else 1


# ---------------------------------------------------------------------------
# parsing


class _Parser:
    def __init__(self, text: str, names: dict[str, int]):
        self.text = text
        self.raw = text.encode("utf-8")
        self.names = names
        self.pos = 0  # byte offset

    def error(self, message):
        raise WordSyntaxError(message, self.pos, self.text)

    def peek(self) -> str:
        self.skip_ws()
        return chr(self.raw[self.pos]) if self.pos < len(self.raw) else ""

    def skip_ws(self):
        while self.pos < len(self.raw) and chr(self.raw[self.pos]).isspace():
            self.pos += 1

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> FreeWord:
        if not self.peek():
            return FreeWord()
        w = self.word()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return w

    def word(self) -> FreeWord:
        w = self.term()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                w = w * self.term()
            elif c and (c.isalpha() or c in "([1"):
                w = w * self.term()
            else:
                return w

    def term(self) -> FreeWord:
        w = self.atom()
        if self.peek() == "^":
            self.pos += 1
            start = self.pos
            m = re.compile(rb"\s*(-?\d+)").match(self.raw, self.pos)
            if not m:
                self.error("expected integer exponent")
            k = int(m.group(1))
            if k == 0:
                self.pos = start
                self.skip_ws()
                self.error("zero exponent")
            self.pos = m.end()
            w = w ** k
        return w

    def atom(self) -> FreeWord:
        c = self.peek()
        if c == "(":
            self.pos += 1
            w = self.word()
            self.expect(")")
            return w
        if c == "[":
            self.pos += 1
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            return commutator(u, v)
        if c == "1":
            self.pos += 1
            return FreeWord()
        m = re.compile(rb"[A-Za-z][A-Za-z0-9]*").match(self.raw, self.pos)
        if not m:
            self.error("expected generator, '(' or '['" if c else "unexpected end of input")
        name = m.group(0).decode()
        if name not in self.names:
            self.error(f"unknown generator {name!r}")
        self.pos = m.end()
        return FreeWord.gen(self.names[name])


def _name_map(generators) -> dict[str, int]:
    names = [g.name if isinstance(g, Generator) else str(g) for g in generators]
    if len(set(names)) != len(names):
        raise ValueError("duplicate generator names")
    return {name: k for k, name in enumerate(names)}


def parse_word(text: str, generators: Sequence[Generator | str]) -> FreeWord:
    """Parse ``text`` over ``generators`` and return its free reduction.

    >>> parse_word("[x,y]", "xy").letters
    ((0, 1), (1, 1), (0, -1), (1, -1))
    """
    return _Parser(text, _name_map(generators)).parse()


def parse_relation(text: str, generators) -> FreeWord:
    """Parse ``lhs = rhs`` as the relator ``lhs rhs^-1``; plain words pass through."""
    if "=" not in text:
        return parse_word(text, generators)
    lhs, _, rhs = text.partition("=")
    if "=" in rhs:
        raise WordSyntaxError("more than one '='", len(lhs.encode()) + 1 + rhs.index("="), text)
    left = parse_word(lhs, generators)
    try:
        right = parse_word(rhs, generators)
    except WordSyntaxError as exc:
        raise WordSyntaxError(str(exc).rsplit(" (at", 1)[0],
                              exc.offset + len(lhs.encode()) + 1, text) from None
    return left * right.inverse()


def format_word(w: FreeWord, generators: Sequence[Generator | str]) -> str:
    """Canonical printer; ``parse_word(format_word(w, g), g) == w``."""
    names = [g.name if isinstance(g, Generator) else str(g) for g in generators]
    if w.is_trivial():
        return "1"
    return " ".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in w.letters)


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    generators: tuple[Generator, ...]
    relators: tuple[FreeWord, ...] = ()
    class_tag: object = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple(g if isinstance(g, Generator) else Generator(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(self.relators))
        _name_map(gens)
        for r in self.relators:
            if r.max_index() >= len(gens):
                raise ValueError("relator uses an undeclared generator")

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def validate(self) -> list[str]:
        """Human-readable warnings; triviality is tested in the free group only."""
        return [f"relator {k + 1} is trivial in the free group (trivial relator)"
                for k, r in enumerate(self.relators) if r.is_trivial()]

    def __str__(self):
        return format_presentation(self)


def format_presentation(p: Presentation) -> str:
    rels = ", ".join(format_word(r, p.generators) for r in p.relators)
    return f"<{', '.join(p.names)} ; {rels}>"


def parse_presentation(text: str, source: str = "<string>") -> Presentation:
    """Parse the line format::

        gens: x, y, z     # one header line
        rel: [x,y] z^2    # one line per relator; 'lhs = rhs' also accepted
    """
    gens: list[str] | None = None
    rels: list[FreeWord] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        key, sep, value = body.partition(":")
        key = key.strip()
        value_offset = len((body.partition(":")[0] + sep).encode())
        if not sep or key not in ("gens", "rel"):
            raise PresentationError("expected 'gens:' or 'rel:'", source, lineno, 0)
        if key == "gens":
            if gens is not None:
                raise PresentationError("duplicate 'gens:' header", source, lineno, 0)
            gens = [s.strip() for s in value.split(",") if s.strip()]
            for name in gens:
                if not _IDENT_RE.match(name):
                    raise PresentationError(f"invalid generator name {name!r}", source, lineno,
                                            value_offset + len(value.encode()[: value.index(name)]))
            if len(set(gens)) != len(gens):
                raise PresentationError("duplicate generator names", source, lineno, value_offset)
        else:
            if gens is None:
                raise PresentationError("'rel:' before 'gens:' header", source, lineno, 0)
            try:
                rels.append(parse_relation(value, gens))
            except WordSyntaxError as exc:
                raise PresentationError(str(exc).rsplit(" (at", 1)[0], source, lineno,
                                        value_offset + exc.offset) from None
    if gens is None:
        raise PresentationError("missing 'gens:' header", source, 0)
    return Presentation(tuple(Generator(g) for g in gens), tuple(rels))


def load_presentation(path: str | Path) -> Presentation:
    path = Path(path)
    return parse_presentation(path.read_text(encoding="utf-8"), source=str(path))

