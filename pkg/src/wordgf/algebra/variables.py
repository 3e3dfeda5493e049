"""Names of the indeterminates that appear in generating functions.

Letters inside a name are stored as alphabet indices so that the natural
tuple ordering of :class:`VariableName` is the package-wide variable order:
``T < S < Single < Pair < Triple < Final < EndOne < EndTwo``, ties broken
by letter order in the alphabet.
"""

from __future__ import annotations

from enum import IntEnum
from typing import NamedTuple, Sequence


class Role(IntEnum):
    T = 0
    S = 1
    SINGLE = 2
    PAIR = 3
    TRIPLE = 4
    FINAL = 5
    END_ONE = 6
    END_TWO = 7


_ARITY = {
    Role.T: 0,
    Role.S: 0,
    Role.SINGLE: 1,
    Role.PAIR: 2,
    Role.TRIPLE: 3,
    Role.FINAL: 1,
    Role.END_ONE: 1,
    Role.END_TWO: 2,
}


class VariableName(NamedTuple):
    role: Role
    letters: tuple = ()

    def render(self, symbols: Sequence[str] | None = None) -> str:
        """Canonical text form, e.g. ``x_{a,b}`` or ``End_a``."""
        if self.role == Role.T:
            return "t"
        if self.role == Role.S:
            return "s"
        names = [str(i) if symbols is None else symbols[i] for i in self.letters]
        prefix = {
            Role.SINGLE: "x",
            Role.PAIR: "x",
            Role.TRIPLE: "x",
            Role.FINAL: "y",
            Role.END_ONE: "End",
            Role.END_TWO: "End",
        }[self.role]
        if len(names) == 1:
            return f"{prefix}_{names[0]}"
        return f"{prefix}_{{{','.join(names)}}}"

    def __repr__(self):
        return f"VariableName({self.role.name}, {self.letters})"


def _make(role: Role, letters) -> VariableName:
    letters = tuple(letters)
    if len(letters) != _ARITY[role]:
        raise ValueError(f"{role.name} takes {_ARITY[role]} letters, got {letters}")
    return VariableName(role, letters)


T = VariableName(Role.T)
S = VariableName(Role.S)


def single(a: int) -> VariableName:
    return _make(Role.SINGLE, (a,))


def pair(a: int, b: int) -> VariableName:
    return _make(Role.PAIR, (a, b))


def triple(a: int, b: int, c: int) -> VariableName:
    return _make(Role.TRIPLE, (a, b, c))


def final(a: int) -> VariableName:
    return _make(Role.FINAL, (a,))


def end_one(a: int) -> VariableName:
    return _make(Role.END_ONE, (a,))


def end_two(a: int, b: int) -> VariableName:
    return _make(Role.END_TWO, (a, b))


def parse_variable(text: str, symbols: Sequence[str]) -> VariableName:
    """Inverse of :meth:`VariableName.render` for a given alphabet."""
    text = text.strip()
    if text == "t":
        return T
    if text == "s":
        return S
    head, sep, tail = text.partition("_")
    if not sep or not tail:
        raise ValueError(f"not a variable name: {text!r}")
    if tail.startswith("{") and tail.endswith("}"):
        parts = tail[1:-1].split(",")
    else:
        parts = [tail]
    index = {sym: i for i, sym in enumerate(symbols)}
    try:
        letters = tuple(index[p.strip()] for p in parts)
    except KeyError as exc:
        raise ValueError(f"unknown letter {exc.args[0]!r} in {text!r}") from None
    if head == "x":
        role = {1: Role.SINGLE, 2: Role.PAIR, 3: Role.TRIPLE}.get(len(letters))
    elif head == "y":
        role = Role.FINAL if len(letters) == 1 else None
    elif head == "End":
        role = {1: Role.END_ONE, 2: Role.END_TWO}.get(len(letters))
    else:
        role = None
    if role is None:
        raise ValueError(f"not a variable name: {text!r}")
    return VariableName(role, letters)
