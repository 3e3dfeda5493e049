"""The input record shared by every engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .algebra import Role, VariableName, as_rational
from .errors import ValidationError
from .language import Alphabet, ForbiddenSet


class Variant(Enum):
    BASIC = "basic"
    SINGLE = "single"
    DOUBLE = "double"
    TRIPLE = "triple"
    PROB_DOUBLE = "prob_double"
    PROB_TRIPLE = "prob_triple"
    DOUBLE_IF = "double_if"

    @property
    def order(self) -> int:
        """Length of the context the cluster engine has to remember."""
        return _ORDER[self]

    @property
    def weight_roles(self) -> frozenset:
        return _ROLES[self]

    @property
    def probabilistic(self) -> bool:
        return self in (Variant.PROB_DOUBLE, Variant.PROB_TRIPLE, Variant.DOUBLE_IF)


_ORDER = {
    Variant.BASIC: 1,
    Variant.SINGLE: 1,
    Variant.DOUBLE: 2,
    Variant.TRIPLE: 3,
    Variant.PROB_DOUBLE: 2,
    Variant.PROB_TRIPLE: 3,
    Variant.DOUBLE_IF: 2,
}

_ROLES = {
    Variant.BASIC: frozenset(),
    Variant.SINGLE: frozenset({Role.SINGLE}),
    Variant.DOUBLE: frozenset({Role.SINGLE, Role.PAIR}),
    Variant.TRIPLE: frozenset({Role.SINGLE, Role.PAIR, Role.TRIPLE}),
    Variant.PROB_DOUBLE: frozenset({Role.SINGLE, Role.PAIR}),
    Variant.PROB_TRIPLE: frozenset({Role.SINGLE, Role.PAIR, Role.TRIPLE}),
    Variant.DOUBLE_IF: frozenset({Role.SINGLE, Role.PAIR, Role.FINAL}),
}


class MarkPolicy(Enum):
    """Multiplier attached to every marked forbidden factor."""

    NEGATIVE_ONE = "neg"
    S_MINUS_ONE = "s"


@dataclass(frozen=True)
class Problem:
    alphabet: Alphabet
    forbidden: ForbiddenSet
    variant: Variant = Variant.SINGLE
    mark: MarkPolicy = MarkPolicy.NEGATIVE_ONE
    bindings: Mapping[VariableName, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.forbidden.alphabet != self.alphabet:
            raise ValidationError("forbidden set is over a different alphabet")
        clean = {}
        roles = self.variant.weight_roles
        m = len(self.alphabet)
        for v, value in dict(self.bindings).items():
            if not isinstance(v, VariableName):
                raise ValidationError(f"binding key {v!r} is not a variable name")
            if any(i < 0 or i >= m for i in v.letters):
                raise ValidationError(f"binding {v!r} references a letter outside the alphabet")
            if v.role == Role.S:
                if self.mark != MarkPolicy.S_MINUS_ONE:
                    raise ValidationError("s can only be bound under the (s-1) mark policy")
            elif v.role not in roles:
                raise ValidationError(
                    f"variable {v.render(self.alphabet.symbols)} is not used by the "
                    f"{self.variant.value} variant"
                )
            q = as_rational(value)
            if self.variant.probabilistic and v.role != Role.S and not 0 <= q <= 1:
                raise ValidationError(
                    f"probability {v.render(self.alphabet.symbols)} = {q} is outside [0, 1]"
                )
            clean[v] = q
        object.__setattr__(self, "bindings", clean)

    def with_(self, **changes) -> "Problem":
        data = dict(
            alphabet=self.alphabet,
            forbidden=self.forbidden,
            variant=self.variant,
            mark=self.mark,
            bindings=self.bindings,
        )
        data.update(changes)
        return Problem(**data)

    def __hash__(self):
        return hash((self.alphabet, self.forbidden, self.variant, self.mark,
                     frozenset(self.bindings.items())))
