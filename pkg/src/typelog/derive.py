"""Structural derivation of per-type logic operations.

A datatype is described as a list of constructors with typed child
positions.  From that description we derive the five operations the
engine needs (unify a constructor application, occurs check, variable
substitution, groundness, printing), so users never write them by hand.
Recursive and mutually recursive types are supported: child positions
refer to types by name and are resolved through a registry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import terms
from .terms import Compound, LogicError, Term, TypeMismatchError, Var, VarId


class DeriveError(LogicError):
    """A datatype descriptor is malformed."""


@dataclass(frozen=True)
class ConstructorSpec:
    name: str
    children: tuple  # child logical-type names, resolved via the registry


@dataclass(frozen=True)
class DatatypeDescriptor:
    type_name: str
    constructors: tuple


@dataclass
class LogicCapability:
    """The derived operations for one logical type.

    `unify_step` only ever extends the store; on clash it returns None
    and the caller keeps the original store.  `occurs`, `substitute` and
    `is_ground` are purely syntactic on the given payload.
    """

    unify_step: Callable
    occurs: Callable
    substitute: Callable
    is_ground: Callable
    pretty: Callable


class LogicType:
    """A registered logical type: descriptor plus derived capability.

    Identity matters: two LogicType objects are distinct types even if
    their descriptors coincide.  Instances are created through
    TypeRegistry.declare.
    """

    def __init__(self, descriptor: DatatypeDescriptor, registry: "TypeRegistry"):
        self._descriptor = descriptor
        self._registry = registry
        self._capability: Optional[LogicCapability] = None
        # Installed by preludes: overrides the derived prefix printer.
        self.pretty_override: Optional[Callable[[Compound], str]] = None
        # Installed for types that have a numeral encoding (Peano nats).
        self.from_int: Optional[Callable[[int], Term]] = None
        # Installed for list-like types: (element_type, nil_ctor, cons_ctor).
        self.list_shape: Optional[tuple] = None

    @property
    def name(self) -> str:
        return self._descriptor.type_name

    @property
    def descriptor(self) -> DatatypeDescriptor:
        return self._descriptor

    @property
    def registry(self) -> "TypeRegistry":
        return self._registry

    @property
    def capability(self) -> LogicCapability:
        if self._capability is None:
            self._capability = derive_capability(self._descriptor, self._registry)
        return self._capability

    def constructor(self, name: str) -> ConstructorSpec:
        for c in self._descriptor.constructors:
            if c.name == name:
                return c
        raise DeriveError(f"type {self.name} has no constructor {name!r}")

    def child_types(self, ctor: str) -> tuple:
        spec = self.constructor(ctor)
        return tuple(self._registry.get(n) for n in spec.children)

    def var(self, name: str) -> Var:
        """A user-named variable of this type.  Names starting with "_"
        are reserved for the engine."""
        if not name or name.startswith("_"):
            raise ValueError(
                f"invalid variable name {name!r}: names starting with '_' are reserved"
            )
        return Var(VarId(name, self))

    def make(self, ctor: str, *args: Term) -> Compound:
        """Build a constructor application, checking arity and the
        logical type of every child."""
        expected = self.child_types(ctor)
        if len(args) != len(expected):
            raise TypeMismatchError(
                f"{self.name}.{ctor} takes {len(expected)} argument(s), got {len(args)}"
            )
        for i, (arg, want) in enumerate(zip(args, expected)):
            if terms.term_type(arg) is not want:
                raise TypeMismatchError(
                    f"{self.name}.{ctor} argument {i + 1}: expected {want.name}, "
                    f"got {getattr(terms.term_type(arg), 'name', '?')}"
                )
        return Compound(self, ctor, tuple(args))

    def __repr__(self):
        return f"LogicType({self.name})"


def derive_capability(descriptor: DatatypeDescriptor, registry: "TypeRegistry") -> LogicCapability:
    """Derive the capability for a descriptor, validating it first.

    Rejects duplicate constructor names and child references to types
    the registry does not know about.
    """
    seen = set()
    for spec in descriptor.constructors:
        if spec.name in seen:
            raise DeriveError(
                f"type {descriptor.type_name}: duplicate constructor {spec.name!r}"
            )
        seen.add(spec.name)
        for child in spec.children:
            if not registry.knows(child):
                raise DeriveError(
                    f"type {descriptor.type_name}, constructor {spec.name}: "
                    f"unresolved child type {child!r}"
                )

    def unify_step(p: Compound, q: Compound, store):
        if p.ctor != q.ctor:
            return None
        for x, y in zip(p.args, q.args):
            store = terms.unify(x, y, store)
            if store is None:
                return None
        return store

    def occurs(vid: VarId, p: Compound) -> bool:
        return any(terms.occurs_syntactic(vid, child) for child in p.args)

    def substitute(vid: VarId, replacement: Term, p: Compound) -> Compound:
        return Compound(
            p.ltype,
            p.ctor,
            tuple(terms.substitute(vid, replacement, child) for child in p.args),
        )

    def is_ground(p: Compound) -> bool:
        return all(terms.is_ground_syntactic(child) for child in p.args)

    def pretty(p: Compound) -> str:
        if not p.args:
            return p.ctor
        return f"{p.ctor}({', '.join(terms.pretty(a) for a in p.args)})"

    return LogicCapability(unify_step, occurs, substitute, is_ground, pretty)


class TypeRegistry:
    """Name-to-type table letting descriptors reference each other.

    Declaring only records the descriptor; validation happens when the
    capability is first derived, so mutually recursive types can be
    declared in any order.
    """

    def __init__(self):
        self._types: dict = {}

    def declare(self, name: str, constructors) -> LogicType:
        """Register a datatype.  `constructors` is a sequence of
        (constructor_name, [child_type_name, ...]) pairs."""
        if name in self._types:
            raise DeriveError(f"type {name!r} is already declared")
        specs = tuple(ConstructorSpec(c, tuple(children)) for c, children in constructors)
        ltype = LogicType(DatatypeDescriptor(name, specs), self)
        self._types[name] = ltype
        return ltype

    def knows(self, name: str) -> bool:
        return name in self._types

    def get(self, name: str) -> LogicType:
        try:
            return self._types[name]
        except KeyError:
            raise DeriveError(f"unknown logical type {name!r}") from None
