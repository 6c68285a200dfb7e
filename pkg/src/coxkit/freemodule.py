"""Sparse formal linear combinations with exact integer/rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def sort_key(key: Hashable):
    """A total order on mixed basis keys, for deterministic iteration."""
    if isinstance(key, frozenset):
        return (0, len(key), tuple(sorted(key)))
    if isinstance(key, tuple):
        return (1, len(key), tuple(sort_key(k) for k in key))
    if isinstance(key, (int, Fraction)):
        return (2, key)
    if hasattr(key, "window"):
        return (3, key.system.family, key.system.n, key.window)
    return (4, repr(key))


class FormalVector:
    """A free-module element: sparse map from basis keys to exact scalars.

    Zero coefficients are never stored.  The optional ``kind`` tag names
    the basis (e.g. "element", "sigma", "sigma_star") and guards the
    pairing against mixing bases.
    """

    __slots__ = ("terms", "kind")

    def __init__(self, terms: Union[Mapping, Iterable, None] = None, kind: str | None = None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                if coeff:
                    acc = data.get(key, 0) + coeff
                    if acc:
                        data[key] = acc
                    else:
                        data.pop(key, None)
        self.terms = data
        self.kind = kind

    @classmethod
    def basis(cls, key: Hashable, coeff: Scalar = 1, kind: str | None = None) -> "FormalVector":
        return cls({key: coeff}, kind=kind)

    @classmethod
    def zero(cls, kind: str | None = None) -> "FormalVector":
        return cls(kind=kind)

    @classmethod
    def from_keys(cls, keys: Iterable[Hashable], kind: str | None = None) -> "FormalVector":
        return cls(((k, 1) for k in keys), kind=kind)

    def _merge_kind(self, other: "FormalVector") -> str | None:
        if self.kind is not None and other.kind is not None and self.kind != other.kind:
            raise ValueError(f"mixing bases {self.kind!r} and {other.kind!r}")
        return self.kind if self.kind is not None else other.kind

    def __add__(self, other: "FormalVector") -> "FormalVector":
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        result = FormalVector(kind=self._merge_kind(other))
        result.terms = out
        return result

    def __sub__(self, other: "FormalVector") -> "FormalVector":
        return self + (-other)

    def __neg__(self) -> "FormalVector":
        return self.scale(-1)

    def scale(self, c: Scalar) -> "FormalVector":
        result = FormalVector(kind=self.kind)
        if c:
            result.terms = {k: c * v for k, v in self.terms.items()}
        return result

    def __rmul__(self, c: Scalar) -> "FormalVector":
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormalVector) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, key: Hashable) -> Scalar:
        return self.terms.get(key, 0)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def support(self):
        return sorted(self.terms, key=sort_key)

    def coefficient_sum(self) -> Scalar:
        return sum(self.terms.values())

    def map_keys(self, f: Callable, kind: str | None = None) -> "FormalVector":
        """Linear extension of a key-to-key map (collects collisions)."""
        return FormalVector(((f(k), c) for k, c in self.terms.items()), kind=kind)

    def map_to_vectors(self, f: Callable[[Hashable], "FormalVector"], kind: str | None = None) -> "FormalVector":
        """Linear extension of a key-to-vector map."""
        out = FormalVector(kind=kind)
        for key, coeff in self.terms.items():
            out = out + f(key).scale(coeff)
        out.kind = kind
        return out

    def pairing(self, other: "FormalVector") -> Scalar:
        """Bilinear extension of <u, v> = delta_{u,v} on basis keys."""
        self._merge_kind(other)
        small, big = (self, other) if len(self) <= len(other) else (other, self)
        return sum(c * big.terms.get(k, 0) for k, c in small.terms.items())

    def tensor(self, other: "FormalVector", kind: str | None = None) -> "FormalVector":
        out = FormalVector(kind=kind)
        out.terms = {
            (k1, k2): c1 * c2
            for k1, c1 in self.terms.items()
            for k2, c2 in other.terms.items()
        }
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for key, coeff in self.items():
            bits.append(f"{coeff}*{key}" if coeff != 1 else f"{key}")
        return " + ".join(bits)
