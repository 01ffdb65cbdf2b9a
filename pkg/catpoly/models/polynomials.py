"""Sparse integer polynomials indexed by integer partitions.

``PartitionPolynomial`` holds sums of monomials x_lambda (the L-polynomial, U_T and
U^L_T all live here). ``GraphUPolynomial`` adds an exponent of (y - 1) per term and holds
the two-variable U-polynomial of a general simple graph.

The canonical text of a polynomial doubles as its hash key: terms are sorted by partition
in descending lexicographic order and rendered ``c*x[a.b.c]`` joined by ``+``.
"""
import json
from collections import Counter
from collections.abc import Mapping
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple, Union

from catpoly.exceptions import CoefficientOverflowError

Partition = Tuple[int, ...]
GraphKey = Tuple[Partition, int]

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


def as_partition(parts: Iterable[int]) -> Partition:
    """Sort parts weakly decreasing. Rejects non-positive parts."""
    lam = tuple(sorted((int(p) for p in parts), reverse=True))
    if lam and lam[-1] < 1:
        raise ValueError(f"partition parts must be positive, got {lam}")
    return lam


def _checked(coeff: int, where: Any) -> int:
    if coeff < INT64_MIN or coeff > INT64_MAX:
        raise CoefficientOverflowError(f"coefficient {coeff} of {where} leaves the signed 64-bit range")
    return coeff


def _render_partition(lam: Partition) -> str:
    return '.'.join(str(p) for p in lam)


class _SparsePolynomial(Mapping):
    """Immutable map from term keys to non-zero int64 coefficients."""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Union[None, Mapping, Iterable[Tuple[Any, int]]] = None):
        acc: Dict[Any, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                key = self._normalize_key(key)
                acc[key] = acc.get(key, 0) + int(coeff)
        self._terms = {k: _checked(c, k) for k, c in acc.items() if c != 0}
        self._hash: Optional[int] = None

    @staticmethod
    def _normalize_key(key: Any) -> Any:
        raise NotImplementedError

    @staticmethod
    def _sort_key(key: Any) -> Any:
        raise NotImplementedError

    # Mapping protocol
    def __getitem__(self, key: Any) -> int:
        return self._terms[self._normalize_key(key)]

    def __iter__(self) -> Iterator[Any]:
        return iter(self.sorted_keys())

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key: object) -> bool:
        try:
            return self._normalize_key(key) in self._terms
        except (TypeError, ValueError):
            return False

    def sorted_keys(self) -> List[Any]:
        return sorted(self._terms, key=self._sort_key)

    def sorted_terms(self) -> List[Tuple[Any, int]]:
        return [(k, self._terms[k]) for k in self.sorted_keys()]

    def coefficient(self, key: Any) -> int:
        """Coefficient of a term, zero when absent."""
        return self._terms.get(self._normalize_key(key), 0)

    def mass(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())

    def map_coefficients(self, fn: Callable[[Any, int], int]):
        return type(self)((k, fn(k, c)) for k, c in self._terms.items())

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        merged = Counter(self._terms)
        merged.update(other._terms)
        return type(self)(merged)

    def __neg__(self):
        return self.map_coefficients(lambda _k, c: -c)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return self.map_coefficients(lambda _k, c: c * scalar)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return self.canonical_key()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.canonical_key()!r})"

    def canonical_key(self, symbol: str = 'x') -> str:
        raise NotImplementedError

    def to_json(self) -> str:
        """Compact JSON with a fixed key order; stable across platforms."""
        return json.dumps(self.to_dict(), separators=(',', ':'))

    @classmethod
    def from_json(cls, text: str):
        return cls.from_dict(json.loads(text))


class PartitionPolynomial(_SparsePolynomial):
    """Formal sum of monomials x_lambda with integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _normalize_key(key: Iterable[int]) -> Partition:
        return as_partition(key)

    @staticmethod
    def _sort_key(key: Partition) -> Tuple[int, ...]:
        # descending lexicographic order
        return tuple(-p for p in key) + (1,)

    @classmethod
    def monomial(cls, lam: Iterable[int], coeff: int = 1) -> 'PartitionPolynomial':
        return cls([(lam, coeff)])

    @property
    def size(self) -> int:
        """The common size n of the partitions (0 for the zero polynomial)."""
        for lam in self._terms:
            return sum(lam)
        return 0

    def has_part(self, part: int) -> bool:
        return any(part in lam for lam in self._terms)

    def drop_part_one(self) -> 'PartitionPolynomial':
        """Evaluate at x_1 = 0: keep only the partitions without a part equal to 1."""
        return PartitionPolynomial((lam, c) for lam, c in self._terms.items() if 1 not in lam)

    def canonical_key(self, symbol: str = 'x') -> str:
        if not self._terms:
            return '0'
        return '+'.join(f"{c}*{symbol}[{_render_partition(lam)}]" for lam, c in self.sorted_terms())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.size,
            'terms': [{'lambda': list(lam), 'coeff': c} for lam, c in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PartitionPolynomial':
        poly = cls((term['lambda'], term['coeff']) for term in data.get('terms', []))
        if poly and poly.size != data.get('n', poly.size):
            raise ValueError(f"declared n={data.get('n')} does not match the partition size {poly.size}")
        return poly


class GraphUPolynomial(_SparsePolynomial):
    """Formal sum of terms x_lambda * (y - 1)^j for the U-polynomial of a simple graph."""

    __slots__ = ()

    @staticmethod
    def _normalize_key(key: Tuple[Iterable[int], int]) -> GraphKey:
        lam, ypow = key
        ypow = int(ypow)
        if ypow < 0:
            raise ValueError(f"y exponent must be non-negative, got {ypow}")
        return as_partition(lam), ypow

    @staticmethod
    def _sort_key(key: GraphKey) -> Tuple[Tuple[int, ...], int]:
        lam, ypow = key
        return tuple(-p for p in lam) + (1,), ypow

    @property
    def size(self) -> int:
        for lam, _ in self._terms:
            return sum(lam)
        return 0

    def max_y_power(self) -> int:
        return max((j for _, j in self._terms), default=0)

    def evaluate_y(self, y: int) -> PartitionPolynomial:
        """Substitute an integer for y."""
        return PartitionPolynomial((lam, c * (y - 1) ** j) for (lam, j), c in self._terms.items())

    def x_part(self) -> PartitionPolynomial:
        """The y-free part (terms with exponent 0); the whole polynomial for a forest."""
        return PartitionPolynomial((lam, c) for (lam, j), c in self._terms.items() if j == 0)

    def canonical_key(self, symbol: str = 'x') -> str:
        if not self._terms:
            return '0'
        rendered = []
        for (lam, j), c in self.sorted_terms():
            term = f"{c}*{symbol}[{_render_partition(lam)}]"
            if j:
                term += f"*(y-1)^{j}"
            rendered.append(term)
        return '+'.join(rendered)

    def to_dict(self) -> Dict[str, Any]:
        terms = []
        for (lam, j), c in self.sorted_terms():
            term: Dict[str, Any] = {'lambda': list(lam), 'coeff': c}
            if j:
                term['ypow'] = j
            terms.append(term)
        return {'n': self.size, 'terms': terms}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'GraphUPolynomial':
        return cls(((term['lambda'], term.get('ypow', 0)), term['coeff']) for term in data.get('terms', []))
