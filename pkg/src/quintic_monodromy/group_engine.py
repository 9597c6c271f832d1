"""Finite matrix groups over Z/mZ: codes, words, closure, orders."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from .matrix_core import (IntMatrix, Matrix, ModMatrix, SymplecticForm, identity_like,
                          inverse_unimodular)

DEFAULT_CLOSURE_CAP = 10**7
DEFAULT_ORDER_CAP = 1000


class UnknownGenerator(KeyError):
    pass


class CapExceeded(RuntimeError):
    """Closure grew past its cap.  ``partial`` holds what was found, with closed=False."""

    def __init__(self, cap: int, partial: FiniteMatrixGroup):
        super().__init__(f"closure exceeded cap of {cap} elements")
        self.cap = cap
        self.partial = partial


class NotClosed(RuntimeError):
    pass


class ClosureViolation(RuntimeError):
    pass


# -- canonical codes ---------------------------------------------------------

def encode(x: ModMatrix) -> int:
    """Base-m digits in row-major order; entry (1,1) is the least significant."""
    code = 0
    for e in reversed(x.entries()):
        code = code * x.modulus + e
    return code


def decode(code: int, dim: int, m: int) -> ModMatrix:
    if not 0 <= code < m ** (dim * dim):
        raise ValueError(f"code {code} out of range for {dim}x{dim} matrices mod {m}")
    digits = []
    for _ in range(dim * dim):
        code, d = divmod(code, m)
        digits.append(d)
    return ModMatrix([digits[i * dim:(i + 1) * dim] for i in range(dim)], m)


def _place_values(dim: int, m: int) -> np.ndarray:
    return np.array([m**k for k in range(dim * dim)], dtype=np.int64).reshape(dim, dim)


def encode_many(stack: np.ndarray, m: int) -> np.ndarray:
    """Vectorised encode of an (..., dim, dim) array of canonical residues."""
    dim = stack.shape[-1]
    if m ** (dim * dim) > 2**63:
        raise OverflowError("codes do not fit in int64; use encode()")
    return np.einsum("...ij,ij->...", stack.astype(np.int64), _place_values(dim, m))


# -- words ---------------------------------------------------------------------

_TOKEN = re.compile(r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<lpar>\()|(?P<rpar>\))"
                    r"|\^\s*(?:\(\s*(?P<pexp>-?\d+)\s*\)|(?P<exp>-?\d+))|(?P<star>\*)")


def _exponent(tok: re.Match) -> int | None:
    e = tok["pexp"] or tok["exp"]
    return None if e is None else int(e)


@dataclass(frozen=True)
class Word:
    """Freely reduced word: adjacent tokens carry distinct generator names.

    Construction merges equal neighbours and drops zero exponents.
    """

    tokens: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        reduced: list[tuple[str, int]] = []
        for name, exp in self.tokens:
            exp = int(exp)
            if reduced and reduced[-1][0] == name:
                exp += reduced.pop()[1]
            if exp:
                reduced.append((name, exp))
        object.__setattr__(self, "tokens", tuple(reduced))

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse e.g. ``"A T A^4 T^4"``, ``"A^-1*T"`` or ``"(E2^2 A^2 T^4 A^3 T)^4"``."""
        toks = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            mt = _TOKEN.match(text, pos)
            if not mt:
                raise ValueError(f"cannot parse word at {text[pos:]!r}")
            toks.append(mt)
            pos = mt.end()

        def parse_seq(i: int, depth: int) -> tuple[Word, int]:
            acc = cls()
            while i < len(toks):
                t = toks[i]
                name, lpar, rpar = t["name"], t["lpar"], t["rpar"]
                if t["star"]:
                    i += 1
                    continue
                if rpar:
                    if depth == 0:
                        raise ValueError("unbalanced ')'")
                    return acc, i + 1
                if name:
                    piece, i = cls(((name, 1),)), i + 1
                elif lpar:
                    piece, i = parse_seq(i + 1, depth + 1)
                else:
                    raise ValueError("exponent without a base")
                if i < len(toks) and _exponent(toks[i]) is not None:
                    piece, i = piece ** _exponent(toks[i]), i + 1
                acc = acc + piece
            if depth:
                raise ValueError("unbalanced '('")
            return acc, i

        word, _ = parse_seq(0, 0)
        return word

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[str, int]]) -> Word:
        return cls(tuple(letters))

    def __add__(self, other: Word) -> Word:
        return Word(self.tokens + other.tokens)

    def inverse(self) -> Word:
        return Word(tuple((n, -e) for n, e in reversed(self.tokens)))

    def __pow__(self, k: int) -> Word:
        base = self if k >= 0 else self.inverse()
        return Word(base.tokens * abs(k))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.tokens)

    def names(self) -> set[str]:
        return {n for n, _ in self.tokens}

    def substitute(self, mapping: Mapping[str, Word]) -> Word:
        out = Word()
        for name, exp in self.tokens:
            piece = mapping.get(name, Word(((name, 1),)))
            out = out + piece ** exp
        return out

    def __str__(self) -> str:
        if not self.tokens:
            return "1"
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in self.tokens)


def random_word(rng: random.Random, names: Sequence[str], max_len: int,
                min_len: int = 1) -> Word:
    """Uniform length in [min_len, max_len], letters g^{+-1} with no cancelling neighbours."""
    length = rng.randint(min_len, max_len)
    letters: list[tuple[str, int]] = []
    alphabet = [(n, s) for n in names for s in (1, -1)]
    for _ in range(length):
        choices = alphabet if not letters else [
            a for a in alphabet if a != (letters[-1][0], -letters[-1][1])]
        letters.append(rng.choice(choices))
    return Word(tuple(letters))


# -- generator sets and evaluation ------------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    """Named invertible matrices, all IntMatrix (det +-1) or all ModMatrix over one modulus."""

    names: tuple[str, ...]
    matrices: tuple[Matrix, ...]
    _inverses: tuple[Matrix, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "matrices", tuple(self.matrices))
        if len(self.names) != len(self.matrices):
            raise ValueError("names and matrices differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"generator names must be unique: {self.names}")
        if not self.matrices:
            raise ValueError("empty generator set")
        first = self.matrices[0]
        for m in self.matrices:
            if type(m) is not type(first) or m.dim != first.dim or m.modulus != first.modulus:
                raise ValueError("generators must share type, dimension and modulus")
        if isinstance(first, ModMatrix):
            invs = tuple(m.inverse() for m in self.matrices)
        else:
            invs = tuple(inverse_unimodular(m) for m in self.matrices)
        object.__setattr__(self, "_inverses", invs)

    @classmethod
    def from_mapping(cls, gens: Mapping[str, Matrix]) -> GeneratorSet:
        return cls(tuple(gens), tuple(gens.values()))

    @property
    def dim(self) -> int:
        return self.matrices[0].dim

    @property
    def modulus(self) -> int | None:
        return self.matrices[0].modulus

    def identity(self) -> Matrix:
        return identity_like(self.matrices[0])

    def __getitem__(self, name: str) -> Matrix:
        try:
            return self.matrices[self.names.index(name)]
        except ValueError:
            raise UnknownGenerator(name) from None

    def power(self, name: str, exp: int) -> Matrix:
        try:
            i = self.names.index(name)
        except ValueError:
            raise UnknownGenerator(name) from None
        base = self.matrices[i] if exp >= 0 else self._inverses[i]
        return base ** abs(exp)

    def reduce(self, m: int) -> GeneratorSet:
        if self.modulus is not None:
            raise TypeError("generators are already modular")
        return GeneratorSet(self.names, tuple(g.reduce(m) for g in self.matrices))


def evaluate_word(gens: GeneratorSet, w: Word) -> Matrix:
    """Left-to-right product of the generator powers in w."""
    result = gens.identity()
    for name, exp in w.tokens:
        result = result @ gens.power(name, exp)
    return result


# -- finite groups ---------------------------------------------------------------

@dataclass(frozen=True)
class FiniteMatrixGroup:
    dim: int
    modulus: int
    generators: GeneratorSet | None
    elements: frozenset[int]
    closed: bool
    discovery_order: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def matrices(self) -> list[ModMatrix]:
        return [decode(c, self.dim, self.modulus) for c in sorted(self.elements)]

    def __contains__(self, x: ModMatrix) -> bool:
        return member(self, x)


def closure(gens: GeneratorSet, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteMatrixGroup:
    """Breadth-first closure of the group generated by modular matrices.

    Right-multiplies frontier elements by each generator until nothing new
    appears.  Raises CapExceeded once more than ``cap`` elements are found.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    m = gens.modulus
    if m is None:
        raise TypeError("closure needs modular generators")
    identity = gens.identity()
    seen = {encode(identity)}
    order = [encode(identity)]
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens.matrices:
                y = x @ g
                c = encode(y)
                if c in seen:
                    continue
                seen.add(c)
                order.append(c)
                nxt.append(y)
                if len(seen) > cap:
                    partial = FiniteMatrixGroup(gens.dim, m, gens, frozenset(seen), False,
                                                tuple(order))
                    raise CapExceeded(cap, partial)
        frontier = nxt
    return FiniteMatrixGroup(gens.dim, m, gens, frozenset(seen), True, tuple(order))


def group_from_codes(dim: int, modulus: int, codes: Iterable[int],
                     generators: GeneratorSet | None = None) -> FiniteMatrixGroup:
    """Wrap a code set known to be a group (e.g. loaded from a dump)."""
    codes = tuple(codes)
    return FiniteMatrixGroup(dim, modulus, generators, frozenset(codes), True, codes)


def member(g: FiniteMatrixGroup, x: ModMatrix) -> bool:
    if not g.closed:
        raise NotClosed("membership queried on a partial closure")
    if x.dim != g.dim or x.modulus != g.modulus:
        raise ValueError("matrix does not match the group's dimension/modulus")
    return encode(x) in g.elements


def products_closed(elements: Sequence[ModMatrix], chunk: int = 128) -> tuple[bool, tuple | None]:
    """Check every pairwise product of ``elements`` stays in the set.

    Returns (True, None) or (False, (i, j)) for the first offending pair found.
    """
    if not elements:
        return True, None
    m = elements[0].modulus
    stack = np.array([x.rows for x in elements], dtype=np.int64)
    codes = np.sort(encode_many(stack, m))
    for start in range(0, len(elements), chunk):
        block = stack[start:start + chunk]
        prods = np.einsum("aij,bjk->abik", block, stack) % m
        pc = encode_many(prods, m)
        idx = np.searchsorted(codes, pc)
        idx = np.minimum(idx, len(codes) - 1)
        bad = np.argwhere(codes[idx] != pc)
        if len(bad):
            a, b = bad[0]
            return False, (start + int(a), int(b))
    return True, None


def element_order(x: Matrix, cap: int = DEFAULT_ORDER_CAP) -> int | None:
    """Smallest k >= 1 with x^k = I, or None if there is none up to ``cap``."""
    identity = identity_like(x)
    p = x
    for k in range(1, cap + 1):
        if p == identity:
            return k
        p = p @ x
    return None


# -- the 625-element pattern group mod 5 ------------------------------------------

def gamma_hat_element(n: int, a: int, b: int, c: int) -> ModMatrix:
    """Unitriangular matrix mod 5 with rows (1, n, 3n^2+2n, a), (0, 1, n, b), (0, 0, 1, c)."""
    return ModMatrix([[1, n, 3 * n * n + 2 * n, a],
                      [0, 1, n, b],
                      [0, 0, 1, c],
                      [0, 0, 0, 1]], 5)


def enumerate_gamma_hat() -> FiniteMatrixGroup:
    elems = [gamma_hat_element(*t) for t in product(range(5), repeat=4)]
    codes = [encode(x) for x in elems]
    if len(set(codes)) != len(elems):
        raise ClosureViolation("parametrisation is not injective")
    ok, pair = products_closed(elems)
    if not ok:
        i, j = pair
        raise ClosureViolation(f"product of elements {i} and {j} leaves the pattern")
    return FiniteMatrixGroup(4, 5, None, frozenset(codes), True, tuple(codes))


# -- symplectic group orders -------------------------------------------------------

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def sp_order(n: int, p: int, k: int = 1) -> int:
    """|Sp(2n, Z/p^k Z)| = p^((k-1) n(2n+1)) * p^(n^2) * prod_{i=1..n} (p^(2i) - 1)."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    order = p ** ((k - 1) * n * (2 * n + 1)) * p ** (n * n)
    for i in range(1, n + 1):
        order *= p ** (2 * i) - 1
    return order


def sp_order_bruteforce(n: int, m: int) -> int:
    """Count (2n)x(2n) matrices X over Z/mZ with X^T J X = J for the standard J.

    Exhaustive, so only feasible for tiny cases (m^(4n^2) candidates).
    """
    d = 2 * n
    J = np.array(SymplecticForm.standard(n).J.rows, dtype=np.int64) % m
    count = 0
    for entries in product(range(m), repeat=d * d):
        X = np.array(entries, dtype=np.int64).reshape(d, d)
        if np.array_equal((X.T @ J @ X) % m, J):
            count += 1
    return count


def symplectic_transvection(v: Sequence[int], c: int, form: SymplecticForm) -> IntMatrix:
    """Matrix of x -> x + c <x, v> v, i.e. I - c v v^T J for <x, v> = x^T J v."""
    d = form.dim
    vvT = IntMatrix([[v[i] * v[j] for j in range(d)] for i in range(d)])
    return IntMatrix.identity(d) - c * (vvT @ form.J)
