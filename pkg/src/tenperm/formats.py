"""Plain-text file formats with bit-exact round trips.

Three block formats share one token layer: tokens are whitespace-separated,
line boundaries carry no meaning beyond error reporting, and lines whose
first non-blank character is ``#`` are comments.

Dense tensor (version 1)::

    ten 1
    order 3
    shape 2 2 2
    1 2 3 4 5 6 7 8

with exactly ``prod(shape)`` values in row-major order (last index fastest).

Kruskal form::

    kt 1
    order 3
    rank 2
    factor 1 4 2
    ... 4*2 values, row-major ...
    factor 2 ...

Tucker form: ``tt 1`` followed by an embedded dense-tensor block for the
core, then one ``factor k I_k J_k`` block per core mode.

Serialization prints every value as the shortest decimal string that parses
back to the identical binary float, so ``parse(serialize(x))`` is bitwise
exact.
"""

from __future__ import annotations

from math import prod

import numpy as np

from .decomp import KruskalTensor, TuckerTensor
from .errors import FormatError

__all__ = [
    "format_float",
    "parse_tensor",
    "serialize_tensor",
    "parse_kruskal",
    "serialize_kruskal",
    "parse_tucker",
    "serialize_tucker",
    "parse_any",
]


def format_float(value: float) -> str:
    """Shortest decimal string that round-trips to the same binary float."""
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


class _TokenStream:
    """Whitespace tokenizer that remembers line numbers and skips comments."""

    def __init__(self, text: str | bytes):
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        self._tokens: list[tuple[str, int]] = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if line.lstrip().startswith("#"):
                continue
            for token in line.split():
                self._tokens.append((token, lineno))
        self._pos = 0
        self._last_line = max((t[1] for t in self._tokens), default=1)

    def exhausted(self) -> bool:
        return self._pos >= len(self._tokens)

    def last_line(self) -> int:
        if self._pos == 0:
            return 1
        return self._tokens[self._pos - 1][1]

    def peek(self) -> str | None:
        return None if self.exhausted() else self._tokens[self._pos][0]

    def next(self, expected: str) -> tuple[str, int]:
        if self.exhausted():
            raise FormatError(self._last_line, f"unexpected end of input, expected {expected}")
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def keyword(self, word: str) -> None:
        token, line = self.next(f"{word!r}")
        if token != word:
            raise FormatError(line, f"expected {word!r}, found {token!r}")

    def integer(self, what: str, minimum: int = 1) -> int:
        token, line = self.next(what)
        try:
            value = int(token)
        except ValueError:
            raise FormatError(line, f"unparseable {what} {token!r}") from None
        if value < minimum:
            raise FormatError(line, f"{what} must be at least {minimum}, found {value}")
        return value

    def real(self) -> float:
        token, line = self.next("a value")
        try:
            return float(token)
        except ValueError:
            raise FormatError(line, f"unparseable number {token!r}") from None

    def values(self, count: int, what: str) -> np.ndarray:
        out = np.empty(count)
        for i in range(count):
            if self.exhausted():
                raise FormatError(
                    self._last_line,
                    f"expected {count} values for {what}, found only {i}",
                )
            out[i] = self.real()
        return out

    def done(self) -> None:
        if not self.exhausted():
            token, line = self._tokens[self._pos]
            raise FormatError(line, f"unexpected trailing data starting at {token!r}")


def _magic(stream: _TokenStream, magic: str) -> None:
    token, line = stream.next("file magic")
    if token != magic:
        raise FormatError(line, f"bad magic: expected {magic!r}, found {token!r}")
    version, line = stream.next("format version")
    if version != "1":
        raise FormatError(line, f"unsupported {magic!r} version {version!r}")


def _tensor_block(stream: _TokenStream) -> np.ndarray:
    _magic(stream, "ten")
    stream.keyword("order")
    order = stream.integer("order")
    stream.keyword("shape")
    shape = tuple(stream.integer("shape entry") for _ in range(order))
    data = stream.values(prod(shape), f"shape {shape}")
    return data.reshape(shape)


def _factor_block(stream: _TokenStream, k: int, columns: int | None) -> np.ndarray:
    stream.keyword("factor")
    index = stream.integer("factor index")
    if index != k:
        raise FormatError(stream.last_line(), f"expected factor {k}, found {index}")
    rows = stream.integer("factor row count")
    cols = stream.integer("factor column count")
    if columns is not None and cols != columns:
        raise FormatError(
            stream.last_line(), f"factor {k} has {cols} columns, expected {columns}"
        )
    return stream.values(rows * cols, f"factor {k}").reshape(rows, cols)


def parse_tensor(text: str | bytes) -> np.ndarray:
    """Parse a dense tensor block; raises FormatError with a line number."""
    stream = _TokenStream(text)
    x = _tensor_block(stream)
    stream.done()
    return x


def serialize_tensor(x: np.ndarray) -> str:
    """Canonical dense tensor text; values on one line, row-major."""
    x = np.asarray(x, dtype=np.float64)
    lines = [
        "ten 1",
        f"order {x.ndim}",
        "shape " + " ".join(str(s) for s in x.shape),
        " ".join(format_float(v) for v in x.ravel(order="C")),
    ]
    return "\n".join(lines) + "\n"


def parse_kruskal(text: str | bytes) -> KruskalTensor:
    """Parse a Kruskal form: header then one factor block per mode."""
    stream = _TokenStream(text)
    _magic(stream, "kt")
    stream.keyword("order")
    order = stream.integer("order")
    stream.keyword("rank")
    rank = stream.integer("rank")
    factors = tuple(_factor_block(stream, k, rank) for k in range(1, order + 1))
    stream.done()
    return KruskalTensor(factors)


def serialize_kruskal(k: KruskalTensor) -> str:
    lines = ["kt 1", f"order {k.order}", f"rank {k.rank}"]
    for index, f in enumerate(k.factors, start=1):
        lines.append(f"factor {index} {f.shape[0]} {f.shape[1]}")
        lines.append(" ".join(format_float(v) for v in f.ravel(order="C")))
    return "\n".join(lines) + "\n"


def parse_tucker(text: str | bytes) -> TuckerTensor:
    """Parse a Tucker form: an embedded core tensor block, then factor blocks."""
    stream = _TokenStream(text)
    _magic(stream, "tt")
    core = _tensor_block(stream)
    factors = tuple(
        _factor_block(stream, k, core.shape[k - 1]) for k in range(1, core.ndim + 1)
    )
    stream.done()
    return TuckerTensor(core, factors)


def serialize_tucker(t: TuckerTensor) -> str:
    lines = ["tt 1", serialize_tensor(t.core).rstrip("\n")]
    for index, f in enumerate(t.factors, start=1):
        lines.append(f"factor {index} {f.shape[0]} {f.shape[1]}")
        lines.append(" ".join(format_float(v) for v in f.ravel(order="C")))
    return "\n".join(lines) + "\n"


def parse_any(text: str | bytes) -> np.ndarray | KruskalTensor | TuckerTensor:
    """Dispatch on the magic token: ``ten``, ``kt``, or ``tt``."""
    probe = _TokenStream(text)
    magic = probe.peek()
    if magic == "ten":
        return parse_tensor(text)
    if magic == "kt":
        return parse_kruskal(text)
    if magic == "tt":
        return parse_tucker(text)
    token, line = probe.next("file magic")
    raise FormatError(line, f"bad magic: expected 'ten', 'kt' or 'tt', found {token!r}")
