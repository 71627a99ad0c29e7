"""Bit-exact readers and writers for patterns, permutations, and run stats.

Readers reject malformed input with line-numbered ParseErrors instead of
guessing; writers emit byte-identical output for identical inputs. Matrix
values are parsed and discarded: this toolkit is purely symbolic.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass

from .errors import ConfigError, InputError, ParseError
from .graph import from_edge_list

_MM_FIELDS = {"pattern": 2, "real": 3, "integer": 3, "complex": 4}
_MM_SYMMETRIES = ("symmetric", "general")


def read_matrix_market(path, symmetrize=False):
    """Read the sparsity pattern of a Matrix Market coordinate file.

    Accepts ``%%MatrixMarket matrix coordinate <field> symmetric|general``
    banners. Indices are mapped 1-based to 0-based, diagonal entries are
    dropped, duplicates collapse. A ``general`` matrix must be structurally
    symmetric unless ``symmetrize=True``, which takes the union of the
    pattern and its transpose with a warning.
    """
    with open(path, encoding="utf-8") as fh:
        lines = list(enumerate(fh, 1))
    if not lines:
        raise ParseError("empty file, expected a %%MatrixMarket banner", path, 1)

    lineno, banner = lines[0]
    tokens = banner.split()
    if len(tokens) != 5 or tokens[0].lower() != "%%matrixmarket":
        raise ParseError("malformed banner, expected "
                         "'%%MatrixMarket matrix coordinate <field> <symmetry>'",
                         path, lineno)
    obj, fmt, field, symmetry = (t.lower() for t in tokens[1:])
    if obj != "matrix":
        raise ParseError(f"unsupported object {obj!r}, only 'matrix'", path, lineno)
    if fmt != "coordinate":
        raise ParseError(f"unsupported format {fmt!r}, only 'coordinate'", path, lineno)
    if field not in _MM_FIELDS:
        raise ParseError(f"unsupported field {field!r}", path, lineno)
    if symmetry not in _MM_SYMMETRIES:
        raise ParseError(f"unsupported symmetry {symmetry!r}, "
                         "only 'symmetric' or 'general'", path, lineno)
    want_tokens = _MM_FIELDS[field]

    body = [(no, ln.strip()) for no, ln in lines[1:] if not ln.lstrip().startswith("%")]
    body = [(no, ln) for no, ln in body if ln]
    if not body:
        raise ParseError("missing size line", path, lines[-1][0])

    lineno, size_line = body[0]
    size_tokens = size_line.split()
    if len(size_tokens) != 3:
        raise ParseError("size line must be 'rows cols nnz'", path, lineno)
    try:
        rows, cols, nnz = (int(t) for t in size_tokens)
    except ValueError:
        raise ParseError("non-integer token in size line", path, lineno) from None
    if rows != cols:
        raise ParseError(f"pattern must be square, got {rows}x{cols}", path, lineno)
    if rows < 0 or nnz < 0:
        raise ParseError("negative dimension", path, lineno)

    entries = body[1:]
    if len(entries) != nnz:
        where = entries[nnz][0] if len(entries) > nnz else lines[-1][0]
        raise ParseError(f"declared {nnz} entries, found {len(entries)}", path, where)

    pairs = []
    for lineno, ln in entries:
        toks = ln.split()
        if len(toks) != want_tokens:
            raise ParseError(f"expected {want_tokens} tokens for field "
                             f"'{field}', got {len(toks)}", path, lineno)
        try:
            i, j = int(toks[0]), int(toks[1])
            for value in toks[2:]:
                float(value)  # validated, then discarded
        except ValueError:
            raise ParseError("non-numeric token in entry", path, lineno) from None
        if not 1 <= i <= rows or not 1 <= j <= cols:
            raise ParseError(f"entry ({i}, {j}) outside declared {rows}x{cols}",
                             path, lineno)
        if i != j:
            pairs.append((i - 1, j - 1))

    if symmetry == "general":
        directed = set(pairs)
        missing = [(u, v) for u, v in directed if (v, u) not in directed]
        if missing:
            if not symmetrize:
                u, v = missing[0]
                raise ParseError(
                    f"general matrix is structurally asymmetric, e.g. entry "
                    f"({u + 1}, {v + 1}) has no transpose; pass symmetrize=True "
                    "to take the union", path)
            warnings.warn(f"{path}: symmetrizing structurally asymmetric pattern "
                          f"({len(missing)} one-sided entries)")
    return from_edge_list(rows, pairs)


def read_edge_list(path):
    """Read a plain edge list: lines ``u v`` with 0-based ids, ``#`` comments.

    The first non-comment line is taken as an ``n m`` header when that
    reading is consistent (exactly m edge lines follow and every endpoint
    is below n); otherwise it is an edge and n is inferred as the largest
    endpoint plus one.
    """
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            toks = text.split()
            if len(toks) != 2:
                raise ParseError(f"expected two integers, got {len(toks)} tokens",
                                 path, lineno)
            try:
                a, b = int(toks[0]), int(toks[1])
            except ValueError:
                raise ParseError("non-integer token", path, lineno) from None
            if a < 0 or b < 0:
                raise ParseError("negative vertex id", path, lineno)
            rows.append((lineno, a, b))

    if not rows:
        return from_edge_list(0, [])
    _, n_decl, m_decl = rows[0]
    rest = rows[1:]
    header = (len(rest) == m_decl
              and all(u < n_decl and v < n_decl for _, u, v in rest))
    if header:
        return from_edge_list(n_decl, [(u, v) for _, u, v in rest])
    pairs = [(u, v) for _, u, v in rows]
    n = max(max(u, v) for u, v in pairs) + 1
    return from_edge_list(n, pairs)


def write_edge_list(g, path):
    """Write ``n m`` then one sorted ``u v`` line per edge; read() restores g."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{g.n} {g.m}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_permutation(path):
    """Read one 0-based id per line and validate it is a permutation."""
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            text = raw.strip()
            if not text:
                continue
            try:
                values.append(int(text))
            except ValueError:
                raise ParseError("non-integer token", path, lineno) from None
    if sorted(values) != list(range(len(values))):
        raise InputError(f"{path}: not a permutation of [0, {len(values)})")
    return values


def write_permutation(ordering, path):
    """Write a permutation as one 0-based id per line."""
    order = [int(v) for v in ordering]
    if sorted(order) != list(range(len(order))):
        raise InputError("refusing to write: not a permutation")
    with open(path, "w", encoding="utf-8") as fh:
        for v in order:
            fh.write(f"{v}\n")


_STATS_FIELDS = ("n", "m", "m_plus", "insertion_attempts", "max_degree",
                 "backend", "tie_break", "wall_ms", "degree_histogram")


@dataclass(frozen=True)
class RunStats:
    """Counters and tags describing one ordering run, ready to serialize."""

    n: int
    m: int
    m_plus: int
    insertion_attempts: int
    max_degree: int
    backend: str
    tie_break: str
    wall_ms: float
    degree_histogram: dict

    @classmethod
    def from_run(cls, g, result, tie_break, wall_ms):
        hist = {}
        for d in result.eliminated_degrees:
            hist[d] = hist.get(d, 0) + 1
        return cls(
            n=g.n,
            m=g.m,
            m_plus=result.m_plus,
            insertion_attempts=result.insertion_attempts,
            max_degree=g.max_degree(),
            backend=result.backend_used,
            tie_break=tie_break,
            wall_ms=float(wall_ms),
            degree_histogram=dict(sorted(hist.items())),
        )


def _histogram_cell(hist):
    return ",".join(f"{d}:{c}" for d, c in sorted(hist.items()))


def write_stats(stats, path, fmt="json"):
    """Write RunStats as a JSON object or a single-header TSV row.

    Key / column order is fixed and counters are emitted exactly.
    """
    if fmt not in ("json", "tsv"):
        raise ConfigError(f"unknown stats format {fmt!r}, expected 'json' or 'tsv'")
    if fmt == "json":
        payload = {
            "n": stats.n,
            "m": stats.m,
            "m_plus": stats.m_plus,
            "insertion_attempts": stats.insertion_attempts,
            "max_degree": stats.max_degree,
            "backend": stats.backend,
            "tie_break": stats.tie_break,
            "wall_ms": stats.wall_ms,
            "degree_histogram": {str(d): c for d, c in sorted(stats.degree_histogram.items())},
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        row = [str(stats.n), str(stats.m), str(stats.m_plus),
               str(stats.insertion_attempts), str(stats.max_degree),
               stats.backend, stats.tie_break, repr(stats.wall_ms),
               _histogram_cell(stats.degree_histogram)]
        text = "\t".join(_STATS_FIELDS) + "\n" + "\t".join(row) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
