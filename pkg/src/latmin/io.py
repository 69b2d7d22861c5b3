"""JSON/CSV file formats. Every format is 1-indexed on disk."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any

from latmin.constructions import SetFunctionTable
from latmin.errors import InputFormatError
from latmin.matching import NEG_INF, WeightedBipartiteGraph
from latmin.partition import BipartiteGraphPlain
from latmin.poset import Poset, from_mask, poset_from_relations, to_mask

NEG_INF_TOKEN = "-inf"


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _int(obj: dict, key: str) -> int:
    v = obj.get(key) if isinstance(obj, dict) else None
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InputFormatError(f"field {key!r} must be a nonnegative integer")
    return v


def _int_rows(obj: dict, key: str, width: int) -> list[list[int]]:
    rows = obj.get(key, [])
    if not isinstance(rows, list):
        raise InputFormatError(f"field {key!r} must be a list")
    for r in rows:
        if (
            not isinstance(r, list)
            or len(r) != width
            or any(not isinstance(x, int) or isinstance(x, bool) for x in r)
        ):
            raise InputFormatError(f"{key!r} entries must be lists of {width} integers, got {r!r}")
    return rows


# posets: {"n": n, "relations": [[j, i], ...]} meaning j ≺ i


def poset_to_json(P: Poset) -> dict:
    return {"n": P.n, "relations": [[j + 1, i + 1] for j, i in P.covers]}


def poset_from_json(obj: Any) -> Poset:
    n = _int(obj, "n")
    rel = _int_rows(obj, "relations", 2)
    return poset_from_relations(n, [tuple(r) for r in rel], one_indexed=True)


def read_poset(path: str | Path) -> Poset:
    return poset_from_json(load_json(path))


# weighted bipartite graphs: {"u": .., "v": .., "edges": [[u, v, w], ...]}


def graph_to_json(G: WeightedBipartiteGraph) -> dict:
    return {"u": G.u_size, "v": G.v_size, "edges": [[u + 1, v + 1, w] for u, v, w in sorted(G.edges)]}


def graph_from_json(obj: Any) -> WeightedBipartiteGraph:
    u, v = _int(obj, "u"), _int(obj, "v")
    edges = _int_rows(obj, "edges", 3)
    return WeightedBipartiteGraph.from_edges(u, v, [(a - 1, b - 1, w) for a, b, w in edges])


# plain bipartite graphs for #BIS: {"a": .., "b": .., "edges": [[a, b], ...]}


def bis_graph_to_json(G: BipartiteGraphPlain) -> dict:
    return {"a": G.a_size, "b": G.b_size, "edges": [[a + 1, b + 1] for a, b in sorted(G.edges)]}


def bis_graph_from_json(obj: Any) -> BipartiteGraphPlain:
    a, b = _int(obj, "a"), _int(obj, "b")
    edges = _int_rows(obj, "edges", 2)
    return BipartiteGraphPlain.from_edges(a, b, [(x - 1, y - 1) for x, y in edges])


# set-function tables: rows of (sorted subset, value) in canonical index order


def _encode_value(v: int | float) -> int | str:
    return NEG_INF_TOKEN if v == NEG_INF else v


def _decode_value(v: Any) -> int | float:
    if v == NEG_INF_TOKEN:
        return NEG_INF
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InputFormatError(f"bad table value {v!r}")
    if isinstance(v, float) and v.is_integer():
        return int(v)
    return v


def table_to_json(f: SetFunctionTable) -> dict:
    return {
        "n": f.n,
        "rows": [[sorted(e + 1 for e in from_mask(m)), _encode_value(v)] for m, v in enumerate(f.values)],
    }


def _table_from_rows(n: int, rows: list[tuple[list[int], Any]]) -> SetFunctionTable:
    values: list[int | float | None] = [None] * (1 << n)
    for subset, value in rows:
        if any(not 1 <= e <= n for e in subset):
            raise InputFormatError(f"subset {subset} out of range for n={n}")
        m = to_mask(e - 1 for e in subset)
        if values[m] is not None:
            raise InputFormatError(f"subset {sorted(subset)} listed twice")
        values[m] = _decode_value(value)
    if any(v is None for v in values):
        raise InputFormatError(f"table must list all {1 << n} subsets")
    return SetFunctionTable(n, tuple(values))


def table_from_json(obj: Any) -> SetFunctionTable:
    n = _int(obj, "n")
    rows = obj.get("rows")
    if not isinstance(rows, list):
        raise InputFormatError("field 'rows' must be a list")
    parsed = []
    for r in rows:
        if not (isinstance(r, list) and len(r) == 2 and isinstance(r[0], list)):
            raise InputFormatError(f"table rows must be [subset, value], got {r!r}")
        if any(not isinstance(e, int) or isinstance(e, bool) for e in r[0]):
            raise InputFormatError(f"subset {r[0]!r} must list integers")
        parsed.append((r[0], r[1]))
    return _table_from_rows(n, parsed)


def table_to_csv(f: SetFunctionTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["subset", "value"])
    for m, v in enumerate(f.values):
        w.writerow([" ".join(str(e + 1) for e in sorted(from_mask(m))), _encode_value(v)])
    return buf.getvalue()


def table_from_csv(text: str) -> SetFunctionTable:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != ["subset", "value"]:
        raise InputFormatError("CSV table must start with the header 'subset,value'")
    rows = []
    try:
        for rec in reader:
            if not rec:
                continue
            subset, raw = rec
            elems = [int(t) for t in subset.split()]
            value = raw if raw == NEG_INF_TOKEN else (int(raw) if raw.lstrip("-").isdigit() else float(raw))
            rows.append((elems, value))
    except ValueError as exc:
        raise InputFormatError(f"bad CSV row: {exc}") from None
    k = len(rows).bit_length() - 1
    if len(rows) != 1 << k:
        raise InputFormatError(f"CSV table has {len(rows)} rows, not a power of two")
    return _table_from_rows(k, rows)


def write_table(f: SetFunctionTable, path: str | Path) -> None:
    text = table_to_csv(f) if str(path).endswith(".csv") else dumps(table_to_json(f))
    Path(path).write_text(text)


def read_table(path: str | Path) -> SetFunctionTable:
    if str(path).endswith(".csv"):
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise InputFormatError(f"cannot read {path}: {exc.strerror}") from None
        return table_from_csv(text)
    return table_from_json(load_json(path))
