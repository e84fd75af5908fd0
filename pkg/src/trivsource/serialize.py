"""JSON payloads, text/CSV rendering and the on-disk result cache.

Every exact value is written as a string. A payload entry is
``{"text": "1/2 - z", "coords": ["1/2", "-1"]}`` where ``coords`` are the
rational coordinates in the power basis ``1, z, z^2, ...`` of ``Q(z)``,
``z = exp(2 pi i / m)``. See ``docs/schema.md`` for the full layout.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from . import __version__
from .exactfield import Cyclo, CycloMatrix
from .modrep import BrauerTable
from .monomial import lin_matrix
from .permgroup import Group, Subgroup
from .tsring import Session, all_idempotents, matrix_N, matrix_Ninv
from .verify import PropertyResult

SCHEMA_VERSION = 1


def entry(c: Cyclo) -> dict:
    return {"text": str(c), "coords": [str(a) for a in c.coords]}


def from_entry(m: int, data: dict) -> Cyclo:
    return Cyclo(m, [Fraction(a) for a in data["coords"]])


def matrix_payload(M: CycloMatrix) -> list[list[dict]]:
    return [[entry(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]


def matrix_from_payload(m: int, rows: list[list[dict]], ncols: int | None = None) -> CycloMatrix:
    if not rows:
        return CycloMatrix.zeros(m, 0, ncols or 0)
    return CycloMatrix(m, [[from_entry(m, e) for e in row] for row in rows])


def group_payload(G: Group) -> dict:
    return {"name": G.name, "order": G.order, "degree": G.degree,
            "generators": [str(g) for g in G.generators]}


def _header(S: Session, kind: str) -> dict:
    return {"schema": f"trivsource/{kind}/{SCHEMA_VERSION}", "group": group_payload(S.G),
            "p": S.p, "m": S.m, "seed": S.seed}


def brauer_payload(S: Session, P: Subgroup) -> dict:
    loc = S.local(P)
    t: BrauerTable = loc.table
    H = t.group
    out = _header(S, "brauer-table")
    out.update({
        "subgroup": P.label(),
        "quotient_order": H.order,
        "classes": [{"representative": S.G.word(loc.qg.section[c.representative]), "size": c.size,
                     "element_order": H.elem_order(c.representative)} for c in t.classes],
        "irreducibles": [{"dim": chi.dim, "values": [entry(v) for v in chi.values]}
                         for chi in t.irreducibles],
        "projectives": matrix_payload(t.projectives),
    })
    return out


def species_payload(S: Session) -> dict:
    out = _header(S, "species-table")
    out.update({
        "rows": [e.label() for e in S.E],
        "cols": [b.label() for b in S.C],
        "matrix": matrix_payload(matrix_N(S).N),
        "inverse": matrix_payload(matrix_Ninv(S)),
    })
    return out


def idempotent_payload(S: Session) -> dict:
    out = _header(S, "idempotents")
    out.update({
        "basis": [b.label() for b in S.C],
        "idempotents": [{"species": exp.target.label(), "coeffs": [entry(c) for c in exp.vector(S.C)]}
                        for exp in all_idempotents(S)],
    })
    return out


def linmap_payload(S: Session) -> dict:
    pairs, rows = lin_matrix(S)
    out = _header(S, "linmap")
    out.update({
        "rows": [pr.label() for pr in pairs],
        "cols": [b.label() for b in S.C],
        "matrix": [[entry(c) for c in r.vector(S.C)] for r in rows],
    })
    return out


def verify_payload(S: Session, results: list[PropertyResult]) -> dict:
    out = _header(S, "verify")
    out.update({
        "passed": all(r.passed for r in results),
        "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    })
    return out


# -- rendering -------------------------------------------------------------

def _grid(rows: list[str], cols: list[str], cells: list[list[str]]) -> str:
    table = [[""] + cols] + [[r] + c for r, c in zip(rows, cells)]
    widths = [max(len(row[k]) for row in table) for k in range(len(table[0]))]
    return "\n".join("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in table)


def _csv(rows: list[str], cols: list[str], cells: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + cols)
    for r, c in zip(rows, cells):
        w.writerow([r] + c)
    return buf.getvalue()


def _texts(rows: list[list[dict]]) -> list[list[str]]:
    return [[e["text"] for e in row] for row in rows]


def tables_of(payload: dict) -> list[tuple[str, list[str], list[str], list[list[str]]]]:
    """Labeled tables ``(title, row labels, column labels, cells)`` of a payload."""
    kind = payload["schema"].split("/")[1]
    if kind == "brauer-table":
        cls = [f"[{c['representative']}]" for c in payload["classes"]]
        irr = [f"phi{j} (dim {chi['dim']})" for j, chi in enumerate(payload["irreducibles"])]
        return [
            ("irreducible Brauer characters", irr, cls,
             [[v["text"] for v in chi["values"]] for chi in payload["irreducibles"]]),
            ("projective indecomposable characters", cls, irr, _texts(payload["projectives"])),
        ]
    if kind == "species-table":
        return [("species table", payload["rows"], payload["cols"], _texts(payload["matrix"])),
                ("inverse species table", payload["cols"], payload["rows"], _texts(payload["inverse"]))]
    if kind == "idempotents":
        rows = [e["species"] for e in payload["idempotents"]]
        return [("primitive idempotents", rows, payload["basis"],
                 [[c["text"] for c in e["coeffs"]] for e in payload["idempotents"]])]
    if kind == "linmap":
        return [("linearization map", payload["rows"], payload["cols"], _texts(payload["matrix"]))]
    if kind == "verify":
        return [("properties", [r["name"] for r in payload["results"]], ["status", "detail"],
                 [["PASS" if r["passed"] else "FAIL", r["detail"]] for r in payload["results"]])]
    raise ValueError(f"unknown payload kind {kind!r}")


def _expansion_lines(payload: dict) -> list[str]:
    lines = []
    for e in payload["idempotents"]:
        terms = []
        for c, label in zip(e["coeffs"], payload["basis"]):
            if c["text"] != "0":
                terms.append(f"({c['text']})*{label}")
        lines.append(f"e{e['species']} = " + (" + ".join(terms) or "0"))
    return lines


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    tables = tables_of(payload)
    if fmt == "csv":
        return "\n".join(_csv(r, c, cells) for _, r, c, cells in tables)
    g = payload["group"]
    head = f"G = {g['name']} (order {g['order']}), p = {payload['p']}, z = exp(2 pi i/{payload['m']})"
    if "subgroup" in payload:
        head += f"\nN_G(P)/P for P = {payload['subgroup']} (order {payload['quotient_order']})"
    parts = [head]
    if payload["schema"].startswith("trivsource/idempotents/"):
        parts.append("\n".join(_expansion_lines(payload)))
    elif payload["schema"].startswith("trivsource/verify/"):
        lines = [("PASS  " if r["passed"] else "FAIL  ") + r["name"] + (f"  ({r['detail']})" if r["detail"] else "")
                 for r in payload["results"]]
        parts.append("\n".join(lines))
    else:
        for title, r, c, cells in tables:
            parts.append(f"{title}:\n" + _grid(r, c, cells))
    return "\n\n".join(parts) + "\n"


# -- cache -----------------------------------------------------------------

def cache_key(G: Group, p: int, seed: int, kind: str, extra: str = "") -> str:
    blob = json.dumps({"elements": [list(x) for x in G.elements], "p": p, "seed": seed,
                       "version": __version__, "kind": kind, "extra": extra})
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """Payloads on disk, one JSON file per key; writes go through a temp file and a rename."""

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def load(self, key: str) -> dict | None:
        try:
            with open(self.path(key)) as fh:
                return json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            return None

    def store(self, key: str, payload: dict) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh)
            os.replace(tmp, self.path(key))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
