"""Deterministic text, JSON, CSV and LaTeX renderings."""

from __future__ import annotations

import csv
import io
import json
import re
from typing import Iterable, Sequence

from .polyring import Polynomial, is_nonneg_in_alpha, to_alpha_basis
from .structconst import StructureTable, nonzero_band

TABLE_FIELDS = ("i", "j", "k", "degree", "polynomial", "alpha", "nonneg")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def alpha_text(p: Polynomial) -> str | None:
    alpha = to_alpha_basis(p)
    return None if alpha is None else alpha.to_text("a")


def table_rows(table: StructureTable, pairs: Iterable[tuple[int, int]] | None = None, ks: Sequence[int] | None = None) -> list[dict]:
    """One record per entry in the nonzero band, ordered by (i, j, k)."""
    rows = []
    for i, j in pairs if pairs is not None else table.pairs():
        i, j = min(i, j), max(i, j)
        for k in nonzero_band(i, j, table.n):
            if ks is not None and k not in ks:
                continue
            c = table[i, j, k]
            alpha = to_alpha_basis(c)
            rows.append(
                {
                    "i": i,
                    "j": j,
                    "k": k,
                    "degree": c.degree(),
                    "polynomial": c.to_text(),
                    "alpha": None if alpha is None else alpha.to_text("a"),
                    "nonneg": None if alpha is None else is_nonneg_in_alpha(alpha),
                }
            )
    return rows


def rows_to_csv(rows: Sequence[dict], fields: Sequence[str] = TABLE_FIELDS) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({f: ("" if row.get(f) is None else row[f]) for f in fields})
    return buf.getvalue()


def latex_poly(text: str) -> str:
    out = text.replace("*", " ")
    for var in ("t", "a"):
        # t12^3 -> t_{12}^{3}
        name = r"\alpha" if var == "a" else "t"
        out = re.sub(rf"\b{var}(\d+)(\^(\d+))?", lambda m: f"{name}_{{{m.group(1)}}}" + (f"^{{{m.group(3)}}}" if m.group(3) else ""), out)
    return out


def rows_to_latex(rows: Sequence[dict]) -> str:
    lines = [
        r"\begin{tabular}{rrr|l|l}",
        r"$i$ & $j$ & $k$ & $c_{ij}^k$ & $\alpha$-form \\ \hline",
    ]
    for row in rows:
        alpha = latex_poly(row["alpha"]) if row["alpha"] is not None else "--"
        lines.append(f"{row['i']} & {row['j']} & {row['k']} & ${latex_poly(row['polynomial'])}$ & ${alpha}$ \\\\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def rows_to_text(rows: Sequence[dict]) -> str:
    lines = []
    for row in rows:
        alpha = row["alpha"] if row["alpha"] is not None else "-"
        lines.append(f"c_{row['i']}{row['j']}^{row['k']} = {row['polynomial']}    [alpha: {alpha}]")
    return "\n".join(lines) + "\n"


def class_to_text(parts: Sequence[Polynomial]) -> str:
    return "".join(f"x{k}: {p.to_text()}\n" for k, p in enumerate(parts))
