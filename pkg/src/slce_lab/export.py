"""JSON / CSV / TSV serialisation of toolkit artifacts, the CSV importer
and schema lookup."""
from __future__ import annotations

import csv
import io
import json
from importlib import resources
from typing import Iterable, Sequence

from .seq import PeriodicSequence, Provenance

SCHEMAS = ("field", "sequence", "family", "spectrum", "multiplier_report",
           "verdict", "verify_report", "cycint", "error")


def load_schema(name: str) -> dict:
    if name not in SCHEMAS:
        raise KeyError(f"no schema named {name!r}")
    text = resources.files("slce_lab").joinpath("schemas", f"{name}.json").read_text()
    return json.loads(text)


def sequence_to_dict(s: PeriodicSequence) -> dict:
    f = s.field
    return {
        "p": f.p if f is not None else None,
        "d": f.d if f is not None else None,
        "M": s.alphabet,
        "alpha": f.alpha_coeffs if f is not None else None,
        "terms": [int(x) for x in s.terms],
        "provenance": s.provenance.to_dict(),
    }


def sequence_from_dict(d: dict) -> PeriodicSequence:
    prov = Provenance.from_dict(d["provenance"]) if d.get("provenance") else Provenance("literal")
    return PeriodicSequence(d["terms"], int(d["M"]), prov)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# CSV ----------------------------------------------------------------------

SEQUENCE_FIELDS = ("p", "d", "M", "alpha", "period", "terms", "provenance")


def sequences_to_csv(seqs: Iterable[PeriodicSequence]) -> str:
    """One row per sequence; terms comma-joined inside a quoted cell."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SEQUENCE_FIELDS)
    for s in seqs:
        d = sequence_to_dict(s)
        w.writerow([
            "" if d["p"] is None else d["p"],
            "" if d["d"] is None else d["d"],
            d["M"],
            "" if d["alpha"] is None else " ".join(map(str, d["alpha"])),
            s.period,
            ",".join(map(str, d["terms"])),
            json.dumps(d["provenance"], separators=(",", ":")),
        ])
    return buf.getvalue()


def sequences_from_csv(text: str) -> list[PeriodicSequence]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        terms = [int(x) for x in row["terms"].split(",")] if row["terms"] else []
        if len(terms) != int(row["period"]):
            raise ValueError("period column disagrees with the number of terms")
        prov = Provenance.from_dict(json.loads(row["provenance"]))
        out.append(PeriodicSequence(terms, int(row["M"]), prov))
    return out


def table_to_csv(header: Sequence[str], rows: Iterable[Sequence], delimiter: str = ",") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def table_to_tsv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """gnuplot-friendly: '#'-prefixed header line, tab separated columns."""
    lines = ["# " + "\t".join(header)]
    lines += ["\t".join(str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def spectrum_rows(spec_dict: dict) -> tuple[list[str], list[list]]:
    vals = spec_dict["values"]
    if vals and isinstance(vals[0], dict):
        return ["tau", "re", "im"], [[i, v["re"], v["im"]] for i, v in enumerate(vals)]
    return ["tau", "value"], [[i, v] for i, v in enumerate(vals)]
