"""Streaming output formats for representative matrices.

lines  - m rows of '0'/'1' characters per matrix, blank-line separated.
pbm    - concatenated plain PBM images (magic P1, header "n m").
jsonl  - one JSON record per matrix with the shape, row codes and rows.
"""

import json

FORMATS = ("lines", "pbm", "jsonl")


def row_strings(code):
    n = code.shape.n
    return [format(p, f"0{n}b") for p in code.rows]


def lines_record(code):
    return "\n".join(row_strings(code)) + "\n"


def pbm_record(code):
    shape = code.shape
    header = f"P1\n{shape.n} {shape.m}\n"
    body = "".join(" ".join(row) + "\n" for row in row_strings(code))
    return header + body


def jsonl_record(code):
    record = {
        "m": code.shape.m,
        "n": code.shape.n,
        "tuple": list(code.rows),
        "rows": row_strings(code),
    }
    return json.dumps(record, separators=(",", ":")) + "\n"


def write_stream(codes, fmt, out):
    """Write records one at a time; returns the number emitted."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    record = {"lines": lines_record, "pbm": pbm_record,
              "jsonl": jsonl_record}[fmt]
    count = 0
    for code in codes:
        if fmt == "lines" and count:
            out.write("\n")
        out.write(record(code))
        count += 1
    return count
