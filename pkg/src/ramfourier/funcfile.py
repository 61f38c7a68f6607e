"""Reading and writing function files.

Text form, one value per line:

    <modulus> <periodic|even>      header
    <value>                        periodic: r lines, residues 1..r
    <divisor> <value>              even: one line per divisor of r

Blank lines and '#' comments are ignored on input. Scalars are integers
("-3"), reduced fractions ("3/4"), decimal floats ("1.25", "2e-3"), or
complex values ("1.5+2j", trailing j, no spaces). A ".json" path is
accepted on input with the same fields:

    {"modulus": 4, "representation": "periodic", "values": [...]}

where even values are {"divisor": d, "value": v} objects and each value
is a number or a scalar string.

Writers emit canonical scalars: fractions reduced with positive
denominator, integers without "/1", floats with 12 significant digits,
complex as "<re>+<im>j". Output parses back to equal data, so files can
be piped through repeated invocations.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .arith import divisors
from .errors import FormatError
from .even import EvenFunction, EvenSpectrum
from .periodic import PeriodicSpectrum, ResidueFunction, Scalar

__all__ = [
    "format_scalar",
    "parse_scalar",
    "parse_function_text",
    "parse_function_json",
    "load_function",
    "format_function",
]

_INT_RE = re.compile(r"[+-]?\d+")


def format_scalar(v: Scalar) -> str:
    """Canonical text for one scalar value."""
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, complex):
        return f"{v.real:.12g}{v.imag:+.12g}j"
    raise TypeError(f"unsupported scalar type {type(v).__name__}")


def parse_scalar(token: str) -> Scalar:
    """Parse one scalar token: int, fraction, float, or complex."""
    token = token.strip()
    if not token:
        raise FormatError("empty value")
    if _INT_RE.fullmatch(token):
        return int(token)
    if "/" in token:
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad fraction {token!r}: {exc}") from None
    if "j" in token or "J" in token:
        try:
            return complex(token)
        except ValueError:
            raise FormatError(f"bad complex value {token!r}") from None
    try:
        return float(token)
    except ValueError:
        raise FormatError(f"bad value {token!r}") from None


def _parse_header(fields: list[str], lineno: int) -> tuple[int, str]:
    if len(fields) != 2:
        raise FormatError("header must be '<modulus> <periodic|even>'", line=lineno)
    try:
        modulus = int(fields[0])
    except ValueError:
        raise FormatError(f"bad modulus {fields[0]!r}", line=lineno) from None
    if modulus < 1:
        raise FormatError(f"modulus must be >= 1, got {modulus}", line=lineno)
    representation = fields[1].lower()
    if representation not in ("periodic", "even"):
        raise FormatError(
            f"representation must be 'periodic' or 'even', got {fields[1]!r}",
            line=lineno,
        )
    return modulus, representation


def parse_function_text(text: str) -> ResidueFunction | EvenFunction:
    """Parse the text form into a ResidueFunction or an EvenFunction."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            entries.append((lineno, line))
    if not entries:
        raise FormatError("missing header line")
    head_no, head = entries[0]
    modulus, representation = _parse_header(head.split(), head_no)
    body = entries[1:]

    if representation == "periodic":
        if len(body) != modulus:
            raise FormatError(
                f"expected {modulus} value lines, found {len(body)}", line=head_no
            )
        values = []
        for lineno, line in body:
            if len(line.split()) != 1:
                raise FormatError("periodic lines hold a single value", line=lineno)
            try:
                values.append(parse_scalar(line))
            except FormatError as exc:
                raise FormatError(str(exc), line=lineno) from None
        return ResidueFunction(modulus, tuple(values))

    values = {}
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("even lines are '<divisor> <value>'", line=lineno)
        try:
            d = int(parts[0])
        except ValueError:
            raise FormatError(f"bad divisor {parts[0]!r}", line=lineno) from None
        if d < 1 or modulus % d:
            raise FormatError(f"{d} does not divide {modulus}", line=lineno)
        if d in values:
            raise FormatError(f"duplicate divisor {d}", line=lineno)
        try:
            values[d] = parse_scalar(parts[1])
        except FormatError as exc:
            raise FormatError(str(exc), line=lineno) from None
    missing = [d for d in divisors(modulus) if d not in values]
    if missing:
        raise FormatError(f"missing divisors {missing}")
    return EvenFunction(modulus, values)


def _json_scalar(v, where: str) -> Scalar:
    if isinstance(v, bool):
        raise FormatError(f"field {where}: booleans are not scalars")
    if isinstance(v, (int, float)):
        return v
    if isinstance(v, str):
        try:
            return parse_scalar(v)
        except FormatError as exc:
            raise FormatError(f"field {where}: {exc}") from None
    raise FormatError(f"field {where}: expected a number or scalar string")


def parse_function_json(text: str) -> ResidueFunction | EvenFunction:
    """Parse the JSON mirror of the text form."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise FormatError("top level must be an object")
    for field in ("modulus", "representation", "values"):
        if field not in payload:
            raise FormatError(f"missing field {field!r}")
    modulus = payload["modulus"]
    if isinstance(modulus, bool) or not isinstance(modulus, int) or modulus < 1:
        raise FormatError("field 'modulus' must be a positive integer")
    representation = payload["representation"]
    if representation not in ("periodic", "even"):
        raise FormatError("field 'representation' must be 'periodic' or 'even'")
    raw_values = payload["values"]
    if not isinstance(raw_values, list):
        raise FormatError("field 'values' must be an array")

    if representation == "periodic":
        values = [
            _json_scalar(v, f"values[{i}]") for i, v in enumerate(raw_values)
        ]
        if len(values) != modulus:
            raise FormatError(f"expected {modulus} values, found {len(values)}")
        return ResidueFunction(modulus, tuple(values))

    values = {}
    for i, item in enumerate(raw_values):
        where = f"values[{i}]"
        if not isinstance(item, dict) or set(item) != {"divisor", "value"}:
            raise FormatError(f"field {where}: expected {{'divisor', 'value'}}")
        d = item["divisor"]
        if isinstance(d, bool) or not isinstance(d, int):
            raise FormatError(f"field {where}.divisor: expected an integer")
        if d < 1 or modulus % d:
            raise FormatError(f"field {where}.divisor: {d} does not divide {modulus}")
        if d in values:
            raise FormatError(f"field {where}.divisor: duplicate divisor {d}")
        values[d] = _json_scalar(item["value"], f"{where}.value")
    missing = [d for d in divisors(modulus) if d not in values]
    if missing:
        raise FormatError(f"missing divisors {missing}")
    return EvenFunction(modulus, values)


def load_function(path: str | Path) -> ResidueFunction | EvenFunction:
    """Read a function file; '.json' selects the JSON parser."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return parse_function_json(text)
    return parse_function_text(text)


def _payload(obj) -> tuple[int, str, list]:
    if isinstance(obj, ResidueFunction):
        return obj.r, "periodic", list(obj.values)
    if isinstance(obj, PeriodicSpectrum):
        return obj.r, "periodic", list(obj.coeffs)
    if isinstance(obj, EvenFunction):
        return obj.r, "even", [(d, obj.values[d]) for d in divisors(obj.r)]
    if isinstance(obj, EvenSpectrum):
        return obj.r, "even", [(d, obj.coeffs[d]) for d in divisors(obj.r)]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def format_function(obj, fmt: str = "text") -> str:
    """Serialize a function or spectrum in the file format.

    Spectra print under the representation of their index set: a
    PeriodicSpectrum as a periodic file (k = 1..r), an EvenSpectrum as
    an even file (one line per divisor).
    """
    r, representation, entries = _payload(obj)
    if fmt == "text":
        lines = [f"{r} {representation}"]
        if representation == "periodic":
            lines += [format_scalar(v) for v in entries]
        else:
            lines += [f"{d} {format_scalar(v)}" for d, v in entries]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        if representation == "periodic":
            values = [_json_value(v) for v in entries]
        else:
            values = [{"divisor": d, "value": _json_value(v)} for d, v in entries]
        payload = {"modulus": r, "representation": representation, "values": values}
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _json_value(v: Scalar):
    # ints and floats are native JSON; fractions and complex go as strings.
    if isinstance(v, (Fraction, complex)):
        return format_scalar(v)
    return v
