"""Plain-text exchange format for generating sets.

UTF-8 text.  Lines starting with ``#`` (after optional whitespace) and
blank lines are ignored.  The first payload line must be ``period <int>``;
every following payload line is one ``<beta><TAB><tau>`` pair.  Parse and
validation diagnostics carry 1-based line numbers.
"""

from __future__ import annotations

from .errors import GammaFileError, ValidationError
from .lattice import GeneratingSet, validate_generating_set


def parse_gamma(text: str, source: str = "<string>") -> GeneratingSet:
    """Parse and validate the text of a generating set file."""
    period = None
    pairs = []
    first_line = {}
    second_line = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if period is None:
            fields = line.split()
            if len(fields) != 2 or fields[0] != "period":
                raise GammaFileError(
                    f"{source}: line {lineno}: expected 'period <int>' header, "
                    f"got {line!r}")
            try:
                period = int(fields[1])
            except ValueError:
                raise GammaFileError(
                    f"{source}: line {lineno}: period {fields[1]!r} is not an "
                    "integer") from None
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            fields = line.split()
        if len(fields) != 2:
            raise GammaFileError(
                f"{source}: line {lineno}: expected '<beta><TAB><tau>', got "
                f"{line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GammaFileError(
                f"{source}: line {lineno}: non-integer coordinate in {line!r}"
            ) from None
        if a in first_line:
            raise GammaFileError(
                f"{source}: DuplicateFirstCoordinate at line {lineno}: {a} "
                f"first seen at line {first_line[a]}")
        if b in second_line:
            raise GammaFileError(
                f"{source}: DuplicateSecondCoordinate at line {lineno}: {b} "
                f"first seen at line {second_line[b]}")
        first_line[a] = lineno
        second_line[b] = lineno
        pairs.append((a, b))

    if period is None:
        raise GammaFileError(f"{source}: missing 'period <int>' header")
    try:
        return validate_generating_set(pairs, period)
    except ValidationError as exc:
        beta = getattr(exc, "beta", None)
        where = f" (point at line {first_line[beta]})" if beta in first_line else ""
        raise GammaFileError(
            f"{source}: {type(exc).__name__}: {exc}{where}") from exc


def load_gamma(path) -> GeneratingSet:
    """Read and validate a generating set file from disk."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_gamma(handle.read(), source=str(path))


def dump_gamma(gamma: GeneratingSet) -> str:
    """Serialize a generating set in the exchange format (sorted points)."""
    lines = [f"period {gamma.period}"]
    lines.extend(f"{a}\t{b}" for a, b in gamma.points)
    return "\n".join(lines) + "\n"
