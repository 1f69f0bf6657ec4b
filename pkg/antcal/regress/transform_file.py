from pathlib import Path
import numpy as np
from ..errors import MalformedLineError, SingularBlockError
from ..geometry import Transform, decompose


def parse_transform(text: str) -> Transform:
    """
    Parse a transform file: three rows of three numbers, "#" comments.

    Raises:
        MalformedLineError: A row does not hold three numbers, or the file does
            not hold exactly three rows.
        SingularBlockError: The matrix is not a valid transform.
    """
    rows = []
    last = 0
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        last = number
        fields = stripped.split()
        if len(fields) != 3:
            raise MalformedLineError(number, f"expected 3 numbers, got {len(fields)}")
        try:
            rows.append([float(f) for f in fields])
        except ValueError as err:
            raise MalformedLineError(number, str(err)) from err
        if len(rows) > 3:
            raise MalformedLineError(number, "transform has more than 3 rows")
    if len(rows) != 3:
        raise MalformedLineError(last, f"transform needs 3 rows, got {len(rows)}")
    return Transform(np.array(rows))


def serialize_transform(t: Transform, header: str | None = None) -> str:
    """
    Three rows of fifteen-decimal numbers followed by the decomposition as
    comments, when the linear block has one.
    """
    lines = [f"# {line}" for line in header.splitlines()] if header else []
    lines += [" ".join(f"{x:.15f}" for x in row) for row in t.t]
    try:
        lines += [f"# {line}" for line in decompose(t).describe().splitlines()]
    except SingularBlockError:
        pass
    return "\n".join(lines) + "\n"


def read_transform(path: str | Path) -> Transform:
    return parse_transform(Path(path).read_text())


def write_transform(t: Transform, path: str | Path, header: str | None = None) -> None:
    Path(path).write_text(serialize_transform(t, header))
