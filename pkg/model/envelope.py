""" the output envelope shared by every command, with JSON and CSV renderings """
import io
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import pandas as pd

from __init__ import app


def exact_str(value):
    """Exact rational as "numerator/denominator" in lowest terms, denominator always written."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_exact(text):
    return Fraction(text)


def round_sig(value, digits):
    """Float rounded to `digits` significant digits."""
    return float(f"{float(value):.{digits}g}")


def format_sig(value, digits):
    """Text with `digits` significant digits, trailing zeros kept (1.980, 0.6000)."""
    return f"{float(value):#.{digits}g}".rstrip('.')


@dataclass
class OutputEnvelope:
    command: str
    parameters: dict
    results: dict = field(default_factory=dict)
    exact_values: list = field(default_factory=list)
    float_values: list = field(default_factory=list)
    format_version: int = field(default_factory=lambda: app.config['FORMAT_VERSION'])

    # plain dict of every field, nested rows included, ready for JSON
    def read(self):
        return asdict(self)

    def to_json(self):
        return app.json.dumps(self.read(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        return cls(**app.json.loads(text))

    def to_frame(self, digits):
        """Exact rows joined with float rows; float columns that clash get a _float suffix."""
        exact = pd.DataFrame(self.exact_values)
        floats = _format_floats(pd.DataFrame(self.float_values), digits)
        if floats.empty:
            return exact
        if exact.empty:
            return floats
        shared = [c for c in floats.columns if c in exact.columns]
        keys = [c for c in shared if exact[c].equals(floats[c])]
        renamed = floats.rename(columns={c: f"{c}_float" for c in shared if c not in keys})
        return pd.concat([exact, renamed.drop(columns=keys)], axis=1)

    def to_csv(self, digits):
        """
        Scalar results as "# key=value" lines, then the main table.

        Every list or dict result follows as its own section: a blank line, a
        "# section=key" line and a table with its own header row. None renders empty.
        """
        buffer = io.StringIO()
        sections = []
        for key, value in sorted(self.results.items()):
            if isinstance(value, (list, dict)):
                sections.append((key, value))
            else:
                buffer.write(f"# {key}={_scalar_text(value, digits)}\n")
        self.to_frame(digits).to_csv(buffer, index=False, lineterminator="\n")
        for key, value in sections:
            buffer.write(f"\n# section={key}\n")
            _section_frame(key, value, digits).to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()


def _format_floats(frame, digits):
    if frame.empty:
        return frame
    return frame.apply(lambda column: column.map(lambda v: format_sig(v, digits))
                       if column.dtype.kind == 'f' else column)


def _scalar_text(value, digits):
    if value is None:
        return ""
    if isinstance(value, float):
        return format_sig(value, digits)
    return str(value)


def _section_frame(key, value, digits):
    # rows of dicts keep their columns, a list of scalars becomes one column named after the key
    if isinstance(value, dict):
        frame = pd.DataFrame([value])
    elif value and all(isinstance(row, dict) for row in value):
        frame = pd.DataFrame(value)
    else:
        frame = pd.DataFrame({key: value})
    return _format_floats(frame, digits)
