from app.circuit.ops import concat, control_gate, depth, inverse, invert_gates, tally, with_controls
from app.circuit.textio import format_gate, parse, read_header, serialize

__all__ = [
    "concat",
    "control_gate",
    "depth",
    "format_gate",
    "inverse",
    "invert_gates",
    "parse",
    "read_header",
    "serialize",
    "tally",
    "with_controls",
]
