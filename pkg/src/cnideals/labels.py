"""Vertex/variable labels and their canonical order.

Labels are plain strings: either a bare index like "7" or a copy.position
pair like "2.11".  All deterministic orderings in the package ("ascending
label order") use :func:`label_key`, which sorts numeric components by
value, so "2" < "10" and "1.12" < "2.1".
"""

from __future__ import annotations

_FORBIDDEN = set(" \t\r\n#^")


def validate_label(label: str) -> str:
    """Return the label unchanged, raising ValueError if it is unusable."""
    if not isinstance(label, str) or not label:
        raise ValueError("label must be a nonempty string")
    bad = _FORBIDDEN.intersection(label)
    if bad:
        raise ValueError(f"label {label!r} contains forbidden character {sorted(bad)[0]!r}")
    return label


def label_key(label: str) -> tuple:
    """Sort key giving natural order on dot-separated numeric components."""
    parts = []
    for piece in label.split("."):
        if piece.isdigit():
            parts.append((0, int(piece), ""))
        else:
            parts.append((1, 0, piece))
    return tuple(parts)


def sort_labels(labels) -> tuple[str, ...]:
    """Labels sorted into ascending label order, as a tuple."""
    return tuple(sorted(labels, key=label_key))
