"""Group-spec strings: 'znstar:N', 'classgroup:D' and 'cyclic:m1,m2,...'."""

from ..errors import ContractViolationError, GroupSpecError
from .class_group import ClassGroup
from .cyclic_product import CyclicProductGroup
from .protocol import AbelianGroup
from .zn_star import ZnStarGroup


def _parse_int(text: str, spec: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise GroupSpecError(f"malformed group spec {spec!r}: {text!r} is not an integer")


def parse_group_spec(spec: str) -> AbelianGroup:
    kind, sep, argument = spec.strip().partition(":")
    if not sep:
        raise GroupSpecError(
            f"malformed group spec {spec!r}: expected 'znstar:N', 'classgroup:D' or 'cyclic:m1,m2,...'"
        )
    kind = kind.strip().lower()
    try:
        if kind == "znstar":
            return ZnStarGroup(_parse_int(argument, spec))
        if kind == "classgroup":
            return ClassGroup(_parse_int(argument, spec))
        if kind == "cyclic":
            parts = [part for part in argument.split(",") if part.strip()]
            return CyclicProductGroup([_parse_int(part, spec) for part in parts])
    except GroupSpecError:
        raise
    except ContractViolationError as e:
        raise GroupSpecError(f"invalid group spec {spec!r}: {e}") from e
    raise GroupSpecError(f"unknown group kind {kind!r} in spec {spec!r}")
