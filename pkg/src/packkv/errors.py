"""Exception hierarchy for packkv."""


class PackKVError(Exception):
    """Base class for all packkv errors."""


class DumpFormatError(PackKVError):
    """A KV dump file is structurally invalid."""


class BadMagicError(DumpFormatError):
    """File does not start with the expected magic bytes."""


class TruncatedDumpError(DumpFormatError):
    """File ends before the payload promised by its header."""


class NonFiniteValueError(PackKVError):
    """NaN or infinity encountered where only finite values are accepted."""


class ShapeMismatchError(PackKVError):
    """Tensor or vector dimensions disagree with the declared geometry."""


class WidthOverflowError(PackKVError):
    """A pack's value range needs more bits than the format can describe."""


class MalformedBlockError(PackKVError):
    """An encoded block's header or payload fails validation."""


class InstanceTooLargeError(PackKVError):
    """Exhaustive partition search was asked for an instance it cannot enumerate."""


class StoreFormatError(PackKVError):
    """A serialized compressed store is structurally invalid."""
