"""Exception types raised across the package."""


class PrimcrystalError(Exception):
    """Base class for every error raised by this package."""


class MismatchedContext(PrimcrystalError, ValueError):
    """Two series with different colour count or truncation were combined."""


class DivergentProduct(PrimcrystalError, ValueError):
    """An infinite product has no finite truncated expansion."""


class InsufficientTruncation(PrimcrystalError, ValueError):
    """A substitution cannot be made exact at the requested order."""


class NotAlphaConvertible(PrimcrystalError, ValueError):
    """A monomial cannot be rewritten in the simple-root basis."""


class IndexOutOfRange(PrimcrystalError, IndexError):
    pass


class UnsupportedRank(PrimcrystalError, ValueError):
    pass


class InconsistentEnergy(PrimcrystalError, RuntimeError):
    """Two propagation paths gave one vertex different energies."""


class Disconnected(PrimcrystalError, RuntimeError):
    pass


class BadPath(PrimcrystalError, ValueError):
    pass


class NotGrounded(PrimcrystalError, ValueError):
    pass


class InvalidSpec(PrimcrystalError, ValueError):
    pass
