"""Exception types raised across the package."""


class SpinorlabError(Exception):
    """Base class for all spinorlab errors."""


class DegenerateXi(SpinorlabError):
    """The supplied Xi operator is not an involution (Xi^2 != 1)."""


class NullCurrent(SpinorlabError):
    """The current J vanishes where a non-null J is required."""


class AmbiguousScale(SpinorlabError):
    """The spinor norm is below threshold; zero-tests are meaningless."""


class ZeroDecomposition(SpinorlabError):
    """Both plane coordinates vanish (the zero spinor is not decomposable)."""


class InvalidBase(SpinorlabError):
    """The reference spinor fails the regular-base constraints."""


class IntegrabilityViolation(SpinorlabError):
    """Re(a) != Re(b): the derivative condition is not integrable."""


class DegenerateB(SpinorlabError):
    """Im(b) = 0 makes the axial potential diverge."""


class DegenerateRealPart(SpinorlabError):
    """Re(a) = 0: the coefficient formulas divide by Re(a)."""


class ZeroCoefficient(SpinorlabError):
    """A map coefficient vanishes and cannot be inverted."""


class NonInvertible(SpinorlabError):
    """Block-scalar operator with a vanishing scalar has no inverse."""


class NotInPlane(SpinorlabError):
    """Spinor is not proportional, block by block, to the reference spinor."""


class DegenerateBasis(SpinorlabError):
    """A chiral block of the reference spinor vanishes."""


class BasisMismatch(SpinorlabError):
    """Coordinate pairs refer to different bases."""


class DegenerateParameter(SpinorlabError):
    """Homotopy parameter hits a vanishing-coefficient point."""


class InconsistentBilinears(SpinorlabError):
    """A hand-built bilinear record violates the algebraic constraints."""
