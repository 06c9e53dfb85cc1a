"""Exception hierarchy for cylwigner."""


class CylWignerError(Exception):
    """Base class for all cylwigner errors."""


class NonNormalizedState(CylWignerError):
    """Coefficient magnitudes do not sum to one within tolerance."""


class NumericalHermiticityViolation(CylWignerError):
    """Imaginary residue of a bilinear phase-space value exceeds the bound."""


class DuplicateMode(CylWignerError):
    """A mode index appears twice where distinct modes are required."""


class ZeroMode(CylWignerError):
    """A nonzero mode index is required (EPR/Bell constructions)."""


class DegenerateModes(CylWignerError):
    """Two mode indices coincide where a nonzero gap is required."""


class SubspaceMismatch(CylWignerError):
    """Operands live on different (m0, m1, delta) subspaces."""


class InvalidBlochVector(CylWignerError):
    """Bloch vector longer than one beyond tolerance."""


class QuadratureNotConverged(CylWignerError):
    """Successive quadrature refinements disagree beyond tolerance."""


class InvalidGrid(CylWignerError):
    """Malformed phase-space grid specification."""


class StateParseError(CylWignerError):
    """Malformed state description (flags or JSON)."""
