"""Exception hierarchy shared by the algebraic modules."""


class LieBosonError(Exception):
    """Base class for verification failures raised by this package."""


class DomainError(LieBosonError, ValueError):
    pass


class TriangleError(LieBosonError, ValueError):
    pass


class NotClosed(LieBosonError):
    """A bracket of two elements escapes their span.

    ``pair`` holds the names of the offending elements, ``residual`` the part
    of the bracket outside the span.
    """

    def __init__(self, pair, residual):
        self.pair = pair
        self.residual = residual
        super().__init__(f"[{pair[0]}, {pair[1]}] leaves the span; residual {residual}")


class LinearlyDependent(LieBosonError):
    pass


class NotReductive(LieBosonError):
    pass


class NotSl2(LieBosonError):
    def __init__(self, relation, residual):
        self.relation = relation
        self.residual = residual
        super().__init__(f"sl2 relation {relation} fails; residual {residual}")


class NotBilinear(LieBosonError):
    pass


class NonIntegerSpectrum(LieBosonError):
    pass


class NotDiagonalizable(LieBosonError):
    pass


class DegenerateForm(LieBosonError):
    pass


class NotNumberConserving(LieBosonError):
    pass


class NotHermitian(LieBosonError):
    pass


class ConvergenceError(LieBosonError):
    pass
