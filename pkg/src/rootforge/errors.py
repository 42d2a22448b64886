"""Exception hierarchy; the CLI maps these to exit code 1."""


class RootforgeError(Exception):
    """Base class for all domain errors."""


class DimensionMismatch(RootforgeError):
    pass


class ZeroVector(RootforgeError):
    pass


class NotAVersor(RootforgeError):
    pass


class NotUnitBivector(RootforgeError):
    pass


class NotUnitRotor(RootforgeError):
    pass


class NonUnitSimples(RootforgeError):
    pass


class UnknownName(RootforgeError):
    pass


class ClosureBudgetExceeded(RootforgeError):
    pass


class EigensolverFailure(RootforgeError):
    pass


class FactorizationFailure(RootforgeError):
    pass


class NotIrreducible(RootforgeError):
    pass


class UnrecognizedType(RootforgeError):
    pass


class AxiomViolation(RootforgeError):
    pass


class ReducedFormDegenerate(RootforgeError):
    pass


class FoldingNotFound(RootforgeError):
    pass


class NoValidShell(RootforgeError):
    pass


class NoFaces(RootforgeError):
    pass


class ValidationFailure(RootforgeError):
    pass


class NotInvariant(RootforgeError):
    pass


class NonIntegralMultiplicity(RootforgeError):
    pass


class IdentityViolation(RootforgeError):
    pass


class NoMatch(RootforgeError):
    pass


class GraphTooLarge(RootforgeError):
    pass


class Disconnected(RootforgeError):
    pass
